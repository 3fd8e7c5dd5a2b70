use serde::{Deserialize, Serialize};

use super::{projection_pl, projection_pr, WeakEntwiningLL, WeakEntwiningRR};
use crate::error::{Error, Result};
use crate::exactlin::{balanced_relators, tensor_all, FieldSpec, LinMap, QuotientSpace, Scalar, SparseVec, Subspace};
use crate::report::Report;
use crate::structures::FinAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Carrier inside `A⊗C`.
    Rr,
    /// Carrier inside `C⊗A`.
    Ll,
}

/// An `A`-coring carried by a subspace of `A⊗C` or `C⊗A`. Every map is in
/// the coordinates of the carrier's RREF basis; the coproduct lands in the
/// coordinates of the balanced quotient `𝔠⊗_A 𝔠`.
#[derive(Clone, Debug)]
pub struct ACoring {
    side: Side,
    base: FinAlgebra,
    carrier: Subspace,
    embed: LinMap,
    coords: LinMap,
    left_action: LinMap,
    right_action: LinMap,
    balanced: QuotientSpace,
    coproduct: LinMap,
    counit: LinMap,
    grouplike: Option<Vec<Scalar>>,
    report: Report,
}

impl ACoring {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn base(&self) -> &FinAlgebra {
        &self.base
    }

    pub fn field(&self) -> FieldSpec {
        self.base.field()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    /// `𝔠 → A⊗C` (or `C⊗A`).
    pub fn embed(&self) -> &LinMap {
        &self.embed
    }

    /// Carrier coordinates of ambient vectors lying in the carrier.
    pub fn coords(&self) -> &LinMap {
        &self.coords
    }

    /// `A⊗𝔠 → 𝔠`
    pub fn left_action(&self) -> &LinMap {
        &self.left_action
    }

    /// `𝔠⊗A → 𝔠`
    pub fn right_action(&self) -> &LinMap {
        &self.right_action
    }

    pub fn balanced(&self) -> &QuotientSpace {
        &self.balanced
    }

    /// `𝔠 → 𝔠⊗_A 𝔠`
    pub fn coproduct(&self) -> &LinMap {
        &self.coproduct
    }

    /// `𝔠 → A`
    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    /// The grouplike element, in carrier coordinates.
    pub fn grouplike(&self) -> Option<&Vec<Scalar>> {
        self.grouplike.as_ref()
    }

    /// The verification report produced at construction.
    pub fn report(&self) -> &Report {
        &self.report
    }

    pub fn id(&self) -> LinMap {
        LinMap::eye(self.field(), self.dim())
    }

    /// `x ↦ x·a` on the carrier, for a fixed `a`.
    pub fn right_by(&self, a: &[Scalar]) -> LinMap {
        let v = LinMap::vector(self.field(), self.base.unit().codomain().clone(), a);
        &self.right_action * &self.id().tensor(&v)
    }

    /// `x ↦ a·x` on the carrier, for a fixed `a`.
    pub fn left_by(&self, a: &[Scalar]) -> LinMap {
        let v = LinMap::vector(self.field(), self.base.unit().codomain().clone(), a);
        &self.left_action * &v.tensor(&self.id())
    }

    /// `A⊗(𝔠⊗_A 𝔠) → 𝔠⊗_A 𝔠` induced by the left action on the first leg.
    pub fn left_action_on_balanced(&self) -> LinMap {
        let q = &self.balanced;
        let lifted = q.proj() * &self.left_action.tensor(&self.id());
        &lifted * &self.base.id().tensor(q.sect())
    }

    /// `(𝔠⊗_A 𝔠)⊗A → 𝔠⊗_A 𝔠` induced by the right action on the second leg.
    pub fn right_action_on_balanced(&self) -> LinMap {
        let q = &self.balanced;
        let lifted = q.proj() * &self.id().tensor(&self.right_action);
        &lifted * &q.sect().tensor(&self.base.id())
    }

    /// The element `Δ(x)` lifted to `𝔠⊗𝔠` using the canonical representatives.
    pub fn coproduct_lift(&self) -> LinMap {
        self.balanced.sect() * &self.coproduct
    }

    /// Attaches a grouplike given in ambient coordinates, after checking
    /// `Δ(g) = g⊗_A g` and `ε(g) = 1`.
    pub fn with_grouplike(mut self, g_ambient: &[Scalar]) -> Result<Self> {
        let mut r = Report::new();
        let inside = self.carrier.contains(g_ambient);
        r.flag("grouplike.in-carrier", inside);
        if inside {
            let g = self.coords.apply(g_ambient);
            let gv = LinMap::vector(self.field(), self.id().codomain().clone(), &g);
            let gg = self.balanced.proj() * &gv.tensor(&gv);
            r.law("grouplike.coproduct", &(&self.coproduct * &gv), &gg);
            r.law("grouplike.counit", &(&self.counit * &gv), self.base.unit());
            self.grouplike = Some(g);
        }
        self.report.absorb("", &r);
        match r.first_failure() {
            None => Ok(self),
            Some(c) => Err(Error::Invalid { what: "grouplike".into(), law: c.name.clone(), report: Box::new(r) }),
        }
    }
}

/// The quotient `𝔠⊗_A 𝔠` of the coring's carrier.
pub fn balanced_tensor(x: &ACoring) -> QuotientSpace {
    x.balanced.clone()
}

fn action_pairs(base: &FinAlgebra, right: &LinMap, left: &LinMap, n: usize) -> Vec<(LinMap, LinMap)> {
    let f = base.field();
    let id = LinMap::eye(f, n);
    (0..base.dim())
        .map(|a| {
            let e = LinMap::basis_vector(f, base.unit().codomain().clone(), a);
            (right * &id.tensor(&e), left * &e.tensor(&id))
        })
        .collect()
}

fn balanced_quotient(base: &FinAlgebra, right: &LinMap, left: &LinMap, n: usize, factors: usize) -> QuotientSpace {
    let pairs = action_pairs(base, right, left, n);
    let dims = vec![n; factors];
    let mut rel: Vec<SparseVec> = Vec::new();
    for slot in 0..factors - 1 {
        rel.extend(balanced_relators(base.field(), &dims, slot, &pairs));
    }
    QuotientSpace::from_vectors(base.field(), crate::exactlin::Shape::new(dims), &rel)
}

/// Everything needed to assemble and verify a coring on `Im p`.
struct Draft {
    side: Side,
    base: FinAlgebra,
    proj: LinMap,
    left_amb: LinMap,
    right_amb: LinMap,
    /// `amb → 𝔠⊗𝔠` whose composite with the quotient is the coproduct of `p(y)`.
    lift: LinMap,
    /// `𝔠⊗𝔠 → A⊗C⊗C` (or `C⊗C⊗A`), identifying `𝔠⊗_A 𝔠`.
    phi: LinMap,
    /// What `phi ∘ Δ` must equal, as a map on the ambient space.
    phi_target: LinMap,
    counit_amb: LinMap,
}

fn finish(d: Draft) -> Result<ACoring> {
    let f = d.base.field();
    let mut r = Report::new();
    let carrier = d.proj.image();
    let n = carrier.dim();
    let embed = carrier.embedding();
    let coords = carrier.coordinates();
    let ia = d.base.id();
    let ic = LinMap::eye(f, n);

    let left_amb = &d.left_amb * &ia.tensor(&embed);
    r.law("left.closed", &(&d.proj * &left_amb), &left_amb);
    let right_amb = &d.right_amb * &embed.tensor(&ia);
    r.law("right.closed", &(&d.proj * &right_amb), &right_amb);
    let left = &coords * &left_amb;
    let right = &coords * &right_amb;

    let (mu, u) = (d.base.mul(), d.base.unit());
    r.law("left.assoc", &(&left * &mu.tensor(&ic)), &(&left * &ia.tensor(&left)));
    r.law("left.unit", &(&left * &u.tensor(&ic)), &ic);
    r.law("right.assoc", &(&right * &ic.tensor(mu)), &(&right * &right.tensor(&ia)));
    r.law("right.unit", &(&right * &ic.tensor(u)), &ic);
    r.law("bimodule", &(&right * &left.tensor(&ia)), &(&left * &ia.tensor(&right)));

    let q = balanced_quotient(&d.base, &right, &left, n, 2);
    r.dim("carrier", n);
    r.dim("balanced", q.dim());
    let lifted = q.proj() * &d.lift;
    r.law("coproduct.descends", &(&lifted * &d.proj), &lifted);
    let coproduct = &lifted * &embed;
    r.flag("identification.descends", q.kills(&d.phi));
    r.law("coproduct.identification", &(&(&d.phi * q.sect()) * &coproduct), &(&d.phi_target * &embed));
    let counit = &d.counit_amb * &embed;

    r.law("counit.left-linear", &(&counit * &left), &(mu * &ia.tensor(&counit)));
    r.law("counit.right-linear", &(&counit * &right), &(mu * &counit.tensor(&ia)));

    let coring = ACoring {
        side: d.side,
        base: d.base.clone(),
        carrier,
        embed,
        coords,
        left_action: left.clone(),
        right_action: right.clone(),
        balanced: q.clone(),
        coproduct: coproduct.clone(),
        counit: counit.clone(),
        grouplike: None,
        report: Report::new(),
    };

    let left_q = q.proj() * &left.tensor(&ic);
    let right_q = q.proj() * &ic.tensor(&right);
    let inn = LinMap::eye(f, n * n);
    let basis = |a: usize| LinMap::basis_vector(f, u.codomain().clone(), a);
    let left_ok = (0..d.base.dim()).all(|a| q.kills(&(&left_q * &basis(a).tensor(&inn))));
    let right_ok = (0..d.base.dim()).all(|a| q.kills(&(&right_q * &inn.tensor(&basis(a)))));
    r.flag("balanced.left-action-descends", left_ok);
    r.flag("balanced.right-action-descends", right_ok);
    r.law("coproduct.left-linear", &(&coproduct * &left), &(&coring.left_action_on_balanced() * &ia.tensor(&coproduct)));
    r.law("coproduct.right-linear", &(&coproduct * &right), &(&coring.right_action_on_balanced() * &coproduct.tensor(&ia)));

    let eps_left = &left * &counit.tensor(&ic);
    let eps_right = &right * &ic.tensor(&counit);
    r.flag("counit.left-descends", q.kills(&eps_left));
    r.flag("counit.right-descends", q.kills(&eps_right));
    let delta_lift = q.sect() * &coproduct;
    r.law("counit.left", &(&eps_left * &delta_lift), &ic);
    r.law("counit.right", &(&eps_right * &delta_lift), &ic);

    let t = balanced_quotient(&d.base, &right, &left, n, 3);
    r.dim("balanced3", t.dim());
    let d1 = t.proj() * &delta_lift.tensor(&ic);
    let d2 = t.proj() * &ic.tensor(&delta_lift);
    r.flag("coassoc.left-descends", q.kills(&d1));
    r.flag("coassoc.right-descends", q.kills(&d2));
    r.law("coassoc", &(&d1 * &delta_lift), &(&d2 * &delta_lift));

    let report = r.into_sentinel()?;
    Ok(ACoring { report, ..coring })
}

/// The coring `Im p_R ⊆ A⊗C` with all coring laws verified.
pub fn build_coring_rr(we: &WeakEntwiningRR) -> Result<ACoring> {
    let p = projection_pr(we)?;
    let (ia, ic) = (we.a.id(), we.c.id());
    let carrier = p.image();
    let coords = carrier.coordinates();
    let cp = &coords * &p;
    let cp_unit = &cp * &we.a.unit().tensor(&ic);
    let right_amb = &we.a.mul().tensor(&ic) * &ia.tensor(&we.psi);
    let embed = carrier.embedding();
    let phi = &right_amb.tensor(&ic) * &embed.tensor(&embed);
    finish(Draft {
        side: Side::Rr,
        base: we.a.clone(),
        proj: p.clone(),
        left_amb: we.a.mul().tensor(&ic),
        right_amb,
        lift: &cp.tensor(&cp_unit) * &ia.tensor(we.c.comul()),
        phi,
        phi_target: ia.tensor(we.c.comul()),
        counit_amb: ia.tensor(we.c.counit()),
    })
}

/// The coring `Im p_L ⊆ C⊗A` with all coring laws verified.
pub fn build_coring_ll(we: &WeakEntwiningLL) -> Result<ACoring> {
    let p = projection_pl(we)?;
    let (ia, ic) = (we.a.id(), we.c.id());
    let carrier = p.image();
    let coords = carrier.coordinates();
    let cp = &coords * &p;
    let cp_unit = &cp * &ic.tensor(we.a.unit());
    let left_amb = &ic.tensor(we.a.mul()) * &we.psi.tensor(&ia);
    let embed = carrier.embedding();
    let phi = &tensor_all(&[&ic, &left_amb]) * &embed.tensor(&embed);
    finish(Draft {
        side: Side::Ll,
        base: we.a.clone(),
        proj: p.clone(),
        left_amb,
        right_amb: ic.tensor(we.a.mul()),
        lift: &cp_unit.tensor(&cp) * &we.c.comul().tensor(&ia),
        phi,
        phi_target: we.c.comul().tensor(&ia),
        counit_amb: we.c.counit().tensor(&ia),
    })
}
