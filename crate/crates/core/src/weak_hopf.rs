//! Weak bialgebras, weak Hopf algebras and the entwinings they induce.

use crate::error::{Error, Result};
use crate::exactlin::{tensor_all, FieldSpec, LinMap};
use crate::report::Report;
use crate::structures::{check_algebra, check_coalgebra, check_comodule_algebra, check_module_coalgebra, perm, FinAlgebra, FinCoalgebra};
use crate::weak_entwining::{build_coring_rr, check_invertible, check_rr, ACoring, InvertibleWeakEntwining, WeakEntwiningLL, WeakEntwiningRR};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMaps {
    pub pi_l: LinMap,
    pub pi_r: LinMap,
    pub pibar_l: LinMap,
    pub pibar_r: LinMap,
}

#[derive(Clone, Debug)]
pub struct WeakBialgebra {
    pub alg: FinAlgebra,
    pub coalg: FinCoalgebra,
}

impl WeakBialgebra {
    pub fn unchecked(alg: FinAlgebra, coalg: FinCoalgebra) -> Result<Self> {
        if alg.dim() != coalg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {}, coalgebra {}",
                alg.dim(),
                coalg.dim()
            )));
        }
        Ok(WeakBialgebra { alg, coalg })
    }

    pub fn new(alg: FinAlgebra, coalg: FinCoalgebra) -> Result<Self> {
        let h = WeakBialgebra::unchecked(alg, coalg)?;
        check_weak_bialgebra(&h).into_invalid("weak bialgebra")?;
        Ok(h)
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn id(&self) -> LinMap {
        self.alg.id()
    }

    /// `Δ(1)` as a map `k → H⊗H`.
    pub fn delta_one(&self) -> LinMap {
        self.coalg.comul() * self.alg.unit()
    }

    /// Whether `Δ(1) = 1⊗1`.
    pub fn is_strict(&self) -> bool {
        self.delta_one() == self.alg.unit().tensor(self.alg.unit())
    }

    /// `ε∘μ : H⊗H → k`
    pub fn eps_mu(&self) -> LinMap {
        self.coalg.counit() * self.alg.mul()
    }

    /// The four projections from their defining formulas, without checks.
    pub fn pi_maps_raw(&self) -> PiMaps {
        let f = self.field();
        let n = self.dim();
        let d1 = self.delta_one();
        let id = self.id();
        let em_id = self.eps_mu().tensor(&id);
        let left = d1.tensor(&id); // 1₁ ⊗ 1₂ ⊗ h
        let right = id.tensor(&d1); // h ⊗ 1₁ ⊗ 1₂
        let p = |order: &[usize]| perm(f, &[n, n, n], order);
        PiMaps {
            pi_l: &(&em_id * &p(&[0, 2, 1])) * &left,
            pibar_l: &(&em_id * &p(&[1, 2, 0])) * &left,
            pi_r: &(&em_id * &p(&[0, 2, 1])) * &right,
            pibar_r: &em_id * &right,
        }
    }

    /// `(H, Δ)` as a right comodule algebra over itself.
    pub fn regular_coaction(&self) -> LinMap {
        self.coalg.comul().clone()
    }

    /// `(H, μ)` as a right module coalgebra over itself.
    pub fn regular_action(&self) -> LinMap {
        self.alg.mul().clone()
    }
}

pub fn check_weak_bialgebra(h: &WeakBialgebra) -> Report {
    let mut r = Report::new();
    r.absorb("algebra", &check_algebra(&h.alg));
    r.absorb("coalgebra", &check_coalgebra(&h.coalg));
    let f = h.field();
    let n = h.dim();
    let (mu, d, id) = (h.alg.mul(), h.coalg.comul(), h.id());
    let p0213 = perm(f, &[n, n, n, n], &[0, 2, 1, 3]);
    r.law("mult", &(d * mu), &(&(&mu.tensor(mu) * &p0213) * &d.tensor(d)));

    let d1 = h.delta_one();
    let delta2_one = &d.tensor(&id) * &d1;
    let hmh = tensor_all(&[&id, mu, &id]);
    let d1d1 = d1.tensor(&d1);
    r.law("delta2.one.a", &delta2_one, &(&hmh * &d1d1));
    r.law("delta2.one.b", &delta2_one, &(&(&hmh * &p0213) * &d1d1));

    let em = h.eps_mu();
    let lhs = &em * &mu.tensor(&id);
    let em2 = em.tensor(&em);
    let hdh = tensor_all(&[&id, d, &id]);
    r.law("eps.a", &lhs, &(&em2 * &hdh));
    r.law("eps.b", &lhs, &(&(&em2 * &p0213) * &hdh));
    r.dim("dim", n);
    r
}

/// The four projections, with idempotence verified.
pub fn pi_maps(h: &WeakBialgebra) -> Result<PiMaps> {
    let pis = h.pi_maps_raw();
    let mut r = Report::new();
    for (name, p) in [("pi_l", &pis.pi_l), ("pi_r", &pis.pi_r), ("pibar_l", &pis.pibar_l), ("pibar_r", &pis.pibar_r)] {
        r.law(format!("{name}.idempotent"), &(p * p), p);
    }
    r.into_sentinel()?;
    Ok(pis)
}

#[derive(Clone, Debug)]
pub struct WeakHopf {
    pub wb: WeakBialgebra,
    pub antipode: LinMap,
    pub antipode_inv: Option<LinMap>,
}

impl WeakHopf {
    /// Checks sizes and computes `S⁻¹` when it exists.
    pub fn unchecked(wb: WeakBialgebra, antipode: LinMap) -> Result<Self> {
        let n = wb.dim();
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch(format!("antipode must be {n}x{n}")));
        }
        let antipode_inv = antipode.inverse().ok();
        Ok(WeakHopf { wb, antipode, antipode_inv })
    }

    pub fn new(wb: WeakBialgebra, antipode: LinMap) -> Result<Self> {
        let h = WeakHopf::unchecked(wb, antipode)?;
        check_weak_hopf(&h).into_invalid("weak Hopf algebra")?;
        Ok(h)
    }

    pub fn field(&self) -> FieldSpec {
        self.wb.field()
    }

    pub fn dim(&self) -> usize {
        self.wb.dim()
    }

    pub fn alg(&self) -> &FinAlgebra {
        &self.wb.alg
    }

    pub fn coalg(&self) -> &FinCoalgebra {
        &self.wb.coalg
    }
}

pub fn check_weak_hopf(h: &WeakHopf) -> Report {
    let mut r = Report::new();
    r.absorb("", &check_weak_bialgebra(&h.wb));
    let pis = h.wb.pi_maps_raw();
    let (mu, d, s, id) = (h.alg().mul(), h.coalg().comul(), &h.antipode, h.wb.id());
    r.law("antipode.left", &(&(mu * &id.tensor(s)) * d), &pis.pi_l);
    r.law("antipode.right", &(&(mu * &s.tensor(&id)) * d), &pis.pi_r);
    let d2 = h.coalg().comul2();
    let sss = &(&(mu * &mu.tensor(&id)) * &tensor_all(&[s, &id, s])) * &d2;
    r.law("antipode.sss", &sss, s);
    if let Some(inv) = &h.antipode_inv {
        r.law("antipode.inverse", &(s * inv), &id);
    }
    r
}

/// Consequences of the weak Hopf axioms, each a matrix identity.
pub fn pi_identities(h: &WeakHopf) -> Report {
    let mut r = Report::new();
    let f = h.field();
    let n = h.dim();
    let p = h.wb.pi_maps_raw();
    let s = &h.antipode;
    for (name, m) in [("pi_l", &p.pi_l), ("pi_r", &p.pi_r), ("pibar_l", &p.pibar_l), ("pibar_r", &p.pibar_r)] {
        r.law(format!("{name}.idempotent"), &(m * m), m);
    }
    r.law("pi.s.left", &p.pi_l, &(&p.pibar_r * s));
    r.law("pi.s.right", &p.pi_r, &(&p.pibar_l * s));
    r.law("s.pi.left", &(s * &p.pi_l), &(&p.pi_r * s));
    r.law("s.pi.right", &(s * &p.pi_r), &(&p.pi_l * s));
    if let Some(si) = &h.antipode_inv {
        r.law("s.pbar.a", &(si * &p.pi_r), &p.pibar_r);
        r.law("s.pbar.b", &(&p.pi_l * si), &p.pibar_r);
    }
    let (mu, d) = (h.alg().mul(), h.coalg().comul());
    let tw = LinMap::swap(f, n, n);
    r.law("anti-algebra", &(s * mu), &(&(mu * &tw) * &s.tensor(s)));
    r.law("anti-coalgebra", &(d * s), &(&(&tw * &s.tensor(s)) * d));
    r
}

pub fn antipode_inverse(h: &WeakHopf) -> Result<LinMap> {
    h.antipode.inverse()
}

/// `ψ_R(c⊗a) = Σ a₀ ⊗ c·a₁` for a comodule algebra `ρ : A → A⊗H` and a
/// module coalgebra `act : C⊗H → C`.
pub fn doi_psi_r(h: &WeakBialgebra, a: &FinAlgebra, rho: &LinMap, c: &FinCoalgebra, act: &LinMap) -> LinMap {
    let f = h.field();
    let (na, nc, nh) = (a.dim(), c.dim(), h.dim());
    let t = perm(f, &[nc, na, nh], &[1, 0, 2]);
    &(&a.id().tensor(act) * &t) * &c.id().tensor(rho)
}

/// `ψ_L(a⊗c) = Σ c·S⁻¹(a₁) ⊗ a₀`.
pub fn doi_psi_l(h: &WeakHopf, s_inv: &LinMap, a: &FinAlgebra, rho: &LinMap, c: &FinCoalgebra, act: &LinMap) -> LinMap {
    let f = h.field();
    let (na, nc, nh) = (a.dim(), c.dim(), h.dim());
    let t = perm(f, &[na, nh, nc], &[2, 1, 0]);
    let act_s = act * &c.id().tensor(s_inv);
    &(&act_s.tensor(&a.id()) * &t) * &rho.tensor(&c.id())
}

fn require(report: Report, what: &str) -> Result<()> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::Invalid { what: what.into(), law: c.name.clone(), report: Box::new(report) }),
    }
}

pub fn doi_entwining_rr(h: &WeakBialgebra, a: &FinAlgebra, rho: &LinMap, c: &FinCoalgebra, act: &LinMap) -> Result<WeakEntwiningRR> {
    require(check_comodule_algebra(h, a, rho), "comodule algebra")?;
    require(check_module_coalgebra(h, c, act), "module coalgebra")?;
    let psi = doi_psi_r(h, a, rho, c, act);
    check_rr(a, c, &psi).into_sentinel()?;
    WeakEntwiningRR::unchecked(a.clone(), c.clone(), psi)
}

pub fn build_invertible_from_weak_hopf(
    h: &WeakHopf,
    a: &FinAlgebra,
    rho: &LinMap,
    c: &FinCoalgebra,
    act: &LinMap,
) -> Result<InvertibleWeakEntwining> {
    let Some(s_inv) = &h.antipode_inv else {
        let mut r = Report::new();
        r.flag("antipode.bijective", false);
        return Err(Error::HypothesisFailed { name: "antipode.bijective".into(), report: Box::new(r) });
    };
    let rr = doi_entwining_rr(&h.wb, a, rho, c, act)?;
    let psi_l = doi_psi_l(h, s_inv, a, rho, c, act);
    let ll = WeakEntwiningLL::unchecked(a.clone(), c.clone(), psi_l)?;
    check_invertible(&rr, &ll).into_sentinel()?;
    Ok(InvertibleWeakEntwining { rr, ll })
}

/// The coring `Im p_R ⊆ A⊗H` of the Doi–Koppinen entwining with `C = H`,
/// carrying the grouplike `ρ(1)`.
pub fn build_e_coring(h: &WeakBialgebra, a: &FinAlgebra, rho: &LinMap) -> Result<ACoring> {
    let we = doi_entwining_rr(h, a, rho, &h.coalg, h.alg.mul())?;
    let coring = build_coring_rr(&we)?;
    let g = (rho * a.unit()).column(0);
    coring.with_grouplike(&g)
}
