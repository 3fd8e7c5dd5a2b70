//! Coinvariants, canonical maps, cointegrals, colinear sections and the
//! Galois pipelines built on them.

mod cointegral;
mod pipelines;
mod section;

pub use cointegral::{check_cointegral, comodule_projectivity, find_cointegral, Cointegral, Projectivity};
pub use pipelines::{
    build_kappa, check_coaction_identity, check_coinv_tensor_condition, check_colinear_correspondence, colinear_to_hat,
    coring_colinearity, coseparable_pipeline, ell_map, hat_to_colinear, kreimer_takeuchi_check, left_coaction_on_coring,
    projective_pipeline, split_multiplication_left, split_multiplication_right, PipelineReport,
};
pub use section::{canonical_entwining_from_section, check_split_section, find_split_section_sigma};

use crate::error::{Error, Result};
use crate::exactlin::{balanced_relators, LinMap, QuotientSpace, Scalar, Shape, Subspace};
use crate::report::Report;
use crate::structures::{FinAlgebra, RightComodule};
use crate::weak_entwining::{
    build_coring_rr, check_weak_entwined_module_rr, ACoring, InvertibleWeakEntwining, WeakEntwiningRR,
};
use crate::weak_hopf::{build_invertible_from_weak_hopf, WeakHopf};

/// An algebra `A` that is a weak entwined module over `(A, C, ψ_R)` through
/// its product and `ρ`, with the coring `Im p_R`, its grouplike `ρ(1)`,
/// the coinvariants `B` and `A⊗_B A`.
#[derive(Clone, Debug)]
pub struct GaloisContext {
    pub we: WeakEntwiningRR,
    pub inv: Option<InvertibleWeakEntwining>,
    pub rho: LinMap,
    pub coring: ACoring,
    pub b: Subspace,
    pub balanced_aa: QuotientSpace,
}

/// Whether `A` is a weak entwined module with product and `ρ`.
pub fn entwined_module_report(we: &WeakEntwiningRR, rho: &LinMap) -> Report {
    match RightComodule::new(we.c.clone(), rho.clone()) {
        Ok(m) => check_weak_entwined_module_rr(we, &m, we.a.mul()),
        Err(_) => {
            let mut r = Report::new();
            r.flag("shape", false);
            r
        }
    }
}

impl GaloisContext {
    pub fn new(we: WeakEntwiningRR, rho: LinMap) -> Result<Self> {
        entwined_module_report(&we, &rho).into_invalid("weak entwined module")?;
        let g = (&rho * we.a.unit()).column(0);
        let coring = build_coring_rr(&we)?.with_grouplike(&g)?;
        let b = grouplike_kernel(&we.a, &rho, &coring);
        let mut r = Report::new();
        r.absorb("coinvariants", &unital_subalgebra_report(&we.a, &b));
        r.into_sentinel()?;
        let balanced_aa = balanced_over(&we.a, &b);
        Ok(GaloisContext { we, inv: None, rho, coring, b, balanced_aa })
    }

    pub fn with_inverse(inv: InvertibleWeakEntwining, rho: LinMap) -> Result<Self> {
        let mut ctx = GaloisContext::new(inv.rr.clone(), rho)?;
        ctx.inv = Some(inv);
        Ok(ctx)
    }

    /// `H` over itself: `ρ = Δ`, `C = H` acting by the product.
    pub fn regular(h: &WeakHopf) -> Result<Self> {
        let rho = h.coalg().comul().clone();
        let inv = build_invertible_from_weak_hopf(h, h.alg(), &rho, h.coalg(), h.alg().mul())?;
        GaloisContext::with_inverse(inv, rho)
    }

    pub fn a(&self) -> &FinAlgebra {
        &self.we.a
    }

    /// `ρ(1)` in carrier coordinates.
    pub fn grouplike(&self) -> &Vec<Scalar> {
        self.coring.grouplike().expect("context coring carries its grouplike")
    }

    /// `ρ(1) ∈ A⊗C`.
    pub fn grouplike_ambient(&self) -> Vec<Scalar> {
        (&self.rho * self.we.a.unit()).column(0)
    }

    pub(crate) fn inverse(&self) -> Result<&InvertibleWeakEntwining> {
        self.inv.as_ref().ok_or_else(|| {
            let mut r = Report::new();
            r.flag("invertible", false);
            Error::HypothesisFailed { name: "invertible".into(), report: Box::new(r) }
        })
    }
}

/// `{b : ρ(ba) = bρ(a) for all a}`.
pub fn coinvariants_ambient(a: &FinAlgebra, rho: &LinMap) -> Subspace {
    let f = a.field();
    let n = a.dim();
    let ic = LinMap::eye(f, rho.rows() / n);
    let conds: Vec<LinMap> = (0..n)
        .map(|i| {
            let e = a.basis_vector(i);
            let lhs = rho * &a.right_mul(&e);
            let re = LinMap::vector(f, Shape::flat(rho.rows()), &rho.column(i));
            let rhs = &a.mul().tensor(&ic) * &a.id().tensor(&re);
            &lhs - &rhs
        })
        .collect();
    LinMap::stack(f, Shape::flat(n), &conds).kernel()
}

/// `{b : b·g = g·b}` for the grouplike `g` of the coring.
pub fn coinvariants_grouplike(ctx: &GaloisContext) -> Subspace {
    grouplike_kernel(&ctx.we.a, &ctx.rho, &ctx.coring)
}

fn grouplike_kernel(a: &FinAlgebra, rho: &LinMap, coring: &ACoring) -> Subspace {
    let f = a.field();
    let g = coring.grouplike().expect("grouplike attached");
    let gv = LinMap::vector(f, Shape::flat(coring.dim()), g);
    let bg = coring.embed() * &(coring.left_action() * &a.id().tensor(&gv));
    (rho - &bg).kernel()
}

/// `1 ∈ S` and `S·S ⊆ S`.
pub fn unital_subalgebra_report(a: &FinAlgebra, s: &Subspace) -> Report {
    let mut r = Report::new();
    r.flag("contains-one", s.contains(&a.one()));
    let basis = s.basis();
    let closed = basis.iter().all(|x| basis.iter().all(|y| s.contains(&a.product(x, y))));
    r.flag("closed", closed);
    r.dim("dim", s.dim());
    r
}

/// `A⊗_B A` for a subalgebra `B`.
pub fn balanced_over(a: &FinAlgebra, b: &Subspace) -> QuotientSpace {
    let pairs: Vec<(LinMap, LinMap)> = b.basis().iter().map(|x| (a.right_mul(x), a.left_mul(x))).collect();
    let rel = balanced_relators(a.field(), &[a.dim(), a.dim()], 0, &pairs);
    QuotientSpace::from_vectors(a.field(), Shape::new(vec![a.dim(), a.dim()]), &rel)
}

/// `U⊗V` inside the tensor product of the ambient spaces.
pub fn tensor_subspace(u: &Subspace, v: &Subspace) -> Subspace {
    u.embedding().tensor(&v.embedding()).image()
}

/// `a⊗a' ↦ a·ρ(a')` into `A⊗C`.
pub fn tilde_can_ambient(a: &FinAlgebra, rho: &LinMap) -> LinMap {
    let ic = LinMap::eye(a.field(), rho.rows() / a.dim());
    let m = &a.mul().tensor(&ic) * &a.id().tensor(rho);
    m.reshaped(Shape::new(vec![a.dim(), a.dim()]), rho.codomain().clone())
}

/// `a⊗a' ↦ a·ρ(a')` in carrier coordinates.
pub fn canonical_map_tilde(ctx: &GaloisContext) -> LinMap {
    ctx.coring.coords() * &tilde_can_ambient(&ctx.we.a, &ctx.rho)
}

#[derive(Clone, Debug)]
pub struct GaloisVerdict {
    pub tilde_can_surjective: bool,
    pub can_well_defined: bool,
    pub can_bijective: bool,
    /// `A⊗_B A → 𝔠` when well defined.
    pub can: Option<LinMap>,
    pub report: Report,
}

pub fn canonical_map(ctx: &GaloisContext) -> GaloisVerdict {
    let mut r = Report::new();
    let amb = tilde_can_ambient(&ctx.we.a, &ctx.rho);
    let in_carrier = (0..amb.cols()).all(|c| ctx.coring.carrier().contains(&amb.column(c)));
    r.flag("tilde-can.in-carrier", in_carrier);
    let tilde = ctx.coring.coords() * &amb;
    let q = &ctx.balanced_aa;
    r.dim("A", ctx.we.a.dim());
    r.dim("B", ctx.b.dim());
    r.dim("carrier", ctx.coring.dim());
    r.dim("A⊗_B A", q.dim());
    r.dim("rank(tilde-can)", tilde.rank());
    let tilde_can_surjective = r.flag("tilde-can.surjective", tilde.is_surjective());
    let can_well_defined = r.flag("can.well-defined", q.kills(&tilde));
    let can = can_well_defined.then(|| &tilde * q.sect());
    let can_bijective = r.flag("can.bijective", can.as_ref().is_some_and(LinMap::is_bijective));
    GaloisVerdict { tilde_can_surjective, can_well_defined, can_bijective, can, report: r }
}

pub(crate) fn hypothesis(r: Report, name: &str) -> Result<Report> {
    if r.passed() {
        Ok(r)
    } else {
        Err(Error::HypothesisFailed { name: name.into(), report: Box::new(r) })
    }
}
