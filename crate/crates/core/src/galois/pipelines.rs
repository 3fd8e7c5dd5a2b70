use std::collections::BTreeMap;

use super::{
    canonical_map, canonical_map_tilde, coinvariants_ambient, entwined_module_report, find_cointegral, hypothesis,
    tensor_subspace, comodule_projectivity, GaloisContext, GaloisVerdict,
};
use crate::error::{Error, Result};
use crate::exactlin::{solve_constrained_map, tensor_all, LinExpr, LinMap, Shape, Subspace};
use crate::report::Report;
use crate::structures::FinAlgebra;
use crate::weak_entwining::{left_coaction_from_right, projection_pl_raw, InvertibleWeakEntwining};
use crate::weak_hopf::{build_invertible_from_weak_hopf, WeakHopf};

/// Outcome of a pipeline: its checks, the direct verdict on `can_A` and
/// the maps it constructed.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub report: Report,
    pub verdict: GaloisVerdict,
    pub maps: BTreeMap<String, LinMap>,
}

fn left_coaction(ctx: &GaloisContext) -> Result<LinMap> {
    Ok(left_coaction_from_right(ctx.inverse()?, &ctx.rho)?.coaction)
}

/// `ℓ(c) = Σ 1_α ⊗ c^α`, in carrier coordinates.
pub fn ell_map(ctx: &GaloisContext) -> LinMap {
    ctx.coring.coords() * &ctx.we.psi_unit()
}

/// `f(Σ a1_α ⊗ c^α) = Σ a1_α f̂(c^α)` on the carrier.
pub fn hat_to_colinear(ctx: &GaloisContext, f_hat: &LinMap) -> LinMap {
    let a = &ctx.we.a;
    &(&a.mul().tensor(&a.id()) * &a.id().tensor(f_hat)) * ctx.coring.embed()
}

/// `f̂(c) = f(Σ 1_α ⊗ c^α)`.
pub fn colinear_to_hat(ctx: &GaloisContext, f: &LinMap) -> LinMap {
    f * &ell_map(ctx)
}

/// Left `𝔠`-colinearity of `f : 𝔠 → A⊗A`, with `A⊗A` coacted on by
/// `a⊗a' ↦ a·g ⊗_A a'` and `𝔠⊗_A (A⊗A)` identified with `𝔠⊗A`.
pub fn coring_colinearity(ctx: &GaloisContext, f: &LinMap) -> Report {
    let mut r = Report::new();
    let cr = &ctx.coring;
    let a = &ctx.we.a;
    let q = cr.balanced();
    let lift = &cr.right_action().tensor(&a.id()) * &cr.id().tensor(f);
    r.flag("colinear.descends", q.kills(&lift));
    let lhs = &(&lift * q.sect()) * cr.coproduct();
    let gv = LinMap::vector(a.field(), Shape::flat(cr.dim()), ctx.grouplike());
    let times_g = cr.left_action() * &a.id().tensor(&gv);
    let rhs = &times_g.tensor(&a.id()) * f;
    r.law("colinear", &lhs, &rhs);
    r
}

/// The correspondence between maps `f̂ : C → A⊗A` satisfying the
/// colinearity condition against `p_L` and left `𝔠`-colinear maps `𝔠 → A⊗A`.
pub fn check_colinear_correspondence(ctx: &GaloisContext, f_hat: &LinMap) -> Result<Report> {
    let inv = ctx.inverse()?;
    let (a, c) = (&ctx.we.a, &ctx.we.c);
    let lam = left_coaction(ctx)?;
    let ia = a.id();
    let pl = projection_pl_raw(&inv.ll);
    let mut cond = Report::new();
    cond.law(
        "colin.hat",
        &(&lam.tensor(&ia) * f_hat),
        &(&(&pl.tensor(&ia) * &c.id().tensor(f_hat)) * c.comul()),
    );
    if let Some(ch) = cond.first_failure() {
        return Err(Error::Invalid { what: "f_hat".into(), law: ch.name.clone(), report: Box::new(cond) });
    }
    let mut r = cond;
    let f = hat_to_colinear(ctx, f_hat);
    r.absorb("forward", &coring_colinearity(ctx, &f));
    let back = colinear_to_hat(ctx, &f);
    r.law("round-trip.hat", &back, f_hat);
    r.law("round-trip.colinear", &hat_to_colinear(ctx, &back), &f);
    r.into_sentinel()
}

/// `(C⊗μ⊗C)(ᴬρ⊗ρ)τ̂ = (C⊗ψ_R)(C⊗C⊗1)Δ_C` for a section `τ` of tilde-can,
/// `τ̂ = τ∘ℓ`.
pub fn check_coaction_identity(ctx: &GaloisContext, tau: &LinMap) -> Result<Report> {
    let (a, c) = (&ctx.we.a, &ctx.we.c);
    let lam = left_coaction(ctx)?;
    let ic = c.id();
    let tau_hat = tau * &ell_map(ctx);
    let lhs = &(&tensor_all(&[&ic, a.mul(), &ic]) * &lam.tensor(&ctx.rho)) * &tau_hat;
    let rhs = &(&ic.tensor(&ctx.we.psi) * &tensor_all(&[&ic, &ic, a.unit()])) * c.comul();
    let mut r = Report::new();
    r.law("coaction-identity", &lhs, &rhs);
    r.into_sentinel()
}

#[derive(Clone, Debug)]
pub struct Kappa {
    /// `κ̂ : C → A⊗A`
    pub hat: LinMap,
    /// `κ : 𝔠 → A⊗A`
    pub kappa: LinMap,
    pub report: Report,
}

/// The left `𝔠`-colinear splitting of tilde-can built from a cointegral
/// and any `k`-linear section `τ`.
pub fn build_kappa(ctx: &GaloisContext, delta: &LinMap, tau: &LinMap) -> Result<Kappa> {
    let (a, c) = (&ctx.we.a, &ctx.we.c);
    let (ia, ic) = (a.id(), c.id());
    let lam = left_coaction(ctx)?;
    let mut r = Report::new();
    let tilde = canonical_map_tilde(ctx);
    r.law("tau.section", &(&tilde * tau), &ctx.coring.id());
    let tau_hat = tau * &ell_map(ctx);
    let hat = &(&(&tensor_all(&[delta, &ia, &ia]) * &tensor_all(&[&ic, &lam, &ia])) * &ic.tensor(&tau_hat)) * c.comul();
    r.law("kappa_hat.colinear", &(&lam.tensor(&ia) * &hat), &(&ic.tensor(&hat) * c.comul()));
    let kappa = hat_to_colinear(ctx, &hat);
    r.absorb("kappa", &coring_colinearity(ctx, &kappa));
    r.law("kappa.splits", &(&tilde * &kappa), &ctx.coring.id());
    let report = r.into_sentinel()?;
    Ok(Kappa { hat, kappa, report })
}

/// `(A⊗A)^{coC}` as `{Σ a_i⊗b_i : Σ a_i⊗gb_i = Σ a_i⊗b_ig}` compared with `A⊗B`.
pub fn check_coinv_tensor_condition(ctx: &GaloisContext) -> Report {
    let a = &ctx.we.a;
    let f = a.field();
    let mut r = Report::new();
    let g = LinMap::vector(f, ctx.rho.codomain().clone(), &ctx.grouplike_ambient());
    let ic = LinMap::eye(f, ctx.we.c.dim());
    let b_times_g = &a.mul().tensor(&ic) * &a.id().tensor(&g);
    let coinv = a.id().tensor(&(&ctx.rho - &b_times_g)).kernel();
    let full = Subspace::full(f, Shape::flat(a.dim()));
    let ab = tensor_subspace(&full, &ctx.b);
    r.dim("(A⊗A)^coC", coinv.dim());
    r.dim("A⊗B", ab.dim());
    r.flag("coinv-tensor=A⊗B", coinv.is_subspace_of(&ab) && ab.is_subspace_of(&coinv));
    let ambient = tensor_subspace(&full, &coinvariants_ambient(a, &ctx.rho));
    r.flag("ambient-form-agrees", ambient.is_subspace_of(&coinv) && coinv.is_subspace_of(&ambient));
    r
}

/// The left `C`-coaction on the carrier induced through `ψ_L` from the
/// coring coproduct, checked to make `ℓ` colinear.
pub fn left_coaction_on_coring(ctx: &GaloisContext) -> Result<LinMap> {
    let inv = ctx.inverse()?;
    let cr = &ctx.coring;
    let c = &ctx.we.c;
    let q = cr.balanced();
    let lift = &c.id().tensor(cr.left_action()) * &(&inv.ll.psi * cr.embed()).tensor(&cr.id());
    let mut r = Report::new();
    r.flag("coaction.descends", q.kills(&lift));
    let coaction = &(&lift * q.sect()) * cr.coproduct();
    let ell = ell_map(ctx);
    r.law("ell.colinear", &(&coaction * &ell), &(&c.id().tensor(&ell) * c.comul()));
    r.into_sentinel()?;
    Ok(coaction)
}

fn coordinates_of(b: &Subspace) -> (LinMap, LinMap) {
    (b.embedding(), b.coordinates())
}

/// `B⊗A → A`, `A⊗B → A` and `B⊗B → B` in the coordinates of `B`.
fn b_products(a: &FinAlgebra, b: &Subspace) -> (LinMap, LinMap, LinMap) {
    let (eb, cb) = coordinates_of(b);
    let ia = a.id();
    (a.mul() * &eb.tensor(&ia), a.mul() * &ia.tensor(&eb), &cb * &(a.mul() * &eb.tensor(&eb)))
}

/// Left `B`-linear `σ̃ : A → B⊗A` with `μ∘σ̃ = id`.
pub fn split_multiplication_left(a: &FinAlgebra, b: &Subspace) -> Result<Option<LinMap>> {
    let f = a.field();
    let (mba, _, mb) = b_products(a, b);
    let ia = a.id();
    let ib = LinMap::eye(f, b.dim());
    let dom = Shape::flat(a.dim());
    let cod = Shape::new(vec![b.dim(), a.dim()]);
    let x = LinExpr::unknown(f, dom.clone(), cod.clone());
    let linear = x.after(&mba).sub(&x.tensor_left(&ib).then(&mb.tensor(&ia)));
    let split = x.then(&mba).sub_map(&ia);
    let Some(sol) = solve_constrained_map(f, &dom, &cod, &[linear, split])? else {
        return Ok(None);
    };
    let s = sol.map;
    let mut r = Report::new();
    r.law("left.b-linear", &(&s * &mba), &(&mb.tensor(&ia) * &ib.tensor(&s)));
    r.law("left.section", &(&mba * &s), &ia);
    r.into_sentinel()?;
    Ok(Some(s))
}

/// Right `B`-linear `A → A⊗B` splitting `μ`.
pub fn split_multiplication_right(a: &FinAlgebra, b: &Subspace) -> Result<Option<LinMap>> {
    let f = a.field();
    let (_, mab, mb) = b_products(a, b);
    let ia = a.id();
    let ib = LinMap::eye(f, b.dim());
    let dom = Shape::flat(a.dim());
    let cod = Shape::new(vec![a.dim(), b.dim()]);
    let x = LinExpr::unknown(f, dom.clone(), cod.clone());
    let linear = x.after(&mab).sub(&x.tensor_right(&ib).then(&ia.tensor(&mb)));
    let split = x.then(&mab).sub_map(&ia);
    let Some(sol) = solve_constrained_map(f, &dom, &cod, &[linear, split])? else {
        return Ok(None);
    };
    let s = sol.map;
    let mut r = Report::new();
    r.law("right.b-linear", &(&s * &mab), &(&ia.tensor(&mb) * &s.tensor(&ib)));
    r.law("right.section", &(&mab * &s), &ia);
    r.into_sentinel()?;
    Ok(Some(s))
}

fn context_for(inv: &InvertibleWeakEntwining, rho: &LinMap) -> Result<GaloisContext> {
    let mut r = Report::new();
    r.absorb("entwined", &entwined_module_report(&inv.rr, rho));
    hypothesis(r, "entwined")?;
    GaloisContext::with_inverse(inv.clone(), rho.clone())
}

fn require_surjective(verdict: &GaloisVerdict) -> Result<()> {
    if verdict.tilde_can_surjective {
        return Ok(());
    }
    Err(Error::HypothesisFailed { name: "surjectivity".into(), report: Box::new(verdict.report.clone()) })
}

fn missing(r: &mut Report, name: &str) -> Error {
    r.flag(name, false);
    Error::TheoremViolation { name: name.into(), report: Box::new(r.clone()) }
}

/// Coseparable route: a colinear splitting `κ` of tilde-can from a
/// cointegral, then a `B`-linear, `C`-colinear section of `μ : B⊗A → A`.
pub fn coseparable_pipeline(inv: &InvertibleWeakEntwining, rho: &LinMap) -> Result<PipelineReport> {
    let ctx = context_for(inv, rho)?;
    let (a, c) = (&ctx.we.a, &ctx.we.c);
    let f = a.field();
    let verdict = canonical_map(&ctx);
    require_surjective(&verdict)?;
    let Some(delta) = find_cointegral(c)?.map(|d| d.delta) else {
        let mut r = Report::new();
        r.flag("coseparable", false);
        return Err(Error::HypothesisFailed { name: "coseparable".into(), report: Box::new(r) });
    };
    let mut r = Report::new();
    r.flag("hypothesis.entwined", true);
    r.flag("hypothesis.surjectivity", true);
    r.flag("hypothesis.coseparable", true);

    let n = ctx.coring.dim();
    let tilde = canonical_map_tilde(&ctx);
    let dom = Shape::flat(n);
    let cod = Shape::new(vec![a.dim(), a.dim()]);
    let x = LinExpr::unknown(f, dom.clone(), cod.clone());
    let Some(sol) = solve_constrained_map(f, &dom, &cod, &[x.then(&tilde).sub_map(&ctx.coring.id())])? else {
        return Err(missing(&mut r, "tau.exists"));
    };
    let tau = sol.map;
    r.absorb("tau", &check_coaction_identity(&ctx, &tau)?);
    r.dim("tau.freedom", sol.nullspace.len());
    if let Some(k) = sol.nullspace.first() {
        let tau2 = &tau + k;
        r.law("tau2.section", &(&tilde * &tau2), &ctx.coring.id());
        r.absorb("tau2", &check_coaction_identity(&ctx, &tau2)?);
    }

    let kappa = build_kappa(&ctx, &delta, &tau)?;
    r.absorb("", &kappa.report);
    r.absorb("correspondence", &check_colinear_correspondence(&ctx, &kappa.hat)?);
    r.flag("conclusion.can-bijective", verdict.can_bijective);

    let Some(st) = split_multiplication_left(a, &ctx.b)? else {
        return Err(missing(&mut r, "sigma_tilde.exists"));
    };
    let ia = a.id();
    let ic = c.id();
    let nb = ctx.b.dim();
    let ib = LinMap::eye(f, nb);
    let sigma = &(&(&tensor_all(&[&ib, &ia, &delta]) * &tensor_all(&[&ib, rho, &ic])) * &st.tensor(&ic)) * rho;
    let (mba, _, mb) = b_products(a, &ctx.b);
    r.law("sigma.b-linear", &(&sigma * &mba), &(&mb.tensor(&ia) * &ib.tensor(&sigma)));
    r.law("sigma.colinear", &(&ib.tensor(rho) * &sigma), &(&sigma.tensor(&ic) * rho));
    r.law("sigma.section", &(&mba * &sigma), &ia);
    let report = r.into_sentinel()?;
    let maps = BTreeMap::from([
        ("delta".to_string(), delta),
        ("tau".to_string(), tau),
        ("kappa".to_string(), kappa.kappa),
        ("sigma".to_string(), sigma),
    ]);
    Ok(PipelineReport { report, verdict, maps })
}

/// Projective route: a colinear `f̂ : C → A⊗A` lifting `ℓ` through
/// tilde-can, extended to a colinear splitting `f`.
pub fn projective_pipeline(inv: &InvertibleWeakEntwining, rho: &LinMap) -> Result<PipelineReport> {
    let ctx = context_for(inv, rho)?;
    let (a, c) = (&ctx.we.a, &ctx.we.c);
    let f = a.field();
    let proj = comodule_projectivity(c)?;
    hypothesis(proj.report.clone(), "comodule-projective")?;
    hypothesis(check_coinv_tensor_condition(&ctx), "coinvariant-tensor")?;
    let verdict = canonical_map(&ctx);
    require_surjective(&verdict)?;
    let mut r = Report::new();
    r.flag("hypothesis.entwined", true);
    r.absorb("hypothesis.projective", &proj.report);
    r.absorb("hypothesis.coinvariant-tensor", &check_coinv_tensor_condition(&ctx));
    r.flag("hypothesis.surjectivity", true);

    let lam = left_coaction(&ctx)?;
    let ia = a.id();
    let pl = projection_pl_raw(&inv.ll);
    let tilde = canonical_map_tilde(&ctx);
    let ell = ell_map(&ctx);
    let dom = Shape::flat(c.dim());
    let cod = Shape::new(vec![a.dim(), a.dim()]);
    let x = LinExpr::unknown(f, dom.clone(), cod.clone());
    let colin = x.then(&lam.tensor(&ia)).sub(&x.tensor_left(&c.id()).after(c.comul()).then(&pl.tensor(&ia)));
    let lifts = x.then(&tilde).sub_map(&ell);
    let Some(sol) = solve_constrained_map(f, &dom, &cod, &[colin, lifts])? else {
        return Err(missing(&mut r, "f_hat.exists"));
    };
    let f_hat = sol.map;
    r.law("f_hat.lifts-ell", &(&tilde * &f_hat), &ell);
    r.absorb("correspondence", &check_colinear_correspondence(&ctx, &f_hat)?);
    let fm = hat_to_colinear(&ctx, &f_hat);
    r.absorb("f", &coring_colinearity(&ctx, &fm));
    r.law("f.splits", &(&tilde * &fm), &ctx.coring.id());
    r.flag("conclusion.can-bijective", verdict.can_bijective);
    let Some(split) = split_multiplication_left(a, &ctx.b)? else {
        return Err(missing(&mut r, "b-splitting.exists"));
    };
    let report = r.into_sentinel()?;
    let mut maps = BTreeMap::from([("f_hat".to_string(), f_hat), ("f".to_string(), fm), ("splitting".to_string(), split)]);
    if let Some(h) = proj.witness {
        maps.insert("projectivity".to_string(), h);
    }
    Ok(PipelineReport { report, verdict, maps })
}

/// For a comodule algebra over a finite-dimensional weak Hopf algebra:
/// surjectivity of tilde-can gives bijectivity of `can_A` and splittings
/// of the multiplication on both sides. Not applicable when tilde-can is
/// not surjective.
pub fn kreimer_takeuchi_check(h: &WeakHopf, a: &FinAlgebra, rho: &LinMap) -> Result<Report> {
    let inv = build_invertible_from_weak_hopf(h, a, rho, h.coalg(), h.alg().mul())?;
    let ctx = context_for(&inv, rho)?;
    let verdict = canonical_map(&ctx);
    let mut r = Report::new();
    if !verdict.tilde_can_surjective {
        r.absorb("verdict", &verdict.report);
        r.not_applicable();
        return Ok(r);
    }
    r.flag("tilde-can.surjective", true);
    r.flag("can.bijective", verdict.can_bijective);
    r.flag("left-splitting", split_multiplication_left(a, &ctx.b)?.is_some());
    r.flag("right-splitting", split_multiplication_right(a, &ctx.b)?.is_some());
    r.absorb("projective", &projective_pipeline(&inv, rho)?.report);
    for (k, v) in &verdict.report.dims {
        r.dim(k.clone(), *v);
    }
    r.into_sentinel()
}
