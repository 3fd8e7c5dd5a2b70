use super::{balanced_over, entwined_module_report, tilde_can_ambient};
use crate::error::Result;
use crate::exactlin::{solve_constrained_map, LinExpr, LinMap, QuotientSpace, Shape, Subspace};
use crate::report::Report;
use crate::structures::{FinAlgebra, FinCoalgebra};
use crate::weak_entwining::{check_rr, WeakEntwiningRR};

/// Structure maps on `A⊗_B A`: left multiplication, coaction on the
/// second leg, the map to `A⊗C` and right multiplication.
struct BalancedMaps {
    q: QuotientSpace,
    left: LinMap,
    coaction: LinMap,
    can_bar: LinMap,
    right: LinMap,
}

fn balanced_maps(a: &FinAlgebra, c: &FinCoalgebra, rho: &LinMap, b: &Subspace) -> (BalancedMaps, Report) {
    let q = balanced_over(a, b);
    let (ia, ic) = (a.id(), c.id());
    let mut r = Report::new();
    let left_lift = q.proj() * &a.mul().tensor(&ia);
    let coaction_lift = &q.proj().tensor(&ic) * &ia.tensor(rho);
    let tilde = tilde_can_ambient(a, rho);
    let right_lift = q.proj() * &ia.tensor(a.mul());
    let per_basis = |lift: &LinMap, on_left: bool| {
        (0..a.dim()).all(|i| {
            let e = LinMap::basis_vector(a.field(), Shape::flat(a.dim()), i);
            let m = if on_left { lift * &e.tensor(&LinMap::eye(a.field(), a.dim() * a.dim())) } else { lift * &LinMap::eye(a.field(), a.dim() * a.dim()).tensor(&e) };
            q.kills(&m)
        })
    };
    r.flag("balanced.left-action-descends", per_basis(&left_lift, true));
    r.flag("balanced.coaction-descends", q.kills(&coaction_lift));
    r.flag("balanced.can-descends", q.kills(&tilde));
    r.flag("balanced.right-action-descends", per_basis(&right_lift, false));
    let maps = BalancedMaps {
        left: &left_lift * &ia.tensor(q.sect()),
        coaction: &coaction_lift * q.sect(),
        can_bar: &tilde * q.sect(),
        right: &right_lift * &q.sect().tensor(&ia),
        q,
    };
    (maps, r)
}

/// Substitution check of a candidate `σ : A⊗C → A⊗_B A`.
pub fn check_split_section(a: &FinAlgebra, c: &FinCoalgebra, rho: &LinMap, b: &Subspace, sigma: &LinMap) -> Report {
    let (m, mut r) = balanced_maps(a, c, rho, b);
    let (ia, ic) = (a.id(), c.id());
    r.law("sigma.left-linear", &(sigma * &a.mul().tensor(&ic)), &(&m.left * &ia.tensor(sigma)));
    r.law("sigma.colinear", &(&sigma.tensor(&ic) * &ia.tensor(c.comul())), &(&m.coaction * sigma));
    r.law("sigma.retraction", &(sigma * &m.can_bar), &LinMap::eye(a.field(), m.q.dim()));
    r
}

/// A left `A`-linear, right `C`-colinear `σ : A⊗C → A⊗_B A` with
/// `σ∘can̄ = id`, or `None` when no such map exists.
pub fn find_split_section_sigma(a: &FinAlgebra, c: &FinCoalgebra, rho: &LinMap, b: &Subspace) -> Result<Option<LinMap>> {
    let f = a.field();
    let (m, pre) = balanced_maps(a, c, rho, b);
    pre.into_sentinel()?;
    let (ia, ic) = (a.id(), c.id());
    let dom = Shape::new(vec![a.dim(), c.dim()]);
    let cod = Shape::flat(m.q.dim());
    let x = LinExpr::unknown(f, dom.clone(), cod.clone());
    let left = x.after(&a.mul().tensor(&ic)).sub(&x.tensor_left(&ia).then(&m.left));
    let colin = x.tensor_right(&ic).after(&ia.tensor(c.comul())).sub(&x.then(&m.coaction));
    let retract = x.after(&m.can_bar).sub_map(&LinMap::eye(f, m.q.dim()));
    let Some(sol) = solve_constrained_map(f, &dom, &cod, &[left, colin, retract])? else {
        return Ok(None);
    };
    check_split_section(a, c, rho, b, &sol.map).into_sentinel()?;
    Ok(Some(sol.map))
}

/// `ψ^σ = can̄ ∘ (A⊗_B μ) ∘ (τ⊗A)` with `τ(c) = σ(1⊗c)`, checked to be a
/// weak entwining for which `A` is an entwined module.
pub fn canonical_entwining_from_section(
    a: &FinAlgebra,
    c: &FinCoalgebra,
    rho: &LinMap,
    b: &Subspace,
    sigma: &LinMap,
) -> Result<WeakEntwiningRR> {
    let (m, pre) = balanced_maps(a, c, rho, b);
    pre.into_sentinel()?;
    let ic = c.id();
    let tau = sigma * &a.unit().tensor(&ic);
    let psi = &(&m.can_bar * &m.right) * &tau.tensor(&a.id());
    let psi = psi.reshaped(Shape::new(vec![c.dim(), a.dim()]), Shape::new(vec![a.dim(), c.dim()]));
    let mut r = Report::new();
    r.absorb("psi_sigma", &check_rr(a, c, &psi));
    let we = WeakEntwiningRR::unchecked(a.clone(), c.clone(), psi)?;
    r.absorb("psi_sigma", &entwined_module_report(&we, rho));
    r.into_sentinel()?;
    Ok(we)
}
