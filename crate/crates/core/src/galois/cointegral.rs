use crate::error::Result;
use crate::exactlin::{solve_constrained_map, LinExpr, LinMap, Shape};
use crate::report::Report;
use crate::structures::{left_comodule_to_right_dual_module, FinCoalgebra, LeftComodule};

/// `δ : C⊗C → k`, colinear with `δ∘Δ = ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cointegral {
    pub delta: LinMap,
}

/// `Σ c₁δ(c₂⊗c') = Σ δ(c⊗c'₁)c'₂` and `δ∘Δ = ε`.
pub fn check_cointegral(c: &FinCoalgebra, delta: &LinMap) -> Report {
    let mut r = Report::new();
    let n = c.dim();
    if delta.rows() != 1 || delta.cols() != n * n {
        r.flag("shape", false);
        return r;
    }
    let ic = c.id();
    r.law("colin", &(&ic.tensor(delta) * &c.comul().tensor(&ic)), &(&delta.tensor(&ic) * &ic.tensor(c.comul())));
    r.law("counit", &(delta * c.comul()), c.counit());
    r
}

/// Some cointegral of `C`, or `None` when `C` is not coseparable.
pub fn find_cointegral(c: &FinCoalgebra) -> Result<Option<Cointegral>> {
    let f = c.field();
    let n = c.dim();
    let ic = c.id();
    let dom = Shape::new(vec![n, n]);
    let cod = Shape::scalar();
    let x = LinExpr::unknown(f, dom.clone(), cod.clone());
    let colin = x.tensor_left(&ic).after(&c.comul().tensor(&ic)).sub(&x.tensor_right(&ic).after(&ic.tensor(c.comul())));
    let counit = x.after(c.comul()).sub_map(c.counit());
    let Some(sol) = solve_constrained_map(f, &dom, &cod, &[colin, counit])? else {
        return Ok(None);
    };
    check_cointegral(c, &sol.map).into_sentinel()?;
    Ok(Some(Cointegral { delta: sol.map }))
}

/// Whether `C` is projective as a left comodule over itself, decided as a
/// right module over the dual algebra `R = C*`.
#[derive(Clone, Debug)]
pub struct Projectivity {
    pub projective: bool,
    /// An `R`-linear `h : M → k^n⊗R` with `π∘h = id`.
    pub witness: Option<LinMap>,
    pub report: Report,
}

pub fn comodule_projectivity(c: &FinCoalgebra) -> Result<Projectivity> {
    let f = c.field();
    let n = c.dim();
    let m = left_comodule_to_right_dual_module(&LeftComodule::new(c.clone(), c.comul().clone())?)?;
    let act = &m.action;
    let ir = m.alg.id();
    let im = LinMap::eye(f, n);
    // free cover k^n⊗R → M, e_j⊗r ↦ e_j·r
    let pi = act;
    let free_act = im.tensor(m.alg.mul());
    let dom = Shape::flat(n);
    let cod = Shape::new(vec![n, n]);
    let x = LinExpr::unknown(f, dom.clone(), cod.clone());
    let linear = x.after(act).sub(&x.tensor_right(&ir).then(&free_act));
    let split = x.then(pi).sub_map(&im);
    let mut r = Report::new();
    r.dim("comodule", n);
    r.dim("cover", n * n);
    let witness = solve_constrained_map(f, &dom, &cod, &[linear, split])?.map(|s| s.map);
    if let Some(h) = &witness {
        r.law("witness.linear", &(h * act), &(&free_act * &h.tensor(&ir)));
        r.law("witness.splits", &(pi * h), &im);
    }
    let projective = r.flag("projective", witness.is_some());
    Ok(Projectivity { projective, witness, report: r })
}
