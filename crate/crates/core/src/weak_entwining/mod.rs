//! Right-right and left-left weak entwining structures, their projections,
//! entwined modules and the associated corings.

mod coring;
mod invertible;

pub use coring::{balanced_tensor, build_coring_ll, build_coring_rr, ACoring, Side};
pub use invertible::{check_invertible, coring_iso_check, left_coaction_from_right, InvertibleWeakEntwining};

use crate::error::{Error, Result};
use crate::exactlin::{tensor_all, LinMap};
use crate::report::Report;
use crate::structures::{check_left_comodule, check_right_comodule, check_right_module, FinAlgebra, FinCoalgebra, LeftComodule, RightComodule, RightModule};

/// `ψ_R : C⊗A → A⊗C`
#[derive(Clone, Debug)]
pub struct WeakEntwiningRR {
    pub a: FinAlgebra,
    pub c: FinCoalgebra,
    pub psi: LinMap,
}

/// `ψ_L : A⊗C → C⊗A`
#[derive(Clone, Debug)]
pub struct WeakEntwiningLL {
    pub a: FinAlgebra,
    pub c: FinCoalgebra,
    pub psi: LinMap,
}

fn check_psi_size(a: &FinAlgebra, c: &FinCoalgebra, psi: &LinMap) -> Result<()> {
    let n = a.dim() * c.dim();
    if psi.rows() != n || psi.cols() != n {
        return Err(Error::DimensionMismatch(format!("entwining map must be {n}x{n}")));
    }
    Ok(())
}

impl WeakEntwiningRR {
    pub fn unchecked(a: FinAlgebra, c: FinCoalgebra, psi: LinMap) -> Result<Self> {
        check_psi_size(&a, &c, &psi)?;
        Ok(WeakEntwiningRR { a, c, psi })
    }

    pub fn new(a: FinAlgebra, c: FinCoalgebra, psi: LinMap) -> Result<Self> {
        check_psi_size(&a, &c, &psi)?;
        check_rr(&a, &c, &psi).into_invalid("right-right weak entwining")?;
        Ok(WeakEntwiningRR { a, c, psi })
    }

    /// `c ↦ Σ 1_α ⊗ c^α`, i.e. `ψ_R(c⊗1)`.
    pub fn psi_unit(&self) -> LinMap {
        &self.psi * &self.c.id().tensor(self.a.unit())
    }

    /// `c ↦ Σ ε(c^α) 1_α`
    pub fn counit_unit(&self) -> LinMap {
        &self.a.id().tensor(self.c.counit()) * &self.psi_unit()
    }
}

impl WeakEntwiningLL {
    pub fn unchecked(a: FinAlgebra, c: FinCoalgebra, psi: LinMap) -> Result<Self> {
        check_psi_size(&a, &c, &psi)?;
        Ok(WeakEntwiningLL { a, c, psi })
    }

    pub fn new(a: FinAlgebra, c: FinCoalgebra, psi: LinMap) -> Result<Self> {
        check_psi_size(&a, &c, &psi)?;
        check_ll(&a, &c, &psi).into_invalid("left-left weak entwining")?;
        Ok(WeakEntwiningLL { a, c, psi })
    }

    /// `c ↦ Σ c_E ⊗ 1^E`, i.e. `ψ_L(1⊗c)`.
    pub fn psi_unit(&self) -> LinMap {
        &self.psi * &self.a.unit().tensor(&self.c.id())
    }

    /// `c ↦ Σ ε(c_E) 1^E`
    pub fn counit_unit(&self) -> LinMap {
        &self.c.counit().tensor(&self.a.id()) * &self.psi_unit()
    }
}

pub fn check_rr(a: &FinAlgebra, c: &FinCoalgebra, psi: &LinMap) -> Report {
    let mut r = Report::new();
    if check_psi_size(a, c, psi).is_err() {
        r.flag("shape", false);
        return r;
    }
    let (ia, ic, mu, d, e, u) = (a.id(), c.id(), a.mul(), c.comul(), c.counit(), a.unit());
    r.law("re1", &(psi * &ic.tensor(mu)), &(&(&mu.tensor(&ic) * &ia.tensor(psi)) * &psi.tensor(&ia)));
    let eu = &(&ia.tensor(e) * psi) * &ic.tensor(u);
    r.law("re2", &(&ia.tensor(e) * psi), &(mu * &eu.tensor(&ia)));
    r.law("re3", &(&ia.tensor(d) * psi), &(&(&psi.tensor(&ic) * &ic.tensor(psi)) * &d.tensor(&ia)));
    r.law("re4", &(psi * &ic.tensor(u)), &(&eu.tensor(&ic) * d));
    r
}

pub fn check_ll(a: &FinAlgebra, c: &FinCoalgebra, psi: &LinMap) -> Report {
    let mut r = Report::new();
    if check_psi_size(a, c, psi).is_err() {
        r.flag("shape", false);
        return r;
    }
    let (ia, ic, mu, d, e, u) = (a.id(), c.id(), a.mul(), c.comul(), c.counit(), a.unit());
    r.law("le1", &(psi * &mu.tensor(&ic)), &(&(&ic.tensor(mu) * &psi.tensor(&ia)) * &ia.tensor(psi)));
    let eu = &(&e.tensor(&ia) * psi) * &u.tensor(&ic);
    r.law("le2", &(&e.tensor(&ia) * psi), &(mu * &ia.tensor(&eu)));
    r.law("le3", &(&d.tensor(&ia) * psi), &(&(&ic.tensor(psi) * &psi.tensor(&ic)) * &ia.tensor(d)));
    r.law("le4", &(psi * &u.tensor(&ic)), &(&ic.tensor(&eu) * d));
    r
}

/// The strict forms of the unit and counit axioms.
pub fn strictness_report(we: &WeakEntwiningRR) -> Report {
    let mut r = Report::new();
    let (ia, ic) = (we.a.id(), we.c.id());
    r.law("strict.counit", &(&ia.tensor(we.c.counit()) * &we.psi), &we.c.counit().tensor(&ia));
    r.law("strict.unit", &we.psi_unit(), &we.a.unit().tensor(&ic));
    r
}

pub fn is_strict(we: &WeakEntwiningRR) -> bool {
    strictness_report(we).passed()
}

/// `p_R = (μ⊗C)(A⊗ψ_R)(A⊗C⊗1)` without the idempotence check.
pub fn projection_pr_raw(we: &WeakEntwiningRR) -> LinMap {
    let (ia, ic) = (we.a.id(), we.c.id());
    let p = &(&we.a.mul().tensor(&ic) * &ia.tensor(&we.psi)) * &tensor_all(&[&ia, &ic, we.a.unit()]);
    p.reshaped_like(&ia.tensor(&ic))
}

/// `p_L = (C⊗μ)(ψ_L⊗A)(1⊗C⊗A)` without the idempotence check.
pub fn projection_pl_raw(we: &WeakEntwiningLL) -> LinMap {
    let (ia, ic) = (we.a.id(), we.c.id());
    let p = &(&ic.tensor(we.a.mul()) * &we.psi.tensor(&ia)) * &tensor_all(&[we.a.unit(), &ic, &ia]);
    p.reshaped_like(&ic.tensor(&ia))
}

fn idempotent(p: LinMap, name: &str) -> Result<LinMap> {
    let mut r = Report::new();
    r.law(format!("{name}.idempotent"), &(&p * &p), &p);
    r.into_sentinel()?;
    Ok(p)
}

pub fn projection_pr(we: &WeakEntwiningRR) -> Result<LinMap> {
    idempotent(projection_pr_raw(we), "p_R")
}

pub fn projection_pl(we: &WeakEntwiningLL) -> Result<LinMap> {
    idempotent(projection_pl_raw(we), "p_L")
}

/// `M` with `act : M⊗A → M` and `ρ : M → M⊗C` satisfying
/// `ρ(ma) = Σ m₀ a_α ⊗ m₁^α`.
pub fn check_weak_entwined_module_rr(we: &WeakEntwiningRR, m: &RightComodule, act: &LinMap) -> Report {
    let mut r = Report::new();
    let module = match RightModule::new(we.a.clone(), act.clone()) {
        Ok(x) if x.dim() == m.dim() => x,
        _ => {
            r.flag("shape", false);
            return r;
        }
    };
    r.absorb("module", &check_right_module(&module));
    r.absorb("comodule", &check_right_comodule(m));
    let idm = LinMap::eye(we.a.field(), m.dim());
    let rho = &m.coaction;
    let rhs = &(&act.tensor(&we.c.id()) * &idm.tensor(&we.psi)) * &rho.tensor(&we.a.id());
    r.law("entwined", &(rho * act), &rhs);
    r
}

/// `M` with `act : A⊗M → M` and `ρ : M → C⊗M` satisfying
/// `ρ(am) = Σ m₋₁_E ⊗ a^E m₀`.
pub fn check_weak_entwined_module_ll(we: &WeakEntwiningLL, m: &LeftComodule, act: &LinMap) -> Report {
    let mut r = Report::new();
    let d = m.dim();
    if act.rows() != d || act.cols() != d * we.a.dim() {
        r.flag("shape", false);
        return r;
    }
    let idm = LinMap::eye(we.a.field(), d);
    let ia = we.a.id();
    r.law("module.assoc", &(act * &ia.tensor(act)), &(act * &we.a.mul().tensor(&idm)));
    r.law("module.unit", &(act * &we.a.unit().tensor(&idm)), &idm);
    r.absorb("comodule", &check_left_comodule(m));
    let rho = &m.coaction;
    let rhs = &(&we.c.id().tensor(act) * &we.psi.tensor(&idm)) * &ia.tensor(rho);
    r.law("entwined", &(rho * act), &rhs);
    r
}

/// A bijective `ψ_R` must be strict. Records whether that implication is
/// vacuous, confirmed, or violated.
pub fn bijective_strictness_report(we: &WeakEntwiningRR) -> Report {
    let mut r = Report::new();
    let bij = we.psi.is_bijective();
    let strict = is_strict(we);
    let verdict = match (bij, strict) {
        (false, _) => "vacuous",
        (true, true) => "confirmed",
        (true, false) => "VIOLATED",
    };
    r.flag_with_note("bijective-implies-strict", !bij || strict, verdict);
    r.dim("rank(psi)", we.psi.rank());
    r
}
