use super::{
    build_coring_ll, build_coring_rr, check_ll, check_rr, check_weak_entwined_module_ll, check_weak_entwined_module_rr,
    projection_pl_raw, projection_pr_raw, ACoring, WeakEntwiningLL, WeakEntwiningRR,
};
use crate::error::{Error, Result};
use crate::exactlin::LinMap;
use crate::report::Report;
use crate::structures::{check_left_comodule, LeftComodule, RightComodule};

/// A right-right and a left-left weak entwining on the same algebra and
/// coalgebra whose composites are the two projections.
#[derive(Clone, Debug)]
pub struct InvertibleWeakEntwining {
    pub rr: WeakEntwiningRR,
    pub ll: WeakEntwiningLL,
}

impl InvertibleWeakEntwining {
    pub fn new(rr: WeakEntwiningRR, ll: WeakEntwiningLL) -> Result<Self> {
        check_invertible(&rr, &ll).into_invalid("invertible weak entwining")?;
        Ok(InvertibleWeakEntwining { rr, ll })
    }
}

pub fn check_invertible(rr: &WeakEntwiningRR, ll: &WeakEntwiningLL) -> Report {
    let mut r = Report::new();
    if rr.a != ll.a || rr.c != ll.c {
        r.flag_with_note("same-structures", false, "algebra or coalgebra differ");
        return r;
    }
    r.absorb("", &check_rr(&rr.a, &rr.c, &rr.psi));
    r.absorb("", &check_ll(&ll.a, &ll.c, &ll.psi));
    if r.first_failure().is_some() {
        return r;
    }
    let pr = projection_pr_raw(rr);
    let pl = projection_pl_raw(ll);
    r.law("psi_r.psi_l=p_r", &(&rr.psi * &ll.psi), &pr);
    r.law("psi_l.psi_r=p_l", &(&ll.psi * &rr.psi), &pl);
    r.law("counit-units-agree", &ll.counit_unit(), &rr.counit_unit());
    r.law("psi_r.p_l=psi_r", &(&rr.psi * &pl), &rr.psi);
    r.law("psi_l.p_r=psi_l", &(&ll.psi * &pr), &ll.psi);
    r
}

/// `f : 𝔠 → 𝔡` from an ambient map, after checking it lands in `𝔡`.
fn restrict(r: &mut Report, name: &str, from: &ACoring, to: &ACoring, amb: &LinMap) -> LinMap {
    let m = amb * from.embed();
    let inside = (0..m.cols()).all(|c| to.carrier().contains(&m.column(c)));
    r.flag(format!("{name}.lands-in-carrier"), inside);
    to.coords() * &m
}

fn morphism_laws(r: &mut Report, name: &str, f: &LinMap, from: &ACoring, to: &ACoring) {
    let ia = from.base().id();
    r.law(format!("{name}.left-linear"), &(f * from.left_action()), &(to.left_action() * &ia.tensor(f)));
    r.law(format!("{name}.right-linear"), &(f * from.right_action()), &(to.right_action() * &f.tensor(&ia)));
    r.law(format!("{name}.counital"), &(to.counit() * f), from.counit());
    let ff = to.balanced().proj() * &f.tensor(f);
    r.flag(format!("{name}.tensor-descends"), from.balanced().kills(&ff));
    r.law(
        format!("{name}.comultiplicative"),
        &(to.coproduct() * f),
        &(&(&ff * from.balanced().sect()) * from.coproduct()),
    );
}

/// `ψ_L|` and `ψ_R|` between `Im p_R` and `Im p_L` as mutually inverse
/// coring maps.
pub fn coring_iso_check(inv: &InvertibleWeakEntwining) -> Report {
    let mut r = Report::new();
    let (cc, dd) = match (build_coring_rr(&inv.rr), build_coring_ll(&inv.ll)) {
        (Ok(c), Ok(d)) => (c, d),
        (c, d) => {
            r.flag("rr-coring", c.is_ok());
            r.flag("ll-coring", d.is_ok());
            return r;
        }
    };
    r.dim("rr-coring", cc.dim());
    r.dim("ll-coring", dd.dim());
    let f = restrict(&mut r, "psi_l", &cc, &dd, &inv.ll.psi);
    let g = restrict(&mut r, "psi_r", &dd, &cc, &inv.rr.psi);
    r.law("psi_r.psi_l=id", &(&g * &f), &cc.id());
    r.law("psi_l.psi_r=id", &(&f * &g), &dd.id());
    morphism_laws(&mut r, "psi_l", &f, &cc, &dd);
    morphism_laws(&mut r, "psi_r", &g, &dd, &cc);
    if inv.rr.psi.is_bijective() {
        let plain = inv.rr.psi.inverse().map(|i| i == inv.ll.psi).unwrap_or(false);
        r.flag("plain-inverse", plain);
    }
    r
}

/// `ᴬρ(a) = ψ_L(Σ a1₀ ⊗ 1₁)` for `A` a weak entwined module with product
/// and coaction `ρ`, checked to be a left comodule and a left entwined module.
pub fn left_coaction_from_right(inv: &InvertibleWeakEntwining, rho: &LinMap) -> Result<LeftComodule> {
    let a = &inv.rr.a;
    let right = RightComodule::new(inv.rr.c.clone(), rho.clone())?;
    check_weak_entwined_module_rr(&inv.rr, &right, a.mul()).into_invalid("weak entwined module")?;
    let g = rho * a.unit();
    let lam = &(&inv.ll.psi * &a.mul().tensor(&inv.rr.c.id())) * &a.id().tensor(&g);
    let left = LeftComodule::new(inv.ll.c.clone(), lam)?;
    let mut r = Report::new();
    r.absorb("left-comodule", &check_left_comodule(&left));
    r.absorb("left-entwined", &check_weak_entwined_module_ll(&inv.ll, &left, a.mul()));
    match r.first_failure() {
        None => Ok(left),
        Some(c) => Err(Error::TheoremViolation { name: c.name.clone(), report: Box::new(r) }),
    }
}
