use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{tensor_all, LinMap, QuotientSpace, Shape, Subspace};
use crate::galois::{
    canonical_entwining_from_section, canonical_map, check_split_section, entwined_module_report, tensor_subspace,
    unital_subalgebra_report, GaloisContext, PipelineReport,
};
use crate::report::Report;
use crate::structures::{check_module_coalgebra, perm, FinCoalgebra};
use crate::weak_entwining::{check_rr, WeakEntwiningRR};
use crate::weak_hopf::WeakHopf;

/// The two candidate readings of `A^R`.
#[derive(Clone, Debug)]
pub struct ARReadings {
    /// `span{a − Π̄^R(a) : a ∈ A}`
    pub corrected: Subspace,
    /// `Im Π̄^R ∩ A`
    pub literal: Subspace,
}

pub fn a_r_readings(h: &WeakHopf, a: &Subspace) -> ARReadings {
    let pibar_r = h.wb.pi_maps_raw().pibar_r;
    let diff = &h.wb.id() - &pibar_r;
    let corrected = a.map(&diff);
    let literal = pibar_r.image().intersection(a);
    ARReadings { corrected, literal }
}

/// `S·H = span{s·h}` for a subspace `S` of `H`.
fn right_ideal(h: &WeakHopf, s: &Subspace) -> Subspace {
    let n = h.dim();
    let vs: Vec<_> = s.basis().iter().flat_map(|x| (0..n).map(|i| h.alg().product(x, &h.alg().basis_vector(i)))).collect();
    Subspace::from_vectors(h.field(), Shape::flat(n), &vs)
}

fn coideal_report(h: &WeakHopf, j: &Subspace) -> Report {
    let f = h.field();
    let full = Subspace::full(f, Shape::flat(h.dim()));
    let target = tensor_subspace(&full, j).sum(&tensor_subspace(j, &full));
    let d = h.coalg().comul();
    let mut r = Report::new();
    r.flag("J.coideal", j.basis().iter().all(|x| target.contains(&d.apply(x))));
    r.flag("J.counit", j.basis().iter().all(|x| h.coalg().counit().apply(x).iter().all(|s| s.is_zero())));
    r
}

/// For a unital subalgebra `A ⊆ H` with `Δ(A) ⊆ H⊗A`: the quotient
/// coalgebra `C = H/A^R H`, the entwining on `(H, C)`, the coinvariants
/// `B ⊇ A` and the section `σ : H⊗C → H⊗_B H`, with every intermediate
/// identity checked. `A^R` is taken as `span{a − Π̄^R(a)}`; the literal
/// intersection is reported alongside.
pub fn comodule_subalgebra_pipeline(h: &WeakHopf, a: &Subspace) -> Result<PipelineReport> {
    let f = h.field();
    let n = h.dim();
    let (mu, d) = (h.alg().mul(), h.coalg().comul());
    let ih = h.wb.id();

    let mut hyp = unital_subalgebra_report(h.alg(), a);
    let full = Subspace::full(f, Shape::flat(n));
    let h_a = tensor_subspace(&full, a);
    hyp.flag("left-comodule", a.basis().iter().all(|x| h_a.contains(&d.apply(x))));
    if !hyp.passed() {
        return Err(Error::HypothesisFailed { name: "comodule-subalgebra".into(), report: Box::new(hyp) });
    }
    let mut r = Report::new();
    r.absorb("hypothesis", &hyp);

    let readings = a_r_readings(h, a);
    r.dim("A^R", readings.corrected.dim());
    r.dim("A^R.literal", readings.literal.dim());
    r.dim("J.literal", right_ideal(h, &readings.literal).dim());
    let j = right_ideal(h, &readings.corrected);
    r.dim("J", j.dim());
    r.absorb("", &coideal_report(h, &j));

    let q = QuotientSpace::new(j.clone());
    let nc = q.dim();
    r.dim("C", nc);
    let (pi, sect) = (q.proj().clone(), q.sect().clone());
    let pp = pi.tensor(&pi);
    r.flag("C.comul-descends", q.kills(&(&pp * d)));
    r.flag("C.counit-descends", q.kills(h.coalg().counit()));
    let c = FinCoalgebra::unchecked(&(&pp * d) * &sect, h.coalg().counit() * &sect)?;
    let act_lift = &pi * mu;
    let ej = j.embedding();
    r.flag("C.action-descends", (&act_lift * &ej.tensor(&ih)).is_zero());
    let act = &act_lift * &sect.tensor(&ih);
    r.absorb("C", &check_module_coalgebra(&h.wb, &c, &act));

    let rho = &ih.tensor(&pi) * d;
    // c⊗h ↦ h₁ ⊗ π(h̃ h₂)
    let psi_lift = &(&ih.tensor(&act_lift) * &perm(f, &[n, n, n], &[1, 0, 2])) * &ih.tensor(d);
    r.flag("psi.descends", (&psi_lift * &ej.tensor(&ih)).is_zero());
    let psi = (&psi_lift * &sect.tensor(&ih)).reshaped(Shape::new(vec![nc, n]), Shape::new(vec![n, nc]));
    r.absorb("psi", &check_rr(h.alg(), &c, &psi));
    let we = WeakEntwiningRR::unchecked(h.alg().clone(), c.clone(), psi.clone())?;
    r.absorb("entwined", &entwined_module_report(&we, &rho));
    if !r.passed() {
        return Err(Error::TheoremViolation { name: "quotient-entwining".into(), report: Box::new(r) });
    }

    let ctx = GaloisContext::new(we, rho.clone())?;
    let b = ctx.b.clone();
    r.dim("B", b.dim());
    r.flag("A⊆B", a.is_subspace_of(&b));

    // h⊗c ↦ h S(h̃₁) ⊗_B h̃₂
    let bq = ctx.balanced_aa.proj();
    let sigma_lift = &(&(bq * &mu.tensor(&ih)) * &tensor_all(&[&ih, &h.antipode, &ih])) * &ih.tensor(d);
    r.flag("sigma.descends", (&sigma_lift * &ih.tensor(&ej)).is_zero());
    let sigma = &sigma_lift * &ih.tensor(&sect);
    if let Some(j0) = j.basis().first() {
        let shift = &LinMap::vector(f, Shape::flat(n), j0) * &LinMap::covector(f, Shape::flat(nc), &vec![f.one(); nc]);
        let sect2 = &sect + &shift;
        r.flag("preimage.distinct", sect2 != sect);
        r.law("preimage.comul", &(&(&pp * d) * &sect2), c.comul());
        r.law("preimage.counit", &(h.coalg().counit() * &sect2), c.counit());
        r.law("preimage.action", &(&act_lift * &sect2.tensor(&ih)), &act);
        let psi2 = (&psi_lift * &sect2.tensor(&ih)).reshaped(Shape::new(vec![nc, n]), Shape::new(vec![n, nc]));
        r.law("preimage.psi", &psi2, &psi);
        r.law("preimage.sigma", &(&sigma_lift * &ih.tensor(&sect2)), &sigma);
    }
    r.absorb("", &check_split_section(h.alg(), &c, &rho, &b, &sigma));
    let psi_sigma = canonical_entwining_from_section(h.alg(), &c, &rho, &b, &sigma)?;
    r.law("psi_sigma=psi", &psi_sigma.psi, &psi);

    let verdict = canonical_map(&ctx);
    r.flag("galois", verdict.can_bijective);
    let report = r.into_sentinel()?;
    let maps = BTreeMap::from([
        ("pi".to_string(), pi),
        ("rho".to_string(), rho),
        ("psi".to_string(), psi),
        ("action".to_string(), act),
        ("sigma".to_string(), sigma),
    ]);
    Ok(PipelineReport { report, verdict, maps })
}
