mod common;

use common::*;
use weak_galois::catalog::{
    comodule_subalgebra_pipeline, dual_numbers_coalgebra, grouplike_coalgebra, matrix_coalgebra,
    truncated_polynomial_algebra,
};
use weak_galois::exactlin::{FieldSpec, LinMap, Shape, Subspace};
use weak_galois::galois::*;
use weak_galois::structures::FinCoalgebra;
use weak_galois::Error;

fn rr_ctx(name: &str) -> GaloisContext {
    let b = bundle(name);
    GaloisContext::with_inverse(invertible_of(&b), b.coaction_or_default().unwrap()).unwrap()
}

#[test]
fn coinvariants_of_catalog_comodule_algebras() {
    for (name, dim) in [("kz2", 1), ("diag2", 2), ("diag3", 3), ("pairgroupoid2", 2), ("trivial-coaction", 2)] {
        let b = bundle(name);
        let a = b.algebra.clone().unwrap();
        let amb = coinvariants_ambient(&a, &b.coaction_or_default().unwrap());
        let ctx = rr_ctx(name);
        let g = coinvariants_grouplike(&ctx);
        assert_eq!(amb.dim(), dim, "{name}");
        assert_eq!(g, amb, "{name}");
        assert!(unital_subalgebra_report(&a, &g).passed());
    }
    let ctx = rr_ctx("pairgroupoid2");
    let ids = Subspace::from_vectors(Q, ctx.b.ambient().clone(), &[unit(Q, 4, 0), unit(Q, 4, 3)]);
    assert_eq!(ctx.b, ids);
}

#[test]
fn canonical_map_verdicts() {
    for (name, carrier, bijective) in [("kz2", 4, true), ("diag2", 2, true), ("pairgroupoid2", 8, true), ("trivial-coaction", 4, false)] {
        let ctx = rr_ctx(name);
        let v = canonical_map(&ctx);
        assert_eq!(ctx.coring.dim(), carrier, "{name}");
        assert_eq!(v.can_bijective, bijective, "{name}: {}", v.report);
        assert_eq!(v.tilde_can_surjective, bijective, "{name}");
        assert!(v.can_well_defined);
        if !bijective {
            assert!(canonical_map_tilde(&ctx).rank() <= 2);
        }
    }
}

#[test]
fn tilde_can_sends_a_tensor_one_to_a_times_grouplike() {
    let ctx = rr_ctx("pairgroupoid2");
    let n = ctx.a().dim();
    let amb = tilde_can_ambient(ctx.a(), &ctx.rho);
    let g = ctx.grouplike_ambient();
    for i in 0..n {
        let z = kron(&unit(Q, n, i), &one(ctx.a()));
        let mut want = zeros(Q, amb.rows());
        let nc = amb.rows() / n;
        for k in 0..n {
            for c in 0..nc {
                add_into(&mut want, &g[k * nc + c], &kron(&prod_basis(ctx.a(), i, k), &unit(Q, nc, c)));
            }
        }
        assert_eq!(apply(&amb, &z), want);
        assert_eq!(tilde_can(ctx.a(), &ctx.rho, &z), want);
    }
}

#[test]
fn split_sections_and_their_entwinings() {
    for name in ["kz2", "pairgroupoid2", "diag2"] {
        let b = bundle(name);
        let ctx = rr_ctx(name);
        let (a, c) = (b.algebra.clone().unwrap(), b.coalgebra.clone().unwrap());
        let sigma = find_split_section_sigma(&a, &c, &ctx.rho, &ctx.b).unwrap().expect(name);
        assert!(check_split_section(&a, &c, &ctx.rho, &ctx.b, &sigma).passed());
        let we = canonical_entwining_from_section(&a, &c, &ctx.rho, &ctx.b, &sigma).unwrap();
        if name == "kz2" {
            assert_eq!(we.psi, b.psi_r_or_default().unwrap());
        }
    }
}

#[test]
fn trivial_coaction_splits_through_its_canonical_entwining() {
    // can̄ : A⊗_A A → A⊗C is injective but not onto; a colinear retraction
    // still exists and ψ^σ shrinks the coring to the image of can.
    let b = bundle("trivial-coaction");
    let ctx = rr_ctx("trivial-coaction");
    assert!(!canonical_map(&ctx).can_bijective);
    let (a, c) = (b.algebra.clone().unwrap(), b.coalgebra.clone().unwrap());
    let sigma = find_split_section_sigma(&a, &c, &ctx.rho, &ctx.b).unwrap().expect("retraction");
    let we = canonical_entwining_from_section(&a, &c, &ctx.rho, &ctx.b, &sigma).unwrap();
    let ctx2 = GaloisContext::new(we, ctx.rho.clone()).unwrap();
    let v = canonical_map(&ctx2);
    assert_eq!(ctx2.coring.dim(), 2);
    assert!(v.can_bijective, "{}", v.report);
}

#[test]
fn no_split_section_when_can_bar_is_not_injective() {
    // A = k×k over B = k·1 with C = k: A⊗A has dim 4, A⊗C dim 2
    let a = bundle("diag2").algebra.unwrap();
    let c = FinCoalgebra::ground(Q);
    let rho = a.id().reshaped(Shape::flat(2), Shape::new(vec![2, 1]));
    let scalars = Subspace::from_vectors(Q, Shape::flat(2), &[one(&a)]);
    assert!(find_split_section_sigma(&a, &c, &rho, &scalars).unwrap().is_none());
    let b = coinvariants_ambient(&a, &rho);
    assert_eq!(b.dim(), 2);
    assert!(find_split_section_sigma(&a, &c, &rho, &b).unwrap().is_some());
}

/// All cointegrals of `M^c(2)` over F2 by brute force on the 16 values of δ.
fn f2_cointegrals_matrix_coalgebra() -> Vec<u16> {
    let n = 4;
    // Δ(e_ij) = Σ_k e_ik⊗e_kj
    let comul = |x: usize| -> Vec<(usize, usize)> {
        let (i, j) = (x / 2, x % 2);
        (0..2).map(|k| (i * 2 + k, k * 2 + j)).collect()
    };
    let eps = |x: usize| u8::from(x / 2 == x % 2);
    let mut found = Vec::new();
    for bits in 0..=u16::MAX {
        let d = |x: usize, y: usize| ((bits >> (x * n + y)) & 1) as u8;
        let counit_ok = (0..n).all(|x| comul(x).iter().fold(0, |s, &(p, q)| s ^ d(p, q)) == eps(x));
        let colin_ok = counit_ok
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    let mut lhs = [0u8; 4];
                    for &(p, q) in &comul(x) {
                        lhs[p] ^= d(q, y);
                    }
                    let mut rhs = [0u8; 4];
                    for &(p, q) in &comul(y) {
                        rhs[q] ^= d(x, p);
                    }
                    lhs == rhs
                })
            });
        if colin_ok {
            found.push(bits);
        }
    }
    found
}

#[test]
fn cointegral_existence_matches_brute_force_over_f2() {
    let f = FieldSpec::PrimeField(2);
    let brute = f2_cointegrals_matrix_coalgebra();
    let solved = find_cointegral(&matrix_coalgebra(2, f).unwrap()).unwrap();
    let delta = solved.expect("M^c(2) is coseparable over F2").delta;
    let bits: u16 = (0..16).filter(|&i| !delta.get(0, i).is_zero()).map(|i| 1 << i).sum();
    assert!(brute.contains(&bits));
    let c = matrix_coalgebra(2, f).unwrap();
    for &b in &brute {
        let cand = LinMap::from_fn(f, delta.domain().clone(), delta.codomain().clone(), |_, i| f.from_i64(((b >> i) & 1) as i64));
        assert!(check_cointegral(&c, &cand).passed());
    }
}

#[test]
fn cointegrals_over_the_rationals() {
    for c in [matrix_coalgebra(1, Q).unwrap(), matrix_coalgebra(2, Q).unwrap(), grouplike_coalgebra(3, Q).unwrap()] {
        let d = find_cointegral(&c).unwrap().expect("coseparable");
        assert!(check_cointegral(&c, &d.delta).passed());
    }
    assert_eq!(find_cointegral(&matrix_coalgebra(1, Q).unwrap()).unwrap().unwrap().delta.get(0, 0), &Q.one());
    assert!(find_cointegral(&dual_numbers_coalgebra(Q).unwrap()).unwrap().is_none());
}

#[test]
fn coalgebras_are_projective_over_themselves() {
    let cs: Vec<FinCoalgebra> = vec![
        matrix_coalgebra(2, Q).unwrap(),
        dual_numbers_coalgebra(Q).unwrap(),
        grouplike_coalgebra(2, FieldSpec::PrimeField(2)).unwrap(),
    ];
    for c in cs {
        let p = comodule_projectivity(&c).unwrap();
        assert!(p.projective && p.witness.is_some());
        assert!(p.report.passed(), "{}", p.report);
    }
}

#[test]
fn separability_of_multiplication() {
    let diag = bundle("diag2").algebra.unwrap();
    let scalars = Subspace::from_vectors(Q, diag.mul().codomain().clone(), &[one(&diag)]);
    assert!(split_multiplication_left(&diag, &scalars).unwrap().is_some());
    assert!(split_multiplication_right(&diag, &scalars).unwrap().is_some());
    let dual = truncated_polynomial_algebra(2, Q).unwrap();
    let scalars = Subspace::from_vectors(Q, dual.mul().codomain().clone(), &[one(&dual)]);
    let s = split_multiplication_left(&dual, &scalars).unwrap().expect("a ↦ 1⊗a");
    for i in 0..2 {
        let v = apply(&s, &unit(Q, 2, i));
        assert_eq!(prod(&dual, &one(&dual), &v), unit(Q, 2, i));
    }
}

#[test]
fn pipelines_report_hypothesis_failures() {
    let b = bundle("trivial-coaction");
    let inv = invertible_of(&b);
    let rho = b.coaction_or_default().unwrap();
    for res in [coseparable_pipeline(&inv, &rho), projective_pipeline(&inv, &rho)] {
        match res {
            Err(Error::HypothesisFailed { name, report }) => {
                assert!(!report.passed(), "{name}");
            }
            other => panic!("expected a hypothesis failure, got {:?}", other.map(|p| p.report)),
        }
    }
    let h = bundle("kz2").weak_hopf().unwrap();
    let a = b.algebra.clone().unwrap();
    let r = kreimer_takeuchi_check(&h, &a, &rho).unwrap();
    assert_eq!(r.status, weak_galois::report::Status::NotApplicable);
}

#[test]
fn pipelines_pass_on_regular_weak_hopf_algebras() {
    for name in HOPF_DEMOS {
        let b = bundle(name);
        let inv = invertible_of(&b);
        let rho = b.coaction_or_default().unwrap();
        let c = coseparable_pipeline(&inv, &rho).unwrap();
        assert!(c.report.passed() && c.verdict.can_bijective, "{name}: {}", c.report);
        let p = projective_pipeline(&inv, &rho).unwrap();
        assert!(p.report.passed() && p.verdict.can_bijective, "{name}: {}", p.report);
        let h = b.weak_hopf().unwrap();
        assert!(kreimer_takeuchi_check(&h, h.alg(), &rho).unwrap().passed(), "{name}");
    }
}

#[test]
fn coinvariant_tensor_and_left_coaction() {
    for name in ["kz2", "diag2", "pairgroupoid2"] {
        let ctx = rr_ctx(name);
        assert!(check_coinv_tensor_condition(&ctx).passed(), "{name}");
        let lam = left_coaction_on_coring(&ctx).unwrap();
        assert_eq!(lam.cols(), ctx.coring.dim());
    }
}

#[test]
fn colinear_correspondence_accepts_tau_hat_and_rejects_counit() {
    let b = bundle("kz2");
    let inv = invertible_of(&b);
    let rho = b.coaction_or_default().unwrap();
    let ctx = GaloisContext::with_inverse(inv.clone(), rho.clone()).unwrap();
    let tau = coseparable_pipeline(&inv, &rho).unwrap().maps["tau"].clone();
    let f_hat = colinear_to_hat(&ctx, &tau);
    assert!(check_colinear_correspondence(&ctx, &f_hat).unwrap().passed());
    assert_eq!(hat_to_colinear(&ctx, &f_hat), tau);
    // c ↦ ε(c)1⊗1
    let a = ctx.a();
    let units = a.unit().tensor(a.unit());
    let bad = &units * ctx.we.c.counit();
    match check_colinear_correspondence(&ctx, &bad) {
        Err(Error::Invalid { what, law, .. }) => assert_eq!((what.as_str(), law.as_str()), ("f_hat", "colin.hat")),
        other => panic!("{:?}", other.map(|r| r.status)),
    }
}

#[test]
fn subalgebra_pipeline_on_pair_groupoid_and_bad_subspaces() {
    let b = bundle("pairgroupoid2");
    let h = b.weak_hopf().unwrap();
    let good = Subspace::from_vectors(Q, h.alg().mul().codomain().clone(), b.subalgebra.as_ref().unwrap());
    let out = comodule_subalgebra_pipeline(&h, &good).unwrap();
    assert!(out.report.passed(), "{}", out.report);
    let bad = Subspace::from_vectors(Q, h.alg().mul().codomain().clone(), &[unit(Q, 4, 0)]);
    assert!(matches!(comodule_subalgebra_pipeline(&h, &bad), Err(Error::HypothesisFailed { .. })));
}
