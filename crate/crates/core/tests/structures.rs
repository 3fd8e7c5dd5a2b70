mod common;

use common::*;
use weak_galois::catalog::{
    demo, diagonal_weak_hopf, dual_numbers_coalgebra, group_algebra, cyclic_group_table, matrix_coalgebra,
    truncated_polynomial_algebra, upper_triangular_algebra,
};
use weak_galois::exactlin::{FieldSpec, LinMap, Shape};
use weak_galois::structures::{
    check_algebra, check_coalgebra, check_comodule_algebra, check_module_coalgebra, dual_algebra, FinAlgebra,
};
use weak_galois::weak_entwining::{check_invertible, check_rr, is_strict, WeakEntwiningRR};
use weak_galois::weak_hopf::{
    antipode_inverse, check_weak_bialgebra, check_weak_hopf, doi_entwining_rr, pi_identities, WeakBialgebra,
};
use weak_galois::Error;

fn failing(r: &weak_galois::report::Report) -> Vec<String> {
    r.checks.iter().filter(|c| !c.ok).map(|c| c.name.clone()).collect()
}

#[test]
fn catalog_structures_pass_their_checkers() {
    for f in [Q, FieldSpec::PrimeField(3)] {
        for name in HOPF_DEMOS {
            let h = demo(name, f).unwrap().weak_hopf().unwrap();
            assert!(check_weak_hopf(&h).passed(), "{name}");
            assert!(pi_identities(&h).passed(), "{name}: {}", pi_identities(&h));
            assert!(antipode_inverse(&h).is_ok(), "{name}");
        }
        for c in [matrix_coalgebra(2, f).unwrap(), dual_numbers_coalgebra(f).unwrap()] {
            assert!(check_coalgebra(&c).passed());
            assert!(check_algebra(&dual_algebra(&c).unwrap()).passed());
        }
        for a in [truncated_polynomial_algebra(3, f).unwrap(), upper_triangular_algebra(f).unwrap()] {
            assert!(check_algebra(&a).passed());
        }
    }
}

#[test]
fn non_associative_table_is_rejected_with_witness() {
    // e_i e_j = e_1 for all i, j, unit e_0 forced: fails unit and associativity
    let f = Q;
    let mul = LinMap::from_fn(f, Shape::new(vec![2, 2]), Shape::flat(2), |r, _| if r == 1 { f.one() } else { f.zero() });
    let unit = LinMap::vector(f, Shape::flat(2), &unit(f, 2, 0));
    let err = FinAlgebra::new(mul, unit).unwrap_err();
    let report = err.report().expect("report attached");
    let bad = report.first_failure().unwrap();
    assert!(bad.witness.is_some());
    assert!(matches!(err, Error::Invalid { .. }));
}

#[test]
fn strictness_of_catalog_weak_hopf_algebras() {
    for (name, strict) in [("k", true), ("kz2", true), ("diag2", false), ("diag3", false), ("pairgroupoid2", false)] {
        let h = bundle(name).weak_hopf().unwrap();
        assert_eq!(h.wb.is_strict(), strict, "{name}");
        // Δ(1) = 1⊗1 by loops
        let one_h = one(h.alg());
        assert_eq!(comul(h.coalg(), &one_h) == kron(&one_h, &one_h), strict, "{name}");
    }
}

#[test]
fn broken_counit_fails_weak_bialgebra() {
    let h = diagonal_weak_hopf(2, Q).unwrap();
    let mut counit = h.coalg().counit().clone();
    counit.set(0, 1, Q.from_i64(2));
    let coalg = weak_galois::structures::FinCoalgebra::unchecked(h.coalg().comul().clone(), counit).unwrap();
    let wb = WeakBialgebra::unchecked(h.alg().clone(), coalg).unwrap();
    assert!(!check_weak_bialgebra(&wb).passed());
}

#[test]
fn regular_comodule_algebra_and_module_coalgebra() {
    for name in HOPF_DEMOS {
        let h = bundle(name).weak_hopf().unwrap();
        let r = check_comodule_algebra(&h.wb, h.alg(), h.coalg().comul());
        assert!(r.passed(), "{name}: {r}");
        let r = check_module_coalgebra(&h.wb, h.coalg(), h.alg().mul());
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn unit_coaction_into_diagonal_is_not_a_comodule_algebra() {
    // A = k, ρ(1) = 1⊗1_H over k×k
    let h = diagonal_weak_hopf(2, Q).unwrap();
    let a = FinAlgebra::ground(Q);
    let rho = LinMap::from_columns(Q, Shape::flat(1), Shape::new(vec![1, 2]), &[one(h.alg())]);
    let r = check_comodule_algebra(&h.wb, &a, &rho);
    assert!(r.ok("comal.m"));
    assert!(!r.passed());
    let bad = failing(&r);
    assert!(bad.iter().any(|n| n.starts_with("comodule/")), "{bad:?}");
    assert!(bad.iter().any(|n| n == "one.1"), "{bad:?}");
    // the left-projection form only sees ρ(1) and Π^L(1) = 1
    assert!(r.ok("comal.pl"));
    assert!(!r.ok("equivalent-forms-agree"));
}

#[test]
fn ground_field_comodule_algebra_passes() {
    let h = group_algebra(&cyclic_group_table(1), Q).unwrap();
    let a = FinAlgebra::ground(Q);
    let rho = LinMap::eye(Q, 1).reshaped(Shape::flat(1), Shape::new(vec![1, 1]));
    assert!(check_comodule_algebra(&h.wb, &a, &rho).passed());
}

#[test]
fn group_algebra_counit_is_multiplicative_on_triples() {
    let h = bundle("kz2").weak_hopf().unwrap();
    let r = check_module_coalgebra(&h.wb, h.coalg(), h.alg().mul());
    assert!(r.ok("modco.counit"));
    for c in 0..2 {
        for x in 0..2 {
            for y in 0..2 {
                let cx = prod_basis(h.alg(), c, x);
                let cxy = prod(h.alg(), &cx, &unit(Q, 2, y));
                assert_eq!(counit(h.coalg(), &cxy), &counit(h.coalg(), &cx) * &counit(h.coalg(), &prod_basis(h.alg(), x, y)));
            }
        }
    }
}

#[test]
fn pure_flip_is_an_entwining_but_swap_diag2_breaks_only_re4() {
    let h = diagonal_weak_hopf(2, Q).unwrap();
    let flip = LinMap::swap(Q, 2, 2);
    assert!(check_rr(h.alg(), h.coalg(), &flip).passed());
    let b = bundle("swap-diag2");
    let r = check_rr(b.algebra.as_ref().unwrap(), b.coalgebra.as_ref().unwrap(), b.psi_r.as_ref().unwrap());
    assert_eq!(failing(&r), vec!["re4".to_string()]);
    assert!(r.check("re4").unwrap().witness.is_some());
}

#[test]
fn doi_entwining_of_trivial_data_is_identity() {
    let h = group_algebra(&cyclic_group_table(1), Q).unwrap();
    let we = doi_entwining_rr(&h.wb, h.alg(), h.coalg().comul(), h.coalg(), h.alg().mul()).unwrap();
    assert_eq!(we.psi, LinMap::eye(Q, 1).reshaped(Shape::new(vec![1, 1]), Shape::new(vec![1, 1])));
}

#[test]
fn hopf_entwinings_are_strict_exactly_for_strict_algebras() {
    for name in HOPF_DEMOS {
        let b = bundle(name);
        let strict = b.weak_hopf().unwrap().wb.is_strict();
        assert_eq!(is_strict(&rr_of(&b)), strict, "{name}");
    }
}

#[test]
fn diagonal_left_entwining_pattern() {
    // ψ_L(e_i⊗e_j) = δ_ij e_i⊗e_i
    let b = bundle("diag2");
    let inv = invertible_of(&b);
    for i in 0..2 {
        for j in 0..2 {
            let out = apply(&inv.ll.psi, &unit(Q, 4, i * 2 + j));
            let want = if i == j { unit(Q, 4, i * 2 + i) } else { zeros(Q, 4) };
            assert_eq!(out, want);
        }
    }
    assert!(check_invertible(&inv.rr, &inv.ll).passed());
}

#[test]
fn entwining_constructor_rejects_wrong_size() {
    let h = diagonal_weak_hopf(2, Q).unwrap();
    let psi = LinMap::eye(Q, 3);
    assert!(matches!(
        WeakEntwiningRR::new(h.alg().clone(), h.coalg().clone(), psi),
        Err(Error::DimensionMismatch(_))
    ));
}
