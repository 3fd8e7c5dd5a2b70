//! Index-loop evaluation of structure constants, kept separate from the
//! matrix machinery it cross-checks.

#![allow(dead_code)]

use weak_galois::catalog::{demo, Bundle};
use weak_galois::exactlin::{FieldSpec, LinMap, Scalar};
use weak_galois::structures::{FinAlgebra, FinCoalgebra};
use weak_galois::weak_entwining::{InvertibleWeakEntwining, WeakEntwiningLL, WeakEntwiningRR};

pub const Q: FieldSpec = FieldSpec::Rationals;

pub fn zeros(f: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![f.zero(); n]
}

pub fn unit(f: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(f, n);
    v[i] = f.one();
    v
}

pub fn add_into(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(coeff * x);
        }
    }
}

/// `m·v` by a double loop over entries.
pub fn apply(m: &LinMap, v: &[Scalar]) -> Vec<Scalar> {
    let f = m.field();
    (0..m.rows())
        .map(|r| {
            let mut s = f.zero();
            for (c, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    s = &s + &(m.get(r, c) * x);
                }
            }
            s
        })
        .collect()
}

pub fn kron(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// `e_i e_j` read off the structure constants.
pub fn prod_basis(a: &FinAlgebra, i: usize, j: usize) -> Vec<Scalar> {
    let n = a.dim();
    (0..n).map(|k| a.mul().get(k, i * n + j).clone()).collect()
}

pub fn prod(a: &FinAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let f = a.field();
    let mut out = zeros(f, a.dim());
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            if !xi.is_zero() && !yj.is_zero() {
                add_into(&mut out, &(xi * yj), &prod_basis(a, i, j));
            }
        }
    }
    out
}

pub fn one(a: &FinAlgebra) -> Vec<Scalar> {
    (0..a.dim()).map(|k| a.unit().get(k, 0).clone()).collect()
}

pub fn comul(c: &FinCoalgebra, x: &[Scalar]) -> Vec<Scalar> {
    apply(c.comul(), x)
}

pub fn counit(c: &FinCoalgebra, x: &[Scalar]) -> Scalar {
    apply(c.counit(), x).remove(0)
}

/// `z ∈ A⊗A ↦ Σ z_ij e_i·ρ(e_j) ∈ A⊗C`.
pub fn tilde_can(a: &FinAlgebra, rho: &LinMap, z: &[Scalar]) -> Vec<Scalar> {
    let f = a.field();
    let n = a.dim();
    let nc = rho.rows() / n;
    let mut out = zeros(f, n * nc);
    for i in 0..n {
        for j in 0..n {
            let zij = &z[i * n + j];
            if zij.is_zero() {
                continue;
            }
            for k in 0..n {
                for c in 0..nc {
                    let r = rho.get(k * nc + c, j);
                    if r.is_zero() {
                        continue;
                    }
                    let eik = prod_basis(a, i, k);
                    for (m, x) in eik.iter().enumerate() {
                        if !x.is_zero() {
                            out[m * nc + c] = &out[m * nc + c] + &(&(zij * r) * x);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `ψ(c⊗1)` for `ψ : C⊗A → A⊗C`.
pub fn psi_on_unit(a: &FinAlgebra, nc: usize, psi: &LinMap, c: usize) -> Vec<Scalar> {
    let n = a.dim();
    let mut x = zeros(a.field(), nc * n);
    for (m, u) in one(a).iter().enumerate() {
        x[c * n + m] = u.clone();
    }
    apply(psi, &x)
}

/// `a⊗c ↦ Σ a·ψ(c⊗1)`.
pub fn p_r(a: &FinAlgebra, nc: usize, psi: &LinMap) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let f = a.field();
    let mut cols = Vec::new();
    for ai in 0..n {
        for c in 0..nc {
            let v = psi_on_unit(a, nc, psi, c);
            let mut out = zeros(f, n * nc);
            for k in 0..n {
                for d in 0..nc {
                    let x = &v[k * nc + d];
                    if !x.is_zero() {
                        for (m, y) in prod_basis(a, ai, k).iter().enumerate() {
                            out[m * nc + d] = &out[m * nc + d] + &(x * y);
                        }
                    }
                }
            }
            cols.push(out);
        }
    }
    cols
}

/// `c⊗a ↦ Σ ψ_L(1⊗c)·a`.
pub fn p_l(a: &FinAlgebra, nc: usize, psi_l: &LinMap) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let f = a.field();
    let mut cols = Vec::new();
    for c in 0..nc {
        let mut x = zeros(f, n * nc);
        for (m, u) in one(a).iter().enumerate() {
            x[m * nc + c] = u.clone();
        }
        let v = apply(psi_l, &x);
        for ai in 0..n {
            let mut out = zeros(f, nc * n);
            for d in 0..nc {
                for k in 0..n {
                    let y = &v[d * n + k];
                    if !y.is_zero() {
                        for (m, z) in prod_basis(a, k, ai).iter().enumerate() {
                            out[d * n + m] = &out[d * n + m] + &(y * z);
                        }
                    }
                }
            }
            cols.push(out);
        }
    }
    cols
}

pub fn columns(m: &LinMap) -> Vec<Vec<Scalar>> {
    (0..m.cols()).map(|c| (0..m.rows()).map(|r| m.get(r, c).clone()).collect()).collect()
}

pub fn bundle(name: &str) -> Bundle {
    demo(name, Q).unwrap()
}

pub fn rr_of(b: &Bundle) -> WeakEntwiningRR {
    WeakEntwiningRR::new(b.algebra.clone().unwrap(), b.coalgebra.clone().unwrap(), b.psi_r_or_default().unwrap()).unwrap()
}

pub fn invertible_of(b: &Bundle) -> InvertibleWeakEntwining {
    let ll = WeakEntwiningLL::new(b.algebra.clone().unwrap(), b.coalgebra.clone().unwrap(), b.psi_l_or_default().unwrap()).unwrap();
    InvertibleWeakEntwining::new(rr_of(b), ll).unwrap()
}

/// Demos carrying an invertible weak entwining.
pub const ENTWINED_DEMOS: &[&str] = &["k", "kz2", "diag2", "diag3", "pairgroupoid2", "trivial-coaction"];

/// Demos that are weak Hopf algebras.
pub const HOPF_DEMOS: &[&str] = &["k", "kz2", "diag2", "diag3", "pairgroupoid2"];
