//! Solving for an unknown linear map subject to affine constraints.
//!
//! A constraint is a [`LinExpr`], a matrix whose entries are affine
//! functions of the entries of the unknown `X`. Requiring the expression to
//! vanish gives one scalar equation per entry.

use super::echelon::{axpy, nullspace_from_rref, scale, sparse_to_dense, Echelon, SparseVec};
use super::linmap::LinMap;
use super::scalar::{FieldSpec, Scalar};
use super::shape::Shape;
use crate::error::{Error, Result};

/// A matrix-valued affine expression in the entries of an unknown map.
/// Unknown `X : dom → cod` has variable `i·dim(dom) + j` for entry `(i, j)`.
#[derive(Clone, Debug)]
pub struct LinExpr {
    field: FieldSpec,
    nvars: usize,
    domain: Shape,
    codomain: Shape,
    coeffs: Vec<SparseVec>,
    constant: Vec<Scalar>,
}

impl LinExpr {
    /// The unknown itself.
    pub fn unknown(field: FieldSpec, domain: Shape, codomain: Shape) -> Self {
        let n = domain.dim() * codomain.dim();
        LinExpr {
            field,
            nvars: n,
            coeffs: (0..n).map(|v| vec![(v, field.one())]).collect(),
            constant: vec![field.zero(); n],
            domain,
            codomain,
        }
    }

    /// A fixed map, as an expression in an unknown with `nvars` entries.
    pub fn constant(nvars: usize, m: &LinMap) -> Self {
        let n = m.rows() * m.cols();
        LinExpr {
            field: m.field(),
            nvars,
            domain: m.domain().clone(),
            codomain: m.codomain().clone(),
            coeffs: vec![Vec::new(); n],
            constant: m.entries().to_vec(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn domain(&self) -> &Shape {
        &self.domain
    }

    pub fn codomain(&self) -> &Shape {
        &self.codomain
    }

    fn rows(&self) -> usize {
        self.codomain.dim()
    }

    fn cols(&self) -> usize {
        self.domain.dim()
    }

    fn check_compat(&self, other: &LinExpr) {
        assert_eq!(self.nvars, other.nvars, "expressions in different unknowns");
        assert_eq!((self.rows(), self.cols()), (other.rows(), other.cols()), "expression sizes differ");
    }

    /// `M ∘ self`.
    pub fn then(&self, m: &LinMap) -> LinExpr {
        assert_eq!(m.cols(), self.rows(), "then: size mismatch");
        let (rows, cols) = (m.rows(), self.cols());
        let mut coeffs = vec![Vec::new(); rows * cols];
        let mut constant = vec![self.field.zero(); rows * cols];
        for r in 0..rows {
            for p in 0..self.rows() {
                let a = m.get(r, p);
                if a.is_zero() {
                    continue;
                }
                for q in 0..cols {
                    let src = p * cols + q;
                    let dst = r * cols + q;
                    if !self.coeffs[src].is_empty() {
                        coeffs[dst] = axpy(&coeffs[dst], a, &self.coeffs[src]);
                    }
                    if !self.constant[src].is_zero() {
                        constant[dst] = &constant[dst] + &(a * &self.constant[src]);
                    }
                }
            }
        }
        LinExpr { coeffs, constant, codomain: m.codomain().clone(), ..self.clone_header() }
    }

    /// `self ∘ R`.
    pub fn after(&self, r: &LinMap) -> LinExpr {
        assert_eq!(r.rows(), self.cols(), "after: size mismatch");
        let (rows, cols) = (self.rows(), r.cols());
        let mut coeffs = vec![Vec::new(); rows * cols];
        let mut constant = vec![self.field.zero(); rows * cols];
        for p in 0..rows {
            for q in 0..self.cols() {
                let src = p * self.cols() + q;
                if self.coeffs[src].is_empty() && self.constant[src].is_zero() {
                    continue;
                }
                for c in 0..cols {
                    let b = r.get(q, c);
                    if b.is_zero() {
                        continue;
                    }
                    let dst = p * cols + c;
                    coeffs[dst] = axpy(&coeffs[dst], b, &self.coeffs[src]);
                    constant[dst] = &constant[dst] + &(&self.constant[src] * b);
                }
            }
        }
        LinExpr { coeffs, constant, domain: r.domain().clone(), ..self.clone_header() }
    }

    /// `F ⊗ self`.
    pub fn tensor_left(&self, f: &LinMap) -> LinExpr {
        let (sr, sc) = (self.rows(), self.cols());
        let domain = f.domain().concat(&self.domain);
        let codomain = f.codomain().concat(&self.codomain);
        let cols = domain.dim();
        let n = codomain.dim() * cols;
        let mut coeffs = vec![Vec::new(); n];
        let mut constant = vec![self.field.zero(); n];
        for i in 0..f.rows() {
            for j in 0..f.cols() {
                let a = f.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..sr {
                    for q in 0..sc {
                        let src = p * sc + q;
                        let dst = (i * sr + p) * cols + j * sc + q;
                        coeffs[dst] = scale(&self.coeffs[src], a);
                        constant[dst] = a * &self.constant[src];
                    }
                }
            }
        }
        LinExpr { field: self.field, nvars: self.nvars, domain, codomain, coeffs, constant }
    }

    /// `self ⊗ F`.
    pub fn tensor_right(&self, f: &LinMap) -> LinExpr {
        let (fr, fc) = (f.rows(), f.cols());
        let domain = self.domain.concat(f.domain());
        let codomain = self.codomain.concat(f.codomain());
        let cols = domain.dim();
        let n = codomain.dim() * cols;
        let mut coeffs = vec![Vec::new(); n];
        let mut constant = vec![self.field.zero(); n];
        for p in 0..self.rows() {
            for q in 0..self.cols() {
                let src = p * self.cols() + q;
                if self.coeffs[src].is_empty() && self.constant[src].is_zero() {
                    continue;
                }
                for i in 0..fr {
                    for j in 0..fc {
                        let a = f.get(i, j);
                        if a.is_zero() {
                            continue;
                        }
                        let dst = (p * fr + i) * cols + q * fc + j;
                        coeffs[dst] = scale(&self.coeffs[src], a);
                        constant[dst] = &self.constant[src] * a;
                    }
                }
            }
        }
        LinExpr { field: self.field, nvars: self.nvars, domain, codomain, coeffs, constant }
    }

    pub fn add(&self, other: &LinExpr) -> LinExpr {
        self.check_compat(other);
        let one = self.field.one();
        LinExpr {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| axpy(a, &one, b)).collect(),
            constant: self.constant.iter().zip(&other.constant).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &LinExpr) -> LinExpr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LinExpr {
        let m1 = -self.field.one();
        LinExpr {
            coeffs: self.coeffs.iter().map(|a| scale(a, &m1)).collect(),
            constant: self.constant.iter().map(|a| -a).collect(),
            ..self.clone()
        }
    }

    pub fn sub_map(&self, m: &LinMap) -> LinExpr {
        self.sub(&LinExpr::constant(self.nvars, m))
    }

    /// Value of the expression at a concrete `X`.
    pub fn eval(&self, x: &LinMap) -> LinMap {
        let xs = x.entries();
        let vals: Vec<Vec<Scalar>> = (0..self.rows())
            .map(|r| {
                (0..self.cols())
                    .map(|c| {
                        let k = r * self.cols() + c;
                        self.coeffs[k].iter().fold(self.constant[k].clone(), |acc, (v, a)| &acc + &(a * &xs[*v]))
                    })
                    .collect()
            })
            .collect();
        LinMap::from_rows(self.field, self.domain.clone(), self.codomain.clone(), &vals).expect("shape")
    }

    fn clone_header(&self) -> LinExpr {
        LinExpr {
            field: self.field,
            nvars: self.nvars,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            coeffs: Vec::new(),
            constant: Vec::new(),
        }
    }
}

/// A particular solution (free variables zero) and a basis of the
/// homogeneous solutions.
#[derive(Clone, Debug)]
pub struct Solution {
    pub map: LinMap,
    pub nullspace: Vec<LinMap>,
}

/// Finds `X : domain → codomain` with every expression in `constraints`
/// equal to zero. `Ok(None)` means the system is inconsistent.
pub fn solve_constrained_map(
    field: FieldSpec,
    domain: &Shape,
    codomain: &Shape,
    constraints: &[LinExpr],
) -> Result<Option<Solution>> {
    let nvars = domain.dim() * codomain.dim();
    let mut e = Echelon::new(nvars + 1);
    for c in constraints {
        if c.nvars != nvars {
            return Err(Error::DimensionMismatch(format!(
                "constraint in {} unknowns, expected {nvars}",
                c.nvars
            )));
        }
        for (row, k) in c.coeffs.iter().zip(&c.constant) {
            let mut eq = row.clone();
            if !k.is_zero() {
                eq.push((nvars, k.clone()));
            }
            if !eq.is_empty() {
                e.insert(&eq);
            }
        }
    }
    let rows = e.into_rows();
    if rows.iter().any(|r| r[0].0 == nvars) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); nvars];
    for r in &rows {
        if let Some((c, k)) = r.last() {
            if *c == nvars {
                x[r[0].0] = -k;
            }
        }
    }
    let d = domain.dim();
    let to_map = |v: &[Scalar]| LinMap::from_fn(field, domain.clone(), codomain.clone(), |r, c| v[r * d + c].clone());
    let homogeneous: Vec<SparseVec> = rows
        .iter()
        .map(|r| r.iter().filter(|(c, _)| *c < nvars).cloned().collect())
        .collect();
    let nullspace = nullspace_from_rref(field, &homogeneous, nvars)
        .iter()
        .map(|v| to_map(&sparse_to_dense(field, v, nvars)))
        .collect();
    Ok(Some(Solution { map: to_map(&x), nullspace }))
}
