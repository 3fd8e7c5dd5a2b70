//! Dense exact matrices with tensor-factored domain and codomain.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::echelon::{nullspace_from_rref, sparse_from_dense, sparse_to_dense, Echelon, SparseVec};
use super::scalar::{FieldSpec, Scalar};
use super::shape::Shape;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::report::Witness;

/// A linear map `domain → codomain`, stored as a `dim(codomain) × dim(domain)`
/// matrix in row-major order. Equality compares matrices, not shape labels.
#[derive(Clone)]
pub struct LinMap {
    field: FieldSpec,
    domain: Shape,
    codomain: Shape,
    data: Vec<Scalar>,
}

impl PartialEq for LinMap {
    fn eq(&self, other: &Self) -> bool {
        self.rows() == other.rows() && self.cols() == other.cols() && self.data == other.data
    }
}

impl Eq for LinMap {}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {} -> {} over {}", self.domain, self.codomain, self.field)?;
        for r in 0..self.rows() {
            let row: Vec<String> = (0..self.cols()).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl LinMap {
    pub fn zeros(field: FieldSpec, domain: Shape, codomain: Shape) -> Self {
        let n = domain.dim() * codomain.dim();
        LinMap { field, domain, codomain, data: vec![field.zero(); n] }
    }

    pub fn identity(field: FieldSpec, shape: Shape) -> Self {
        let mut m = LinMap::zeros(field, shape.clone(), shape);
        for i in 0..m.cols() {
            m.set(i, i, field.one());
        }
        m
    }

    /// Identity on a flat space of dimension `n`.
    pub fn eye(field: FieldSpec, n: usize) -> Self {
        LinMap::identity(field, Shape::flat(n))
    }

    pub fn from_fn(field: FieldSpec, domain: Shape, codomain: Shape, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let (rows, cols) = (codomain.dim(), domain.dim());
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        LinMap { field, domain, codomain, data }
    }

    /// Builds the map whose `j`-th column is `cols[j]`.
    pub fn from_columns(field: FieldSpec, domain: Shape, codomain: Shape, cols: &[Vec<Scalar>]) -> Self {
        assert_eq!(cols.len(), domain.dim(), "column count");
        let mut m = LinMap::zeros(field, domain, codomain);
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), m.rows(), "column length");
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn from_rows(field: FieldSpec, domain: Shape, codomain: Shape, rows: &[Vec<Scalar>]) -> Result<Self> {
        if rows.len() != codomain.dim() || rows.iter().any(|r| r.len() != domain.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "expected {}x{} matrix for {} -> {}",
                codomain.dim(),
                domain.dim(),
                domain,
                codomain
            )));
        }
        Ok(LinMap { field, domain, codomain, data: rows.concat() })
    }

    /// The map `k → V` picking out the vector `v`.
    pub fn vector(field: FieldSpec, shape: Shape, v: &[Scalar]) -> Self {
        LinMap::from_columns(field, Shape::scalar(), shape, &[v.to_vec()])
    }

    /// The functional `V → k` with the given values on basis vectors.
    pub fn covector(field: FieldSpec, shape: Shape, v: &[Scalar]) -> Self {
        LinMap::from_fn(field, shape, Shape::scalar(), |_, c| v[c].clone())
    }

    /// Unit vector `e_i` as a map `k → V`.
    pub fn basis_vector(field: FieldSpec, shape: Shape, i: usize) -> Self {
        let mut m = LinMap::zeros(field, Shape::scalar(), shape);
        m.set(i, 0, field.one());
        m
    }

    /// Reorders tensor factors: output factor `j` is input factor `perm[j]`.
    pub fn permutation(field: FieldSpec, shape: &Shape, perm: &[usize]) -> Self {
        let f = shape.factors();
        assert_eq!(perm.len(), f.len());
        let out = Shape::new(perm.iter().map(|&p| f[p]).collect());
        let mut m = LinMap::zeros(field, shape.clone(), out.clone());
        for c in 0..shape.dim() {
            let idx = shape.decode(c);
            let oidx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            m.set(out.encode(&oidx), c, field.one());
        }
        m
    }

    /// The flip `V⊗W → W⊗V`.
    pub fn swap(field: FieldSpec, left: usize, right: usize) -> Self {
        LinMap::permutation(field, &Shape::new(vec![left, right]), &[1, 0])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn domain(&self) -> &Shape {
        &self.domain
    }

    pub fn codomain(&self) -> &Shape {
        &self.codomain
    }

    pub fn rows(&self) -> usize {
        self.codomain.dim()
    }

    pub fn cols(&self) -> usize {
        self.domain.dim()
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        let cols = self.cols();
        self.data[r * cols + c] = x;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows()).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols()..(r + 1) * self.cols()].to_vec()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols()).map(|c| self.column(c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows()).map(|r| self.row(r)).collect()
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows()).map(|r| sparse_from_dense(&self.data[r * self.cols()..(r + 1) * self.cols()])).collect()
    }

    pub fn sparse_columns(&self) -> Vec<SparseVec> {
        (0..self.cols()).map(|c| sparse_from_dense(&self.column(c))).collect()
    }

    /// Same matrix, new shape labels (total dimensions must agree).
    pub fn reshaped(mut self, domain: Shape, codomain: Shape) -> Self {
        assert_eq!(domain.dim(), self.domain.dim());
        assert_eq!(codomain.dim(), self.codomain.dim());
        self.domain = domain;
        self.codomain = codomain;
        self
    }

    pub fn reshaped_like(self, other: &LinMap) -> Self {
        self.reshaped(other.domain.clone(), other.codomain.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols());
        (0..self.rows())
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        if self.cols() != g.rows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.domain, self.codomain, g.domain, g.codomain
            )));
        }
        let mut out = LinMap::zeros(self.field, g.domain.clone(), self.codomain.clone());
        let g_rows = g.sparse_rows();
        let n = g.cols();
        for r in 0..self.rows() {
            let mut acc: Vec<Scalar> = vec![self.field.zero(); n];
            for (k, gk) in g_rows.iter().enumerate() {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for (c, b) in gk {
                    acc[*c] = &acc[*c] + &(a * b);
                }
            }
            out.data[r * n..(r + 1) * n].clone_from_slice(&acc);
        }
        Ok(out)
    }

    /// Kronecker product; shapes concatenate.
    pub fn tensor(&self, g: &LinMap) -> LinMap {
        let mut out = LinMap::zeros(self.field, self.domain.concat(&g.domain), self.codomain.concat(&g.codomain));
        let (gr, gc) = (g.rows(), g.cols());
        let oc = out.cols();
        for r1 in 0..self.rows() {
            for c1 in 0..self.cols() {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..gr {
                    for c2 in 0..gc {
                        let b = g.get(r2, c2);
                        if !b.is_zero() {
                            out.data[(r1 * gr + r2) * oc + c1 * gc + c2] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.field, self.codomain.clone(), self.domain.clone(), |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap { data: self.data.iter().map(|x| s * x).collect(), ..self.clone() }
    }

    fn zip_with(&self, other: &LinMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> LinMap {
        assert_eq!((self.rows(), self.cols()), (other.rows(), other.cols()), "entrywise op on mismatched maps");
        LinMap { data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(), ..self.clone() }
    }

    /// Vertical concatenation of maps sharing a domain dimension.
    pub fn stack(field: FieldSpec, domain: Shape, maps: &[LinMap]) -> LinMap {
        let rows: usize = maps.iter().map(|m| m.rows()).sum();
        let mut data = Vec::with_capacity(rows * domain.dim());
        for m in maps {
            assert_eq!(m.cols(), domain.dim());
            data.extend_from_slice(&m.data);
        }
        LinMap { field, domain, codomain: Shape::flat(rows), data }
    }

    pub fn rank(&self) -> usize {
        self.echelon_of_rows().rank()
    }

    fn echelon_of_rows(&self) -> Echelon {
        let mut e = Echelon::new(self.cols());
        for r in self.sparse_rows() {
            e.insert(&r);
        }
        e
    }

    pub fn kernel(&self) -> Subspace {
        let rows = self.echelon_of_rows().into_rows();
        let basis = nullspace_from_rref(self.field, &rows, self.cols());
        Subspace::from_sparse(self.field, self.domain.clone(), &basis)
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_sparse(self.field, self.codomain.clone(), &self.sparse_columns())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows()
    }

    pub fn is_bijective(&self) -> bool {
        self.rows() == self.cols() && self.rank() == self.cols()
    }

    pub fn inverse(&self) -> Result<LinMap> {
        if self.rows() != self.cols() {
            return Err(Error::Singular);
        }
        let n = self.cols();
        let mut e = Echelon::new(2 * n);
        for (r, row) in self.sparse_rows().into_iter().enumerate() {
            let mut aug = row;
            aug.push((n + r, self.field.one()));
            e.insert(&aug);
        }
        let rows = e.into_rows();
        if rows.len() < n || rows[n - 1][0].0 >= n {
            return Err(Error::Singular);
        }
        let mut inv = LinMap::zeros(self.field, self.codomain.clone(), self.domain.clone());
        for (i, row) in rows.iter().enumerate() {
            for (c, x) in row.iter().filter(|(c, _)| *c >= n) {
                inv.set(i, c - n, x.clone());
            }
        }
        Ok(inv)
    }

    pub fn is_idempotent(&self) -> bool {
        self.rows() == self.cols() && &(self * self) == self
    }

    /// First domain basis element on which `self` and `other` differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<Witness> {
        assert_eq!((self.rows(), self.cols()), (other.rows(), other.cols()), "comparing maps of different size");
        (0..self.cols()).find_map(|c| {
            let (l, r) = (self.column(c), other.column(c));
            (l != r).then(|| Witness {
                index: self.domain.decode(c),
                lhs: l.iter().map(Scalar::to_repr).collect(),
                rhs: r.iter().map(Scalar::to_repr).collect(),
            })
        })
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Right-side restriction to a subspace: `self ∘ ι`.
    pub fn restrict(&self, sub: &Subspace) -> LinMap {
        self * &sub.embedding()
    }

    pub fn to_sparse_vec(v: &[Scalar]) -> SparseVec {
        sparse_from_dense(v)
    }

    pub fn dense(field: FieldSpec, v: &SparseVec, len: usize) -> Vec<Scalar> {
        sparse_to_dense(field, v, len)
    }
}

/// Tensor product of several maps, left to right.
pub fn tensor_all(maps: &[&LinMap]) -> LinMap {
    let (first, rest) = maps.split_first().expect("at least one map");
    rest.iter().fold((*first).clone(), |acc, m| acc.tensor(m))
}

impl Mul<&LinMap> for &LinMap {
    type Output = LinMap;
    fn mul(self, rhs: &LinMap) -> LinMap {
        self.compose(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add<&LinMap> for &LinMap {
    type Output = LinMap;
    fn add(self, rhs: &LinMap) -> LinMap {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&LinMap> for &LinMap {
    type Output = LinMap;
    fn sub(self, rhs: &LinMap) -> LinMap {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &LinMap {
    type Output = LinMap;
    fn neg(self) -> LinMap {
        LinMap { data: self.data.iter().map(|x| -x).collect(), ..self.clone() }
    }
}
