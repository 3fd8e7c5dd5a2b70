use super::echelon::{nullspace_from_rref, sparse_from_dense, sparse_to_dense, Echelon, SparseVec};
use super::linmap::LinMap;
use super::scalar::{FieldSpec, Scalar};
use super::shape::Shape;

/// A subspace of a tensor-shaped space, held as its canonical RREF basis.
/// Two subspaces are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: Shape,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn from_sparse(field: FieldSpec, ambient: Shape, vectors: &[SparseVec]) -> Self {
        let mut e = Echelon::new(ambient.dim());
        for v in vectors {
            e.insert(v);
        }
        Subspace { field, ambient, rows: e.into_rows() }
    }

    pub fn from_vectors(field: FieldSpec, ambient: Shape, vectors: &[Vec<Scalar>]) -> Self {
        let sparse: Vec<SparseVec> = vectors.iter().map(|v| sparse_from_dense(v)).collect();
        Subspace::from_sparse(field, ambient, &sparse)
    }

    pub fn zero(field: FieldSpec, ambient: Shape) -> Self {
        Subspace { field, ambient, rows: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: Shape) -> Self {
        let rows = (0..ambient.dim()).map(|i| vec![(i, field.one())]).collect();
        Subspace { field, ambient, rows }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> &Shape {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient.dim()
    }

    /// RREF basis rows, sorted by pivot.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| sparse_to_dense(self.field, r, self.ambient.dim())).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient.dim());
        for r in &self.rows {
            e.insert(r);
        }
        e
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        let mut out = v.clone();
        for r in &self.rows {
            let p = r[0].0;
            if let Some(c) = super::echelon::entry(&out, p).cloned() {
                out = super::echelon::axpy(&out, &-c, r);
            }
        }
        out.is_empty()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.contains_sparse(&sparse_from_dense(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains_sparse(r))
    }

    /// `ι : k^dim → ambient`, columns are the basis vectors.
    pub fn embedding(&self) -> LinMap {
        LinMap::from_columns(self.field, Shape::flat(self.dim()), self.ambient.clone(), &self.basis())
    }

    /// Coordinates in the RREF basis; exact on elements of the subspace,
    /// where coordinate `i` is the entry at the `i`-th pivot.
    pub fn coordinates(&self) -> LinMap {
        let mut m = LinMap::zeros(self.field, self.ambient.clone(), Shape::flat(self.dim()));
        for (i, p) in self.pivots().into_iter().enumerate() {
            m.set(i, p, self.field.one());
        }
        m
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon();
        for r in &other.rows {
            e.insert(r);
        }
        Subspace { field: self.field, ambient: self.ambient.clone(), rows: e.into_rows() }
    }

    /// Vectors annihilated by every basis row (the orthogonal complement for the
    /// standard bilinear form).
    pub fn annihilator(&self) -> Subspace {
        let null = nullspace_from_rref(self.field, &self.rows, self.ambient.dim());
        Subspace::from_sparse(self.field, self.ambient.clone(), &null)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Image of this subspace under `f`.
    pub fn map(&self, f: &LinMap) -> Subspace {
        let vs: Vec<SparseVec> = self.basis().iter().map(|b| sparse_from_dense(&f.apply(b))).collect();
        Subspace::from_sparse(self.field, f.codomain().clone(), &vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_of_planes() {
        let q = FieldSpec::Rationals;
        let s = |v: &[i64]| v.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let u = Subspace::from_vectors(q, Shape::flat(3), &[s(&[1, 0, 0]), s(&[0, 1, 0])]);
        let w = Subspace::from_vectors(q, Shape::flat(3), &[s(&[0, 1, 0]), s(&[0, 0, 1])]);
        let i = u.intersection(&w);
        assert_eq!(i, Subspace::from_vectors(q, Shape::flat(3), &[s(&[0, 2, 0])]));
        assert!(u.sum(&w).is_full());
        let c = u.coordinates();
        assert_eq!(c.apply(&s(&[3, 4, 0])), s(&[3, 4]));
    }
}
