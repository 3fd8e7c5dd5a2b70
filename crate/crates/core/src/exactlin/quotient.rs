use std::collections::BTreeMap;

use super::echelon::{sparse_from_dense, SparseVec};
use super::linmap::LinMap;
use super::scalar::{FieldSpec, Scalar};
use super::shape::Shape;
use super::subspace::Subspace;

/// `ambient / relators`, with coordinates indexed by the non-pivot columns
/// of the relator RREF.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    relators: Subspace,
    proj: LinMap,
    sect: LinMap,
    free_cols: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(relators: Subspace) -> Self {
        let field = relators.field();
        let ambient = relators.ambient().clone();
        let n = ambient.dim();
        let mut slot = vec![None; n];
        let pivots = relators.pivots();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free_cols: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        for (j, &c) in free_cols.iter().enumerate() {
            slot[c] = Some(j);
        }
        let q = Shape::flat(free_cols.len());
        let mut proj = LinMap::zeros(field, ambient.clone(), q.clone());
        for (j, &c) in free_cols.iter().enumerate() {
            proj.set(j, c, field.one());
        }
        for row in relators.rows() {
            let p = row[0].0;
            for (c, x) in &row[1..] {
                let j = slot[*c].expect("RREF rows vanish on other pivots");
                proj.set(j, p, -x);
            }
        }
        let mut sect = LinMap::zeros(field, q, ambient);
        for (j, &c) in free_cols.iter().enumerate() {
            sect.set(c, j, field.one());
        }
        QuotientSpace { relators, proj, sect, free_cols }
    }

    pub fn from_vectors(field: FieldSpec, ambient: Shape, relators: &[SparseVec]) -> Self {
        QuotientSpace::new(Subspace::from_sparse(field, ambient, relators))
    }

    pub fn field(&self) -> FieldSpec {
        self.relators.field()
    }

    pub fn ambient(&self) -> &Shape {
        self.relators.ambient()
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn shape(&self) -> Shape {
        Shape::flat(self.dim())
    }

    pub fn relators(&self) -> &Subspace {
        &self.relators
    }

    pub fn proj(&self) -> &LinMap {
        &self.proj
    }

    pub fn sect(&self) -> &LinMap {
        &self.sect
    }

    /// Projection of a sparse ambient vector.
    pub fn project_sparse(&self, v: &SparseVec) -> Vec<Scalar> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim()];
        for (c, x) in v {
            for j in 0..self.dim() {
                let a = self.proj.get(j, *c);
                if !a.is_zero() {
                    out[j] = &out[j] + &(a * x);
                }
            }
        }
        out
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.project_sparse(&sparse_from_dense(v))
    }

    /// Whether `f : ambient → W` vanishes on every relator, i.e. descends.
    pub fn kills(&self, f: &LinMap) -> bool {
        self.relators.basis().iter().all(|r| f.apply(r).iter().all(Scalar::is_zero))
    }

    /// The map induced on the quotient by `f`, after checking it descends.
    pub fn descend(&self, f: &LinMap) -> Option<LinMap> {
        self.kills(f).then(|| f * &self.sect)
    }
}

/// Balancing relators on `M₁⊗…⊗M_k` between slots `slot` and `slot + 1`:
/// for each pair `(R, L)` and basis tuple `x`, the vector
/// `…⊗R(x_s)⊗x_{s+1}⊗… − …⊗x_s⊗L(x_{s+1})⊗…`.
pub fn balanced_relators(field: FieldSpec, dims: &[usize], slot: usize, pairs: &[(LinMap, LinMap)]) -> Vec<SparseVec> {
    let shape = Shape::new(dims.to_vec());
    let cols: Vec<(Vec<SparseVec>, Vec<SparseVec>)> =
        pairs.iter().map(|(r, l)| (r.sparse_columns(), l.sparse_columns())).collect();
    let mut out = Vec::new();
    for i in 0..shape.dim() {
        let idx = shape.decode(i);
        for (rc, lc) in &cols {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            let mut add = |pos: usize, j: usize, x: &Scalar| {
                let mut t = idx.clone();
                t[pos] = j;
                let k = shape.encode(&t);
                let e = acc.entry(k).or_insert_with(|| field.zero());
                *e = &*e + x;
            };
            for (j, x) in &rc[idx[slot]] {
                add(slot, *j, x);
            }
            for (j, x) in &lc[idx[slot + 1]] {
                add(slot + 1, *j, &-x);
            }
            let v: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            if !v.is_empty() {
                out.push(v);
            }
        }
    }
    out
}
