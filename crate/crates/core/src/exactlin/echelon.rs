//! Sparse vectors and an incrementally maintained reduced row echelon form.

use super::scalar::{FieldSpec, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense(field: FieldSpec, v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `x + c·y`
pub fn axpy(x: &SparseVec, c: &Scalar, y: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return x.clone();
    }
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, c * &y[j].1));
            j += 1;
        } else {
            let s = &x[i].1 + &(c * &y[j].1);
            if !s.is_zero() {
                out.push((x[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, c * x)).collect()
}

pub fn entry(v: &SparseVec, index: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &v[k].1)
}

/// Reduced row echelon form built one row at a time. Every stored row has
/// a leading 1 and zeros in every other row's pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_of_col: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating all pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (col, coeff) in v {
            if let Some(r) = self.pivot_of_col[*col] {
                out = axpy(&out, &-coeff, &self.rows[r]);
            }
        }
        out
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let w = self.reduce(v);
        let Some((pivot, lead)) = w.first().cloned() else {
            return false;
        };
        let w = scale(&w, &lead.inv().expect("nonzero lead"));
        for row in self.rows.iter_mut() {
            if let Some(c) = entry(row, pivot).cloned() {
                *row = axpy(row, &-c, &w);
            }
        }
        self.pivot_of_col[pivot] = Some(self.rows.len());
        self.rows.push(w);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Rows sorted by pivot column (canonical RREF).
    pub fn into_rows(self) -> Vec<SparseVec> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        rows
    }

    pub fn rows_sorted(&self) -> Vec<SparseVec> {
        self.clone().into_rows()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }
}

/// Basis of `{x : Σ_j row_i[j] x_j = 0 ∀i}` from rows already in RREF.
pub fn nullspace_from_rref(field: FieldSpec, rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut pivot_row = vec![None; ncols];
    for (r, row) in rows.iter().enumerate() {
        pivot_row[row[0].0] = Some(r);
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&j| pivot_row[j].is_none()) {
        let mut v: SparseVec = Vec::new();
        for row in rows {
            if let Some(c) = entry(row, free) {
                v.push((row[0].0, -c));
            }
        }
        v.push((free, field.one()));
        v.sort_by_key(|(i, _)| *i);
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_keeps_rref() {
        let q = FieldSpec::Rationals;
        let mut e = Echelon::new(3);
        assert!(e.insert(&vec![(0, q.from_i64(2)), (1, q.from_i64(2))]));
        assert!(e.insert(&vec![(1, q.from_i64(1)), (2, q.from_i64(1))]));
        assert!(!e.insert(&vec![(0, q.from_i64(1)), (2, q.from_i64(-1))]));
        let rows = e.into_rows();
        assert_eq!(rows[0], vec![(0, q.one()), (2, q.from_i64(-1))]);
        assert_eq!(rows[1], vec![(1, q.one()), (2, q.one())]);
    }
}
