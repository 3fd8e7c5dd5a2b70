//! The JSON structure file: every section optional, scalars as strings.

use serde::{Deserialize, Serialize};

use crate::catalog::Bundle;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, LinMap, Scalar, Shape};
use crate::structures::{FinAlgebra, FinCoalgebra};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<CoalgebraSection>,
    #[serde(default, rename = "psiR", skip_serializing_if = "Option::is_none")]
    pub psi_r: Option<MatrixSection>,
    #[serde(default, rename = "psiL", skip_serializing_if = "Option::is_none")]
    pub psi_l: Option<MatrixSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<MatrixSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<MatrixSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<MatrixSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra: Option<SubalgebraSection>,
}

/// `mul[i][j]` holds the coordinates of `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub dim: usize,
    pub mul: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
}

/// `comul[k]` lists `[i, j, coeff]` for `Δ(e_k) = Σ coeff e_i⊗e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraSection {
    pub dim: usize,
    pub comul: Vec<Vec<(usize, usize, String)>>,
    pub counit: Vec<String>,
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSection {
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraSection {
    pub basis: Vec<Vec<String>>,
}

pub fn parse_json(text: &str) -> Result<StructureFile> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| Error::Parse(format!("{}: {}", e.path(), e.inner())))
}

fn detail(e: Error) -> String {
    match e {
        Error::Parse(m) => m,
        other => other.to_string(),
    }
}

fn scalars(field: FieldSpec, xs: &[String], path: &str) -> Result<Vec<Scalar>> {
    xs.iter()
        .enumerate()
        .map(|(i, s)| field.parse(s).map_err(|e| Error::Parse(format!("{path}[{i}]: {}", detail(e)))))
        .collect()
}

fn expect_len(len: usize, want: usize, path: &str) -> Result<()> {
    if len == want {
        Ok(())
    } else {
        Err(Error::Parse(format!("{path}: expected {want} entries, found {len}")))
    }
}

fn matrix(field: FieldSpec, m: &MatrixSection, domain: Shape, codomain: Shape, path: &str) -> Result<LinMap> {
    expect_len(m.matrix.len(), codomain.dim(), &format!("{path}.matrix"))?;
    let mut rows = Vec::with_capacity(m.matrix.len());
    for (r, row) in m.matrix.iter().enumerate() {
        let p = format!("{path}.matrix[{r}]");
        expect_len(row.len(), domain.dim(), &p)?;
        rows.push(scalars(field, row, &p)?);
    }
    Ok(LinMap::from_fn(field, domain, codomain, |r, c| rows[r][c].clone()))
}

fn section_dim(dim: Option<usize>, name: &str) -> Result<usize> {
    dim.ok_or_else(|| Error::Parse(format!("section {name} needs the algebra and coalgebra sections")))
}

impl StructureFile {
    /// Typed structures; laws are not checked here.
    pub fn to_bundle(&self) -> Result<Bundle> {
        let f = self.field.validate().map_err(|e| Error::Parse(format!("field: {}", detail(e))))?;
        let mut b = Bundle::empty(f);
        if let Some(a) = &self.algebra {
            let n = a.dim;
            expect_len(a.mul.len(), n, "algebra.mul")?;
            let mut cols = Vec::with_capacity(n * n);
            for (i, row) in a.mul.iter().enumerate() {
                expect_len(row.len(), n, &format!("algebra.mul[{i}]"))?;
                for (j, v) in row.iter().enumerate() {
                    let p = format!("algebra.mul[{i}][{j}]");
                    expect_len(v.len(), n, &p)?;
                    cols.push(scalars(f, v, &p)?);
                }
            }
            expect_len(a.unit.len(), n, "algebra.unit")?;
            let unit = scalars(f, &a.unit, "algebra.unit")?;
            let mul = LinMap::from_columns(f, Shape::new(vec![n, n]), Shape::flat(n), &cols);
            b.algebra = Some(FinAlgebra::unchecked(mul, LinMap::vector(f, Shape::flat(n), &unit))?);
        }
        if let Some(c) = &self.coalgebra {
            let n = c.dim;
            expect_len(c.comul.len(), n, "coalgebra.comul")?;
            let mut d = LinMap::zeros(f, Shape::flat(n), Shape::new(vec![n, n]));
            for (k, terms) in c.comul.iter().enumerate() {
                for (t, (i, j, x)) in terms.iter().enumerate() {
                    let p = format!("coalgebra.comul[{k}][{t}]");
                    if *i >= n || *j >= n {
                        return Err(Error::Parse(format!("{p}: index out of range")));
                    }
                    let x = f.parse(x).map_err(|e| Error::Parse(format!("{p}: {}", detail(e))))?;
                    let row = i * n + j;
                    let cur = d.get(row, k).clone();
                    d.set(row, k, &cur + &x);
                }
            }
            expect_len(c.counit.len(), n, "coalgebra.counit")?;
            let counit = scalars(f, &c.counit, "coalgebra.counit")?;
            b.coalgebra = Some(FinCoalgebra::unchecked(d, LinMap::covector(f, Shape::flat(n), &counit))?);
        }
        let na = b.algebra.as_ref().map(FinAlgebra::dim);
        let nc = b.coalgebra.as_ref().map(FinCoalgebra::dim);
        if let Some(m) = &self.psi_r {
            let (na, nc) = (section_dim(na, "psiR")?, section_dim(nc, "psiR")?);
            b.psi_r = Some(matrix(f, m, Shape::new(vec![nc, na]), Shape::new(vec![na, nc]), "psiR")?);
        }
        if let Some(m) = &self.psi_l {
            let (na, nc) = (section_dim(na, "psiL")?, section_dim(nc, "psiL")?);
            b.psi_l = Some(matrix(f, m, Shape::new(vec![na, nc]), Shape::new(vec![nc, na]), "psiL")?);
        }
        if let Some(m) = &self.coaction {
            let (na, nc) = (section_dim(na, "coaction")?, section_dim(nc, "coaction")?);
            b.coaction = Some(matrix(f, m, Shape::flat(na), Shape::new(vec![na, nc]), "coaction")?);
        }
        if let Some(m) = &self.action {
            let (na, nc) = (section_dim(na, "action")?, section_dim(nc, "action")?);
            b.action = Some(matrix(f, m, Shape::new(vec![nc, na]), Shape::flat(nc), "action")?);
        }
        if let Some(m) = &self.antipode {
            let n = section_dim(na, "antipode")?;
            b.antipode = Some(matrix(f, m, Shape::flat(n), Shape::flat(n), "antipode")?);
        }
        if let Some(s) = &self.subalgebra {
            let n = section_dim(na, "subalgebra")?;
            let mut basis = Vec::new();
            for (i, v) in s.basis.iter().enumerate() {
                let p = format!("subalgebra.basis[{i}]");
                expect_len(v.len(), n, &p)?;
                basis.push(scalars(f, v, &p)?);
            }
            b.subalgebra = Some(basis);
        }
        Ok(b)
    }

    pub fn from_bundle(b: &Bundle) -> Self {
        let strs = |v: &[Scalar]| v.iter().map(Scalar::to_string).collect::<Vec<_>>();
        let mat = |m: &LinMap| MatrixSection { matrix: (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect()).collect() };
        StructureFile {
            field: b.field,
            algebra: b.algebra.as_ref().map(|a| {
                let n = a.dim();
                let m = a.mul();
                AlgebraSection {
                    dim: n,
                    mul: (0..n).map(|i| (0..n).map(|j| strs(&m.column(i * n + j))).collect()).collect(),
                    unit: strs(&a.one()),
                }
            }),
            coalgebra: b.coalgebra.as_ref().map(|c| {
                let n = c.dim();
                let d = c.comul();
                CoalgebraSection {
                    dim: n,
                    comul: (0..n)
                        .map(|k| {
                            (0..n * n)
                                .filter(|&row| !d.get(row, k).is_zero())
                                .map(|row| (row / n, row % n, d.get(row, k).to_string()))
                                .collect()
                        })
                        .collect(),
                    counit: (0..n).map(|k| c.counit().get(0, k).to_string()).collect(),
                }
            }),
            psi_r: b.psi_r.as_ref().map(mat),
            psi_l: b.psi_l.as_ref().map(mat),
            coaction: b.coaction.as_ref().map(mat),
            action: b.action.as_ref().map(mat),
            antipode: b.antipode.as_ref().map(mat),
            subalgebra: b.subalgebra.as_ref().map(|s| SubalgebraSection { basis: s.iter().map(|v| strs(v)).collect() }),
        }
    }
}
