//! Finite-dimensional algebras, coalgebras, modules and comodules given by
//! structure constants, with law checkers.

use crate::error::{Error, Result};
use crate::exactlin::{tensor_all, FieldSpec, LinMap, Scalar, Shape};
use crate::report::Report;
use crate::weak_hopf::WeakBialgebra;

fn expect_size(m: &LinMap, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::DimensionMismatch(format!(
            "{what}: expected {rows}x{cols} matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn flat_shape(dims: &[usize]) -> Shape {
    Shape::new(dims.to_vec())
}

/// The permutation map on `factors` sending input factor `perm[j]` to output slot `j`.
pub(crate) fn perm(field: FieldSpec, factors: &[usize], perm: &[usize]) -> LinMap {
    LinMap::permutation(field, &Shape::new(factors.to_vec()), perm)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    dim: usize,
    mul: LinMap,
    unit: LinMap,
}

impl FinAlgebra {
    /// Checks sizes only.
    pub fn unchecked(mul: LinMap, unit: LinMap) -> Result<Self> {
        let dim = unit.rows();
        if dim == 0 {
            return Err(Error::DimensionMismatch("algebra of dimension 0".into()));
        }
        expect_size(&mul, dim, dim * dim, "algebra multiplication")?;
        expect_size(&unit, dim, 1, "algebra unit")?;
        let mul = mul.reshaped(flat_shape(&[dim, dim]), Shape::flat(dim));
        let unit = unit.reshaped(Shape::scalar(), Shape::flat(dim));
        Ok(FinAlgebra { dim, mul, unit })
    }

    /// Checks sizes and every algebra law.
    pub fn new(mul: LinMap, unit: LinMap) -> Result<Self> {
        let a = FinAlgebra::unchecked(mul, unit)?;
        check_algebra(&a).into_invalid("algebra")?;
        Ok(a)
    }

    /// From a product table `e_i e_j = table(i, j)` and the unit's coordinates.
    pub fn from_table(
        field: FieldSpec,
        dim: usize,
        table: impl Fn(usize, usize) -> Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let cols: Vec<Vec<Scalar>> = (0..dim * dim).map(|k| table(k / dim, k % dim)).collect();
        let mul = LinMap::from_columns(field, flat_shape(&[dim, dim]), Shape::flat(dim), &cols);
        FinAlgebra::new(mul, LinMap::vector(field, Shape::flat(dim), &unit))
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: FieldSpec) -> Self {
        FinAlgebra::unchecked(LinMap::eye(field, 1), LinMap::eye(field, 1)).expect("sizes")
    }

    pub fn field(&self) -> FieldSpec {
        self.mul.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self) -> &LinMap {
        &self.mul
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn id(&self) -> LinMap {
        LinMap::eye(self.field(), self.dim)
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let f = self.field();
        (0..self.dim).map(|j| if i == j { f.one() } else { f.zero() }).collect()
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let n = Shape::flat(self.dim);
        let ab = LinMap::vector(f, n.clone(), a).tensor(&LinMap::vector(f, n, b));
        (&self.mul * &ab).column(0)
    }

    /// `x ↦ a·x`
    pub fn left_mul(&self, a: &[Scalar]) -> LinMap {
        let v = LinMap::vector(self.field(), Shape::flat(self.dim), a);
        &self.mul * &v.tensor(&self.id())
    }

    /// `x ↦ x·a`
    pub fn right_mul(&self, a: &[Scalar]) -> LinMap {
        let v = LinMap::vector(self.field(), Shape::flat(self.dim), a);
        &self.mul * &self.id().tensor(&v)
    }
}

pub fn check_algebra(a: &FinAlgebra) -> Report {
    let mut r = Report::new();
    let (m, u, id) = (a.mul(), a.unit(), a.id());
    r.law("assoc", &(m * &m.tensor(&id)), &(m * &id.tensor(m)));
    r.law("unit.left", &(m * &u.tensor(&id)), &id);
    r.law("unit.right", &(m * &id.tensor(u)), &id);
    r.dim("dim", a.dim());
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCoalgebra {
    dim: usize,
    comul: LinMap,
    counit: LinMap,
}

impl FinCoalgebra {
    pub fn unchecked(comul: LinMap, counit: LinMap) -> Result<Self> {
        let dim = counit.cols();
        if dim == 0 {
            return Err(Error::DimensionMismatch("coalgebra of dimension 0".into()));
        }
        expect_size(&comul, dim * dim, dim, "coalgebra comultiplication")?;
        expect_size(&counit, 1, dim, "coalgebra counit")?;
        let comul = comul.reshaped(Shape::flat(dim), flat_shape(&[dim, dim]));
        let counit = counit.reshaped(Shape::flat(dim), Shape::scalar());
        Ok(FinCoalgebra { dim, comul, counit })
    }

    pub fn new(comul: LinMap, counit: LinMap) -> Result<Self> {
        let c = FinCoalgebra::unchecked(comul, counit)?;
        check_coalgebra(&c).into_invalid("coalgebra")?;
        Ok(c)
    }

    /// From `Δ(e_k) = Σ coeff·e_i⊗e_j` listed as triples per basis element.
    pub fn from_triples(field: FieldSpec, dim: usize, comul: &[Vec<(usize, usize, Scalar)>], counit: Vec<Scalar>) -> Result<Self> {
        let mut d = LinMap::zeros(field, Shape::flat(dim), flat_shape(&[dim, dim]));
        for (k, terms) in comul.iter().enumerate() {
            for (i, j, x) in terms {
                let row = i * dim + j;
                let cur = d.get(row, k).clone();
                d.set(row, k, &cur + x);
            }
        }
        FinCoalgebra::new(d, LinMap::covector(field, Shape::flat(dim), &counit))
    }

    pub fn ground(field: FieldSpec) -> Self {
        FinCoalgebra::unchecked(LinMap::eye(field, 1), LinMap::eye(field, 1)).expect("sizes")
    }

    pub fn field(&self) -> FieldSpec {
        self.comul.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comul(&self) -> &LinMap {
        &self.comul
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn id(&self) -> LinMap {
        LinMap::eye(self.field(), self.dim)
    }

    /// `Δ²` into `C⊗C⊗C`.
    pub fn comul2(&self) -> LinMap {
        &self.comul.tensor(&self.id()) * &self.comul
    }
}

pub fn check_coalgebra(c: &FinCoalgebra) -> Report {
    let mut r = Report::new();
    let (d, e, id) = (c.comul(), c.counit(), c.id());
    r.law("coassoc", &(&d.tensor(&id) * d), &(&id.tensor(d) * d));
    r.law("counit.left", &(&e.tensor(&id) * d), &id);
    r.law("counit.right", &(&id.tensor(e) * d), &id);
    r.dim("dim", c.dim());
    r
}

/// `ρ : M → M⊗C`
#[derive(Clone, Debug)]
pub struct RightComodule {
    pub coalg: FinCoalgebra,
    pub coaction: LinMap,
}

/// `ρ : M → C⊗M`
#[derive(Clone, Debug)]
pub struct LeftComodule {
    pub coalg: FinCoalgebra,
    pub coaction: LinMap,
}

/// `act : M⊗A → M`
#[derive(Clone, Debug)]
pub struct RightModule {
    pub alg: FinAlgebra,
    pub action: LinMap,
}

impl RightComodule {
    pub fn new(coalg: FinCoalgebra, coaction: LinMap) -> Result<Self> {
        let m = coaction.cols();
        expect_size(&coaction, m * coalg.dim(), m, "right coaction")?;
        Ok(RightComodule { coalg, coaction })
    }

    pub fn dim(&self) -> usize {
        self.coaction.cols()
    }
}

impl LeftComodule {
    pub fn new(coalg: FinCoalgebra, coaction: LinMap) -> Result<Self> {
        let m = coaction.cols();
        expect_size(&coaction, m * coalg.dim(), m, "left coaction")?;
        Ok(LeftComodule { coalg, coaction })
    }

    pub fn dim(&self) -> usize {
        self.coaction.cols()
    }
}

impl RightModule {
    pub fn new(alg: FinAlgebra, action: LinMap) -> Result<Self> {
        let m = action.rows();
        expect_size(&action, m, m * alg.dim(), "right action")?;
        Ok(RightModule { alg, action })
    }

    pub fn dim(&self) -> usize {
        self.action.rows()
    }
}

pub fn check_right_comodule(m: &RightComodule) -> Report {
    let mut r = Report::new();
    let f = m.coalg.field();
    let (rho, idm, idc) = (&m.coaction, LinMap::eye(f, m.dim()), m.coalg.id());
    r.law("coassoc", &(&rho.tensor(&idc) * rho), &(&idm.tensor(m.coalg.comul()) * rho));
    r.law("counit", &(&idm.tensor(m.coalg.counit()) * rho), &idm);
    r
}

pub fn check_left_comodule(m: &LeftComodule) -> Report {
    let mut r = Report::new();
    let f = m.coalg.field();
    let (rho, idm, idc) = (&m.coaction, LinMap::eye(f, m.dim()), m.coalg.id());
    r.law("coassoc", &(&idc.tensor(rho) * rho), &(&m.coalg.comul().tensor(&idm) * rho));
    r.law("counit", &(&m.coalg.counit().tensor(&idm) * rho), &idm);
    r
}

pub fn check_right_module(m: &RightModule) -> Report {
    let mut r = Report::new();
    let f = m.alg.field();
    let (act, idm, ida) = (&m.action, LinMap::eye(f, m.dim()), m.alg.id());
    r.law("assoc", &(act * &act.tensor(&ida)), &(act * &idm.tensor(m.alg.mul())));
    r.law("unit", &(act * &idm.tensor(m.alg.unit())), &idm);
    r
}

/// The convolution algebra `C*` in the dual basis: `e*_i e*_j` has value
/// at `e_k` equal to the `e_i⊗e_j` coefficient of `Δ(e_k)`.
pub fn dual_algebra(c: &FinCoalgebra) -> Result<FinAlgebra> {
    FinAlgebra::new(c.comul().transpose(), c.counit().transpose())
}

/// Turns `ρ : N → C⊗N` into the right `C*`-action `n·f = Σ f(n₋₁) n₀`.
pub fn left_comodule_to_right_dual_module(n: &LeftComodule) -> Result<RightModule> {
    check_left_comodule(n).into_invalid("left comodule")?;
    let (d, c) = (n.dim(), n.coalg.dim());
    let f = n.coalg.field();
    let rho = &n.coaction;
    let action = LinMap::from_fn(f, flat_shape(&[d, c]), Shape::flat(d), |m, jk| {
        let (j, k) = (jk / c, jk % c);
        rho.get(k * d + m, j).clone()
    });
    RightModule::new(dual_algebra(&n.coalg)?, action)
}

/// Right comodule algebra conditions for `ρ : A → A⊗H` over a weak bialgebra.
/// Besides each condition, records whether the conditions equivalent to
/// `comal.pl` under `comal.m` agree with each other.
pub fn check_comodule_algebra(h: &WeakBialgebra, a: &FinAlgebra, rho: &LinMap) -> Report {
    let mut r = Report::new();
    let f = a.field();
    let (na, nh) = (a.dim(), h.dim());
    if rho.rows() != na * nh || rho.cols() != na {
        r.flag_with_note("shape", false, format!("coaction must be {}x{}", na * nh, na));
        return r;
    }
    let (ida, idh) = (a.id(), h.alg.id());
    let comod = RightComodule { coalg: h.coalg.clone(), coaction: rho.clone() };
    r.absorb("comodule", &check_right_comodule(&comod));

    let mu = a.mul();
    let muh = h.alg.mul();
    let p0213 = perm(f, &[na, nh, na, nh], &[0, 2, 1, 3]);
    r.law("comal.m", &(rho * mu), &(&(&mu.tensor(muh) * &p0213) * &rho.tensor(rho)));

    let g = rho * a.unit();
    let pis = h.pi_maps_raw();
    // a ↦ Σ 1₀ a ⊗ 1₁
    let g_then_a = &(&mu.tensor(&idh) * &perm(f, &[na, nh, na], &[0, 2, 1])) * &g.tensor(&ida);
    // a ↦ Σ a 1₀ ⊗ 1₁
    let a_then_g = &mu.tensor(&idh) * &ida.tensor(&g);
    let mut equiv = Vec::new();
    equiv.push(r.law("comal.pl", &(&ida.tensor(&pis.pi_l) * rho), &g_then_a));

    let d1 = h.coalg.comul() * h.alg.unit();
    let rho2 = &rho.tensor(&idh) * &g;
    let g_d1 = g.tensor(&d1);
    let amh = ida.tensor(muh).tensor(&idh);
    equiv.push(r.law("one.1", &rho2, &(&amh * &g_d1)));
    equiv.push(r.law("one.2", &rho2, &(&(&amh * &perm(f, &[na, nh, nh, nh], &[0, 2, 1, 3])) * &g_d1)));
    equiv.push(r.law("comal.pr", &(&ida.tensor(&pis.pibar_r) * rho), &a_then_g));
    equiv.push(r.law("comal.pr.one", &(&ida.tensor(&pis.pibar_r) * &g), &g));
    equiv.push(r.law("comal.pl.one", &(&ida.tensor(&pis.pi_l) * &g), &g));
    let m_ok = r.ok("comal.m");
    let agree = !m_ok || equiv.iter().all(|&b| b == equiv[0]);
    r.flag("equivalent-forms-agree", agree);
    r
}

/// Right module coalgebra conditions for `act : C⊗H → C`.
pub fn check_module_coalgebra(h: &WeakBialgebra, c: &FinCoalgebra, act: &LinMap) -> Report {
    let mut r = Report::new();
    let f = c.field();
    let (nc, nh) = (c.dim(), h.dim());
    if act.rows() != nc || act.cols() != nc * nh {
        r.flag_with_note("shape", false, format!("action must be {}x{}", nc, nc * nh));
        return r;
    }
    let module = RightModule { alg: h.alg.clone(), action: act.clone() };
    r.absorb("module", &check_right_module(&module));
    let (idc, idh) = (c.id(), h.alg.id());
    let dh = h.coalg.comul();
    let lhs = c.comul() * act;
    let rhs = &(&act.tensor(act) * &perm(f, &[nc, nc, nh, nh], &[0, 2, 1, 3])) * &c.comul().tensor(dh);
    r.law("modco.com", &lhs, &rhs);
    let ec_act = c.counit() * act;
    let eps_mu = h.coalg.counit() * h.alg.mul();
    let lhs = &ec_act * &act.tensor(&idh);
    let rhs = tensor_all(&[&ec_act, &eps_mu]);
    let rhs = &(&rhs * &perm(f, &[nc, nh, nh, nh], &[0, 2, 1, 3])) * &tensor_all(&[&idc, dh, &idh]);
    r.law("modco.counit", &lhs, &rhs);
    r
}
