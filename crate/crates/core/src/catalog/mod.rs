//! Concrete structures: groupoid algebras, group algebras, matrix and
//! grouplike coalgebras, named demos and random weak entwinings.

mod subalgebra;

pub use subalgebra::{a_r_readings, comodule_subalgebra_pipeline, ARReadings};

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{solve_constrained_map, FieldSpec, LinExpr, LinMap, Scalar, Shape};
use crate::structures::{FinAlgebra, FinCoalgebra};
use crate::weak_entwining::{check_ll, check_rr, InvertibleWeakEntwining, WeakEntwiningLL, WeakEntwiningRR};
use crate::weak_hopf::{doi_psi_l, doi_psi_r, WeakBialgebra, WeakHopf};

/// A finite groupoid. `product[g][h]` is `g∘h` when `source(g) = target(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidSpec {
    pub objects: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub product: Vec<Vec<Option<usize>>>,
    pub inverse: Vec<usize>,
    pub identity: Vec<usize>,
}

impl GroupoidSpec {
    /// One object, morphisms from a group table with identity `0`.
    pub fn group(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table[g].get(h) == Some(&0)).ok_or_else(|| Error::Parse(format!("element {g} has no inverse"))))
            .collect::<Result<Vec<_>>>()?;
        let g = GroupoidSpec {
            objects: 1,
            source: vec![0; n],
            target: vec![0; n],
            product: table.iter().map(|row| row.iter().map(|&x| Some(x)).collect()).collect(),
            inverse,
            identity: vec![0],
        };
        g.validate()?;
        Ok(g)
    }

    /// `n` objects and only identity morphisms.
    pub fn discrete(n: usize) -> Self {
        GroupoidSpec {
            objects: n,
            source: (0..n).collect(),
            target: (0..n).collect(),
            product: (0..n).map(|g| (0..n).map(|h| (g == h).then_some(g)).collect()).collect(),
            inverse: (0..n).collect(),
            identity: (0..n).collect(),
        }
    }

    /// One morphism `g_ij : j → i` for each ordered pair; index `i·n + j`.
    pub fn pair(n: usize) -> Self {
        let m = n * n;
        GroupoidSpec {
            objects: n,
            source: (0..m).map(|g| g % n).collect(),
            target: (0..m).map(|g| g / n).collect(),
            product: (0..m)
                .map(|g| (0..m).map(|h| (g % n == h / n).then_some((g / n) * n + h % n)).collect())
                .collect(),
            inverse: (0..m).map(|g| (g % n) * n + g / n).collect(),
            identity: (0..n).map(|i| i * n + i).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Parse(format!("invalid groupoid: {m}")));
        let n = self.len();
        if self.target.len() != n || self.product.len() != n || self.inverse.len() != n || self.identity.len() != self.objects {
            return bad("table sizes differ".into());
        }
        for g in 0..n {
            if self.product[g].len() != n {
                return bad(format!("row {g} of the composition table"));
            }
            for h in 0..n {
                let defined = self.source[g] == self.target[h];
                match self.product[g][h] {
                    Some(k) if !defined || k >= n || self.source[k] != self.source[h] || self.target[k] != self.target[g] => {
                        return bad(format!("composite {g}∘{h}"));
                    }
                    None if defined => return bad(format!("composite {g}∘{h} missing")),
                    _ => {}
                }
            }
        }
        for (o, &e) in self.identity.iter().enumerate() {
            if self.source[e] != o || self.target[e] != o {
                return bad(format!("identity of object {o}"));
            }
        }
        for g in 0..n {
            let (s, t) = (self.source[g], self.target[g]);
            if self.product[g][self.identity[s]] != Some(g) || self.product[self.identity[t]][g] != Some(g) {
                return bad(format!("identities do not fix {g}"));
            }
            let inv = self.inverse[g];
            if self.product[g][inv] != Some(self.identity[t]) || self.product[inv][g] != Some(self.identity[s]) {
                return bad(format!("inverse of {g}"));
            }
            for h in 0..n {
                for k in 0..n {
                    if let (Some(gh), Some(hk)) = (self.product[g][h], self.product[h][k]) {
                        if self.product[gh][k] != self.product[g][hk] {
                            return bad(format!("associativity at ({g},{h},{k})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()
}

/// The groupoid algebra with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`,
/// validated as a weak Hopf algebra.
pub fn groupoid_algebra(g: &GroupoidSpec, field: FieldSpec) -> Result<WeakHopf> {
    g.validate()?;
    let n = g.len();
    let mut one = vec![field.zero(); n];
    for &e in &g.identity {
        one[e] = field.one();
    }
    let alg = FinAlgebra::from_table(
        field,
        n,
        |a, b| match g.product[a][b] {
            Some(k) => unit_vec(field, n, k),
            None => vec![field.zero(); n],
        },
        one,
    )?;
    let coalg = grouplike_coalgebra(n, field)?;
    let wb = WeakBialgebra::new(alg, coalg)?;
    let s = LinMap::from_fn(field, Shape::flat(n), Shape::flat(n), |r, c| {
        if g.inverse[c] == r {
            field.one()
        } else {
            field.zero()
        }
    });
    WeakHopf::new(wb, s)
}

pub fn group_algebra(table: &[Vec<usize>], field: FieldSpec) -> Result<WeakHopf> {
    groupoid_algebra(&GroupoidSpec::group(table)?, field)
}

/// `k^n` with orthogonal idempotents `e_i`, each grouplike.
pub fn diagonal_weak_hopf(n: usize, field: FieldSpec) -> Result<WeakHopf> {
    groupoid_algebra(&GroupoidSpec::discrete(n), field)
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// `Δ(e_i) = e_i⊗e_i`, `ε(e_i) = 1`.
pub fn grouplike_coalgebra(n: usize, field: FieldSpec) -> Result<FinCoalgebra> {
    let comul: Vec<_> = (0..n).map(|i| vec![(i, i, field.one())]).collect();
    FinCoalgebra::from_triples(field, n, &comul, vec![field.one(); n])
}

/// `Δ(e_ij) = Σ_k e_ik⊗e_kj`, `ε(e_ij) = δ_ij`; `e_ij` has index `i·n + j`.
pub fn matrix_coalgebra(n: usize, field: FieldSpec) -> Result<FinCoalgebra> {
    let comul: Vec<_> = (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            (0..n).map(|k| (i * n + k, k * n + j, field.one())).collect()
        })
        .collect();
    let counit = (0..n * n).map(|ij| if ij / n == ij % n { field.one() } else { field.zero() }).collect();
    FinCoalgebra::from_triples(field, n * n, &comul, counit)
}

/// The span of `1, x` with `Δx = x⊗1 + 1⊗x`, `εx = 0`.
pub fn dual_numbers_coalgebra(field: FieldSpec) -> Result<FinCoalgebra> {
    FinCoalgebra::from_triples(
        field,
        2,
        &[vec![(0, 0, field.one())], vec![(1, 0, field.one()), (0, 1, field.one())]],
        vec![field.one(), field.zero()],
    )
}

/// Divided powers `1, x, x⁽²⁾` with `Δx⁽ⁿ⁾ = Σ x⁽ⁱ⁾⊗x⁽ⁿ⁻ⁱ⁾`.
pub fn divided_power_coalgebra(field: FieldSpec) -> Result<FinCoalgebra> {
    let comul: Vec<_> = (0..3).map(|n| (0..=n).map(|i| (i, n - i, field.one())).collect()).collect();
    FinCoalgebra::from_triples(field, 3, &comul, vec![field.one(), field.zero(), field.zero()])
}

/// `k[x]/(x^n)`.
pub fn truncated_polynomial_algebra(n: usize, field: FieldSpec) -> Result<FinAlgebra> {
    FinAlgebra::from_table(
        field,
        n,
        |i, j| if i + j < n { unit_vec(field, n, i + j) } else { vec![field.zero(); n] },
        unit_vec(field, n, 0),
    )
}

/// Upper triangular 2×2 matrices on `E11, E12, E22`.
pub fn upper_triangular_algebra(field: FieldSpec) -> Result<FinAlgebra> {
    // (row, col) of each basis element
    let rc = [(0, 0), (0, 1), (1, 1)];
    FinAlgebra::from_table(
        field,
        3,
        |a, b| {
            let ((i, j), (k, l)) = (rc[a], rc[b]);
            if j == k {
                let idx = rc.iter().position(|&x| x == (i, l)).expect("upper triangular");
                unit_vec(field, 3, idx)
            } else {
                vec![field.zero(); 3]
            }
        },
        vec![field.one(), field.zero(), field.one()],
    )
}

/// Typed content of a structure file or demo. Laws are not assumed.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub field: FieldSpec,
    pub algebra: Option<FinAlgebra>,
    pub coalgebra: Option<FinCoalgebra>,
    pub psi_r: Option<LinMap>,
    pub psi_l: Option<LinMap>,
    pub coaction: Option<LinMap>,
    pub action: Option<LinMap>,
    pub antipode: Option<LinMap>,
    pub subalgebra: Option<Vec<Vec<Scalar>>>,
}

impl Bundle {
    pub fn empty(field: FieldSpec) -> Self {
        Bundle {
            field,
            algebra: None,
            coalgebra: None,
            psi_r: None,
            psi_l: None,
            coaction: None,
            action: None,
            antipode: None,
            subalgebra: None,
        }
    }

    pub fn from_weak_hopf(h: &WeakHopf) -> Self {
        Bundle {
            algebra: Some(h.alg().clone()),
            coalgebra: Some(h.coalg().clone()),
            antipode: Some(h.antipode.clone()),
            ..Bundle::empty(h.field())
        }
    }

    /// The weak Hopf algebra formed by the algebra, coalgebra and antipode.
    pub fn weak_hopf(&self) -> Result<WeakHopf> {
        let missing = |k: &str| Error::Parse(format!("missing section {k}"));
        let alg = self.algebra.clone().ok_or_else(|| missing("algebra"))?;
        let coalg = self.coalgebra.clone().ok_or_else(|| missing("coalgebra"))?;
        let s = self.antipode.clone().ok_or_else(|| missing("antipode"))?;
        WeakHopf::unchecked(WeakBialgebra::unchecked(alg, coalg)?, s)
    }

    /// The weak bialgebra formed by the algebra and coalgebra, if both exist
    /// and have equal dimensions.
    pub fn weak_bialgebra(&self) -> Result<WeakBialgebra> {
        let missing = |k: &str| Error::Parse(format!("missing section {k}"));
        let alg = self.algebra.clone().ok_or_else(|| missing("algebra"))?;
        let coalg = self.coalgebra.clone().ok_or_else(|| missing("coalgebra"))?;
        WeakBialgebra::unchecked(alg, coalg)
    }

    pub fn is_hopf_bundle(&self) -> bool {
        self.antipode.is_some()
    }

    /// Coaction `A → A⊗C`; defaults to `Δ` when the bundle is a weak Hopf algebra.
    pub fn coaction_or_default(&self) -> Option<LinMap> {
        self.coaction.clone().or_else(|| self.is_hopf_bundle().then(|| self.coalgebra.as_ref().map(|c| c.comul().clone())).flatten())
    }

    /// Action `C⊗H → C`; defaults to `μ` when the bundle is a weak Hopf algebra.
    pub fn action_or_default(&self) -> Option<LinMap> {
        self.action.clone().or_else(|| self.is_hopf_bundle().then(|| self.algebra.as_ref().map(|a| a.mul().clone())).flatten())
    }

    pub fn psi_r_or_default(&self) -> Option<LinMap> {
        if let Some(p) = &self.psi_r {
            return Some(p.clone());
        }
        let h = self.weak_hopf().ok()?;
        Some(doi_psi_r(&h.wb, h.alg(), &self.coaction_or_default()?, h.coalg(), &self.action_or_default()?))
    }

    pub fn psi_l_or_default(&self) -> Option<LinMap> {
        if let Some(p) = &self.psi_l {
            return Some(p.clone());
        }
        let h = self.weak_hopf().ok()?;
        let s_inv = h.antipode_inv.clone()?;
        Some(doi_psi_l(&h, &s_inv, h.alg(), &self.coaction_or_default()?, h.coalg(), &self.action_or_default()?))
    }

    /// `(ψ_R, ψ_L)` from the bundle, each side checked before pairing.
    pub fn invertible_entwining(&self) -> Result<InvertibleWeakEntwining> {
        let missing = |k: &str| Error::Parse(format!("missing section {k}"));
        let alg = self.algebra.clone().ok_or_else(|| missing("algebra"))?;
        let coalg = self.coalgebra.clone().ok_or_else(|| missing("coalgebra"))?;
        let psi_r = self.psi_r_or_default().ok_or_else(|| missing("psiR"))?;
        let psi_l = self.psi_l_or_default().ok_or_else(|| missing("psiL"))?;
        let r = WeakEntwiningRR::unchecked(alg.clone(), coalg.clone(), psi_r)?;
        check_rr(&r.a, &r.c, &r.psi).into_invalid("right-right weak entwining")?;
        let l = WeakEntwiningLL::unchecked(alg, coalg, psi_l)?;
        check_ll(&l.a, &l.c, &l.psi).into_invalid("left-left weak entwining")?;
        InvertibleWeakEntwining::new(r, l)
    }
}

pub const DEMO_NAMES: &[&str] =
    &["k", "kz2", "diag2", "diag3", "pairgroupoid2", "matrixcoalg2", "swap-diag2", "trivial-coaction"];

/// Idempotent coalgebra endomorphism of `k×k` collapsing onto `e₂`.
fn collapse_onto_second(field: FieldSpec) -> LinMap {
    LinMap::from_fn(field, Shape::flat(2), Shape::flat(2), |r, _| if r == 1 { field.one() } else { field.zero() })
}

pub fn demo(name: &str, field: FieldSpec) -> Result<Bundle> {
    let f = field;
    match name {
        "k" => Ok(Bundle::from_weak_hopf(&group_algebra(&cyclic_group_table(1), f)?)),
        "kz2" => Ok(Bundle::from_weak_hopf(&group_algebra(&cyclic_group_table(2), f)?)),
        "diag2" => Ok(Bundle::from_weak_hopf(&diagonal_weak_hopf(2, f)?)),
        "diag3" => Ok(Bundle::from_weak_hopf(&diagonal_weak_hopf(3, f)?)),
        "pairgroupoid2" => {
            // span{g₁₁, g₂₂}
            let identities = vec![unit_vec(f, 4, 0), unit_vec(f, 4, 3)];
            Ok(Bundle { subalgebra: Some(identities), ..Bundle::from_weak_hopf(&groupoid_algebra(&GroupoidSpec::pair(2), f)?) })
        }
        "matrixcoalg2" => Ok(Bundle { coalgebra: Some(matrix_coalgebra(2, f)?), ..Bundle::empty(f) }),
        "swap-diag2" => {
            // ψ(c⊗a) = a⊗φ(c): the flip followed by a collapse on the coalgebra leg
            let h = diagonal_weak_hopf(2, f)?;
            let flip = LinMap::swap(f, 2, 2);
            let psi = &h.alg().id().tensor(&collapse_onto_second(f)) * &flip;
            Ok(Bundle {
                algebra: Some(h.alg().clone()),
                coalgebra: Some(h.coalg().clone()),
                psi_r: Some(psi),
                coaction: Some(h.coalg().comul().clone()),
                ..Bundle::empty(f)
            })
        }
        "trivial-coaction" => {
            let a = diagonal_weak_hopf(2, f)?;
            let h = group_algebra(&cyclic_group_table(2), f)?;
            let rho = a.alg().id().tensor(h.alg().unit());
            let psi_r = doi_psi_r(&h.wb, a.alg(), &rho, h.coalg(), h.alg().mul());
            let s_inv = h.antipode_inv.clone().expect("group algebra antipode is invertible");
            let psi_l = doi_psi_l(&h, &s_inv, a.alg(), &rho, h.coalg(), h.alg().mul());
            Ok(Bundle {
                algebra: Some(a.alg().clone()),
                coalgebra: Some(h.coalg().clone()),
                psi_r: Some(psi_r),
                psi_l: Some(psi_l),
                coaction: Some(rho),
                ..Bundle::empty(f)
            })
        }
        _ => Err(Error::Parse(format!("unknown demo {name:?}; known: {}", DEMO_NAMES.join(", ")))),
    }
}

/// Small algebras of dimension at most 3 used for random sampling.
pub fn small_algebras(field: FieldSpec) -> Result<Vec<(String, FinAlgebra)>> {
    Ok(vec![
        ("k".into(), FinAlgebra::ground(field)),
        ("k×k".into(), diagonal_weak_hopf(2, field)?.alg().clone()),
        ("kZ2".into(), group_algebra(&cyclic_group_table(2), field)?.alg().clone()),
        ("k[x]/x²".into(), truncated_polynomial_algebra(2, field)?),
        ("k×k×k".into(), diagonal_weak_hopf(3, field)?.alg().clone()),
        ("kZ3".into(), group_algebra(&cyclic_group_table(3), field)?.alg().clone()),
        ("T2".into(), upper_triangular_algebra(field)?),
    ])
}

/// Small coalgebras of dimension at most 3 used for random sampling.
pub fn small_coalgebras(field: FieldSpec) -> Result<Vec<(String, FinCoalgebra)>> {
    Ok(vec![
        ("k".into(), FinCoalgebra::ground(field)),
        ("grouplike2".into(), grouplike_coalgebra(2, field)?),
        ("dual-numbers".into(), dual_numbers_coalgebra(field)?),
        ("grouplike3".into(), grouplike_coalgebra(3, field)?),
        ("divided-powers3".into(), divided_power_coalgebra(field)?),
    ])
}

/// Basis of all `ψ : C⊗A → A⊗C` satisfying the two axioms that are linear in `ψ`.
pub fn linear_axiom_solutions(a: &FinAlgebra, c: &FinCoalgebra) -> Result<Vec<LinMap>> {
    let f = a.field();
    let dom = Shape::new(vec![c.dim(), a.dim()]);
    let cod = Shape::new(vec![a.dim(), c.dim()]);
    let psi = LinExpr::unknown(f, dom.clone(), cod.clone());
    let (ia, ic) = (a.id(), c.id());
    let a_eps = ia.tensor(c.counit());
    // e(c) = (A⊗ε)ψ(c⊗1)
    let e = psi.after(&ic.tensor(a.unit())).then(&a_eps);
    let re2 = psi.then(&a_eps).sub(&e.tensor_right(&ia).then(a.mul()));
    let re4 = psi.after(&ic.tensor(a.unit())).sub(&e.tensor_right(&ic).after(c.comul()));
    let sol = solve_constrained_map(f, &dom, &cod, &[re2, re4])?.expect("ψ = 0 is always a solution");
    Ok(sol.nullspace)
}

/// A sampled weak entwining and where it came from.
#[derive(Clone, Debug)]
pub struct RandomEntwining {
    pub algebra: String,
    pub coalgebra: String,
    pub entwining: WeakEntwiningRR,
}

/// Draws random elements of the solution space of the linear axioms and
/// keeps those that also satisfy the remaining two. Pairs are visited in a
/// round-robin so every small algebra and coalgebra is used.
pub fn random_weak_entwinings<R: Rng>(field: FieldSpec, rng: &mut R, count: usize, max_attempts: usize) -> Result<Vec<RandomEntwining>> {
    let FieldSpec::PrimeField(p) = field else {
        return Err(Error::Parse("random sampling needs a prime field".into()));
    };
    let algebras = small_algebras(field)?;
    let coalgebras = small_coalgebras(field)?;
    let mut spaces = Vec::new();
    for (an, a) in &algebras {
        for (cn, c) in &coalgebras {
            spaces.push((an.clone(), cn.clone(), a.clone(), c.clone(), linear_axiom_solutions(a, c)?));
        }
    }
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < max_attempts {
        let (an, cn, a, c, basis) = &spaces[attempts % spaces.len()];
        attempts += 1;
        let n = a.dim() * c.dim();
        let mut psi = LinMap::zeros(field, Shape::flat(n), Shape::flat(n));
        for b in basis {
            let k = field.from_i64(rng.gen_range(0..p as i64));
            if !k.is_zero() {
                psi = &psi + &b.scale(&k);
            }
        }
        if check_rr(a, c, &psi).passed() {
            let entwining = WeakEntwiningRR::unchecked(a.clone(), c.clone(), psi)?;
            out.push(RandomEntwining { algebra: an.clone(), coalgebra: cn.clone(), entwining });
        }
    }
    Ok(out)
}
