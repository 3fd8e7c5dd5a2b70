use weak_galois::exactlin::{FieldSpec, LinMap, QuotientSpace, Shape, Subspace};

fn main() {
    let q = FieldSpec::Rationals;
    let m = LinMap::from_fn(q, Shape::flat(3), Shape::flat(2), |r, c| q.from_i64((r + 2 * c) as i64));
    println!("rank {} kernel {}", m.rank(), m.kernel().dim());

    let swap = LinMap::swap(q, 2, 3);
    println!("swap 2⊗3 -> 3⊗2 bijective: {}", swap.is_bijective());

    let f3 = FieldSpec::PrimeField(3);
    let diag = Subspace::from_vectors(f3, Shape::new(vec![2, 2]), &[vec![f3.one(), f3.zero(), f3.zero(), f3.one()]]);
    let quot = QuotientSpace::new(diag);
    println!("k²⊗k² / span(1⊗1 + 2⊗2) over F3 has dim {}", quot.dim());
}
