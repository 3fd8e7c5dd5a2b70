use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weak_galois::catalog::random_weak_entwinings;
use weak_galois::exactlin::FieldSpec;
use weak_galois::weak_entwining::is_strict;

fn main() -> weak_galois::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let found = random_weak_entwinings(FieldSpec::PrimeField(2), &mut rng, 20, 5_000)?;
    let strict = found.iter().filter(|e| is_strict(&e.entwining)).count();
    let bijective = found.iter().filter(|e| e.entwining.psi.is_bijective()).count();
    println!("{} entwinings over F2, {bijective} bijective, {strict} strict", found.len());
    Ok(())
}
