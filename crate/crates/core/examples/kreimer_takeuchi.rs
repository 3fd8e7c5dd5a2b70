use weak_galois::catalog::{demo, DEMO_NAMES};
use weak_galois::exactlin::FieldSpec;
use weak_galois::galois::kreimer_takeuchi_check;

fn main() -> weak_galois::Result<()> {
    for name in DEMO_NAMES {
        let b = demo(name, FieldSpec::PrimeField(5))?;
        let Ok(h) = b.weak_hopf() else { continue };
        let r = kreimer_takeuchi_check(&h, h.alg(), &b.coaction_or_default().unwrap())?;
        println!("{name} over F5: {:?}", r.status);
    }
    Ok(())
}
