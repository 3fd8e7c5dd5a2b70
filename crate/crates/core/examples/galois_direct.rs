use weak_galois::catalog::demo;
use weak_galois::exactlin::FieldSpec;
use weak_galois::galois::{canonical_map, GaloisContext};

fn main() -> weak_galois::Result<()> {
    for name in ["kz2", "diag2", "pairgroupoid2", "trivial-coaction"] {
        let b = demo(name, FieldSpec::Rationals)?;
        let ctx = GaloisContext::with_inverse(b.invertible_entwining()?, b.coaction_or_default().unwrap())?;
        let v = canonical_map(&ctx);
        println!("{name}: B dim {}, coring dim {}, can bijective {}", ctx.b.dim(), ctx.coring.dim(), v.can_bijective);
    }
    Ok(())
}
