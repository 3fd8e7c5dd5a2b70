use weak_galois::catalog::demo;
use weak_galois::exactlin::FieldSpec;
use weak_galois::galois::coseparable_pipeline;

fn main() -> weak_galois::Result<()> {
    let b = demo("diag2", FieldSpec::Rationals)?;
    let out = coseparable_pipeline(&b.invertible_entwining()?, &b.coaction_or_default().unwrap())?;
    println!("{}", out.report);
    println!("can bijective: {}", out.verdict.can_bijective);
    for (k, m) in &out.maps {
        println!("{k}: {}x{}", m.rows(), m.cols());
    }
    Ok(())
}
