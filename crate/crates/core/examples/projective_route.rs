use weak_galois::catalog::demo;
use weak_galois::exactlin::FieldSpec;
use weak_galois::galois::projective_pipeline;
use weak_galois::Error;

fn main() -> weak_galois::Result<()> {
    for name in ["pairgroupoid2", "trivial-coaction"] {
        let b = demo(name, FieldSpec::Rationals)?;
        match projective_pipeline(&b.invertible_entwining()?, &b.coaction_or_default().unwrap()) {
            Ok(out) => println!("{name}: can bijective {}", out.verdict.can_bijective),
            Err(Error::HypothesisFailed { name: h, report }) => {
                println!("{name}: hypothesis {h} fails at {:?}", report.first_failure().map(|c| &c.name))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
