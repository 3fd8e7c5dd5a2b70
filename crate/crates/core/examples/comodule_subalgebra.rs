use weak_galois::catalog::{a_r_readings, comodule_subalgebra_pipeline, demo};
use weak_galois::exactlin::{FieldSpec, Subspace};

fn main() -> weak_galois::Result<()> {
    let b = demo("pairgroupoid2", FieldSpec::Rationals)?;
    let h = b.weak_hopf()?;
    let a = Subspace::from_vectors(h.field(), h.alg().mul().codomain().clone(), b.subalgebra.as_ref().unwrap());
    let readings = a_r_readings(&h, &a);
    println!("A^R dims: {} and {}", readings.corrected.dim(), readings.literal.dim());
    let out = comodule_subalgebra_pipeline(&h, &a)?;
    println!("{}", out.report);
    Ok(())
}
