use weak_galois::catalog::demo;
use weak_galois::exactlin::FieldSpec;
use weak_galois::weak_entwining::{build_coring_rr, check_rr, is_strict, projection_pr, WeakEntwiningRR};

fn main() -> weak_galois::Result<()> {
    let b = demo("diag2", FieldSpec::Rationals)?;
    let (a, c) = (b.algebra.clone().unwrap(), b.coalgebra.clone().unwrap());
    let psi = b.psi_r_or_default().unwrap();
    println!("{}", check_rr(&a, &c, &psi));
    let we = WeakEntwiningRR::new(a, c, psi)?;
    println!("strict: {}, rank p_R = {}", is_strict(&we), projection_pr(&we)?.rank());
    let coring = build_coring_rr(&we)?;
    println!("coring dim {}", coring.dim());
    println!("{}", coring.report());

    let swap = demo("swap-diag2", FieldSpec::Rationals)?;
    let r = check_rr(swap.algebra.as_ref().unwrap(), swap.coalgebra.as_ref().unwrap(), swap.psi_r.as_ref().unwrap());
    if let Some(bad) = r.first_failure() {
        println!("swap-diag2 fails {}: {:?}", bad.name, bad.witness);
    }
    Ok(())
}
