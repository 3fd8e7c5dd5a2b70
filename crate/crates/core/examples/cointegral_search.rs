use weak_galois::catalog::{dual_numbers_coalgebra, matrix_coalgebra};
use weak_galois::exactlin::FieldSpec;
use weak_galois::galois::{comodule_projectivity, find_cointegral};

fn main() -> weak_galois::Result<()> {
    let q = FieldSpec::Rationals;
    for (name, c) in [("M^c(2)", matrix_coalgebra(2, q)?), ("dual numbers", dual_numbers_coalgebra(q)?)] {
        match find_cointegral(&c)? {
            Some(d) => println!("{name}: δ = {:?}", d.delta.row(0).iter().map(ToString::to_string).collect::<Vec<_>>()),
            None => println!("{name}: not coseparable"),
        }
        println!("{name}: projective over itself {}", comodule_projectivity(&c)?.projective);
    }
    Ok(())
}
