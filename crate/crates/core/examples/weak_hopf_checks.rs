use weak_galois::catalog::{diagonal_weak_hopf, groupoid_algebra, GroupoidSpec};
use weak_galois::exactlin::FieldSpec;
use weak_galois::weak_hopf::{check_weak_hopf, pi_identities};

fn main() -> weak_galois::Result<()> {
    let q = FieldSpec::Rationals;
    for (name, h) in [("k×k", diagonal_weak_hopf(2, q)?), ("pair groupoid", groupoid_algebra(&GroupoidSpec::pair(2), q)?)] {
        println!("{name}: strict {}", h.wb.is_strict());
        println!("{}", check_weak_hopf(&h));
        println!("{}", pi_identities(&h));
    }
    Ok(())
}
