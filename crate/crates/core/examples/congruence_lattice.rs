// Every congruence of a small semigroup, classified by its quotient, and the
// converse check that each commutative monoid congruence is induced by its
// own classes.
//
// cargo run --example congruence_lattice

use semilab::{
    classify_quotient, enumerate_congruences, named, quotient, verify_theorem1_converse, Result,
};

pub fn run() -> Result<()> {
    for (name, s) in [
        ("chain3", named::chain(3)),
        ("LZ2+1", named::lz2_monoid()),
        ("Z3", named::cyclic_group(3)),
    ] {
        println!("{name}:");
        for sigma in enumerate_congruences(&s)? {
            let class = classify_quotient(&quotient(&s, &sigma)?);
            let report = verify_theorem1_converse(&s, &sigma)?;
            println!(
                "  {sigma:<16} monoid={:<5} commutative={:<5} converse: {}",
                class.is_monoid, class.is_commutative, report.status
            );
        }
    }
    Ok(())
}

fn main() {
    run().expect("example failed");
}
