// Medial, reflexive and unitary subsets, with the witnesses reported when a
// predicate fails.
//
// cargo run --example medial_subsets

use semilab::subset::{medial_witness, reflexive_witness, unitary_witness, Side};
use semilab::{named, ElementSet, Result};

pub fn run() -> Result<()> {
    let s = named::lz2_monoid();
    println!("left-zero semigroup with identity adjoined: {:?}", s.rows());
    for a in ElementSet::all_subsets(s.order()) {
        let medial = match medial_witness(&s, &a)? {
            None => "medial".to_string(),
            Some((x, p, q, y)) => format!("not medial at (x={x},a={p},b={q},y={y})"),
        };
        let reflexive = match reflexive_witness(&s, &a)? {
            None => "reflexive".to_string(),
            Some((p, q)) => format!("not reflexive at ({p},{q})"),
        };
        let unitary = match unitary_witness(&s, &a, Side::Both)? {
            None => "unitary".to_string(),
            Some((side, p, q)) => format!("not {side:?}-unitary at ({p},{q})"),
        };
        println!("  {a:<9} {medial}; {reflexive}; {unitary}");
    }
    Ok(())
}

fn main() {
    run().expect("example failed");
}
