// Counts of semigroups of small order, labelled and up to isomorphism, and
// the canonical forms of the order-2 classes.
//
// cargo run --example catalog

use semilab::catalog::{canonical_form, enumerate_semigroups};
use semilab::Result;

pub fn run() -> Result<()> {
    for n in 1..=4 {
        let labelled = enumerate_semigroups(n, false)?.count();
        let classes = enumerate_semigroups(n, true)?.count();
        println!("order {n}: {labelled} tables, {classes} up to isomorphism");
    }
    println!("order-2 representatives:");
    for s in enumerate_semigroups(2, true)? {
        let form = canonical_form(&s);
        println!(
            "  {form:?} commutative={} identity={:?}",
            s.is_commutative(),
            s.identity_element()
        );
    }
    Ok(())
}

fn main() {
    run().expect("example failed");
}
