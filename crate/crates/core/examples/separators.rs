// Idealizers and separators of every subset of a few small semigroups,
// together with the three separator lemmas.
//
// cargo run --example separators

use semilab::lemmas::{verify_lemma1, verify_lemma2, verify_lemma3};
use semilab::{idealizer, named, separator, ElementSet, Result};

pub fn run() -> Result<()> {
    let zoo = [
        ("min2", named::min2()),
        ("Z2", named::z2()),
        ("LZ2", named::lz2()),
        ("chain3", named::chain(3)),
    ];
    for (name, s) in &zoo {
        println!("{name}:");
        for a in ElementSet::all_subsets(s.order()) {
            let id = idealizer(s, &a)?;
            let sep = separator(s, &a)?;
            let statuses = [
                verify_lemma1(s, &a)?,
                verify_lemma2(s, &a)?,
                verify_lemma3(s, &a)?,
            ]
            .map(|r| r.status.as_str());
            println!("  A={a:<8} Id={id:<8} Sep={sep:<8} lemmas {statuses:?}");
        }
    }
    Ok(())
}

fn main() {
    run().expect("example failed");
}
