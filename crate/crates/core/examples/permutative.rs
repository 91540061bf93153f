// Permutation identities, the power S^k on which inner factors commute, and
// the monoid congruence checks that hold without any mediality assumption.
//
// cargo run --example permutative

use semilab::{
    enumerate_congruences, find_permutation_identity, lemma4_minimal_k, named, verify_corollary2,
    verify_theorem2_converse, verify_theorem2_forward, ElementSet, Result,
};

pub fn run() -> Result<()> {
    let zoo = [
        ("LZ2", named::lz2()),
        ("RZ2", named::rz2()),
        ("null3", named::null(3)),
        ("LZ2+1", named::lz2_monoid()),
    ];
    for (name, s) in &zoo {
        let lemma4 = lemma4_minimal_k(s);
        let Some(id) = find_permutation_identity(s, 4) else {
            println!(
                "{name}: no permutation identity up to n=4; k = {:?}",
                lemma4.minimal_k
            );
            continue;
        };
        println!("{name}: satisfies {id}; least k = {:?}", lemma4.minimal_k);
        for a in ElementSet::all_subsets(s.order()) {
            let fwd = verify_theorem2_forward(s, std::slice::from_ref(&a), &id)?;
            let cor = verify_corollary2(s, &a, &id)?;
            println!(
                "  A={a:<8} forward {:<18} corollary {}",
                fwd.status.as_str(),
                cor.status
            );
        }
        for sigma in enumerate_congruences(s)? {
            println!(
                "  sigma={sigma:<12} converse {}",
                verify_theorem2_converse(s, &sigma, &id)?.status
            );
        }
    }
    Ok(())
}

fn main() {
    run().expect("example failed");
}
