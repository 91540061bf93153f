// The congruence induced by a family of subsets, its quotient, and the check
// that a medial family with nonempty separator intersection yields a
// commutative monoid quotient whose identity is that intersection.
//
// cargo run --example induced_congruence

use semilab::subset::separator_intersection;
use semilab::text::{format_family, parse_family};
use semilab::{classify_quotient, named, p_congruence, quotient, verify_theorem1_forward, Result};

pub fn run() -> Result<()> {
    let s = named::chain(3);
    for literal in ["{0}", "{0,1}", "{0};{0,1}", "{1}", ""] {
        let family = parse_family(literal, s.order())?;
        let p = p_congruence(&s, &family)?;
        let q = quotient(&s, &p)?;
        let class = classify_quotient(&q);
        println!(
            "family [{}]: P = {p}, separators meet in {}, quotient {:?} (monoid={}, commutative={})",
            format_family(&family),
            separator_intersection(&s, &family)?,
            q.semigroup().rows(),
            class.is_monoid,
            class.is_commutative,
        );
        println!("  {}", verify_theorem1_forward(&s, &family)?);
    }
    Ok(())
}

fn main() {
    run().expect("example failed");
}
