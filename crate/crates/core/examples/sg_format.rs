// Reading and writing `.sg` Cayley tables and command-line literals.
//
// cargo run --example sg_format

use semilab::text::{parse_family, parse_partition, parse_permutation, parse_sg, to_sg};
use semilab::{quotient, satisfies_identity, separator, Result};

const TABLE: &str = "\
# the chain 0 < 1 < 2 under min
3
0 0 0
0 1 1
0 1 2
labels: z m e
";

pub fn run() -> Result<()> {
    let s = parse_sg(TABLE)?;
    print!("{}", to_sg(&s));
    for a in parse_family("{0};{1,2};{}", s.order())? {
        let sep = separator(&s, &a)?;
        let names: Vec<String> = sep.iter().map(|e| s.label(e)).collect();
        println!("Sep({a}) = {sep} = {names:?}");
    }
    let q = quotient(&s, &parse_partition("{0};{1,2}", s.order())?)?;
    print!("quotient:\n{}", to_sg(q.semigroup()));
    let id = parse_permutation("perm 2 1")?;
    println!("satisfies {id}: {}", satisfies_identity(&s, &id));
    match parse_sg("2\n0 1\n1\n") {
        Err(e) => println!("ragged table rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() {
    run().expect("example failed");
}
