// The full verification sweep over every labelled semigroup of order at most 3.
//
// cargo run --release --example sweep

use semilab::sweep::{run_sweep, SweepConfig};
use semilab::Result;

pub fn run() -> Result<()> {
    let cfg = SweepConfig {
        parallelism: 4,
        ..SweepConfig::up_to(3)
    };
    let report = run_sweep(&cfg)?;
    print!("{}", report.summary());
    assert!(!report.has_failures());
    Ok(())
}

fn main() {
    run().expect("example failed");
}
