// Exhaustive equivalence sweeps over small graphs.
//
// `cargo run --release --example selftest`

use geodkit::random::DEFAULT_SEED;
use geodkit::selftest::run_selftest;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for report in run_selftest(5, DEFAULT_SEED)? {
        println!("{}", report.line());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
