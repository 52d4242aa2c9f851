// Even subdivisions preserve geodeticity in both directions.
//
// `cargo run --example subdivision`

use geodkit::construct::subdivide;
use geodkit::graph::Graph;
use geodkit::paths::oracle_is_geodetic;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("K3", Graph::complete(3)),
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
    ] {
        for k in [2, 4] {
            let s = subdivide(&g, k)?;
            println!(
                "{name}({k}): {:>2} vertices, geodetic {} (original {})",
                s.vertex_count(),
                oracle_is_geodetic(&s)?.holds,
                oracle_is_geodetic(&g)?.holds
            );
        }
    }
    // Odd k would turn K3 into an even cycle.
    assert!(subdivide(&Graph::complete(3), 1).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
