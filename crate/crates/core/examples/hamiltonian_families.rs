// Hamiltonian geodetic graphs of diameter four and two.
//
// `cargo run --release --example hamiltonian_families`

use geodkit::construct::{build_diameter2, build_diameter4, verify_hamiltonian_cycle};
use geodkit::paths::diameter;
use geodkit::recognition::check_geodetic_fast;
use geodkit::structure::antipode_counts;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for q in [2, 3] {
        for c in [build_diameter4(q)?, build_diameter2(q)?] {
            let g = &c.graph;
            let cycle = c.hamiltonian_cycle.as_deref().unwrap_or_default();
            let fewest_antipodes = antipode_counts(g)?.into_iter().min().unwrap();
            println!(
                "{} q={q}: {:>2} vertices, diameter {}, geodetic {}, cycle ok {}, fewest antipodes {}",
                c.name,
                g.vertex_count(),
                diameter(g)?,
                check_geodetic_fast(g)?.holds,
                verify_hamiltonian_cycle(g, cycle),
                fewest_antipodes
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
