// Geodetic and antipodal recognition: the bearing-tree sweep next to the
// brute-force oracle on a handful of named graphs.
//
// `cargo run --example recognize`

use geodkit::gallery;
use geodkit::graph::Graph;
use geodkit::paths::{oracle_is_antipodal, oracle_is_geodetic};
use geodkit::recognition::{check_weighted, recognize};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("K5", Graph::complete(5)),
        ("Petersen", Graph::petersen()),
        ("odd cactus", gallery::odd_cactus()),
        ("octagon + chord", gallery::octagon_with_chord()),
    ];
    println!(
        "{:<16} {:>4} {:>9} {:>9}  witness",
        "graph", "diam", "geodetic", "antipodal"
    );
    for (name, g) in &graphs {
        let fast = recognize(g, false)?;
        assert_eq!(fast.geodetic.holds, oracle_is_geodetic(g)?.holds);
        assert_eq!(fast.antipodal.holds, oracle_is_antipodal(g)?.holds);
        let witness = fast
            .geodetic
            .witness
            .as_ref()
            .or(fast.antipodal.witness.as_ref())
            .map(|w| serde_json::to_string(w).unwrap())
            .unwrap_or_default();
        println!(
            "{name:<16} {:>4} {:>9} {:>9}  {witness}",
            fast.diameter, fast.geodetic.holds, fast.antipodal.holds
        );
    }

    // The same octagon becomes both geodetic and antipodal under
    // power-of-two weights.
    let weighted = gallery::weighted_octagon();
    let report = check_weighted(&weighted)?;
    println!(
        "weighted octagon: diameter {}, geodetic {}, antipodal {}",
        report.diameter, report.geodetic.holds, report.antipodal.holds
    );
    assert!(report.geodetic.holds && report.antipodal.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
