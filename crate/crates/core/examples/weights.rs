// Weights that make any connected graph geodetic and antipodal.
//
// `cargo run --example weights`

use geodkit::construct::assign_weights;
use geodkit::gallery;
use geodkit::graph::serialize_graph;
use geodkit::recognition::check_weighted;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = gallery::octagon_with_chord();
    let w = assign_weights(&g)?;
    println!("{}", serialize_graph(&w));
    let report = check_weighted(&w)?;
    println!(
        "diameter {}, geodetic {}, antipodal {}",
        report.diameter, report.geodetic.holds, report.antipodal.holds
    );

    // Weights grow roughly threefold per vertex, hence exact integers.
    let big = assign_weights(&geodkit::graph::Graph::complete(30))?;
    let heaviest = big.weighted_edges().map(|(_, _, w)| w.clone()).max().unwrap();
    println!("K30 heaviest weight has {} digits", heaviest.to_string().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
