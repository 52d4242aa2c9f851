// Every connected graph is an induced subgraph of an antipodal graph.
//
// `cargo run --example antipodal_extension`

use geodkit::construct::extend_to_antipodal;
use geodkit::graph::{serialize_graph, Graph};
use geodkit::paths::oracle_is_antipodal;
use geodkit::random::{random_connected_graph, seeded_rng};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ext = extend_to_antipodal(&Graph::path(3))?;
    println!("P3 extended:\n{}", serialize_graph(&ext));

    let mut rng = seeded_rng(1);
    let samples = [
        Graph::complete(3),
        Graph::cycle(5),
        Graph::petersen(),
        random_connected_graph(&mut rng, 10, 0.3),
    ];
    for g in &samples {
        let ext = extend_to_antipodal(g)?;
        println!(
            "{:>2} vertices -> {:>2}, antipodal {}",
            g.vertex_count(),
            ext.vertex_count(),
            oracle_is_antipodal(&ext)?.holds
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
