// Embedding a weighted graph in a weighted geodetic graph using only
// new edges of weight 1 and 2.
//
// `cargo run --example embed`

use geodkit::construct::embed_weighted_geodetic;
use geodkit::graph::{parse_graph, serialize_graph, Graph};
use geodkit::paths::oracle_is_geodetic;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = parse_graph("4\n0 1 3\n1 2 4\n2 3 3")?;
    let g = embed_weighted_geodetic(&h)?;
    println!("{}", serialize_graph(&g));
    println!(
        "{} new vertices, geodetic {}, input kept: {}",
        g.vertex_count() - h.vertex_count(),
        oracle_is_geodetic(&g)?.holds,
        g.induced_subgraph(&[0, 1, 2, 3]) == h
    );

    match embed_weighted_geodetic(&Graph::cycle(4)) {
        Err(e) => println!("C4: {e}"),
        Ok(_) => unreachable!("C4 has two geodesics of length two"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
