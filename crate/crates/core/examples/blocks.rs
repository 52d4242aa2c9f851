// Block decomposition, the block lemma, and transversal blocks.
//
// `cargo run --example blocks`

use geodkit::gallery;
use geodkit::graph::Graph;
use geodkit::structure::{
    block_decomposition, geodetic_via_blocks, labeled_blocks, verify_transversal_blocks, TransversalShape,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cactus = gallery::odd_cactus();
    let d = block_decomposition(&cactus);
    println!("cut vertices: {:?}", d.cut_vertices);
    for b in labeled_blocks(&cactus) {
        println!("  {:?} {:?}", b.shape, b.vertices);
    }
    assert!(geodetic_via_blocks(&cactus)?.holds);

    // Glue a C4 onto a triangle: the block lemma pins the failure on the C4.
    let mixed = gallery::glue_at_vertex(&Graph::complete(3), &Graph::cycle(4));
    let verdict = geodetic_via_blocks(&mixed)?;
    println!("triangle + square: {}", serde_json::to_string(&verdict)?);
    assert!(!verdict.holds);

    let g = gallery::six_block_graph();
    let report = verify_transversal_blocks(&g, 0)?;
    for b in &report.blocks {
        match &b.shape {
            TransversalShape::Transversal { n, k, l, stems } => {
                println!("transversal block n={n} k={k} l={l} over stems {stems:?}")
            }
            TransversalShape::StemSegment { stem } => println!("edge {:?} on stem {stem}", b.vertices),
            TransversalShape::NotTransversal { reason } => println!("{:?}: {reason}", b.vertices),
        }
    }
    assert!(report.applicable && report.all_transversal());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
