// Bearing trees, balks and stems.
//
// `cargo run --example bearing_trees`

use geodkit::gallery;
use geodkit::recognition::{build_bearing_tree, classify_non_tree_edges, extract_stems};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = gallery::three_balk_graph();
    let tree = build_bearing_tree(&g, 0)?;
    let (balks, violations) = classify_non_tree_edges(&g, &tree);
    println!("tiers from 0: {:?}", tree.tier);
    for b in &balks {
        println!("balk {}-{} in tier {}", b.u, b.v, b.tier);
    }
    assert_eq!(balks.len(), 3);
    assert!(violations.is_empty());

    let t = gallery::five_stem_tree();
    let stems = extract_stems(&build_bearing_tree(&t, 0)?);
    for s in &stems {
        println!("stem to {}: {:?}", s.leaf(), s.vertices);
    }
    let lengths: Vec<usize> = stems.iter().map(|s| s.len()).collect();
    assert_eq!(lengths, vec![1, 2, 2, 3, 3]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
