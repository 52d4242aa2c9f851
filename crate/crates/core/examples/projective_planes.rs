// Finite fields, projective planes and their Levi graphs.
//
// `cargo run --example projective_planes`

use geodkit::construct::{levi_graph, projective_plane, FiniteField, SUPPORTED_ORDERS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f4 = FiniteField::new(4)?;
    println!("GF(4) multiplication:");
    for a in 0..4 {
        let row: Vec<usize> = (0..4).map(|b| f4.mul(a, b)).collect();
        println!("  {row:?}");
    }
    for q in SUPPORTED_ORDERS {
        let plane = projective_plane(q)?;
        let levi = levi_graph(&plane);
        println!(
            "PG(2,{q}): {:>3} points, Levi graph {:>3} vertices {:>4} edges",
            plane.size(),
            levi.vertex_count(),
            levi.edge_count()
        );
    }
    let fano = projective_plane(2)?;
    for (l, pts) in fano.line_points.iter().enumerate() {
        println!("Fano line {l}: {pts:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
