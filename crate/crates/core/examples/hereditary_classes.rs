// Hereditary classes: the largest hereditary subclass of geodetic graphs,
// its forbidden induced structures, claw-free geodetic graphs, and the
// longest-path test for antipodal trees.
//
// `cargo run --example hereditary_classes`

use geodkit::gallery;
use geodkit::graph::Graph;
use geodkit::structure::{
    claw_free_geodetic_characterization, has_induced_c4_or_k4e, in_floor_geodetic,
    search_forbidden_even_structure, tree_antipodal_criterion,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k4_c5 = gallery::glue_at_vertex(&Graph::complete(4), &Graph::cycle(5));
    for (name, g) in [
        ("K4 + C5", k4_c5),
        ("C6", Graph::cycle(6)),
        ("diamond", gallery::diamond()),
        ("Petersen", Graph::petersen()),
    ] {
        let floor = in_floor_geodetic(&g)?;
        let found = search_forbidden_even_structure(&g)?;
        println!(
            "{name:<9} floor member {:<5} forbidden structure {}",
            floor.member,
            found.map_or("none".into(), |s| format!("{:?} chord {:?}", s.cycle, s.chord))
        );
        assert_eq!(floor.member, search_forbidden_even_structure(&g)?.is_none());
    }
    println!(
        "Petersen induced C4/K4-e: {:?}",
        has_induced_c4_or_k4e(&Graph::petersen())
    );

    let claw = claw_free_geodetic_characterization(&Graph::star(3))?;
    println!("claw: {}", serde_json::to_string(&claw)?);

    for (name, t) in [
        ("P4", Graph::path(4)),
        ("claw", Graph::star(3)),
        ("8-vertex", gallery::antipodal_tree()),
    ] {
        println!(
            "{name:<9} antipodal tree: {}",
            tree_antipodal_criterion(&t)?.holds
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
