// SPDX-License-Identifier: Apache-2.0

//! Small named graphs used throughout the tests, examples and CLI fixtures.

use num_bigint::BigUint;

use crate::graph::Graph;

/// Cactus whose blocks are a pentagon, four triangles and three bridges.
pub fn odd_cactus() -> Graph {
    Graph::new(
        16,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (1, 5),
            (1, 6),
            (5, 6),
            (5, 7),
            (5, 8),
            (5, 9),
            (7, 8),
            (4, 10),
            (4, 11),
            (10, 11),
            (10, 12),
            (10, 13),
            (11, 14),
            (11, 15),
            (14, 15),
        ],
    )
    .unwrap()
}

/// Tree rooted at 0 with five leaves at depths 1, 2, 2, 3, 3.
pub fn five_stem_tree() -> Graph {
    Graph::new(
        9,
        [(0, 1), (0, 2), (0, 4), (2, 3), (4, 5), (4, 6), (6, 7), (6, 8)],
    )
    .unwrap()
}

/// Eight-vertex tree whose unique longest path `4-2-0-3-6-7` has five
/// edges.
pub fn antipodal_tree() -> Graph {
    Graph::new(8, [(0, 1), (0, 2), (0, 3), (2, 4), (3, 5), (3, 6), (6, 7)]).unwrap()
}

/// Hexagon `0..6` with chord `1-3` and the chord `2-5` subdivided by 6.
/// Its bearing tree at 0 has three balks.
pub fn three_balk_graph() -> Graph {
    Graph::new(
        7,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (1, 3),
            (2, 6),
            (6, 5),
        ],
    )
    .unwrap()
}

/// Octagon plus one chord, weighted with powers of two so that the result
/// is both geodetic and antipodal.
pub fn weighted_octagon() -> Graph {
    let w = |x: u32| BigUint::from(x);
    Graph::with_weights(
        8,
        [
            (0, 1, w(1)),
            (1, 2, w(2)),
            (2, 3, w(4)),
            (3, 4, w(8)),
            (4, 5, w(16)),
            (5, 6, w(32)),
            (6, 7, w(64)),
            (0, 7, w(128)),
            (7, 4, w(128)),
        ],
    )
    .unwrap()
}

/// The unweighted octagon-plus-chord underlying [`weighted_octagon`].
pub fn octagon_with_chord() -> Graph {
    weighted_octagon().unweighted()
}

/// Geodetic graph with six blocks around root 0, all of whose bearing-tree
/// stems meet only at the root:
///
/// * a transversal block on four stems of depth 3 (balks from the first
///   stem at tier 3, a triangle among the other three at tier 2), with a
///   one-edge tail under its first stem;
/// * a transversal block on three stems of depth 3 (balks from the middle
///   stem at tier 3, one balk between the outer stems at tier 2), with a
///   two-edge tail under its middle stem;
/// * a pendant edge at the root.
pub fn six_block_graph() -> Graph {
    let mut edges = Vec::new();
    // stem i of the first block: vertices 1 + 3i .. 3 + 3i at tiers 1..=3
    let a = |i: usize, t: usize| 1 + 3 * i + (t - 1);
    // stem i of the second block: vertices 14 + 3i ..
    let b = |i: usize, t: usize| 14 + 3 * i + (t - 1);
    for i in 0..4 {
        edges.push((0, a(i, 1)));
        edges.push((a(i, 1), a(i, 2)));
        edges.push((a(i, 2), a(i, 3)));
    }
    edges.push((a(0, 3), 13));
    for i in 1..4 {
        edges.push((a(0, 3), a(i, 3)));
        for j in i + 1..4 {
            edges.push((a(i, 2), a(j, 2)));
        }
    }
    for i in 0..3 {
        edges.push((0, b(i, 1)));
        edges.push((b(i, 1), b(i, 2)));
        edges.push((b(i, 2), b(i, 3)));
    }
    edges.push((b(1, 3), 23));
    edges.push((23, 24));
    edges.push((b(1, 3), b(0, 3)));
    edges.push((b(1, 3), b(2, 3)));
    edges.push((b(0, 2), b(2, 2)));
    edges.push((0, 25));
    Graph::new(26, edges).unwrap()
}

/// Hub 0 joined to every vertex of the cycle `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let spokes = (1..=rim).map(|i| (0, i));
    let ring = (1..=rim).map(|i| (i, i % rim + 1));
    Graph::new(rim + 1, spokes.chain(ring)).unwrap()
}

/// Triangles `(0,1,2)`, `(2,3,4)`, ... glued in a chain.
pub fn triangle_chain(triangles: usize) -> Graph {
    let mut edges = Vec::new();
    for t in 0..triangles {
        let base = 2 * t;
        edges.extend([(base, base + 1), (base + 1, base + 2), (base, base + 2)]);
    }
    Graph::new(2 * triangles + 1, edges).unwrap()
}

/// Two graphs glued at a vertex: `first`'s vertex 0 is identified with
/// `second`'s vertex 0; `second`'s other vertices are shifted up.
pub fn glue_at_vertex(first: &Graph, second: &Graph) -> Graph {
    let shift = first.vertex_count() - 1;
    let map = |v: usize| if v == 0 { 0 } else { v + shift };
    let edges = first
        .edges()
        .iter()
        .copied()
        .chain(second.edges().iter().map(|&(u, v)| (map(u), map(v))));
    Graph::new(first.vertex_count() + second.vertex_count() - 1, edges).unwrap()
}

/// `K_4` minus one edge: two triangles sharing the side `0-2`.
pub fn diamond() -> Graph {
    Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
}
