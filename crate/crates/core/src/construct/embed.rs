// SPDX-License-Identifier: Apache-2.0

//! Embedding a weighted graph as an induced subgraph of a weighted geodetic
//! graph, adding only edges of weight 1 and 2.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::paths::{shortest_path_counts, DistanceRow};

struct Growing {
    n: usize,
    edges: Vec<(Vertex, Vertex, BigUint)>,
}

impl Growing {
    fn graph(&self) -> Result<Graph> {
        Graph::with_weights(self.n, self.edges.iter().cloned())
    }

    fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: Vertex, v: Vertex, w: u32) {
        self.edges.push((u, v, BigUint::from(w)));
    }
}

fn farther_than(row: &DistanceRow, v: Vertex, bound: u32) -> bool {
    row.dist[v].as_ref().is_some_and(|d| *d > BigUint::from(bound))
}

/// Builds a weighted geodetic graph that contains `h` (ids `0..n`, weights
/// intact) as an induced subgraph. Requires that no pair of `h` is joined
/// by two geodesics of length 2.
///
/// 1. For each `v ∈ V(h)` and each `u ∈ V(h)` farther than 2 from `v`, a
///    new vertex is joined to both by weight-1 edges.
/// 2. Each new vertex `v` is joined by a weight-1 edge to the lowest vertex
///    farther than 3, until none remains.
/// 3. While some pair has two geodesics (necessarily of length 3), the
///    lexicographically first such pair gets a weight-2 edge.
///
/// New vertices are numbered from `n` in creation order.
pub fn embed_weighted_geodetic(h: &Graph) -> Result<Graph> {
    h.require_connected()?;
    let base = h.vertex_count();
    let mut g = Growing {
        n: base,
        edges: h.weighted_edges().map(|(u, v, w)| (u, v, w.clone())).collect(),
    };
    let two = BigUint::from(2u32);

    for u in 0..base {
        let row = shortest_path_counts(h, u)?;
        if let Some(v) = (u + 1..base).find(|&v| row.dist[v] == Some(two.clone()) && !row.count[v].is_one()) {
            return Err(Error::AmbiguousLengthTwo(u, v));
        }
    }

    for v in 0..base {
        let row = shortest_path_counts(&g.graph()?, v)?;
        for u in (0..base).filter(|&u| farther_than(&row, u, 2)) {
            let t = g.vertex();
            g.edge(v, t, 1);
            g.edge(u, t, 1);
        }
    }

    for v in base..g.n {
        loop {
            let row = shortest_path_counts(&g.graph()?, v)?;
            match (0..g.n).find(|&u| farther_than(&row, u, 3)) {
                Some(u) => g.edge(u, v, 1),
                None => break,
            }
        }
    }

    let max_rounds = g.n * g.n;
    for _ in 0..=max_rounds {
        let current = g.graph()?;
        let mut tie = None;
        for a in 0..g.n {
            let row = shortest_path_counts(&current, a)?;
            if let Some(b) = (a + 1..g.n).find(|&b| row.count[b] > BigUint::one()) {
                tie = Some((a, b, row.dist[b].clone().unwrap()));
                break;
            }
        }
        let Some((a, b, d)) = tie else {
            return Ok(current);
        };
        if d <= two || current.has_edge(a, b) || b < base {
            return Err(Error::Internal(format!(
                "embedding reached a tie between {a} and {b} at length {d} it cannot break"
            )));
        }
        g.edge(a, b, 2);
    }
    Err(Error::Internal("embedding did not reach a fixpoint".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::oracle_is_geodetic;

    #[test]
    fn heavy_edge_gets_an_apex() {
        // the endpoints are 5 apart, so they receive a common weight-1 neighbour
        let h = Graph::with_weights(2, [(0, 1, BigUint::from(5u32))]).unwrap();
        let g = embed_weighted_geodetic(&h).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(oracle_is_geodetic(&g).unwrap().holds);
        assert_eq!(g.induced_subgraph(&[0, 1]), h);
    }

    #[test]
    fn c4_violates_precondition() {
        assert!(matches!(
            embed_weighted_geodetic(&Graph::cycle(4)),
            Err(Error::AmbiguousLengthTwo(0, 2))
        ));
    }

    #[test]
    fn weighted_path_embeds() {
        let w = |x: u32| BigUint::from(x);
        let h = Graph::with_weights(4, [(0, 1, w(3)), (1, 2, w(4)), (2, 3, w(3))]).unwrap();
        let g = embed_weighted_geodetic(&h).unwrap();
        assert!(oracle_is_geodetic(&g).unwrap().holds);
        assert_eq!(g.induced_subgraph(&[0, 1, 2, 3]), h);
    }
}
