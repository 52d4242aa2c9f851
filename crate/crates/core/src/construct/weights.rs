// SPDX-License-Identifier: Apache-2.0

//! Weights that make any connected graph geodetic and antipodal at once.

use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// Adds vertices in BFS order from 0. When vertex `v` joins a graph of total
/// weight `S`, its edge to its BFS parent gets weight `S + 1` and its other
/// edges back into the graph get `2S + 2`. Any geodesic ending at `v` must
/// then use the parent edge, and `v` becomes the unique antipode of every
/// earlier vertex. Input weights are ignored.
pub fn assign_weights(g: &Graph) -> Result<Graph> {
    g.require_connected()?;
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in g.neighbor_ids(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut total = BigUint::default();
    let mut weighted: Vec<(Vertex, Vertex, BigUint)> = Vec::with_capacity(g.edge_count());
    for &v in &order[1..] {
        let tree = &total + 1u32;
        let other = &tree * 2u32;
        let mut added = BigUint::default();
        for u in g.neighbor_ids(v).filter(|&u| rank[u] < rank[v]) {
            let w = if Some(u) == parent[v] {
                tree.clone()
            } else {
                other.clone()
            };
            added += &w;
            weighted.push((u, v, w));
        }
        total += added;
    }
    Graph::with_weights(n, weighted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_gets_weight_one() {
        let w = assign_weights(&Graph::path(2)).unwrap();
        assert_eq!(w.weight(0, 1), Some(&BigUint::from(1u32)));
    }

    #[test]
    fn triangle_weights() {
        // 1 joins with weight 1; 2 joins with 2 to its parent 0 and 4 to 1
        let w = assign_weights(&Graph::complete(3)).unwrap();
        assert_eq!(w.weight(0, 1), Some(&BigUint::from(1u32)));
        assert_eq!(w.weight(0, 2), Some(&BigUint::from(2u32)));
        assert_eq!(w.weight(1, 2), Some(&BigUint::from(4u32)));
    }

    #[test]
    fn underlying_graph_unchanged() {
        let g = Graph::petersen();
        assert_eq!(assign_weights(&g).unwrap().unweighted(), g);
    }
}
