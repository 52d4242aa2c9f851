// SPDX-License-Identifier: Apache-2.0

//! Exhaustive enumeration of small labeled graphs, one graph per edge
//! subset of `K_n`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_N: usize = 7;

/// The pairs of `K_n` in the bit order used by edge-subset masks.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Number of edge subsets of `K_n`.
pub fn subset_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = [0u8; MAX_ENUMERATION_N];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let full: u8 = ((1u16 << n) - 1) as u8;
    let mut seen: u8 = 1;
    let mut frontier: u8 = 1;
    while frontier != 0 {
        let mut next = 0;
        for (v, &row) in adj.iter().enumerate().take(n) {
            if frontier >> v & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen & full == full
}

/// The graph for edge subset `mask`, or `None` when it is disconnected.
pub fn connected_graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Option<Graph> {
    if !mask_connected(n, pairs, mask) {
        return None;
    }
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Some(Graph::new(n, edges).expect("subset of K_n is simple"))
}

/// Every connected labeled graph on `n` vertices, in edge-subset order.
pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "enumeration supports 1 to {MAX_ENUMERATION_N} vertices, got {n}"
        )));
    }
    Ok(ConnectedGraphs {
        n,
        pairs: pair_list(n),
        next_mask: 0,
        end: subset_count(n),
        emitted: 0,
    })
}

pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
    emitted: u64,
}

impl ConnectedGraphs {
    /// How many graphs have been yielded so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if let Some(g) = connected_graph_from_mask(self.n, &self.pairs, mask) {
                self.emitted += 1;
                return Some(g);
            }
        }
        None
    }
}

pub const MAX_TREE_N: usize = 16;

/// Canonical form of a tree: the parenthesised AHU code rooted at its
/// centre, minimised over both centres when there are two.
fn tree_code(t: &Graph) -> String {
    fn rooted(t: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = t
            .neighbor_ids(v)
            .filter(|&w| w != parent)
            .map(|w| rooted(t, w, v))
            .collect();
        kids.sort_unstable();
        format!("({})", kids.concat())
    }
    let n = t.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for w in t.neighbor_ids(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted(t, c, usize::MAX)).min().unwrap()
}

/// One tree per isomorphism class on `n` vertices, grown leaf by leaf and
/// ordered by canonical code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_TREE_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "tree enumeration supports 1 to {MAX_TREE_N} vertices, got {n}"
        )));
    }
    let mut level = vec![Graph::path(1)];
    for size in 1..n {
        let mut next = std::collections::BTreeMap::new();
        for t in &level {
            for v in 0..size {
                let edges = t.edges().iter().copied().chain([(v, size)]);
                let grown = Graph::new(size + 1, edges).expect("adding a leaf keeps the tree simple");
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}
