// SPDX-License-Identifier: Apache-2.0

//! Graph operations that preserve or create geodetic / antipodal structure.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::paths::hop_eccentricities;

/// Replaces every edge by a path with `k` interior vertices. The interior
/// vertices of edge `e = (u, v)`, `u < v`, are `n + e·k .. n + (e+1)·k`,
/// listed from `u` towards `v`. Geodeticity is preserved exactly when `k`
/// is even.
pub fn subdivide(g: &Graph, k: usize) -> Result<Graph> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "subdivision needs an even k >= 2, got {k}"
        )));
    }
    g.require_unweighted("subdivide")?;
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(g.edge_count() * (k + 1));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let first = n + e * k;
        edges.push((u, first));
        edges.extend((first..first + k - 1).map(|x| (x, x + 1)));
        edges.push((first + k - 1, v));
    }
    Graph::new(n + k * g.edge_count(), edges)
}

/// Attaches a path through one vertex so that the result is antipodal: the
/// path's two ends are each other's unique antipode and every other vertex
/// has the farther end as its unique antipode.
///
/// The path passes through the lowest-id centre `c`. With diameter `d` and
/// radius `r`, it has `d + 1` new vertices on one side of `c` and `d` on the
/// other when `r < d`; when `r = d ≥ 1` each side needs one more vertex,
/// since otherwise the long end would tie with the far side of the graph.
/// New vertices are numbered outwards, long side first.
pub fn extend_to_antipodal(g: &Graph) -> Result<Graph> {
    g.require_unweighted("extend_to_antipodal")?;
    let ecc = hop_eccentricities(g)?;
    let d = ecc.iter().copied().max().unwrap();
    let r = ecc.iter().copied().min().unwrap();
    let centre = ecc.iter().position(|&e| e == r).unwrap();
    let (long, short) = if r < d || d == 0 {
        (d + 1, d)
    } else {
        (d + 2, d + 1)
    };
    let n = g.vertex_count();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let attach = |start: Vertex, count: usize, edges: &mut Vec<(Vertex, Vertex)>| {
        let mut prev = centre;
        for v in start..start + count {
            edges.push((prev, v));
            prev = v;
        }
    };
    attach(n, long, &mut edges);
    attach(n + long, short, &mut edges);
    Graph::new(n + long + short, edges)
}
