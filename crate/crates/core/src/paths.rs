// SPDX-License-Identifier: Apache-2.0

//! Exact shortest-path distances and geodesic counts, and the brute-force
//! geodetic/antipodal oracles built on them.
//!
//! These are the reference implementations: every faster routine in the
//! crate is tested against them.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::verdict::{Verdict, Witness};

/// Distances and geodesic counts from one source. Unreachable vertices have
/// no distance and a count of zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: Vertex,
    pub dist: Vec<Option<BigUint>>,
    pub count: Vec<BigUint>,
}

pub fn shortest_path_counts(g: &Graph, source: Vertex) -> Result<DistanceRow> {
    let n = g.vertex_count();
    if source >= n {
        return Err(Error::VertexOutOfRange { vertex: source, n });
    }
    Ok(if g.is_weighted() {
        weighted_counts(g, source)
    } else {
        bfs_counts(g, source)
    })
}

fn bfs_counts(g: &Graph, source: Vertex) -> DistanceRow {
    let n = g.vertex_count();
    let mut dist: Vec<Option<usize>> = vec![None; n];
    let mut count = vec![BigUint::zero(); n];
    dist[source] = Some(0);
    count[source] = BigUint::one();
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for v in g.neighbor_ids(u) {
            match dist[v] {
                None => {
                    dist[v] = Some(du + 1);
                    count[v] = count[u].clone();
                    queue.push_back(v);
                }
                Some(dv) if dv == du + 1 => {
                    let add = count[u].clone();
                    count[v] += add;
                }
                Some(_) => {}
            }
        }
    }
    DistanceRow {
        source,
        dist: dist.into_iter().map(|d| d.map(BigUint::from)).collect(),
        count,
    }
}

// Label-setting relaxation: a vertex's count is final once it is popped,
// because every predecessor on a shortest path has a strictly smaller key.
fn weighted_counts(g: &Graph, source: Vertex) -> DistanceRow {
    let n = g.vertex_count();
    let mut dist: Vec<Option<BigUint>> = vec![None; n];
    let mut count = vec![BigUint::zero(); n];
    let mut done = vec![false; n];
    dist[source] = Some(BigUint::zero());
    count[source] = BigUint::one();
    let mut heap = BinaryHeap::from([Reverse((BigUint::zero(), source))]);
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, e) in g.neighbors(u) {
            if done[v] {
                continue;
            }
            let cand = &d + g.edge_weight(e);
            match &dist[v] {
                Some(dv) if *dv < cand => {}
                Some(dv) if *dv == cand => {
                    let add = count[u].clone();
                    count[v] += add;
                }
                _ => {
                    count[v] = count[u].clone();
                    dist[v] = Some(cand.clone());
                    heap.push(Reverse((cand, v)));
                }
            }
        }
    }
    DistanceRow { source, dist, count }
}

/// Geodetic iff every ordered pair is joined by exactly one geodesic. The
/// witness is the lexicographically first pair with two or more.
pub fn oracle_is_geodetic(g: &Graph) -> Result<Verdict> {
    g.require_connected()?;
    for s in 0..g.vertex_count() {
        let row = shortest_path_counts(g, s)?;
        if let Some(t) = row.count.iter().position(|c| !c.is_one()) {
            return Ok(Verdict::fails(Witness::GeodesicPair {
                source: s,
                target: t,
                count: row.count[t].clone(),
            }));
        }
    }
    Ok(Verdict::holds())
}

/// Antipodal iff every vertex has a single farthest vertex. A one-vertex
/// graph counts: its vertex is its own unique farthest vertex.
pub fn oracle_is_antipodal(g: &Graph) -> Result<Verdict> {
    g.require_connected()?;
    for u in 0..g.vertex_count() {
        let far = farthest_vertices(g, u)?;
        if far.len() > 1 {
            return Ok(Verdict::fails(Witness::Antipodes {
                vertex: u,
                antipodes: far,
            }));
        }
    }
    Ok(Verdict::holds())
}

/// All vertices at maximum distance from `u`, ascending.
pub fn farthest_vertices(g: &Graph, u: Vertex) -> Result<Vec<Vertex>> {
    let row = shortest_path_counts(g, u)?;
    let ecc = row.dist.iter().flatten().max().cloned();
    Ok((0..g.vertex_count())
        .filter(|&v| row.dist[v].is_some() && row.dist[v] == ecc)
        .collect())
}

pub fn eccentricities(g: &Graph) -> Result<Vec<BigUint>> {
    g.require_connected()?;
    (0..g.vertex_count())
        .map(|u| {
            let row = shortest_path_counts(g, u)?;
            Ok(row.dist.into_iter().flatten().max().unwrap_or_default())
        })
        .collect()
}

pub fn diameter(g: &Graph) -> Result<BigUint> {
    Ok(eccentricities(g)?.into_iter().max().unwrap_or_default())
}

/// Hop distances from `source`; `None` for unreachable vertices. Weights are
/// ignored.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for v in g.neighbor_ids(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs hop distances of a connected graph.
pub fn hop_distance_matrix(g: &Graph) -> Result<Vec<Vec<usize>>> {
    g.require_connected()?;
    Ok((0..g.vertex_count())
        .map(|s| bfs_distances(g, s).into_iter().map(Option::unwrap).collect())
        .collect())
}

/// Hop-count eccentricities of a connected graph, ignoring weights.
pub fn hop_eccentricities(g: &Graph) -> Result<Vec<usize>> {
    Ok(hop_distance_matrix(g)?
        .into_iter()
        .map(|row| row.into_iter().max().unwrap_or(0))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn small(row: &DistanceRow) -> (Vec<u64>, Vec<u64>) {
        let d = row
            .dist
            .iter()
            .map(|d| d.as_ref().map_or(u64::MAX, |x| x.try_into().unwrap()))
            .collect();
        let c = row.count.iter().map(|c| c.try_into().unwrap()).collect();
        (d, c)
    }

    #[test]
    fn c4_opposite_vertex_has_two_geodesics() {
        let row = shortest_path_counts(&Graph::cycle(4), 0).unwrap();
        assert_eq!(small(&row), (vec![0, 1, 2, 1], vec![1, 1, 2, 1]));
    }

    #[test]
    fn k5_counts_are_all_one() {
        let g = Graph::complete(5);
        for s in 0..5 {
            let (d, c) = small(&shortest_path_counts(&g, s).unwrap());
            for v in 0..5 {
                assert_eq!(c[v], 1);
                assert_eq!(d[v], u64::from(v != s));
            }
        }
    }

    #[test]
    fn p3_from_an_end() {
        let row = shortest_path_counts(&Graph::path(3), 0).unwrap();
        assert_eq!(small(&row), (vec![0, 1, 2], vec![1, 1, 1]));
    }

    #[test]
    fn unreachable_vertices_are_flagged() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let row = shortest_path_counts(&g, 0).unwrap();
        assert_eq!(row.dist[2], None);
        assert!(row.count[2].is_zero());
    }

    #[test]
    fn weighted_counts_detect_ties() {
        let square = parse_graph("4\n0 1 1\n1 2 2\n2 3 1\n0 3 2").unwrap();
        let row = shortest_path_counts(&square, 0).unwrap();
        assert_eq!(small(&row), (vec![0, 1, 3, 2], vec![1, 1, 2, 1]));
    }

    #[test]
    fn geodetic_oracle_on_cycles() {
        assert!(oracle_is_geodetic(&Graph::cycle(5)).unwrap().holds);
        let c4 = oracle_is_geodetic(&Graph::cycle(4)).unwrap();
        assert_eq!(
            c4.witness,
            Some(Witness::GeodesicPair {
                source: 0,
                target: 2,
                count: BigUint::from(2u32)
            })
        );
        assert!(c4.witness.unwrap().verify(&Graph::cycle(4)));
    }

    #[test]
    fn trees_are_geodetic() {
        let t = parse_graph("7\n0 1\n0 2\n1 3\n1 4\n2 5\n5 6").unwrap();
        assert!(oracle_is_geodetic(&t).unwrap().holds);
    }

    #[test]
    fn antipodal_oracle_examples() {
        assert!(oracle_is_antipodal(&Graph::cycle(6)).unwrap().holds);
        assert!(oracle_is_antipodal(&Graph::path(4)).unwrap().holds);
        let c5 = oracle_is_antipodal(&Graph::cycle(5)).unwrap();
        assert_eq!(
            c5.witness,
            Some(Witness::Antipodes {
                vertex: 0,
                antipodes: vec![2, 3]
            })
        );
        assert!(oracle_is_antipodal(&Graph::path(1)).unwrap().holds);
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(oracle_is_geodetic(&g), Err(Error::Disconnected)));
        assert!(matches!(oracle_is_antipodal(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn diameter_of_petersen_is_two() {
        assert_eq!(diameter(&Graph::petersen()).unwrap(), BigUint::from(2u32));
    }
}
