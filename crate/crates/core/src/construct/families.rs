// SPDX-License-Identifier: Apache-2.0

//! Hamiltonian geodetic graphs of diameter four and two built from the Levi
//! graph of PG(2, q).

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::hamilton::{find_hamiltonian_cycle, normalize_cycle, HamiltonianSearch, DEFAULT_BUDGET};
use super::plane::{levi_graph, projective_plane, ProjectivePlane};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub name: &'static str,
    pub q: usize,
    pub graph: Graph,
    pub hamiltonian_cycle: Option<Vec<Vertex>>,
}

fn levi_with_cycle(q: usize, budget: u64) -> Result<(ProjectivePlane, Graph, Vec<Vertex>)> {
    let plane = projective_plane(q)?;
    let levi = levi_graph(&plane);
    match find_hamiltonian_cycle(&levi, budget) {
        HamiltonianSearch::Found(cycle) => Ok((plane, levi, cycle)),
        HamiltonianSearch::ProvenAbsent => Err(Error::NoHamiltonianCycle),
        HamiltonianSearch::BudgetExhausted => Err(Error::BudgetExhausted(budget)),
    }
}

/// The Levi graph of PG(2, q) together with a Hamiltonian cycle.
pub fn build_levi(q: usize) -> Result<Construction> {
    build_levi_with_budget(q, DEFAULT_BUDGET)
}

pub fn build_levi_with_budget(q: usize, budget: u64) -> Result<Construction> {
    let (_, graph, cycle) = levi_with_cycle(q, budget)?;
    Ok(Construction {
        name: "levi",
        q,
        graph,
        hamiltonian_cycle: Some(cycle),
    })
}

/// `(q+1)³+1` vertices, `(q+1)`-regular, diameter 4: every line of the Levi
/// graph becomes a `K_{q+1}` whose `j`-th vertex is matched to the line's
/// `j`-th point. Line `i`'s clique occupies ids `N + i(q+1) ..`.
pub fn build_diameter4(q: usize) -> Result<Construction> {
    build_diameter4_with_budget(q, DEFAULT_BUDGET)
}

pub fn build_diameter4_with_budget(q: usize, budget: u64) -> Result<Construction> {
    let (plane, _, levi_cycle) = levi_with_cycle(q, budget)?;
    let n = plane.size();
    let k = q + 1;
    let clique = |line: usize, j: usize| n + line * k + j;
    let mut edges = Vec::new();
    for (line, pts) in plane.line_points.iter().enumerate() {
        for (j, &p) in pts.iter().enumerate() {
            edges.push((p, clique(line, j)));
            for j2 in j + 1..k {
                edges.push((clique(line, j), clique(line, j2)));
            }
        }
    }
    let graph = Graph::new(n * (k + 1), edges)?;

    let len = levi_cycle.len();
    let mut cycle = Vec::with_capacity(graph.vertex_count());
    for (t, &v) in levi_cycle.iter().enumerate() {
        if v < n {
            cycle.push(v);
            continue;
        }
        let line = v - n;
        let slot = |p: Vertex| plane.line_points[line].binary_search(&p).unwrap();
        let enter = slot(levi_cycle[(t + len - 1) % len]);
        let leave = slot(levi_cycle[(t + 1) % len]);
        cycle.push(clique(line, enter));
        cycle.extend(
            (0..k)
                .filter(|&j| j != enter && j != leave)
                .map(|j| clique(line, j)),
        );
        cycle.push(clique(line, leave));
    }
    Ok(Construction {
        name: "diam4",
        q,
        graph,
        hamiltonian_cycle: Some(normalize_cycle(&cycle)),
    })
}

/// `2q²+2q+1` vertices, diameter 2. The first edge `(p, L)` of the Levi
/// cycle is contracted into `p`; the lines through `p` and the points of `L`
/// become two cliques, and for every line `L' ≠ L` through `p` the points of
/// `L'` other than `p` become a clique. Ids above `L` shift down by one.
pub fn build_diameter2(q: usize) -> Result<Construction> {
    build_diameter2_with_budget(q, DEFAULT_BUDGET)
}

pub fn build_diameter2_with_budget(q: usize, budget: u64) -> Result<Construction> {
    let (plane, levi, levi_cycle) = levi_with_cycle(q, budget)?;
    let n = plane.size();
    let (p, l) = (levi_cycle[0], levi_cycle[1]);
    debug_assert!(p < n && l >= n);
    let relabel = |v: Vertex| match v.cmp(&l) {
        std::cmp::Ordering::Less => v,
        std::cmp::Ordering::Equal => p,
        std::cmp::Ordering::Greater => v - 1,
    };
    let mut edges: Vec<(Vertex, Vertex)> = levi
        .edges()
        .iter()
        .filter(|&&e| e != (p, l))
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .collect();
    let clique = |members: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>| {
        for (i, &a) in members.iter().enumerate() {
            edges.extend(members[i + 1..].iter().map(|&b| (a, b)));
        }
    };
    let lines_through_p: Vec<usize> = plane.point_lines[p]
        .iter()
        .copied()
        .filter(|&x| x + n != l)
        .collect();
    let tier1_lines: Vec<Vertex> = lines_through_p.iter().map(|&x| relabel(x + n)).collect();
    clique(&tier1_lines, &mut edges);
    let tier1_points: Vec<Vertex> = plane.line_points[l - n]
        .iter()
        .copied()
        .filter(|&x| x != p)
        .collect();
    clique(&tier1_points, &mut edges);
    for &line in &lines_through_p {
        let group: Vec<Vertex> = plane.line_points[line]
            .iter()
            .copied()
            .filter(|&x| x != p)
            .collect();
        clique(&group, &mut edges);
    }
    let graph = Graph::new(2 * n - 1, edges)?;
    let cycle: Vec<Vertex> = levi_cycle
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != 1)
        .map(|(_, &v)| relabel(v))
        .collect();
    Ok(Construction {
        name: "diam2",
        q,
        graph,
        hamiltonian_cycle: Some(normalize_cycle(&cycle)),
    })
}
