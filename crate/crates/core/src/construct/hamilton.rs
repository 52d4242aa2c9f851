// SPDX-License-Identifier: Apache-2.0

//! Hamiltonian cycle search: a seeded Pósa rotation walk, then exhaustive
//! backtracking with Warnsdorff ordering and degree pruning.

use rand::Rng;

use crate::graph::{Graph, Vertex};
use crate::random::seeded_rng;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamiltonianSearch {
    /// A cycle starting at 0 with `cycle[1] < cycle[n - 1]`.
    Found(Vec<Vertex>),
    /// The search space was exhausted.
    ProvenAbsent,
    BudgetExhausted,
}

impl HamiltonianSearch {
    pub fn cycle(self) -> Option<Vec<Vertex>> {
        match self {
            HamiltonianSearch::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Every vertex exactly once, consecutive vertices (cyclically) adjacent.
pub fn verify_hamiltonian_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Rotates the cycle to start at its smallest vertex and orients it so the
/// second entry is smaller than the last.
pub fn normalize_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let Some(start) = cycle.iter().enumerate().min_by_key(|&(_, v)| v).map(|(i, _)| i) else {
        return Vec::new();
    };
    let mut out: Vec<Vertex> = cycle[start..].iter().chain(&cycle[..start]).copied().collect();
    if out.len() > 2 && out[1] > out[out.len() - 1] {
        out[1..].reverse();
    }
    out
}

pub fn find_hamiltonian_cycle(g: &Graph, budget: u64) -> HamiltonianSearch {
    let n = g.vertex_count();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return HamiltonianSearch::ProvenAbsent;
    }
    let mut spent = 0u64;
    let walk_budget = (budget / 2).min(200 * (n * n) as u64);
    if let Some(c) = rotation_walk(g, walk_budget, &mut spent) {
        return HamiltonianSearch::Found(normalize_cycle(&c));
    }
    backtrack(g, budget.saturating_sub(spent))
}

const UNVISITED: usize = usize::MAX;

fn rotation_walk(g: &Graph, steps: u64, spent: &mut u64) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut rng = seeded_rng(n as u64);
    let mut pos = vec![UNVISITED; n];
    let mut path = vec![0];
    pos[0] = 0;
    let free = |pos: &[usize], w: Vertex| g.neighbor_ids(w).filter(|&z| pos[z] == UNVISITED).count();
    while *spent < steps {
        *spent += 1;
        let end = *path.last().unwrap();
        let next = g
            .neighbor_ids(end)
            .filter(|&w| pos[w] == UNVISITED)
            .min_by_key(|&w| (free(&pos, w), w));
        if let Some(w) = next {
            pos[w] = path.len();
            path.push(w);
            continue;
        }
        if path.len() == n && g.has_edge(end, path[0]) {
            return Some(path);
        }
        // Pósa rotation: pick a path neighbour `path[i]` of the endpoint and
        // reverse the segment after it.
        let pivots: Vec<usize> = g
            .neighbor_ids(end)
            .map(|w| pos[w])
            .filter(|&i| i + 2 < path.len())
            .collect();
        if pivots.is_empty() {
            return None;
        }
        let i = pivots[rng.gen_range(0..pivots.len())];
        path[i + 1..].reverse();
        for (j, &v) in path.iter().enumerate().skip(i + 1) {
            pos[v] = j;
        }
    }
    None
}

fn backtrack(g: &Graph, budget: u64) -> HamiltonianSearch {
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let candidates = |visited: &[bool], x: Vertex| {
        let mut c: Vec<(usize, Vertex)> = g
            .neighbor_ids(x)
            .filter(|&w| !visited[w])
            .map(|w| (g.neighbor_ids(w).filter(|&z| !visited[z]).count(), w))
            .collect();
        c.sort_unstable();
        c.into_iter().map(|(_, w)| w).collect::<Vec<_>>()
    };
    // After stepping x -> y, every unvisited neighbour of x still needs two
    // possible cycle neighbours, and the start needs a way back.
    let viable = |visited: &[bool], x: Vertex, y: Vertex| {
        let open = |z: Vertex| !visited[z] || z == y || z == 0;
        g.neighbor_ids(x)
            .filter(|&w| !visited[w])
            .all(|w| g.neighbor_ids(w).filter(|&z| open(z)).count() >= 2)
            && g.neighbor_ids(0).any(|z| !visited[z] || z == y)
    };

    visited[0] = true;
    let mut path = vec![0];
    let mut frames: Vec<(Vec<Vertex>, usize)> = vec![(candidates(&visited, 0), 0)];
    let mut spent = 0u64;
    while let Some((cands, next)) = frames.last_mut() {
        let Some(&y) = cands.get(*next) else {
            frames.pop();
            let v = path.pop().unwrap();
            visited[v] = false;
            continue;
        };
        *next += 1;
        spent += 1;
        if spent > budget {
            return HamiltonianSearch::BudgetExhausted;
        }
        let x = *path.last().unwrap();
        visited[y] = true;
        path.push(y);
        if path.len() == n {
            if g.has_edge(y, 0) {
                return HamiltonianSearch::Found(normalize_cycle(&path));
            }
        } else if viable(&visited, x, y) {
            frames.push((candidates(&visited, y), 0));
            continue;
        }
        path.pop();
        visited[y] = false;
    }
    HamiltonianSearch::ProvenAbsent
}
