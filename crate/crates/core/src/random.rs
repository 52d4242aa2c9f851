// SPDX-License-Identifier: Apache-2.0

//! Seeded random graph generators for the randomized sweeps.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub const DEFAULT_SEED: u64 = 0x6765_6f64;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labeled tree on `n` vertices (Prüfer decoding).
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// A random spanning tree plus each remaining pair independently with
/// probability `density`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let tree = random_tree(rng, n);
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random connected graph with integer weights drawn from `1..=max_weight`.
pub fn random_weighted_graph<R: Rng>(rng: &mut R, n: usize, density: f64, max_weight: u32) -> Graph {
    let g = random_connected_graph(rng, n, density);
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u, v, BigUint::from(rng.gen_range(1..=max_weight))))
        .collect();
    Graph::with_weights(n, edges).unwrap()
}

/// Cactus whose blocks are bridges and odd cycles, grown by gluing each new
/// block at a random existing vertex. Vertex labels are shuffled.
pub fn random_odd_cactus<R: Rng>(rng: &mut R, blocks: usize) -> Graph {
    let mut n = 1;
    let mut edges = Vec::new();
    for _ in 0..blocks {
        let anchor = rng.gen_range(0..n);
        let len = if rng.gen_bool(0.3) {
            2
        } else {
            2 * rng.gen_range(1..=3) + 1
        };
        let mut prev = anchor;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        if len > 2 {
            edges.push((prev, anchor));
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
