// SPDX-License-Identifier: Apache-2.0

//! Simple undirected graphs with optional positive integer edge weights,
//! plus the plain-text edge-list format used by every tool in the crate.
//!
//! Vertices are always `0..n`. Edges are stored once, normalised so that
//! the smaller endpoint comes first, and kept sorted. Weights are exact
//! big integers; a graph whose weights are all one is stored as unweighted
//! so that parsing and serialising are inverse to each other.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, ParseErrorKind, Result};

pub type Vertex = usize;

fn unit_weight() -> &'static BigUint {
    static ONE: OnceLock<BigUint> = OnceLock::new();
    ONE.get_or_init(BigUint::one)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    weights: Option<Vec<BigUint>>,
    /// `(neighbour, edge index)`, sorted by neighbour.
    adj: Vec<Vec<(Vertex, usize)>>,
}

impl Graph {
    /// Builds an unweighted graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, edges.into_iter().map(|(u, v)| (u, v, None)))
    }

    /// Builds a weighted graph. Zero weights are rejected.
    pub fn with_weights<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, BigUint)>,
    {
        Self::build(n, edges.into_iter().map(|(u, v, w)| (u, v, Some(w))))
    }

    fn build<I>(n: usize, edges: I) -> Result<Self>
    where
        I: Iterator<Item = (Vertex, Vertex, Option<BigUint>)>,
    {
        let mut list: Vec<(Vertex, Vertex, BigUint)> = Vec::new();
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let w = w.unwrap_or_else(BigUint::one);
            if w.is_zero() {
                return Err(Error::NonPositiveWeight { u, v });
            }
            list.push((u.min(v), u.max(v), w));
        }
        list.sort_by_key(|e| (e.0, e.1));
        for pair in list.windows(2) {
            if (pair[0].0, pair[0].1) == (pair[1].0, pair[1].1) {
                return Err(Error::DuplicateEdge(pair[0].0, pair[0].1));
            }
        }
        let weighted = list.iter().any(|(_, _, w)| !w.is_one());
        let mut adj = vec![Vec::new(); n];
        let mut edge_list = Vec::with_capacity(list.len());
        let mut weights = Vec::with_capacity(if weighted { list.len() } else { 0 });
        for (i, (u, v, w)) in list.into_iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
            edge_list.push((u, v));
            if weighted {
                weights.push(w);
            }
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: edge_list,
            weights: weighted.then_some(weights),
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in canonical order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Edges together with their weights, in canonical order.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (Vertex, Vertex, &BigUint)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(move |(i, &(u, v))| (u, v, self.edge_weight(i)))
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn edge_weight(&self, edge: usize) -> &BigUint {
        match &self.weights {
            Some(w) => &w[edge],
            None => unit_weight(),
        }
    }

    /// `(neighbour, edge index)` pairs sorted by neighbour.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adj[v]
    }

    pub fn neighbor_ids(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let row = &self.adj[u];
        row.binary_search_by(|&(x, _)| x.cmp(&v)).ok().map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<&BigUint> {
        self.edge_index(u, v).map(|e| self.edge_weight(e))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbor_ids(v) {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == self.n
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.n == 0 || !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    pub(crate) fn require_unweighted(&self, op: &'static str) -> Result<()> {
        if self.is_weighted() {
            return Err(Error::WeightedInput(op));
        }
        Ok(())
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// The same graph with every weight dropped.
    pub fn unweighted(&self) -> Graph {
        Graph {
            weights: None,
            ..self.clone()
        }
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in the given
    /// order. Weights are carried over.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self.weighted_edges().filter_map(|(u, v, w)| {
            let (a, b) = (index[u], index[v]);
            (a != usize::MAX && b != usize::MAX).then(|| (a, b, w.clone()))
        });
        Graph::with_weights(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .weighted_edges()
            .map(|(u, v, w)| (perm[u], perm[v], w.clone()));
        Graph::with_weights(self.n, edges).expect("relabelling must be a permutation")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }
}

/// Parses the edge-list format: a header line holding the vertex count,
/// then one `u v` or `u v w` line per edge. Blank lines and lines starting
/// with `#` are ignored; CRLF line endings are accepted.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut weighted: Option<bool> = None;
    let mut edges: Vec<(Vertex, Vertex, BigUint)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |kind| Error::Parse { line: line_no, kind };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            if tokens.len() != 1 {
                return Err(err(ParseErrorKind::BadHeader));
            }
            n = Some(parse_index(tokens[0]).map_err(err)?);
            continue;
        };
        let has_weight = match tokens.len() {
            2 => false,
            3 => true,
            k => return Err(err(ParseErrorKind::WrongTokenCount(k))),
        };
        match weighted {
            None => weighted = Some(has_weight),
            Some(w) if w != has_weight => return Err(err(ParseErrorKind::MixedFormats)),
            Some(_) => {}
        }
        let u = parse_index(tokens[0]).map_err(err)?;
        let v = parse_index(tokens[1]).map_err(err)?;
        for x in [u, v] {
            if x >= count {
                return Err(err(ParseErrorKind::VertexOutOfRange { vertex: x, n: count }));
            }
        }
        if u == v {
            return Err(err(ParseErrorKind::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
        }
        let w = if has_weight {
            parse_weight(tokens[2]).map_err(err)?
        } else {
            BigUint::one()
        };
        edges.push((u, v, w));
    }

    let n = n.ok_or(Error::Parse {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    Graph::with_weights(n, edges)
}

fn parse_index(token: &str) -> std::result::Result<usize, ParseErrorKind> {
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseErrorKind::NotAnInteger(token.to_string()));
    }
    token
        .parse()
        .map_err(|_| ParseErrorKind::NotAnInteger(token.to_string()))
}

fn parse_weight(token: &str) -> std::result::Result<BigUint, ParseErrorKind> {
    let digits = token.strip_prefix('+').unwrap_or(token);
    if let Some(rest) = digits.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseErrorKind::NonPositiveWeight(token.to_string()));
        }
    }
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseErrorKind::NotAnInteger(token.to_string()));
    }
    let w: BigUint = digits
        .parse()
        .map_err(|_| ParseErrorKind::NotAnInteger(token.to_string()))?;
    if w.is_zero() {
        return Err(ParseErrorKind::NonPositiveWeight(token.to_string()));
    }
    Ok(w)
}

/// Canonical text form: header, then edges sorted by `(min, max)`, with a
/// weight column only when some weight differs from one. No trailing
/// newline.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = g.vertex_count().to_string();
    for (u, v, w) in g.weighted_edges() {
        if g.is_weighted() {
            let _ = write!(out, "\n{u} {v} {w}");
        } else {
            let _ = write!(out, "\n{u} {v}");
        }
    }
    out
}
