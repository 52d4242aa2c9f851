// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::graph::{Graph, Vertex};
use crate::paths::shortest_path_counts;

/// Outcome of a property check. A failing verdict always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fails(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `count` distinct geodesics join `source` and `target`.
    GeodesicPair {
        source: Vertex,
        target: Vertex,
        #[serde(serialize_with = "as_decimal")]
        count: BigUint,
    },
    /// From `root`, `vertex` is reached along shortest paths through two
    /// different neighbours.
    TwoPredecessors {
        root: Vertex,
        vertex: Vertex,
        predecessors: [Vertex; 2],
    },
    /// `vertex` has more than one farthest vertex.
    Antipodes { vertex: Vertex, antipodes: Vec<Vertex> },
    /// A forbidden induced subgraph, as a vertex list.
    InducedSubgraph { vertices: Vec<Vertex> },
    /// Endpoints of every longest path of a tree.
    LongestPaths {
        length: usize,
        endpoints: Vec<(Vertex, Vertex)>,
    },
}

fn as_decimal<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

impl Witness {
    /// Re-checks the witness against `g` from freshly computed distances.
    /// Induced-subgraph witnesses are shape-specific and always pass here;
    /// the module that produced them verifies the shape.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Witness::GeodesicPair {
                source,
                target,
                count,
            } => {
                let row = shortest_path_counts(g, *source).expect("vertex in range");
                &row.count[*target] == count && !count.is_one() && row.dist[*target].is_some()
            }
            Witness::TwoPredecessors {
                root,
                vertex,
                predecessors: [a, b],
            } => {
                let row = shortest_path_counts(g, *root).expect("vertex in range");
                let Some(dv) = &row.dist[*vertex] else {
                    return false;
                };
                a != b
                    && [a, b]
                        .iter()
                        .all(|&&p| match (&row.dist[p], g.weight(p, *vertex)) {
                            (Some(dp), Some(w)) => &(dp + w) == dv,
                            _ => false,
                        })
            }
            Witness::Antipodes { vertex, antipodes } => {
                let row = shortest_path_counts(g, *vertex).expect("vertex in range");
                let far = row.dist.iter().flatten().max().cloned();
                let maximisers: Vec<Vertex> = (0..g.vertex_count())
                    .filter(|&v| row.dist[v].is_some() && row.dist[v] == far)
                    .collect();
                antipodes.len() >= 2 && &maximisers == antipodes
            }
            Witness::InducedSubgraph { .. } => true,
            Witness::LongestPaths { endpoints, .. } => !endpoints.is_empty(),
        }
    }
}
