// SPDX-License-Identifier: Apache-2.0

//! Geodetic and antipodal graphs.
//!
//! A connected graph is *geodetic* when every pair of vertices is joined by
//! exactly one shortest path, and *antipodal* when every vertex has exactly
//! one farthest vertex. Edge weights are positive integers of arbitrary
//! size; an unweighted graph has all weights equal to one.
//!
//! ```
//! use geodkit::{recognize, Graph};
//!
//! let pentagon = Graph::cycle(5);
//! let report = recognize(&pentagon, false).unwrap();
//! assert!(report.geodetic.holds);
//! assert!(!report.antipodal.holds);
//! assert_eq!(report.diameter, 2);
//! ```
//!
//! Fast recognition runs one bearing-tree pass per root
//! ([`recognition`]); [`paths`] holds the path-counting oracles it is
//! tested against. [`structure`] covers blocks and hereditary classes,
//! [`construct`] builds the projective-plane families and the weight and
//! subdivision transformations.

pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod gallery;
pub mod graph;
pub mod paths;
pub mod random;
pub mod recognition;
pub mod selftest;
pub mod structure;
pub mod verdict;

pub use error::{Error, Result};
pub use graph::{parse_graph, serialize_graph, Graph, Vertex};
pub use paths::{oracle_is_antipodal, oracle_is_geodetic};
pub use recognition::{check_antipodal_fast, check_geodetic_fast, check_weighted, recognize};
pub use verdict::{Verdict, Witness};
