// SPDX-License-Identifier: Apache-2.0

//! Generators: finite fields, projective planes and Levi graphs, the
//! Hamiltonian geodetic families, and weight/structure-adding operations.

pub mod embed;
pub mod families;
pub mod field;
pub mod hamilton;
pub mod ops;
pub mod plane;
pub mod weights;

pub use embed::embed_weighted_geodetic;
pub use families::{
    build_diameter2, build_diameter2_with_budget, build_diameter4, build_diameter4_with_budget, build_levi,
    build_levi_with_budget, Construction,
};
pub use field::{FiniteField, SUPPORTED_ORDERS};
pub use hamilton::{
    find_hamiltonian_cycle, normalize_cycle, verify_hamiltonian_cycle, HamiltonianSearch, DEFAULT_BUDGET,
};
pub use ops::{extend_to_antipodal, subdivide};
pub use plane::{levi_graph, projective_plane, ProjectivePlane};
pub use weights::assign_weights;
