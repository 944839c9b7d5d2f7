//! Shared inputs for the benchmarks.

use polymap_core::generators::{hex_torus, truncate};
use polymap_core::{Graph, RotationSystem};

/// Truncated hexagonal torus with `p * q` twelve-gons.
pub fn truncated_hex(p: usize, q: usize) -> RotationSystem {
    truncate(&hex_torus(p, q).expect("p, q >= 3"))
}

pub fn truncated_hex_graph(p: usize, q: usize) -> Graph {
    Graph::from_rotation_system(&truncated_hex(p, q))
}
