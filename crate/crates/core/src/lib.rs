//! Embedded graphs on closed surfaces, encoded as signed rotation systems.
//!
//! The crate covers face tracing and Euler characteristic, the
//! polyhedral-map test via wheel neighborhoods, combinatorial curvature and
//! the light-vertex table, an exact discharging engine, and path
//! transferability computed over the transfer digraph of directed paths.

pub mod curvature;
pub mod discharging;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod rational;
pub mod surface_map;
pub mod transfer;
pub mod validity;

pub use curvature::{
    curvature, curvature_bound, gauss_bonnet_sum, match_light, scan_light, CurvatureBound,
    DegreeConstraint, LightPattern, LightVertex, ScanReport, ScanVerdict, LIGHT_TABLE,
};
pub use discharging::{
    run_discharge, BoundAudit, ChargeState, Discharge, Element, LedgerEntry, Rule, Stage,
    TransferLedger,
};
pub use error::{
    CurvatureError, DischargeError, MapError, ParseError, TransferError, ValidityError,
};
pub use format::{parse_map, serialize_map, MapFile};
pub use graph::Graph;
pub use rational::{rat, Rational};
pub use surface_map::{
    topology, trace_faces, Dart, EdgeClass, FaceClass, FacialWalk, MapTopology, RotationSystem,
    Sign,
};
pub use transfer::{
    enumerate_paths, find_stuck, is_n_transferable, longest_path_bound, steps, transferability,
    NVerdict, PathState, StateSet, StuckWitness, TransferDigraph, TransferabilityResult,
    DEFAULT_SEARCH_BUDGET, DEFAULT_STATE_BUDGET,
};
pub use validity::{check_polyhedral, ValidityReport, Witness};
