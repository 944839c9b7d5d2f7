use thiserror::Error;

/// Structural problems with a rotation system or lookups into a topology.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("rotation system has no vertices")]
    NoVertices,
    #[error("vertex {vertex} has an empty rotation")]
    EmptyRotation { vertex: usize },
    #[error("dart (edge {edge}, end 1) is missing: edge {edge} appears only once")]
    MissingDart { edge: usize },
    #[error("edge {edge} appears {count} times; every edge needs exactly two darts")]
    DartCount { edge: usize, count: usize },
    #[error("signature has {got} entries but the rotations use {expected} edges")]
    SignatureLength { expected: usize, got: usize },
    #[error("{labels} vertex labels supplied for {vertices} rotations")]
    LabelCount { labels: usize, vertices: usize },
    #[error("underlying graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("unknown face {0}")]
    UnknownFace(usize),
    #[error("generator parameters ({p}, {q}) must both be at least 3")]
    Parameters { p: usize, q: usize },
}

/// A parse failure anchored at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: duplicate vertex id `{id}`")]
    DuplicateVertex { line: usize, id: String },
    #[error("edge {edge} appears {count} time(s); expected exactly 2")]
    EdgeCount { edge: String, count: usize },
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidityError {
    /// A wheel-neighborhood embedding that is not 3-connected or not closed
    /// 2-cell. This indicates a bug in one of the checks, not bad input.
    #[error("internal inconsistency: wheel-neighborhood holds but {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("edge {edge} has face {face} on both sides; input is not a closed 2-cell map")]
    SameFaceBothSides { edge: usize, face: usize },
    #[error("rule {rule} applied out of order: {reason}")]
    OutOfOrder { rule: &'static str, reason: String },
    #[error("charge not conserved after {stage}: total {total}, expected {expected}")]
    Conservation {
        stage: String,
        total: String,
        expected: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error("path length must be at least 1")]
    ZeroLength,
    #[error("state budget of {budget} exceeded at n = {n} (at least {count} states)")]
    Budget {
        n: usize,
        budget: usize,
        count: usize,
    },
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudget { budget: u64 },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error("degree prefix is empty")]
    EmptyPrefix,
    #[error("face degree must be positive")]
    ZeroDegree,
}
