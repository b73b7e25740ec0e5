//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while building, inspecting, or transforming
/// a colored graph.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} has no edge of color {color}")]
    MissingColorAtVertex { vertex: usize, color: usize },

    #[error("vertex {vertex} has more than one edge of color {color}")]
    DuplicateColorAtVertex { vertex: usize, color: usize },

    #[error("self-loop of color {color} at vertex {vertex}")]
    SelfLoop { vertex: usize, color: usize },

    #[error("orientation violation: {0}")]
    OrientationViolation(String),

    #[error("color {color} out of range for dimension {dimension}")]
    ColorOutOfRange { color: usize, dimension: usize },

    #[error("vertex id {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("duplicate vertex id {vertex}")]
    DuplicateVertexId { vertex: usize },

    #[error("operation requires dimension {expected}, graph has dimension {actual}")]
    WrongDimension { expected: usize, actual: usize },

    #[error("residue spans {actual} colors, operation requires {expected}")]
    WrongResidueRank { expected: usize, actual: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("dipole order k={k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },

    #[error("dipole not present in graph")]
    DipoleNotFound,

    #[error("dipole is improper; contraction refused")]
    ImproperDipole,

    #[error("welding the dangling color-{color} edges would create a self-loop")]
    DegenerateWeld { color: usize },

    #[error("bad host selection: {0}")]
    BadHostSelection(String),

    #[error("brute force over {n}^{e} assignments exceeds the feasibility guard")]
    TooLargeForBruteForce { n: u64, e: usize },

    #[error("rank method requires a prime group order, got {0}")]
    NonPrimeForRank(u64),

    #[error("solution count {count} is not a power of the group order {n}")]
    SolutionCountNotPower { count: u64, n: u64 },

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid graph json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
