use thiserror::Error;

use crate::graph::VertexId;

/// Errors produced by the algorithms in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("rotation system is not planar (genus {0})")]
    NonPlanarRotation(usize),

    #[error("graph is not planar")]
    NonPlanar,

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: u64,
        limit: u64,
    },

    #[error("graph is not 2-connected: {0}")]
    NotBiconnected(String),

    #[error("graph contains a loop at vertex {0}, which this operation does not support")]
    Loop(VertexId),

    #[error("inconsistent Tutte tree: {0}")]
    InconsistentTree(String),

    #[error("boundary set is empty; use plain planarity for finite graphs")]
    EmptyBoundary,

    #[error("invalid exhaustion: {0}")]
    InvalidExhaustion(String),

    #[error("level {0} is not obstructed")]
    NotObstructed(usize),

    #[error("level {0} is obstructed")]
    Obstructed(usize),

    #[error("expected one accumulation point, found acc = {0}")]
    AccNotOne(usize),

    #[error("no face carries all boundary vertices")]
    NoInfiniteFace,

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("pipeline invariant violated: {0}")]
    PipelineViolation(String),

    #[error("triangulation error: {0}")]
    Triangulation(String),

    #[error("circle packing did not converge after {sweeps} sweeps (residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("degenerate layout: {0}")]
    DegenerateLayout(String),

    #[error("angle sum {0} is not below pi")]
    AngleSum(f64),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("payment function `{0}` is not invariant under relabeling")]
    NonLocalPayment(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
