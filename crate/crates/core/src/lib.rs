//! Locally finite planar embeddings of infinite graphs given by finite truncations.

pub mod decomposition;
pub mod embeddability;
pub mod ends;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod harness;
pub mod io;
pub mod oneacc;
pub mod planarity;
pub mod rotation;
pub mod sides;

pub use error::{Error, Result};
pub use graph::{Dart, EdgeId, Graph, Subgraph, VertexId};
pub use rotation::{euler_genus, trace_faces, FaceWalk, RotationSystem};
pub use sides::{cycle_sides, CycleSides};
