//! Accumulation points of rotation systems and the randomized one-point construction.

pub mod acc;
pub mod infinite_face;
pub mod pipeline;

pub use acc::{acc, acc_truncated, AccReport, LevelAcc, Probe};
pub use infinite_face::{infinite_face, infinite_face_vertices, wired_extension, InfiniteRegion};
pub use pipeline::{
    random_one_acc_embedding, random_planar_rotation, BlockChoice, BlockEmbeddingPlan, BlockPlan, BlockRoute,
    CoreSign, CutGluing, FreeChoice, GlueSegment, OneAccEmbedding, MAX_CORE_COMBINATIONS,
};
