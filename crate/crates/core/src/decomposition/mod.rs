//! Block-cut trees and Tutte decompositions.

mod block_cut;
mod tutte;

pub use block_cut::{block_cut_tree, is_biconnected, Block, BlockCutTree};
pub use tutte::{
    amalgamate, component_embeddings, compose, restrict_to_node, tutte_decomposition, Amalgam, NodeEdge,
    NodeKind, NodeSignature, TutteLink, TutteNode, TutteTree,
};
