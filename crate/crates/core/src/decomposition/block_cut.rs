use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Subgraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Block {
    /// A single edge (bridge) or an isolated vertex.
    pub fn is_trivial(&self, g: &Graph) -> bool {
        self.edges.len() <= 1 && self.edges.iter().all(|&e| !g.is_loop(e))
    }
}

/// Blocks, cut vertices and the bipartite tree joining them.
///
/// Loops form their own one-vertex blocks. Blocks are sorted by their edge lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
    /// For each vertex, the blocks containing it.
    pub vertex_blocks: Vec<Vec<usize>>,
}

impl BlockCutTree {
    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    /// Cut vertices of block `a`.
    pub fn block_cuts(&self, a: usize) -> Vec<VertexId> {
        self.blocks[a]
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Tree edges `(block, cut vertex)`.
    pub fn tree_edges(&self) -> Vec<(usize, VertexId)> {
        let mut out = Vec::new();
        for (a, _) in self.blocks.iter().enumerate() {
            for v in self.block_cuts(a) {
                out.push((a, v));
            }
        }
        out
    }

    pub fn block_subgraph(&self, g: &Graph, a: usize) -> Subgraph {
        if self.blocks[a].edges.is_empty() {
            return g.induced_subgraph(&self.blocks[a].vertices);
        }
        g.edge_subgraph(&self.blocks[a].edges)
    }
}

pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut blocks: Vec<Block> = Vec::new();
    if n == 1 && g.edge_count() == 0 {
        blocks.push(Block { vertices: vec![0], edges: vec![] });
    }
    for e in g.edges().filter(|&e| g.is_loop(e)) {
        blocks.push(Block { vertices: vec![g.ends(e)[0]], edges: vec![e] });
    }

    // Iterative Hopcroft-Tarjan with an edge stack.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    if n > 0 {
        let root = 0;
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, entering edge, next adjacency index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let d = g.darts_at(v)[top.2];
                top.2 += 1;
                let e = d.edge();
                if g.is_loop(e) || Some(e) == parent_edge {
                    continue;
                }
                let w = g.target(d);
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let pe = parent_edge.expect("non-root has a parent edge");
                        let mut edges = Vec::new();
                        while let Some(x) = edge_stack.pop() {
                            edges.push(x);
                            if x == pe {
                                break;
                            }
                        }
                        let mut vertices: Vec<VertexId> =
                            edges.iter().flat_map(|&x| g.ends(x)).collect();
                        vertices.sort_unstable();
                        vertices.dedup();
                        edges.sort_unstable();
                        blocks.push(Block { vertices, edges });
                    }
                }
            }
        }
    }
    blocks.sort_by(|a, b| (&a.edges, &a.vertices).cmp(&(&b.edges, &b.vertices)));

    let mut vertex_blocks = vec![Vec::new(); n];
    for (a, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            vertex_blocks[v].push(a);
        }
    }
    let cut_vertices = (0..n).filter(|&v| vertex_blocks[v].len() >= 2).collect();
    Ok(BlockCutTree { blocks, cut_vertices, vertex_blocks })
}

/// True for connected loopless graphs with at least two edges and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    if g.has_loops() || g.edge_count() < 2 || !g.is_connected() {
        return false;
    }
    block_cut_tree(g).map(|t| t.blocks.len() == 1).unwrap_or(false)
}
