//! Finite truncations of infinite graphs, exhaustions, wired graphs and Tutte cores.
//!
//! "Infinite" is read at truncation scale as "reaches the boundary".

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::decomposition::{BlockCutTree, TutteTree};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Subgraph, VertexId};

/// A finite graph whose `boundary` vertices are adjacent to the (infinite) rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedGraph {
    pub graph: Graph,
    pub boundary: Vec<VertexId>,
    pub level: usize,
}

impl TruncatedGraph {
    pub fn new(graph: Graph, mut boundary: Vec<VertexId>, level: usize) -> Result<TruncatedGraph> {
        boundary.sort_unstable();
        boundary.dedup();
        if let Some(&v) = boundary.iter().find(|&&v| v >= graph.vertex_count()) {
            return Err(Error::InvalidExhaustion(format!("boundary vertex {v} out of range")));
        }
        Ok(TruncatedGraph { graph, boundary, level })
    }

    pub fn is_finite(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn boundary_mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.graph.vertex_count()];
        for &b in &self.boundary {
            m[b] = true;
        }
        m
    }
}

/// One level of an exhaustion, as vertex sets of the ambient graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub vertices: Vec<VertexId>,
    pub boundary: Vec<VertexId>,
}

/// Nested truncations `G_0 ⊂ G_1 ⊂ … ⊂ G_k`, stored as induced vertex sets
/// of the deepest graph. Inclusions are the identity on ambient ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exhaustion {
    graph: Graph,
    levels: Vec<Level>,
}

/// Injective map from level `i` into level `i + 1`, in local ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Exhaustion {
    /// Validates nesting, coverage of the deepest level and boundary membership.
    pub fn new(graph: Graph, mut levels: Vec<Level>) -> Result<Exhaustion> {
        let bad = |m: String| Err(Error::InvalidExhaustion(m));
        if levels.is_empty() {
            return bad("no levels".into());
        }
        let n = graph.vertex_count();
        for (i, l) in levels.iter_mut().enumerate() {
            l.vertices.sort_unstable();
            l.vertices.dedup();
            l.boundary.sort_unstable();
            l.boundary.dedup();
            if l.vertices.iter().any(|&v| v >= n) {
                return bad(format!("level {i} names a vertex out of range"));
            }
            if l.boundary.iter().any(|b| l.vertices.binary_search(b).is_err()) {
                return bad(format!("level {i} boundary is not inside the level"));
            }
        }
        for i in 1..levels.len() {
            if !is_subset(&levels[i - 1].vertices, &levels[i].vertices) {
                return bad(format!("level {} is not contained in level {i}", i - 1));
            }
        }
        if levels.last().map(|l| l.vertices.len()) != Some(n) {
            return bad("deepest level must contain every vertex".into());
        }
        Ok(Exhaustion { graph, levels })
    }

    pub fn from_truncation(t: &TruncatedGraph) -> Exhaustion {
        Exhaustion {
            graph: t.graph.clone(),
            levels: vec![Level { vertices: t.graph.vertices().collect(), boundary: t.boundary.clone() }],
        }
    }

    /// The ambient (deepest) graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Boundary of the deepest level in ambient ids.
    pub fn deepest_boundary(&self) -> &[VertexId] {
        &self.levels[self.levels.len() - 1].boundary
    }

    pub fn deepest(&self) -> TruncatedGraph {
        TruncatedGraph {
            graph: self.graph.clone(),
            boundary: self.deepest_boundary().to_vec(),
            level: self.levels.len() - 1,
        }
    }

    /// Level `i` as a truncated graph, with its embedding into the ambient graph.
    pub fn truncation(&self, i: usize) -> (TruncatedGraph, Subgraph) {
        let level = &self.levels[i];
        let sub = self.graph.induced_subgraph(&level.vertices);
        let boundary = level
            .boundary
            .iter()
            .map(|b| level.vertices.binary_search(b).expect("boundary inside level"))
            .collect();
        (TruncatedGraph { graph: sub.graph.clone(), boundary, level: i }, sub)
    }

    pub fn inclusion(&self, i: usize) -> Inclusion {
        let (_, small) = self.truncation(i);
        let (_, big) = self.truncation(i + 1);
        let vertex_local = big.local_vertices(self.graph.vertex_count());
        let edge_local = big.local_darts(self.graph.edge_count());
        Inclusion {
            vertices: small.vertex_map.iter().map(|&v| vertex_local[v].expect("nested")).collect(),
            edges: small
                .edge_map
                .iter()
                .map(|&e| edge_local[2 * e].expect("nested").edge())
                .collect(),
        }
    }

    /// The first `k` levels, re-rooted on level `k - 1`.
    pub fn prefix(&self, k: usize) -> Result<Exhaustion> {
        if k == 0 || k > self.levels.len() {
            return Err(Error::InvalidExhaustion(format!("cannot keep {k} of {} levels", self.levels.len())));
        }
        let top = &self.levels[k - 1];
        let sub = self.graph.induced_subgraph(&top.vertices);
        let local = sub.local_vertices(self.graph.vertex_count());
        let map = |vs: &[VertexId]| vs.iter().map(|&v| local[v].expect("nested")).collect();
        let levels = self.levels[..k]
            .iter()
            .map(|l| Level { vertices: map(&l.vertices), boundary: map(&l.boundary) })
            .collect();
        Exhaustion::new(sub.graph, levels)
    }

    /// Violations of the normalization invariants, empty when normalized.
    pub fn check_normalized(&self) -> Vec<String> {
        let mut out = Vec::new();
        let g = &self.graph;
        let n = g.vertex_count();
        let deep = mask(n, self.deepest_boundary());
        for (i, level) in self.levels.iter().enumerate() {
            let inside = mask(n, &level.vertices);
            let sub = g.induced_subgraph(&level.vertices);
            if !sub.graph.is_connected() {
                out.push(format!("level {i} is disconnected"));
            }
            if i + 1 == self.levels.len() {
                continue;
            }
            let next = mask(n, &self.levels[i + 1].vertices);
            for &v in &level.vertices {
                if g.neighbors(v).any(|w| !next[w]) {
                    out.push(format!("a neighbour of vertex {v} is missing from level {}", i + 1));
                    break;
                }
            }
            if self.levels[i + 1].boundary.iter().any(|&b| inside[b]) {
                out.push(format!("boundary of level {} meets level {i}", i + 1));
            }
            for comp in g.components_avoiding(&inside) {
                if !comp.iter().any(|&v| deep[v]) {
                    out.push(format!("a component outside level {i} never reaches the boundary"));
                }
            }
            if level.boundary != outer_boundary(g, &inside) {
                out.push(format!("boundary of level {i} is not its set of outward-adjacent vertices"));
            }
        }
        out
    }

    /// Grows lower levels until the normalization invariants hold: finite
    /// pockets of the complement are absorbed, every level contains the
    /// neighbourhood of the previous one, and lower boundaries are recomputed.
    pub fn refine(&self) -> Result<Exhaustion> {
        let g = &self.graph;
        let n = g.vertex_count();
        let k = self.levels.len();
        let deep = mask(n, self.deepest_boundary());
        let mut sets: Vec<Vec<bool>> = self.levels.iter().map(|l| mask(n, &l.vertices)).collect();
        for i in 0..k.saturating_sub(1) {
            for comp in g.components_avoiding(&sets[i]) {
                if !comp.iter().any(|&v| deep[v]) {
                    for v in comp {
                        sets[i][v] = true;
                    }
                }
            }
            for v in 0..n {
                if sets[i][v] {
                    sets[i + 1][v] = true;
                    for w in g.neighbors(v) {
                        sets[i + 1][w] = true;
                    }
                }
            }
        }
        if k >= 2 {
            if let Some(b) = self.deepest_boundary().iter().find(|&&b| sets[k - 2][b]) {
                return Err(Error::InvalidExhaustion(format!(
                    "boundary vertex {b} of the deepest level lies in level {}; deepen the truncation",
                    k - 2
                )));
            }
        }
        let mut levels = Vec::with_capacity(k);
        for (i, set) in sets.iter().enumerate() {
            let vertices: Vec<VertexId> = (0..n).filter(|&v| set[v]).collect();
            let boundary = if i + 1 == k { self.deepest_boundary().to_vec() } else { outer_boundary(g, set) };
            levels.push(Level { vertices, boundary });
        }
        let ex = Exhaustion::new(g.clone(), levels)?;
        if let Some(v) = ex.check_normalized().into_iter().next() {
            return Err(Error::InvalidExhaustion(v));
        }
        Ok(ex)
    }
}

fn mask(n: usize, vs: &[VertexId]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

fn outer_boundary(g: &Graph, inside: &[bool]) -> Vec<VertexId> {
    g.vertices().filter(|&v| inside[v] && g.neighbors(v).any(|w| !inside[w])).collect()
}

/// `G^+`: the truncation plus an apex joined to every boundary vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wired {
    pub graph: Graph,
    pub apex: VertexId,
}

pub fn wire(t: &TruncatedGraph) -> Result<Wired> {
    if t.boundary.is_empty() {
        return Err(Error::EmptyBoundary);
    }
    let mut graph = t.graph.clone();
    let apex = graph.add_vertex();
    for &b in &t.boundary {
        graph.add_edge(apex, b);
    }
    Ok(Wired { graph, apex })
}

/// For each block, its cut vertices whose side away from the block reaches
/// the boundary.
pub fn cut_infinity(bct: &BlockCutTree, t: &TruncatedGraph) -> Vec<Vec<VertexId>> {
    let g = &t.graph;
    let boundary = t.boundary_mask();
    bct.blocks
        .iter()
        .enumerate()
        .map(|(a, block)| {
            let mut in_block = vec![false; g.edge_count()];
            for &e in &block.edges {
                in_block[e] = true;
            }
            bct.block_cuts(a)
                .into_iter()
                .filter(|&v| reaches(g, v, &in_block, &boundary))
                .collect()
        })
        .collect()
}

/// Whether `v` reaches a marked vertex without using blocked edges.
fn reaches(g: &Graph, v: VertexId, blocked: &[bool], marked: &[bool]) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        if marked[x] {
            return true;
        }
        for &d in g.darts_at(x) {
            let w = g.target(d);
            if !blocked[d.edge()] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreMarking {
    /// Nodes meeting the boundary or a special vertex.
    pub v_infinity: Vec<usize>,
    /// Convex hull of `v_infinity` in the Tutte tree.
    pub core_nodes: Vec<usize>,
    pub special: Vec<VertexId>,
}

impl CoreMarking {
    pub fn contains(&self, node: usize) -> bool {
        self.core_nodes.binary_search(&node).is_ok()
    }
}

/// Marks the core of a Tutte tree whose node labels are vertices of `t.graph`.
pub fn core(tt: &TutteTree, special: &[VertexId], t: &TruncatedGraph) -> CoreMarking {
    let mut marked = t.boundary_mask();
    for &s in special {
        marked[s] = true;
    }
    let v_infinity: Vec<usize> = tt
        .nodes
        .iter()
        .enumerate()
        .filter(|(_, n)| n.labels.iter().any(|&v| marked[v]))
        .map(|(i, _)| i)
        .collect();
    let core_nodes = convex_hull(tt, &v_infinity);
    let mut special = special.to_vec();
    special.sort_unstable();
    special.dedup();
    CoreMarking { v_infinity, core_nodes, special }
}

/// Nodes lying in `set` or separating two members of it.
pub fn convex_hull(tt: &TutteTree, set: &[usize]) -> Vec<usize> {
    let adj = tt.adjacency();
    let mut member = vec![false; tt.nodes.len()];
    for &s in set {
        member[s] = true;
    }
    (0..tt.nodes.len())
        .filter(|&a| {
            if member[a] {
                return true;
            }
            // Count branches at `a` that contain a member.
            let mut branches = 0;
            for &(_, b) in &adj[a] {
                let mut seen = vec![false; tt.nodes.len()];
                seen[a] = true;
                seen[b] = true;
                let mut stack = vec![b];
                let mut hit = false;
                while let Some(x) = stack.pop() {
                    hit |= member[x];
                    for &(_, y) in &adj[x] {
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                branches += hit as usize;
            }
            branches >= 2
        })
        .collect()
}

/// Core by repeatedly deleting leaves outside `set`.
pub fn core_by_pruning(tt: &TutteTree, set: &[usize]) -> Vec<usize> {
    if set.is_empty() {
        return Vec::new();
    }
    let adj = tt.adjacency();
    let mut member = vec![false; tt.nodes.len()];
    for &s in set {
        member[s] = true;
    }
    let mut alive = vec![true; tt.nodes.len()];
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut queue: VecDeque<usize> = (0..tt.nodes.len()).filter(|&a| degree[a] <= 1 && !member[a]).collect();
    while let Some(a) = queue.pop_front() {
        if !alive[a] {
            continue;
        }
        alive[a] = false;
        for &(_, b) in &adj[a] {
            if alive[b] {
                degree[b] -= 1;
                if degree[b] <= 1 && !member[b] {
                    queue.push_back(b);
                }
            }
        }
    }
    (0..tt.nodes.len()).filter(|&a| alive[a]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{block_cut_tree, tutte_decomposition};

    #[test]
    fn wire_path() {
        let t = TruncatedGraph::new(Graph::path(3), vec![2], 0).unwrap();
        let w = wire(&t).unwrap();
        assert_eq!(w.graph.vertex_count(), 4);
        assert_eq!(w.graph.edge_count(), 3);
        assert_eq!(w.graph.neighbors(w.apex).collect::<Vec<_>>(), vec![2]);
        let empty = TruncatedGraph::new(Graph::path(3), vec![], 0).unwrap();
        assert_eq!(wire(&empty), Err(Error::EmptyBoundary));
    }

    #[test]
    fn star_cut_infinity() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let t = TruncatedGraph::new(g.clone(), vec![1, 2], 0).unwrap();
        let bct = block_cut_tree(&g).unwrap();
        let ci = cut_infinity(&bct, &t);
        assert!(ci.iter().all(|c| c == &vec![0]));
    }

    #[test]
    fn finite_graph_has_no_cut_infinity() {
        let g = Graph::path(4);
        let t = TruncatedGraph::new(g.clone(), vec![], 0).unwrap();
        let ci = cut_infinity(&block_cut_tree(&g).unwrap(), &t);
        assert!(ci.iter().all(|c| c.is_empty()));
    }

    #[test]
    fn pendant_triangle_excluded_from_core() {
        // Square 0-1-2-3 with chord-free triangle 0-1-4 glued on edge 0-1; boundary {2,3}.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 1)]);
        let tt = tutte_decomposition(&g).unwrap();
        let t = TruncatedGraph::new(g, vec![2, 3], 0).unwrap();
        let c = core(&tt, &[], &t);
        assert_eq!(c.core_nodes, core_by_pruning(&tt, &c.v_infinity));
        let pendant = tt.nodes.iter().position(|n| n.labels.contains(&4)).unwrap();
        assert!(!c.contains(pendant));
        let with_special = core(&tt, &[4], &t);
        assert!(with_special.contains(pendant));
        assert_eq!(with_special.core_nodes.len(), tt.nodes.len());
    }

    #[test]
    fn refine_absorbs_pockets() {
        // Path 0..6 with a pendant pocket 7 at vertex 3; boundary at the ends.
        let mut g = Graph::path(7);
        g.add_vertex();
        g.add_edge(3, 7);
        let ex = Exhaustion::new(
            g,
            vec![
                Level { vertices: vec![3], boundary: vec![3] },
                Level { vertices: (0..8).collect(), boundary: vec![0, 6] },
            ],
        )
        .unwrap();
        assert!(!ex.check_normalized().is_empty());
        let r = ex.refine().unwrap();
        assert!(r.check_normalized().is_empty());
        assert_eq!(r.levels()[0].vertices, vec![3, 7]);
        assert_eq!(r.levels()[0].boundary, vec![3]);
    }
}
