//! Finite multigraphs with darts.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

pub type VertexId = usize;
pub type EdgeId = usize;

/// An oriented copy of an edge: `2 * edge + polarity`.
///
/// Polarity 0 runs from the first endpoint to the second, so a loop still
/// yields two distinct darts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Dart(pub u32);

impl Dart {
    pub fn new(edge: EdgeId, reversed: bool) -> Dart {
        Dart((edge as u32) << 1 | reversed as u32)
    }

    pub fn edge(self) -> EdgeId {
        (self.0 >> 1) as usize
    }

    pub fn is_reversed(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn rev(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Graph {
    ends: Vec<[VertexId; 2]>,
    out: Vec<Vec<Dart>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Graph {
        Graph {
            ends: Vec::new(),
            out: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.out.push(Vec::new());
        self.out.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        assert!(u < self.out.len() && v < self.out.len(), "edge endpoint out of range");
        let e = self.ends.len();
        self.ends.push([u, v]);
        self.out[u].push(Dart::new(e, false));
        self.out[v].push(Dart::new(e, true));
        e
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.ends.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.out.len()
    }

    pub fn edges(&self) -> std::ops::Range<EdgeId> {
        0..self.ends.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.dart_count() as u32).map(Dart)
    }

    pub fn ends(&self, e: EdgeId) -> [VertexId; 2] {
        self.ends[e]
    }

    pub fn source(&self, d: Dart) -> VertexId {
        self.ends[d.edge()][d.is_reversed() as usize]
    }

    pub fn target(&self, d: Dart) -> VertexId {
        self.ends[d.edge()][!d.is_reversed() as usize]
    }

    /// Outgoing darts at `v` in insertion order.
    pub fn darts_at(&self, v: VertexId) -> &[Dart] {
        &self.out[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out[v].iter().map(move |&d| self.target(d))
    }

    /// The dart of `e` leaving `v`, if `v` is an endpoint.
    pub fn dart_from(&self, e: EdgeId, v: VertexId) -> Option<Dart> {
        let [a, b] = self.ends[e];
        if a == v {
            Some(Dart::new(e, false))
        } else if b == v {
            Some(Dart::new(e, true))
        } else {
            None
        }
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.out[u]
            .iter()
            .find(|&&d| self.target(d) == v)
            .map(|d| d.edge())
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.ends[e][0] == self.ends[e][1]
    }

    pub fn has_loops(&self) -> bool {
        self.edges().any(|e| self.is_loop(e))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges().all(|e| {
            let [a, b] = self.ends[e];
            a != b && seen.insert((a.min(b), a.max(b)))
        })
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_avoiding(&vec![false; self.vertex_count()])
    }

    /// Connected components of the graph with the `removed` vertices deleted.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = removed.to_vec();
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Breadth-first distances from `root`; unreachable vertices get `usize::MAX`.
    pub fn distances(&self, root: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `vertices`, in the given order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Subgraph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = Graph::new(vertices.len());
        let mut edge_map = Vec::new();
        for e in self.edges() {
            let [a, b] = self.ends[e];
            if local[a] != usize::MAX && local[b] != usize::MAX {
                graph.add_edge(local[a], local[b]);
                edge_map.push(e);
            }
        }
        Subgraph {
            graph,
            vertex_map: vertices.to_vec(),
            edge_map,
        }
    }

    /// Subgraph formed by `edges` and their endpoints; vertices keep ascending order.
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> Subgraph {
        let mut vertices: Vec<VertexId> = edges.iter().flat_map(|&e| self.ends[e]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = Graph::new(vertices.len());
        for &e in edges {
            let [a, b] = self.ends[e];
            graph.add_edge(local[a], local[b]);
        }
        Subgraph {
            graph,
            vertex_map: vertices,
            edge_map: edges.to_vec(),
        }
    }

    /// Copy with vertex `v` renamed to `perm[v]`; edge ids are preserved.
    pub fn relabeled(&self, perm: &[VertexId]) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for e in self.edges() {
            let [a, b] = self.ends[e];
            g.add_edge(perm[a], perm[b]);
        }
        g
    }

    /// Edge list in `(u, v)` form.
    pub fn edge_list(&self) -> Vec<(VertexId, VertexId)> {
        self.ends.iter().map(|&[a, b]| (a, b)).collect()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in 0..b {
                g.add_edge(u, a + v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }
}

/// A subgraph together with its embedding into the parent graph.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// Local vertex -> parent vertex.
    pub vertex_map: Vec<VertexId>,
    /// Local edge -> parent edge.
    pub edge_map: Vec<EdgeId>,
}

impl Subgraph {
    /// Parent vertex -> local vertex, for a parent with `parent_vertices` vertices.
    pub fn local_vertices(&self, parent_vertices: usize) -> Vec<Option<VertexId>> {
        let mut local = vec![None; parent_vertices];
        for (i, &v) in self.vertex_map.iter().enumerate() {
            local[v] = Some(i);
        }
        local
    }

    /// Maps a local dart to the corresponding parent dart.
    ///
    /// Orientation is preserved because subgraph extraction keeps endpoint order.
    pub fn parent_dart(&self, d: Dart) -> Dart {
        Dart::new(self.edge_map[d.edge()], d.is_reversed())
    }

    /// Parent dart -> local dart for darts of edges in the subgraph.
    pub fn local_darts(&self, parent_edges: usize) -> Vec<Option<Dart>> {
        let mut local = vec![None; 2 * parent_edges];
        for (i, &e) in self.edge_map.iter().enumerate() {
            local[2 * e] = Some(Dart::new(i, false));
            local[2 * e + 1] = Some(Dart::new(i, true));
        }
        local
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_darts_are_distinct() {
        let mut g = Graph::new(1);
        let e = g.add_edge(0, 0);
        let a = Dart::new(e, false);
        assert_ne!(a, a.rev());
        assert_eq!(g.source(a), 0);
        assert_eq!(g.target(a.rev()), 0);
        assert_eq!(g.degree(0), 2);
        assert!(g.has_loops());
    }

    #[test]
    fn parallel_edges_are_not_simple() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]);
        assert!(!g.is_simple());
        assert!(Graph::complete(4).is_simple());
    }

    #[test]
    fn induced_subgraph_keeps_orientation() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 1), (2, 3), (3, 0)]);
        let sub = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(sub.graph.edge_count(), 2);
        for d in sub.graph.darts() {
            let p = sub.parent_dart(d);
            assert_eq!(sub.vertex_map[sub.graph.source(d)], g.source(p));
            assert_eq!(sub.vertex_map[sub.graph.target(d)], g.target(p));
        }
    }

    #[test]
    fn components_avoiding_splits_a_path() {
        let g = Graph::path(5);
        let mut removed = vec![false; 5];
        removed[2] = true;
        assert_eq!(g.components_avoiding(&removed), vec![vec![0, 1], vec![3, 4]]);
    }
}
