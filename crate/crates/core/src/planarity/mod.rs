//! Planarity testing with both certificates, minor search and embedding enumeration.

mod dmp;
mod enumerate;
mod minor;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

pub use enumerate::{enumerate_planar_embeddings, EnumerateOptions};
pub use minor::{find_minor, MinorModel, MAX_PATTERN_VERTICES};

use crate::decomposition::block_cut_tree;
use crate::error::{Error, Result};
use crate::graph::{Dart, EdgeId, Graph, VertexId};
use crate::rotation::RotationSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    K5,
    K33,
}

impl Pattern {
    /// K5 on `0..5`, or K3,3 with sides `0..3` and `3..6`.
    pub fn graph(self) -> Graph {
        match self {
            Pattern::K5 => Graph::complete(5),
            Pattern::K33 => Graph::complete_bipartite(3, 3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::K5 => "K5",
            Pattern::K33 => "K3,3",
        }
    }
}

/// One subdivided pattern edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPath {
    /// Pattern vertices joined by this path.
    pub ends: [usize; 2],
    /// Vertices from the first branch vertex to the second, inclusive.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// A subdivision of K5 or K3,3 inside a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub pattern: Pattern,
    /// Branch vertex of each pattern vertex.
    pub branch_vertices: Vec<VertexId>,
    /// One path per pattern edge, in the pattern's edge order.
    pub paths: Vec<WitnessPath>,
}

impl KuratowskiWitness {
    /// Checks that the witness is a subdivision of its pattern inside `g`.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let h = self.pattern.graph();
        if self.branch_vertices.len() != h.vertex_count() {
            return Err("wrong number of branch vertices".into());
        }
        if self.paths.len() != h.edge_count() {
            return Err("wrong number of paths".into());
        }
        let mut used = vec![false; g.vertex_count()];
        for &b in &self.branch_vertices {
            if b >= g.vertex_count() || std::mem::replace(&mut used[b], true) {
                return Err(format!("branch vertex {b} invalid or repeated"));
            }
        }
        let mut edge_used = vec![false; g.edge_count()];
        for (e, path) in self.paths.iter().enumerate() {
            let [x, y] = h.ends(e);
            if path.ends != [x, y] {
                return Err(format!("path {e} has ends {:?}, expected {:?}", path.ends, [x, y]));
            }
            let vs = &path.vertices;
            if vs.len() < 2 || vs[0] != self.branch_vertices[x] || vs[vs.len() - 1] != self.branch_vertices[y] {
                return Err(format!("path {e} does not join its branch vertices"));
            }
            if path.edges.len() != vs.len() - 1 {
                return Err(format!("path {e} has mismatched edge count"));
            }
            for (i, &ed) in path.edges.iter().enumerate() {
                if ed >= g.edge_count() || std::mem::replace(&mut edge_used[ed], true) {
                    return Err(format!("edge {ed} invalid or reused"));
                }
                let [a, b] = g.ends(ed);
                let (u, v) = (vs[i], vs[i + 1]);
                if !((a == u && b == v) || (a == v && b == u)) {
                    return Err(format!("edge {ed} does not join {u} and {v}"));
                }
            }
            for &v in &vs[1..vs.len() - 1] {
                if std::mem::replace(&mut used[v], true) {
                    return Err(format!("vertex {v} used twice"));
                }
            }
        }
        Ok(())
    }

    /// The minor model obtained by contracting each path into its first end.
    pub fn to_minor_model(&self) -> MinorModel {
        let h = self.pattern.graph();
        let mut branch_sets: Vec<Vec<VertexId>> =
            self.branch_vertices.iter().map(|&b| vec![b]).collect();
        let mut edge_realizers = Vec::with_capacity(self.paths.len());
        for p in &self.paths {
            let interior = &p.vertices[1..p.vertices.len() - 1];
            branch_sets[p.ends[0]].extend_from_slice(interior);
            edge_realizers.push(*p.edges.last().expect("paths have edges"));
        }
        for s in &mut branch_sets {
            s.sort_unstable();
        }
        MinorModel { pattern: h, branch_sets, edge_realizers }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanarityResult {
    pub planar: bool,
    pub embedding: Option<RotationSystem>,
    pub witness: Option<KuratowskiWitness>,
}

/// Decides planarity of a connected graph and returns a rotation system or a
/// Kuratowski subdivision.
pub fn is_planar(g: &Graph) -> Result<PlanarityResult> {
    match embed(g)? {
        Some(rot) => Ok(PlanarityResult { planar: true, embedding: Some(rot), witness: None }),
        None => Ok(PlanarityResult {
            planar: false,
            embedding: None,
            witness: Some(kuratowski_witness(g)?),
        }),
    }
}

/// Planarity verdict only, skipping witness extraction.
pub fn planar_embedding(g: &Graph) -> Result<Option<RotationSystem>> {
    embed(g)
}

/// Simple underlying graph: loops dropped, parallel classes collapsed to
/// their first edge. Returns the graph and, per simple edge, the original
/// edges of its class (first one is the representative).
fn simplify(g: &Graph) -> (Graph, Vec<Vec<EdgeId>>) {
    let mut s = Graph::new(g.vertex_count());
    let mut classes: Vec<Vec<EdgeId>> = Vec::new();
    let mut index: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for e in g.edges() {
        let [a, b] = g.ends(e);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        match index.get(&key) {
            Some(&i) => classes[i].push(e),
            None => {
                index.insert(key, classes.len());
                s.add_edge(a, b);
                classes.push(vec![e]);
            }
        }
    }
    (s, classes)
}

fn embed(g: &Graph) -> Result<Option<RotationSystem>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (s, classes) = simplify(g);
    let Some(simple_rot) = embed_simple(&s)? else {
        return Ok(None);
    };
    // Simple edge i is g's edge classes[i][0], stored with the same orientation.
    let lift = |d: Dart| Dart::new(classes[d.edge()][0], d.is_reversed());
    let mut orders: Vec<Vec<Dart>> = s
        .vertices()
        .map(|v| simple_rot.order(v).iter().map(|&d| lift(d)).collect())
        .collect();
    for class in &classes {
        let rep = Dart::new(class[0], false);
        let (u, v) = (g.source(rep), g.target(rep));
        let mut after_u = rep;
        let mut before_v = rep.rev();
        for &e in &class[1..] {
            let d = g.dart_from(e, u).expect("parallel edge");
            let pos = orders[u].iter().position(|&x| x == after_u).expect("in order");
            orders[u].insert(pos + 1, d);
            let pos = orders[v].iter().position(|&x| x == before_v).expect("in order");
            orders[v].insert(pos, d.rev());
            after_u = d;
            before_v = d.rev();
        }
    }
    for e in g.edges().filter(|&e| g.is_loop(e)) {
        let a = Dart::new(e, false);
        let v = g.source(a);
        orders[v].push(a.rev());
        orders[v].push(a);
    }
    Ok(Some(RotationSystem::new(g, orders).expect("lifted rotation is valid")))
}

/// Embeds a connected simple graph by embedding blocks and concatenating
/// their orders at cut vertices.
fn embed_simple(s: &Graph) -> Result<Option<RotationSystem>> {
    let tree = block_cut_tree(s)?;
    let mut orders: Vec<Vec<Dart>> = vec![Vec::new(); s.vertex_count()];
    for (a, block) in tree.blocks.iter().enumerate() {
        if block.edges.is_empty() {
            continue;
        }
        let sub = tree.block_subgraph(s, a);
        if block.vertices.len() == 2 {
            let d = Dart::new(block.edges[0], false);
            orders[s.source(d)].push(d);
            orders[s.target(d)].push(d.rev());
            continue;
        }
        let Some(rot) = dmp::embed_biconnected(&sub.graph) else {
            return Ok(None);
        };
        for (lv, &v) in sub.vertex_map.iter().enumerate() {
            orders[v].extend(rot.order(lv).iter().map(|&d| sub.parent_dart(d)));
        }
    }
    Ok(Some(RotationSystem::from_orders_unchecked(s.dart_count(), orders)))
}

fn is_planar_simple(s: &Graph, alive: &[bool]) -> bool {
    let edges: Vec<EdgeId> = s.edges().filter(|&e| alive[e]).collect();
    let sub = s.edge_subgraph(&edges);
    // Components are embedded independently.
    let comps = sub.graph.components();
    comps.iter().all(|c| {
        let part = sub.graph.induced_subgraph(c);
        matches!(embed_simple(&part.graph), Ok(Some(_)))
    })
}

/// Extracts a Kuratowski subdivision from a non-planar graph by deleting
/// edges while non-planarity persists.
fn kuratowski_witness(g: &Graph) -> Result<KuratowskiWitness> {
    let (s, classes) = simplify(g);
    let mut alive = vec![true; s.edge_count()];
    // Restrict to a non-planar block first.
    let tree = block_cut_tree(&s)?;
    for (a, block) in tree.blocks.iter().enumerate() {
        if block.vertices.len() < 5 {
            continue;
        }
        let sub = tree.block_subgraph(&s, a);
        if dmp::embed_biconnected(&sub.graph).is_none() {
            alive = vec![false; s.edge_count()];
            for &e in &block.edges {
                alive[e] = true;
            }
            break;
        }
    }
    for e in s.edges() {
        if !alive[e] {
            continue;
        }
        alive[e] = false;
        if is_planar_simple(&s, &alive) {
            alive[e] = true;
        }
    }
    let lift = |e: EdgeId| classes[e][0];
    build_witness(&s, &alive, lift).ok_or_else(|| {
        Error::InvalidWitness("edge-minimal non-planar subgraph is not a Kuratowski subdivision".into())
    })
}

fn build_witness(s: &Graph, alive: &[bool], lift: impl Fn(EdgeId) -> EdgeId) -> Option<KuratowskiWitness> {
    let mut deg = vec![0usize; s.vertex_count()];
    for e in s.edges().filter(|&e| alive[e]) {
        let [a, b] = s.ends(e);
        deg[a] += 1;
        deg[b] += 1;
    }
    let branch: Vec<VertexId> = s.vertices().filter(|&v| deg[v] >= 3).collect();
    let pattern = match (branch.len(), branch.iter().all(|&v| deg[v] == 4), branch.iter().all(|&v| deg[v] == 3)) {
        (5, true, _) => Pattern::K5,
        (6, _, true) => Pattern::K33,
        _ => return None,
    };
    let mut branch_index = vec![usize::MAX; s.vertex_count()];
    for (i, &b) in branch.iter().enumerate() {
        branch_index[b] = i;
    }
    // Trace every path leaving a branch vertex.
    let mut traced: Vec<(usize, usize, Vec<VertexId>, Vec<EdgeId>)> = Vec::new();
    let mut edge_done = vec![false; s.edge_count()];
    for &b in &branch {
        for &d0 in s.darts_at(b) {
            if !alive[d0.edge()] || edge_done[d0.edge()] {
                continue;
            }
            let mut vertices = vec![b];
            let mut edges = vec![];
            let mut d = d0;
            loop {
                edge_done[d.edge()] = true;
                edges.push(d.edge());
                let w = s.target(d);
                vertices.push(w);
                if branch_index[w] != usize::MAX {
                    break;
                }
                d = *s
                    .darts_at(w)
                    .iter()
                    .find(|&&x| alive[x.edge()] && x.edge() != d.edge())?;
            }
            let (x, y) = (branch_index[b], branch_index[*vertices.last()?]);
            traced.push((x, y, vertices, edges));
        }
    }
    // Order branch vertices so that the pattern's labelling matches.
    let order: Vec<usize> = match pattern {
        Pattern::K5 => (0..5).collect(),
        Pattern::K33 => {
            let mut adj = vec![vec![false; 6]; 6];
            for (x, y, _, _) in &traced {
                adj[*x][*y] = true;
                adj[*y][*x] = true;
            }
            let mut side_a = vec![0];
            side_a.extend((1..6).filter(|&j| !adj[0][j]));
            let side_b: Vec<usize> = (0..6).filter(|j| !side_a.contains(j)).collect();
            if side_a.len() != 3 {
                return None;
            }
            side_a.into_iter().chain(side_b).collect()
        }
    };
    let mut position = vec![0; order.len()];
    for (p, &i) in order.iter().enumerate() {
        position[i] = p;
    }
    let h = pattern.graph();
    let mut paths: Vec<Option<WitnessPath>> = vec![None; h.edge_count()];
    for (x, y, mut vertices, edges) in traced {
        let (px, py) = (position[x], position[y]);
        let e = h.edge_between(px, py)?;
        let [hx, _] = h.ends(e);
        let mut edges: Vec<EdgeId> = edges.into_iter().map(&lift).collect();
        if hx != px {
            vertices.reverse();
            edges.reverse();
        }
        if paths[e].is_some() {
            return None;
        }
        paths[e] = Some(WitnessPath { ends: h.ends(e), vertices, edges });
    }
    Some(KuratowskiWitness {
        pattern,
        branch_vertices: order.iter().map(|&i| branch[i]).collect(),
        paths: paths.into_iter().collect::<Option<Vec<_>>>()?,
    })
}
