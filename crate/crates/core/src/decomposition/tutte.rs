//! Tutte (SPQR) decomposition of 2-connected graphs.
//!
//! Split components are found by brute force over separation pairs and then
//! merged bond-with-bond and cycle-with-cycle, which yields the unique
//! decomposition.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::decomposition::block_cut::is_biconnected;
use crate::error::{Error, Result};
use crate::graph::{Dart, EdgeId, Graph, VertexId};
use crate::planarity::{enumerate_planar_embeddings, planar_embedding, EnumerateOptions};
use crate::rotation::RotationSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeKind {
    Cycle,
    /// Two vertices joined by exactly three edges.
    ThreeLink,
    /// Two vertices joined by four or more edges.
    Bond,
    ThreeConnected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeEdge {
    Real(EdgeId),
    /// Virtual edge glued along the given link.
    Virtual(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteNode {
    pub kind: NodeKind,
    /// Local graph of the component.
    pub graph: Graph,
    /// Source-graph vertex of each local vertex.
    pub labels: Vec<VertexId>,
    /// Meaning of each local edge.
    pub edges: Vec<NodeEdge>,
}

/// Gluing data between two nodes: one virtual edge on each side and the
/// bijection between their endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteLink {
    pub nodes: [usize; 2],
    /// Local edge in each node.
    pub edges: [EdgeId; 2],
    /// Each pair lists matching local vertices in `nodes[0]` and `nodes[1]`.
    pub vertex_map: [[VertexId; 2]; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteTree {
    pub nodes: Vec<TutteNode>,
    pub links: Vec<TutteLink>,
    /// Set when the input was a digon, represented as a single cycle node.
    pub degenerate: bool,
}

/// Result of gluing a tree back together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Amalgam {
    pub graph: Graph,
    /// Label of each vertex of `graph`.
    pub labels: Vec<VertexId>,
    /// Real edge id carried by each edge of `graph`.
    pub edge_ids: Vec<EdgeId>,
    /// Per node, local vertex -> vertex of `graph`.
    pub vertex_of: Vec<Vec<VertexId>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Label {
    Real(EdgeId),
    Virtual(usize),
}

#[derive(Clone, Copy, Debug)]
struct WEdge {
    a: VertexId,
    b: VertexId,
    label: Label,
}

pub fn tutte_decomposition(g: &Graph) -> Result<TutteTree> {
    if let Some(e) = g.edges().find(|&e| g.is_loop(e)) {
        return Err(Error::Loop(g.ends(e)[0]));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() < 2 {
        return Err(Error::NotBiconnected("a single edge has no Tutte decomposition".into()));
    }
    if !is_biconnected(g) {
        return Err(Error::NotBiconnected("graph has a cut vertex".into()));
    }
    let initial: Vec<WEdge> = g
        .edges()
        .map(|e| {
            let [a, b] = g.ends(e);
            WEdge { a, b, label: Label::Real(e) }
        })
        .collect();
    if g.vertex_count() == 2 && g.edge_count() == 2 {
        let node = build_node(NodeKind::Cycle, &initial);
        return Ok(TutteTree { nodes: vec![node.0], links: vec![], degenerate: true });
    }

    let mut finished: Vec<Vec<WEdge>> = Vec::new();
    let mut work = vec![initial];
    let mut next_virtual = 0;
    while let Some(comp) = work.pop() {
        match find_split(&comp) {
            None => finished.push(comp),
            Some((u, v, e1, e2)) => {
                let id = next_virtual;
                next_virtual += 1;
                let virt = WEdge { a: u, b: v, label: Label::Virtual(id) };
                let mut c1: Vec<WEdge> = e1.iter().map(|&i| comp[i]).collect();
                let mut c2: Vec<WEdge> = e2.iter().map(|&i| comp[i]).collect();
                c1.push(virt);
                c2.push(virt);
                work.push(c1);
                work.push(c2);
            }
        }
    }
    let merged = merge(finished, next_virtual);
    Ok(assemble(merged, next_virtual))
}

fn kind_of(comp: &[WEdge]) -> NodeKind {
    let mut vs: Vec<VertexId> = comp.iter().flat_map(|e| [e.a, e.b]).collect();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() == 2 {
        return match comp.len() {
            2 => NodeKind::Cycle,
            3 => NodeKind::ThreeLink,
            _ => NodeKind::Bond,
        };
    }
    if comp.len() == vs.len() {
        // 2-connected with |E| = |V| is a cycle.
        return NodeKind::Cycle;
    }
    NodeKind::ThreeConnected
}

/// Finds a separation pair and a split `(u, v, E1, E2)` of edge indices.
fn find_split(comp: &[WEdge]) -> Option<(VertexId, VertexId, Vec<usize>, Vec<usize>)> {
    let mut vs: Vec<VertexId> = comp.iter().flat_map(|e| [e.a, e.b]).collect();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() <= 2 {
        return None;
    }
    let local = |v: VertexId| vs.binary_search(&v).expect("component vertex");
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (u, v) = (vs[i], vs[j]);
            let mut uf = UnionFind::new(vs.len());
            for e in comp {
                let touches = |x: VertexId| x == u || x == v;
                if !touches(e.a) && !touches(e.b) {
                    uf.union(local(e.a), local(e.b));
                }
            }
            let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
            let mut uv_edges = Vec::new();
            for (k, e) in comp.iter().enumerate() {
                let is_uv = (e.a == u && e.b == v) || (e.a == v && e.b == u);
                if is_uv {
                    uv_edges.push(k);
                    continue;
                }
                let other = if e.a != u && e.a != v { e.a } else { e.b };
                let root = uf.find(local(other));
                match classes.iter_mut().find(|(r, _)| *r == root) {
                    Some((_, list)) => list.push(k),
                    None => classes.push((root, vec![k])),
                }
            }
            let c = classes.len();
            if c >= 2 {
                let e1 = classes[0].1.clone();
                let e2 = (0..comp.len()).filter(|k| !e1.contains(k)).collect();
                return Some((u, v, e1, e2));
            }
            if c == 1 && uv_edges.len() >= 2 {
                return Some((u, v, uv_edges, classes[0].1.clone()));
            }
        }
    }
    None
}

fn merge(comps: Vec<Vec<WEdge>>, virtual_count: usize) -> Vec<Vec<WEdge>> {
    let mut owners = vec![Vec::new(); virtual_count];
    for (c, comp) in comps.iter().enumerate() {
        for e in comp {
            if let Label::Virtual(id) = e.label {
                owners[id].push(c);
            }
        }
    }
    let mut uf = UnionFind::new(comps.len());
    let mut edges: Vec<Option<Vec<WEdge>>> = comps.into_iter().map(Some).collect();
    for (id, own) in owners.iter().enumerate() {
        let (r1, r2) = (uf.find(own[0]), uf.find(own[1]));
        let k1 = kind_of(edges[r1].as_ref().expect("root"));
        let k2 = kind_of(edges[r2].as_ref().expect("root"));
        let bonds = |k: NodeKind| matches!(k, NodeKind::ThreeLink | NodeKind::Bond);
        let same = (bonds(k1) && bonds(k2)) || (k1 == NodeKind::Cycle && k2 == NodeKind::Cycle);
        if !same {
            continue;
        }
        let a = edges[r1].take().expect("root");
        let b = edges[r2].take().expect("root");
        let combined: Vec<WEdge> = a
            .into_iter()
            .chain(b)
            .filter(|e| e.label != Label::Virtual(id))
            .collect();
        uf.union(r1, r2);
        let root = uf.find(r1);
        edges[root] = Some(combined);
    }
    edges.into_iter().flatten().collect()
}

/// Local node data plus, per local edge, its label.
fn build_node(kind: NodeKind, comp: &[WEdge]) -> (TutteNode, Vec<Label>) {
    let mut labels: Vec<VertexId> = comp.iter().flat_map(|e| [e.a, e.b]).collect();
    labels.sort_unstable();
    labels.dedup();
    let mut sorted = comp.to_vec();
    sorted.sort_by_key(|e| (e.a.min(e.b), e.a.max(e.b), e.label));
    let local = |v: VertexId| labels.binary_search(&v).expect("vertex");
    let mut graph = Graph::new(labels.len());
    let mut edge_labels = Vec::new();
    let mut edges = Vec::new();
    for e in &sorted {
        graph.add_edge(local(e.a), local(e.b));
        edge_labels.push(e.label);
        edges.push(match e.label {
            Label::Real(id) => NodeEdge::Real(id),
            Label::Virtual(_) => NodeEdge::Virtual(usize::MAX),
        });
    }
    (TutteNode { kind, graph, labels, edges }, edge_labels)
}

fn assemble(mut comps: Vec<Vec<WEdge>>, virtual_count: usize) -> TutteTree {
    let key = |c: &Vec<WEdge>| {
        let mut k: Vec<(VertexId, VertexId, Label)> =
            c.iter().map(|e| (e.a.min(e.b), e.a.max(e.b), e.label)).collect();
        k.sort();
        k
    };
    comps.sort_by_key(key);
    let mut nodes = Vec::new();
    let mut sides: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); virtual_count];
    for (n, comp) in comps.iter().enumerate() {
        let (node, labels) = build_node(kind_of(comp), comp);
        for (le, l) in labels.iter().enumerate() {
            if let Label::Virtual(id) = l {
                sides[*id].push((n, le));
            }
        }
        nodes.push(node);
    }
    let mut pairs: Vec<[(usize, EdgeId); 2]> = sides
        .into_iter()
        .filter(|s| s.len() == 2)
        .map(|s| {
            let mut p = [s[0], s[1]];
            p.sort();
            p
        })
        .collect();
    pairs.sort();
    let mut links = Vec::new();
    for (l, [(n0, e0), (n1, e1)]) in pairs.into_iter().enumerate() {
        nodes[n0].edges[e0] = NodeEdge::Virtual(l);
        nodes[n1].edges[e1] = NodeEdge::Virtual(l);
        let [x0, y0] = nodes[n0].graph.ends(e0);
        let find = |label: VertexId| nodes[n1].labels.binary_search(&label).expect("shared vertex");
        let x1 = find(nodes[n0].labels[x0]);
        let y1 = find(nodes[n0].labels[y0]);
        links.push(TutteLink { nodes: [n0, n1], edges: [e0, e1], vertex_map: [[x0, x1], [y0, y1]] });
    }
    TutteTree { nodes, links, degenerate: false }
}

/// A node's kind with its edges as sorted `(u, v, is_real)` label triples.
pub type NodeSignature = (NodeKind, Vec<(VertexId, VertexId, bool)>);

impl TutteTree {
    /// Neighbouring `(link, node)` pairs of every node.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for (l, link) in self.links.iter().enumerate() {
            adj[link.nodes[0]].push((l, link.nodes[1]));
            adj[link.nodes[1]].push((l, link.nodes[0]));
        }
        adj
    }

    /// No two adjacent cycle nodes and no two adjacent bond-like nodes.
    pub fn is_reduced(&self) -> bool {
        let bond = |k: NodeKind| matches!(k, NodeKind::ThreeLink | NodeKind::Bond);
        self.links.iter().all(|l| {
            let (a, b) = (self.nodes[l.nodes[0]].kind, self.nodes[l.nodes[1]].kind);
            !(a == NodeKind::Cycle && b == NodeKind::Cycle) && !(bond(a) && bond(b))
        })
    }

    /// Relabel-invariant description: per node its kind and its edges as
    /// label pairs, sorted.
    pub fn signature(&self, relabel: impl Fn(VertexId) -> VertexId) -> Vec<NodeSignature> {
        let mut out: Vec<_> = self
            .nodes
            .iter()
            .map(|n| {
                let mut es: Vec<(VertexId, VertexId, bool)> = n
                    .graph
                    .edges()
                    .map(|e| {
                        let [a, b] = n.graph.ends(e);
                        let (x, y) = (relabel(n.labels[a]), relabel(n.labels[b]));
                        (x.min(y), x.max(y), matches!(n.edges[e], NodeEdge::Real(_)))
                    })
                    .collect();
                es.sort_unstable();
                (n.kind, es)
            })
            .collect();
        out.sort();
        out
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InconsistentTree(m));
        if self.nodes.is_empty() {
            return bad("tree has no nodes".into());
        }
        if self.links.len() + 1 != self.nodes.len() {
            return bad(format!("{} links for {} nodes", self.links.len(), self.nodes.len()));
        }
        for (l, link) in self.links.iter().enumerate() {
            for side in 0..2 {
                let node = link.nodes[side];
                if node >= self.nodes.len() {
                    return bad(format!("link {l} names node {node}"));
                }
                let n = &self.nodes[node];
                let e = link.edges[side];
                if e >= n.edges.len() || n.edges[e] != NodeEdge::Virtual(l) {
                    return bad(format!("link {l} does not match edge {e} of node {node}"));
                }
                let mut ends = n.graph.ends(e);
                let mut mapped = [link.vertex_map[0][side], link.vertex_map[1][side]];
                ends.sort_unstable();
                mapped.sort_unstable();
                if ends != mapped {
                    return bad(format!("link {l} endpoint map disagrees with node {node}"));
                }
            }
        }
        for (i, n) in self.nodes.iter().enumerate() {
            if n.edges.len() != n.graph.edge_count() || n.labels.len() != n.graph.vertex_count() {
                return bad(format!("node {i} has mismatched tables"));
            }
            for e in &n.edges {
                if let NodeEdge::Virtual(l) = e {
                    if *l >= self.links.len() || !self.links[*l].nodes.contains(&i) {
                        return bad(format!("node {i} refers to foreign link {l}"));
                    }
                }
            }
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(a) = queue.pop_front() {
            for &(_, b) in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("tree is not connected".into());
        }
        Ok(())
    }
}

/// Performs every edge amalgam of the tree. The result does not depend on
/// the order of amalgamation: endpoints are identified through a union-find
/// over all links at once.
pub fn amalgamate(t: &TutteTree) -> Result<Amalgam> {
    t.validate()?;
    let mut offset = Vec::with_capacity(t.nodes.len());
    let mut total = 0;
    for n in &t.nodes {
        offset.push(total);
        total += n.graph.vertex_count();
    }
    let mut uf = UnionFind::new(total);
    for link in &t.links {
        for pair in link.vertex_map {
            uf.union(offset[link.nodes[0]] + pair[0], offset[link.nodes[1]] + pair[1]);
        }
    }
    // Class label must be consistent.
    let mut class_label: Vec<Option<VertexId>> = vec![None; total];
    for (i, n) in t.nodes.iter().enumerate() {
        for (x, &label) in n.labels.iter().enumerate() {
            let r = uf.find(offset[i] + x);
            match class_label[r] {
                None => class_label[r] = Some(label),
                Some(l) if l != label => {
                    return Err(Error::InconsistentTree(format!(
                        "vertices labelled {l} and {label} are identified"
                    )))
                }
                _ => {}
            }
        }
    }
    let mut classes: Vec<(VertexId, usize)> = (0..total)
        .filter(|&r| uf.find(r) == r)
        .map(|r| (class_label[r].expect("labelled"), r))
        .collect();
    classes.sort_unstable();
    if classes.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::InconsistentTree("distinct vertices share a label".into()));
    }
    let mut index_of_root = vec![usize::MAX; total];
    for (i, &(_, r)) in classes.iter().enumerate() {
        index_of_root[r] = i;
    }
    let vertex_of: Vec<Vec<VertexId>> = t
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (0..n.graph.vertex_count()).map(|x| index_of_root[uf.find(offset[i] + x)]).collect())
        .collect();
    let mut real: Vec<(EdgeId, usize, usize)> = Vec::new();
    for (i, n) in t.nodes.iter().enumerate() {
        for (e, kind) in n.edges.iter().enumerate() {
            if let NodeEdge::Real(id) = kind {
                real.push((*id, i, e));
            }
        }
    }
    real.sort_unstable();
    if real.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::InconsistentTree("real edge appears twice".into()));
    }
    let mut graph = Graph::new(classes.len());
    for &(_, i, e) in &real {
        let [a, b] = t.nodes[i].graph.ends(e);
        graph.add_edge(vertex_of[i][a], vertex_of[i][b]);
    }
    Ok(Amalgam {
        graph,
        labels: classes.iter().map(|c| c.0).collect(),
        edge_ids: real.iter().map(|r| r.0).collect(),
        vertex_of,
    })
}

/// Planar rotation systems of a node: the mirror pair for 3-connected nodes
/// and 3-links, all `(k-1)!` for bonds with `k` edges, one for cycles.
/// Non-planar 3-connected nodes have none.
pub fn component_embeddings(node: &TutteNode) -> Vec<RotationSystem> {
    let g = &node.graph;
    match node.kind {
        NodeKind::Cycle => vec![RotationSystem::from_adjacency(g)],
        NodeKind::ThreeLink | NodeKind::Bond => enumerate_planar_embeddings(
            g,
            EnumerateOptions { both_chiralities: true, max_candidates: u64::MAX },
        )
        .expect("bonds are planar"),
        NodeKind::ThreeConnected => match planar_embedding(g) {
            Ok(Some(rot)) => {
                let mut pair = vec![rot.inverse(), rot];
                pair.sort_by_key(|r| r.canonical_key());
                pair
            }
            _ => Vec::new(),
        },
    }
}

/// Owning node and local edge of every edge of the amalgam.
fn edge_owners(t: &TutteTree, am: &Amalgam) -> Vec<(usize, EdgeId)> {
    let mut owner = vec![(usize::MAX, usize::MAX); am.graph.edge_count()];
    for (i, n) in t.nodes.iter().enumerate() {
        for (e, kind) in n.edges.iter().enumerate() {
            if let NodeEdge::Real(id) = kind {
                let k = am.edge_ids.binary_search(id).expect("real edge");
                owner[k] = (i, e);
            }
        }
    }
    owner
}

/// The rotation system of the amalgam whose restriction to each node is the
/// chosen node rotation.
pub fn compose(t: &TutteTree, choices: &[RotationSystem]) -> Result<(Amalgam, RotationSystem)> {
    let am = amalgamate(t)?;
    if choices.len() != t.nodes.len() {
        return Err(Error::InconsistentTree("one rotation per node required".into()));
    }
    for (n, r) in t.nodes.iter().zip(choices) {
        if r.dart_count() != n.graph.dart_count() || r.vertex_count() != n.graph.vertex_count() {
            return Err(Error::InconsistentTree("rotation does not match its node".into()));
        }
    }
    let mut global_edge = vec![Vec::new(); t.nodes.len()];
    for (i, n) in t.nodes.iter().enumerate() {
        global_edge[i] = n
            .edges
            .iter()
            .map(|k| match k {
                NodeEdge::Real(id) => am.edge_ids.binary_search(id).ok(),
                NodeEdge::Virtual(_) => None,
            })
            .collect();
    }
    let mut first_occurrence = vec![None; am.graph.vertex_count()];
    for (i, vs) in am.vertex_of.iter().enumerate() {
        for (x, &v) in vs.iter().enumerate() {
            if first_occurrence[v].is_none() {
                first_occurrence[v] = Some((i, x));
            }
        }
    }
    let mut orders = Vec::with_capacity(am.graph.vertex_count());
    for v in am.graph.vertices() {
        let (i, x) = first_occurrence[v].expect("every vertex occurs");
        let mut out = Vec::new();
        expand(t, choices, &global_edge, i, x, None, &mut out);
        orders.push(out);
    }
    let rot = RotationSystem::new(&am.graph, orders)?;
    Ok((am, rot))
}

fn expand(
    t: &TutteTree,
    choices: &[RotationSystem],
    global_edge: &[Vec<Option<usize>>],
    node: usize,
    x: VertexId,
    skip: Option<Dart>,
    out: &mut Vec<Dart>,
) {
    let order = choices[node].order(x);
    let k = order.len();
    let (start, count) = match skip {
        Some(s) => (order.iter().position(|&d| d == s).expect("skip dart") + 1, k - 1),
        None => (0, k),
    };
    for j in 0..count {
        let d = order[(start + j) % k];
        match t.nodes[node].edges[d.edge()] {
            NodeEdge::Real(_) => {
                let ge = global_edge[node][d.edge()].expect("real edge");
                out.push(Dart::new(ge, d.is_reversed()));
            }
            NodeEdge::Virtual(l) => {
                let link = &t.links[l];
                let side = if link.nodes[0] == node && link.edges[0] == d.edge() { 0 } else { 1 };
                let other = 1 - side;
                let pair = link
                    .vertex_map
                    .iter()
                    .find(|p| p[side] == x)
                    .expect("endpoint of virtual edge");
                let (beta, xb) = (link.nodes[other], pair[other]);
                let entry = t.nodes[beta]
                    .graph
                    .dart_from(link.edges[other], xb)
                    .expect("partner dart");
                expand(t, choices, global_edge, beta, xb, Some(entry), out);
            }
        }
    }
}

/// Restriction of a rotation of the amalgam to one node: darts owned by
/// other nodes are replaced by the virtual edge leading toward them.
pub fn restrict_to_node(t: &TutteTree, am: &Amalgam, rot: &RotationSystem, node: usize) -> Result<RotationSystem> {
    let owner = edge_owners(t, am);
    // First link on the tree path from `node` to every other node.
    let adj = t.adjacency();
    let mut hop = vec![usize::MAX; t.nodes.len()];
    let mut queue = VecDeque::new();
    for &(l, b) in &adj[node] {
        hop[b] = l;
        queue.push_back(b);
    }
    while let Some(a) = queue.pop_front() {
        for &(_, b) in &adj[a] {
            if b != node && hop[b] == usize::MAX {
                hop[b] = hop[a];
                queue.push_back(b);
            }
        }
    }
    let n = &t.nodes[node];
    let mut orders = Vec::with_capacity(n.graph.vertex_count());
    for x in n.graph.vertices() {
        let v = am.vertex_of[node][x];
        let mut seq: Vec<Dart> = Vec::new();
        for &d in rot.order(v) {
            let (owner_node, le) = owner[d.edge()];
            let local_edge = if owner_node == node {
                le
            } else {
                let l = hop[owner_node];
                let link = &t.links[l];
                if link.nodes[0] == node { link.edges[0] } else { link.edges[1] }
            };
            let ld = n
                .graph
                .dart_from(local_edge, x)
                .ok_or_else(|| Error::InconsistentTree("dart does not restrict to this node".into()))?;
            if seq.last() != Some(&ld) {
                seq.push(ld);
            }
        }
        while seq.len() > 1 && seq.first() == seq.last() {
            seq.pop();
        }
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InconsistentTree("branch darts are interleaved".into()));
        }
        orders.push(seq);
    }
    RotationSystem::new(&n.graph, orders)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
