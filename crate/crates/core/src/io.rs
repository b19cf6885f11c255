//! Reading and writing graphs, truncations and rotation systems.
//!
//! Three graph encodings are accepted: a JSON document
//! `{"vertices": [...], "edges": [[u, v], ...]}` (optionally with
//! `"boundary"` and `"levels"`), a whitespace edge list with `#` comments,
//! and graph6 for simple graphs. Vertex labels are arbitrary nonnegative
//! integers and are renumbered in increasing order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ends::{Exhaustion, Level, TruncatedGraph};
use crate::error::{Error, Result};
use crate::graph::{Dart, Graph, VertexId};
use crate::rotation::RotationSystem;

pub const FORMAT_VERSION: u32 = 1;

fn default_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub vertices: Vec<u64>,
    #[serde(default)]
    pub boundary: Vec<u64>,
}

/// On-disk graph, truncation or exhaustion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    #[serde(default = "default_version")]
    pub format_version: u32,
    #[serde(default)]
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<LevelDoc>>,
}

/// A parsed input: the graph plus whatever end data came with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Original label of each vertex.
    pub labels: Vec<u64>,
    pub boundary: Option<Vec<VertexId>>,
    pub levels: Option<Vec<Level>>,
}

impl GraphFile {
    /// The deepest truncation; a missing boundary means a finite graph.
    pub fn truncation(&self) -> Result<TruncatedGraph> {
        let boundary = match (&self.boundary, &self.levels) {
            (Some(b), _) => b.clone(),
            (None, Some(levels)) => levels.last().map(|l| l.boundary.clone()).unwrap_or_default(),
            (None, None) => Vec::new(),
        };
        let level = self.levels.as_ref().map_or(0, |l| l.len().saturating_sub(1));
        TruncatedGraph::new(self.graph.clone(), boundary, level)
    }

    /// The exhaustion given by `levels`, or the one-level exhaustion of the truncation.
    pub fn exhaustion(&self) -> Result<Exhaustion> {
        match &self.levels {
            Some(levels) => {
                let ex = Exhaustion::new(self.graph.clone(), levels.clone())?;
                if let Some(b) = &self.boundary {
                    let mut b = b.clone();
                    b.sort_unstable();
                    b.dedup();
                    if b != ex.deepest_boundary() {
                        return Err(Error::Parse("top-level boundary disagrees with the deepest level".into()));
                    }
                }
                Ok(ex)
            }
            None => Ok(Exhaustion::from_truncation(&self.truncation()?)),
        }
    }
}

/// Detects the encoding and parses it.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        return from_doc(&doc);
    }
    let first = trimmed
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    let token = first.strip_prefix(">>graph6<<").unwrap_or(first);
    if !token.is_empty() && token.bytes().all(|b| (63..=126).contains(&b)) {
        let graph = graph6_decode(token)?;
        let n = graph.vertex_count();
        return Ok(GraphFile { graph, labels: (0..n as u64).collect(), boundary: None, levels: None });
    }
    parse_edge_list(text)
}

/// Lines `u v` are edges; a lone `v` declares a vertex.
pub fn parse_edge_list(text: &str) -> Result<GraphFile> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("line {}: `{t}` is not a vertex label", no + 1))))
            .collect::<Result<_>>()?;
        match nums[..] {
            [v] => vertices.push(v),
            [u, v] => edges.push([u, v]),
            _ => return Err(Error::Parse(format!("line {}: expected one or two labels", no + 1))),
        }
    }
    from_doc(&GraphDoc { format_version: FORMAT_VERSION, vertices, edges, boundary: None, levels: None })
}

pub fn from_doc(doc: &GraphDoc) -> Result<GraphFile> {
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported format_version {}", doc.format_version)));
    }
    let mut ids: BTreeMap<u64, VertexId> = BTreeMap::new();
    let mentioned = doc.vertices.iter().chain(doc.edges.iter().flatten());
    for &v in mentioned {
        ids.insert(v, 0);
    }
    for (i, id) in ids.values_mut().enumerate() {
        *id = i;
    }
    let lookup = |v: &u64| ids.get(v).copied().ok_or_else(|| Error::Parse(format!("unknown vertex {v}")));
    let mut graph = Graph::new(ids.len());
    for [u, v] in &doc.edges {
        graph.add_edge(ids[u], ids[v]);
    }
    let list = |vs: &[u64]| vs.iter().map(lookup).collect::<Result<Vec<_>>>();
    let boundary = doc.boundary.as_deref().map(list).transpose()?;
    let levels = doc
        .levels
        .as_ref()
        .map(|ls| {
            ls.iter()
                .map(|l| Ok(Level { vertices: list(&l.vertices)?, boundary: list(&l.boundary)? }))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    Ok(GraphFile { graph, labels: ids.into_keys().collect(), boundary, levels })
}

pub fn graph_doc(g: &Graph) -> GraphDoc {
    GraphDoc {
        format_version: FORMAT_VERSION,
        vertices: (0..g.vertex_count() as u64).collect(),
        edges: g.edge_list().into_iter().map(|(u, v)| [u as u64, v as u64]).collect(),
        boundary: None,
        levels: None,
    }
}

fn ids(vs: &[VertexId]) -> Vec<u64> {
    vs.iter().map(|&v| v as u64).collect()
}

pub fn truncation_doc(t: &TruncatedGraph) -> GraphDoc {
    GraphDoc { boundary: Some(ids(&t.boundary)), ..graph_doc(&t.graph) }
}

pub fn exhaustion_doc(ex: &Exhaustion) -> GraphDoc {
    GraphDoc {
        boundary: Some(ids(ex.deepest_boundary())),
        levels: Some(
            ex.levels()
                .iter()
                .map(|l| LevelDoc { vertices: ids(&l.vertices), boundary: ids(&l.boundary) })
                .collect(),
        ),
        ..graph_doc(ex.graph())
    }
}

/// Decodes one graph6 line (without trailing newline).
pub fn graph6_decode(s: &str) -> Result<Graph> {
    let bytes: Vec<u8> = s.trim().bytes().map(|b| b.wrapping_sub(63)).collect();
    if bytes.iter().any(|&b| b > 63) {
        return Err(Error::Parse("graph6 byte out of range".into()));
    }
    let bad = || Error::Parse("truncated graph6 header".into());
    let (n, rest) = match bytes.first() {
        None => return Err(bad()),
        Some(&63) if bytes.get(1) == Some(&63) => {
            let h = bytes.get(2..8).ok_or_else(bad)?;
            (h.iter().fold(0usize, |a, &b| a << 6 | b as usize), &bytes[8..])
        }
        Some(&63) => {
            let h = bytes.get(1..4).ok_or_else(bad)?;
            (h.iter().fold(0usize, |a, &b| a << 6 | b as usize), &bytes[4..])
        }
        Some(&b) => (b as usize, &bytes[1..]),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(Error::Parse(format!("graph6 body has {} bytes, expected {}", rest.len(), bits.div_ceil(6))));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if rest[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn graph6_encode(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Parse("graph6 only encodes simple graphs".into()));
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8);
    } else if n <= 258_047 {
        out.push(63);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8));
    }
    let mut adj = vec![false; n * n];
    for (u, v) in g.edge_list() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(adj[u * n + v]);
        }
    }
    out.extend(bits.chunks(6).map(|c| c.iter().enumerate().fold(0u8, |a, (i, &b)| a | (b as u8) << (5 - i))));
    Ok(out.into_iter().map(|b| (b + 63) as char).collect())
}

/// One dart of a rotation: the edge it runs along and the vertex it reaches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DartDoc {
    pub dart: u32,
    pub edge: usize,
    pub to: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationDoc {
    #[serde(default = "default_version")]
    pub format_version: u32,
    /// Outgoing darts of every vertex in cyclic order.
    pub orders: Vec<Vec<DartDoc>>,
}

pub fn rotation_doc(g: &Graph, rot: &RotationSystem) -> RotationDoc {
    RotationDoc {
        format_version: FORMAT_VERSION,
        orders: rot
            .orders()
            .iter()
            .map(|o| o.iter().map(|&d| DartDoc { dart: d.0, edge: d.edge(), to: g.target(d) }).collect())
            .collect(),
    }
}

pub fn rotation_from_doc(g: &Graph, doc: &RotationDoc) -> Result<RotationSystem> {
    let mut orders = Vec::with_capacity(doc.orders.len());
    for o in &doc.orders {
        let mut order = Vec::with_capacity(o.len());
        for x in o {
            let d = Dart(x.dart);
            if d.edge() != x.edge || d.edge() >= g.edge_count() || g.target(d) != x.to {
                return Err(Error::Parse(format!("dart {} does not match edge {} towards {}", x.dart, x.edge, x.to)));
            }
            order.push(d);
        }
        orders.push(order);
    }
    RotationSystem::new(g, orders)
}
