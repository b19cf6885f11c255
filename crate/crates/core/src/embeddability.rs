//! Locally finite planar embeddability of exhaustions and *-minor obstructions.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::ends::{wire, Exhaustion, TruncatedGraph};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::planarity::{find_minor, is_planar, planar_embedding, MinorModel, Pattern};
use crate::rotation::{find_face_containing_all, trace_faces, FaceWalk, RotationSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LevelStatus {
    EmbeddableSoFar,
    Obstructed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelVerdict {
    pub level: usize,
    pub status: LevelStatus,
    /// Size of the graph whose planarity was tested (wired unless the level is finite).
    pub tested_vertices: usize,
    pub tested_edges: usize,
}

/// How a pattern edge is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Realizer {
    /// An edge of the truncation.
    Edge(EdgeId),
    /// A boundary vertex of the incident branch set; the edge leaves the
    /// truncation into the part at infinity.
    Boundary(VertexId),
}

/// A K5 or K3,3 model with one pattern vertex realized at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarMinorWitness {
    pub level: usize,
    pub pattern: Pattern,
    pub apex_vertex: usize,
    /// Branch set of each pattern vertex; the apex entry is empty.
    pub branch_sets: Vec<Vec<VertexId>>,
    /// Components of the apex branch set inside the truncation, each
    /// containing a boundary vertex.
    pub infinity_part: Vec<Vec<VertexId>>,
    /// One realizer per pattern edge, in the pattern's edge order.
    pub edge_realizers: Vec<Realizer>,
}

impl StarMinorWitness {
    /// Independent re-verification against the truncation the witness names.
    pub fn verify(&self, t: &TruncatedGraph) -> std::result::Result<(), String> {
        let g = &t.graph;
        let h = self.pattern.graph();
        let k = h.vertex_count();
        if self.branch_sets.len() != k || self.apex_vertex >= k {
            return Err("branch set table does not match the pattern".into());
        }
        if self.edge_realizers.len() != h.edge_count() {
            return Err("one realizer per pattern edge required".into());
        }
        let boundary = t.boundary_mask();
        // owner: pattern vertex index, with the apex owning the infinity part.
        let mut owner = vec![usize::MAX; g.vertex_count()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if i == self.apex_vertex {
                if !set.is_empty() {
                    return Err("apex branch set must be empty".into());
                }
                continue;
            }
            if set.is_empty() || !connected(g, set) {
                return Err(format!("branch set {i} is empty or disconnected"));
            }
            for &v in set {
                if v >= g.vertex_count() || owner[v] != usize::MAX {
                    return Err(format!("vertex {v} invalid or shared"));
                }
                owner[v] = i;
            }
        }
        for comp in &self.infinity_part {
            if comp.is_empty() || !connected(g, comp) {
                return Err("infinity component empty or disconnected".into());
            }
            if !comp.iter().any(|&v| boundary[v]) {
                return Err("infinity component does not reach the boundary".into());
            }
            for &v in comp {
                if v >= g.vertex_count() || owner[v] != usize::MAX {
                    return Err(format!("vertex {v} invalid or shared"));
                }
                owner[v] = self.apex_vertex;
            }
        }
        for (e, r) in self.edge_realizers.iter().enumerate() {
            let [x, y] = h.ends(e);
            let touches_apex = x == self.apex_vertex || y == self.apex_vertex;
            match *r {
                Realizer::Edge(id) => {
                    if id >= g.edge_count() {
                        return Err(format!("edge {id} out of range"));
                    }
                    let [a, b] = g.ends(id);
                    let (oa, ob) = (owner[a], owner[b]);
                    if !((oa == x && ob == y) || (oa == y && ob == x)) {
                        return Err(format!("edge {id} does not realize pattern edge {x}-{y}"));
                    }
                }
                Realizer::Boundary(v) => {
                    let other = if x == self.apex_vertex { y } else { x };
                    if !touches_apex || v >= g.vertex_count() || owner[v] != other || !boundary[v] {
                        return Err(format!("boundary realizer {v} invalid for pattern edge {x}-{y}"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn connected(g: &Graph, set: &[VertexId]) -> bool {
    let sub = g.induced_subgraph(set);
    !set.is_empty() && sub.graph.is_connected()
}

/// Status of a coherent embedding chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ChainStatus {
    Certified,
    /// No face of this level carries all its boundary vertices.
    ExhaustionTooSmall { level: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherentChain {
    /// One rotation per level, on the level's local graph.
    pub rotations: Vec<RotationSystem>,
    /// The face carrying every boundary vertex, per level (none for finite levels).
    pub boundary_faces: Vec<Option<FaceWalk>>,
    pub status: ChainStatus,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddabilityReport {
    pub levels: Vec<LevelVerdict>,
    pub first_obstructed: Option<usize>,
    pub witness: Option<StarMinorWitness>,
    pub chain: Option<CoherentChain>,
}

impl EmbeddabilityReport {
    pub fn embeddable(&self) -> bool {
        self.first_obstructed.is_none()
    }
}

/// Tests every level: obstructed iff its wired graph is non-planar.
pub fn locally_finite_embeddable(ex: &Exhaustion, want_witness: bool) -> Result<EmbeddabilityReport> {
    let mut levels = Vec::with_capacity(ex.depth());
    let mut first_obstructed = None;
    for i in 0..ex.depth() {
        let (t, _) = ex.truncation(i);
        let tested = if t.is_finite() { t.graph.clone() } else { wire(&t)?.graph };
        let planar = planar_embedding(&tested)?.is_some();
        if !planar && first_obstructed.is_none() {
            first_obstructed = Some(i);
        }
        if planar && first_obstructed.is_some() {
            return Err(Error::InvalidExhaustion(format!(
                "level {i} is unobstructed above an obstructed level; refine the exhaustion"
            )));
        }
        levels.push(LevelVerdict {
            level: i,
            status: if planar { LevelStatus::EmbeddableSoFar } else { LevelStatus::Obstructed },
            tested_vertices: tested.vertex_count(),
            tested_edges: tested.edge_count(),
        });
    }
    let witness = match first_obstructed {
        Some(i) if want_witness && !ex.truncation(i).0.is_finite() => Some(star_minor_witness(ex, i, None)?),
        _ => None,
    };
    let chain = match first_obstructed {
        None => Some(coherent_embedding(ex)?),
        Some(_) => None,
    };
    Ok(EmbeddabilityReport { levels, first_obstructed, witness, chain })
}

/// Converts a Kuratowski witness (or, with `pattern`, an exhaustive minor
/// search) of the wired level into a *-minor witness.
pub fn star_minor_witness(ex: &Exhaustion, level: usize, pattern: Option<Pattern>) -> Result<StarMinorWitness> {
    let (t, _) = ex.truncation(level);
    let wired = wire(&t)?;
    let model = match pattern {
        Some(p) => match find_minor(&wired.graph, &p.graph())? {
            Some(m) => m,
            None => {
                if planar_embedding(&wired.graph)?.is_some() {
                    return Err(Error::NotObstructed(level));
                }
                return Err(Error::InvalidWitness(format!("no {} minor in the wired level", p.name())));
            }
        },
        None => match is_planar(&wired.graph)?.witness {
            Some(w) => w.to_minor_model(),
            None => return Err(Error::NotObstructed(level)),
        },
    };
    let pattern = match model.pattern.vertex_count() {
        5 => Pattern::K5,
        _ => Pattern::K33,
    };
    let w = translate(&t, wired.apex, &model, pattern, level)?;
    w.verify(&t).map_err(Error::InvalidWitness)?;
    Ok(w)
}

fn translate(t: &TruncatedGraph, apex: VertexId, model: &MinorModel, pattern: Pattern, level: usize) -> Result<StarMinorWitness> {
    let g = &t.graph;
    let k = model.branch_sets.len();
    let holder = model.branch_sets.iter().position(|s| s.contains(&apex));
    let mut branch_sets = model.branch_sets.clone();
    let (apex_vertex, infinity_part) = match holder {
        Some(q) => {
            let rest: Vec<VertexId> = branch_sets[q].iter().copied().filter(|&v| v != apex).collect();
            branch_sets[q].clear();
            let sub = g.induced_subgraph(&rest);
            let comps = sub
                .graph
                .components()
                .into_iter()
                .map(|c| c.into_iter().map(|x| sub.vertex_map[x]).collect())
                .collect();
            (q, comps)
        }
        None => {
            let (q, part) = (0..k)
                .find_map(|q| extend_to_boundary(t, &branch_sets, q).map(|p| (q, p)))
                .ok_or_else(|| Error::InvalidWitness("no branch set can be routed to the boundary".into()))?;
            branch_sets[q].clear();
            (q, vec![part])
        }
    };
    let edge_realizers = model
        .edge_realizers
        .iter()
        .map(|&r| {
            if r >= g.edge_count() {
                // Apex edge p-y of the wired graph.
                let [a, b] = model_edge_ends(t, apex, r);
                Realizer::Boundary(if a == apex { b } else { a })
            } else {
                Realizer::Edge(r)
            }
        })
        .collect();
    Ok(StarMinorWitness { level, pattern, apex_vertex, branch_sets, infinity_part, edge_realizers })
}

/// Endpoints of an edge of the wired graph; apex edges follow the
/// truncation's edges in boundary order.
fn model_edge_ends(t: &TruncatedGraph, apex: VertexId, e: EdgeId) -> [VertexId; 2] {
    [apex, t.boundary[e - t.graph.edge_count()]]
}

/// Grows branch set `q` along a path avoiding other sets until it meets the boundary.
fn extend_to_boundary(t: &TruncatedGraph, sets: &[Vec<VertexId>], q: usize) -> Option<Vec<VertexId>> {
    let g = &t.graph;
    let boundary = t.boundary_mask();
    let mut blocked = vec![false; g.vertex_count()];
    for (i, s) in sets.iter().enumerate() {
        if i != q {
            for &v in s {
                if v < g.vertex_count() {
                    blocked[v] = true;
                }
            }
        }
    }
    let mut pred = vec![usize::MAX; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &v in &sets[q] {
        seen[v] = true;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        if boundary[v] {
            let mut part = sets[q].clone();
            let mut x = v;
            while pred[x] != usize::MAX {
                part.push(x);
                x = pred[x];
            }
            part.sort_unstable();
            part.dedup();
            return Some(part);
        }
        for w in g.neighbors(v) {
            if !seen[w] && !blocked[w] {
                seen[w] = true;
                pred[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// One rotation per level, each the restriction of the next, with all
/// boundary vertices of each level on a common face.
///
/// The deepest wired graph is embedded once and restricted downward, which
/// makes the chain coherent by construction.
pub fn coherent_embedding(ex: &Exhaustion) -> Result<CoherentChain> {
    let deepest = ex.deepest();
    let ambient_rot = if deepest.is_finite() {
        planar_embedding(&deepest.graph)?.ok_or(Error::Obstructed(ex.depth() - 1))?
    } else {
        let wired = wire(&deepest)?;
        let rot = planar_embedding(&wired.graph)?.ok_or(Error::Obstructed(ex.depth() - 1))?;
        let keep: Vec<VertexId> = deepest.graph.vertices().collect();
        let sub = wired.graph.induced_subgraph(&keep);
        rot.restrict(&wired.graph, &sub)
    };
    let mut rotations = Vec::with_capacity(ex.depth());
    let mut boundary_faces = Vec::with_capacity(ex.depth());
    let mut status = ChainStatus::Certified;
    for i in 0..ex.depth() {
        let (t, sub) = ex.truncation(i);
        let rot = ambient_rot.restrict(ex.graph(), &sub);
        let face = if t.is_finite() {
            None
        } else {
            let faces = trace_faces(&t.graph, &rot)?;
            let hits = find_face_containing_all(&t.graph, &faces, &t.boundary);
            match hits.first() {
                Some(&f) => Some(faces[f].clone()),
                None => {
                    if status == ChainStatus::Certified {
                        status = ChainStatus::ExhaustionTooSmall { level: i };
                    }
                    None
                }
            }
        };
        rotations.push(rot);
        boundary_faces.push(face);
    }
    Ok(CoherentChain { rotations, boundary_faces, status })
}
