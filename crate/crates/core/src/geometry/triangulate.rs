//! Triangulated supergraphs of embedded truncations.

use serde::{Deserialize, Serialize};

use crate::ends::TruncatedGraph;
use crate::error::{Error, Result};
use crate::graph::{Dart, Graph, VertexId};
use crate::oneacc::acc::surrounding_faces;
use crate::oneacc::infinite_face;
use crate::rotation::{euler_genus, trace_faces, FaceWalk, RotationSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexRole {
    Original,
    /// Centre of a triangulated face.
    FaceCenter,
    /// Ring vertex used inside a face whose boundary walk repeats a vertex.
    FaceRing,
    /// Vertex of the ring filling the infinite face.
    Collar,
}

/// A disk triangulation containing the input as the induced subgraph on
/// its first `marked` vertices, whose first `original_edges` edges are the
/// input edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub graph: Graph,
    pub rot: RotationSystem,
    /// The collar ring, traced as a face.
    pub outer: FaceWalk,
    pub marked: usize,
    pub original_edges: usize,
    pub roles: Vec<VertexRole>,
}

impl Triangulation {
    pub fn is_boundary(&self) -> Vec<bool> {
        let mut b = vec![false; self.graph.vertex_count()];
        for &d in &self.outer.darts {
            b[self.graph.source(d)] = true;
        }
        b
    }

    /// Inner faces, each as three darts.
    pub fn triangles(&self) -> Result<Vec<[Dart; 3]>> {
        let outer = self.outer.darts[0];
        trace_faces(&self.graph, &self.rot)?
            .into_iter()
            .filter(|f| !f.darts.contains(&outer))
            .map(|f| {
                if f.len() == 3 {
                    Ok([f.darts[0], f.darts[1], f.darts[2]])
                } else {
                    Err(Error::Triangulation(format!("inner face of length {}", f.len())))
                }
            })
            .collect()
    }

    /// Faces of the subgraph induced by `members` that surround collar vertices.
    pub fn faces_surrounding_collar(&self, members: &[VertexId]) -> usize {
        let n = self.graph.vertex_count();
        let mut probe = vec![false; n];
        for &v in members {
            probe[v] = true;
        }
        let collar: Vec<bool> = self.roles.iter().map(|&r| r == VertexRole::Collar).collect();
        surrounding_faces(&self.graph, &self.rot, &probe, &collar)
    }
}

struct Builder {
    graph: Graph,
    roles: Vec<VertexRole>,
    /// Orders of new vertices, indexed by `vertex - marked`.
    fresh: Vec<Vec<Dart>>,
    /// Darts inserted right after a given original dart.
    after: Vec<Vec<Dart>>,
    marked: usize,
}

impl Builder {
    fn vertex(&mut self, role: VertexRole) -> VertexId {
        self.roles.push(role);
        self.fresh.push(Vec::new());
        self.graph.add_vertex()
    }

    /// Adds `u -> v` and returns the dart leaving `u`.
    fn edge(&mut self, u: VertexId, v: VertexId) -> Dart {
        Dart::new(self.graph.add_edge(u, v), false)
    }

    fn order(&mut self, v: VertexId) -> &mut Vec<Dart> {
        &mut self.fresh[v - self.marked]
    }

    /// Star: a centre joined to every corner of a simple face.
    fn star(&mut self, face: &[Dart]) {
        let k = face.len();
        let c = self.vertex(VertexRole::FaceCenter);
        let mut spokes = Vec::with_capacity(k);
        for j in 0..k {
            let v = self.graph.source(face[j]);
            let d = self.edge(c, v);
            self.after[face[(j + k - 1) % k].rev().index()].push(d.rev());
            spokes.push(d);
        }
        *self.order(c) = spokes.into_iter().rev().collect();
    }

    /// Ring of one new vertex per corner, optionally coned to a centre.
    /// Returns the ring vertices.
    fn ring(&mut self, face: &[Dart], role: VertexRole, center: bool) -> Vec<VertexId> {
        let k = face.len();
        let g = |b: &Builder, d: Dart| b.graph.source(d);
        let r: Vec<VertexId> = (0..k).map(|_| self.vertex(role)).collect();
        let a: Vec<Dart> = (0..k).map(|j| self.edge(g(self, face[j]), r[j])).collect();
        let b: Vec<Dart> = (0..k).map(|j| self.edge(r[j], g(self, face[(j + 1) % k]))).collect();
        let s: Vec<Dart> = (0..k).map(|j| self.edge(r[j], r[(j + 1) % k])).collect();
        let c = if center {
            let c = self.vertex(VertexRole::FaceCenter);
            let spokes: Vec<Dart> = (0..k).map(|j| self.edge(r[j], c)).collect();
            *self.order(c) = spokes.iter().rev().map(|d| d.rev()).collect();
            Some(spokes)
        } else {
            None
        };
        for j in 0..k {
            let mut o = vec![b[j], a[j].rev(), s[(j + k - 1) % k].rev()];
            if let Some(c) = &c {
                o.push(c[j]);
            }
            o.push(s[j]);
            *self.order(r[j]) = o;
            // Corner at the head of face[j].
            self.after[face[j].rev().index()].extend([b[j].rev(), a[(j + 1) % k]]);
        }
        r
    }
}

/// Triangulates every finite face (a star on simple faces, a coned ring on
/// faces whose walk repeats a vertex) and fills the infinite face with a
/// collar ring that becomes the outer face.
pub fn triangulate_one_ended(t: &TruncatedGraph, rot: &RotationSystem) -> Result<Triangulation> {
    let g = &t.graph;
    if !g.is_simple() {
        return Err(Error::Triangulation("input must be a simple graph".into()));
    }
    let infinite = infinite_face(t, rot)?;
    if infinite.len() < 3 {
        return Err(Error::Triangulation(format!("infinite face of length {} is too short for a collar", infinite.len())));
    }
    let faces = trace_faces(g, rot)?;
    let n = g.vertex_count();
    let mut b = Builder {
        graph: g.clone(),
        roles: vec![VertexRole::Original; n],
        fresh: Vec::new(),
        after: vec![Vec::new(); g.dart_count()],
        marked: n,
    };
    for f in &faces {
        if *f == infinite {
            continue;
        }
        if f.is_simple(g) {
            if f.len() > 3 {
                b.star(&f.darts);
            }
        } else {
            b.ring(&f.darts, VertexRole::FaceRing, true);
        }
    }
    let collar = b.ring(&infinite.darts, VertexRole::Collar, false);

    let mut orders: Vec<Vec<Dart>> = Vec::with_capacity(b.graph.vertex_count());
    for v in 0..n {
        let mut o = Vec::new();
        for &d in rot.order(v) {
            o.push(d);
            o.extend_from_slice(&b.after[d.index()]);
        }
        orders.push(o);
    }
    orders.extend(b.fresh.iter().cloned());
    let graph = b.graph;
    let rot = RotationSystem::new(&graph, orders)?;
    let genus = euler_genus(&graph, &rot)?;
    if genus != 0 {
        return Err(Error::Triangulation(format!("construction produced genus {genus}")));
    }
    let outer = trace_faces(&graph, &rot)?
        .into_iter()
        .find(|f| f.len() == collar.len() && f.darts.iter().all(|&d| b.roles[graph.source(d)] == VertexRole::Collar))
        .ok_or_else(|| Error::Triangulation("collar ring is not a face".into()))?;
    let tri = Triangulation { graph, rot, outer, marked: n, original_edges: g.edge_count(), roles: b.roles };
    tri.triangles()?;
    Ok(tri)
}
