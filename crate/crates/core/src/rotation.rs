//! Rotation systems and face tracing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Dart, Graph, Subgraph, VertexId};

/// Per-vertex cyclic orders of outgoing darts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    orders: Vec<Vec<Dart>>,
    #[serde(skip)]
    next: Vec<Dart>,
    #[serde(skip)]
    prev: Vec<Dart>,
}

impl RotationSystem {
    /// Validates `orders` against `g`: `orders[v]` must list every dart leaving
    /// `v` exactly once.
    pub fn new(g: &Graph, orders: Vec<Vec<Dart>>) -> Result<RotationSystem> {
        if orders.len() != g.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} vertex orders for {} vertices",
                orders.len(),
                g.vertex_count()
            )));
        }
        let mut seen = vec![false; g.dart_count()];
        for (v, order) in orders.iter().enumerate() {
            if order.len() != g.degree(v) {
                return Err(Error::InvalidRotation(format!(
                    "vertex {v} lists {} darts but has degree {}",
                    order.len(),
                    g.degree(v)
                )));
            }
            for &d in order {
                if d.index() >= g.dart_count() {
                    return Err(Error::InvalidRotation(format!("unknown dart {}", d.0)));
                }
                if g.source(d) != v {
                    return Err(Error::InvalidRotation(format!(
                        "dart {} does not leave vertex {v}",
                        d.0
                    )));
                }
                if std::mem::replace(&mut seen[d.index()], true) {
                    return Err(Error::InvalidRotation(format!("dart {} listed twice", d.0)));
                }
            }
        }
        Ok(Self::from_orders_unchecked(g.dart_count(), orders))
    }

    pub(crate) fn from_orders_unchecked(dart_count: usize, orders: Vec<Vec<Dart>>) -> Self {
        let mut next = vec![Dart(0); dart_count];
        let mut prev = vec![Dart(0); dart_count];
        for order in &orders {
            let k = order.len();
            for i in 0..k {
                next[order[i].index()] = order[(i + 1) % k];
                prev[order[(i + 1) % k].index()] = order[i];
            }
        }
        RotationSystem { orders, next, prev }
    }

    /// Rebuilds the successor tables, e.g. after deserialization.
    pub fn rebuilt(self, g: &Graph) -> Result<RotationSystem> {
        RotationSystem::new(g, self.orders)
    }

    /// The rotation given by adjacency-list order.
    pub fn from_adjacency(g: &Graph) -> RotationSystem {
        let orders = g.vertices().map(|v| g.darts_at(v).to_vec()).collect();
        Self::from_orders_unchecked(g.dart_count(), orders)
    }

    pub fn vertex_count(&self) -> usize {
        self.orders.len()
    }

    pub fn dart_count(&self) -> usize {
        self.next.len()
    }

    pub fn order(&self, v: VertexId) -> &[Dart] {
        &self.orders[v]
    }

    pub fn orders(&self) -> &[Vec<Dart>] {
        &self.orders
    }

    /// Successor of `d` around its source.
    pub fn next(&self, d: Dart) -> Dart {
        self.next[d.index()]
    }

    /// Predecessor of `d` around its source.
    pub fn prev(&self, d: Dart) -> Dart {
        self.prev[d.index()]
    }

    /// Next dart along the face walk through `d`.
    pub fn face_successor(&self, d: Dart) -> Dart {
        self.next(d.rev())
    }

    /// Mirror image: every cyclic order reversed.
    pub fn inverse(&self) -> RotationSystem {
        let orders = self
            .orders
            .iter()
            .map(|o| o.iter().rev().copied().collect())
            .collect();
        Self::from_orders_unchecked(self.dart_count(), orders)
    }

    /// Each cyclic order rotated to start at its least dart.
    pub fn canonical_key(&self) -> Vec<Vec<u32>> {
        self.orders
            .iter()
            .map(|o| {
                let start = (0..o.len()).min_by_key(|&i| o[i]).unwrap_or(0);
                (0..o.len()).map(|i| o[(start + i) % o.len()].0).collect()
            })
            .collect()
    }

    /// Key identifying the rotation up to global reflection.
    pub fn reflection_key(&self) -> Vec<Vec<u32>> {
        self.canonical_key().min(self.inverse().canonical_key())
    }

    /// Restriction to a subgraph: cyclic orders with the foreign darts removed.
    pub fn restrict(&self, parent: &Graph, sub: &Subgraph) -> RotationSystem {
        let local = sub.local_darts(parent.edge_count());
        let orders = sub
            .vertex_map
            .iter()
            .map(|&v| self.orders[v].iter().filter_map(|d| local[d.index()]).collect())
            .collect();
        Self::from_orders_unchecked(sub.graph.dart_count(), orders)
    }

    /// Transports the rotation along a vertex relabeling (`perm[v]` is the new name of `v`).
    pub fn relabeled(&self, perm: &[VertexId]) -> RotationSystem {
        let mut orders = vec![Vec::new(); self.orders.len()];
        for (v, o) in self.orders.iter().enumerate() {
            orders[perm[v]] = o.clone();
        }
        Self::from_orders_unchecked(self.dart_count(), orders)
    }

    fn check_carrier(&self, g: &Graph) -> Result<()> {
        if self.orders.len() != g.vertex_count() || self.next.len() != g.dart_count() {
            return Err(Error::InvalidRotation(
                "rotation system belongs to a different graph".into(),
            ));
        }
        Ok(())
    }
}

/// A closed walk obtained by repeatedly applying the face successor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Source vertices in walk order (with repetitions).
    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        self.darts.iter().map(|&d| g.source(d)).collect()
    }

    /// True when no vertex is visited twice.
    pub fn is_simple(&self, g: &Graph) -> bool {
        let mut vs = self.vertices(g);
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
    }

    pub fn contains_vertex(&self, g: &Graph, v: VertexId) -> bool {
        self.darts.iter().any(|&d| g.source(d) == v)
    }

    /// The walk traversed backwards, canonicalized.
    pub fn reversed(&self) -> FaceWalk {
        canonical_walk(self.darts.iter().rev().map(|d| d.rev()).collect())
    }
}

fn canonical_walk(mut darts: Vec<Dart>) -> FaceWalk {
    if let Some(start) = (0..darts.len()).min_by_key(|&i| darts[i]) {
        darts.rotate_left(start);
    }
    FaceWalk { darts }
}

/// Traces all faces; each walk starts at its least dart and walks are sorted.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<Vec<FaceWalk>> {
    rot.check_carrier(g)?;
    let mut seen = vec![false; g.dart_count()];
    let mut faces = Vec::new();
    for start in g.darts() {
        if seen[start.index()] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        while !seen[d.index()] {
            seen[d.index()] = true;
            walk.push(d);
            d = rot.face_successor(d);
        }
        if d != start {
            return Err(Error::InvalidRotation("face successor is not a permutation".into()));
        }
        faces.push(FaceWalk { darts: walk });
    }
    // Walks start at their least dart already since darts are scanned in order.
    Ok(faces)
}

/// Face index of every dart, for the walks returned by [`trace_faces`].
pub fn dart_faces(g: &Graph, faces: &[FaceWalk]) -> Vec<usize> {
    let mut of = vec![usize::MAX; g.dart_count()];
    for (i, f) in faces.iter().enumerate() {
        for &d in &f.darts {
            of[d.index()] = i;
        }
    }
    of
}

/// Face count, treating an edgeless graph as having one face.
pub fn face_count(g: &Graph, rot: &RotationSystem) -> Result<usize> {
    Ok(trace_faces(g, rot)?.len().max(1))
}

/// Orientable genus `g` with `V - E + F = 2 - 2g`.
pub fn euler_genus(g: &Graph, rot: &RotationSystem) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let f = face_count(g, rot)? as i64;
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + f;
    Ok(((2 - chi) / 2) as usize)
}

pub fn is_planar_rotation(g: &Graph, rot: &RotationSystem) -> Result<bool> {
    Ok(euler_genus(g, rot)? == 0)
}

/// Indices of the faces that visit every vertex in `vertices`.
pub fn find_face_containing_all(
    g: &Graph,
    faces: &[FaceWalk],
    vertices: &[VertexId],
) -> Vec<usize> {
    let mut on = vec![false; g.vertex_count()];
    faces
        .iter()
        .enumerate()
        .filter(|(_, f)| {
            on.iter_mut().for_each(|x| *x = false);
            for &d in &f.darts {
                on[g.source(d)] = true;
            }
            vertices.iter().all(|&v| on[v])
        })
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_planar() -> (Graph, RotationSystem) {
        // 0 in the middle of triangle 1-2-3.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]);
        let d = |e: usize, r: bool| Dart::new(e, r);
        let orders = vec![
            vec![d(0, false), d(1, false), d(2, false)],
            vec![d(0, true), d(5, true), d(3, false)],
            vec![d(1, true), d(3, true), d(4, false)],
            vec![d(2, true), d(4, true), d(5, false)],
        ];
        let rot = RotationSystem::new(&g, orders).unwrap();
        (g, rot)
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = Graph::cycle(3);
        let rot = RotationSystem::from_adjacency(&g);
        let faces = trace_faces(&g, &rot).unwrap();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert_eq!(euler_genus(&g, &rot).unwrap(), 0);
    }

    #[test]
    fn path_has_one_face() {
        let g = Graph::path(3);
        let faces = trace_faces(&g, &RotationSystem::from_adjacency(&g)).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
    }

    #[test]
    fn k4_planar_rotation() {
        let (g, rot) = k4_planar();
        let faces = trace_faces(&g, &rot).unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert_eq!(euler_genus(&g, &rot).unwrap(), 0);
    }

    #[test]
    fn inverse_reverses_walks() {
        let (g, rot) = k4_planar();
        let mut a: Vec<FaceWalk> = trace_faces(&g, &rot).unwrap().iter().map(|f| f.reversed()).collect();
        let mut b = trace_faces(&g, &rot.inverse()).unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn malformed_rotations_are_rejected() {
        let g = Graph::path(3);
        let bad = vec![vec![Dart(0)], vec![Dart(0), Dart(2)], vec![Dart(3)]];
        assert!(matches!(RotationSystem::new(&g, bad), Err(Error::InvalidRotation(_))));
        let short = vec![vec![Dart(0)], vec![Dart(1)], vec![Dart(3)]];
        assert!(RotationSystem::new(&g, short).is_err());
    }

    #[test]
    fn single_vertex_is_a_sphere() {
        let g = Graph::new(1);
        assert_eq!(euler_genus(&g, &RotationSystem::from_adjacency(&g)).unwrap(), 0);
    }

    #[test]
    fn loop_alone_gives_two_faces() {
        let g = Graph::from_edges(1, &[(0, 0)]);
        let rot = RotationSystem::from_adjacency(&g);
        assert_eq!(trace_faces(&g, &rot).unwrap().len(), 2);
    }
}
