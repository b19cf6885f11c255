use serde::{Deserialize, Serialize};

use crate::ends::{wire, TruncatedGraph, Wired};
use crate::error::{Error, Result};
use crate::graph::{Dart, VertexId};
use crate::oneacc::acc::acc_truncated;
use crate::rotation::{euler_genus, find_face_containing_all, trace_faces, FaceWalk, RotationSystem};

/// The corner at `vertex` through which all infinite material is reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfiniteRegion {
    pub vertex: VertexId,
    /// Incoming dart `←e` and its face successor `→f`.
    pub dart_pair: (Dart, Dart),
    /// The traced infinite face walk.
    pub walk: Vec<Dart>,
    /// A boundary vertex on the walk.
    pub escape: VertexId,
}

/// The face of a truncation carrying every boundary vertex. Requires acc = 1.
pub fn infinite_face(t: &TruncatedGraph, rot: &RotationSystem) -> Result<FaceWalk> {
    let report = acc_truncated(t, rot, &[])?;
    if report.acc != 1 {
        return Err(Error::AccNotOne(report.acc));
    }
    let mut faces = trace_faces(&t.graph, rot)?;
    let candidates = find_face_containing_all(&t.graph, &faces, &t.boundary);
    let &first = candidates.first().ok_or(Error::NoInfiniteFace)?;
    Ok(faces.swap_remove(first))
}

/// One region per visit of the infinite face to a vertex, sorted by vertex.
/// In a 2-connected truncation each vertex is visited at most once.
pub fn infinite_face_vertices(t: &TruncatedGraph, rot: &RotationSystem) -> Result<Vec<InfiniteRegion>> {
    let face = infinite_face(t, rot)?;
    let g = &t.graph;
    let k = face.darts.len();
    let escape = t.boundary[0];
    let mut out: Vec<InfiniteRegion> = (0..k)
        .map(|j| {
            let f = face.darts[j];
            let e = face.darts[(j + k - 1) % k];
            InfiniteRegion { vertex: g.source(f), dart_pair: (e, f), walk: face.darts.clone(), escape }
        })
        .collect();
    out.sort_by_key(|r| (r.vertex, r.dart_pair));
    Ok(out)
}

/// Extends `rot` to the wired graph by placing the apex inside the infinite face.
pub fn wired_extension(t: &TruncatedGraph, rot: &RotationSystem) -> Result<(Wired, RotationSystem)> {
    let face = infinite_face(t, rot)?;
    let w = wire(t)?;
    let g = &t.graph;
    let m = g.edge_count();
    let apex_dart = |b: VertexId| {
        let i = t.boundary.binary_search(&b).expect("boundary vertex");
        Dart::new(m + i, true)
    };
    // First visit of each boundary vertex along the walk.
    let k = face.darts.len();
    let mut visits: Vec<(VertexId, Dart)> = Vec::new();
    for j in 0..k {
        let v = g.source(face.darts[j]);
        if t.boundary.binary_search(&v).is_ok() && visits.iter().all(|&(u, _)| u != v) {
            visits.push((v, face.darts[(j + k - 1) % k].rev()));
        }
    }
    let mut orders: Vec<Vec<Dart>> = rot.orders().to_vec();
    for &(b, after) in &visits {
        let o = &mut orders[b];
        if o.is_empty() {
            o.push(apex_dart(b));
        } else {
            let p = o.iter().position(|&d| d == after).expect("corner dart");
            o.insert(p + 1, apex_dart(b));
        }
    }
    let forward: Vec<Dart> = visits.iter().map(|&(b, _)| apex_dart(b).rev()).collect();
    let mut backward = forward.clone();
    backward.reverse();
    for apex_order in [backward, forward] {
        let mut o = orders.clone();
        o.push(apex_order);
        let r = RotationSystem::new(&w.graph, o)?;
        if euler_genus(&w.graph, &r)? == 0 {
            return Ok((w, r));
        }
    }
    Err(Error::NoInfiniteFace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn cycle_wires_planarly() {
        let g = Graph::cycle(5);
        let t = TruncatedGraph::new(g.clone(), vec![0, 2], 0).unwrap();
        let rot = RotationSystem::from_adjacency(&g);
        let regions = infinite_face_vertices(&t, &rot).unwrap();
        assert_eq!(regions.len(), 5);
        let (w, r) = wired_extension(&t, &rot).unwrap();
        assert_eq!(euler_genus(&w.graph, &r).unwrap(), 0);
    }
}
