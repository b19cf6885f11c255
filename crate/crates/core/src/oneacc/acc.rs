use serde::{Deserialize, Serialize};

use crate::ends::{Exhaustion, TruncatedGraph};
use crate::error::{Error, Result};
use crate::graph::{Dart, Graph, VertexId};
use crate::rotation::{euler_genus, RotationSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Probe {
    /// The level itself.
    Level,
    /// The deepest level with its boundary removed.
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelAcc {
    pub level: usize,
    pub probe: Probe,
    pub probe_vertices: usize,
    /// Faces of the probe surrounding at least one infinite component or special vertex.
    pub faces: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AccReport {
    pub per_level: Vec<LevelAcc>,
    pub acc: usize,
}

impl AccReport {
    pub fn is_monotone(&self) -> bool {
        self.per_level.windows(2).all(|w| w[0].faces <= w[1].faces)
    }
}

/// Counts, for every level, the faces that surround infinite material.
///
/// `rot` is a planar rotation of the deepest graph. Lower levels are probed
/// directly; the deepest level is probed through its interior so that the
/// boundary itself plays the part of the infinite complement. A component
/// of the complement counts as infinite when it contains a deepest-boundary
/// vertex or a special vertex.
pub fn acc(ex: &Exhaustion, rot: &RotationSystem, special: &[VertexId]) -> Result<AccReport> {
    let g = ex.graph();
    let genus = euler_genus(g, rot)?;
    if genus != 0 {
        return Err(Error::NonPlanarRotation(genus));
    }
    let n = g.vertex_count();
    let mut infinite = vec![false; n];
    for &v in ex.deepest_boundary().iter().chain(special) {
        infinite[v] = true;
    }
    let mut per_level = Vec::new();
    let depth = ex.depth();
    for (i, level) in ex.levels().iter().enumerate() {
        let mut probe = vec![false; n];
        for &v in &level.vertices {
            probe[v] = true;
        }
        let kind = if i + 1 == depth {
            for &b in &level.boundary {
                probe[b] = false;
            }
            Probe::Interior
        } else {
            Probe::Level
        };
        let size = probe.iter().filter(|&&p| p).count();
        if size == 0 {
            continue;
        }
        // A disconnected probe is measured through its components.
        let outside: Vec<bool> = probe.iter().map(|&p| !p).collect();
        let faces = g
            .components_avoiding(&outside)
            .into_iter()
            .map(|comp| {
                let mut part = vec![false; n];
                for v in comp {
                    part[v] = true;
                }
                surrounding_faces(g, rot, &part, &infinite)
            })
            .max()
            .unwrap_or(0);
        per_level.push(LevelAcc { level: i, probe: kind, probe_vertices: size, faces });
    }
    let acc = per_level.iter().map(|l| l.faces).max().unwrap_or(0);
    Ok(AccReport { per_level, acc })
}

pub fn acc_truncated(t: &TruncatedGraph, rot: &RotationSystem, special: &[VertexId]) -> Result<AccReport> {
    acc(&Exhaustion::from_truncation(t), rot, special)
}

/// Face labels of the subgraph induced by `probe`, traced with the
/// restricted rotation. Returns per-dart labels (`usize::MAX` off the probe)
/// and the face count.
pub(crate) fn probe_faces(g: &Graph, rot: &RotationSystem, probe: &[bool]) -> (Vec<usize>, usize) {
    let in_probe = |d: Dart| probe[g.source(d)] && probe[g.target(d)];
    let mut label = vec![usize::MAX; g.dart_count()];
    let mut count = 0;
    for start in g.darts() {
        if !in_probe(start) || label[start.index()] != usize::MAX {
            continue;
        }
        let mut d = start;
        while label[d.index()] == usize::MAX {
            label[d.index()] = count;
            d = next_in_probe(g, rot, probe, d.rev());
        }
        count += 1;
    }
    (label, count.max(1))
}

/// First probe dart strictly after `d` in the rotation at its source.
pub(crate) fn next_in_probe(g: &Graph, rot: &RotationSystem, probe: &[bool], d: Dart) -> Dart {
    let mut x = rot.next(d);
    while !probe[g.target(x)] && x != d {
        x = rot.next(x);
    }
    x
}

/// Number of probe faces that surround a component of the complement
/// containing an `infinite` vertex.
pub(crate) fn surrounding_faces(g: &Graph, rot: &RotationSystem, probe: &[bool], infinite: &[bool]) -> usize {
    let (label, count) = probe_faces(g, rot, probe);
    let mut hit = vec![false; count];
    for comp in g.components_avoiding(probe) {
        if !comp.iter().any(|&v| infinite[v]) {
            continue;
        }
        hit[component_face(g, rot, probe, &label, &comp)] = true;
    }
    hit.iter().filter(|&&h| h).count()
}

/// Probe face containing an outside component, read off one attaching dart.
pub(crate) fn component_face(g: &Graph, rot: &RotationSystem, probe: &[bool], label: &[usize], comp: &[VertexId]) -> usize {
    let attach = comp
        .iter()
        .flat_map(|&v| g.darts_at(v).iter().map(|d| d.rev()))
        .find(|&d| probe[g.source(d)])
        .expect("connected graph: component attaches to the probe");
    let y = next_in_probe(g, rot, probe, attach);
    if probe[g.target(y)] {
        label[y.index()]
    } else {
        // The attaching vertex has no probe edges: a one-vertex probe.
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ends::Level;

    #[test]
    fn path_has_acc_one() {
        let g = Graph::path(7);
        let ex = Exhaustion::new(
            g.clone(),
            vec![
                Level { vertices: vec![2, 3, 4], boundary: vec![2, 4] },
                Level { vertices: (0..7).collect(), boundary: vec![0, 6] },
            ],
        )
        .unwrap();
        let r = acc(&ex, &RotationSystem::from_adjacency(&g), &[]).unwrap();
        assert_eq!(r.acc, 1);
        assert!(r.per_level.iter().all(|l| l.faces == 1));
    }

    #[test]
    fn single_vertex_probe() {
        let g = Graph::path(3);
        let t = TruncatedGraph::new(g.clone(), vec![0, 2], 0).unwrap();
        let r = acc_truncated(&t, &RotationSystem::from_adjacency(&g), &[]).unwrap();
        assert_eq!(r.per_level[0].probe_vertices, 1);
        assert_eq!(r.acc, 1);
    }
}
