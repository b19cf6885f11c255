//! Inside and outside of oriented cycles in a planar rotation system.
//!
//! A dart leaving cycle vertex `v_i` lies inside when it sits strictly between
//! the reversed incoming cycle dart and the outgoing cycle dart in the cyclic
//! order at `v_i`. A component of `G - V(C)` is inside when its attaching darts are.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Dart, Graph, VertexId};
use crate::rotation::{euler_genus, RotationSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSides {
    pub cycle: Vec<Dart>,
    pub inside_vertices: Vec<VertexId>,
    pub outside_vertices: Vec<VertexId>,
    /// Non-cycle darts leaving cycle vertices on the inside (chords included).
    pub inside_darts: Vec<Dart>,
    pub outside_darts: Vec<Dart>,
    /// Non-cycle darts joining two cycle vertices.
    pub chords: Vec<Dart>,
}

impl CycleSides {
    pub fn inside_is_empty(&self) -> bool {
        self.inside_vertices.is_empty() && self.inside_darts.is_empty()
    }
}

/// Checks that `cycle` is a closed walk of distinct edges through distinct vertices.
pub fn validate_cycle(g: &Graph, cycle: &[Dart]) -> Result<()> {
    if cycle.is_empty() {
        return Err(Error::InvalidCycle("empty cycle".into()));
    }
    let mut vertex_seen = vec![false; g.vertex_count()];
    let mut edge_seen = vec![false; g.edge_count()];
    for (i, &d) in cycle.iter().enumerate() {
        if d.index() >= g.dart_count() {
            return Err(Error::InvalidCycle(format!("unknown dart {}", d.0)));
        }
        let next = cycle[(i + 1) % cycle.len()];
        if g.target(d) != g.source(next) {
            return Err(Error::InvalidCycle(format!("darts {} and {} do not chain", d.0, next.0)));
        }
        if std::mem::replace(&mut edge_seen[d.edge()], true) {
            return Err(Error::InvalidCycle(format!("edge {} repeated", d.edge())));
        }
        if std::mem::replace(&mut vertex_seen[g.source(d)], true) {
            return Err(Error::InvalidCycle(format!("vertex {} repeated", g.source(d))));
        }
    }
    Ok(())
}

pub fn cycle_sides(g: &Graph, rot: &RotationSystem, cycle: &[Dart]) -> Result<CycleSides> {
    validate_cycle(g, cycle)?;
    let genus = euler_genus(g, rot)?;
    if genus != 0 {
        return Err(Error::NonPlanarRotation(genus));
    }
    let k = cycle.len();
    let mut on_cycle = vec![false; g.vertex_count()];
    for &d in cycle {
        on_cycle[g.source(d)] = true;
    }
    let mut cycle_dart = vec![false; g.dart_count()];
    for &d in cycle {
        cycle_dart[d.index()] = true;
        cycle_dart[d.rev().index()] = true;
    }

    let mut inside_darts = Vec::new();
    let mut outside_darts = Vec::new();
    // side[dart] = Some(true) for inside darts at cycle vertices.
    let mut side = vec![None; g.dart_count()];
    for i in 0..k {
        let incoming = cycle[(i + k - 1) % k];
        let outgoing = cycle[i];
        let mut inside = true;
        let mut d = rot.next(incoming.rev());
        // A loop at a cycle vertex contributes both of its darts here.
        let mut steps = 0;
        while d != incoming.rev() {
            if d == outgoing {
                inside = false;
            } else if !cycle_dart[d.index()] {
                side[d.index()] = Some(inside);
                if inside {
                    inside_darts.push(d);
                } else {
                    outside_darts.push(d);
                }
            }
            d = rot.next(d);
            steps += 1;
            debug_assert!(steps <= g.degree(g.source(outgoing)));
        }
    }

    let chords: Vec<Dart> = inside_darts
        .iter()
        .chain(&outside_darts)
        .copied()
        .filter(|&d| on_cycle[g.target(d)])
        .collect();

    let mut inside_vertices = Vec::new();
    let mut outside_vertices = Vec::new();
    for comp in g.components_avoiding(&on_cycle) {
        let mut verdict = None;
        for &v in &comp {
            for &d in g.darts_at(v) {
                let back = d.rev();
                if let Some(s) = side[back.index()] {
                    match verdict {
                        None => verdict = Some(s),
                        Some(prev) if prev != s => {
                            return Err(Error::InvalidCycle(
                                "component attaches on both sides".into(),
                            ))
                        }
                        _ => {}
                    }
                }
            }
        }
        // A graph is connected, so every component attaches somewhere.
        let target = if verdict.unwrap_or(false) {
            &mut inside_vertices
        } else {
            &mut outside_vertices
        };
        target.extend(comp);
    }
    inside_vertices.sort_unstable();
    outside_vertices.sort_unstable();
    inside_darts.sort_unstable();
    outside_darts.sort_unstable();
    let mut chords = chords;
    chords.sort_unstable();
    Ok(CycleSides {
        cycle: cycle.to_vec(),
        inside_vertices,
        outside_vertices,
        inside_darts,
        outside_darts,
        chords,
    })
}

/// Reverses an oriented cycle.
pub fn reverse_cycle(cycle: &[Dart]) -> Vec<Dart> {
    cycle.iter().rev().map(|d| d.rev()).collect()
}

/// All simple cycles of `g` as dart sequences, each listed once per orientation.
///
/// Exponential; intended for small graphs and test oracles.
pub fn simple_cycles(g: &Graph, limit: usize) -> Result<Vec<Vec<Dart>>> {
    let mut out = Vec::new();
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut used_edge = vec![false; g.edge_count()];
    for start in 0..n {
        let mut path = Vec::new();
        on_path[start] = true;
        extend_cycles(g, start, start, &mut path, &mut on_path, &mut used_edge, &mut out, limit)?;
        on_path[start] = false;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_cycles(
    g: &Graph,
    start: VertexId,
    at: VertexId,
    path: &mut Vec<Dart>,
    on_path: &mut [bool],
    used_edge: &mut [bool],
    out: &mut Vec<Vec<Dart>>,
    limit: usize,
) -> Result<()> {
    for &d in g.darts_at(at) {
        if used_edge[d.edge()] {
            continue;
        }
        let w = g.target(d);
        if w == start {
            // Vertices on the path are larger than `start`, so each cycle is
            // found once per orientation.
            path.push(d);
            out.push(path.clone());
            path.pop();
            if out.len() > limit {
                return Err(Error::SizeGuard {
                    what: "simple cycles",
                    actual: out.len() as u64,
                    limit: limit as u64,
                });
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            used_edge[d.edge()] = true;
            path.push(d);
            extend_cycles(g, start, w, path, on_path, used_edge, out, limit)?;
            path.pop();
            used_edge[d.edge()] = false;
            on_path[w] = false;
        }
    }
    Ok(())
}
