//! Circle packings of disk triangulations.

use std::collections::{BTreeMap, VecDeque};
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::hyperbolic::{disk_distance, from_origin, radius_at_distance, to_origin};
use crate::geometry::triangulate::Triangulation;
use crate::graph::{Dart, EdgeId, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    Euclidean,
    Hyperbolic,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryCondition {
    /// Every outer vertex gets this radius.
    UniformRadius(f64),
    /// Radius of each outer vertex.
    Radii(BTreeMap<VertexId, f64>),
    /// Target angle sum at each outer vertex. Euclidean packings are then
    /// normalized so that the least outer vertex has radius 1.
    AngleSums(BTreeMap<VertexId, f64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PackOptions {
    /// Stop once every angle-sum residual is below this.
    pub tol: f64,
    pub max_sweeps: usize,
    /// Edge laid out first; its tail sits at the origin.
    pub root_edge: Option<EdgeId>,
}

impl Default for PackOptions {
    fn default() -> Self {
        PackOptions { tol: 1e-10, max_sweeps: 1_000_000, root_edge: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Packing {
    pub geometry: Geometry,
    pub radii: Vec<f64>,
    /// Euclidean plane coordinates, or Poincaré-disk coordinates.
    pub centers: Vec<[f64; 2]>,
    /// Largest angle-sum error over the constrained vertices.
    pub angle_residual: f64,
    /// Largest gap between centre distance and radius sum over all edges.
    pub tangency_residual: f64,
    pub sweeps: usize,
    pub tolerance: f64,
    /// Total absolute angle-sum error after each sweep (first entry: initial state).
    #[serde(skip)]
    pub error_history: Vec<f64>,
}

impl Packing {
    pub fn center(&self, v: VertexId) -> Complex64 {
        Complex64::new(self.centers[v][0], self.centers[v][1])
    }

    /// Distance between two centres in the packing's geometry.
    pub fn distance(&self, u: VertexId, v: VertexId) -> f64 {
        match self.geometry {
            Geometry::Euclidean => (self.center(u) - self.center(v)).norm(),
            Geometry::Hyperbolic => disk_distance(self.center(u), self.center(v)),
        }
    }
}

/// Angle at a circle of radius `rv` in the triangle formed with tangent
/// circles of radii `ru` and `rw`.
pub fn corner_angle(geometry: Geometry, rv: f64, ru: f64, rw: f64) -> f64 {
    let (n1, n2) = corner_terms(geometry, rv, ru, rw);
    2.0 * n1.sqrt().atan2(n2.sqrt())
}

/// Half-angle terms: `tan²(θ/2) = n1 / n2`.
fn corner_terms(geometry: Geometry, rv: f64, ru: f64, rw: f64) -> (f64, f64) {
    match geometry {
        Geometry::Euclidean => (ru * rw, rv * (rv + ru + rw)),
        Geometry::Hyperbolic => (ru.sinh() * rw.sinh(), rv.sinh() * (rv + ru + rw).sinh()),
    }
}

/// Angle sum at `v` and its derivative with respect to `log r_v`.
fn angle_sum(geometry: Geometry, rv: f64, petals: &[(VertexId, VertexId)], radii: &[f64]) -> (f64, f64) {
    let mut sum = 0.0;
    let mut deriv = 0.0;
    for &(u, w) in petals {
        let (ru, rw) = (radii[u], radii[w]);
        let (n1, n2) = corner_terms(geometry, rv, ru, rw);
        sum += 2.0 * n1.sqrt().atan2(n2.sqrt());
        let s = rv + ru + rw;
        let dlog = match geometry {
            Geometry::Euclidean => 1.0 + rv / s,
            Geometry::Hyperbolic => rv * (1.0 / rv.tanh() + 1.0 / s.tanh()),
        };
        deriv -= (n1 * n2).sqrt() / (n1 + n2) * dlog;
    }
    (sum, deriv)
}

/// Radius at which the angle sum at a vertex equals `target`, with the
/// neighbours held fixed. Safeguarded Newton iteration in `log r`.
fn solve_radius(geometry: Geometry, r0: f64, target: f64, petals: &[(VertexId, VertexId)], radii: &[f64]) -> f64 {
    let max_x = match geometry {
        Geometry::Euclidean => 700.0,
        Geometry::Hyperbolic => 6.0,
    };
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    let mut x = r0.ln();
    for _ in 0..200 {
        let (theta, d) = angle_sum(geometry, x.exp(), petals, radii);
        let f = theta - target;
        if f == 0.0 {
            break;
        }
        if f > 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let mut nx = x - f / d;
        if !(nx > lo && nx < hi) || !nx.is_finite() {
            nx = match (lo.is_finite(), hi.is_finite()) {
                (true, true) => 0.5 * (lo + hi),
                (true, false) => x + 1.0,
                _ => x - 1.0,
            };
        }
        nx = nx.clamp(-700.0, max_x);
        if (nx - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            x = nx;
            break;
        }
        x = nx;
    }
    x.exp()
}

/// Packs `tri` with the given boundary condition by Gauss–Seidel sweeps
/// of exact single-vertex solves, then lays the disks out from a root edge.
pub fn circle_pack(tri: &Triangulation, geometry: Geometry, bc: &BoundaryCondition, opts: PackOptions) -> Result<Packing> {
    let g = &tri.graph;
    let n = g.vertex_count();
    let triangles = tri.triangles()?;
    let boundary = tri.is_boundary();
    // Petals: for each vertex, the opposite pairs of its incident triangles.
    let mut petals: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); n];
    for t in &triangles {
        let vs = [g.source(t[0]), g.source(t[1]), g.source(t[2])];
        for i in 0..3 {
            petals[vs[i]].push((vs[(i + 1) % 3], vs[(i + 2) % 3]));
        }
    }
    let init = match (geometry, bc) {
        (_, BoundaryCondition::UniformRadius(r)) => *r,
        _ => 1.0,
    };
    let mut radii = vec![init; n];
    let mut target: Vec<Option<f64>> = (0..n).map(|v| (!boundary[v]).then_some(2.0 * PI)).collect();
    match bc {
        BoundaryCondition::UniformRadius(r) => check_radius(*r)?,
        BoundaryCondition::Radii(map) => {
            for v in (0..n).filter(|&v| boundary[v]) {
                let r = *map.get(&v).ok_or_else(|| Error::Triangulation(format!("no radius for outer vertex {v}")))?;
                check_radius(r)?;
                radii[v] = r;
            }
        }
        BoundaryCondition::AngleSums(map) => {
            for v in (0..n).filter(|&v| boundary[v]) {
                let a = *map.get(&v).ok_or_else(|| Error::Triangulation(format!("no angle sum for outer vertex {v}")))?;
                target[v] = Some(a);
            }
        }
    }
    if geometry == Geometry::Hyperbolic {
        for r in radii.iter_mut().zip(&boundary).filter(|(_, &b)| !b).map(|(r, _)| r) {
            *r = r.min(1.0);
        }
    }
    let free: Vec<VertexId> = (0..n).filter(|&v| target[v].is_some()).collect();
    let normalize = geometry == Geometry::Euclidean && matches!(bc, BoundaryCondition::AngleSums(_));
    let anchor = (0..n).find(|&v| boundary[v]);

    let errors = |radii: &[f64]| -> (f64, f64) {
        let mut max = 0.0f64;
        let mut total = 0.0;
        for &v in &free {
            let e = (angle_sum(geometry, radii[v], &petals[v], radii).0 - target[v].expect("free vertex")).abs();
            max = max.max(e);
            total += e;
        }
        (max, total)
    };
    let (mut residual, total) = errors(&radii);
    let mut history = vec![total];
    let mut sweeps = 0;
    while residual >= opts.tol {
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for &v in &free {
            radii[v] = solve_radius(geometry, radii[v], target[v].expect("free vertex"), &petals[v], &radii);
        }
        if normalize {
            if let Some(a) = anchor {
                let s = 1.0 / radii[a];
                radii.iter_mut().for_each(|r| *r *= s);
            }
        }
        sweeps += 1;
        let (max, total) = errors(&radii);
        residual = max;
        history.push(total);
        // Converged as far as floating point allows.
        if sweeps > 50 && history[sweeps - 50] - total <= 0.0 && residual < opts.tol.max(1e-12) * 1e3 {
            break;
        }
    }
    let centers = layout(tri, &triangles, geometry, &radii, opts.root_edge)?;
    let mut packing = Packing {
        geometry,
        radii,
        centers: centers.iter().map(|z| [z.re, z.im]).collect(),
        angle_residual: residual,
        tangency_residual: 0.0,
        sweeps,
        tolerance: opts.tol,
        error_history: history,
    };
    packing.tangency_residual = g
        .edges()
        .map(|e| {
            let [u, v] = g.ends(e);
            (packing.distance(u, v) - packing.radii[u] - packing.radii[v]).abs()
        })
        .fold(0.0, f64::max);
    Ok(packing)
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Triangulation(format!("boundary radius {r} is not positive")))
    }
}

/// Places every vertex by walking across triangles from the root edge,
/// putting each new vertex to the right of the shared dart.
fn layout(
    tri: &Triangulation,
    triangles: &[[Dart; 3]],
    geometry: Geometry,
    radii: &[f64],
    root_edge: Option<EdgeId>,
) -> Result<Vec<Complex64>> {
    let g = &tri.graph;
    let n = g.vertex_count();
    let mut tri_of = vec![usize::MAX; g.dart_count()];
    for (i, t) in triangles.iter().enumerate() {
        for d in t {
            tri_of[d.index()] = i;
        }
    }
    let e = root_edge.unwrap_or(0);
    if e >= g.edge_count() {
        return Err(Error::DegenerateLayout(format!("root edge {e} does not exist")));
    }
    let root = [Dart::new(e, false), Dart::new(e, true)]
        .into_iter()
        .find(|d| tri_of[d.index()] != usize::MAX)
        .ok_or_else(|| Error::DegenerateLayout("root edge borders no triangle".into()))?;
    let (a, b) = (g.source(root), g.target(root));
    let mut pos: Vec<Option<Complex64>> = vec![None; n];
    pos[a] = Some(Complex64::new(0.0, 0.0));
    let ab = radii[a] + radii[b];
    pos[b] = Some(Complex64::new(
        match geometry {
            Geometry::Euclidean => ab,
            Geometry::Hyperbolic => radius_at_distance(ab),
        },
        0.0,
    ));
    let mut seen = vec![false; triangles.len()];
    let mut queue = VecDeque::new();
    let start = tri_of[root.index()];
    seen[start] = true;
    queue.push_back((start, root));
    while let Some((t, entry)) = queue.pop_front() {
        // Complete the triangle across `entry`.
        let third = g.target(next_in(&triangles[t], entry));
        if pos[third].is_none() {
            let (p, q) = (g.source(entry), g.target(entry));
            let alpha = corner_angle(geometry, radii[p], radii[q], radii[third]);
            let zp = pos[p].expect("placed");
            let zq = pos[q].expect("placed");
            let d = radii[p] + radii[third];
            pos[third] = Some(match geometry {
                Geometry::Euclidean => {
                    let dir = (zq - zp) / (zq - zp).norm();
                    zp + dir * Complex64::from_polar(d, -alpha)
                }
                Geometry::Hyperbolic => {
                    let w = to_origin(zp, zq);
                    let c = Complex64::from_polar(radius_at_distance(d), w.arg() - alpha);
                    from_origin(zp, c)
                }
            });
        }
        for &d in &triangles[t] {
            let u = tri_of[d.rev().index()];
            if u != usize::MAX && !seen[u] {
                seen[u] = true;
                queue.push_back((u, d.rev()));
            }
        }
    }
    pos.into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::DegenerateLayout(format!("vertex {v} was not reached"))))
        .collect()
}

fn next_in(t: &[Dart; 3], d: Dart) -> Dart {
    let i = t.iter().position(|&x| x == d).expect("dart of triangle");
    t[(i + 1) % 3]
}
