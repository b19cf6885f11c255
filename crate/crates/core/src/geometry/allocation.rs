//! Area allocations of a laid-out packing: Voronoi cells and barycentric pieces.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::hyperbolic::{disk_separation, to_klein, triangle_area, Hyperboloid};
use crate::geometry::packing::{Geometry, Packing};
use crate::geometry::triangulate::Triangulation;
use crate::graph::VertexId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllocationOptions {
    /// Sample points per side of the bounding box for the Voronoi estimate.
    pub subdivision: usize,
}

impl Default for AllocationOptions {
    fn default() -> Self {
        AllocationOptions { subdivision: 16 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AllocationReport {
    pub geometry: Geometry,
    /// Area of each vertex's Voronoi cell, clipped to the triangulated region.
    pub voronoi: Vec<f64>,
    /// Area of the barycentric pieces assigned to each vertex.
    pub barycentric: Vec<f64>,
    /// Number of barycentric pieces assigned to each vertex.
    pub barycentric_pieces: Vec<usize>,
    /// Sum of the triangle areas.
    pub covered_area: f64,
    pub voronoi_total: f64,
    pub barycentric_total: f64,
    /// Area of the sub-triangles straddling a cell boundary; bounds the
    /// error of every individual cell.
    pub voronoi_tolerance: f64,
    pub subdivision: usize,
}

/// The barycentric subdivision splits each triangle into six pieces, two
/// per corner; a vertex receives the pair at each of its corners.
pub fn allocations(p: &Packing, tri: &Triangulation, opts: AllocationOptions) -> Result<AllocationReport> {
    let g = &tri.graph;
    let n = g.vertex_count();
    let triangles: Vec<[VertexId; 3]> = tri
        .triangles()?
        .iter()
        .map(|t| [g.source(t[0]), g.source(t[1]), g.source(t[2])])
        .collect();
    let z: Vec<Complex64> = (0..n).map(|v| p.center(v)).collect();

    let mut orientation = 0.0;
    for t in &triangles {
        let k = |v: VertexId| match p.geometry {
            Geometry::Euclidean => z[v],
            Geometry::Hyperbolic => to_klein(z[v]),
        };
        let s = signed_area(k(t[0]), k(t[1]), k(t[2]));
        if s == 0.0 || (orientation != 0.0 && s.signum() != orientation) {
            return Err(Error::DegenerateLayout("triangles overlap or collapse".into()));
        }
        orientation = s.signum();
    }

    let mut barycentric = vec![0.0; n];
    let mut pieces = vec![0usize; n];
    let mut covered = 0.0;
    for t in &triangles {
        let area = area_of(p.geometry, z[t[0]], z[t[1]], z[t[2]]);
        covered += area;
        let centroid = centroid_of(p.geometry, &[z[t[0]], z[t[1]], z[t[2]]]);
        for i in 0..3 {
            let v = t[i];
            for j in [1, 2] {
                let mid = centroid_of(p.geometry, &[z[v], z[t[(i + j) % 3]]]);
                barycentric[v] += area_of(p.geometry, z[v], mid, centroid);
                pieces[v] += 1;
            }
        }
    }

    let m = opts.subdivision.max(1);
    let (voronoi, tolerance) = voronoi_cells(p.geometry, &triangles, &z, m);
    Ok(AllocationReport {
        geometry: p.geometry,
        voronoi_total: voronoi.iter().sum(),
        barycentric_total: barycentric.iter().sum(),
        voronoi,
        barycentric,
        barycentric_pieces: pieces,
        covered_area: covered,
        voronoi_tolerance: tolerance,
        subdivision: m,
    })
}

fn signed_area(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    0.5 * ((b - a).re * (c - a).im - (b - a).im * (c - a).re)
}

fn area_of(geometry: Geometry, a: Complex64, b: Complex64, c: Complex64) -> f64 {
    match geometry {
        Geometry::Euclidean => signed_area(a, b, c).abs(),
        Geometry::Hyperbolic => triangle_area(a, b, c),
    }
}

fn centroid_of(geometry: Geometry, pts: &[Complex64]) -> Complex64 {
    match geometry {
        Geometry::Euclidean => pts.iter().sum::<Complex64>() / pts.len() as f64,
        Geometry::Hyperbolic => {
            let h: Vec<Hyperboloid> = pts.iter().map(|&q| Hyperboloid::from_disk(q)).collect();
            Hyperboloid::centroid(&h).to_disk()
        }
    }
}

/// Voronoi areas clipped to the triangulated region. Each triangle is cut
/// into `m * m` geodesic sub-triangles along a regular grid in the Klein
/// model. Voronoi cells are convex there, so a sub-triangle whose corners
/// share a nearest vertex lies inside that cell; the others go to the
/// nearest vertex of their centroid and their area bounds the error.
fn voronoi_cells(geometry: Geometry, triangles: &[[VertexId; 3]], z: &[Complex64], m: usize) -> (Vec<f64>, f64) {
    let mut cells = vec![0.0; z.len()];
    let mut mixed = 0.0;
    let klein = |q: Complex64| match geometry {
        Geometry::Euclidean => q,
        Geometry::Hyperbolic => to_klein(q),
    };
    let from_klein = |k: Complex64| match geometry {
        Geometry::Euclidean => k,
        Geometry::Hyperbolic => k / (1.0 + (1.0 - k.norm_sqr()).max(0.0).sqrt()),
    };
    let nearest = |q: Complex64| -> VertexId {
        let key = |v: VertexId| match geometry {
            Geometry::Euclidean => (q - z[v]).norm_sqr(),
            Geometry::Hyperbolic => disk_separation(q, z[v]),
        };
        (0..z.len()).min_by(|&a, &b| key(a).total_cmp(&key(b))).expect("nonempty packing")
    };
    let idx = |i: usize, j: usize| i * (m + 1) + j;
    let mut pts = vec![Complex64::new(0.0, 0.0); (m + 1) * (m + 1)];
    let mut site = vec![0; (m + 1) * (m + 1)];
    for t in triangles {
        let [a, b, c] = [klein(z[t[0]]), klein(z[t[1]]), klein(z[t[2]])];
        for i in 0..=m {
            for j in 0..=m - i {
                let q = from_klein(a + (b - a) * (i as f64 / m as f64) + (c - a) * (j as f64 / m as f64));
                pts[idx(i, j)] = q;
                site[idx(i, j)] = nearest(q);
            }
        }
        let mut piece = |corners: [(usize, usize); 3]| {
            let [p, q, r] = corners.map(|(i, j)| idx(i, j));
            let area = area_of(geometry, pts[p], pts[q], pts[r]);
            if site[p] == site[q] && site[q] == site[r] {
                cells[site[p]] += area;
            } else {
                let centre = (klein(pts[p]) + klein(pts[q]) + klein(pts[r])) / 3.0;
                cells[nearest(from_klein(centre))] += area;
                mixed += area;
            }
        };
        for i in 0..m {
            for j in 0..m - i {
                piece([(i, j), (i + 1, j), (i, j + 1)]);
                if i + j + 1 < m {
                    piece([(i + 1, j), (i + 1, j + 1), (i, j + 1)]);
                }
            }
        }
    }
    (cells, mixed)
}
