//! Exhaustions of standard infinite graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ends::{Exhaustion, Level};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "path_Z")]
    PathZ,
    #[serde(rename = "ladder")]
    Ladder,
    #[serde(rename = "tree_d")]
    TreeD,
    #[serde(rename = "K3xZ")]
    K3xZ,
    #[serde(rename = "K2xT3")]
    K2xT3,
    #[serde(rename = "halfplane_triangulation")]
    HalfplaneTriangulation,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::PathZ,
        Generator::Ladder,
        Generator::TreeD,
        Generator::K3xZ,
        Generator::K2xT3,
        Generator::HalfplaneTriangulation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::PathZ => "path_Z",
            Generator::Ladder => "ladder",
            Generator::TreeD => "tree_d",
            Generator::K3xZ => "K3xZ",
            Generator::K2xT3 => "K2xT3",
            Generator::HalfplaneTriangulation => "halfplane_triangulation",
        }
    }

    /// Whether the infinite graph has a locally finite planar embedding.
    pub fn embeddable(self) -> bool {
        !matches!(self, Generator::K3xZ | Generator::K2xT3)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Generator> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorParams {
    /// Number of levels.
    pub depth: usize,
    /// Tree degree for `tree_d`.
    pub degree: usize,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams { depth: 3, degree: 3 }
    }
}

pub fn generate_named(name: &str, params: GeneratorParams) -> Result<Exhaustion> {
    generate(name.parse()?, params)
}

/// Level `i` is the ball of radius `i + 1` in the natural metric of each
/// family (for `K3xZ`, level 0 is the prism on two consecutive triangles).
/// The deepest boundary consists of the vertices with neighbours beyond the
/// truncation.
pub fn generate(which: Generator, params: GeneratorParams) -> Result<Exhaustion> {
    let k = params.depth;
    if k == 0 {
        return Err(Error::InvalidExhaustion("depth must be positive".into()));
    }
    let raw = match which {
        Generator::PathZ => path_z(k),
        Generator::Ladder => ladder(k),
        Generator::TreeD => {
            if params.degree < 2 {
                return Err(Error::InvalidExhaustion("tree degree must be at least 2".into()));
            }
            tree(k, params.degree)
        }
        Generator::K3xZ => k3_z(k),
        Generator::K2xT3 => k2_t3(k),
        Generator::HalfplaneTriangulation => halfplane(k),
    };
    raw.into_exhaustion(k)
}

/// Vertices tagged with the first level containing them.
struct Raw {
    edges: Vec<(VertexId, VertexId)>,
    rank: Vec<usize>,
    deep_boundary: Vec<bool>,
}

impl Raw {
    fn into_exhaustion(self, depth: usize) -> Result<Exhaustion> {
        let n = self.rank.len();
        let mut order: Vec<VertexId> = (0..n).collect();
        order.sort_by_key(|&v| (self.rank[v], v));
        let mut perm = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let g = Graph::from_edges(n, &edges);
        let rank: Vec<usize> = order.iter().map(|&v| self.rank[v]).collect();
        let deep: Vec<VertexId> = (0..n).filter(|&v| self.deep_boundary[order[v]]).collect();
        let levels = (0..depth)
            .map(|i| {
                let vertices: Vec<VertexId> = (0..n).filter(|&v| rank[v] <= i).collect();
                let boundary = if i + 1 == depth {
                    deep.clone()
                } else {
                    vertices.iter().copied().filter(|&v| g.neighbors(v).any(|w| rank[w] > i)).collect()
                };
                Level { vertices, boundary }
            })
            .collect();
        Exhaustion::new(g, levels)
    }
}

fn path_z(k: usize) -> Raw {
    let k = k as i64;
    let id = |x: i64| (x + k) as usize;
    let xs: Vec<i64> = (-k..=k).collect();
    Raw {
        edges: (-k..k).map(|x| (id(x), id(x + 1))).collect(),
        rank: xs.iter().map(|x| (x.unsigned_abs() as usize).max(1) - 1).collect(),
        deep_boundary: xs.iter().map(|x| x.abs() == k).collect(),
    }
}

fn ladder(k: usize) -> Raw {
    let k = k as i64;
    let id = |x: i64, s: usize| 2 * (x + k) as usize + s;
    let mut edges = Vec::new();
    for x in -k..=k {
        edges.push((id(x, 0), id(x, 1)));
        if x < k {
            edges.push((id(x, 0), id(x + 1, 0)));
            edges.push((id(x, 1), id(x + 1, 1)));
        }
    }
    let xs: Vec<i64> = (-k..=k).flat_map(|x| [x, x]).collect();
    Raw {
        edges,
        rank: xs.iter().map(|x| (x.unsigned_abs() as usize).max(1) - 1).collect(),
        deep_boundary: xs.iter().map(|x| x.abs() == k).collect(),
    }
}

fn k3_z(k: usize) -> Raw {
    let lo = 1 - k as i64;
    let hi = k as i64;
    let id = |x: i64, j: usize| 3 * (x - lo) as usize + j;
    let mut edges = Vec::new();
    let mut rank = Vec::new();
    let mut deep = Vec::new();
    for x in lo..=hi {
        for j in 0..3 {
            edges.push((id(x, j), id(x, (j + 1) % 3)));
            if x < hi {
                edges.push((id(x, j), id(x + 1, j)));
            }
            rank.push(if x >= 1 { (x - 1) as usize } else { (-x) as usize });
            deep.push(x == lo || x == hi);
        }
    }
    Raw { edges, rank, deep_boundary: deep }
}

/// Ball of radius `k` in the `d`-regular tree: edges and distances from the root.
fn tree_ball(k: usize, d: usize) -> (Vec<(VertexId, VertexId)>, Vec<usize>) {
    let mut dist = vec![0];
    let mut edges = Vec::new();
    let mut frontier = vec![0];
    for r in 1..=k {
        let mut next = Vec::new();
        for &p in &frontier {
            let children = if r == 1 { d } else { d - 1 };
            for _ in 0..children {
                let c = dist.len();
                dist.push(r);
                edges.push((p, c));
                next.push(c);
            }
        }
        frontier = next;
    }
    (edges, dist)
}

fn tree(k: usize, d: usize) -> Raw {
    let (edges, dist) = tree_ball(k, d);
    Raw {
        edges,
        rank: dist.iter().map(|&r| r.max(1) - 1).collect(),
        deep_boundary: dist.iter().map(|&r| r == k).collect(),
    }
}

fn k2_t3(k: usize) -> Raw {
    let (tree_edges, dist) = tree_ball(k, 3);
    let n = dist.len();
    let mut edges = Vec::new();
    for s in 0..2 {
        edges.extend(tree_edges.iter().map(|&(a, b)| (a + s * n, b + s * n)));
    }
    edges.extend((0..n).map(|v| (v, v + n)));
    let rank: Vec<usize> = dist.iter().map(|&r| r.max(1) - 1).collect();
    let deep: Vec<bool> = dist.iter().map(|&r| r == k).collect();
    Raw { edges, rank: rank.repeat(2), deep_boundary: deep.repeat(2) }
}

/// Upper half-plane square grid with one diagonal per square.
fn halfplane(k: usize) -> Raw {
    let k = k as i64;
    let width = 2 * k + 1;
    let id = |x: i64, y: i64| (y * width + x + k) as usize;
    let mut edges = Vec::new();
    let mut rank = Vec::new();
    let mut deep = Vec::new();
    for y in 0..=k {
        for x in -k..=k {
            if x < k {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y < k {
                edges.push((id(x, y), id(x, y + 1)));
                if x < k {
                    edges.push((id(x, y), id(x + 1, y + 1)));
                }
            }
            let r = x.abs().max(y) as usize;
            rank.push(r.max(1) - 1);
            deep.push(x.abs() == k || y == k);
        }
    }
    Raw { edges, rank, deep_boundary: deep }
}
