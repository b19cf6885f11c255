//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};
use std::f64::consts::PI;

use locfin_core::ends::Exhaustion;
use locfin_core::geometry::{
    circle_pack, triangulate_one_ended, BoundaryCondition, Geometry, PackOptions, Packing, Triangulation, VertexRole,
};
use locfin_core::harness::{generate, Generator, GeneratorParams};
use locfin_core::oneacc::random_one_acc_embedding;
use locfin_core::planarity::planar_embedding;
use locfin_core::{trace_faces, Dart, FaceWalk, Graph, RotationSystem, VertexId};
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every rotation system of `g` (first dart at each vertex fixed).
pub fn all_rotations(g: &Graph) -> Vec<RotationSystem> {
    let per_vertex: Vec<Vec<Vec<Dart>>> = g
        .vertices()
        .map(|v| {
            let darts = g.darts_at(v).to_vec();
            if darts.len() <= 2 {
                return vec![darts];
            }
            let mut rest = darts[1..].to_vec();
            let mut out = Vec::new();
            permutations(&mut rest, 0, &mut |p| {
                let mut o = vec![darts[0]];
                o.extend_from_slice(p);
                out.push(o);
            });
            out
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_vertex.len()];
    loop {
        let orders = idx.iter().zip(&per_vertex).map(|(&i, opts)| opts[i].clone()).collect();
        out.push(RotationSystem::new(g, orders).expect("valid rotation"));
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < per_vertex[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            return out;
        }
    }
}

fn permutations<T: Copy>(xs: &mut Vec<T>, k: usize, f: &mut impl FnMut(&[T])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permutations(xs, k + 1, f);
        xs.swap(k, i);
    }
}

/// Orbits of the inverse face permutation `d -> rev(prev(d))`.
pub fn face_orbits(g: &Graph, rot: &RotationSystem) -> Vec<Vec<Dart>> {
    let mut seen = vec![false; g.dart_count()];
    let mut out = Vec::new();
    for start in g.darts() {
        if seen[start.index()] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut d = start;
        while !seen[d.index()] {
            seen[d.index()] = true;
            orbit.push(d);
            d = rot.prev(d).rev();
        }
        out.push(orbit);
    }
    out
}

pub fn genus_oracle(g: &Graph, rot: &RotationSystem) -> usize {
    let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, face_orbits(g, rot).len() as i64);
    ((2 - v + e - f) / 2) as usize
}

pub fn connected_avoiding(g: &Graph, removed: &[VertexId]) -> bool {
    let alive: Vec<VertexId> = g.vertices().filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; g.vertex_count()];
    for &r in removed {
        seen[r] = true;
    }
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for w in g.neighbors(x) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == alive.len()
}

pub fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && connected_avoiding(g, &[]) && g.vertices().all(|v| connected_avoiding(g, &[v]))
}

pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 4
        && is_two_connected(g)
        && (0..n).all(|a| (a + 1..n).all(|b| connected_avoiding(g, &[a, b])))
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<VertexId> {
    let mut p: Vec<VertexId> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random connected simple graph: a random tree plus `extra` random edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.insert((u, v));
    }
    for _ in 0..extra {
        let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges)
}

/// Random connected planar simple graph, by rejection.
pub fn random_planar(rng: &mut impl Rng, n: usize) -> (Graph, RotationSystem) {
    loop {
        let extra = rng.random_range(0..=2 * n);
        let g = random_connected(rng, n, extra);
        if let Some(rot) = planar_embedding(&g).unwrap() {
            return (g, rot);
        }
    }
}

/// Random 2-connected planar simple graph on `3..=max_n` vertices, by rejection.
pub fn random_biconnected_planar(rng: &mut impl Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.random_range(3..=max_n);
        let extra = rng.random_range(n / 2..=2 * n);
        let g = random_connected(rng, n, extra);
        if is_two_connected(&g) && planar_embedding(&g).unwrap().is_some() {
            return g;
        }
    }
}

/// All connected simple graphs on `n` vertices up to isomorphism, by
/// canonical augmentation over adjacency bitmasks.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n <= 1 {
        return vec![Graph::new(n)];
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut perms = Vec::new();
    let mut ids: Vec<usize> = (0..n).collect();
    permutations(&mut ids, 0, &mut |p| {
        perms.push(pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect::<Vec<_>>());
    });
    let canon = |mask: u32| -> u32 {
        perms
            .iter()
            .map(|m| (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).fold(0u32, |acc, k| acc | 1 << m[k]))
            .min()
            .unwrap()
    };
    let mut level: BTreeSet<u32> = BTreeSet::from([0]);
    let mut all: BTreeSet<u32> = level.clone();
    for _ in 0..pairs.len() {
        let mut next = BTreeSet::new();
        for &m in &level {
            for k in 0..pairs.len() {
                if m >> k & 1 == 0 {
                    next.insert(canon(m | 1 << k));
                }
            }
        }
        all.extend(&next);
        level = next;
    }
    all.into_iter()
        .map(|m| {
            let edges: Vec<_> = (0..pairs.len()).filter(|&k| m >> k & 1 == 1).map(|k| pairs[k]).collect();
            Graph::from_edges(n, &edges)
        })
        .filter(|g| connected_avoiding(g, &[]))
        .collect()
}

/// `K2 x P_k` with rungs `(2i, 2i+1)`.
pub fn ladder(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((2 * i, 2 * i + 1));
        if i + 1 < k {
            edges.push((2 * i, 2 * i + 2));
            edges.push((2 * i + 1, 2 * i + 3));
        }
    }
    Graph::from_edges(2 * k, &edges)
}

/// Hub 0 joined to the cycle `1..=k`.
pub fn wheel(k: usize) -> Graph {
    let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    edges.extend((1..=k).map(|i| (i, i % k + 1)));
    Graph::from_edges(k + 1, &edges)
}

/// Rotation placing the darts at each vertex in counterclockwise order of
/// the given straight-line drawing.
pub fn rotation_from_drawing(g: &Graph, pos: &[(f64, f64)]) -> RotationSystem {
    let orders = g
        .vertices()
        .map(|v| {
            let mut ds = g.darts_at(v).to_vec();
            ds.sort_by(|&a, &b| {
                let ang = |d: Dart| {
                    let w = g.target(d);
                    (pos[w].1 - pos[v].1).atan2(pos[w].0 - pos[v].0)
                };
                ang(a).total_cmp(&ang(b))
            });
            ds
        })
        .collect();
    RotationSystem::new(g, orders).unwrap()
}

fn mobius(a: Complex64, z: Complex64) -> Complex64 {
    (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z)
}

/// Area of the geodesic triangle `abc` in the Poincaré disk by quadrature of
/// the area element `4 r dr dθ / (1 - r²)²` in polar coordinates about `a`,
/// after moving `a` to the origin. The inner integral is closed form; the
/// outer one uses composite Gauss–Legendre.
pub fn poincare_area_quadrature(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    let (b, c) = (mobius(a, b), mobius(a, c));
    let (tb, mut tc) = (b.arg(), c.arg());
    if tc - tb > PI {
        tc -= 2.0 * PI;
    } else if tb - tc > PI {
        tc += 2.0 * PI;
    }
    // The geodesic through b and c lies on the circle |z - m| = s with
    // |m|² = 1 + s² (or on a diameter when b, c, 0 are collinear).
    let cross = b.re * c.im - b.im * c.re;
    let radius_along = |t: f64| -> f64 {
        let u = Complex64::from_polar(1.0, t);
        if cross.abs() < 1e-14 {
            return b.norm().max(c.norm());
        }
        // Centre m solves Re(conj(m) p) = (|p|² + 1) / 2 for p = b, c.
        let (rb, rc) = ((b.norm_sqr() + 1.0) / 2.0, (c.norm_sqr() + 1.0) / 2.0);
        let det = b.re * c.im - b.im * c.re;
        let m = Complex64::new((rb * c.im - rc * b.im) / det, (b.re * rc - c.re * rb) / det);
        // |r u - m|² = |m|² - 1  =>  r² - 2 r Re(conj(m) u) + 1 = 0, smaller root.
        let p = (m.conj() * u).re;
        p - (p * p - 1.0).max(0.0).sqrt()
    };
    let inner = |t: f64| {
        let r = radius_along(t);
        2.0 * r * r / (1.0 - r * r)
    };
    gauss_legendre(inner, tb, tc, 64).abs()
}

/// Composite 5-point Gauss–Legendre rule on `pieces` subintervals.
pub fn gauss_legendre(f: impl Fn(f64) -> f64, lo: f64, hi: f64, pieces: usize) -> f64 {
    const X: [f64; 5] = [0.0, -0.538_469_310_105_683_1, 0.538_469_310_105_683_1, -0.906_179_845_938_664, 0.906_179_845_938_664];
    const W: [f64; 5] = [
        0.568_888_888_888_888_9,
        0.478_628_670_499_366_5,
        0.478_628_670_499_366_5,
        0.236_926_885_056_189_1,
        0.236_926_885_056_189_1,
    ];
    let h = (hi - lo) / pieces as f64;
    (0..pieces)
        .map(|i| {
            let mid = lo + (i as f64 + 0.5) * h;
            X.iter().zip(W).map(|(&x, w)| w * f(mid + x * h / 2.0)).sum::<f64>() * h / 2.0
        })
        .sum()
}

/// First dart after `d` in the rotation at its source whose target is in `part`.
fn next_inside(g: &Graph, rot: &RotationSystem, part: &[bool], d: Dart) -> Dart {
    let order = rot.order(g.source(d));
    let i = order.iter().position(|&x| x == d).unwrap();
    (1..=order.len()).map(|k| order[(i + k) % order.len()]).find(|&x| part[g.target(x)]).unwrap()
}

fn components_of(g: &Graph, alive: &[bool]) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in g.vertices().filter(|&v| alive[v]) {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            for w in g.neighbors(comp[k]) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        out.push(comp);
    }
    out
}

/// Faces of the connected vertex set `part` (restricted rotation) that
/// contain a component of the complement meeting `infinite`.
pub fn surrounding_faces_oracle(g: &Graph, rot: &RotationSystem, part: &[bool], infinite: &[bool]) -> usize {
    let inside = |d: Dart| part[g.source(d)] && part[g.target(d)];
    let mut label = vec![usize::MAX; g.dart_count()];
    let mut faces = 0;
    for s in g.darts().filter(|&d| inside(d)) {
        if label[s.index()] != usize::MAX {
            continue;
        }
        let mut d = s;
        while label[d.index()] == usize::MAX {
            label[d.index()] = faces;
            d = next_inside(g, rot, part, d.rev());
        }
        faces += 1;
    }
    // An isolated vertex has a single face.
    let faces_total = faces.max(1);
    let outside: Vec<bool> = part.iter().map(|&p| !p).collect();
    let mut hit = BTreeSet::new();
    for comp in components_of(g, &outside) {
        if !comp.iter().any(|&v| infinite[v]) {
            continue;
        }
        let mut mine = BTreeSet::new();
        for &c in &comp {
            for &d in g.darts_at(c) {
                let p = g.target(d);
                if part[p] {
                    let attach = d.rev();
                    let f = if faces == 0 { 0 } else { label[next_inside(g, rot, part, attach).index()] };
                    mine.insert(f);
                }
            }
        }
        assert!(mine.len() <= 1, "a connected complement component meets {} faces", mine.len());
        hit.extend(mine);
    }
    assert!(hit.len() <= faces_total);
    hit.len()
}

/// Per-level surrounding-face counts: every level but the deepest is probed
/// as is, the deepest through its interior; disconnected probes take the
/// maximum over components.
pub fn acc_oracle(ex: &Exhaustion, rot: &RotationSystem, special: &[VertexId]) -> Vec<usize> {
    let g = ex.graph();
    let n = g.vertex_count();
    let mut infinite = vec![false; n];
    for &v in ex.deepest_boundary().iter().chain(special) {
        infinite[v] = true;
    }
    let mut out = Vec::new();
    for (i, level) in ex.levels().iter().enumerate() {
        let mut probe = vec![false; n];
        for &v in &level.vertices {
            probe[v] = true;
        }
        if i + 1 == ex.depth() {
            for &b in &level.boundary {
                probe[b] = false;
            }
        }
        if !probe.iter().any(|&p| p) {
            continue;
        }
        let best = components_of(g, &probe)
            .into_iter()
            .map(|comp| {
                let mut part = vec![false; n];
                for v in comp {
                    part[v] = true;
                }
                surrounding_faces_oracle(g, rot, &part, &infinite)
            })
            .max()
            .unwrap();
        out.push(best);
    }
    out
}

/// Faces to the right of a simple cycle: those reachable from the face of
/// its first dart without crossing a cycle edge.
pub fn right_region(g: &Graph, faces: &[FaceWalk], dart_face: &[usize], cycle: &[Dart]) -> Vec<bool> {
    let mut on_cycle = vec![false; g.edge_count()];
    for d in cycle {
        on_cycle[d.edge()] = true;
    }
    let mut region = vec![false; faces.len()];
    let mut stack = vec![dart_face[cycle[0].index()]];
    region[stack[0]] = true;
    while let Some(f) = stack.pop() {
        for &d in &faces[f].darts {
            if on_cycle[d.edge()] {
                continue;
            }
            let h = dart_face[d.rev().index()];
            if !region[h] {
                region[h] = true;
                stack.push(h);
            }
        }
    }
    region
}

/// Triangulated deepest levels of the embeddable generators (one pipeline
/// seed each), keeping those with at most `max_vertices` vertices.
pub fn corpus_triangulations(max_vertices: usize) -> Vec<(String, Triangulation)> {
    let mut out = Vec::new();
    for which in Generator::ALL.into_iter().filter(|g| g.embeddable()) {
        for depth in 1..=6 {
            let ex = generate(which, GeneratorParams { depth, degree: 3 }).unwrap();
            if ex.graph().vertex_count() > max_vertices {
                break;
            }
            let rot = random_one_acc_embedding(&ex, depth as u64).unwrap().rotation;
            let tri = triangulate_one_ended(&ex.deepest(), &rot).unwrap();
            if tri.graph.vertex_count() <= max_vertices {
                out.push((format!("{} depth {depth}", which.name()), tri));
            }
        }
    }
    out
}

/// Angle at a circle of radius `rv` between tangent circles `ru`, `rw`, by
/// the law of cosines of the geometry.
pub fn law_of_cosines_angle(hyperbolic: bool, rv: f64, ru: f64, rw: f64) -> f64 {
    let (a, b, c) = (rv + ru, rv + rw, ru + rw);
    let cos = if hyperbolic {
        (a.cosh() * b.cosh() - c.cosh()) / (a.sinh() * b.sinh())
    } else {
        (a * a + b * b - c * c) / (2.0 * a * b)
    };
    cos.clamp(-1.0, 1.0).acos()
}

/// Hyperbolic distance in the Poincaré disk.
pub fn poincare_distance(z: Complex64, w: Complex64) -> f64 {
    let s = 2.0 * (z - w).norm_sqr() / ((1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr()));
    (1.0 + s).acosh()
}

/// Faces other than the outer one, checked to be triangles by the test itself.
pub fn inner_triangles(tri: &Triangulation) -> Vec<[VertexId; 3]> {
    let outer: Vec<VertexId> = tri.outer.darts.iter().map(|&d| tri.graph.source(d)).collect();
    let faces = trace_faces(&tri.graph, &tri.rot).unwrap();
    let mut out = Vec::new();
    let mut outer_seen = 0;
    for f in faces {
        let vs: Vec<VertexId> = f.darts.iter().map(|&d| tri.graph.source(d)).collect();
        if f.darts.contains(&tri.outer.darts[0]) {
            assert_eq!(vs.len(), outer.len());
            outer_seen += 1;
            continue;
        }
        assert_eq!(vs.len(), 3, "inner face {vs:?}");
        out.push([vs[0], vs[1], vs[2]]);
    }
    assert_eq!(outer_seen, 1);
    out
}

/// Structural checks shared by every triangulation.
pub fn check_triangulation(input: &Graph, tri: &Triangulation) {
    assert_eq!(genus_oracle(&tri.graph, &tri.rot), 0);
    inner_triangles(tri);
    assert_eq!(tri.marked, input.vertex_count());
    for e in input.edges() {
        assert_eq!(tri.graph.ends(e), input.ends(e));
    }
    let induced = tri.graph.induced_subgraph(&(0..tri.marked).collect::<Vec<_>>());
    assert_eq!(induced.graph.edge_count(), input.edge_count());
    for v in input.vertices() {
        let d = input.degree(v);
        assert!(tri.graph.degree(v) <= d + 2 * d.max(1), "vertex {v}");
    }
}

/// Random connected vertex sets avoiding the collar: each component of such
/// a set has at most one face meeting the collar, and the library agrees.
pub fn check_one_face_surrounds(name: &str, tri: &Triangulation, rng: &mut impl Rng, samples: usize) {
    let g = &tri.graph;
    let collar: Vec<bool> = tri.roles.iter().map(|&r| r == VertexRole::Collar).collect();
    let inner: Vec<VertexId> = g.vertices().filter(|&v| !collar[v]).collect();
    check_triangulation(&tri.graph.induced_subgraph(&(0..tri.marked).collect::<Vec<_>>()).graph, tri);
    for _ in 0..samples {
        let size = rng.random_range(1..=inner.len());
        let mut members = vec![inner[rng.random_range(0..inner.len())]];
        let mut member = vec![false; g.vertex_count()];
        member[members[0]] = true;
        while members.len() < size {
            let frontier: Vec<VertexId> =
                members.iter().flat_map(|&v| g.neighbors(v)).filter(|&w| !collar[w] && !member[w]).collect();
            let Some(&w) = frontier.get(rng.random_range(0..frontier.len().max(1))) else { break };
            member[w] = true;
            members.push(w);
        }
        let got = surrounding_faces_oracle(g, &tri.rot, &member, &collar);
        assert!(got <= 1, "{name}: {got} faces");
        assert_eq!(tri.faces_surrounding_collar(&members), got, "{name}");
    }
}

/// Hub 0 and rim `1..=k` drawn on the unit circle, rim as outer face.
pub fn wheel_triangulation(k: usize) -> Triangulation {
    let g = wheel(k);
    let mut pos = vec![(0.0, 0.0)];
    pos.extend((0..k).map(|i| {
        let a = 2.0 * PI * i as f64 / k as f64;
        (a.cos(), a.sin())
    }));
    let rot = rotation_from_drawing(&g, &pos);
    let outer = trace_faces(&g, &rot)
        .unwrap()
        .into_iter()
        .find(|f| f.len() == k && !f.contains_vertex(&g, 0))
        .unwrap();
    Triangulation { graph: g, rot, outer, marked: k + 1, original_edges: 2 * k, roles: vec![VertexRole::Original; k + 1] }
}

pub fn pack(tri: &Triangulation, geometry: Geometry, r: f64) -> Packing {
    circle_pack(tri, geometry, &BoundaryCondition::UniformRadius(r), PackOptions::default()).unwrap()
}

/// Bisection for the hub radius of a `k`-wheel whose rim circles have radius `r`.
pub fn hub_radius_oracle(hyperbolic: bool, k: usize, r: f64) -> f64 {
    let f = |x: f64| k as f64 * law_of_cosines_angle(hyperbolic, x, r, r) - 2.0 * PI;
    let (mut lo, mut hi) = (1e-9, 50.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Angle-sum error at interior vertices and tangency error on edges,
/// recomputed from radii and centres.
pub fn residuals(tri: &Triangulation, p: &Packing) -> (f64, f64) {
    let hyperbolic = p.geometry == Geometry::Hyperbolic;
    let on_outer = tri.is_boundary();
    let mut sums = vec![0.0; tri.graph.vertex_count()];
    for [a, b, c] in inner_triangles(tri) {
        for (v, u, w) in [(a, b, c), (b, c, a), (c, a, b)] {
            sums[v] += law_of_cosines_angle(hyperbolic, p.radii[v], p.radii[u], p.radii[w]);
        }
    }
    let angle = tri.graph.vertices().filter(|&v| !on_outer[v]).map(|v| (sums[v] - 2.0 * PI).abs()).fold(0.0, f64::max);
    let z = |v: VertexId| Complex64::new(p.centers[v][0], p.centers[v][1]);
    let tangency = tri
        .graph
        .edges()
        .map(|e| {
            let [u, v] = tri.graph.ends(e);
            let d = if hyperbolic { poincare_distance(z(u), z(v)) } else { (z(u) - z(v)).norm() };
            (d - p.radii[u] - p.radii[v]).abs()
        })
        .fold(0.0, f64::max);
    (angle, tangency)
}
