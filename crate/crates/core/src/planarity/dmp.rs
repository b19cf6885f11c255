//! Demoucron–Malgrange–Pertuiset path addition for 2-connected simple graphs.

use std::collections::VecDeque;

use crate::graph::{Dart, Graph, VertexId};
use crate::rotation::RotationSystem;

struct Partial<'a> {
    g: &'a Graph,
    orders: Vec<Vec<Dart>>,
    vertex_in: Vec<bool>,
    edge_in: Vec<bool>,
}

impl Partial<'_> {
    fn next(&self, d: Dart) -> Dart {
        let order = &self.orders[self.g.source(d)];
        let i = order.iter().position(|&x| x == d).expect("dart embedded");
        order[(i + 1) % order.len()]
    }

    fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.g.dart_count()];
        let mut faces = Vec::new();
        for e in self.g.edges().filter(|&e| self.edge_in[e]) {
            for start in [Dart::new(e, false), Dart::new(e, true)] {
                if seen[start.index()] {
                    continue;
                }
                let mut walk = Vec::new();
                let mut d = start;
                while !seen[d.index()] {
                    seen[d.index()] = true;
                    walk.push(d);
                    d = self.next(d.rev());
                }
                faces.push(walk);
            }
        }
        faces
    }

    /// Inserts a new dart at `v` in the corner of `face` at `v`.
    fn insert_in_corner(&mut self, face: &[Dart], v: VertexId, new: Dart) {
        let k = face.len();
        let j = (0..k)
            .find(|&j| self.g.source(face[j]) == v)
            .expect("vertex on face");
        let before = face[(j + k - 1) % k].rev();
        let order = &mut self.orders[v];
        let p = order.iter().position(|&x| x == before).expect("corner dart");
        order.insert(p + 1, new);
    }
}

struct Fragment {
    edges: Vec<usize>,
    attachments: Vec<VertexId>,
    /// Internal vertices (empty for a chord).
    vertices: Vec<VertexId>,
}

/// Embeds a 2-connected simple graph with at least three vertices.
///
/// Returns `None` when the graph is not planar.
pub(crate) fn embed_biconnected(g: &Graph) -> Option<RotationSystem> {
    let n = g.vertex_count();
    let mut p = Partial {
        g,
        orders: vec![Vec::new(); n],
        vertex_in: vec![false; n],
        edge_in: vec![false; g.edge_count()],
    };

    // Initial cycle: edge 0 plus a shortest path back avoiding it.
    let [a, b] = g.ends(0);
    let path = bfs_path(g, b, |v| v == a, |e| e != 0, |_| true)?;
    let mut cycle = vec![Dart::new(0, false)];
    cycle.extend(path);
    for (i, &d) in cycle.iter().enumerate() {
        let prev = cycle[(i + cycle.len() - 1) % cycle.len()];
        let v = g.source(d);
        p.orders[v] = vec![d, prev.rev()];
        p.vertex_in[v] = true;
        p.edge_in[d.edge()] = true;
    }

    loop {
        let fragments = fragments(&p);
        if fragments.is_empty() {
            break;
        }
        let faces = p.faces();
        let mut face_sets: Vec<Vec<bool>> = vec![vec![false; faces.len()]; n];
        for (fi, f) in faces.iter().enumerate() {
            for &d in f {
                face_sets[g.source(d)][fi] = true;
            }
        }
        let mut choice: Option<(usize, usize)> = None;
        for (k, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&fi| frag.attachments.iter().all(|&v| face_sets[v][fi]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((k, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((k, admissible[0]));
                    }
                }
            }
        }
        let (k, fi) = choice.expect("some fragment");
        let path = fragment_path(g, &p, &fragments[k]);
        embed_path(&mut p, &faces[fi], &path);
    }
    Some(RotationSystem::from_orders_unchecked(g.dart_count(), p.orders))
}

fn embed_path(p: &mut Partial, face: &[Dart], path: &[Dart]) {
    let g = p.g;
    let first = path[0];
    let last = *path.last().expect("nonempty path");
    p.insert_in_corner(face, g.source(first), first);
    p.insert_in_corner(face, g.target(last), last.rev());
    for w in path.windows(2) {
        let v = g.target(w[0]);
        p.orders[v] = vec![w[0].rev(), w[1]];
        p.vertex_in[v] = true;
    }
    for &d in path {
        p.edge_in[d.edge()] = true;
    }
}

fn fragments(p: &Partial) -> Vec<Fragment> {
    let g = p.g;
    let mut out = Vec::new();
    for e in g.edges() {
        let [u, v] = g.ends(e);
        if !p.edge_in[e] && p.vertex_in[u] && p.vertex_in[v] {
            out.push(Fragment { edges: vec![e], attachments: vec![u, v], vertices: vec![] });
        }
    }
    let mut seen = p.vertex_in.clone();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        let mut attachments = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &d in g.darts_at(v) {
                let w = g.target(d);
                if p.vertex_in[w] {
                    edges.push(d.edge());
                    attachments.push(w);
                } else {
                    if v < w {
                        edges.push(d.edge());
                    }
                    if !seen[w] {
                        seen[w] = true;
                        vertices.push(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { edges, attachments, vertices });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(g: &Graph, p: &Partial, frag: &Fragment) -> Vec<Dart> {
    if frag.vertices.is_empty() {
        let e = frag.edges[0];
        return vec![Dart::new(e, false)];
    }
    let mut inside = vec![false; g.vertex_count()];
    for &v in &frag.vertices {
        inside[v] = true;
    }
    // Enter from the first attachment, leave to any other attachment.
    let a = frag.attachments[0];
    let entry = g
        .darts_at(a)
        .iter()
        .copied()
        .find(|&d| inside[g.target(d)])
        .expect("attachment touches fragment");
    let x = g.target(entry);
    let rest = bfs_path(
        g,
        x,
        |v| p.vertex_in[v] && v != a,
        |_| true,
        |v| inside[v] || (p.vertex_in[v] && v != a),
    )
    .expect("2-connected fragments have two attachments");
    let mut path = vec![entry];
    path.extend(rest);
    path
}

/// Shortest dart path from `from` to a vertex satisfying `goal`, using edges
/// allowed by `edge_ok` and stepping only onto vertices allowed by `vertex_ok`
/// (goal vertices are always allowed). Goal vertices are not expanded.
fn bfs_path(
    g: &Graph,
    from: VertexId,
    goal: impl Fn(VertexId) -> bool,
    edge_ok: impl Fn(usize) -> bool,
    vertex_ok: impl Fn(VertexId) -> bool,
) -> Option<Vec<Dart>> {
    let mut pred: Vec<Option<Dart>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v != from && goal(v) {
            let mut path = Vec::new();
            let mut w = v;
            while w != from {
                let d = pred[w].expect("predecessor");
                path.push(d);
                w = g.source(d);
            }
            path.reverse();
            return Some(path);
        }
        for &d in g.darts_at(v) {
            let w = g.target(d);
            if !seen[w] && edge_ok(d.edge()) && (goal(w) || vertex_ok(w)) {
                seen[w] = true;
                pred[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    None
}
