use crate::error::{Error, Result};
use crate::graph::{Dart, Graph};
use crate::rotation::RotationSystem;

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Report both members of every mirror pair instead of one representative.
    pub both_chiralities: bool,
    /// Upper bound on the number of rotation systems examined.
    pub max_candidates: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { both_chiralities: false, max_candidates: 5_000_000 }
    }
}

/// All planar rotation systems of a connected planar graph, sorted by
/// canonical key; by default one per mirror pair.
pub fn enumerate_planar_embeddings(g: &Graph, opts: EnumerateOptions) -> Result<Vec<RotationSystem>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut candidates: u64 = 1;
    for v in g.vertices() {
        for k in 2..g.degree(v) as u64 {
            candidates = candidates.saturating_mul(k);
        }
    }
    if candidates > opts.max_candidates {
        return Err(Error::SizeGuard {
            what: "rotation systems",
            actual: candidates,
            limit: opts.max_candidates,
        });
    }
    let target_faces = 2 + g.edge_count() as i64 - g.vertex_count() as i64;

    // Per vertex: all cyclic orders with the first dart fixed.
    let choices: Vec<Vec<Vec<Dart>>> = g
        .vertices()
        .map(|v| {
            let darts = g.darts_at(v);
            if darts.is_empty() {
                return vec![vec![]];
            }
            let mut rest: Vec<Dart> = darts[1..].to_vec();
            let mut out = Vec::new();
            permutations(&mut rest, 0, &mut |p| {
                let mut o = vec![darts[0]];
                o.extend_from_slice(p);
                out.push(o);
            });
            out
        })
        .collect();

    let n = g.vertex_count();
    let mut idx = vec![0usize; n];
    let mut next = vec![Dart(0); g.dart_count()];
    let mut found = Vec::new();
    let mut seen = vec![false; g.dart_count()];
    loop {
        for v in 0..n {
            let o = &choices[v][idx[v]];
            for i in 0..o.len() {
                next[o[i].index()] = o[(i + 1) % o.len()];
            }
        }
        seen.iter_mut().for_each(|s| *s = false);
        let mut faces = 0i64;
        for s in 0..g.dart_count() {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = Dart(s as u32);
            while !seen[d.index()] {
                seen[d.index()] = true;
                d = next[d.rev().index()];
            }
        }
        if faces.max(1) == target_faces {
            let orders = (0..n).map(|v| choices[v][idx[v]].clone()).collect();
            let rot = RotationSystem::from_orders_unchecked(g.dart_count(), orders);
            if opts.both_chiralities || rot.canonical_key() <= rot.inverse().canonical_key() {
                found.push(rot);
            }
        }
        // Odometer step.
        let mut v = 0;
        loop {
            if v == n {
                if found.is_empty() {
                    return Err(Error::NonPlanar);
                }
                found.sort_by_key(|r| r.canonical_key());
                found.dedup_by_key(|r| r.canonical_key());
                return Ok(found);
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn permutations(items: &mut [Dart], k: usize, out: &mut impl FnMut(&[Dart])) {
    if k == items.len() {
        out(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}
