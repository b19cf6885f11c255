//! Isomorphism-invariant fingerprints of rooted balls.

use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use crate::graph::{Graph, VertexId};

/// Vertices within distance `r` of `root`, with their distances.
pub fn ball(g: &Graph, root: VertexId, r: usize) -> Vec<(VertexId, usize)> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[root] = 0;
    let mut out = vec![(root, 0)];
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        if dist[v] == r {
            continue;
        }
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                out.push((w, dist[w]));
                queue.push_back(w);
            }
        }
    }
    out
}

fn hash_of(x: &impl Hash) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

/// Colour refinement on the ball of radius `r`, seeded by distance to the
/// root. Isomorphic rooted balls get equal types; the converse holds for the
/// small balls used here but is not guaranteed in general.
pub fn ball_type(g: &Graph, root: VertexId, r: usize) -> u64 {
    let members = ball(g, root, r);
    let mut slot = vec![usize::MAX; g.vertex_count()];
    for (i, &(v, _)) in members.iter().enumerate() {
        slot[v] = i;
    }
    // Edges inside the ball, with multiplicity.
    let adj: Vec<Vec<usize>> = members
        .iter()
        .map(|&(v, _)| {
            g.darts_at(v)
                .iter()
                .map(|&d| slot[g.target(d)])
                .filter(|&s| s != usize::MAX)
                .collect()
        })
        .collect();
    let mut colour: Vec<u64> = members.iter().map(|&(_, d)| d as u64).collect();
    for _ in 0..members.len().min(r + 3) {
        colour = (0..members.len())
            .map(|i| {
                let mut around: Vec<u64> = adj[i].iter().map(|&j| colour[j]).collect();
                around.sort_unstable();
                hash_of(&(colour[i], around))
            })
            .collect();
    }
    let mut all = colour.clone();
    all.sort_unstable();
    hash_of(&(colour[0], all))
}
