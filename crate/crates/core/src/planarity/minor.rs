use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

pub const MAX_PATTERN_VERTICES: usize = 8;

/// Disjoint connected branch sets, one per pattern vertex, with one realizing
/// edge per pattern edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub pattern: Graph,
    pub branch_sets: Vec<Vec<VertexId>>,
    pub edge_realizers: Vec<EdgeId>,
}

impl MinorModel {
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let h = &self.pattern;
        if self.branch_sets.len() != h.vertex_count() {
            return Err("one branch set per pattern vertex required".into());
        }
        if self.edge_realizers.len() != h.edge_count() {
            return Err("one realizer per pattern edge required".into());
        }
        let mut owner = vec![usize::MAX; g.vertex_count()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return Err(format!("branch set {i} is empty"));
            }
            for &v in set {
                if v >= g.vertex_count() || owner[v] != usize::MAX {
                    return Err(format!("vertex {v} invalid or shared"));
                }
                owner[v] = i;
            }
            if !is_connected_set(g, set) {
                return Err(format!("branch set {i} is not connected"));
            }
        }
        for (e, &r) in self.edge_realizers.iter().enumerate() {
            let [x, y] = h.ends(e);
            if r >= g.edge_count() {
                return Err(format!("realizer {r} out of range"));
            }
            let [a, b] = g.ends(r);
            let (oa, ob) = (owner[a], owner[b]);
            if !((oa == x && ob == y) || (oa == y && ob == x)) {
                return Err(format!("edge {r} does not realize pattern edge {x}-{y}"));
            }
        }
        Ok(())
    }
}

pub(crate) fn is_connected_set(g: &Graph, set: &[VertexId]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![set[0]];
    seen[set[0]] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == set.len()
}

/// Exhaustive search for a minor model of the simple pattern `h` in `g`.
///
/// Vertices of `g` are assigned to branch sets (or left unused) as restricted
/// growth strings; each complete assignment is checked for connected sets and
/// an injective pattern map into the quotient.
pub fn find_minor(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    if h.vertex_count() > MAX_PATTERN_VERTICES {
        return Err(Error::SizeGuard {
            what: "pattern vertices",
            actual: h.vertex_count() as u64,
            limit: MAX_PATTERN_VERTICES as u64,
        });
    }
    if !h.is_simple() {
        return Err(Error::Parse("minor patterns must be simple graphs".into()));
    }
    let k = h.vertex_count();
    if k > g.vertex_count() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let mut search = Search {
        g,
        h,
        k,
        label: vec![0; g.vertex_count()],
        h_order: {
            let mut o: Vec<VertexId> = h.vertices().collect();
            o.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
            o
        },
        found: None,
    };
    search.assign(0, 0);
    Ok(search.found)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    k: usize,
    /// 0 = unused, otherwise branch set index + 1.
    label: Vec<usize>,
    h_order: Vec<VertexId>,
    found: Option<MinorModel>,
}

impl Search<'_> {
    fn assign(&mut self, i: usize, used: usize) -> bool {
        let n = self.g.vertex_count();
        if n - i < self.k - used {
            return false;
        }
        if i == n {
            return self.check();
        }
        let upper = (used + 1).min(self.k);
        for l in 0..=upper {
            self.label[i] = l;
            let next_used = used.max(l);
            if self.assign(i + 1, next_used) {
                return true;
            }
        }
        self.label[i] = 0;
        false
    }

    fn check(&mut self) -> bool {
        let g = self.g;
        let k = self.k;
        let mut sets = vec![Vec::new(); k];
        for v in g.vertices() {
            if self.label[v] > 0 {
                sets[self.label[v] - 1].push(v);
            }
        }
        if !sets.iter().all(|s| is_connected_set(g, s)) {
            return false;
        }
        let mut quotient = vec![vec![None; k]; k];
        for e in g.edges() {
            let [a, b] = g.ends(e);
            let (la, lb) = (self.label[a], self.label[b]);
            if la > 0 && lb > 0 && la != lb {
                quotient[la - 1][lb - 1] = Some(e);
                quotient[lb - 1][la - 1] = Some(e);
            }
        }
        let mut map = vec![usize::MAX; self.h.vertex_count()];
        let mut taken = vec![false; k];
        if self.match_pattern(0, &quotient, &mut map, &mut taken) {
            let edge_realizers = self
                .h
                .edges()
                .map(|e| {
                    let [x, y] = self.h.ends(e);
                    quotient[map[x]][map[y]].expect("matched")
                })
                .collect();
            let branch_sets = map.iter().map(|&b| sets[b].clone()).collect();
            self.found = Some(MinorModel { pattern: self.h.clone(), branch_sets, edge_realizers });
            return true;
        }
        false
    }

    fn match_pattern(
        &self,
        i: usize,
        quotient: &[Vec<Option<EdgeId>>],
        map: &mut [usize],
        taken: &mut [bool],
    ) -> bool {
        if i == self.h_order.len() {
            return true;
        }
        let x = self.h_order[i];
        for b in 0..self.k {
            if taken[b] {
                continue;
            }
            let ok = self.h.neighbors(x).all(|y| map[y] == usize::MAX || quotient[b][map[y]].is_some());
            if ok {
                map[x] = b;
                taken[b] = true;
                if self.match_pattern(i + 1, quotient, map, taken) {
                    return true;
                }
                taken[b] = false;
                map[x] = usize::MAX;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_in_itself() {
        let g = Graph::complete(5);
        let m = find_minor(&g, &g).unwrap().unwrap();
        m.verify(&g).unwrap();
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn prism_plus_apex_has_k5() {
        // Prism a0 a1 a2 / b0 b1 b2 and apex 6.
        let mut g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        );
        for v in 0..6 {
            g.add_edge(6, v);
        }
        let m = find_minor(&g, &Graph::complete(5)).unwrap().unwrap();
        m.verify(&g).unwrap();
    }

    #[test]
    fn trees_have_no_triangle_minor() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]);
        assert!(find_minor(&g, &Graph::cycle(3)).unwrap().is_none());
    }

    #[test]
    fn pattern_guard() {
        let err = find_minor(&Graph::complete(9), &Graph::complete(9));
        assert!(matches!(err, Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn verify_rejects_shared_vertices() {
        let g = Graph::cycle(3);
        let m = MinorModel {
            pattern: Graph::path(2),
            branch_sets: vec![vec![0], vec![0, 1]],
            edge_realizers: vec![0],
        };
        assert!(m.verify(&g).is_err());
    }
}
