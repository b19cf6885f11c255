//! Mass transport on finite graphs with a uniformly random root.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decomposition::block_cut_tree;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::rotation::{trace_faces, RotationSystem};

/// A graph with optional rotation decoration.
#[derive(Clone, Copy, Debug)]
pub struct Decorated<'a> {
    pub graph: &'a Graph,
    pub rotation: Option<&'a RotationSystem>,
}

/// A payment `f(G, o, u) >= 0` from `o` to `u`.
pub trait PaymentFunction {
    fn name(&self) -> &str;
    /// Locality radius.
    fn radius(&self) -> usize;
    /// Whether the rule claims to depend only on the decorated ball around the pair.
    fn relabel_invariant(&self) -> bool {
        true
    }
    fn pay(&self, s: Decorated<'_>, o: VertexId, u: VertexId) -> f64;
}

/// One unit along every edge.
pub struct Adjacency;

impl PaymentFunction for Adjacency {
    fn name(&self) -> &str {
        "adjacency"
    }
    fn radius(&self) -> usize {
        1
    }
    fn pay(&self, s: Decorated<'_>, o: VertexId, u: VertexId) -> f64 {
        s.graph.darts_at(o).iter().filter(|&&d| s.graph.target(d) == u && o != u).count() as f64
    }
}

/// One unit from `o` to the least-numbered vertex of each block containing `o`.
/// Depends on vertex names, so it is not a local rule.
pub struct BlockMinimum;

impl PaymentFunction for BlockMinimum {
    fn name(&self) -> &str {
        "block_minimum"
    }
    fn radius(&self) -> usize {
        usize::MAX
    }
    fn relabel_invariant(&self) -> bool {
        false
    }
    fn pay(&self, s: Decorated<'_>, o: VertexId, u: VertexId) -> f64 {
        let bct = block_cut_tree(s.graph).expect("connected graph");
        bct.vertex_blocks[o]
            .iter()
            .filter(|&&a| bct.blocks[a].vertices.iter().min() == Some(&u))
            .count() as f64
    }
}

/// `deg(u) / deg(o)` for distinct vertices at distance at most two.
pub struct DegreeWeighted;

impl PaymentFunction for DegreeWeighted {
    fn name(&self) -> &str {
        "degree_weighted"
    }
    fn radius(&self) -> usize {
        2
    }
    fn pay(&self, s: Decorated<'_>, o: VertexId, u: VertexId) -> f64 {
        let g = s.graph;
        if o == u {
            return 0.0;
        }
        let near = g.neighbors(o).any(|w| w == u || g.neighbors(w).any(|x| x == u));
        if near {
            g.degree(u) as f64 / g.degree(o) as f64
        } else {
            0.0
        }
    }
}

/// For every dart from `o` to `u`: one unit if its face is a triangle, a
/// quarter otherwise. Reads the rotation within distance two of `o`.
pub struct RotationDecoration;

impl PaymentFunction for RotationDecoration {
    fn name(&self) -> &str {
        "rotation_decoration"
    }
    fn radius(&self) -> usize {
        2
    }
    fn pay(&self, s: Decorated<'_>, o: VertexId, u: VertexId) -> f64 {
        let rot = s.rotation.expect("rotation decoration required");
        let g = s.graph;
        g.darts_at(o)
            .iter()
            .filter(|&&d| g.target(d) == u)
            .map(|&d| {
                let a = rot.face_successor(d);
                let b = rot.face_successor(a);
                if rot.face_successor(b) == d && a != d && b != d {
                    1.0
                } else {
                    0.25
                }
            })
            .sum()
    }
}

pub fn payment_corpus() -> Vec<Box<dyn PaymentFunction>> {
    vec![Box::new(Adjacency), Box::new(BlockMinimum), Box::new(DegreeWeighted), Box::new(RotationDecoration)]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MtpResult {
    /// Expected mass sent by the root.
    pub lhs: f64,
    /// Expected mass received by the root.
    pub rhs: f64,
}

impl MtpResult {
    pub fn gap(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }
}

/// Both sides of the mass transport identity for the uniform root. Rules
/// claiming locality are first checked against a fixed random relabeling.
pub fn mtp_check(s: Decorated<'_>, f: &dyn PaymentFunction) -> Result<MtpResult> {
    let g = s.graph;
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if f.relabel_invariant() {
        relabel_test(s, f)?;
    }
    let mut table = vec![0.0; n * n];
    for o in 0..n {
        for u in 0..n {
            table[o * n + u] = f.pay(s, o, u);
        }
    }
    let sent: f64 = (0..n).map(|o| (0..n).map(|u| table[o * n + u]).sum::<f64>()).sum();
    let received: f64 = (0..n).map(|o| (0..n).map(|u| table[u * n + o]).sum::<f64>()).sum();
    Ok(MtpResult { lhs: sent / n as f64, rhs: received / n as f64 })
}

fn relabel_test(s: Decorated<'_>, f: &dyn PaymentFunction) -> Result<()> {
    let g = s.graph;
    let n = g.vertex_count();
    let mut perm: Vec<VertexId> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(0x5eed));
    let h = g.relabeled(&perm);
    let rot = s.rotation.map(|r| r.relabeled(&perm).rebuilt(&h)).transpose()?;
    let t = Decorated { graph: &h, rotation: rot.as_ref() };
    for o in 0..n {
        for u in 0..n {
            let a = f.pay(s, o, u);
            let b = f.pay(t, perm[o], perm[u]);
            if (a - b).abs() > 1e-12 * a.abs().max(1.0) {
                return Err(Error::NonLocalPayment(format!(
                    "{}: payment {o}->{u} changes from {a} to {b} under relabeling",
                    f.name()
                )));
            }
        }
    }
    Ok(())
}

/// Number of faces of each length.
pub fn face_length_histogram(g: &Graph, rot: &RotationSystem) -> Result<Vec<usize>> {
    let faces = trace_faces(g, rot)?;
    let mut hist = Vec::new();
    for f in &faces {
        if hist.len() <= f.len() {
            hist.resize(f.len() + 1, 0);
        }
        hist[f.len()] += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_gives_average_degree() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]);
        let r = mtp_check(Decorated { graph: &g, rotation: None }, &Adjacency).unwrap();
        assert_eq!(r.lhs, 2.0);
        assert_eq!(r.rhs, 2.0);
    }

    struct RootName;
    impl PaymentFunction for RootName {
        fn name(&self) -> &str {
            "root_name"
        }
        fn radius(&self) -> usize {
            0
        }
        fn pay(&self, _: Decorated<'_>, o: VertexId, u: VertexId) -> f64 {
            (o == 0 && u == 1) as u8 as f64
        }
    }

    #[test]
    fn name_dependent_rule_is_rejected() {
        let g = Graph::path(4);
        let r = mtp_check(Decorated { graph: &g, rotation: None }, &RootName);
        assert!(matches!(r, Err(Error::NonLocalPayment(_))));
    }
}
