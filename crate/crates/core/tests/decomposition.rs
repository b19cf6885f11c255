mod common;

use locfin_core::decomposition::{
    amalgamate, block_cut_tree, component_embeddings, compose, restrict_to_node, tutte_decomposition, Amalgam,
    NodeEdge, NodeKind, TutteLink, TutteNode, TutteTree,
};
use locfin_core::planarity::{enumerate_planar_embeddings, EnumerateOptions};
use locfin_core::Graph;
use petgraph::graph::UnGraph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let edges: Vec<(u32, u32)> = g.edge_list().into_iter().map(|(a, b)| (a as u32, b as u32)).collect();
    let mut p = UnGraph::from_edges(&edges);
    while p.node_count() < g.vertex_count() {
        p.add_node(());
    }
    p
}

/// The labels of the amalgam define an isomorphism onto `g` carrying every
/// edge to the edge with the same id.
fn check_round_trip(g: &Graph, am: &Amalgam) {
    assert!(petgraph::algo::is_isomorphic(&to_petgraph(g), &to_petgraph(&am.graph)));
    let mut labels = am.labels.clone();
    labels.sort_unstable();
    assert_eq!(labels, g.vertices().collect::<Vec<_>>());
    let mut ids = am.edge_ids.clone();
    ids.sort_unstable();
    assert_eq!(ids, g.edges().collect::<Vec<_>>());
    for e in am.graph.edges() {
        let [a, b] = am.graph.ends(e);
        let mut got = [am.labels[a], am.labels[b]];
        let mut want = g.ends(am.edge_ids[e]);
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want);
    }
}

fn kinds(t: &TutteTree) -> Vec<NodeKind> {
    let mut k: Vec<NodeKind> = t.nodes.iter().map(|n| n.kind).collect();
    k.sort();
    k
}

#[test]
fn block_cut_examples() {
    let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
    let t = block_cut_tree(&bowtie).unwrap();
    assert_eq!((t.blocks.len(), t.cut_vertices.clone()), (2, vec![2]));
    let t = block_cut_tree(&Graph::path(4)).unwrap();
    assert_eq!((t.blocks.len(), t.cut_vertices.clone()), (3, vec![1, 2]));
    let t = block_cut_tree(&Graph::complete(4)).unwrap();
    assert_eq!((t.blocks.len(), t.cut_vertices.len()), (1, 0));
}

#[test]
fn tutte_examples() {
    // K4 minus the edge 2-3: triangles 0 1 2 and 0 1 3 on the edge 0-1.
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
    let t = tutte_decomposition(&g).unwrap();
    assert_eq!(kinds(&t), vec![NodeKind::Cycle, NodeKind::Cycle, NodeKind::ThreeLink]);
    let link = t.nodes.iter().find(|n| n.kind == NodeKind::ThreeLink).unwrap();
    let mut on = link.labels.clone();
    on.sort_unstable();
    assert_eq!(on, vec![0, 1]);
    assert!(link.edges.contains(&NodeEdge::Real(0)));
    check_round_trip(&g, &amalgamate(&t).unwrap());

    let k4 = tutte_decomposition(&Graph::complete(4)).unwrap();
    assert_eq!(kinds(&k4), vec![NodeKind::ThreeConnected]);
    check_round_trip(&Graph::complete(4), &amalgamate(&k4).unwrap());
    let c6 = tutte_decomposition(&Graph::cycle(6)).unwrap();
    assert_eq!(kinds(&c6), vec![NodeKind::Cycle]);
}

#[test]
fn two_triangles_amalgamate_to_a_square() {
    let tri = |labels: Vec<usize>, reals: [usize; 2]| TutteNode {
        kind: NodeKind::Cycle,
        graph: Graph::cycle(3),
        labels,
        edges: vec![NodeEdge::Real(reals[0]), NodeEdge::Real(reals[1]), NodeEdge::Virtual(0)],
    };
    let t = TutteTree {
        nodes: vec![tri(vec![0, 1, 2], [0, 1]), tri(vec![2, 3, 0], [2, 3])],
        links: vec![TutteLink { nodes: [0, 1], edges: [2, 2], vertex_map: [[2, 0], [0, 2]] }],
        degenerate: false,
    };
    let am = amalgamate(&t).unwrap();
    check_round_trip(&Graph::cycle(4), &am);
}

#[test]
fn component_embedding_counts() {
    let link = Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]);
    let t = tutte_decomposition(&link).unwrap();
    assert_eq!(component_embeddings(&t.nodes[0]).len(), 2);
    let t = tutte_decomposition(&Graph::cycle(7)).unwrap();
    assert_eq!(component_embeddings(&t.nodes[0]).len(), 1);
    let t = tutte_decomposition(&Graph::complete(4)).unwrap();
    let mine: Vec<_> = component_embeddings(&t.nodes[0]).iter().map(|r| r.canonical_key()).collect();
    let mut brute: Vec<_> = enumerate_planar_embeddings(
        &t.nodes[0].graph,
        EnumerateOptions { both_chiralities: true, ..Default::default() },
    )
    .unwrap()
    .iter()
    .map(|r| r.canonical_key())
    .collect();
    brute.sort();
    let mut mine_sorted = mine.clone();
    mine_sorted.sort();
    assert_eq!(mine_sorted, brute);
}

/// Every choice of node embeddings composes to a distinct planar rotation
/// restricting back to the choice, and these exhaust the planar rotations.
#[test]
fn composition_is_a_bijection() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tested = 0;
    while tested < 25 {
        let g = common::random_biconnected_planar(&mut rng, 8);
        let t = tutte_decomposition(&g).unwrap();
        let options: Vec<_> = t.nodes.iter().map(component_embeddings).collect();
        let total: usize = options.iter().map(|o| o.len()).product();
        if total > 512 {
            continue;
        }
        let mut keys = Vec::new();
        let mut idx = vec![0usize; options.len()];
        loop {
            let choice: Vec<_> = idx.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect();
            let (am, rot) = compose(&t, &choice).unwrap();
            assert_eq!(locfin_core::euler_genus(&am.graph, &rot).unwrap(), 0);
            for (node, c) in choice.iter().enumerate() {
                assert_eq!(restrict_to_node(&t, &am, &rot, node).unwrap().canonical_key(), c.canonical_key());
            }
            keys.push(rot.canonical_key());
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < options[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), total);
        let am = amalgamate(&t).unwrap();
        let planar = enumerate_planar_embeddings(
            &am.graph,
            EnumerateOptions { both_chiralities: true, ..Default::default() },
        )
        .unwrap();
        assert_eq!(planar.len(), total);
        tested += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn round_trip_and_relabeling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_biconnected_planar(&mut rng, 12);
        let t = tutte_decomposition(&g).unwrap();
        prop_assert!(t.is_reduced());
        check_round_trip(&g, &amalgamate(&t).unwrap());
        for n in &t.nodes {
            match n.kind {
                NodeKind::Cycle => prop_assert!(n.graph.vertices().all(|v| n.graph.degree(v) == 2)),
                NodeKind::ThreeLink => prop_assert_eq!((n.graph.vertex_count(), n.graph.edge_count()), (2, 3)),
                NodeKind::Bond => prop_assert!(n.graph.vertex_count() == 2 && n.graph.edge_count() >= 4),
                NodeKind::ThreeConnected => prop_assert!(common::is_three_connected(&n.graph)),
            }
        }
        let perm = common::random_permutation(&mut rng, g.vertex_count());
        let h = g.relabeled(&perm);
        let th = tutte_decomposition(&h).unwrap();
        prop_assert_eq!(t.signature(|v| perm[v]), th.signature(|v| v));
    }
}
