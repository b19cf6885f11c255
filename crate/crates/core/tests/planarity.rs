mod common;

use locfin_core::planarity::{
    enumerate_planar_embeddings, find_minor, is_planar, EnumerateOptions, Pattern,
};
use locfin_core::{euler_genus, trace_faces, Graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn both() -> EnumerateOptions {
    EnumerateOptions { both_chiralities: true, ..Default::default() }
}

#[test]
fn kuratowski_examples() {
    let k4 = is_planar(&Graph::complete(4)).unwrap();
    assert!(k4.planar);
    let faces = trace_faces(&Graph::complete(4), k4.embedding.as_ref().unwrap()).unwrap();
    assert!(faces.len() == 4 && faces.iter().all(|f| f.len() == 3));

    let k5 = Graph::complete(5);
    let w = is_planar(&k5).unwrap().witness.unwrap();
    assert_eq!(w.pattern, Pattern::K5);
    assert!(w.paths.iter().all(|p| p.edges.len() == 1));
    w.verify(&k5).unwrap();

    let k33 = Graph::complete_bipartite(3, 3);
    let w = is_planar(&k33).unwrap().witness.unwrap();
    assert_eq!(w.pattern, Pattern::K33);
    w.verify(&k33).unwrap();
}

#[test]
fn minor_examples() {
    let k5 = Graph::complete(5);
    let m = find_minor(&k5, &k5).unwrap().unwrap();
    assert!(m.branch_sets.iter().all(|s| s.len() == 1));

    // Prism a1 a2 a3 / b1 b2 b3 plus an apex on all six.
    let mut edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)];
    edges.extend((0..6).map(|v| (6, v)));
    let g = Graph::from_edges(7, &edges);
    let m = find_minor(&g, &k5).unwrap().unwrap();
    m.verify(&g).unwrap();
    let mut sizes: Vec<usize> = m.branch_sets.iter().map(|s| s.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 1, 1, 3]);

    let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]);
    assert!(find_minor(&tree, &Graph::cycle(3)).unwrap().is_none());
}

#[test]
fn enumeration_examples() {
    let k4 = Graph::complete(4);
    assert_eq!(enumerate_planar_embeddings(&k4, Default::default()).unwrap().len(), 1);
    assert_eq!(enumerate_planar_embeddings(&k4, both()).unwrap().len(), 2);
    assert_eq!(enumerate_planar_embeddings(&Graph::cycle(5), Default::default()).unwrap().len(), 1);
    let link = Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]);
    assert_eq!(enumerate_planar_embeddings(&link, Default::default()).unwrap().len(), 1);
    assert_eq!(common::all_rotations(&link).len(), 4);
    assert_eq!(
        common::all_rotations(&link).iter().filter(|r| euler_genus(&link, r).unwrap() == 0).count(),
        2
    );
}

#[test]
fn three_connected_planar_graphs_have_one_embedding_up_to_reflection() {
    let mut checked = 0;
    for n in 4..=6 {
        for g in common::connected_graphs(n) {
            if !common::is_three_connected(&g) || !is_planar(&g).unwrap().planar {
                continue;
            }
            let all = enumerate_planar_embeddings(&g, both()).unwrap();
            assert_eq!(all.len(), 2);
            assert_eq!(all[0].canonical_key(), all[1].inverse().canonical_key());
            assert_eq!(enumerate_planar_embeddings(&g, Default::default()).unwrap().len(), 1);
            checked += 1;
        }
    }
    // K4, the wheel W5, K5 minus an edge, the prism, the octahedron and friends.
    assert!(checked >= 7, "only {checked} graphs");
}

#[test]
fn enumeration_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let (g, _) = common::random_planar(&mut rng, 6);
        let brute = common::all_rotations(&g).into_iter().filter(|r| euler_genus(&g, r).unwrap() == 0).count();
        assert_eq!(enumerate_planar_embeddings(&g, both()).unwrap().len(), brute);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn certificates_are_sound(seed in any::<u64>(), n in 1usize..=11) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let extra = (seed % (3 * n as u64 + 1)) as usize;
        let g = common::random_connected(&mut rng, n, extra);
        let r = is_planar(&g).unwrap();
        match (&r.embedding, &r.witness) {
            (Some(rot), None) => {
                prop_assert!(r.planar);
                prop_assert_eq!(euler_genus(&g, rot).unwrap(), 0);
                prop_assert_eq!(common::genus_oracle(&g, rot), 0);
            }
            (None, Some(w)) => {
                prop_assert!(!r.planar);
                prop_assert_eq!(w.verify(&g), Ok(()));
            }
            _ => prop_assert!(false, "exactly one certificate expected"),
        }
    }
}
