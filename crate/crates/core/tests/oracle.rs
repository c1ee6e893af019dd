use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sweepcover::cover::max_cover_size;
use sweepcover::enumerate::{
    count_sweep_covers, oracle_check, unlabeled_rooted_trees, OracleConfig,
};
use sweepcover::{
    all_sweep_covers, brute_force_covers, find_sweep_covers, parse_tree, validate, NodeId, Tree,
};

fn tree_from(parents: &[u32], seed: u64) -> Tree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<NodeId> = (0..=parents.len())
        .map(|i| NodeId::new(format!("t{i}")).unwrap())
        .collect();
    labels.shuffle(&mut rng);
    if parents.is_empty() {
        return Tree::single(labels[0].clone());
    }
    let edges = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| (labels[p as usize % (i + 1)].clone(), labels[i + 1].clone()));
    Tree::from_edges(edges, &[]).unwrap()
}

#[test]
fn oracle_corpus_up_to_six_nodes() {
    let summary = oracle_check(&OracleConfig::new(6, 6)).unwrap();
    assert!(summary.all_match(), "{:?}", summary.mismatches.first());
    // 37 classes on 1..=6 nodes plus the random corpus
    assert_eq!(summary.trees, 37 + 100);
}

#[test]
fn eight_node_classes() {
    for tree in unlabeled_rooted_trees(8)
        .into_iter()
        .filter(|t| t.len() == 8)
    {
        for n in 1..=max_cover_size(&tree) + 1 {
            assert_eq!(
                find_sweep_covers(&tree, n).unwrap(),
                brute_force_covers(&tree, n).unwrap(),
                "n={n}\n{}",
                tree.to_edge_list()
            );
        }
    }
}

#[test]
fn covers_partition_by_size() {
    let tree = parse_tree("r a\nr b\nr c\na d\na e\nb f\nf g\nf h\nh i\nh j").unwrap();
    let all = all_sweep_covers(&tree);
    let sizes: BTreeSet<usize> = all.keys().copied().collect();
    assert_eq!(sizes, (1..=max_cover_size(&tree)).collect());
    let counts = count_sweep_covers(&tree, max_cover_size(&tree));
    for (n, covers) in &all {
        assert_eq!(counts[n - 1], covers.len());
        for c in covers {
            assert_eq!(c.size(), *n);
            assert!(validate(&tree, c).unwrap().valid, "{c}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumerator_matches_oracle(parents in prop::collection::vec(any::<u32>(), 0..9), seed: u64) {
        let tree = tree_from(&parents, seed);
        for n in 1..=max_cover_size(&tree) + 1 {
            prop_assert_eq!(find_sweep_covers(&tree, n).unwrap(), brute_force_covers(&tree, n).unwrap());
        }
    }

    #[test]
    fn edge_list_round_trip(parents in prop::collection::vec(any::<u32>(), 0..30), seed: u64) {
        let tree = tree_from(&parents, seed);
        let text = tree.to_edge_list();
        let back = parse_tree(&text).unwrap();
        prop_assert_eq!(&back, &tree);
        prop_assert_eq!(back.to_edge_list(), text);
        prop_assert_eq!(back.canonical_code(), tree.canonical_code());
    }

    #[test]
    fn canonical_code_ignores_labels(parents in prop::collection::vec(any::<u32>(), 0..30), a: u64, b: u64) {
        prop_assert_eq!(tree_from(&parents, a).canonical_code(), tree_from(&parents, b).canonical_code());
    }
}
