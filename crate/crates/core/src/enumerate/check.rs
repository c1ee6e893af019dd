//! Cross-check of the recursive enumerator against the exhaustive oracle.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::algorithm::find_sweep_covers;
use super::corpus::{random_labeled_tree, unlabeled_rooted_trees};
use super::oracle::brute_force_covers;
use super::EnumerateError;
use crate::cover::SweepCover;
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_nodes: usize,
    pub n_max: usize,
    /// Randomly labeled trees added on top of the isomorphism classes.
    pub random_trees: usize,
    pub seed: u64,
}

impl OracleConfig {
    pub fn new(max_nodes: usize, n_max: usize) -> Self {
        OracleConfig {
            max_nodes,
            n_max,
            random_trees: 100,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Edge-list document of the offending tree.
    pub tree: String,
    pub n: usize,
    pub only_algorithm: Vec<SweepCover>,
    pub only_oracle: Vec<SweepCover>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSummary {
    pub trees: usize,
    pub pairs: usize,
    /// Pairs where both sides returned no cover.
    pub empty_pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleSummary {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The corpus: every isomorphism class up to `max_nodes` nodes plus
/// `random_trees` randomly labeled trees of 1..=max_nodes nodes.
pub fn oracle_corpus(config: &OracleConfig) -> Vec<Tree> {
    let mut trees = unlabeled_rooted_trees(config.max_nodes);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for i in 0..config.random_trees {
        let size = 1 + i % config.max_nodes.max(1);
        trees.push(random_labeled_tree(&mut rng, size));
    }
    trees
}

/// Compares [`find_sweep_covers`] and [`brute_force_covers`] on every tree of
/// the corpus for every size in `1..=n_max`.
pub fn oracle_check(config: &OracleConfig) -> Result<OracleSummary, EnumerateError> {
    if config.max_nodes < 1 || config.n_max < 1 {
        return Err(EnumerateError::InvalidN(config.max_nodes.min(config.n_max)));
    }
    let trees = oracle_corpus(config);
    let mut summary = OracleSummary {
        trees: trees.len(),
        pairs: 0,
        empty_pairs: 0,
        mismatches: Vec::new(),
    };
    for tree in &trees {
        for n in 1..=config.n_max {
            let fast = find_sweep_covers(tree, n)?;
            let slow = brute_force_covers(tree, n)?;
            summary.pairs += 1;
            if fast == slow {
                if fast.is_empty() {
                    summary.empty_pairs += 1;
                }
                continue;
            }
            summary.mismatches.push(Mismatch {
                tree: tree.to_edge_list(),
                n,
                only_algorithm: difference(&fast, &slow),
                only_oracle: difference(&slow, &fast),
            });
        }
    }
    Ok(summary)
}

fn difference(a: &BTreeSet<SweepCover>, b: &BTreeSet<SweepCover>) -> Vec<SweepCover> {
    a.difference(b).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_corpora_match() {
        let mut config = OracleConfig::new(1, 1);
        config.random_trees = 3;
        let s = oracle_check(&config).unwrap();
        assert_eq!(s.trees, 4);
        assert!(s.all_match());

        let s = oracle_check(&OracleConfig::new(3, 3)).unwrap();
        assert!(s.all_match());
        assert!(s.empty_pairs > 0);
    }
}
