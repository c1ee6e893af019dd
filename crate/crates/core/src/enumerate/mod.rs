//! Explicit enumeration: combinatorial generators, the recursive sweep-cover
//! enumerator and an exhaustive oracle to check it against.

mod algorithm;
mod check;
mod combinatorics;
mod corpus;
mod oracle;

use thiserror::Error;

pub use algorithm::{all_sweep_covers, count_sweep_covers, find_sweep_covers};
pub use check::{oracle_check, oracle_corpus, Mismatch, OracleConfig, OracleSummary};
pub use combinatorics::{
    compositions, count_nonsingleton_partitions, count_set_partitions, nonsingleton_partitions,
    set_partitions, Composition, Compositions, PartitionSplit, RestrictedGrowth, SetPartitions,
};
pub use corpus::{random_labeled_tree, unlabeled_rooted_trees};
pub use oracle::{brute_force_covers, MAX_ORACLE_FANOUT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("cover size must be at least 1, got {0}")]
    InvalidN(usize),
    #[error("tree too large for exhaustive search: {0}")]
    TooLarge(String),
}
