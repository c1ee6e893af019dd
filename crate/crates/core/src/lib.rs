//! Exact enumeration and counting of sweep-covers on rooted trees.
//!
//! A sweep-cover is a collection of disjoint sets of sibling nodes such that
//! every node of the tree lies in a set or is an ancestor or descendant of a
//! node in some set, and no two covered nodes are related by ancestry.
//!
//! * [`tree`]: the tree model, edge-list parsing and canonical codes.
//! * [`cover`]: cover validation and the algebra built on it.
//! * [`enumerate`]: generators, the recursive enumerator and its oracle.
//! * [`count`]: exact counts on infinite Δ-ary trees with constant path length.
//!
//! ```
//! use sweepcover::{find_sweep_covers, parse_tree};
//!
//! let tree = parse_tree("r a\nr b\na c\na d").unwrap();
//! let covers = find_sweep_covers(&tree, 2).unwrap();
//! let listed: Vec<String> = covers.iter().map(|c| c.to_string()).collect();
//! assert_eq!(listed, ["[[a],[b]]", "[[b],[c,d]]"]);
//! ```

pub mod count;
pub mod cover;
pub mod discrepancy;
pub mod enumerate;
pub mod tree;

pub use count::{p_count, p_table, CountError, PCounter, PTable};
pub use cover::{validate, CoverError, CoverReport, SweepCover};
pub use discrepancy::{discrepancy_report, DiscrepancyRow};
pub use enumerate::{all_sweep_covers, brute_force_covers, find_sweep_covers, EnumerateError};
pub use tree::{build_ild_truncated, parse_tree, IldSpec, NodeId, Tree, TreeError};
