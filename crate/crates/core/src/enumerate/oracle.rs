//! Exhaustive reference enumeration.
//!
//! Candidate blocks are the root singleton and every non-empty subset of
//! every node's children. The search picks blocks one at a time; a block
//! may only use nodes that are not yet covered (in a chosen block, or an
//! ancestor or descendant of one). Each step must cover the first uncovered
//! node in preorder, since no valid cover can leave it out. Every collection
//! of `n` blocks that survives is checked with [`validate`].

use std::collections::BTreeSet;

use super::algorithm::to_sweep_cover;
use super::EnumerateError;
use crate::cover::{validate, SweepCover};
use crate::tree::Tree;

/// Widest child list the oracle will expand into subsets.
pub const MAX_ORACLE_FANOUT: usize = 16;

struct Search<'t> {
    tree: &'t Tree,
    n: usize,
    blocks: Vec<Vec<usize>>,
    preorder: Vec<usize>,
    /// How many chosen blocks cover each node.
    covered: Vec<u32>,
    chosen: Vec<usize>,
    found: BTreeSet<Vec<Vec<usize>>>,
}

impl<'t> Search<'t> {
    fn new(tree: &'t Tree, n: usize) -> Result<Self, EnumerateError> {
        let mut blocks = vec![vec![tree.root_ix()]];
        for v in tree.preorder_from(tree.root_ix()) {
            let kids = tree.children_ix(v);
            if kids.len() > MAX_ORACLE_FANOUT {
                return Err(EnumerateError::TooLarge(format!(
                    "node {} has {} children; the oracle handles at most {}",
                    tree.label(v),
                    kids.len(),
                    MAX_ORACLE_FANOUT
                )));
            }
            for mask in 1u32..(1 << kids.len()) {
                let mut block: Vec<usize> = kids
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &c)| c)
                    .collect();
                block.sort_unstable();
                blocks.push(block);
            }
        }
        Ok(Search {
            tree,
            n,
            blocks,
            preorder: tree.preorder_from(tree.root_ix()),
            covered: vec![0; tree.len()],
            chosen: Vec::new(),
            found: BTreeSet::new(),
        })
    }

    fn region(&self, block: &[usize]) -> Vec<usize> {
        let (anc, desc) = self.tree.relatives_ix(block);
        let mut out: Vec<usize> = (0..self.tree.len())
            .filter(|&v| anc[v] || desc[v])
            .collect();
        out.extend_from_slice(block);
        out
    }

    /// Lower bound on blocks still needed: uncovered nodes whose parent is
    /// covered can only be reached from inside their own subtree, and one
    /// block serves at most one parent's children.
    fn blocks_needed(&self) -> usize {
        let mut parents: Vec<usize> = (0..self.tree.len())
            .filter(|&v| self.covered[v] == 0)
            .filter_map(|v| self.tree.parent_ix(v))
            .filter(|&p| self.covered[p] > 0)
            .collect();
        parents.sort_unstable();
        parents.dedup();
        parents.len()
    }

    fn run(&mut self) {
        let first_open = self
            .preorder
            .iter()
            .copied()
            .find(|&v| self.covered[v] == 0);
        let Some(u) = first_open else {
            if self.chosen.len() == self.n {
                let mut cover: Vec<Vec<usize>> = self
                    .chosen
                    .iter()
                    .map(|&b| self.blocks[b].clone())
                    .collect();
                cover.sort();
                self.found.insert(cover);
            }
            return;
        };
        let remaining = self.n - self.chosen.len();
        if remaining == 0 || self.blocks_needed() > remaining {
            return;
        }
        let (anc, desc) = self.tree.relatives_ix(&[u]);
        for b in 0..self.blocks.len() {
            let block = &self.blocks[b];
            if block.iter().any(|&v| self.covered[v] > 0) {
                continue;
            }
            if !block.iter().any(|&v| v == u || anc[v] || desc[v]) {
                continue;
            }
            let region = self.region(block);
            for &v in &region {
                self.covered[v] += 1;
            }
            self.chosen.push(b);
            self.run();
            self.chosen.pop();
            for &v in &region {
                self.covered[v] -= 1;
            }
        }
    }
}

/// Every sweep-cover of size `n`, by exhaustive search. Exponential; meant
/// for small trees.
pub fn brute_force_covers(tree: &Tree, n: usize) -> Result<BTreeSet<SweepCover>, EnumerateError> {
    if n < 1 {
        return Err(EnumerateError::InvalidN(n));
    }
    let mut search = Search::new(tree, n)?;
    search.run();
    let mut out = BTreeSet::new();
    for cover in &search.found {
        let cover = to_sweep_cover(tree, cover);
        let report = validate(tree, &cover).expect("oracle covers use tree nodes");
        if report.valid {
            out.insert(cover);
        }
    }
    Ok(out)
}
