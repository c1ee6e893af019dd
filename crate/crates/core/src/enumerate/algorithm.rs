//! Recursive enumeration of every sweep-cover of a given size.
//!
//! Let `C` be the children of the lowest known descendant of the root.
//!
//! * Size 1: each node on the linear path from the root down to that
//!   descendant is a singleton cover, and `C` itself is one more cover when
//!   it is non-empty.
//! * Size `n > 1`: partition `C` into at most `min(n, |C|)` blocks and split
//!   the blocks into singletons `L` and larger blocks `R`. With no
//!   singletons the partition is a cover exactly when `|R| = n`. Otherwise
//!   every composition of `n - |R|` into `|L|` parts assigns a size to each
//!   singleton's subtree, and the covers of those subtrees are combined with
//!   `R` by Cartesian product. Compositions with a part that the
//!   corresponding subtree cannot realize are skipped before any product
//!   is built.
//!
//! Results for `(subtree root, size)` are memoized for the duration of one
//! call.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use super::combinatorics::{set_partitions, PartitionSplit};
use super::EnumerateError;
use crate::cover::{max_cover_size, SweepCover};
use crate::tree::Tree;

/// A cover over node indices: sorted sets, sorted by first element.
type IxCover = Vec<Vec<usize>>;

struct Finder<'t> {
    tree: &'t Tree,
    memo: HashMap<(usize, usize), Rc<Vec<IxCover>>>,
}

impl<'t> Finder<'t> {
    fn new(tree: &'t Tree) -> Self {
        Finder {
            tree,
            memo: HashMap::new(),
        }
    }

    fn covers(&mut self, root: usize, n: usize) -> Rc<Vec<IxCover>> {
        if let Some(hit) = self.memo.get(&(root, n)) {
            return Rc::clone(hit);
        }
        let tree = self.tree;
        let lkd = tree.lowest_known_descendant_ix(root);
        let mut c: Vec<usize> = tree.children_ix(lkd).to_vec();
        c.sort_by(|a, b| tree.label(*a).cmp(tree.label(*b)));

        let mut found: BTreeSet<IxCover> = BTreeSet::new();
        if n == 1 {
            for v in tree.linear_path_ix(root) {
                found.insert(vec![vec![v]]);
            }
            if !c.is_empty() {
                let mut block = c.clone();
                block.sort_unstable();
                found.insert(vec![block]);
            }
        } else {
            for partition in set_partitions(&c, n.min(c.len())) {
                let PartitionSplit { singletons, rest } = PartitionSplit::new(partition);
                if singletons.is_empty() {
                    if rest.len() == n {
                        found.insert(normalize(rest));
                    }
                    continue;
                }
                if rest.len() >= n {
                    continue;
                }
                let remaining = n - rest.len();
                if remaining < singletons.len() {
                    continue;
                }
                let options: Vec<Vec<usize>> = singletons
                    .iter()
                    .map(|&node| self.feasible_sizes(node, remaining - (singletons.len() - 1)))
                    .collect();
                let mut sizes = Vec::with_capacity(singletons.len());
                let mut assignments = Vec::new();
                assign_sizes(&options, remaining, &mut sizes, &mut assignments);
                for sizes in assignments {
                    let mut partial: Vec<IxCover> = vec![rest.clone()];
                    for (&node, &size) in singletons.iter().zip(&sizes) {
                        let sub = self.covers(node, size);
                        let mut next = Vec::with_capacity(partial.len() * sub.len());
                        for base in &partial {
                            for s in sub.iter() {
                                let mut merged = base.clone();
                                merged.extend(s.iter().cloned());
                                next.push(merged);
                            }
                        }
                        partial = next;
                    }
                    for s in partial {
                        found.insert(normalize(s));
                    }
                }
            }
        }

        let out = Rc::new(found.into_iter().collect::<Vec<_>>());
        self.memo.insert((root, n), Rc::clone(&out));
        out
    }

    /// Sizes in `1..=max` for which the subtree at `node` has a cover.
    fn feasible_sizes(&mut self, node: usize, max: usize) -> Vec<usize> {
        (1..=max)
            .filter(|&k| !self.covers(node, k).is_empty())
            .collect()
    }

    fn labeled(&self, covers: &[IxCover]) -> BTreeSet<SweepCover> {
        covers
            .iter()
            .map(|cover| to_sweep_cover(self.tree, cover))
            .collect()
    }
}

/// Every way to pick one size from each option list so the sizes sum to
/// `total`, in lexicographic order.
fn assign_sizes(
    options: &[Vec<usize>],
    total: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let Some((first, rest)) = options.split_first() else {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    };
    let rest_min: usize = rest
        .iter()
        .map(|o| o.first().copied().unwrap_or(usize::MAX))
        .fold(0, usize::saturating_add);
    let rest_max: usize = rest.iter().map(|o| o.last().copied().unwrap_or(0)).sum();
    for &k in first {
        if k.saturating_add(rest_min) > total {
            break;
        }
        if k + rest_max < total {
            continue;
        }
        prefix.push(k);
        assign_sizes(rest, total - k, prefix, out);
        prefix.pop();
    }
}

fn normalize(mut cover: IxCover) -> IxCover {
    for set in &mut cover {
        set.sort_unstable();
    }
    cover.sort();
    cover
}

pub(crate) fn to_sweep_cover(tree: &Tree, cover: &[Vec<usize>]) -> SweepCover {
    let mut sets: Vec<Vec<_>> = cover
        .iter()
        .map(|set| {
            let mut ids: Vec<_> = set.iter().map(|&v| tree.label(v).clone()).collect();
            ids.sort();
            ids
        })
        .collect();
    sets.sort();
    SweepCover::from_canonical(sets)
}

/// Every sweep-cover of `tree` with exactly `n` sets. Empty when none exist.
pub fn find_sweep_covers(tree: &Tree, n: usize) -> Result<BTreeSet<SweepCover>, EnumerateError> {
    if n < 1 {
        return Err(EnumerateError::InvalidN(n));
    }
    let mut finder = Finder::new(tree);
    let covers = finder.covers(tree.root_ix(), n);
    Ok(finder.labeled(&covers))
}

/// [`find_sweep_covers`] for every size from 1 to the leaf count.
pub fn all_sweep_covers(tree: &Tree) -> BTreeMap<usize, BTreeSet<SweepCover>> {
    let mut finder = Finder::new(tree);
    (1..=max_cover_size(tree))
        .map(|n| {
            let covers = finder.covers(tree.root_ix(), n);
            (n, finder.labeled(&covers))
        })
        .collect()
}

/// Number of covers of each size from 1 to `n_max`, without building labeled
/// covers.
pub fn count_sweep_covers(tree: &Tree, n_max: usize) -> Vec<usize> {
    let mut finder = Finder::new(tree);
    (1..=n_max)
        .map(|n| finder.covers(tree.root_ix(), n).len())
        .collect()
}
