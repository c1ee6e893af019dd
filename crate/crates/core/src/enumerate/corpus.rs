//! Small-tree corpora for exhaustive cross-checks.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::tree::{NodeId, Tree};

fn tree_from_parents(parents: &[usize], labels: &[NodeId]) -> Tree {
    if parents.is_empty() {
        return Tree::single(labels[0].clone());
    }
    let edges = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| (labels[p].clone(), labels[i + 1].clone()));
    Tree::from_edges(edges, &[]).expect("parent arrays always describe a tree")
}

fn plain_labels(n: usize) -> Vec<NodeId> {
    (0..n)
        .map(|i| NodeId::new(format!("v{i}")).expect("valid label"))
        .collect()
}

/// Odometer over parent arrays where node `i + 1` has a parent in `0..=i`.
fn next_parent_array(parents: &mut [usize]) -> bool {
    for i in (0..parents.len()).rev() {
        if parents[i] < i {
            parents[i] += 1;
            parents[i + 1..].iter_mut().for_each(|x| *x = 0);
            return true;
        }
    }
    false
}

/// One rooted tree per isomorphism class, for every size from 1 to
/// `max_nodes`, ordered by size and then by canonical code.
///
/// Every rooted tree on `m` nodes can be numbered so that each node's parent
/// precedes it, so walking all such parent arrays reaches every class.
pub fn unlabeled_rooted_trees(max_nodes: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    for m in 1..=max_nodes {
        let labels = plain_labels(m);
        let mut classes: BTreeMap<String, Tree> = BTreeMap::new();
        let mut parents = vec![0usize; m.saturating_sub(1)];
        loop {
            let tree = tree_from_parents(&parents, &labels);
            classes.entry(tree.canonical_code()).or_insert(tree);
            if !next_parent_array(&mut parents) {
                break;
            }
        }
        out.extend(classes.into_values());
    }
    out
}

/// A random tree on `nodes` nodes with shuffled random labels and child
/// insertion order.
pub fn random_labeled_tree<R: Rng + ?Sized>(rng: &mut R, nodes: usize) -> Tree {
    assert!(nodes >= 1, "a tree needs at least one node");
    let mut labels: Vec<NodeId> = Vec::with_capacity(nodes);
    let mut used = std::collections::HashSet::new();
    while labels.len() < nodes {
        let len = rng.gen_range(1..=4);
        let label: String = (0..len)
            .map(|_| (b'a' + rng.gen_range(0..26)) as char)
            .collect();
        if used.insert(label.clone()) {
            labels.push(NodeId::new(label).expect("letters are valid labels"));
        }
    }
    let mut edges: Vec<(NodeId, NodeId)> = (1..nodes)
        .map(|i| (labels[rng.gen_range(0..i)].clone(), labels[i].clone()))
        .collect();
    edges.shuffle(rng);
    if edges.is_empty() {
        Tree::single(labels[0].clone())
    } else {
        Tree::from_edges(edges, &[]).expect("random parent arrays describe a tree")
    }
}
