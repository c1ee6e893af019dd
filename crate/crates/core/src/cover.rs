//! Sweep-covers: validation, the child-swap transform, induced sub-graphs and
//! embedding trees.
//!
//! A sweep-cover of a tree is a collection of sets of nodes such that
//!
//! 1. the sets are pairwise disjoint,
//! 2. every set holds siblings only,
//! 3. every node is covered, i.e. is in some set or is an ancestor or
//!    descendant of a node in some set,
//! 4. no covered node is an ancestor or descendant of another.
//!
//! Covers are stored in canonical form: each set sorted by label, and the
//! sets sorted lexicographically. Two covers are equal iff their canonical
//! forms are equal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{NodeId, Tree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("cover contains an empty set")]
    EmptySet,
    #[error("operation requires a valid sweep-cover: {0}")]
    InvalidCover(CoverReport),
    #[error("{{{0}}} is not a singleton member of the cover")]
    NotASingletonMember(String),
    #[error("blocks do not partition the children of {0}")]
    NotAPartitionOfChildren(String),
    #[error("node {0} has no children")]
    LeafNode(String),
    #[error("bad selection: {0}")]
    BadSelection(String),
    #[error("malformed cover document: {0}")]
    Format(String),
}

/// A collection of non-empty node sets, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SweepCover {
    sets: Vec<Vec<NodeId>>,
}

impl SweepCover {
    /// Normalizes `sets` into canonical order. Repeated labels inside one set
    /// collapse; overlap between different sets is kept so that
    /// [`validate`] can report it.
    pub fn new<I, S>(sets: I) -> Result<Self, CoverError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = NodeId>,
    {
        let mut out = Vec::new();
        for set in sets {
            let set: BTreeSet<NodeId> = set.into_iter().collect();
            if set.is_empty() {
                return Err(CoverError::EmptySet);
            }
            out.push(set.into_iter().collect::<Vec<_>>());
        }
        out.sort();
        Ok(SweepCover { sets: out })
    }

    /// Convenience constructor from string labels.
    pub fn from_labels<I, S, L>(sets: I) -> Result<Self, CoverError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        let mut parsed = Vec::new();
        for set in sets {
            let mut ids = Vec::new();
            for l in set {
                ids.push(NodeId::new(l.as_ref())?);
            }
            parsed.push(ids);
        }
        SweepCover::new(parsed)
    }

    pub(crate) fn from_canonical(sets: Vec<Vec<NodeId>>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] <= w[1]));
        SweepCover { sets }
    }

    /// Number of member sets.
    pub fn size(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<NodeId>] {
        &self.sets
    }

    pub fn nodes(&self) -> impl Iterator<Item = &NodeId> {
        self.sets.iter().flatten()
    }

    /// JSON document: an array of arrays of labels in canonical order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.sets).expect("labels serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CoverError> {
        let raw: Vec<Vec<NodeId>> =
            serde_json::from_str(text).map_err(|e| CoverError::Format(e.to_string()))?;
        SweepCover::new(raw)
    }
}

impl fmt::Display for SweepCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, set) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in set.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                f.write_str(v)?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl Serialize for SweepCover {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.sets.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SweepCover {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<NodeId>>::deserialize(d)?;
        SweepCover::new(raw).map_err(serde::de::Error::custom)
    }
}

/// The four defining conditions of a sweep-cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Disjoint,
    Siblings,
    Coverage,
    NoAncestry,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Disjoint => "disjoint",
            Condition::Siblings => "siblings",
            Condition::Coverage => "coverage",
            Condition::NoAncestry => "no-ancestry",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One failed condition with the nodes that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl CoverReport {
    pub fn conditions(&self) -> Vec<Condition> {
        self.violations.iter().map(|v| v.condition).collect()
    }
}

impl fmt::Display for CoverReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return f.write_str("valid");
        }
        f.write_str("invalid:")?;
        for v in &self.violations {
            write!(f, " {}", v.condition)?;
            if !v.witness.is_empty() {
                let w: Vec<&str> = v.witness.iter().map(|n| n.as_str()).collect();
                write!(f, " ({})", w.join(","))?;
            }
        }
        Ok(())
    }
}

fn member_indices(tree: &Tree, s: &SweepCover) -> Result<Vec<Vec<usize>>, TreeError> {
    s.sets
        .iter()
        .map(|set| set.iter().map(|v| tree.ix(v)).collect())
        .collect()
}

/// Ancestors and descendants of every node in the cover.
pub fn cover_relatives(
    tree: &Tree,
    s: &SweepCover,
) -> Result<(BTreeSet<NodeId>, BTreeSet<NodeId>), CoverError> {
    Ok(tree.relatives(s.nodes().map(|v| v.as_str()))?)
}

/// Checks all four conditions and reports every one that fails.
pub fn validate(tree: &Tree, s: &SweepCover) -> Result<CoverReport, CoverError> {
    let sets = member_indices(tree, s)?;
    let mut violations = Vec::new();

    // 1. disjointness
    let mut owner: Vec<Option<usize>> = vec![None; tree.len()];
    for (k, set) in sets.iter().enumerate() {
        for &v in set {
            match owner[v] {
                Some(j) if j != k => {
                    violations.push(Violation {
                        condition: Condition::Disjoint,
                        witness: vec![tree.label(v).clone()],
                    });
                    break;
                }
                _ => owner[v] = Some(k),
            }
        }
        if violations
            .iter()
            .any(|v| v.condition == Condition::Disjoint)
        {
            break;
        }
    }

    // 2. siblings
    for set in &sets {
        let first = tree.parent_ix(set[0]);
        let ok = if set.len() == 1 {
            true
        } else {
            first.is_some() && set.iter().all(|&v| tree.parent_ix(v) == first)
        };
        if !ok {
            violations.push(Violation {
                condition: Condition::Siblings,
                witness: set.iter().map(|&v| tree.label(v).clone()).collect(),
            });
            break;
        }
    }

    // 3. coverage
    let members: Vec<usize> = sets.iter().flatten().copied().collect();
    let (anc, desc) = tree.relatives_ix(&members);
    let mut in_cover = vec![false; tree.len()];
    for &m in &members {
        in_cover[m] = true;
    }
    let mut uncovered: Vec<&NodeId> = (0..tree.len())
        .filter(|&v| !(in_cover[v] || anc[v] || desc[v]))
        .map(|v| tree.label(v))
        .collect();
    if !uncovered.is_empty() {
        uncovered.sort();
        violations.push(Violation {
            condition: Condition::Coverage,
            witness: vec![uncovered[0].clone()],
        });
    }

    // 4. no ancestor/descendant pairs among covered nodes
    let mut distinct = members.clone();
    distinct.sort_unstable();
    distinct.dedup();
    'outer: for &u in &distinct {
        for a in tree.ancestors_ix(u) {
            if in_cover[a] {
                violations.push(Violation {
                    condition: Condition::NoAncestry,
                    witness: vec![tree.label(a).clone(), tree.label(u).clone()],
                });
                break 'outer;
            }
        }
    }

    violations.sort_by_key(|v| v.condition);
    Ok(CoverReport {
        valid: violations.is_empty(),
        violations,
    })
}

fn require_valid(tree: &Tree, s: &SweepCover) -> Result<(), CoverError> {
    let report = validate(tree, s)?;
    if report.valid {
        Ok(())
    } else {
        Err(CoverError::InvalidCover(report))
    }
}

/// Replaces the singleton `{v}` with the blocks of `child_partition`, which
/// must partition the children of `v`.
pub fn swap_children<I, B>(
    tree: &Tree,
    s: &SweepCover,
    v: &str,
    child_partition: I,
) -> Result<SweepCover, CoverError>
where
    I: IntoIterator<Item = B>,
    B: IntoIterator<Item = NodeId>,
{
    let vi = tree.ix(v)?;
    let pos = s
        .sets
        .iter()
        .position(|set| set.len() == 1 && set[0].as_str() == v)
        .ok_or_else(|| CoverError::NotASingletonMember(v.to_string()))?;
    if tree.children_ix(vi).is_empty() {
        return Err(CoverError::LeafNode(v.to_string()));
    }

    let blocks: Vec<Vec<NodeId>> = child_partition
        .into_iter()
        .map(|b| b.into_iter().collect())
        .collect();
    let children: BTreeSet<&str> = tree
        .children_ix(vi)
        .iter()
        .map(|&c| tree.label(c).as_str())
        .collect();
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for block in &blocks {
        if block.is_empty() {
            return Err(CoverError::NotAPartitionOfChildren(v.to_string()));
        }
        for c in block {
            if !children.contains(c.as_str()) || !seen.insert(c.as_str()) {
                return Err(CoverError::NotAPartitionOfChildren(v.to_string()));
            }
        }
    }
    if seen != children {
        return Err(CoverError::NotAPartitionOfChildren(v.to_string()));
    }

    let mut sets = s.sets.clone();
    sets.remove(pos);
    sets.extend(blocks);
    SweepCover::new(sets)
}

/// One tree per member set: the set with all its ancestors and descendants,
/// rooted at the original root.
pub fn induced_subgraphs(tree: &Tree, s: &SweepCover) -> Result<Vec<Tree>, CoverError> {
    require_valid(tree, s)?;
    let sets = member_indices(tree, s)?;
    Ok(sets
        .iter()
        .map(|set| {
            let (anc, desc) = tree.relatives_ix(set);
            let mut keep: Vec<bool> = anc.iter().zip(&desc).map(|(a, d)| *a || *d).collect();
            for &v in set {
                keep[v] = true;
            }
            tree.restrict(&keep)
        })
        .collect())
}

/// Union of the root paths to one selected node per member set.
/// `selection` maps set index (canonical order) to the chosen node.
pub fn embedding_tree(
    tree: &Tree,
    s: &SweepCover,
    selection: &BTreeMap<usize, NodeId>,
) -> Result<Tree, CoverError> {
    require_valid(tree, s)?;
    if selection.len() != s.size() {
        return Err(CoverError::BadSelection(format!(
            "expected one node for each of {} sets, got {}",
            s.size(),
            selection.len()
        )));
    }
    let mut keep = vec![false; tree.len()];
    for (&k, v) in selection {
        let set = s
            .sets
            .get(k)
            .ok_or_else(|| CoverError::BadSelection(format!("no set with index {k}")))?;
        if !set.contains(v) {
            return Err(CoverError::BadSelection(format!("{v} is not in set {k}")));
        }
        let vi = tree.ix(v)?;
        keep[vi] = true;
        for a in tree.ancestors_ix(vi) {
            keep[a] = true;
        }
    }
    Ok(tree.restrict(&keep))
}

/// The selection that takes the first node (by label) of every set.
pub fn first_selection(s: &SweepCover) -> BTreeMap<usize, NodeId> {
    s.sets
        .iter()
        .enumerate()
        .map(|(k, set)| (k, set[0].clone()))
        .collect()
}

/// Largest possible cover size, i.e. the number of leaves.
pub fn max_cover_size(tree: &Tree) -> usize {
    tree.leaves().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    fn cover(sets: &[&[&str]]) -> SweepCover {
        SweepCover::from_labels(sets.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn ids(v: &[&str]) -> Vec<NodeId> {
        v.iter().map(|x| NodeId::new(*x).unwrap()).collect()
    }

    fn names(set: &BTreeSet<NodeId>) -> Vec<&str> {
        set.iter().map(|n| n.as_str()).collect()
    }

    #[test]
    fn canonical_order() {
        let a = cover(&[&["b"], &["d", "c"]]);
        let b = cover(&[&["c", "d"], &["b"]]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[[b],[c,d]]");
        assert_eq!(SweepCover::from_json(&a.to_json()).unwrap(), a);
        assert!(matches!(
            SweepCover::from_labels(vec![Vec::<&str>::new()]),
            Err(CoverError::EmptySet)
        ));
    }

    #[test]
    fn cover_relatives_examples() {
        let (a, d) = cover_relatives(&t("r a\nr b"), &cover(&[&["a", "b"]])).unwrap();
        assert_eq!(names(&a), ["r"]);
        assert!(d.is_empty());

        let (a, d) = cover_relatives(&t("a b\nb c"), &cover(&[&["b"]])).unwrap();
        assert_eq!(names(&a), ["a"]);
        assert_eq!(names(&d), ["c"]);

        let tree = t("r a\nr b\na c\na d");
        let (a, d) = cover_relatives(&tree, &cover(&[&["c", "d"], &["b"]])).unwrap();
        assert_eq!(names(&a), ["a", "r"]);
        assert!(d.is_empty());
    }

    #[test]
    fn validate_examples() {
        let star = t("r a\nr b");
        assert!(validate(&star, &cover(&[&["r"]])).unwrap().valid);
        assert!(validate(&star, &cover(&[&["a"], &["b"]])).unwrap().valid);

        let report = validate(&star, &cover(&[&["r"], &["a"]])).unwrap();
        assert!(!report.valid);
        assert_eq!(report.conditions(), [Condition::NoAncestry]);

        let tree = t("r a\nr b\na c");
        let report = validate(&tree, &cover(&[&["a"]])).unwrap();
        assert_eq!(report.conditions(), [Condition::Coverage]);
        assert_eq!(report.violations[0].witness, ids(&["b"]));
    }

    #[test]
    fn validate_reports_every_violation() {
        let tree = t("r a\nr b\na c\nb d");
        // c and d are cousins, a is c's parent, and c appears twice
        let s = cover(&[&["c", "d"], &["a"], &["c"]]);
        let report = validate(&tree, &s).unwrap();
        assert_eq!(
            report.conditions(),
            [
                Condition::Disjoint,
                Condition::Siblings,
                Condition::NoAncestry
            ]
        );
        assert!(!report.valid);
    }

    #[test]
    fn root_cannot_share_a_set() {
        let tree = t("r a");
        let report = validate(&tree, &cover(&[&["r", "a"]])).unwrap();
        assert!(report.conditions().contains(&Condition::Siblings));
    }

    #[test]
    fn validate_unknown_node() {
        let err = validate(&t("r a"), &cover(&[&["zz"]])).unwrap_err();
        assert!(matches!(err, CoverError::Tree(TreeError::UnknownNode(_))));
    }

    #[test]
    fn single_node_tree_accepts_root_cover() {
        assert!(validate(&t("r"), &cover(&[&["r"]])).unwrap().valid);
    }

    #[test]
    fn swap_children_examples() {
        let star = t("r a\nr b");
        let root = cover(&[&["r"]]);
        let out = swap_children(&star, &root, "r", vec![ids(&["a", "b"])]).unwrap();
        assert_eq!(out, cover(&[&["a", "b"]]));
        let out = swap_children(&star, &root, "r", vec![ids(&["a"]), ids(&["b"])]).unwrap();
        assert_eq!(out, cover(&[&["a"], &["b"]]));
        assert!(validate(&star, &out).unwrap().valid);

        let chain = t("a b\nb c");
        let out = swap_children(&chain, &cover(&[&["a"]]), "a", vec![ids(&["b"])]).unwrap();
        assert_eq!(out, cover(&[&["b"]]));
    }

    #[test]
    fn swap_children_errors() {
        let star = t("r a\nr b");
        let split = cover(&[&["a"], &["b"]]);
        assert!(matches!(
            swap_children(&star, &split, "r", vec![ids(&["a", "b"])]),
            Err(CoverError::NotASingletonMember(_))
        ));
        assert!(matches!(
            swap_children(&star, &split, "a", Vec::<Vec<NodeId>>::new()),
            Err(CoverError::LeafNode(_))
        ));
        let root = cover(&[&["r"]]);
        assert!(matches!(
            swap_children(&star, &root, "r", vec![ids(&["a"])]),
            Err(CoverError::NotAPartitionOfChildren(_))
        ));
        assert!(matches!(
            swap_children(&star, &root, "r", vec![ids(&["a", "b"]), ids(&["b"])]),
            Err(CoverError::NotAPartitionOfChildren(_))
        ));
    }

    #[test]
    fn induced_subgraph_examples() {
        let star = t("r a\nr b");
        let parts = induced_subgraphs(&star, &cover(&[&["a"], &["b"]])).unwrap();
        assert_eq!(parts, vec![t("r a"), t("r b")]);

        let whole = induced_subgraphs(&star, &cover(&[&["r"]])).unwrap();
        assert_eq!(whole, vec![star.clone()]);

        assert!(matches!(
            induced_subgraphs(&star, &cover(&[&["a"]])),
            Err(CoverError::InvalidCover(_))
        ));
    }

    #[test]
    fn embedding_tree_example() {
        let tree = t("s v1\ns v3\nv1 v2\nv2 v4\nv2 v5\nv2 v6");
        let s = cover(&[&["v4", "v5", "v6"], &["v3"]]);
        assert!(validate(&tree, &s).unwrap().valid);
        let mut sel = BTreeMap::new();
        // canonical order puts {v3} first
        sel.insert(0, NodeId::new("v3").unwrap());
        sel.insert(1, NodeId::new("v5").unwrap());
        let emb = embedding_tree(&tree, &s, &sel).unwrap();
        assert_eq!(emb, t("s v1\ns v3\nv1 v2\nv2 v5"));
        assert_eq!(emb.leaves().len(), 2);

        let other = embedding_tree(&tree, &s, &first_selection(&s)).unwrap();
        assert_ne!(other, emb);
        assert_eq!(other.canonical_code(), emb.canonical_code());

        let root_only = embedding_tree(
            &tree,
            &cover(&[&["s"]]),
            &first_selection(&cover(&[&["s"]])),
        );
        assert_eq!(root_only.unwrap().len(), 1);

        sel.insert(1, NodeId::new("v1").unwrap());
        assert!(matches!(
            embedding_tree(&tree, &s, &sel),
            Err(CoverError::BadSelection(_))
        ));
    }

    #[test]
    fn embedding_map_is_not_injective() {
        let star = t("r a\nr b\nr c\nr d");
        let s1 = cover(&[&["a", "b"], &["c", "d"]]);
        // swap b and c between the two blocks
        let s2 = cover(&[&["a", "c"], &["b", "d"]]);
        assert!(validate(&star, &s1).unwrap().valid);
        assert!(validate(&star, &s2).unwrap().valid);
        assert_ne!(s1, s2);
        let e1 = embedding_tree(&star, &s1, &first_selection(&s1)).unwrap();
        let e2 = embedding_tree(&star, &s2, &first_selection(&s2)).unwrap();
        assert_eq!(e1.canonical_code(), e2.canonical_code());
    }

    #[test]
    fn max_cover_size_examples() {
        assert_eq!(max_cover_size(&t("r a\nr b")), 2);
        assert_eq!(max_cover_size(&t("a b\nb c\nc d")), 1);
        assert_eq!(max_cover_size(&t("r a\nr b\na c\na d")), 3);
    }
}
