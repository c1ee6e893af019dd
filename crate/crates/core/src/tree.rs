//! Rooted directed trees with labeled nodes.
//!
//! A [`Tree`] is immutable once built. Nodes are addressed by their text
//! label; internally every node also has a dense index which the
//! enumeration code uses directly.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors produced while building or querying a tree.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("document contains no nodes")]
    EmptyDocument,
    #[error("line {line}: expected `parent child` or a single node label")]
    MalformedLine { line: usize },
    #[error("invalid node label {0:?}")]
    InvalidLabel(String),
    #[error("edge {parent} -> {child} appears more than once")]
    DuplicateEdge { parent: String, child: String },
    #[error("node {child} has two parents ({first} and {second})")]
    NodeWithTwoParents {
        child: String,
        first: String,
        second: String,
    },
    #[error("document describes a forest with roots {0:?}")]
    MultipleRoots(Vec<String>),
    #[error("edges contain a cycle")]
    CycleDetected,
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("invalid ILD parameters: {0}")]
    InvalidIldSpec(String),
}

/// A node label. Non-empty, and free of whitespace and `#`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct NodeId(String);

impl NodeId {
    pub fn new(label: impl Into<String>) -> Result<Self, TreeError> {
        let label = label.into();
        if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(TreeError::InvalidLabel(label));
        }
        Ok(NodeId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for NodeId {
    type Error = TreeError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        NodeId::new(value)
    }
}

impl From<NodeId> for String {
    fn from(id: NodeId) -> String {
        id.0
    }
}

impl Deref for NodeId {
    type Target = str;

    fn deref(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for NodeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite rooted tree.
#[derive(Debug, Clone)]
pub struct Tree {
    labels: Vec<NodeId>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    index: HashMap<NodeId, usize>,
    root: usize,
}

impl PartialEq for Tree {
    /// Two trees are equal when they have the same root, node set and edge
    /// set. Child order is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.root_id() == other.root_id()
            && self.node_set() == other.node_set()
            && self.edge_set() == other.edge_set()
    }
}

impl Eq for Tree {}

impl Tree {
    /// A tree consisting of a single node.
    pub fn single(root: NodeId) -> Tree {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Tree {
            labels: vec![root],
            parent: vec![None],
            children: vec![Vec::new()],
            index,
            root: 0,
        }
    }

    /// Builds a tree from `(parent, child)` pairs. Children keep the order
    /// in which their edges appear. `isolated` lists nodes that may appear
    /// without any edge, which is only meaningful for a single-node tree.
    pub fn from_edges<I>(edges: I, isolated: &[NodeId]) -> Result<Tree, TreeError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut labels: Vec<NodeId> = Vec::new();
        let mut index: HashMap<NodeId, usize> = HashMap::new();
        let mut intern = |id: NodeId, labels: &mut Vec<NodeId>| -> usize {
            *index.entry(id.clone()).or_insert_with(|| {
                labels.push(id);
                labels.len() - 1
            })
        };

        let mut parent: Vec<Option<usize>> = Vec::new();
        let mut children: Vec<Vec<usize>> = Vec::new();
        let mut seen_edges: HashSet<(usize, usize)> = HashSet::new();

        for id in isolated {
            intern(id.clone(), &mut labels);
        }
        for (p, c) in edges {
            let pi = intern(p, &mut labels);
            let ci = intern(c, &mut labels);
            parent.resize(labels.len(), None);
            children.resize_with(labels.len(), Vec::new);
            if pi == ci {
                return Err(TreeError::CycleDetected);
            }
            if !seen_edges.insert((pi, ci)) {
                return Err(TreeError::DuplicateEdge {
                    parent: labels[pi].to_string(),
                    child: labels[ci].to_string(),
                });
            }
            if let Some(existing) = parent[ci] {
                return Err(TreeError::NodeWithTwoParents {
                    child: labels[ci].to_string(),
                    first: labels[existing].to_string(),
                    second: labels[pi].to_string(),
                });
            }
            parent[ci] = Some(pi);
            children[pi].push(ci);
        }
        parent.resize(labels.len(), None);
        children.resize_with(labels.len(), Vec::new);

        if labels.is_empty() {
            return Err(TreeError::EmptyDocument);
        }
        let roots: Vec<usize> = (0..labels.len()).filter(|&i| parent[i].is_none()).collect();
        let root = match roots.as_slice() {
            [] => return Err(TreeError::CycleDetected),
            [r] => *r,
            many => {
                let mut names: Vec<String> = many.iter().map(|&i| labels[i].to_string()).collect();
                names.sort();
                return Err(TreeError::MultipleRoots(names));
            }
        };

        // Every node has at most one parent and exactly one node has none, so
        // anything unreachable from the root sits on a cycle.
        let mut reached = 0usize;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            reached += 1;
            stack.extend(children[v].iter().copied());
        }
        if reached != labels.len() {
            return Err(TreeError::CycleDetected);
        }

        Ok(Tree {
            labels,
            parent,
            children,
            index,
            root,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn root_id(&self) -> &NodeId {
        &self.labels[self.root]
    }

    pub fn contains(&self, v: &str) -> bool {
        self.index.contains_key(v)
    }

    /// All node labels, sorted.
    pub fn node_set(&self) -> BTreeSet<NodeId> {
        self.labels.iter().cloned().collect()
    }

    /// All edges as `(parent, child)` labels, sorted.
    pub fn edge_set(&self) -> BTreeSet<(NodeId, NodeId)> {
        self.edges().map(|(p, c)| (p.clone(), c.clone())).collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&NodeId, &NodeId)> + '_ {
        self.children
            .iter()
            .enumerate()
            .flat_map(move |(p, cs)| cs.iter().map(move |&c| (&self.labels[p], &self.labels[c])))
    }

    pub fn parent(&self, v: &str) -> Result<Option<&NodeId>, TreeError> {
        let i = self.ix(v)?;
        Ok(self.parent[i].map(|p| &self.labels[p]))
    }

    pub fn children(&self, v: &str) -> Result<Vec<&NodeId>, TreeError> {
        let i = self.ix(v)?;
        Ok(self.children[i].iter().map(|&c| &self.labels[c]).collect())
    }

    pub fn out_degree(&self, v: &str) -> Result<usize, TreeError> {
        Ok(self.children[self.ix(v)?].len())
    }

    /// Leaf labels, sorted.
    pub fn leaves(&self) -> Vec<&NodeId> {
        let mut out: Vec<&NodeId> = (0..self.len())
            .filter(|&i| self.children[i].is_empty())
            .map(|i| &self.labels[i])
            .collect();
        out.sort();
        out
    }

    /// Number of edges on the path from the root to `v`.
    pub fn depth(&self, v: &str) -> Result<usize, TreeError> {
        let i = self.ix(v)?;
        Ok(self.ancestors_ix(i).count())
    }

    /// The maximal chain starting at `v` in which every node but the last has
    /// exactly one child.
    pub fn linear_path_from(&self, v: &str) -> Result<Vec<&NodeId>, TreeError> {
        let i = self.ix(v)?;
        Ok(self
            .linear_path_ix(i)
            .into_iter()
            .map(|j| &self.labels[j])
            .collect())
    }

    /// Endpoint of [`Tree::linear_path_from`]: the first node at or below `v`
    /// whose out-degree differs from one.
    pub fn lowest_known_descendant(&self, v: &str) -> Result<&NodeId, TreeError> {
        let i = self.ix(v)?;
        Ok(&self.labels[self.lowest_known_descendant_ix(i)])
    }

    /// Proper ancestors and proper descendants of any member of `vs`.
    pub fn relatives<'a, I>(&self, vs: I) -> Result<(BTreeSet<NodeId>, BTreeSet<NodeId>), TreeError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut members = Vec::new();
        for v in vs {
            members.push(self.ix(v)?);
        }
        let (anc, desc) = self.relatives_ix(&members);
        let to_ids = |mask: Vec<bool>| {
            mask.iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| self.labels[i].clone())
                .collect::<BTreeSet<_>>()
        };
        Ok((to_ids(anc), to_ids(desc)))
    }

    /// The subtree hanging from `v`, with `v` as its root.
    pub fn subtree(&self, v: &str) -> Result<Tree, TreeError> {
        let i = self.ix(v)?;
        let mut keep = vec![false; self.len()];
        for j in self.preorder_from(i) {
            keep[j] = true;
        }
        Ok(self.restrict_with_root(&keep, i))
    }

    /// Rooted-tree canonical code: `(` + sorted child codes + `)`.
    /// Equal codes mean isomorphic as unlabeled rooted trees.
    pub fn canonical_code(&self) -> String {
        let mut codes: Vec<String> = vec![String::new(); self.len()];
        for &v in self.preorder_from(self.root).iter().rev() {
            let mut kids: Vec<&str> = self.children[v]
                .iter()
                .map(|&c| codes[c].as_str())
                .collect();
            kids.sort_unstable();
            let mut code = String::with_capacity(2 + kids.iter().map(|k| k.len()).sum::<usize>());
            code.push('(');
            for k in kids {
                code.push_str(k);
            }
            code.push(')');
            codes[v] = code;
        }
        std::mem::take(&mut codes[self.root])
    }

    /// Edge-list document: one `parent child` line per edge in preorder with
    /// children sorted by label. A single-node tree serializes to its root label.
    pub fn to_edge_list(&self) -> String {
        if self.len() == 1 {
            return format!("{}\n", self.labels[self.root]);
        }
        let mut out = String::new();
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            let mut kids = self.children[v].clone();
            kids.sort_by(|a, b| self.labels[*a].cmp(&self.labels[*b]));
            for &c in &kids {
                out.push_str(&self.labels[v]);
                out.push(' ');
                out.push_str(&self.labels[c]);
                out.push('\n');
            }
            stack.extend(kids.into_iter().rev());
        }
        out
    }

    // ---- index-level helpers shared with the cover and enumeration code ----

    pub(crate) fn ix(&self, v: &str) -> Result<usize, TreeError> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| TreeError::UnknownNode(v.to_string()))
    }

    pub(crate) fn root_ix(&self) -> usize {
        self.root
    }

    pub(crate) fn label(&self, i: usize) -> &NodeId {
        &self.labels[i]
    }

    pub(crate) fn parent_ix(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub(crate) fn children_ix(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub(crate) fn ancestors_ix(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(self.parent[i], move |&p| self.parent[p])
    }

    pub(crate) fn linear_path_ix(&self, i: usize) -> Vec<usize> {
        let mut path = vec![i];
        let mut v = i;
        while let [only] = self.children[v].as_slice() {
            v = *only;
            path.push(v);
        }
        path
    }

    pub(crate) fn lowest_known_descendant_ix(&self, i: usize) -> usize {
        let mut v = i;
        while let [only] = self.children[v].as_slice() {
            v = *only;
        }
        v
    }

    pub(crate) fn preorder_from(&self, i: usize) -> Vec<usize> {
        let mut order = Vec::new();
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().rev().copied());
        }
        order
    }

    /// Masks of proper ancestors and proper descendants of `members`.
    pub(crate) fn relatives_ix(&self, members: &[usize]) -> (Vec<bool>, Vec<bool>) {
        let mut anc = vec![false; self.len()];
        let mut desc = vec![false; self.len()];
        for &m in members {
            for a in self.ancestors_ix(m) {
                if anc[a] {
                    break;
                }
                anc[a] = true;
            }
            let mut stack: Vec<usize> = self.children[m].clone();
            while let Some(d) = stack.pop() {
                if desc[d] {
                    continue;
                }
                desc[d] = true;
                stack.extend(self.children[d].iter().copied());
            }
        }
        (anc, desc)
    }

    /// The tree induced by the nodes in `keep`, which must contain the root
    /// and be closed under taking parents.
    pub(crate) fn restrict(&self, keep: &[bool]) -> Tree {
        self.restrict_with_root(keep, self.root)
    }

    fn restrict_with_root(&self, keep: &[bool], root: usize) -> Tree {
        debug_assert!(keep[root]);
        let mut map = vec![usize::MAX; self.len()];
        let mut labels = Vec::new();
        for v in self.preorder_from(root) {
            if keep[v] {
                map[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let mut parent = vec![None; labels.len()];
        let mut children = vec![Vec::new(); labels.len()];
        for v in self.preorder_from(root) {
            if !keep[v] || v == root {
                continue;
            }
            let p = self.parent[v].expect("non-root node has a parent");
            debug_assert!(keep[p], "kept node set must be closed under parents");
            parent[map[v]] = Some(map[p]);
        }
        for v in self.preorder_from(root) {
            if keep[v] {
                children[map[v]] = self.children[v]
                    .iter()
                    .filter(|&&c| keep[c])
                    .map(|&c| map[c])
                    .collect();
            }
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Tree {
            labels,
            parent,
            children,
            index,
            root: 0,
        }
    }
}

/// Parses an edge-list document.
///
/// Each non-blank line holds `parent child`; `#` starts a comment. A line
/// with a single label declares a node, which is how a one-node tree is
/// written.
pub fn parse_tree(text: &str) -> Result<Tree, TreeError> {
    let mut edges = Vec::new();
    let mut isolated = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [single] => isolated.push(NodeId::new(*single)?),
            [p, c] => edges.push((NodeId::new(*p)?, NodeId::new(*c)?)),
            _ => return Err(TreeError::MalformedLine { line: n + 1 }),
        }
    }
    Tree::from_edges(edges, &isolated)
}

impl std::str::FromStr for Tree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

/// Parameters of a truncated infinite Δ-ary tree with constant path length
/// between stars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IldSpec {
    pub delta: usize,
    pub gamma: usize,
    pub star_levels: usize,
}

impl IldSpec {
    pub fn new(delta: usize, gamma: usize, star_levels: usize) -> Result<Self, TreeError> {
        let spec = IldSpec {
            delta,
            gamma,
            star_levels,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), TreeError> {
        if self.delta < 2 {
            return Err(TreeError::InvalidIldSpec(format!(
                "delta must be at least 2, got {}",
                self.delta
            )));
        }
        if self.star_levels < 1 {
            return Err(TreeError::InvalidIldSpec(
                "star_levels must be at least 1".to_string(),
            ));
        }
        Ok(())
    }
}

/// Materializes `star_levels` generations of the ILD tree.
///
/// The root heads a path of `gamma` edges ending in the first star; every
/// star child heads another such path. Labels record the root path: `s` is
/// the root, a path step appends `.p`, and star child `i` appends `.i`.
pub fn build_ild_truncated(spec: &IldSpec) -> Result<Tree, TreeError> {
    spec.validate()?;
    let root = NodeId::new("s")?;
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut heads = vec![root.clone()];
    for _ in 0..spec.star_levels {
        let mut next = Vec::with_capacity(heads.len() * spec.delta);
        for head in heads {
            let mut star = head;
            for _ in 0..spec.gamma {
                let step = NodeId(format!("{star}.p"));
                edges.push((star, step.clone()));
                star = step;
            }
            for i in 0..spec.delta {
                let child = NodeId(format!("{star}.{i}"));
                edges.push((star.clone(), child.clone()));
                next.push(child);
            }
        }
        heads = next;
    }
    Tree::from_edges(edges, &[root])
}
