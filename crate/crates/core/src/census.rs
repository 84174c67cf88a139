//! Connected-subgraph enumeration, canonical codes for free trees, subtree
//! censuses and free-tree generation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cap on the number of subgraphs any single enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// ESU-style enumeration of connected vertex subsets of size `1..=max_size`
/// in the graph given by `adj`. Each connected subset is visited exactly once
/// (the smallest vertex is the root, and extension only uses exclusive
/// neighbours greater than the root).
pub fn for_each_connected_set<F>(
    adj: &[Vec<usize>],
    max_size: usize,
    budget: Budget,
    mut visit: F,
) -> Result<usize>
where
    F: FnMut(&[usize]),
{
    struct Walker<'a, F> {
        adj: &'a [Vec<usize>],
        max_size: usize,
        cap: usize,
        visited: usize,
        cover: Vec<u32>,
        sub: Vec<usize>,
        visit: F,
    }

    impl<F: FnMut(&[usize])> Walker<'_, F> {
        fn push(&mut self, w: usize) {
            self.sub.push(w);
            self.cover[w] += 1;
            for &u in &self.adj[w] {
                self.cover[u] += 1;
            }
        }

        fn pop(&mut self) {
            let w = self.sub.pop().expect("nonempty");
            self.cover[w] -= 1;
            for &u in &self.adj[w] {
                self.cover[u] -= 1;
            }
        }

        fn extend(&mut self, mut ext: Vec<usize>, root: usize) -> Result<()> {
            self.visited += 1;
            if self.visited > self.cap {
                return Err(Error::BudgetExceeded { cap: self.cap });
            }
            (self.visit)(&self.sub);
            if self.sub.len() == self.max_size {
                return Ok(());
            }
            while let Some(w) = ext.pop() {
                let mut next = ext.clone();
                for &u in &self.adj[w] {
                    if u > root && self.cover[u] == 0 && !next.contains(&u) {
                        next.push(u);
                    }
                }
                self.push(w);
                let r = self.extend(next, root);
                self.pop();
                r?;
            }
            Ok(())
        }
    }

    if max_size == 0 {
        return Ok(0);
    }
    let mut walker = Walker {
        adj,
        max_size,
        cap: budget.0,
        visited: 0,
        cover: vec![0; adj.len()],
        sub: Vec::with_capacity(max_size),
        visit: &mut visit,
    };
    for (v, nbrs) in adj.iter().enumerate() {
        walker.push(v);
        // reversed so that `pop` takes the smallest neighbour first
        let ext: Vec<usize> = nbrs.iter().rev().copied().filter(|&u| u > v).collect();
        let r = walker.extend(ext, v);
        walker.pop();
        r?;
    }
    Ok(walker.visited)
}

/// Edge adjacency (line graph) of `g`, indexed by position in `g.edges()`.
pub fn line_graph_adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut adj = vec![Vec::new(); g.edge_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let mut list: Vec<usize> = incident[u]
            .iter()
            .chain(&incident[v])
            .copied()
            .filter(|&j| j != i)
            .collect();
        list.sort_unstable();
        list.dedup();
        adj[i] = list;
    }
    adj
}

/// Visits every connected edge subset with `1..=max_edges` edges. The slice
/// passed to `visit` holds edge indices in discovery order.
pub fn for_each_connected_edge_subset<F>(
    g: &Graph,
    max_edges: usize,
    budget: Budget,
    visit: F,
) -> Result<usize>
where
    F: FnMut(&[usize]),
{
    for_each_connected_set(&line_graph_adjacency(g), max_edges, budget, visit)
}

/// A connected edge subset of a host graph with its vertex support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubgraph {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl EdgeSubgraph {
    pub fn to_graph(&self, host: &Graph) -> Graph {
        host.edge_subgraph(&self.edges).0
    }
}

pub fn connected_edge_subgraphs(
    g: &Graph,
    max_edges: usize,
    budget: Budget,
) -> Result<Vec<EdgeSubgraph>> {
    if max_edges == 0 {
        return Err(Error::InvalidArgument("max_edges must be at least 1".into()));
    }
    let mut out = Vec::new();
    for_each_connected_edge_subset(g, max_edges, budget, |edges| {
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges
            .iter()
            .flat_map(|&i| [g.edges()[i].0, g.edges()[i].1])
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        out.push(EdgeSubgraph { edges, vertices });
    })?;
    Ok(out)
}

/// Connected induced subgraphs on `1..=max_vertices` vertices, as sorted
/// vertex lists. Single vertices are included.
pub fn connected_induced_subsets(
    g: &Graph,
    max_vertices: usize,
    budget: Budget,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_connected_set(g.adjacency_lists(), max_vertices, budget, |vs| {
        let mut vs = vs.to_vec();
        vs.sort_unstable();
        out.push(vs);
    })?;
    Ok(out)
}

/// AHU encoding of a free tree: `(` children `)` recursively, children
/// sorted, rooted at the centroid (the smaller of the two encodings when
/// there are two centroids).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalTreeCode(Vec<u8>);

impl CanonicalTreeCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of edges of the encoded tree.
    pub fn edge_count(&self) -> usize {
        self.0.len() / 2 - 1
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        if !s.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!("odd-length hex code `{s}`")));
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map_err(|e| Error::InvalidArgument(format!("bad hex code `{s}`: {e}")))?;
        let code = CanonicalTreeCode(bytes);
        code.to_tree()?;
        Ok(code)
    }

    /// Rebuilds a tree with preorder labels (root = 0).
    pub fn to_tree(&self) -> Result<Graph> {
        let bad = || Error::InvalidArgument("malformed tree code".into());
        let mut edges = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0;
        for (i, &b) in self.0.iter().enumerate() {
            match b {
                b'(' => {
                    if let Some(&p) = stack.last() {
                        edges.push((p, next));
                    } else if i != 0 {
                        return Err(bad());
                    }
                    stack.push(next);
                    next += 1;
                }
                b')' => {
                    stack.pop().ok_or_else(bad)?;
                }
                _ => return Err(bad()),
            }
        }
        if !stack.is_empty() || next == 0 {
            return Err(bad());
        }
        Graph::new(next, edges)
    }
}

impl fmt::Display for CanonicalTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("ASCII"))
    }
}

impl fmt::Debug for CanonicalTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalTreeCode({self})")
    }
}

/// Parent array and a preorder (root first) for the tree rooted at `root`.
fn rooted_order(t: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = t.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    (parent, order)
}

/// AHU codes of every rooted subtree of `t` rooted at `root`.
fn subtree_codes(t: &Graph, root: usize) -> Vec<Vec<u8>> {
    let n = t.vertex_count();
    let (parent, order) = rooted_order(t, root);
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[u]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in &kids {
            code.extend_from_slice(k);
        }
        code.push(b')');
        if u != root {
            children[parent[u]].push(code.clone());
        }
        codes[u] = code;
    }
    codes
}

/// Code of `t` rooted at `root`; equal iff there is a root-preserving isomorphism.
pub fn rooted_tree_code(t: &Graph, root: usize) -> Result<Vec<u8>> {
    t.require_tree()?;
    if root >= t.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: t.vertex_count(),
        });
    }
    Ok(subtree_codes(t, root).swap_remove(root))
}

/// The one or two centroids of a tree.
pub fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    let (parent, order) = rooted_order(t, 0);
    let mut size = vec![1usize; n];
    for &u in order.iter().rev().take(n - 1) {
        size[parent[u]] += size[u];
    }
    let mut out = Vec::new();
    for v in 0..n {
        let mut largest = n - size[v];
        for &w in t.neighbors(v) {
            if parent[w] == v {
                largest = largest.max(size[w]);
            }
        }
        if 2 * largest <= n {
            out.push(v);
        }
    }
    out
}

pub fn tree_canonical_code(t: &Graph) -> Result<CanonicalTreeCode> {
    t.require_tree()?;
    let code = centroids(t)
        .into_iter()
        .map(|c| subtree_codes(t, c).swap_remove(c))
        .min()
        .expect("a tree has a centroid");
    Ok(CanonicalTreeCode(code))
}

/// A root-preserving isomorphism from `(a, ra)` to `(b, rb)` as a map
/// `a`-vertex -> `b`-vertex, if one exists.
pub fn rooted_isomorphism(a: &Graph, ra: usize, b: &Graph, rb: usize) -> Result<Option<Vec<usize>>> {
    a.require_tree()?;
    b.require_tree()?;
    if a.vertex_count() != b.vertex_count() {
        return Ok(None);
    }
    let ca = subtree_codes(a, ra);
    let cb = subtree_codes(b, rb);
    if ca[ra] != cb[rb] {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; a.vertex_count()];
    let mut stack = vec![(ra, rb, usize::MAX, usize::MAX)];
    while let Some((x, y, px, py)) = stack.pop() {
        map[x] = y;
        let mut kids_a: Vec<usize> = a.neighbors(x).iter().copied().filter(|&w| w != px).collect();
        let mut kids_b: Vec<usize> = b.neighbors(y).iter().copied().filter(|&w| w != py).collect();
        kids_a.sort_by(|&p, &q| ca[p].cmp(&ca[q]));
        kids_b.sort_by(|&p, &q| cb[p].cmp(&cb[q]));
        for (&p, &q) in kids_a.iter().zip(&kids_b) {
            debug_assert_eq!(ca[p], cb[q]);
            stack.push((p, q, x, y));
        }
    }
    Ok(Some(map))
}

/// Counts of `m`-edge subtrees of a tree, keyed by canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeCensus {
    pub m: usize,
    pub counts: BTreeMap<CanonicalTreeCode, u64>,
}

impl SubtreeCensus {
    pub fn count(&self, code: &CanonicalTreeCode) -> u64 {
        self.counts.get(code).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let counts: serde_json::Map<String, serde_json::Value> = self
            .counts
            .iter()
            .map(|(k, &v)| (k.to_hex(), v.into()))
            .collect();
        serde_json::json!({ "m": self.m, "counts": counts })
    }
}

/// Censuses for every size `1..=max_m` in one enumeration pass; entry `i`
/// holds size `i + 1`.
pub fn subtree_censuses(t: &Graph, max_m: usize, budget: Budget) -> Result<Vec<SubtreeCensus>> {
    t.require_tree()?;
    let max_m = max_m.min(t.edge_count());
    let mut counts: Vec<BTreeMap<CanonicalTreeCode, u64>> = vec![BTreeMap::new(); max_m];
    for_each_connected_edge_subset(t, max_m, budget, |edges| {
        let (sub, _) = t.edge_subgraph(edges);
        let code = tree_canonical_code(&sub).expect("connected edge subset of a tree is a tree");
        *counts[edges.len() - 1].entry(code).or_insert(0) += 1;
    })?;
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, counts)| SubtreeCensus { m: i + 1, counts })
        .collect())
}

pub fn subtree_census(t: &Graph, m: usize, budget: Budget) -> Result<SubtreeCensus> {
    t.require_tree()?;
    if m == 0 || m > t.edge_count() {
        return Err(Error::InvalidArgument(format!(
            "subtree size {m} outside 1..={}",
            t.edge_count()
        )));
    }
    Ok(subtree_censuses(t, m, budget)?.pop().expect("m >= 1"))
}

/// `N_t(pattern)`: number of subtrees of `t` isomorphic to `pattern`.
pub fn count_pattern(t: &Graph, pattern: &Graph, budget: Budget) -> Result<u64> {
    t.require_tree()?;
    let code = tree_canonical_code(pattern)?;
    let m = pattern.edge_count();
    if m == 0 {
        return Ok(t.vertex_count() as u64);
    }
    if m > t.edge_count() {
        return Ok(0);
    }
    Ok(subtree_census(t, m, budget)?.count(&code))
}

/// One representative per isomorphism class of trees with `m` edges, sorted
/// by canonical code. Representatives carry preorder labels from their code.
pub fn generate_free_trees(m: usize) -> Vec<Graph> {
    free_tree_codes(m)
        .into_iter()
        .map(|c| c.to_tree().expect("generated codes are valid"))
        .collect()
}

/// Canonical codes of all trees with `m` edges, grown leaf by leaf.
pub fn free_tree_codes(m: usize) -> Vec<CanonicalTreeCode> {
    let mut level: BTreeSet<CanonicalTreeCode> = BTreeSet::from([CanonicalTreeCode(b"()".to_vec())]);
    for _ in 0..m {
        let mut next = BTreeSet::new();
        for code in &level {
            let t = code.to_tree().expect("valid code");
            let n = t.vertex_count();
            for v in 0..n {
                let grown = Graph::new(n + 1, t.edges().iter().copied().chain([(v, n)]))
                    .expect("adding a leaf keeps the graph simple");
                next.insert(tree_canonical_code(&grown).expect("still a tree"));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Small trees addressed by name: `P2`..`P6`, `S4`..`S6`, `Q5`, `Q6`, `R6`,
/// `H6`, `J6`. `P_n` and `S_n` have `n` vertices.
pub fn named_tree(name: &str) -> Option<Graph> {
    let g = match name {
        "Q5" => Graph::spider(&[1, 1, 2]),
        "Q6" => Graph::spider(&[1, 1, 3]),
        "R6" => Graph::spider(&[1, 2, 2]),
        "H6" => Graph::new(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).expect("valid"),
        "J6" => Graph::spider(&[1, 1, 1, 2]),
        _ => {
            let (kind, size) = name.split_at(1);
            let n: usize = size.parse().ok()?;
            match (kind, n) {
                ("P", 2..=6) => Graph::path(n),
                ("S", 4..=6) => Graph::star(n - 1),
                _ => return None,
            }
        }
    };
    Some(g)
}

/// Names of the small trees in table order, grouped by edge count.
pub const NAMED_TREES: [&[&str]; 5] = [
    &["P2"],
    &["P3"],
    &["P4", "S4"],
    &["P5", "Q5", "S5"],
    &["P6", "Q6", "R6", "H6", "J6", "S6"],
];

/// Name of the tree with this code, if it is one of [`NAMED_TREES`].
pub fn tree_name(code: &CanonicalTreeCode) -> Option<&'static str> {
    let m = code.edge_count();
    if m == 0 || m > NAMED_TREES.len() {
        return None;
    }
    NAMED_TREES[m - 1].iter().copied().find(|name| {
        let t = named_tree(name).expect("catalog name");
        tree_canonical_code(&t).ok().as_ref() == Some(code)
    })
}
