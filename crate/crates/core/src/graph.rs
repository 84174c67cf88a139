//! Labeled simple undirected graphs on dense 0-based vertex labels.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph. Edges are stored normalized (`u < v`) and
/// sorted, so two graphs with the same labeled edge set compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted_edges(n, set.into_iter().collect()))
    }

    /// Builds a graph from edges already known to be valid, normalized and sorted.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            debug_assert!(u < v && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_sorted_edges(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize {
                family: "C".into(),
                size: n,
            });
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_sorted_edges(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_sorted_edges(n, edges)
    }

    /// Spider: a center with legs of the given lengths (in edges).
    pub fn spider(legs: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::new(next, edges).expect("spider edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn adjacency_lists(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if self.edges.len() + 1 != self.n {
            return Err(Error::NotATree(format!(
                "{} vertices but {} edges",
                self.n,
                self.edges.len()
            )));
        }
        if !self.is_connected() {
            return Err(Error::NotATree("disconnected".into()));
        }
        Ok(())
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced on `vertices`, relabeled to `0..vertices.len()` in the
    /// order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u].min(index[v]), index[u].max(index[v])));
            }
        }
        edges.sort_unstable();
        Graph::from_sorted_edges(vertices.len(), edges)
    }

    /// Subgraph formed by the given edge indices, restricted to the vertices
    /// they touch. Returns the relabeled graph and its support in host labels.
    pub fn edge_subgraph(&self, edge_indices: &[usize]) -> (Graph, Vec<usize>) {
        let mut support: Vec<usize> = edge_indices
            .iter()
            .flat_map(|&i| [self.edges[i].0, self.edges[i].1])
            .collect();
        support.sort_unstable();
        support.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in support.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<(usize, usize)> = edge_indices
            .iter()
            .map(|&i| {
                let (u, v) = self.edges[i];
                (index[u], index[v])
            })
            .collect();
        edges.sort_unstable();
        (Graph::from_sorted_edges(support.len(), edges), support)
    }

    /// Removes vertex `v`; vertices above it shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Applies `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && self
                .edges
                .iter()
                .all(|&(u, v)| self.has_edge(perm[u], perm[v]))
    }
}

/// Disjoint union: the vertices of `b` follow those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.n;
    let edges = a
        .edges
        .iter()
        .copied()
        .chain(b.edges.iter().map(|&(u, v)| (u + off, v + off)))
        .collect();
    Graph::from_sorted_edges(a.n + b.n, edges)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// JSON shape of a graph: `{"n": int, "edges": [[int, int], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn union_sizes_add() {
        let u = disjoint_union(&Graph::cycle(4).unwrap(), &Graph::empty(1));
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.edge_count(), 4);
        assert!(!u.is_connected());
    }

    #[test]
    fn trees_and_bipartiteness() {
        assert!(Graph::path(5).is_tree());
        assert!(Graph::star(4).is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::cycle(4).unwrap().is_tree());
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
    }

    #[test]
    fn spider_shapes() {
        let e6t = Graph::spider(&[2, 2, 2]);
        assert_eq!(e6t.vertex_count(), 7);
        assert_eq!(e6t.degree(0), 3);
        assert!(e6t.is_tree());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }

    #[test]
    fn edge_subgraph_relabels_support() {
        let g = Graph::path(5);
        let (sub, support) = g.edge_subgraph(&[2, 3]);
        assert_eq!(support, vec![2, 3, 4]);
        assert_eq!(sub, Graph::path(3));
    }
}
