//! Named graphs and cospectral constructions: Smith's graphs, the Saltire
//! pair, cospectral vertices of trees and coalescences.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{count_pattern, generate_free_trees, named_tree, rooted_isomorphism, rooted_tree_code, Budget};
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::graph6::parse_graph6;
use crate::spectral::{characteristic_polynomial, eigenvalues, IntPolynomial, DEFAULT_TOL};

/// Families of connected graphs with spectral radius at most 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SmithFamily {
    P,
    C,
    D,
    E6,
    E7,
    E8,
    DTilde,
    E6Tilde,
    E7Tilde,
    E8Tilde,
}

impl SmithFamily {
    pub const ALL: [SmithFamily; 10] = [
        SmithFamily::P,
        SmithFamily::C,
        SmithFamily::D,
        SmithFamily::E6,
        SmithFamily::E7,
        SmithFamily::E8,
        SmithFamily::DTilde,
        SmithFamily::E6Tilde,
        SmithFamily::E7Tilde,
        SmithFamily::E8Tilde,
    ];

    /// Radius exactly 2 (cycles and the tilde trees) versus strictly below 2.
    pub fn radius_is_two(self) -> bool {
        matches!(
            self,
            SmithFamily::C
                | SmithFamily::DTilde
                | SmithFamily::E6Tilde
                | SmithFamily::E7Tilde
                | SmithFamily::E8Tilde
        )
    }

    /// Vertex count for the fixed-size families.
    pub fn fixed_size(self) -> Option<usize> {
        match self {
            SmithFamily::E6 => Some(6),
            SmithFamily::E7 => Some(7),
            SmithFamily::E8 => Some(8),
            SmithFamily::E6Tilde => Some(7),
            SmithFamily::E7Tilde => Some(8),
            SmithFamily::E8Tilde => Some(9),
            _ => None,
        }
    }

    /// Smallest vertex count accepted by [`smith_graph`].
    pub fn min_size(self) -> usize {
        match self {
            SmithFamily::P => 1,
            SmithFamily::C => 3,
            SmithFamily::D => 4,
            SmithFamily::DTilde => 5,
            other => other.fixed_size().expect("fixed family"),
        }
    }
}

impl fmt::Display for SmithFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SmithFamily::P => "P",
            SmithFamily::C => "C",
            SmithFamily::D => "D",
            SmithFamily::E6 => "E6",
            SmithFamily::E7 => "E7",
            SmithFamily::E8 => "E8",
            SmithFamily::DTilde => "D~",
            SmithFamily::E6Tilde => "E6~",
            SmithFamily::E7Tilde => "E7~",
            SmithFamily::E8Tilde => "E8~",
        };
        f.write_str(s)
    }
}

impl FromStr for SmithFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace("tilde", "~");
        SmithFamily::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Builds a member of a Smith family on `size` vertices (ignored for the
/// fixed-size E families) and checks its spectral radius.
///
/// `D` on `v` vertices is a path on `v - 2` vertices with two pendants at one
/// end; `D~` on `v` vertices is a path on `v - 4` vertices with two pendants
/// at each end (`v = 5` degenerates to `K_{1,4}`). The E families are spiders
/// with legs `(1,2,2)`, `(1,2,3)`, `(1,2,4)` and the tilde ones `(2,2,2)`,
/// `(1,3,3)`, `(1,2,5)`.
pub fn smith_graph(family: SmithFamily, size: usize) -> Result<Graph> {
    let invalid = || Error::InvalidSize {
        family: family.to_string(),
        size,
    };
    if let Some(fixed) = family.fixed_size() {
        if size != 0 && size != fixed {
            return Err(invalid());
        }
    } else if size < family.min_size() {
        return Err(invalid());
    }
    let g = match family {
        SmithFamily::P => Graph::path(size),
        SmithFamily::C => Graph::cycle(size)?,
        SmithFamily::D => {
            let p = size - 2;
            let mut edges: Vec<(usize, usize)> = (1..p).map(|i| (i - 1, i)).collect();
            edges.extend([(p - 1, p), (p - 1, p + 1)]);
            Graph::new(size, edges)?
        }
        SmithFamily::DTilde => {
            let p = size - 4;
            let mut edges: Vec<(usize, usize)> = (1..p).map(|i| (i - 1, i)).collect();
            edges.extend([(0, p), (0, p + 1), (p - 1, p + 2), (p - 1, p + 3)]);
            Graph::new(size, edges)?
        }
        SmithFamily::E6 => Graph::spider(&[1, 2, 2]),
        SmithFamily::E7 => Graph::spider(&[1, 2, 3]),
        SmithFamily::E8 => Graph::spider(&[1, 2, 4]),
        SmithFamily::E6Tilde => Graph::spider(&[2, 2, 2]),
        SmithFamily::E7Tilde => Graph::spider(&[1, 3, 3]),
        SmithFamily::E8Tilde => Graph::spider(&[1, 2, 5]),
    };
    let radius = eigenvalues(&g, DEFAULT_TOL)?.spectral_radius();
    let ok = if family.radius_is_two() {
        (radius - 2.0).abs() <= DEFAULT_TOL
    } else {
        radius < 2.0 - 1e-6
    };
    if !ok {
        return Err(Error::NotSmith { radius });
    }
    Ok(g)
}

/// `(C4 + K1, K_{1,4})`.
pub fn saltire_pair() -> (Graph, Graph) {
    let c4 = Graph::cycle(4).expect("C4");
    (disjoint_union(&c4, &Graph::empty(1)), Graph::star(4))
}

/// Looks up a graph by catalog name. Accepted forms: `K1`, `K2`, `Pn`,
/// `Cn`, `Kn`, `Sn` (star on n vertices), `Dn`, `D~n`, `E6`..`E8`,
/// `E6~`..`E8~`, the small tree names `Q5`, `Q6`, `R6`, `H6`, `J6`,
/// `saltire-union`, `saltire-star`, `schwenk-witness` and `schwenk-r6-witness`.
pub fn lookup(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownName(name.to_string());
    match name {
        "saltire-union" => return Ok(saltire_pair().0),
        "saltire-star" => return Ok(saltire_pair().1),
        "schwenk-witness" => return Ok(schwenk_witness().tree),
        "schwenk-r6-witness" => return Ok(schwenk_r6_witness().tree),
        _ => {}
    }
    if let Some(t) = named_tree(name) {
        return Ok(t);
    }
    if let Ok(family) = name.parse::<SmithFamily>() {
        if family.fixed_size().is_some() {
            return smith_graph(family, 0);
        }
    }
    let (prefix, digits) = name
        .find(|c: char| c.is_ascii_digit())
        .map(|i| name.split_at(i))
        .ok_or_else(unknown)?;
    let size: usize = digits.parse().map_err(|_| unknown())?;
    match prefix {
        "K" => Ok(Graph::complete(size)),
        "S" if size >= 1 => Ok(Graph::star(size - 1)),
        "P" => smith_graph(SmithFamily::P, size),
        "C" => smith_graph(SmithFamily::C, size),
        "D" => smith_graph(SmithFamily::D, size),
        "D~" | "Dtilde" => smith_graph(SmithFamily::DTilde, size),
        _ => Err(unknown()),
    }
}

/// A graph with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if root >= graph.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: graph.vertex_count(),
            });
        }
        Ok(RootedGraph { graph, root })
    }

    pub fn root_degree(&self) -> usize {
        self.graph.degree(self.root)
    }
}

/// Identifies the root of `t` with the root of `f`. Vertices of `f` keep
/// their labels; the other vertices of `t` follow in increasing order.
pub fn coalesce(f: &RootedGraph, t: &RootedGraph) -> Graph {
    let nf = f.graph.vertex_count();
    let mut label = vec![0; t.graph.vertex_count()];
    let mut next = nf;
    for (v, slot) in label.iter_mut().enumerate() {
        if v == t.root {
            *slot = f.root;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let edges = f
        .graph
        .edges()
        .iter()
        .copied()
        .chain(t.graph.edges().iter().map(|&(a, b)| (label[a], label[b])));
    Graph::new(next, edges).expect("coalescence of simple graphs is simple")
}

/// Vertices `u`, `v` of a tree whose vertex-deleted subgraphs are cospectral.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CospectralVertexPair {
    pub tree: Graph,
    pub u: usize,
    pub v: usize,
    /// An automorphism of `tree` maps `u` to `v`.
    pub similar: bool,
}

impl CospectralVertexPair {
    /// Explicit automorphism taking `u` to `v` when the pair is similar.
    pub fn automorphism(&self) -> Option<Vec<usize>> {
        rooted_isomorphism(&self.tree, self.u, &self.tree, self.v).ok().flatten()
    }

    /// The same pair with `u` and `v` exchanged.
    pub fn swapped(&self) -> Self {
        CospectralVertexPair {
            tree: self.tree.clone(),
            u: self.v,
            v: self.u,
            similar: self.similar,
        }
    }
}

/// All pairs `u < v` with `phi(t - u) = phi(t - v)`.
pub fn cospectral_vertex_pairs(t: &Graph) -> Result<Vec<CospectralVertexPair>> {
    t.require_tree()?;
    let n = t.vertex_count();
    let mut groups: BTreeMap<IntPolynomial, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        groups.entry(characteristic_polynomial(&t.remove_vertex(v))).or_default().push(v);
    }
    let codes: Vec<Vec<u8>> = (0..n).map(|v| rooted_tree_code(t, v)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for members in groups.values() {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                out.push(CospectralVertexPair {
                    tree: t.clone(),
                    u,
                    v,
                    similar: codes[u] == codes[v],
                });
            }
        }
    }
    out.sort_by_key(|p| (p.u, p.v));
    Ok(out)
}

/// Non-similar cospectral vertex pairs over every tree on `n` vertices.
pub fn non_similar_pairs(n: usize) -> Result<Vec<CospectralVertexPair>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let trees = generate_free_trees(n - 1);
    let found: Vec<Vec<CospectralVertexPair>> = trees
        .par_iter()
        .map(|t| {
            cospectral_vertex_pairs(t).map(|ps| ps.into_iter().filter(|p| !p.similar).collect())
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// `(F . T_u, F . T_v)`.
pub fn schwenk_pair(f: &RootedGraph, pair: &CospectralVertexPair) -> Result<(Graph, Graph)> {
    if pair.similar {
        return Err(Error::SimilarVertices { u: pair.u, v: pair.v });
    }
    f.graph.require_tree()?;
    let tu = RootedGraph::new(pair.tree.clone(), pair.u)?;
    let tv = RootedGraph::new(pair.tree.clone(), pair.v)?;
    Ok((coalesce(f, &tu), coalesce(f, &tv)))
}

/// `N_{F.T_v}(R6) - N_{F.T_u}(R6)`.
pub fn verify_r6_difference(f: &RootedGraph, pair: &CospectralVertexPair) -> Result<i64> {
    let (fu, fv) = schwenk_pair(f, pair)?;
    let r6 = named_tree("R6").expect("R6 is catalogued");
    let nu = count_pattern(&fu, &r6, Budget::DEFAULT)? as i64;
    let nv = count_pattern(&fv, &r6, Budget::DEFAULT)? as i64;
    Ok(nv - nu)
}

const FIXTURES: &str = include_str!("../data/fixtures.json");

#[derive(Debug, Deserialize)]
struct Fixtures {
    version: u32,
    schwenk_witness: WitnessFixture,
    schwenk_r6_witness: WitnessFixture,
}

#[derive(Debug, Deserialize)]
struct WitnessFixture {
    graph6: String,
    u: usize,
    v: usize,
}

/// Fixture data file version.
pub fn fixtures_version() -> u32 {
    serde_json::from_str::<Fixtures>(FIXTURES).expect("bundled fixtures parse").version
}

fn fixture_pair(w: &WitnessFixture) -> CospectralVertexPair {
    let tree = parse_graph6(&w.graph6).expect("fixture graph6 is valid");
    CospectralVertexPair {
        tree,
        u: w.u,
        v: w.v,
        similar: false,
    }
}

/// The unique non-similar cospectral vertex pair on at most 9 vertices
/// (spider with legs 1, 2, 5). Coalescing at `v` gains one H6 per root edge;
/// R6 counts agree.
pub fn schwenk_witness() -> CospectralVertexPair {
    let fx: Fixtures = serde_json::from_str(FIXTURES).expect("bundled fixtures parse");
    fixture_pair(&fx.schwenk_witness)
}

/// The smallest tree (11 vertices) whose Schwenk pairs agree on every
/// census with at most 4 edges and differ by exactly `deg(root)` copies of R6.
pub fn schwenk_r6_witness() -> CospectralVertexPair {
    let fx: Fixtures = serde_json::from_str(FIXTURES).expect("bundled fixtures parse");
    fixture_pair(&fx.schwenk_r6_witness)
}
