//! Distinct eigenvalues of `k`-power hypergraphs through the subgraph
//! reduction: `lambda` is an eigenvalue of `G^(k)` iff `lambda^k = beta^2` for
//! an eigenvalue `beta` of a connected subgraph of `G` (an induced connected
//! subgraph when `k = 3`). The set of `beta^2` values, the base set, therefore
//! determines every distinct `k`-ordered eigenvalue for `k >= 3`.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::census::{
    connected_induced_subsets, for_each_connected_edge_subset, subtree_censuses, tree_canonical_code, tree_name,
    Budget,
};
use crate::constructions::SmithFamily;
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::graph6::to_graph6;
use crate::moments::invariant_grid;
use crate::spectral::{characteristic_polynomial, eigenvalues, IntPolynomial};

/// Which subgraphs feed the base set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `k = 3`: connected induced subgraphs, single vertices included.
    #[serde(rename = "k3-induced")]
    K3Induced,
    /// `k > 3`: connected edge subsets.
    #[serde(rename = "kGT3-all")]
    KGt3All,
}

impl Regime {
    pub fn for_order(k: usize) -> Self {
        if k == 3 {
            Regime::K3Induced
        } else {
            Regime::KGt3All
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::K3Induced => "k3-induced",
            Regime::KGt3All => "kGT3-all",
        })
    }
}

/// One `beta^2` value with a subgraph that has `beta` as an eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaseValue {
    pub value: f64,
    /// Witness subgraph, relabeled; serialized as graph6.
    #[serde(with = "graph6_serde")]
    pub witness: Graph,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<String>,
}

mod graph6_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let s = String::deserialize(d)?;
        crate::graph6::parse_graph6(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenBase {
    pub regime: Regime,
    pub tolerance: f64,
    pub values: Vec<BaseValue>,
}

impl EigenBase {
    pub fn values_f64(&self) -> Vec<f64> {
        self.values.iter().map(|b| b.value).collect()
    }

    /// Distance from `x` to the nearest base value.
    pub fn distance_to(&self, x: f64) -> f64 {
        self.values.iter().map(|b| (b.value - x).abs()).fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.distance_to(x) <= self.tolerance
    }

    /// Values of `self` with no counterpart in `other`.
    pub fn missing_from<'a>(&'a self, other: &EigenBase) -> Vec<&'a BaseValue> {
        let tol = self.tolerance.max(other.tolerance);
        self.values.iter().filter(|b| other.distance_to(b.value) > tol).collect()
    }

    pub fn is_subset_of(&self, other: &EigenBase) -> bool {
        self.missing_from(other).is_empty()
    }

    pub fn same_values(&self, other: &EigenBase) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }
}

/// Recognizes paths, cycles and stars and names the value in closed form.
fn closed_form(witness: &Graph, value: f64, tol: f64) -> Option<String> {
    let n = witness.vertex_count();
    if n == 1 {
        return Some("0".into());
    }
    let degrees: Vec<usize> = (0..n).map(|v| witness.degree(v)).collect();
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    let close = |x: f64| (x - value).abs() <= tol.max(1e-12) * 16.0;
    if witness.is_tree() && max_deg <= 2 {
        return (1..=n)
            .find(|&t| close((2.0 * (PI * t as f64 / (n + 1) as f64).cos()).powi(2)))
            .map(|t| match t {
                1 => format!("(2cos(pi/{}))^2", n + 1),
                _ => format!("(2cos({t}pi/{}))^2", n + 1),
            });
    }
    if witness.is_connected() && degrees.iter().all(|&d| d == 2) {
        return (1..=n)
            .find(|&r| close((2.0 * (2.0 * PI * r as f64 / n as f64).cos()).powi(2)))
            .map(|r| format!("(2cos({}pi/{n}))^2", 2 * r));
    }
    if witness.is_tree() && degrees.iter().filter(|&&d| d > 1).count() == 1 {
        let leaves = max_deg;
        if close(leaves as f64) {
            return Some(format!("{leaves}"));
        }
        if close(0.0) {
            return Some("0".into());
        }
    }
    None
}

/// Sorted, deduplicated `beta^2` values of the subgraphs selected by `regime`.
pub fn eigen_base_set(g: &Graph, regime: Regime, tol: f64, budget: Budget) -> Result<EigenBase> {
    let mut subgraphs: Vec<Graph> = Vec::new();
    match regime {
        Regime::KGt3All => {
            for_each_connected_edge_subset(g, g.edge_count(), budget, |edges| {
                subgraphs.push(g.edge_subgraph(edges).0);
            })?;
        }
        Regime::K3Induced => {
            for vs in connected_induced_subsets(g, g.vertex_count(), budget)? {
                subgraphs.push(g.induced_subgraph(&vs));
            }
        }
    }
    let mut spectra: HashMap<Graph, Vec<f64>> = HashMap::new();
    let mut raw: Vec<(f64, usize)> = Vec::new();
    for (i, h) in subgraphs.iter().enumerate() {
        if !spectra.contains_key(h) {
            let s = eigenvalues(h, tol)?;
            spectra.insert(h.clone(), s.eigenvalues);
        }
        raw.extend(spectra[h].iter().map(|&b| (b * b, i)));
    }
    raw.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut values: Vec<BaseValue> = Vec::new();
    let mut cluster_start = f64::NEG_INFINITY;
    for (x, i) in raw {
        let w = &subgraphs[i];
        let fresh = values.is_empty() || x - cluster_start > tol;
        if fresh {
            cluster_start = x;
            values.push(BaseValue {
                value: x,
                witness: w.clone(),
                closed_form: None,
            });
        } else {
            let last = values.last_mut().expect("nonempty");
            if w.vertex_count() < last.witness.vertex_count() {
                last.witness = w.clone();
            }
        }
    }
    for b in &mut values {
        // snap exact zeros so the value prints cleanly
        if b.value < tol * tol {
            b.value = 0.0;
        }
        b.closed_form = closed_form(&b.witness, b.value, tol);
    }
    Ok(EigenBase {
        regime,
        tolerance: tol,
        values,
    })
}

/// `(beta^2)^(1/k) * exp(2 pi i theta / k)`. Zero is stored once with `phase = k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerEigenvalue {
    pub base: f64,
    pub phase: usize,
    pub k: usize,
}

impl PowerEigenvalue {
    pub fn modulus(&self) -> f64 {
        self.base.powf(1.0 / self.k as f64)
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let r = self.modulus();
        let arg = 2.0 * PI * self.phase as f64 / self.k as f64;
        (r * arg.cos(), r * arg.sin())
    }

    pub fn approx_eq(&self, other: &PowerEigenvalue, tol: f64) -> bool {
        if self.k != other.k || (self.base - other.base).abs() > tol {
            return false;
        }
        self.base.max(other.base) <= tol || self.phase % self.k == other.phase % other.k
    }
}

/// Every `(beta^2, theta)` for the given bases, `theta in 1..=k`; near-zero
/// bases collapse to a single eigenvalue 0.
pub fn powers_from_bases(bases: &[f64], k: usize, tol: f64) -> Vec<PowerEigenvalue> {
    let mut sorted = bases.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut dedup: Vec<f64> = Vec::new();
    for x in sorted {
        if dedup.last().is_none_or(|&l| x - l > tol) {
            dedup.push(x);
        }
    }
    let mut out = Vec::new();
    for b in dedup {
        if b.abs() <= tol {
            out.push(PowerEigenvalue { base: 0.0, phase: k, k });
        } else {
            out.extend((1..=k).map(|phase| PowerEigenvalue { base: b, phase, k }));
        }
    }
    out
}

pub fn power_distinct_eigenvalues(g: &Graph, k: usize, tol: f64, budget: Budget) -> Result<Vec<PowerEigenvalue>> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("k must be at least 3, got {k}")));
    }
    let base = eigen_base_set(g, Regime::for_order(k), tol, budget)?;
    Ok(powers_from_bases(&base.values_f64(), k, tol))
}

/// Bases of the hyperpath closed form: `(2cos(pi t/(j+1)))^2`, `j in [n]`, `t in [j]`.
pub fn hyperpath_bases(n: usize) -> Vec<f64> {
    let mut out = Vec::new();
    for j in 1..=n {
        for t in 1..=j {
            out.push((2.0 * (PI * t as f64 / (j + 1) as f64).cos()).powi(2));
        }
    }
    out
}

/// Bases of the hypercycle closed form: the path terms for `j in [n-1]` and
/// `(2cos(2 pi r/n))^2`, `r in [n]`.
pub fn hypercycle_bases(n: usize) -> Vec<f64> {
    let mut out = hyperpath_bases(n.saturating_sub(1));
    for r in 1..=n {
        out.push((2.0 * (2.0 * PI * r as f64 / n as f64).cos()).powi(2));
    }
    out
}

pub fn hyperpath_distinct_eigenvalues(n: usize, k: usize, tol: f64) -> Result<Vec<PowerEigenvalue>> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidArgument(format!("hyperpath needs n >= 2 and k >= 2, got n={n}, k={k}")));
    }
    Ok(powers_from_bases(&hyperpath_bases(n), k, tol))
}

pub fn hypercycle_distinct_eigenvalues(n: usize, k: usize, tol: f64) -> Result<Vec<PowerEigenvalue>> {
    if n < 3 || k <= 3 {
        return Err(Error::InvalidArgument(format!("hypercycle needs n >= 3 and k > 3, got n={n}, k={k}")));
    }
    Ok(powers_from_bases(&hypercycle_bases(n), k, tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosedFormKind {
    Path,
    Cycle,
}

/// Closed-form base values against subgraph enumeration on the same graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormComparison {
    pub kind: ClosedFormKind,
    pub n: usize,
    pub k: usize,
    pub only_in_closed_form: Vec<f64>,
    pub only_in_enumeration: Vec<f64>,
}

impl ClosedFormComparison {
    pub fn agrees(&self) -> bool {
        self.only_in_closed_form.is_empty() && self.only_in_enumeration.is_empty()
    }
}

pub fn compare_closed_form(kind: ClosedFormKind, n: usize, k: usize, tol: f64, budget: Budget) -> Result<ClosedFormComparison> {
    let (formula, graph) = match kind {
        ClosedFormKind::Path => (hyperpath_distinct_eigenvalues(n, k, tol)?, Graph::path(n)),
        ClosedFormKind::Cycle => (hypercycle_distinct_eigenvalues(n, k, tol)?, Graph::cycle(n)?),
    };
    let enumerated = if k >= 3 {
        power_distinct_eigenvalues(&graph, k, tol, budget)?
    } else {
        // k = 2: the ordinary spectrum, one entry per distinct value
        let spec = eigenvalues(&graph, tol)?;
        let bases: Vec<f64> = spec.eigenvalues.iter().map(|b| b * b).collect();
        powers_from_bases(&bases, k, tol)
    };
    let missing = |a: &[PowerEigenvalue], b: &[PowerEigenvalue]| -> Vec<f64> {
        let mut v: Vec<f64> = a
            .iter()
            .filter(|x| !b.iter().any(|y| x.approx_eq(y, tol)))
            .map(|x| x.base)
            .collect();
        v.sort_by(f64::total_cmp);
        v.dedup_by(|x, y| (*x - *y).abs() <= tol);
        v
    };
    Ok(ClosedFormComparison {
        kind,
        n,
        k,
        only_in_closed_form: missing(&formula, &enumerated),
        only_in_enumeration: missing(&enumerated, &formula),
    })
}

/// `N_{P3}(G) + 2 N_{C4}(G)`.
pub fn cr_invariant(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let p3: u64 = (0..n)
        .map(|v| {
            let d = g.degree(v) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum();
    let mut c4_twice = 0u64;
    for u in 0..n {
        for w in u + 1..n {
            let common = g.neighbors(u).iter().filter(|&&x| g.has_edge(w, x)).count() as u64;
            c4_twice += common * common.saturating_sub(1) / 2;
        }
    }
    // every 4-cycle is seen once per diagonal
    p3 + c4_twice
}

/// What first told two graphs apart.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "stage", rename_all = "kebab-case")]
pub enum Witness {
    CharacteristicPolynomial {
        first: String,
        second: String,
    },
    SubtreeCount {
        m: usize,
        code: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        first: u64,
        second: u64,
    },
    InvariantVector {
        m: usize,
        d: usize,
        #[serde(with = "crate::bigint_serde")]
        first: BigInt,
        #[serde(with = "crate::bigint_serde")]
        second: BigInt,
    },
    BaseValue {
        regime: Regime,
        value: f64,
        /// `"first"` or `"second"`: the graph whose base set has the value.
        present_in: String,
        witness_graph6: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        closed_form: Option<String>,
        /// Distance to the nearest base value of the other graph.
        margin: f64,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::CharacteristicPolynomial { first, second } => {
                write!(f, "characteristic polynomials differ: {first} vs {second}")
            }
            Witness::SubtreeCount { m, code, name, first, second } => write!(
                f,
                "{m}-edge subtree {} occurs {first} vs {second} times",
                name.clone().unwrap_or_else(|| code.clone())
            ),
            Witness::InvariantVector { m, d, first, second } => {
                write!(f, "invariant (m={m}, d={d}) is {first} vs {second}")
            }
            Witness::BaseValue { regime, value, present_in, witness_graph6, margin, .. } => write!(
                f,
                "base value {value:.10} ({regime}) only in {present_in} graph, witness {witness_graph6}, margin {margin:.3e}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HighOrderVerdict {
    pub cospectral_k2: bool,
    pub base_sets_equal: bool,
    /// Subtree censuses and weighted census sums; `None` when the inputs
    /// are not both trees.
    pub tree_invariants_equal: Option<bool>,
    pub first_witness: Option<Witness>,
}

impl HighOrderVerdict {
    pub fn distinguished(&self) -> bool {
        self.first_witness.is_some()
    }
}

/// The missing value farthest from the other base set; near ties go to the
/// larger value.
fn base_set_witness(a: &EigenBase, b: &EigenBase) -> Option<Witness> {
    let tol = a.tolerance.max(b.tolerance);
    let mut best: Option<(f64, f64, Witness)> = None;
    for (x, y, side) in [(a, b, "first"), (b, a, "second")] {
        for bv in x.missing_from(y) {
            let margin = y.distance_to(bv.value);
            let better = best.as_ref().is_none_or(|(m, v, _)| {
                margin > m + tol || ((margin - m).abs() <= tol && bv.value > *v)
            });
            if better {
                let w = Witness::BaseValue {
                    regime: x.regime,
                    value: bv.value,
                    present_in: side.to_string(),
                    witness_graph6: to_graph6(&bv.witness),
                    closed_form: bv.closed_form.clone(),
                    margin,
                };
                best = Some((margin, bv.value, w));
            }
        }
    }
    best.map(|(_, _, w)| w)
}

fn base_stage(g1: &Graph, g2: &Graph, tol: f64, budget: Budget) -> Result<Option<Witness>> {
    for regime in [Regime::KGt3All, Regime::K3Induced] {
        let a = eigen_base_set(g1, regime, tol, budget)?;
        let b = eigen_base_set(g2, regime, tol, budget)?;
        if let Some(w) = base_set_witness(&a, &b) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn charpoly_stage(g1: &Graph, g2: &Graph) -> Option<Witness> {
    let (p1, p2) = (characteristic_polynomial(g1), characteristic_polynomial(g2));
    (p1 != p2).then(|| Witness::CharacteristicPolynomial {
        first: p1.to_string(),
        second: p2.to_string(),
    })
}

/// Necessary conditions for two trees to be high-ordered cospectral, run in
/// order: exact cospectrality, subtree censuses up to `min(5, m_max)` edges,
/// weighted census sums on the `(m, d)` grid, and base sets. Passing all of
/// them does not prove high-ordered cospectrality.
pub fn high_order_tree_test(
    t1: &Graph,
    t2: &Graph,
    m_max: usize,
    d_max: usize,
    tol: f64,
    budget: Budget,
) -> Result<HighOrderVerdict> {
    t1.require_tree()?;
    t2.require_tree()?;
    let mut witnesses: Vec<Witness> = Vec::new();

    let cos = charpoly_stage(t1, t2);
    let cospectral_k2 = cos.is_none();
    witnesses.extend(cos);

    let census_m = m_max.min(5);
    let c1 = subtree_censuses(t1, census_m, budget)?;
    let c2 = subtree_censuses(t2, census_m, budget)?;
    let mut census_equal = true;
    for m in 1..=census_m {
        let empty = BTreeMap::new();
        let a = c1.get(m - 1).map_or(&empty, |c| &c.counts);
        let b = c2.get(m - 1).map_or(&empty, |c| &c.counts);
        let mut codes: Vec<_> = a.keys().chain(b.keys()).collect();
        codes.sort();
        codes.dedup();
        if let Some(code) = codes.into_iter().find(|c| a.get(*c) != b.get(*c)) {
            census_equal = false;
            witnesses.push(Witness::SubtreeCount {
                m,
                code: code.to_hex(),
                name: tree_name(code).map(str::to_string),
                first: a.get(code).copied().unwrap_or(0),
                second: b.get(code).copied().unwrap_or(0),
            });
            break;
        }
    }

    let g1 = invariant_grid(t1, m_max, d_max, budget)?;
    let g2 = invariant_grid(t2, m_max, d_max, budget)?;
    let grid_diff = g1.iter().zip(&g2).find(|(a, b)| a.value != b.value);
    let grid_equal = grid_diff.is_none();
    if let Some((a, b)) = grid_diff {
        witnesses.push(Witness::InvariantVector {
            m: a.m,
            d: a.d,
            first: a.value.clone(),
            second: b.value.clone(),
        });
    }

    let base = base_stage(t1, t2, tol, budget)?;
    let base_sets_equal = base.is_none();
    witnesses.extend(base);

    Ok(HighOrderVerdict {
        cospectral_k2,
        base_sets_equal,
        tree_invariants_equal: Some(census_equal && grid_equal),
        first_witness: witnesses.into_iter().next(),
    })
}

/// Cospectrality and base sets for arbitrary graphs.
pub fn high_order_graph_test(g1: &Graph, g2: &Graph, tol: f64, budget: Budget) -> Result<HighOrderVerdict> {
    let cos = charpoly_stage(g1, g2);
    let base = base_stage(g1, g2, tol, budget)?;
    Ok(HighOrderVerdict {
        cospectral_k2: cos.is_none(),
        base_sets_equal: base.is_none(),
        tree_invariants_equal: None,
        first_witness: cos.or(base),
    })
}

/// Isomorphism key for graphs whose components are all trees or cycles.
fn tree_cycle_key(g: &Graph) -> Option<Vec<String>> {
    let mut key = Vec::new();
    for comp in g.components() {
        let h = g.induced_subgraph(&comp);
        if h.is_tree() {
            key.push(format!("T{}", tree_canonical_code(&h).ok()?));
        } else if (0..h.vertex_count()).all(|v| h.degree(v) == 2) {
            key.push(format!("C{}", h.vertex_count()));
        } else {
            return None;
        }
    }
    key.sort();
    Some(key)
}

struct Component {
    graph: Graph,
    poly: IntPolynomial,
}

fn smith_components(max_vertices: usize) -> Result<Vec<Component>> {
    let mut out = Vec::new();
    for family in SmithFamily::ALL {
        let sizes: Vec<usize> = match family.fixed_size() {
            Some(s) => vec![s],
            None => (family.min_size()..=max_vertices).collect(),
        };
        for size in sizes.into_iter().filter(|&s| s <= max_vertices) {
            let graph = crate::constructions::smith_graph(family, size)?;
            let poly = characteristic_polynomial(&graph);
            out.push(Component { graph, poly });
        }
    }
    Ok(out)
}

/// Every graph cospectral with but not isomorphic to `target`, searched over
/// all disjoint unions of Smith components with the same vertex and edge
/// counts. Sorted by graph6.
pub fn smith_mate_search(target: &Graph, tol: f64) -> Result<Vec<Graph>> {
    let radius = eigenvalues(target, tol)?.spectral_radius();
    if radius > 2.0 + tol {
        return Err(Error::NotSmith { radius });
    }
    let n = target.vertex_count();
    let e = target.edge_count();
    let poly = characteristic_polynomial(target);
    let target_key = tree_cycle_key(target);
    let comps = smith_components(n)?;

    fn search(
        comps: &[Component],
        start: usize,
        verts: usize,
        edges: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if verts == 0 {
            if edges == 0 {
                visit(chosen);
            }
            return;
        }
        for i in start..comps.len() {
            let (cv, ce) = (comps[i].graph.vertex_count(), comps[i].graph.edge_count());
            if cv <= verts && ce <= edges {
                chosen.push(i);
                search(comps, i, verts - cv, edges - ce, chosen, visit);
                chosen.pop();
            }
        }
    }

    let mut mates: Vec<Graph> = Vec::new();
    search(&comps, 0, n, e, &mut Vec::new(), &mut |chosen| {
        let p = chosen.iter().fold(IntPolynomial::one(), |acc, &i| acc.mul(&comps[i].poly));
        if p != poly {
            return;
        }
        let g = chosen
            .iter()
            .fold(Graph::empty(0), |acc, &i| disjoint_union(&acc, &comps[i].graph));
        if tree_cycle_key(&g) != target_key {
            mates.push(g);
        }
    });
    mates.sort_by_key(to_graph6);
    Ok(mates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{saltire_pair, smith_graph};
    use crate::spectral::DEFAULT_TOL;

    fn base(g: &Graph, regime: Regime) -> Vec<f64> {
        eigen_base_set(g, regime, DEFAULT_TOL, Budget::DEFAULT).unwrap().values_f64()
    }

    fn assert_values(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (a, b) in got.iter().zip(want) {
            assert!((a - b).abs() < 1e-9, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn base_set_examples() {
        assert_values(&base(&Graph::path(2), Regime::KGt3All), &[1.0]);
        assert_values(&base(&Graph::star(4), Regime::KGt3All), &[0.0, 1.0, 2.0, 3.0, 4.0]);
        let s5 = 5f64.sqrt();
        let (union, _) = saltire_pair();
        assert_values(
            &base(&union, Regime::KGt3All),
            &[0.0, (3.0 - s5) / 2.0, 1.0, 2.0, (3.0 + s5) / 2.0, 4.0],
        );
        // induced regime adds single vertices, hence 0 for a single edge
        assert_values(&base(&Graph::path(2), Regime::K3Induced), &[0.0, 1.0]);
        assert_values(&base(&Graph::path(3), Regime::K3Induced), &[0.0, 1.0, 2.0]);
    }

    #[test]
    fn base_values_have_witnesses_and_forms() {
        let b = eigen_base_set(&Graph::star(4), Regime::KGt3All, DEFAULT_TOL, Budget::DEFAULT).unwrap();
        for v in &b.values {
            let spec = eigenvalues(&v.witness, DEFAULT_TOL).unwrap();
            assert!(spec.eigenvalues.iter().any(|x| (x * x - v.value).abs() < 1e-9));
            assert!(v.closed_form.is_some(), "{v:?}");
        }
        let s = serde_json::to_value(&b).unwrap();
        assert_eq!(s["regime"], "kGT3-all");
    }

    #[test]
    fn power_eigenvalue_counts() {
        let single = power_distinct_eigenvalues(&Graph::path(2), 5, DEFAULT_TOL, Budget::DEFAULT).unwrap();
        assert_eq!(single.len(), 5);
        for p in &single {
            let (re, im) = p.to_complex();
            assert!(((re * re + im * im).sqrt() - 1.0).abs() < 1e-12);
        }
        // P3 at k=3: bases {0, 1, 2}, zero counted once
        let p3 = power_distinct_eigenvalues(&Graph::path(3), 3, DEFAULT_TOL, Budget::DEFAULT).unwrap();
        assert_eq!(p3.len(), 3 * 3 - 2);
        assert!(power_distinct_eigenvalues(&Graph::path(3), 2, DEFAULT_TOL, Budget::DEFAULT).is_err());
    }

    #[test]
    fn hyperpath_at_k2_is_the_path_spectrum() {
        for n in 2..8 {
            let vals = hyperpath_distinct_eigenvalues(n, 2, DEFAULT_TOL).unwrap();
            let reals: Vec<f64> = vals.iter().map(|p| p.to_complex().0).collect();
            for lambda in crate::spectral::path_spectrum(n) {
                assert!(reals.iter().any(|r| (r - lambda).abs() < 1e-9));
            }
        }
    }

    #[test]
    fn hypercycle_contains_modulus_two() {
        for n in 3..9 {
            let vals = hypercycle_distinct_eigenvalues(n, 5, DEFAULT_TOL).unwrap();
            assert!(vals.iter().any(|p| (p.modulus() - 2f64.powf(2.0 / 5.0)).abs() < 1e-12));
        }
        assert!(hypercycle_distinct_eigenvalues(5, 3, DEFAULT_TOL).is_err());
    }

    #[test]
    fn cr_invariant_examples() {
        assert_eq!(cr_invariant(&Graph::star(4)), 6);
        assert_eq!(cr_invariant(&Graph::cycle(4).unwrap()), 4 + 2);
        assert_eq!(cr_invariant(&Graph::complete(4)), 12 + 2 * 3);
        for v in 6..13 {
            let d = smith_graph(SmithFamily::DTilde, v).unwrap();
            assert_eq!(cr_invariant(&d), v as u64);
            let mate = disjoint_union(&Graph::cycle(4).unwrap(), &Graph::path(v - 4));
            assert_eq!(cr_invariant(&mate), v as u64);
        }
    }

    #[test]
    fn mate_search_rejects_large_radius() {
        assert!(matches!(
            smith_mate_search(&Graph::star(5), DEFAULT_TOL),
            Err(Error::NotSmith { .. })
        ));
    }

    #[test]
    fn relabeled_tree_is_not_distinguished() {
        let t = Graph::spider(&[1, 2, 3]);
        let r = t.relabel(&[6, 5, 4, 3, 2, 1, 0]).unwrap();
        let v = high_order_tree_test(&t, &r, 5, 12, DEFAULT_TOL, Budget::DEFAULT).unwrap();
        assert!(v.cospectral_k2 && v.base_sets_equal);
        assert_eq!(v.tree_invariants_equal, Some(true));
        assert!(v.first_witness.is_none());
    }

    #[test]
    fn p4_s4_fail_at_cospectrality() {
        let v = high_order_tree_test(&Graph::path(4), &Graph::star(3), 3, 8, DEFAULT_TOL, Budget::DEFAULT).unwrap();
        assert!(!v.cospectral_k2);
        assert!(matches!(v.first_witness, Some(Witness::CharacteristicPolynomial { .. })));
    }
}
