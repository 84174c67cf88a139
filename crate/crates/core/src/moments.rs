//! Spectral-moment coefficients of trees and power hypertrees.
//!
//! `c_d(T)` counts closed walks of length `d` in `T` that use every edge at
//! least once. For trees it has a closed form over positive edge weightings
//! `w` with total weight `d/2`:
//!
//! ```text
//! c_d(T) = d * sum_w prod_e w(e) * prod_v (d_v - 1)! / r_v
//! d_v = sum of w(e) over edges at v,  r_v = prod of w(e)! over edges at v
//! ```
//!
//! The per-vertex quotients are not integers, so the sum is accumulated in
//! exact rationals and checked for integrality at the end.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::census::{subtree_censuses, Budget, CanonicalTreeCode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::closed_walks;

pub type MomentValue = BigInt;

/// Default edge limit for the inclusion-exclusion walk oracle.
pub const ORACLE_MAX_EDGES: usize = 20;

/// Memoized factorials `0!..=n!`.
#[derive(Debug, Clone)]
pub struct Factorials(Vec<BigInt>);

impl Factorials {
    pub fn up_to(n: usize) -> Self {
        let mut v = Vec::with_capacity(n + 1);
        v.push(BigInt::one());
        for i in 1..=n {
            let next = &v[i - 1] * i;
            v.push(next);
        }
        Factorials(v)
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

/// Compositions of `total` into `parts` positive parts, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    total: usize,
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(total: usize, parts: usize) -> Self {
        let current = if parts == 0 {
            (total == 0).then(Vec::new)
        } else if total < parts {
            None
        } else {
            let mut first = vec![1; parts];
            first[parts - 1] = total - (parts - 1);
            Some(first)
        };
        Compositions { total, current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let parts = out.len();
        if parts >= 2 {
            let mut prefix: usize = out[..parts - 1].iter().sum();
            for i in (0..parts - 1).rev() {
                prefix -= out[i];
                // raise part i, reset the tail to 1 and give the rest to the last part
                let used = prefix + out[i] + 1 + (parts - 2 - i);
                if used < self.total {
                    let mut next = out.clone();
                    next[i] += 1;
                    for slot in &mut next[i + 1..parts - 1] {
                        *slot = 1;
                    }
                    next[parts - 1] = self.total - used;
                    self.current = Some(next);
                    break;
                }
            }
        }
        Some(out)
    }
}

/// `c_d` of a tree from the weighting formula.
pub fn coeff_cd_tree(tree: &Graph, d: usize) -> Result<MomentValue> {
    tree.require_tree()?;
    let m = tree.edge_count();
    if d % 2 == 1 || m == 0 || d / 2 < m {
        return Ok(BigInt::zero());
    }
    let half = d / 2;
    let facts = Factorials::up_to(half.max(d));
    let n = tree.vertex_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, v)) in tree.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }

    let mut sum = BigRational::zero();
    for w in Compositions::new(half, m) {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for &x in &w {
            num *= x;
        }
        for edges in &incident {
            let dv: usize = edges.iter().map(|&e| w[e]).sum();
            num *= facts.get(dv - 1);
            for &e in edges {
                den *= facts.get(w[e]);
            }
        }
        sum += BigRational::new(num, den);
    }
    let total = sum * BigInt::from(d);
    if !total.is_integer() {
        return Err(Error::IntegralityViolation(format!(
            "c_{d} evaluated to {total} for {tree:?}"
        )));
    }
    Ok(total.to_integer())
}

/// `c_d` of any connected graph by inclusion-exclusion over edge subsets:
/// `sum_{S subset E} (-1)^{|E|-|S|} tr(A_S^d)`.
pub fn coeff_cd_walk_oracle(sub: &Graph, d: usize) -> Result<MomentValue> {
    coeff_cd_walk_oracle_limited(sub, d, ORACLE_MAX_EDGES)
}

pub fn coeff_cd_walk_oracle_limited(sub: &Graph, d: usize, max_edges: usize) -> Result<MomentValue> {
    if !sub.is_connected() {
        return Err(Error::NotConnected);
    }
    let edges = sub.edges();
    let e = edges.len();
    if e > max_edges {
        return Err(Error::OracleTooLarge { edges: e, max: max_edges });
    }
    let n = sub.vertex_count();
    let mut total = BigInt::zero();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for mask in 0u64..(1u64 << e) {
        for list in &mut adj {
            list.clear();
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let walks = closed_walks(&adj, d);
        if (e - mask.count_ones() as usize).is_multiple_of(2) {
            total += walks;
        } else {
            total -= walks;
        }
    }
    Ok(total)
}

/// Canonical-ish key for caching oracle values: vertices are ordered by
/// degree and every order consistent with the degree classes is tried.
/// Falls back to the labeled edge list when the search would be too large.
fn isomorphism_key(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let search: f64 = classes.iter().map(|c| (1..=c.len()).product::<usize>() as f64).product();
    if search > 50_000.0 {
        return (n, g.edges().to_vec());
    }

    fn permute(classes: &mut [Vec<usize>], idx: usize, k: usize, order: &mut Vec<usize>, out: &mut dyn FnMut(&[usize])) {
        if idx == classes.len() {
            out(order);
            return;
        }
        let len = classes[idx].len();
        if k == len {
            permute(classes, idx + 1, 0, order, out);
            return;
        }
        for j in k..len {
            classes[idx].swap(k, j);
            order.push(classes[idx][k]);
            permute(classes, idx, k + 1, order, out);
            order.pop();
            classes[idx].swap(k, j);
        }
    }

    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut pos = vec![0usize; n];
    permute(&mut classes, 0, 0, &mut Vec::with_capacity(n), &mut |order: &[usize]| {
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
    });
    (n, best.unwrap_or_default())
}

/// `S_d(G) = sum over connected subgraphs H with at most d edges of c_d(H)`,
/// with every `c_d` taken from the walk oracle. Works for any graph.
pub fn spectral_moment_by_decomposition(g: &Graph, d: usize, budget: Budget) -> Result<MomentValue> {
    if d == 0 {
        return Ok(BigInt::from(g.vertex_count()));
    }
    let mut cache: HashMap<(usize, Vec<(usize, usize)>), BigInt> = HashMap::new();
    let mut subs: Vec<Vec<usize>> = Vec::new();
    crate::census::for_each_connected_edge_subset(g, d, budget, |edges| subs.push(edges.to_vec()))?;
    let mut total = BigInt::zero();
    for edges in subs {
        let (h, _) = g.edge_subgraph(&edges);
        let key = isomorphism_key(&h);
        let c = match cache.get(&key) {
            Some(c) => c.clone(),
            None => {
                let c = coeff_cd_walk_oracle(&h, d)?;
                cache.insert(key, c.clone());
                c
            }
        };
        total += c;
    }
    Ok(total)
}

/// Memo of tree coefficients keyed by canonical code and order.
#[derive(Debug, Default)]
pub struct CoefficientCache(HashMap<(CanonicalTreeCode, usize), BigInt>);

impl CoefficientCache {
    pub fn get(&mut self, code: &CanonicalTreeCode, d: usize) -> Result<BigInt> {
        if let Some(v) = self.0.get(&(code.clone(), d)) {
            return Ok(v.clone());
        }
        let v = coeff_cd_tree(&code.to_tree()?, d)?;
        self.0.insert((code.clone(), d), v.clone());
        Ok(v)
    }
}

fn weighted_census_sums(
    t: &Graph,
    max_m: usize,
    d: usize,
    budget: Budget,
    cache: &mut CoefficientCache,
) -> Result<Vec<BigInt>> {
    let censuses = subtree_censuses(t, max_m, budget)?;
    censuses
        .iter()
        .map(|c| {
            c.counts.iter().try_fold(BigInt::zero(), |acc, (code, &n)| {
                Ok(acc + cache.get(code, d)? * n)
            })
        })
        .collect()
}

/// `S_d(T) = sum_m sum_{T' with m edges} c_d(T') N_T(T')`. The outer sum stops
/// at `min(d/2, |E(T)|)`; larger subtrees do not exist.
pub fn tree_spectral_moment(t: &Graph, d: usize, budget: Budget) -> Result<MomentValue> {
    t.require_tree()?;
    if d == 0 {
        return Ok(BigInt::from(t.vertex_count()));
    }
    if d % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let max_m = (d / 2).min(t.edge_count());
    let mut cache = CoefficientCache::default();
    Ok(weighted_census_sums(t, max_m, d, budget, &mut cache)?.into_iter().sum())
}

/// `f_m(k) = 1/2 (k-1)^((|E|-m)(k-1)) k^(m(k-2)+1)`, the weight of the
/// `m`-edge census term in the moments of the `k`-power hypertree.
pub fn hyper_factor(edge_count: usize, m: usize, k: usize) -> BigRational {
    let k_big = BigInt::from(k);
    let km1 = BigInt::from(k - 1);
    let exp = (edge_count as i64 - m as i64) * (k as i64 - 1);
    let base = if exp >= 0 {
        BigRational::from_integer(km1.pow(exp as u32))
    } else {
        BigRational::new(BigInt::one(), km1.pow((-exp) as u32))
    };
    base * BigRational::from_integer(k_big.pow((m * (k - 2) + 1) as u32))
        / BigRational::from_integer(BigInt::from(2))
}

/// `d`-th spectral moment of the `k`-power hypertree of `t`: zero unless
/// `k | d`, otherwise `sum_m f_m(k) sum_{T'} c_{2d/k}(T') N_t(T')`.
pub fn power_hypertree_moment(t: &Graph, k: usize, d: usize, budget: Budget) -> Result<MomentValue> {
    t.require_tree()?;
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("moment order must be positive".into()));
    }
    if !d.is_multiple_of(k) {
        return Ok(BigInt::zero());
    }
    let z = d / k;
    let e = t.edge_count();
    let max_m = z.min(e);
    let mut cache = CoefficientCache::default();
    let sums = weighted_census_sums(t, max_m, 2 * z, budget, &mut cache)?;
    let total = sums
        .into_iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (i, s)| {
            acc + hyper_factor(e, i + 1, k) * BigRational::from_integer(s)
        });
    if !total.is_integer() {
        return Err(Error::IntegralityViolation(format!(
            "S_{d} of the {k}-power hypertree evaluated to {total}"
        )));
    }
    Ok(total.to_integer())
}

/// `sum_{T' with m edges} c_d(T') N_t(T')` for one `(m, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantVector {
    pub m: usize,
    pub d: usize,
    #[serde(with = "crate::bigint_serde")]
    pub value: BigInt,
}

pub fn invariant_vector(t: &Graph, m: usize, d: usize, budget: Budget) -> Result<InvariantVector> {
    t.require_tree()?;
    if m == 0 || d % 2 == 1 || d < 2 * m {
        return Err(Error::InvalidArgument(format!(
            "need m >= 1 and even d >= 2m, got m={m}, d={d}"
        )));
    }
    let value = if m > t.edge_count() {
        BigInt::zero()
    } else {
        let mut cache = CoefficientCache::default();
        weighted_census_sums(t, m, d, budget, &mut cache)?.pop().expect("m >= 1")
    };
    Ok(InvariantVector { m, d, value })
}

/// Every `(m, d)` value with `m <= m_max` and even `2m <= d <= d_max`.
pub fn invariant_grid(t: &Graph, m_max: usize, d_max: usize, budget: Budget) -> Result<Vec<InvariantVector>> {
    t.require_tree()?;
    let mut cache = CoefficientCache::default();
    let mut out = Vec::new();
    let top = m_max.min(t.edge_count());
    let censuses = subtree_censuses(t, top, budget)?;
    for m in 1..=m_max {
        for d in (2 * m..=d_max).step_by(2) {
            let value = match censuses.get(m - 1) {
                Some(c) => c.counts.iter().try_fold(BigInt::zero(), |acc, (code, &n)| {
                    Ok::<_, Error>(acc + cache.get(code, d)? * n)
                })?,
                None => BigInt::zero(),
            };
            out.push(InvariantVector { m, d, value });
        }
    }
    Ok(out)
}

/// Coefficient matrix of the system `sum_m f_m(k) y_m = Delta_k`, written as
/// `f_1(k) * (k^(k-2) / (k-1)^(k-1))^(m-1)`: row per `k`, column per `m`.
pub fn vandermonde_matrix(edge_count: usize, z: usize, ks: &[usize]) -> Vec<Vec<BigRational>> {
    ks.iter()
        .map(|&k| {
            let f1 = hyper_factor(edge_count, 1, k);
            let ratio = BigRational::new(
                BigInt::from(k).pow((k - 2) as u32),
                BigInt::from(k - 1).pow((k - 1) as u32),
            );
            let mut row = Vec::with_capacity(z);
            let mut cur = f1;
            for _ in 0..z {
                row.push(cur.clone());
                cur *= &ratio;
            }
            row
        })
        .collect()
}

/// Determinant by exact Gaussian elimination.
pub fn determinant(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            let prow = a[col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&prow[col..]) {
                *x -= &f * p;
            }
        }
    }
    det
}

/// Solves `matrix * y = rhs` exactly. Panics on a singular matrix.
pub fn solve_exact(matrix: &[Vec<BigRational>], rhs: &[BigRational]) -> Vec<BigRational> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n);
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular system");
        a.swap(p, col);
        let pivot = a[col][col].clone();
        for x in &mut a[col][col..] {
            *x /= &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            let prow = a[col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&prow[col..]) {
                *x -= &f * p;
            }
        }
    }
    a.into_iter().map(|mut r| r.pop().expect("augmented")).collect()
}

/// Recovers `y_1..y_z` from hypertree moment differences `Delta_k` (one per
/// entry of `ks`, taken at order `d = k z`).
pub fn vandermonde_recover(
    moment_differences: &[BigRational],
    z: usize,
    ks: &[usize],
    edge_count: usize,
) -> Result<Vec<BigRational>> {
    if ks.len() != z || moment_differences.len() != z {
        return Err(Error::InvalidArgument(format!(
            "need exactly z={z} values of k and differences, got {} and {}",
            ks.len(),
            moment_differences.len()
        )));
    }
    let mut sorted = ks.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ks.len() || sorted.first().is_some_and(|&k| k < 2) {
        return Err(Error::InvalidArgument(format!(
            "values of k must be distinct and at least 2: {ks:?}"
        )));
    }
    let matrix = vandermonde_matrix(edge_count, z, ks);
    assert!(!determinant(&matrix).is_zero(), "distinct k give a nonsingular system");
    Ok(solve_exact(&matrix, moment_differences))
}

/// `Delta_k = S_{kz}(T1^(k)) - S_{kz}(T2^(k))` for each `k`.
pub fn hypertree_moment_differences(
    t1: &Graph,
    t2: &Graph,
    z: usize,
    ks: &[usize],
    budget: Budget,
) -> Result<Vec<BigRational>> {
    if t1.edge_count() != t2.edge_count() {
        return Err(Error::InvalidArgument("trees must have the same size".into()));
    }
    ks.iter()
        .map(|&k| {
            let a = power_hypertree_moment(t1, k, k * z, budget)?;
            let b = power_hypertree_moment(t2, k, k * z, budget)?;
            Ok(BigRational::from_integer(a - b))
        })
        .collect()
}

/// Lossy conversion for display.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if b != 0.0 => a / b,
        _ => {
            if n.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        }
    }
}

/// Exact integer check helper for rationals built from integer data.
pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    r.denom().is_one().then(|| r.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::named_tree;
    use crate::spectral::spectral_moment;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn t(name: &str) -> Graph {
        named_tree(name).unwrap()
    }

    #[test]
    fn compositions_are_lexicographic_and_complete() {
        let all: Vec<Vec<usize>> = Compositions::new(5, 3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![1, 1, 3]);
        assert_eq!(all[5], vec![3, 1, 1]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|c| c.iter().sum::<usize>() == 5));
        assert_eq!(Compositions::new(3, 1).collect::<Vec<_>>(), vec![vec![3]]);
        assert_eq!(Compositions::new(2, 3).count(), 0);
        assert_eq!(Compositions::new(0, 0).count(), 1);
        // C(9, 4)
        assert_eq!(Compositions::new(10, 5).count(), 126);
    }

    #[test]
    fn closed_form_coefficients() {
        assert_eq!(coeff_cd_tree(&t("P2"), 2).unwrap(), big(2));
        assert_eq!(coeff_cd_tree(&t("P3"), 6).unwrap(), big(12));
        assert_eq!(coeff_cd_tree(&t("P4"), 6).unwrap(), big(6));
        assert_eq!(coeff_cd_tree(&t("S4"), 8).unwrap(), big(72));
        assert_eq!(coeff_cd_tree(&t("S6"), 20).unwrap(), big(10_206_000));
        assert_eq!(coeff_cd_tree(&t("P4"), 7).unwrap(), big(0));
        assert_eq!(coeff_cd_tree(&t("P4"), 4).unwrap(), big(0));
        assert!(coeff_cd_tree(&Graph::cycle(4).unwrap(), 8).is_err());
    }

    #[test]
    fn walk_oracle_examples() {
        assert_eq!(coeff_cd_walk_oracle(&t("P3"), 4).unwrap(), big(4));
        for d in [1, 3, 5, 7] {
            assert_eq!(coeff_cd_walk_oracle(&t("P2"), d).unwrap(), big(0));
        }
        assert_eq!(coeff_cd_walk_oracle(&t("Q5"), 8).unwrap(), big(16));
        // a 4-cycle traversed once in either direction from any start
        assert_eq!(coeff_cd_walk_oracle(&Graph::cycle(4).unwrap(), 4).unwrap(), big(8));
        let big_star = Graph::star(21);
        assert_eq!(
            coeff_cd_walk_oracle(&big_star, 2),
            Err(Error::OracleTooLarge { edges: 21, max: 20 })
        );
        assert_eq!(
            coeff_cd_walk_oracle(&Graph::empty(2), 2),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn tree_moments_match_traces() {
        assert_eq!(tree_spectral_moment(&t("P4"), 6, Budget::DEFAULT).unwrap(), big(36));
        assert_eq!(spectral_moment(&t("P4"), 6), big(36));
        assert_eq!(tree_spectral_moment(&t("P4"), 5, Budget::DEFAULT).unwrap(), big(0));
        assert_eq!(tree_spectral_moment(&t("P2"), 2, Budget::DEFAULT).unwrap(), big(2));
    }

    #[test]
    fn hypertree_moment_examples() {
        assert_eq!(power_hypertree_moment(&t("P2"), 3, 3, Budget::DEFAULT).unwrap(), big(9));
        for tree in ["P4", "Q6", "J6"] {
            assert_eq!(power_hypertree_moment(&t(tree), 4, 6, Budget::DEFAULT).unwrap(), big(0));
            for d in 1..=10 {
                assert_eq!(
                    power_hypertree_moment(&t(tree), 2, d, Budget::DEFAULT).unwrap(),
                    spectral_moment(&t(tree), d)
                );
            }
        }
        assert!(power_hypertree_moment(&t("P2"), 1, 3, Budget::DEFAULT).is_err());
    }

    #[test]
    fn hyper_factor_matches_ratio_form() {
        for e in 1..6 {
            for k in 2..7 {
                let row = vandermonde_matrix(e, 5, &[k]).remove(0);
                for m in 1..=5 {
                    assert_eq!(row[m - 1], hyper_factor(e, m, k), "e={e} k={k} m={m}");
                }
            }
        }
        // k = 2 collapses to 1
        assert_eq!(hyper_factor(4, 2, 2), BigRational::one());
    }

    #[test]
    fn invariant_vector_examples() {
        let p4 = t("P4");
        let v = invariant_vector(&p4, 3, 6, Budget::DEFAULT).unwrap();
        assert_eq!(v.value, big(6));
        for d in (2..=12).step_by(2) {
            let v = invariant_vector(&p4, 1, d, Budget::DEFAULT).unwrap();
            assert_eq!(v.value, coeff_cd_tree(&t("P2"), d).unwrap() * 3);
        }
        assert!(invariant_vector(&p4, 3, 4, Budget::DEFAULT).is_err());
        assert_eq!(invariant_vector(&p4, 4, 8, Budget::DEFAULT).unwrap().value, big(0));
        let grid = invariant_grid(&p4, 3, 8, Budget::DEFAULT).unwrap();
        for v in &grid {
            assert_eq!(*v, invariant_vector(&p4, v.m, v.d, Budget::DEFAULT).unwrap());
        }
    }

    #[test]
    fn vandermonde_zero_and_determinant() {
        let y = vandermonde_recover(&vec![BigRational::zero(); 4], 4, &[2, 3, 4, 5], 6).unwrap();
        assert!(y.iter().all(Zero::is_zero));
        assert!(!determinant(&vandermonde_matrix(6, 4, &[2, 3, 4, 5])).is_zero());
        assert!(vandermonde_recover(&vec![BigRational::zero(); 2], 2, &[3, 3], 6).is_err());
        assert!(vandermonde_recover(&vec![BigRational::zero(); 2], 2, &[1, 3], 6).is_err());
    }

    #[test]
    fn determinant_of_known_matrix() {
        let r = |x: i64| BigRational::from_integer(big(x));
        let m = vec![vec![r(2), r(1)], vec![r(7), r(4)]];
        assert_eq!(determinant(&m), r(1));
        let sol = solve_exact(&m, &[r(3), r(11)]);
        assert_eq!(sol, vec![r(1), r(1)]);
    }

    #[test]
    fn decomposition_matches_trace_on_small_graphs() {
        let k4 = Graph::complete(4);
        for d in 0..=6 {
            assert_eq!(
                spectral_moment_by_decomposition(&k4, d, Budget::DEFAULT).unwrap(),
                spectral_moment(&k4, d),
                "d={d}"
            );
        }
    }

    #[test]
    fn isomorphism_key_ignores_labels() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let b = a.relabel(&[2, 0, 3, 1]).unwrap();
        assert_eq!(isomorphism_key(&a), isomorphism_key(&b));
        assert_ne!(isomorphism_key(&Graph::path(4)), isomorphism_key(&Graph::star(3)));
    }
}
