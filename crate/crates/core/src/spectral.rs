//! Ordinary adjacency spectra: exact characteristic polynomials and moments,
//! plus numeric eigenvalues for tolerance-based comparisons.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-9;

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntPolynomial {
    #[serde(with = "crate::bigint_serde::vec")]
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// `det(xI - A)` by the Faddeev-LeVerrier recurrence. Every division in the
/// recurrence is exact over the integers, so no rationals are needed:
///
/// `M_1 = I`, `c_{n-k} = -tr(A M_k) / k`, `M_{k+1} = A M_k + c_{n-k} I`.
pub fn characteristic_polynomial(g: &Graph) -> IntPolynomial {
    let n = g.vertex_count();
    let adj = g.adjacency_lists();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return IntPolynomial::new(coeffs);
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    for k in 1..=n {
        // am = A * M_k using adjacency lists
        let mut am = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in am.iter_mut().enumerate() {
            for &l in &adj[i] {
                for (dst, src) in row.iter_mut().zip(&m[l]) {
                    *dst += src;
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let k_big = BigInt::from(k);
        debug_assert!((&trace % &k_big).is_zero());
        let c = -(trace / k_big);
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c;
        }
        coeffs[n - k] = c;
        m = am;
    }
    IntPolynomial::new(coeffs)
}

pub fn is_cospectral(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && characteristic_polynomial(a) == characteristic_polynomial(b)
}

/// Number of closed walks of length `d` in the graph given by `adj`, i.e.
/// `tr(A^d)`. Runs in `u128` and falls back to big integers on overflow.
pub fn closed_walks(adj: &[Vec<usize>], d: usize) -> BigInt {
    closed_walks_u128(adj, d).map_or_else(|| closed_walks_big(adj, d), BigInt::from)
}

fn closed_walks_u128(adj: &[Vec<usize>], d: usize) -> Option<u128> {
    let n = adj.len();
    let mut total = 0u128;
    let mut cur = vec![0u128; n];
    let mut next = vec![0u128; n];
    for s in 0..n {
        if d == 0 {
            total += 1;
            continue;
        }
        if adj[s].is_empty() {
            continue;
        }
        cur.iter_mut().for_each(|x| *x = 0);
        cur[s] = 1;
        for _ in 0..d {
            for (v, slot) in next.iter_mut().enumerate() {
                let mut acc = 0u128;
                for &w in &adj[v] {
                    acc = acc.checked_add(cur[w])?;
                }
                *slot = acc;
            }
            std::mem::swap(&mut cur, &mut next);
        }
        total = total.checked_add(cur[s])?;
    }
    Some(total)
}

fn closed_walks_big(adj: &[Vec<usize>], d: usize) -> BigInt {
    let n = adj.len();
    let mut total = BigInt::zero();
    for s in 0..n {
        let mut cur = vec![BigInt::zero(); n];
        cur[s] = BigInt::one();
        for _ in 0..d {
            cur = (0..n).map(|v| adj[v].iter().map(|&w| &cur[w]).sum()).collect();
        }
        total += &cur[s];
    }
    total
}

/// `S_d(G) = tr(A^d)`, the number of closed walks of length `d`.
pub fn spectral_moment(g: &Graph, d: usize) -> BigInt {
    closed_walks(g.adjacency_lists(), d)
}

/// Real adjacency spectrum, ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
}

impl Spectrum {
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0_f64, |a, &x| a.max(x.abs()))
    }

    /// Elementwise comparison within the combined tolerance.
    pub fn approx_eq(&self, other: &Spectrum) -> bool {
        let tol = self.tolerance.max(other.tolerance);
        self.eigenvalues.len() == other.eigenvalues.len()
            && self
                .eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

/// Numeric eigenvalues of the adjacency matrix. The eigenpairs are checked
/// afterwards: every residual `|Av - lv|` must be at most `tol`, which bounds
/// the distance of each reported value from a true eigenvalue.
pub fn eigenvalues(g: &Graph, tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Spectrum {
            eigenvalues: Vec::new(),
            tolerance: tol,
        });
    }
    let a = DMatrix::<f64>::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let max_iter = 1000 * n;
    let eig = a
        .clone()
        .try_symmetric_eigen(f64::EPSILON, max_iter)
        .ok_or(Error::NonConvergence {
            residual: f64::INFINITY,
        })?;
    let mut residual = 0.0_f64;
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        let v = eig.eigenvectors.column(k);
        let r = (&a * v - v * lambda).norm();
        residual = residual.max(r);
    }
    if residual > tol {
        return Err(Error::NonConvergence { residual });
    }
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(Spectrum {
        eigenvalues: values,
        tolerance: tol,
    })
}

/// Closed form `2cos(pi t/(n+1))`, `t = 1..=n`, ascending.
pub fn path_spectrum(n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (1..=n)
        .map(|t| 2.0 * (PI * t as f64 / (n + 1) as f64).cos())
        .collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Closed form `2cos(2 pi r/n)`, `r = 1..=n`, ascending.
pub fn cycle_spectrum(n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (1..=n)
        .map(|r| 2.0 * (2.0 * PI * r as f64 / n as f64).cos())
        .collect();
    v.sort_by(f64::total_cmp);
    v
}
