//! Exact spectral invariants of graphs and trees, and of their `k`-power
//! hypergraphs (every edge padded with `k - 2` fresh vertices).
//!
//! * [`graph`], [`graph6`]: the graph type and its standard text encoding.
//! * [`spectral`]: characteristic polynomials, moments and eigenvalues.
//! * [`census`]: connected-subgraph enumeration, tree canonical codes,
//!   subtree counts and free-tree generation.
//! * [`moments`]: moment coefficients of trees and power hypertrees.
//! * [`highorder`]: distinct power-hypergraph eigenvalues via subgraph base
//!   sets, separation tests and cospectral mate search among Smith graphs.
//! * [`constructions`]: named graphs and cospectral constructions.
//! * [`report`]: coefficient tables and the cospectral-tree hunt.

mod bigint_serde;
pub mod census;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod highorder;
pub mod moments;
pub mod report;
pub mod spectral;

pub use census::{Budget, CanonicalTreeCode};
pub use error::{Error, Result};
pub use graph::{disjoint_union, Graph};
pub use graph6::{parse_graph6, to_graph6};
pub use spectral::{characteristic_polynomial, IntPolynomial, Spectrum, DEFAULT_TOL};
