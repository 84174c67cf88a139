//! Reports behind the CLI: the coefficient tables for trees with 3-5 edges
//! and the cospectral-tree hunt.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{generate_free_trees, named_tree, Budget};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::highorder::{high_order_tree_test, Witness};
use crate::moments::coeff_cd_tree;
use crate::spectral::characteristic_polynomial;

pub const SCHEMA_VERSION: u32 = 1;

struct ExpectedTable {
    title: &'static str,
    columns: &'static [&'static str],
    rows: &'static [(usize, &'static [i64])],
}

const EXPECTED: [ExpectedTable; 3] = [
    ExpectedTable {
        title: "trees with 3 edges",
        columns: &["P4", "S4"],
        rows: &[(6, &[6, 12]), (8, &[32, 72])],
    },
    ExpectedTable {
        title: "trees with 4 edges",
        columns: &["P5", "Q5", "S5"],
        rows: &[(8, &[8, 16, 48]), (10, &[60, 140, 480]), (12, &[300, 804, 3120])],
    },
    ExpectedTable {
        title: "trees with 5 edges",
        columns: &["P6", "Q6", "R6", "H6", "J6", "S6"],
        rows: &[
            (10, &[10, 20, 20, 40, 60, 240]),
            (12, &[96, 216, 228, 504, 792, 3600]),
            (14, &[588, 1484, 1652, 3976, 6552, 33600]),
            (16, &[2944, 8304, 9728, 25216, 43680, 252000]),
            (18, &[13158, 41328, 50832, 140832, 257184, 1668240]),
            (20, &[54730, 190800, 245880, 724320, 1398600, 10206000]),
        ],
    },
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: usize,
    #[serde(with = "crate::bigint_serde::vec")]
    pub values: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub tree: String,
    pub d: usize,
    #[serde(with = "crate::bigint_serde")]
    pub expected: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub computed: BigInt,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema_version: u32,
    pub tables: Vec<CoefficientTable>,
    pub mismatches: Vec<Mismatch>,
}

impl TableDocument {
    pub fn cell_count(&self) -> usize {
        self.tables.iter().map(|t| t.rows.len() * t.columns.len()).sum()
    }

    pub fn cell(&self, tree: &str, d: usize) -> Option<&BigInt> {
        self.tables.iter().find_map(|t| {
            let col = t.columns.iter().position(|c| c == tree)?;
            t.rows.iter().find(|r| r.d == d).map(|r| &r.values[col])
        })
    }

    /// One block per table: header `d,<trees>` then one line per order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "# {}", t.title);
            let _ = writeln!(out, "d,{}", t.columns.join(","));
            for r in &t.rows {
                let vals: Vec<String> = r.values.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{},{}", r.d, vals.join(","));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tables {
            let _ = writeln!(out, "c_d for {}", t.title);
            let _ = write!(out, "{:>4}", "d");
            for c in &t.columns {
                let _ = write!(out, " {c:>10}");
            }
            out.push('\n');
            for r in &t.rows {
                let _ = write!(out, "{:>4}", r.d);
                for v in &r.values {
                    let _ = write!(out, " {v:>10}");
                }
                out.push('\n');
            }
            out.push('\n');
        }
        if self.mismatches.is_empty() {
            let _ = writeln!(out, "all {} values match", self.cell_count());
        } else {
            for m in &self.mismatches {
                let _ = writeln!(
                    out,
                    "MISMATCH c_{}({}): expected {}, computed {}",
                    m.d, m.tree, m.expected, m.computed
                );
            }
        }
        out
    }
}

/// Evaluates every table cell from the weighting formula and compares it
/// with the frozen expected values.
pub fn reproduce_tables() -> Result<TableDocument> {
    let mut tables = Vec::new();
    let mut mismatches = Vec::new();
    for exp in &EXPECTED {
        let trees: Vec<Graph> = exp
            .columns
            .iter()
            .map(|n| named_tree(n).expect("table trees are catalogued"))
            .collect();
        let mut rows = Vec::new();
        for &(d, expected) in exp.rows {
            let mut values = Vec::new();
            for ((name, tree), &want) in exp.columns.iter().zip(&trees).zip(expected) {
                let got = coeff_cd_tree(tree, d)?;
                if got != BigInt::from(want) {
                    mismatches.push(Mismatch {
                        tree: name.to_string(),
                        d,
                        expected: want.into(),
                        computed: got.clone(),
                    });
                }
                values.push(got);
            }
            rows.push(TableRow { d, values });
        }
        tables.push(CoefficientTable {
            title: exp.title.to_string(),
            columns: exp.columns.iter().map(|s| s.to_string()).collect(),
            rows,
        });
    }
    Ok(TableDocument {
        schema_version: SCHEMA_VERSION,
        tables,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bucket {
    pub charpoly: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Separation {
    pub first: String,
    pub second: String,
    /// `None` means no implemented invariant told the pair apart.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntReport {
    pub schema_version: u32,
    pub n: usize,
    pub tree_count: usize,
    pub m_max: usize,
    pub d_max: usize,
    /// Every bucket, singletons included, ordered by first member.
    pub buckets: Vec<Bucket>,
    pub separations: Vec<Separation>,
}

impl HuntReport {
    pub fn non_singleton_buckets(&self) -> impl Iterator<Item = &Bucket> {
        self.buckets.iter().filter(|b| b.members.len() > 1)
    }

    pub fn undistinguished(&self) -> impl Iterator<Item = &Separation> {
        self.separations.iter().filter(|s| s.witness.is_none())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let cospectral = self.non_singleton_buckets().count();
        let _ = writeln!(
            out,
            "n={}: {} trees, {} characteristic polynomials, {} cospectral classes",
            self.n,
            self.tree_count,
            self.buckets.len(),
            cospectral
        );
        for b in self.non_singleton_buckets() {
            let _ = writeln!(out, "  {}: {}", b.charpoly, b.members.join(" "));
        }
        for s in &self.separations {
            match &s.witness {
                Some(w) => {
                    let _ = writeln!(out, "  {} vs {}: {w}", s.first, s.second);
                }
                None => {
                    let _ = writeln!(out, "  {} vs {}: undistinguished", s.first, s.second);
                }
            }
        }
        let undist = self.undistinguished().count();
        if undist == 0 {
            let _ = writeln!(
                out,
                "every cospectral pair was separated by a high-ordered invariant (no counterexample found at this size)"
            );
        } else {
            let _ = writeln!(out, "{undist} cospectral pair(s) were not separated by any implemented invariant");
        }
        out
    }
}

/// Buckets every tree on `n` vertices by characteristic polynomial and runs
/// the high-order test on each pair inside a bucket.
pub fn hunt(n: usize, m_max: usize, d_max: usize, tol: f64, budget: Budget) -> Result<HuntReport> {
    let trees = if n == 0 { Vec::new() } else { generate_free_trees(n - 1) };
    let polys: Vec<_> = trees.par_iter().map(characteristic_polynomial).collect();
    let mut groups: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (i, p) in polys.iter().enumerate() {
        groups.entry(p.clone()).or_default().push(i);
    }

    let mut buckets: Vec<(Bucket, Vec<usize>)> = groups
        .into_iter()
        .map(|(p, mut idx)| {
            idx.sort_by_key(|&i| to_graph6(&trees[i]));
            let members = idx.iter().map(|&i| to_graph6(&trees[i])).collect();
            (
                Bucket {
                    charpoly: p.to_string(),
                    members,
                },
                idx,
            )
        })
        .collect();
    buckets.sort_by(|a, b| a.0.members[0].cmp(&b.0.members[0]));

    let pairs: Vec<(usize, usize)> = buckets
        .iter()
        .flat_map(|(_, idx)| {
            idx.iter()
                .enumerate()
                .flat_map(move |(a, &i)| idx[a + 1..].iter().map(move |&j| (i, j)))
        })
        .collect();
    let separations = pairs
        .par_iter()
        .map(|&(i, j)| {
            let v = high_order_tree_test(&trees[i], &trees[j], m_max, d_max, tol, budget)?;
            Ok(Separation {
                first: to_graph6(&trees[i]),
                second: to_graph6(&trees[j]),
                witness: v.first_witness,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(HuntReport {
        schema_version: SCHEMA_VERSION,
        n,
        tree_count: trees.len(),
        m_max,
        d_max,
        buckets: buckets.into_iter().map(|(b, _)| b).collect(),
        separations,
    })
}
