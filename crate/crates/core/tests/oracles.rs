mod common;

use std::collections::BTreeSet;
use std::f64::consts::PI;

use common::{brute_force_automorphism, prufer_tree};
use hyperspec::census::{free_tree_codes, generate_free_trees, tree_canonical_code};
use hyperspec::constructions::{cospectral_vertex_pairs, schwenk_r6_witness, schwenk_witness};
use hyperspec::highorder::{compare_closed_form, hypercycle_bases, ClosedFormKind};
use hyperspec::{parse_graph6, to_graph6, Budget, Graph, DEFAULT_TOL};

// OEIS A000055, indexed by vertex count
const FREE_TREES: [usize; 17] = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];

#[test]
fn free_tree_counts() {
    for (n, &want) in FREE_TREES.iter().enumerate().skip(1).take(14) {
        assert_eq!(generate_free_trees(n - 1).len(), want, "n = {n}");
    }
}

#[test]
#[ignore = "slow in debug builds"]
fn free_tree_counts_large() {
    for (n, &want) in FREE_TREES.iter().enumerate().skip(15) {
        assert_eq!(free_tree_codes(n - 1).len(), want, "n = {n}");
    }
}

/// Every labeled tree (all Prufer sequences) reduces to exactly the
/// generated shapes.
#[test]
fn free_trees_match_prufer_enumeration() {
    for n in 2usize..=8 {
        let mut seen = BTreeSet::new();
        let total = n.pow(n as u32 - 2);
        for idx in 0..total {
            let mut x = idx;
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect();
            seen.insert(tree_canonical_code(&prufer_tree(&seq)).unwrap());
        }
        let generated: BTreeSet<_> = free_tree_codes(n - 1).into_iter().collect();
        assert_eq!(seen, generated, "n = {n}");
    }
}

#[test]
fn graph6_matches_reference_encoder() {
    // strings produced by networkx.to_graph6_bytes
    let cases = [
        ("Dhc", Graph::cycle(5).unwrap()),
        ("Ch", Graph::path(4)),
        ("C~", Graph::complete(4)),
        ("Ds_", Graph::star(4)),
        ("@", Graph::empty(1)),
        ("?", Graph::empty(0)),
    ];
    for (s, g) in cases {
        assert_eq!(to_graph6(&g), s);
        assert_eq!(parse_graph6(s).unwrap(), g);
    }
    let p70 = to_graph6(&Graph::path(70));
    assert!(p70.starts_with("~?@EhCGGC@?G"));
    assert_eq!(p70.len(), 407);
}

#[test]
fn fixture_edges_match_reference_decoder() {
    // edge lists from networkx.from_graph6_bytes
    assert_eq!(
        schwenk_witness().tree.edges(),
        &[(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (5, 6), (5, 8), (6, 7)]
    );
    assert_eq!(
        schwenk_r6_witness().tree.edges(),
        &[(0, 1), (0, 6), (0, 10), (1, 2), (2, 3), (3, 4), (3, 5), (6, 7), (7, 8), (8, 9)]
    );
}

#[test]
fn similarity_flags_agree_with_brute_force_automorphisms() {
    for n in 2..=10 {
        for t in generate_free_trees(n - 1) {
            for p in cospectral_vertex_pairs(&t).unwrap() {
                let auto = brute_force_automorphism(&t, p.u, p.v);
                assert_eq!(p.similar, auto.is_some(), "{} u={} v={}", to_graph6(&t), p.u, p.v);
                if let Some(a) = p.automorphism() {
                    assert!(t.is_automorphism(&a));
                    assert_eq!(a[p.u], p.v);
                }
            }
        }
    }
}

#[test]
fn witness_pairs_have_no_automorphism() {
    for w in [schwenk_witness(), schwenk_r6_witness()] {
        assert!(brute_force_automorphism(&w.tree, w.u, w.v).is_none());
        assert!(w.automorphism().is_none());
    }
}

#[test]
fn only_one_non_similar_pair_up_to_ten_vertices() {
    let mut found = Vec::new();
    for n in 2..=10 {
        for t in generate_free_trees(n - 1) {
            for p in cospectral_vertex_pairs(&t).unwrap() {
                if !p.similar {
                    found.push((to_graph6(&t), p.u, p.v));
                }
            }
        }
    }
    assert_eq!(found, vec![("HhE?GCC".to_string(), 1, 6)]);
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

/// The hyperpath formula's `j = 1` term contributes 0, which no edge subset
/// of a single edge produces; every longer path agrees exactly.
#[test]
fn hyperpath_closed_form_against_enumeration() {
    for n in 2..=9 {
        for k in [3, 4, 5] {
            let c = compare_closed_form(ClosedFormKind::Path, n, k, DEFAULT_TOL, Budget::DEFAULT).unwrap();
            assert!(c.only_in_enumeration.is_empty(), "{c:?}");
            if n == 2 && k > 3 {
                assert_eq!(c.only_in_closed_form, vec![0.0]);
            } else {
                assert!(c.agrees(), "{c:?}");
            }
        }
    }
}

/// The hypercycle formula lists paths on at most `n - 1` vertices, so it
/// misses exactly the values contributed only by the spanning path `P_n`.
#[test]
fn hypercycle_closed_form_misses_the_spanning_path() {
    for n in 3..=9 {
        let formula = hypercycle_bases(n);
        let mut expected: Vec<f64> = (1..=n)
            .map(|t| (2.0 * (PI * t as f64 / (n + 1) as f64).cos()).powi(2))
            .filter(|x| !formula.iter().any(|y| close(*x, *y)))
            .collect();
        expected.sort_by(f64::total_cmp);
        expected.dedup_by(|a, b| close(*a, *b));
        for k in [4, 5] {
            let c = compare_closed_form(ClosedFormKind::Cycle, n, k, DEFAULT_TOL, Budget::DEFAULT).unwrap();
            assert!(c.only_in_closed_form.is_empty(), "{c:?}");
            assert_eq!(c.only_in_enumeration.len(), expected.len(), "n={n}: {c:?}");
            for (a, b) in c.only_in_enumeration.iter().zip(&expected) {
                assert!(close(*a, *b), "n={n}: {c:?}");
            }
            assert!(!expected.is_empty());
        }
    }
}
