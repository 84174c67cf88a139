#![allow(dead_code)]

use hyperspec::Graph;
use proptest::prelude::*;

/// Tree from a Prufer sequence over `0..seq.len() + 2`.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

pub fn arb_tree(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (2..=max_vertices).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(|seq| prufer_tree(&seq))
    })
}

pub fn arb_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut b = bits.iter();
            for i in 0..n {
                for j in i + 1..n {
                    if *b.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Closed walks of length `d` from dense integer matrix powers.
pub fn trace_of_power(g: &Graph, d: usize) -> i128 {
    let n = g.vertex_count();
    let a: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(g.has_edge(i, j))).collect())
        .collect();
    let mut p: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    for _ in 0..d {
        p = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| p[i][k] * a[k][j]).sum()).collect())
            .collect();
    }
    (0..n).map(|i| p[i][i]).sum()
}

/// Automorphism of `t` taking `u` to `v`, found by backtracking over all
/// adjacency-preserving partial maps.
pub fn brute_force_automorphism(t: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
    fn extend(t: &Graph, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>, next: usize) -> bool {
        let n = t.vertex_count();
        if next == n {
            return true;
        }
        if map[next].is_some() {
            return extend(t, map, used, next + 1);
        }
        for img in 0..n {
            if used[img] || t.degree(img) != t.degree(next) {
                continue;
            }
            let consistent = (0..n).all(|w| match map[w] {
                Some(mw) => t.has_edge(next, w) == t.has_edge(img, mw),
                None => true,
            });
            if consistent {
                map[next] = Some(img);
                used[img] = true;
                if extend(t, map, used, next + 1) {
                    return true;
                }
                map[next] = None;
                used[img] = false;
            }
        }
        false
    }
    let n = t.vertex_count();
    if t.degree(u) != t.degree(v) {
        return None;
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    map[u] = Some(v);
    used[v] = true;
    extend(t, &mut map, &mut used, 0).then(|| map.into_iter().map(Option::unwrap).collect())
}
