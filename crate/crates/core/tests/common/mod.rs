//! Brute-force oracles shared by the integration tests. None of them use the
//! crate's canonical labeling or polynomial code.

#![allow(dead_code)]

use itertools::Itertools;
use polymate::Graph;
use proptest::prelude::*;

/// Every labeled graph on `n` vertices, indexed by upper-triangle bit mask.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Smallest adjacency code over all `n!` relabelings.
pub fn brute_canonical(g: &Graph) -> u64 {
    let n = g.order();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut code = 0u64;
            for (bit, (i, j)) in (0..n).tuple_combinations().enumerate() {
                if g.has_edge(perm[i], perm[j]) {
                    code |= 1 << bit;
                }
            }
            code
        })
        .min()
        .unwrap()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && (0..a.order())
            .permutations(a.order())
            .any(|perm| a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v])))
}

/// `counts[i]` = number of `i`-subsets satisfying `pred` on their vertex mask.
pub fn subset_counts(n: usize, mut pred: impl FnMut(u64) -> bool) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for mask in 0..1u64 << n {
        if pred(mask) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

pub fn is_independent(g: &Graph, mask: u64) -> bool {
    (0..g.order()).all(|v| mask >> v & 1 == 0 || g.rows()[v] & mask == 0)
}

pub fn is_clique(g: &Graph, mask: u64) -> bool {
    (0..g.order()).all(|v| mask >> v & 1 == 0 || (g.rows()[v] | 1 << v) & mask == mask)
}

/// Acyclicity of `g[mask]` by union-find.
pub fn is_forest(g: &Graph, mask: u64) -> bool {
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, v) in g.edges() {
        if mask >> u & 1 == 0 || mask >> v & 1 == 0 {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Treewidth at most 2 via series-parallel reduction: delete vertices of
/// degree at most 1, suppress vertices of degree 2; succeeds iff nothing remains.
pub fn treewidth_at_most_two(g: &Graph, mask: u64) -> bool {
    let n = g.order();
    let mut adj: Vec<u64> = (0..n).map(|v| g.rows()[v] & mask).collect();
    let mut alive = mask;
    loop {
        if alive == 0 {
            return true;
        }
        let pick = (0..n).find(|&v| alive >> v & 1 == 1 && adj[v].count_ones() <= 2);
        let Some(v) = pick else { return false };
        let nb = adj[v];
        for (u, row) in adj.iter_mut().enumerate().take(n) {
            if nb >> u & 1 == 1 {
                *row &= !(1 << v);
            }
        }
        if nb.count_ones() == 2 {
            let a = nb.trailing_zeros() as usize;
            let b = 63 - nb.leading_zeros() as usize;
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj[v] = 0;
        alive &= !(1 << v);
    }
}

pub fn max_degree_within(g: &Graph, mask: u64) -> u32 {
    (0..g.order())
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| (g.rows()[v] & mask).count_ones())
        .max()
        .unwrap_or(0)
}

pub fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = (0..n)
                .tuple_combinations()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn graph_with_permutation(max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(1, max).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation_strategy(n))
    })
}
