//! Brute-force references that share no code with the library's
//! canonical labeling, polynomial or structure routines.

use itertools::Itertools;
use polymate::Graph;

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

/// Minimum adjacency code over all relabelings.
pub fn brute_canonical(g: &Graph) -> u64 {
    let n = g.order();
    (0..n)
        .permutations(n)
        .map(|perm| {
            (0..n)
                .tuple_combinations()
                .enumerate()
                .filter(|(_, (i, j))| g.has_edge(perm[*i], perm[*j]))
                .fold(0u64, |code, (bit, _)| code | 1 << bit)
        })
        .min()
        .unwrap()
}

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

pub fn is_forest(g: &Graph, mask: u64) -> bool {
    // A forest on m vertices with c components has m - c edges.
    let m = mask.count_ones() as usize;
    let edges = g
        .edges()
        .filter(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .count();
    let mut seen = 0u64;
    let mut components = 0;
    for s in (0..g.order()).filter(|&v| mask >> v & 1 == 1) {
        if seen >> s & 1 == 1 {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen |= 1 << s;
        while let Some(v) = stack.pop() {
            let mut next = g.rows()[v] & mask & !seen;
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    edges + components == m
}

/// Series-parallel reduction decides treewidth at most 2.
pub fn treewidth_at_most_two(g: &Graph, mask: u64) -> bool {
    let n = g.order();
    let mut adj: Vec<u64> = (0..n).map(|v| g.rows()[v] & mask).collect();
    let mut alive = mask;
    while alive != 0 {
        let Some(v) = (0..n).find(|&v| alive >> v & 1 == 1 && adj[v].count_ones() <= 2) else {
            return false;
        };
        let nb = adj[v];
        for u in (0..n).filter(|&u| nb >> u & 1 == 1) {
            adj[u] &= !(1 << v);
        }
        if nb.count_ones() == 2 {
            let (a, b) = (nb.trailing_zeros() as usize, 63 - nb.leading_zeros() as usize);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj[v] = 0;
        alive &= !(1 << v);
    }
    true
}

pub fn max_degree_within(g: &Graph, mask: u64) -> u32 {
    (0..g.order())
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| (g.rows()[v] & mask).count_ones())
        .max()
        .unwrap_or(0)
}
