//! Structural algorithms: neighbourhoods, degeneracy, greedy independent sets,
//! exact clique/independence numbers, bounded-treewidth tests and the
//! extension properties that drive the harmonious-polynomial identities.

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Bitset, Graph, VertexSet, WideGraph, WIDE_MAX_ORDER};

/// Largest order accepted by [`treewidth_at_most`].
pub const TREEWIDTH_MAX_ORDER: usize = 15;

/// Largest order accepted by the exact clique/independence numbers on a [`WideGraph`].
pub const CLIQUE_MAX_ORDER: usize = 200;

/// `{w : w ~ u and w ~ v}`; `u` and `v` themselves are never members.
pub fn common_neighborhood(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, order: n });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(g.neighbors(u).and(g.neighbors(v)))
}

/// Minimum-degree elimination order and the degeneracy it witnesses.
///
/// Repeatedly removes a vertex of minimum degree in the remaining graph, lowest
/// index first among ties. The largest degree seen at removal is the
/// degeneracy: each vertex has at most that many neighbours later in the
/// returned order, and no smaller bound admits such an ordering.
pub fn degeneracy_ordering(g: &Graph) -> (Vec<usize>, usize) {
    let mut remaining = g.vertex_set();
    let mut order = Vec::with_capacity(g.order());
    let mut degeneracy = 0;
    while !remaining.is_empty() {
        let (v, d) = remaining
            .iter()
            .map(|v| (v, g.neighbors(v).and(remaining).len()))
            .min_by_key(|&(v, d)| (d, v))
            .expect("remaining set is nonempty");
        degeneracy = degeneracy.max(d);
        order.push(v);
        remaining.remove(v);
    }
    (order, degeneracy)
}

pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_ordering(g).1
}

/// Independent set of size at least `ceil(n / (k + 1))` for a `k`-degenerate graph.
///
/// Walks the degeneracy ordering, taking the earliest vertex still present and
/// deleting its closed neighbourhood. Fails if `g` is not `k`-degenerate.
pub fn greedy_independent_set(g: &Graph, k: usize) -> Result<VertexSet> {
    let (ordering, d) = degeneracy_ordering(g);
    if d > k {
        return Err(Error::NotDegenerate { degeneracy: d, k });
    }
    let mut remaining = g.vertex_set();
    let mut chosen = VertexSet::EMPTY;
    for v in ordering {
        if remaining.contains(v) {
            chosen.insert(v);
            remaining = remaining.and_not(g.closed_neighbors(v));
        }
    }
    Ok(chosen)
}

/// Size of a largest clique inside `candidates`, stopping early once `target`
/// is reached. Branch and bound with a greedy-colouring bound.
fn max_clique_within<A: Adjacency>(g: &A, candidates: A::Set, target: usize) -> usize {
    let mut best = 0;
    expand(g, 0, candidates, &mut best, target);
    best
}

fn expand<A: Adjacency>(g: &A, size: usize, candidates: A::Set, best: &mut usize, target: usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    // Greedy colouring: vertices listed by colour class, colours increasing.
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(candidates.len());
    let mut uncolored = candidates;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored;
        while let Some(v) = q.pop_first() {
            q = q.and_not(g.neighbors(v));
            uncolored.remove(v);
            order.push((v, color));
        }
    }
    let mut p = candidates;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best || *best >= target {
            return;
        }
        expand(g, size + 1, p.and(g.neighbors(v)), best, target);
        p.remove(v);
    }
}

/// Clique number: size of a largest clique.
pub fn omega(g: &Graph) -> usize {
    max_clique_within(g, g.vertex_set(), usize::MAX)
}

/// Independence number: `omega` of the complement.
pub fn alpha(g: &Graph) -> usize {
    omega(&g.complement())
}

fn check_wide_order(g: &WideGraph) -> Result<()> {
    if g.order() > CLIQUE_MAX_ORDER {
        return Err(Error::OrderCap {
            op: "clique number",
            order: g.order(),
            cap: CLIQUE_MAX_ORDER,
        });
    }
    const { assert!(WIDE_MAX_ORDER >= CLIQUE_MAX_ORDER) };
    Ok(())
}

/// Clique number on a wide graph (order at most 200).
pub fn omega_wide(g: &WideGraph) -> Result<usize> {
    check_wide_order(g)?;
    Ok(max_clique_within(g, g.vertices(), usize::MAX))
}

/// Independence number on a wide graph (order at most 200).
pub fn alpha_wide(g: &WideGraph) -> Result<usize> {
    check_wide_order(g)?;
    let c = g.complement();
    Ok(max_clique_within(&c, c.vertices(), usize::MAX))
}

/// Decides `treewidth(g) <= k` by memoized search over elimination orderings.
///
/// The state is the set of eliminated vertices; the fill-degree of a vertex
/// is the number of uneliminated vertices it reaches through eliminated ones.
/// A branch fails when the vertex to eliminate has fill-degree above `k`.
pub fn treewidth_at_most(g: &Graph, k: usize) -> Result<bool> {
    let n = g.order();
    if n > TREEWIDTH_MAX_ORDER {
        return Err(Error::OrderCap {
            op: "treewidth test",
            order: n,
            cap: TREEWIDTH_MAX_ORDER,
        });
    }
    if k + 1 >= n {
        return Ok(true);
    }
    // Necessary condition: treewidth <= k implies k-degenerate.
    if degeneracy(g) > k {
        return Ok(false);
    }
    let mut memo = vec![Memo::Unknown; 1 << n];
    Ok(eliminable(g, k, 0, &mut memo))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Memo {
    Unknown,
    Yes,
    No,
}

fn eliminable(g: &Graph, k: usize, eliminated: u64, memo: &mut [Memo]) -> bool {
    let n = g.order();
    let left = n - eliminated.count_ones() as usize;
    if left <= k + 1 {
        return true;
    }
    match memo[eliminated as usize] {
        Memo::Yes => return true,
        Memo::No => return false,
        Memo::Unknown => {}
    }
    let full = g.vertex_set().bits();
    let mut ok = false;
    let mut rest = full & !eliminated;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if fill_degree(g, v, eliminated) <= k && eliminable(g, k, eliminated | 1 << v, memo) {
            ok = true;
            break;
        }
    }
    memo[eliminated as usize] = if ok { Memo::Yes } else { Memo::No };
    ok
}

/// Number of uneliminated vertices reachable from `v` through eliminated ones.
fn fill_degree(g: &Graph, v: usize, eliminated: u64) -> usize {
    let mut visited = 1u64 << v;
    let mut stack = 1u64 << v;
    let mut outside = 0u64;
    while stack != 0 {
        let x = stack.trailing_zeros() as usize;
        stack &= stack - 1;
        let fresh = g.neighbors(x).bits() & !visited;
        visited |= fresh;
        stack |= fresh & eliminated;
        outside |= fresh & !eliminated;
    }
    outside.count_ones() as usize
}

/// Every pair of distinct vertices has a common neighbour.
pub fn has_extension_property(g: &Graph) -> bool {
    has_k_extension_generic(g, 1)
}

/// Every pair of distinct vertices `u, v` has `w_1..w_k` such that both
/// `{u, w_1..w_k}` and `{v, w_1..w_k}` are cliques, i.e. the common
/// neighbourhood of `u` and `v` contains a `k`-clique.
pub fn has_k_extension_property(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter("k-extension needs k >= 1".into()));
    }
    Ok(has_k_extension_generic(g, k))
}

/// [`has_k_extension_property`] on a wide graph.
pub fn has_k_extension_property_wide(g: &WideGraph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter("k-extension needs k >= 1".into()));
    }
    Ok(has_k_extension_generic(g, k))
}

fn has_k_extension_generic<A: Adjacency>(g: &A, k: usize) -> bool {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).and(g.neighbors(v));
            if common.len() < k {
                return false;
            }
            if k > 1 && max_clique_within(g, common, k) < k {
                return false;
            }
        }
    }
    true
}

/// Smallest common-neighbourhood size over all pairs of distinct vertices.
/// `None` for graphs of order 1.
pub fn min_common_neighborhood_wide(g: &WideGraph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.neighbors(u).and(g.neighbors(v)).len();
            best = Some(best.map_or(c, |b| b.min(c)));
        }
    }
    best
}
