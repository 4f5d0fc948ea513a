//! Simple labelled graphs stored as per-vertex neighbour bitsets.
//!
//! [`Graph`] holds at most 64 vertices so that every vertex set is a single
//! machine word ([`VertexSet`]). [`WideGraph`] is a 256-bit variant used by the
//! random-graph experiments, which only need neighbourhood statistics and the
//! clique/independence numbers at orders up to 200.
//!
//! The order-0 graph is not constructible; callers that need the empty
//! induced subgraph treat it as a convention (see the polynomial module).

use std::fmt;

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// Largest order a [`WideGraph`] can hold.
pub const WIDE_MAX_ORDER: usize = 256;

/// Fixed-width set of vertex indices.
pub trait Bitset: Copy + Eq + fmt::Debug {
    fn empty() -> Self;
    /// `{0, .., n-1}`.
    fn full(n: usize) -> Self;
    fn contains(&self, v: usize) -> bool;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn and(self, other: Self) -> Self;
    fn or(self, other: Self) -> Self;
    fn and_not(self, other: Self) -> Self;
    fn len(&self) -> usize;
    fn first(&self) -> Option<usize>;

    fn is_empty(&self) -> bool {
        self.first().is_none()
    }

    fn singleton(v: usize) -> Self {
        let mut s = Self::empty();
        s.insert(v);
        s
    }

    /// Removes and returns the smallest element.
    fn pop_first(&mut self) -> Option<usize> {
        let v = self.first()?;
        self.remove(v);
        Some(v)
    }
}

/// A set of vertices of a [`Graph`], one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Bitset for VertexSet {
    fn empty() -> Self {
        VertexSet(0)
    }
    fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }
    #[inline]
    fn and(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }
    #[inline]
    fn or(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }
    #[inline]
    fn and_not(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }
    #[inline]
    fn len(&self) -> usize {
        self.0.count_ones() as usize
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(pub(crate) u64);

impl Iterator for VertexIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// 256-bit vertex set backing [`WideGraph`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct WideSet(pub [u64; 4]);

impl WideSet {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..4).flat_map(move |w| VertexIter(self.0[w]).map(move |b| w * 64 + b))
    }
}

impl Bitset for WideSet {
    fn empty() -> Self {
        WideSet([0; 4])
    }
    fn full(n: usize) -> Self {
        let mut s = [0u64; 4];
        for (w, word) in s.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        WideSet(s)
    }
    #[inline]
    fn contains(&self, v: usize) -> bool {
        v < WIDE_MAX_ORDER && self.0[v / 64] >> (v % 64) & 1 == 1
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    #[inline]
    fn and(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        WideSet([a[0] & b[0], a[1] & b[1], a[2] & b[2], a[3] & b[3]])
    }
    #[inline]
    fn or(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        WideSet([a[0] | b[0], a[1] | b[1], a[2] | b[2], a[3] | b[3]])
    }
    #[inline]
    fn and_not(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        WideSet([a[0] & !b[0], a[1] & !b[1], a[2] & !b[2], a[3] & !b[3]])
    }
    #[inline]
    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

impl fmt::Debug for WideSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Read access to an adjacency structure, shared by [`Graph`] and [`WideGraph`].
pub trait Adjacency {
    type Set: Bitset;
    fn order(&self) -> usize;
    fn neighbors(&self, v: usize) -> Self::Set;

    fn vertices(&self) -> Self::Set {
        Self::Set::full(self.order())
    }
}

/// Immutable simple graph on `1..=64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse into one edge.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidOrder(order));
        }
        let mut adj = vec![0u64; order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { order, adj })
    }

    /// Builds a graph from neighbour bitmasks, checking symmetry and range.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Graph> {
        let order = rows.len();
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidOrder(order));
        }
        let range = VertexSet::full(order).0;
        for (v, &row) in rows.iter().enumerate() {
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            if row & !range != 0 {
                let vertex = (row & !range).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, order });
            }
            for u in VertexIter(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency is not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { order, adj: rows })
    }

    /// Caller guarantees the rows satisfy the graph invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_adjacency(rows.clone()).is_ok());
        Graph {
            order: rows.len(),
            adj: rows,
        }
    }

    /// The edgeless graph `I_n`.
    pub fn edgeless(order: usize) -> Result<Graph> {
        Graph::from_edges(order, &[])
    }

    /// The complete graph `K_n`.
    pub fn complete(order: usize) -> Result<Graph> {
        Graph::edgeless(order).map(|g| g.complement())
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(order: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Graph::from_edges(order, &edges)
    }

    /// Cycle `0 - 1 - .. - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(order: usize) -> Result<Graph> {
        if order < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {order}"
            )));
        }
        let mut edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        edges.push((order - 1, 0));
        Graph::from_edges(order, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u] >> v & 1 == 1
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in increasing lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            let above = !((2u64 << u).wrapping_sub(1));
            VertexIter(self.adj[u] & above).map(move |v| (u, v))
        })
    }

    /// Edge present in the result iff absent here (for distinct endpoints).
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order).0;
        let adj = (0..self.order).map(|v| full & !self.adj[v] & !(1u64 << v)).collect();
        Graph { order: self.order, adj }
    }

    /// `G[A]`, with the members of `a` relabelled `0..|a|` in increasing order.
    pub fn induced_subgraph(&self, a: VertexSet) -> Result<Graph> {
        if !a.is_subset(self.vertex_set()) {
            return Err(Error::SetOutOfRange {
                bits: a.0,
                order: self.order,
            });
        }
        if a.0 == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Ok(self.induced_unchecked(a))
    }

    /// `G[A]` for a nonempty in-range set.
    pub(crate) fn induced_unchecked(&self, a: VertexSet) -> Graph {
        let members: Vec<usize> = a.iter().collect();
        let adj = members.iter().map(|&v| compress_bits(self.adj[v], a.0)).collect();
        Graph {
            order: members.len(),
            adj,
        }
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order;
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has order {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameter(format!("{perm:?} is not a permutation")));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; n];
        for (u, &pu) in perm.iter().enumerate() {
            for v in VertexIter(self.adj[u]) {
                adj[pu] |= 1 << perm[v];
            }
        }
        Ok(Graph { order: n, adj })
    }

    /// `G ⊎ H`: the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order + other.order;
        if n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let shift = self.order;
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(other.adj.iter().map(|r| r << shift))
            .collect();
        Ok(Graph { order: n, adj })
    }
}

impl Adjacency for Graph {
    type Set = VertexSet;
    fn order(&self) -> usize {
        self.order
    }
    #[inline]
    fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &edges)
            .finish()
    }
}

/// Packs the bits of `value` selected by `mask` into the low bits, in order.
#[inline]
fn compress_bits(value: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in VertexIter(mask).enumerate() {
        out |= (value >> v & 1) << i;
    }
    out
}

/// Simple graph on up to 256 vertices, used by the sampling experiments.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WideGraph {
    order: usize,
    adj: Vec<WideSet>,
}

impl WideGraph {
    pub fn edgeless(order: usize) -> Result<WideGraph> {
        if order == 0 || order > WIDE_MAX_ORDER {
            return Err(Error::InvalidOrder(order));
        }
        Ok(WideGraph {
            order,
            adj: vec![WideSet::empty(); order],
        })
    }

    /// Adds the edge `{u, v}`; `u != v`, both in range.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn neighbors(&self, v: usize) -> WideSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn complement(&self) -> WideGraph {
        let full = WideSet::full(self.order);
        let adj = (0..self.order)
            .map(|v| full.and_not(self.adj[v]).and_not(WideSet::singleton(v)))
            .collect();
        WideGraph { order: self.order, adj }
    }

    /// Narrows to a [`Graph`] when the order allows it.
    pub fn to_graph(&self) -> Result<Graph> {
        if self.order > MAX_ORDER {
            return Err(Error::InvalidOrder(self.order));
        }
        Ok(Graph::from_rows_unchecked(self.adj.iter().map(|s| s.0[0]).collect()))
    }
}

impl From<&Graph> for WideGraph {
    fn from(g: &Graph) -> WideGraph {
        WideGraph {
            order: g.order,
            adj: g.adj.iter().map(|&r| WideSet([r, 0, 0, 0])).collect(),
        }
    }
}

impl Adjacency for WideGraph {
    type Set = WideSet;
    fn order(&self) -> usize {
        self.order
    }
    #[inline]
    fn neighbors(&self, v: usize) -> WideSet {
        self.adj[v]
    }
}
