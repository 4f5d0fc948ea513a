//! Graph properties and the induced-subgraph generating functions `P_Q`.
//!
//! A [`GraphProperty`] is a named decidable predicate with metadata: whether
//! the empty vertex set counts as a member (this fixes the constant term of
//! `P_Q`), whether membership is closed under induced subgraphs, and an
//! optional independence or clique function `ceil(n / a)`.
//!
//! `P_Q(G; x)` sums `x^|A|` over all `A ⊆ V(G)` with `G[A] ∈ Q`, `A = V`
//! included.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{Bitset, Graph, VertexSet};
use crate::polynomial::IntPolynomial;
use crate::structure::{degeneracy, treewidth_at_most};

/// Largest order accepted by [`pq_generating_function`].
pub const PQ_MAX_ORDER: usize = 24;

/// Guaranteed independent set (or clique) of size `ceil(n / a)` in every member of order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Divisor {
    Independence(usize),
    Clique(usize),
}

impl Divisor {
    fn complement(self) -> Divisor {
        match self {
            Divisor::Independence(a) => Divisor::Clique(a),
            Divisor::Clique(a) => Divisor::Independence(a),
        }
    }

    fn scale(self, k: usize) -> Divisor {
        match self {
            Divisor::Independence(a) => Divisor::Independence(a * k),
            Divisor::Clique(a) => Divisor::Clique(a * k),
        }
    }
}

type Predicate = dyn Fn(&Graph) -> Result<bool> + Send + Sync;

/// A named graph class `Q`.
#[derive(Clone)]
pub struct GraphProperty {
    name: String,
    membership: Arc<Predicate>,
    empty_graph_member: bool,
    hereditary: bool,
    divisor: Option<Divisor>,
}

impl GraphProperty {
    pub fn new<F>(
        name: impl Into<String>,
        empty_graph_member: bool,
        hereditary: bool,
        divisor: Option<Divisor>,
        membership: F,
    ) -> Self
    where
        F: Fn(&Graph) -> Result<bool> + Send + Sync + 'static,
    {
        GraphProperty {
            name: name.into(),
            membership: Arc::new(membership),
            empty_graph_member,
            hereditary,
            divisor,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        (self.membership)(g)
    }

    pub fn empty_graph_member(&self) -> bool {
        self.empty_graph_member
    }

    pub fn hereditary(&self) -> bool {
        self.hereditary
    }

    pub fn divisor(&self) -> Option<Divisor> {
        self.divisor
    }
}

impl fmt::Debug for GraphProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphProperty")
            .field("name", &self.name)
            .field("empty_graph_member", &self.empty_graph_member)
            .field("hereditary", &self.hereditary)
            .field("divisor", &self.divisor)
            .finish()
    }
}

pub fn edgeless() -> GraphProperty {
    GraphProperty::new("edgeless", true, true, Some(Divisor::Independence(1)), |g| {
        Ok(g.edge_count() == 0)
    })
}

pub fn complete() -> GraphProperty {
    GraphProperty::new("complete", true, true, Some(Divisor::Clique(1)), |g| {
        let n = g.order();
        Ok(g.edge_count() == n * (n - 1) / 2)
    })
}

/// Every induced subgraph has a vertex of degree at most `k`.
pub fn k_degenerate(k: usize) -> GraphProperty {
    GraphProperty::new(
        format!("k_degenerate:{k}"),
        true,
        true,
        Some(Divisor::Independence(k + 1)),
        move |g| Ok(degeneracy(g) <= k),
    )
}

/// Treewidth at most `k`. Candidates that are not `k`-degenerate are rejected
/// before the exact test, so only those pass on to the order cap.
pub fn treewidth_le(k: usize) -> GraphProperty {
    GraphProperty::new(
        format!("treewidth_le:{k}"),
        true,
        true,
        Some(Divisor::Independence(k + 1)),
        move |g| {
            if k + 1 >= g.order() {
                return Ok(true);
            }
            if degeneracy(g) > k {
                return Ok(false);
            }
            treewidth_at_most(g, k)
        },
    )
}

pub fn max_degree_le(k: usize) -> GraphProperty {
    GraphProperty::new(
        format!("max_degree_le:{k}"),
        true,
        true,
        Some(Divisor::Independence(k + 1)),
        move |g| Ok((0..g.order()).all(|v| g.degree(v) <= k)),
    )
}

/// Properly colourable with at most `k` colours.
pub fn k_colorable(k: usize) -> Result<GraphProperty> {
    if k == 0 {
        return Err(Error::InvalidParameter("k_colorable needs k >= 1".into()));
    }
    Ok(GraphProperty::new(
        format!("k_colorable:{k}"),
        true,
        true,
        Some(Divisor::Independence(k)),
        move |g| partition_into(g, k, true, &|g, class| Ok(independent(g, class))),
    ))
}

/// Vertex set splits into at most `k` classes, each inducing a member of `q`.
pub fn c_colorable(q: GraphProperty, k: usize) -> Result<GraphProperty> {
    if k == 0 {
        return Err(Error::InvalidParameter("c_colorable needs k >= 1".into()));
    }
    let name = format!("c_colorable:{k}:{}", q.name);
    let divisor = q.divisor.map(|d| d.scale(k));
    let hereditary = q.hereditary;
    let inner = q.clone();
    Ok(GraphProperty::new(name, true, hereditary, divisor, move |g| {
        partition_into(g, k, hereditary, &|g, class| {
            inner.contains(&g.induced_unchecked(class))
        })
    }))
}

fn independent(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| g.neighbors(v).and(set).is_empty())
}

/// Backtracking search for a partition of `V(g)` into at most `k` nonempty
/// classes accepted by `class_ok`, assigning vertices in index order.
///
/// With `prune` set, `class_ok` is checked on every partial class, which is
/// exact only for hereditary classes. Complete classes are always re-checked.
fn partition_into(
    g: &Graph,
    k: usize,
    prune: bool,
    class_ok: &dyn Fn(&Graph, VertexSet) -> Result<bool>,
) -> Result<bool> {
    fn go(
        g: &Graph,
        v: usize,
        k: usize,
        classes: &mut Vec<VertexSet>,
        class_ok: &dyn Fn(&Graph, VertexSet) -> Result<bool>,
        prune: bool,
    ) -> Result<bool> {
        if v == g.order() {
            for &c in classes.iter() {
                if !class_ok(g, c)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        for c in 0..classes.len() {
            let mut grown = classes[c];
            grown.insert(v);
            if prune && !class_ok(g, grown)? {
                continue;
            }
            let saved = classes[c];
            classes[c] = grown;
            let found = go(g, v + 1, k, classes, class_ok, prune)?;
            classes[c] = saved;
            if found {
                return Ok(true);
            }
        }
        if classes.len() < k {
            classes.push(VertexSet::from_vertices([v]));
            let ok = !prune || class_ok(g, classes[classes.len() - 1])?;
            let found = ok && go(g, v + 1, k, classes, class_ok, prune)?;
            classes.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
    go(g, 0, k, &mut Vec::with_capacity(k), class_ok, prune)
}

/// `Ĉ`: `g` is a member iff its complement is a member of `q`.
pub fn property_complement(q: &GraphProperty) -> GraphProperty {
    let inner = q.clone();
    let name = match q.name.strip_prefix("complement:") {
        Some(rest) => rest.to_string(),
        None => format!("complement:{}", q.name),
    };
    GraphProperty::new(
        name,
        q.empty_graph_member,
        q.hereditary,
        q.divisor.map(Divisor::complement),
        move |g| inner.contains(&g.complement()),
    )
}

/// Parses property selectors. Grammar:
///
/// ```text
/// edgeless | complete | k_degenerate:K | treewidth_le:K | max_degree_le:K
///   | k_colorable:K | c_colorable:K:<property> | complement:<property>
/// ```
#[derive(Debug, Clone, Copy, Default)]
pub struct PropertyRegistry;

/// The built-in property families.
pub fn builtin_properties() -> PropertyRegistry {
    PropertyRegistry
}

impl PropertyRegistry {
    pub fn families(&self) -> &'static [&'static str] {
        &[
            "edgeless",
            "complete",
            "k_degenerate:K",
            "treewidth_le:K",
            "max_degree_le:K",
            "k_colorable:K",
            "c_colorable:K:<property>",
            "complement:<property>",
        ]
    }

    pub fn get(&self, spec: &str) -> Result<GraphProperty> {
        let unknown = || Error::UnknownProperty(spec.to_string());
        let (head, rest) = match spec.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (spec, None),
        };
        let int = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        match (head, rest) {
            ("edgeless", None) => Ok(edgeless()),
            ("complete", None) => Ok(complete()),
            ("k_degenerate", Some(k)) => Ok(k_degenerate(int(k)?)),
            ("treewidth_le", Some(k)) => Ok(treewidth_le(int(k)?)),
            ("max_degree_le", Some(k)) => Ok(max_degree_le(int(k)?)),
            ("k_colorable", Some(k)) => k_colorable(int(k)?),
            ("c_colorable", Some(r)) => {
                let (k, inner) = r.split_once(':').ok_or_else(unknown)?;
                c_colorable(self.get(inner)?, int(k)?)
            }
            ("complement", Some(inner)) => Ok(property_complement(&self.get(inner)?)),
            _ => Err(unknown()),
        }
    }
}

/// `P_Q(G; x)`: coefficient `i` counts `i`-subsets `A` with `G[A] ∈ Q`.
///
/// Subsets are enumerated depth-first in increasing vertex order; for
/// hereditary `Q` the extensions of a failing set are skipped.
pub fn pq_generating_function(g: &Graph, q: &GraphProperty) -> Result<IntPolynomial> {
    let n = g.order();
    if n > PQ_MAX_ORDER {
        return Err(Error::OrderCap {
            op: "P_Q generating function",
            order: n,
            cap: PQ_MAX_ORDER,
        });
    }
    let mut counts = vec![0u64; n + 1];
    if q.empty_graph_member {
        counts[0] = 1;
    }
    fn dfs(g: &Graph, q: &GraphProperty, start: usize, set: VertexSet, counts: &mut [u64]) -> Result<()> {
        for v in start..g.order() {
            let mut grown = set;
            grown.insert(v);
            if q.contains(&g.induced_unchecked(grown))? {
                counts[grown.len()] += 1;
                dfs(g, q, v + 1, grown, counts)?;
            } else if !q.hereditary {
                dfs(g, q, v + 1, grown, counts)?;
            }
        }
        Ok(())
    }
    dfs(g, q, 0, VertexSet::EMPTY, &mut counts)?;
    Ok(IntPolynomial::new(counts.into_iter().map(BigInt::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{clique_polynomial, independence_polynomial};
    use crate::structure::alpha;

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0..1u64 << pairs.len()).map(move |idx| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| idx >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    /// Forest check by union-find, independent of the treewidth search.
    fn is_forest(g: &Graph) -> bool {
        let mut parent: Vec<usize> = (0..g.order()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for (u, v) in g.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    #[test]
    fn edgeless_and_complete_reproduce_ind_and_cl() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                assert_eq!(
                    pq_generating_function(&g, &edgeless()).unwrap(),
                    independence_polynomial(&g)
                );
                assert_eq!(pq_generating_function(&g, &complete()).unwrap(), clique_polynomial(&g));
            }
        }
    }

    #[test]
    fn triangle_with_forest_property_drops_the_full_set() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            pq_generating_function(&k3, &treewidth_le(1)).unwrap(),
            IntPolynomial::from_i64s(&[1, 3, 3])
        );
    }

    #[test]
    fn complement_examples() {
        let co_edgeless = property_complement(&edgeless());
        let comp = complete();
        for n in 1..=5 {
            for g in all_graphs(n) {
                assert_eq!(co_edgeless.contains(&g).unwrap(), comp.contains(&g).unwrap());
            }
        }
        let q = k_degenerate(1);
        let qq = property_complement(&property_complement(&q));
        assert_eq!(qq.name(), q.name());
        for n in 1..=5 {
            for g in all_graphs(n) {
                assert_eq!(qq.contains(&g).unwrap(), q.contains(&g).unwrap());
            }
        }
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            pq_generating_function(&c4, &property_complement(&complete())).unwrap(),
            IntPolynomial::from_i64s(&[1, 4, 2])
        );
    }

    #[test]
    fn complement_duality_of_pq() {
        let q = treewidth_le(1);
        let cq = property_complement(&q);
        for g in all_graphs(5).step_by(7) {
            assert_eq!(
                pq_generating_function(&g, &cq).unwrap(),
                pq_generating_function(&g.complement(), &q).unwrap()
            );
        }
    }

    #[test]
    fn builtin_examples() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(k_degenerate(1).contains(&tree).unwrap());

        let two_col = c_colorable(edgeless(), 2).unwrap();
        assert!(two_col.contains(&Graph::cycle(4).unwrap()).unwrap());
        assert!(!two_col.contains(&Graph::cycle(5).unwrap()).unwrap());

        assert!(!treewidth_le(2).contains(&Graph::complete(4).unwrap()).unwrap());
        assert!(treewidth_le(1).contains(&tree).unwrap());
        assert!(k_colorable(3).unwrap().contains(&Graph::cycle(5).unwrap()).unwrap());
        assert!(!k_colorable(3).unwrap().contains(&Graph::complete(4).unwrap()).unwrap());
        assert!(k_colorable(0).is_err());
    }

    #[test]
    fn registry_parses_selectors() {
        let r = builtin_properties();
        for spec in [
            "edgeless",
            "complete",
            "k_degenerate:2",
            "treewidth_le:1",
            "max_degree_le:3",
            "k_colorable:2",
            "c_colorable:2:complete",
            "complement:k_degenerate:1",
        ] {
            assert_eq!(r.get(spec).unwrap().name(), spec);
        }
        for bad in [
            "",
            "nope",
            "k_degenerate",
            "k_degenerate:x",
            "c_colorable:2",
            "edgeless:3",
        ] {
            assert!(matches!(r.get(bad), Err(Error::UnknownProperty(_))), "{bad}");
        }
        assert_eq!(r.families().len(), 8);
    }

    #[test]
    fn divisors_follow_the_rules() {
        let r = builtin_properties();
        let d = |s: &str| r.get(s).unwrap().divisor();
        assert_eq!(d("edgeless"), Some(Divisor::Independence(1)));
        assert_eq!(d("complete"), Some(Divisor::Clique(1)));
        assert_eq!(d("k_degenerate:2"), Some(Divisor::Independence(3)));
        assert_eq!(d("treewidth_le:2"), Some(Divisor::Independence(3)));
        assert_eq!(d("max_degree_le:4"), Some(Divisor::Independence(5)));
        assert_eq!(d("k_colorable:3"), Some(Divisor::Independence(3)));
        assert_eq!(d("c_colorable:2:k_degenerate:1"), Some(Divisor::Independence(4)));
        assert_eq!(d("complement:treewidth_le:1"), Some(Divisor::Clique(2)));
    }

    /// Spot check of the metadata on every graph of order <= 5.
    #[test]
    fn hereditary_and_divisor_metadata_hold() {
        let r = builtin_properties();
        let specs = [
            "edgeless",
            "complete",
            "k_degenerate:1",
            "k_degenerate:2",
            "treewidth_le:1",
            "treewidth_le:2",
            "max_degree_le:2",
            "k_colorable:2",
            "c_colorable:2:complete",
            "complement:k_degenerate:1",
        ];
        for spec in specs {
            let q = r.get(spec).unwrap();
            for n in 1..=5 {
                for g in all_graphs(n) {
                    if !q.contains(&g).unwrap() {
                        continue;
                    }
                    if q.hereditary() && n > 1 {
                        for v in 0..n {
                            let rest = g.vertex_set().and_not(VertexSet::from_vertices([v]));
                            assert!(q.contains(&g.induced_subgraph(rest).unwrap()).unwrap(), "{spec}");
                        }
                    }
                    let need = |a: usize| n.div_ceil(a);
                    match q.divisor() {
                        Some(Divisor::Independence(a)) => assert!(alpha(&g) >= need(a), "{spec}"),
                        Some(Divisor::Clique(a)) => {
                            assert!(crate::structure::omega(&g) >= need(a), "{spec}")
                        }
                        None => {}
                    }
                }
            }
        }
    }

    #[test]
    fn treewidth_one_is_forest() {
        let q = treewidth_le(1);
        for n in 1..=6 {
            for g in all_graphs(n) {
                assert_eq!(q.contains(&g).unwrap(), is_forest(&g));
            }
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = Graph::edgeless(25).unwrap();
        assert!(matches!(
            pq_generating_function(&g, &edgeless()),
            Err(Error::OrderCap { .. })
        ));
        let g = Graph::edgeless(24).unwrap();
        let p = pq_generating_function(&g, &max_degree_le(0)).unwrap();
        assert_eq!(p.evaluate(1), BigInt::from(1u64 << 24));
    }

    #[test]
    fn treewidth_cap_propagates_for_unexcludable_candidates() {
        // A 2-degenerate graph on 16 vertices cannot be settled by the degeneracy
        // bound, so the treewidth cap surfaces as an error.
        let g = Graph::cycle(16).unwrap();
        assert_eq!(treewidth_le(1).contains(&g), Ok(false));
        let r = treewidth_le(2).contains(&g);
        assert!(matches!(r, Err(Error::OrderCap { .. })), "{r:?}");
    }
}
