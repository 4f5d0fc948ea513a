//! Isomorphism-class enumeration and polynomial censuses.
//!
//! A census buckets every isomorphism class of order `n` by the value of a
//! chosen polynomial and reports how many classes are pinned down by it
//! (`U_P(n)`), how many distinct values occur (per order and cumulatively,
//! `β_P(n)`), and the mate classes.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::graph6_encode;
use crate::harmonious::{harmonious_polynomial, k_harmonious_polynomial, HARMONIOUS_MAX_ORDER};
use crate::invariants::{clique_polynomial, deg_polynomial, independence_polynomial};
use crate::polynomial::{IntPolynomial, PolynomialKey};
use crate::property::{builtin_properties, pq_generating_function, GraphProperty, PQ_MAX_ORDER};

/// Largest order the labeled enumeration accepts.
pub const NATIVE_MAX_ORDER: usize = 8;
/// Largest order a census accepts, with graph6 input above [`NATIVE_MAX_ORDER`].
pub const CENSUS_MAX_ORDER: usize = 10;

/// One representative per isomorphism class of order `n`, as canonical
/// forms in ascending order.
///
/// Labeled graphs are streamed in chunks of the `2^C(n,2)` index space and
/// deduplicated by canonical form. Only labelings whose degrees are
/// nondecreasing in vertex index are canonicalized; sorting the vertices of
/// any graph by degree produces such a labeling, so no class is missed.
pub fn enumerate_canonical_forms(n: usize) -> Result<Vec<CanonicalForm>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > NATIVE_MAX_ORDER {
        return Err(Error::OrderCap {
            op: "native enumeration",
            order: n,
            cap: NATIVE_MAX_ORDER,
        });
    }
    // Column-major pair order puts the pairs of vertex n-1 in the top bits,
    // so an index splits into a graph on 0..n-1 (outer) and the last
    // vertex's neighbourhood (inner).
    let m = n - 1;
    let outer_bits = m * m.saturating_sub(1) / 2;
    let forms = (0..1u64 << outer_bits)
        .into_par_iter()
        .fold(HashSet::new, |mut seen, outer| {
            extend_with_last_vertex(m, outer, &mut seen);
            seen
        })
        .reduce(HashSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        });
    let sorted: BTreeSet<CanonicalForm> = forms.into_iter().collect();
    Ok(sorted.into_iter().collect())
}

fn extend_with_last_vertex(m: usize, outer: u64, seen: &mut HashSet<CanonicalForm>) {
    let mut rows = [0u64; NATIVE_MAX_ORDER];
    let mut bit = 0;
    for j in 1..m {
        for i in 0..j {
            if outer >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    let mut deg = [0u32; NATIVE_MAX_ORDER];
    for v in 0..m {
        deg[v] = rows[v].count_ones();
    }
    // Each degree grows by at most one when the last vertex is added.
    if (1..m).any(|v| deg[v - 1] > deg[v] + 1) {
        return;
    }
    'inner: for t in 0..1u64 << m {
        let mut prev = 0;
        for (v, &dv) in deg[..m].iter().enumerate() {
            let d = dv + (t >> v & 1) as u32;
            if d < prev {
                continue 'inner;
            }
            prev = d;
        }
        if t.count_ones() < prev {
            continue;
        }
        let mut full = rows;
        for (v, row) in full[..m].iter_mut().enumerate() {
            *row |= (t >> v & 1) << m;
        }
        full[m] = t;
        let g = Graph::from_rows_unchecked(full[..=m].to_vec());
        seen.insert(canonical_form(&g));
    }
}

/// [`enumerate_canonical_forms`] as canonical representative graphs.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_canonical_forms(n)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// Which polynomial a census buckets by.
#[derive(Clone)]
pub enum PolynomialKind {
    Deg,
    Ind,
    Clique,
    Harm,
    KHarm(usize),
    Pq(GraphProperty),
}

/// A parsed polynomial selector:
/// `deg | ind | clique | harm | kharm:<k> | pq:<property>`.
#[derive(Clone)]
pub struct PolynomialSpec {
    name: String,
    kind: PolynomialKind,
}

impl PolynomialSpec {
    pub fn parse(s: &str) -> Result<PolynomialSpec> {
        let kind = match s {
            "deg" => PolynomialKind::Deg,
            "ind" => PolynomialKind::Ind,
            "clique" => PolynomialKind::Clique,
            "harm" => PolynomialKind::Harm,
            _ => {
                if let Some(k) = s.strip_prefix("kharm:") {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::InvalidParameter(format!("kharm expects an integer k, got `{k}`")))?;
                    if k == 0 {
                        return Err(Error::InvalidParameter("kharm needs k >= 1".into()));
                    }
                    PolynomialKind::KHarm(k)
                } else if let Some(prop) = s.strip_prefix("pq:") {
                    PolynomialKind::Pq(builtin_properties().get(prop)?)
                } else {
                    return Err(Error::UnknownPolynomial(s.to_string()));
                }
            }
        };
        Ok(PolynomialSpec {
            name: s.to_string(),
            kind,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &PolynomialKind {
        &self.kind
    }

    /// Largest graph order this polynomial is computed for.
    pub fn max_order(&self) -> usize {
        match self.kind {
            PolynomialKind::Deg | PolynomialKind::Ind | PolynomialKind::Clique => crate::graph::MAX_ORDER,
            PolynomialKind::Harm | PolynomialKind::KHarm(_) => HARMONIOUS_MAX_ORDER,
            PolynomialKind::Pq(_) => PQ_MAX_ORDER,
        }
    }

    /// `h_k` needs at least `k` vertices.
    pub fn defined_at(&self, order: usize) -> bool {
        match self.kind {
            PolynomialKind::KHarm(k) => order >= k,
            _ => true,
        }
    }

    pub fn evaluate(&self, g: &Graph) -> Result<IntPolynomial> {
        match &self.kind {
            PolynomialKind::Deg => Ok(deg_polynomial(g)),
            PolynomialKind::Ind => Ok(independence_polynomial(g)),
            PolynomialKind::Clique => Ok(clique_polynomial(g)),
            PolynomialKind::Harm => harmonious_polynomial(g),
            PolynomialKind::KHarm(k) => k_harmonious_polynomial(g, *k),
            PolynomialKind::Pq(q) => pq_generating_function(g, q),
        }
    }
}

impl FromStr for PolynomialSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PolynomialSpec::parse(s)
    }
}

impl fmt::Debug for PolynomialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolynomialSpec({})", self.name)
    }
}

/// Where census graphs come from.
#[derive(Clone, Debug, Default)]
pub struct GraphSource {
    /// Classes read from graph6 input, grouped by order. Orders absent from
    /// the input fall back to native enumeration where possible.
    supplied: BTreeMap<usize, Vec<CanonicalForm>>,
    external: bool,
}

impl GraphSource {
    pub fn native() -> GraphSource {
        GraphSource::default()
    }

    /// Canonicalizes and deduplicates the given graphs.
    pub fn from_graphs(graphs: &[Graph]) -> GraphSource {
        let forms: Vec<CanonicalForm> = graphs.par_iter().map(canonical_form).collect();
        let mut supplied: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
        for f in forms {
            supplied.entry(f.order()).or_default().insert(f);
        }
        GraphSource {
            supplied: supplied
                .into_iter()
                .map(|(n, set)| (n, set.into_iter().collect()))
                .collect(),
            external: true,
        }
    }

    pub fn is_native(&self) -> bool {
        !self.external
    }

    /// Orders present in supplied input.
    pub fn supplied_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.supplied.keys().copied()
    }

    /// Classes of order exactly `n`. Supplied input must contain order `n`
    /// itself; `allow_fallback` permits native enumeration when it does not.
    fn classes(&self, n: usize, allow_fallback: bool) -> Result<Vec<CanonicalForm>> {
        if let Some(forms) = self.supplied.get(&n) {
            return Ok(forms.clone());
        }
        if !self.is_native() && !allow_fallback {
            return Err(Error::InvalidParameter(format!(
                "graph6 input contains no graphs of order {n}"
            )));
        }
        if n > NATIVE_MAX_ORDER {
            return Err(Error::OrderCap {
                op: "native enumeration (supply graph6 input for this order)",
                order: n,
                cap: NATIVE_MAX_ORDER,
            });
        }
        enumerate_canonical_forms(n)
    }
}

/// Graphs of one order sharing a polynomial value, in canonical-form order.
#[derive(Clone, Debug)]
pub struct PolynomialClass {
    pub polynomial: IntPolynomial,
    pub members: Vec<CanonicalForm>,
}

/// Full bucketing of one order.
#[derive(Clone, Debug)]
pub struct Census {
    pub polynomial: String,
    pub order: usize,
    pub total_graphs: usize,
    /// Classes ordered by [`PolynomialKey`].
    pub classes: Vec<PolynomialClass>,
    /// Distinct polynomial values over all orders `1..=order` where the polynomial is defined.
    pub beta_cumulative: usize,
}

/// Summary row of a census.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusReport {
    pub polynomial: String,
    pub n: usize,
    pub total_graphs: usize,
    pub class_count: usize,
    pub beta_cumulative: usize,
    pub unique_count: usize,
    pub fraction_unique: f64,
    pub largest_class_size: usize,
    pub mate_class_count: usize,
}

pub const CENSUS_CSV_HEADER: &str =
    "polynomial,n,total_graphs,class_count,beta_cumulative,unique_count,fraction_unique,largest_class_size,mate_class_count";

impl CensusReport {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.polynomial,
            self.n,
            self.total_graphs,
            self.class_count,
            self.beta_cumulative,
            self.unique_count,
            self.fraction_unique,
            self.largest_class_size,
            self.mate_class_count
        )
    }
}

/// A polynomial value shared by two or more non-isomorphic graphs.
#[derive(Clone, Debug, PartialEq)]
pub struct MateRecord {
    pub polynomial: IntPolynomial,
    /// Canonical representatives in canonical-form order.
    pub members: Vec<Graph>,
}

impl MateRecord {
    pub fn key(&self) -> PolynomialKey {
        self.polynomial.key()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "key": self.polynomial.to_json(),
            "members": self.members.iter().map(graph6_encode).collect::<Vec<_>>(),
        })
    }
}

/// JSON array of mate records.
pub fn mates_to_json(records: &[MateRecord]) -> serde_json::Value {
    serde_json::Value::Array(records.iter().map(MateRecord::to_json).collect())
}

fn bucket(
    spec: &PolynomialSpec,
    forms: &[CanonicalForm],
) -> Result<BTreeMap<PolynomialKey, (IntPolynomial, Vec<usize>)>> {
    let values: Vec<IntPolynomial> = forms
        .par_iter()
        .map(|f| spec.evaluate(&f.to_graph()))
        .collect::<Result<_>>()?;
    let mut buckets: BTreeMap<PolynomialKey, (IntPolynomial, Vec<usize>)> = BTreeMap::new();
    for (i, p) in values.into_iter().enumerate() {
        buckets.entry(p.key()).or_insert_with(|| (p, Vec::new())).1.push(i);
    }
    Ok(buckets)
}

fn check_census_order(spec: &PolynomialSpec, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let cap = spec.max_order().min(CENSUS_MAX_ORDER);
    if n > cap {
        return Err(Error::OrderCap {
            op: "census",
            order: n,
            cap,
        });
    }
    if !spec.defined_at(n) {
        return Err(Error::InvalidParameter(format!(
            "{} is undefined at order {n}",
            spec.name()
        )));
    }
    Ok(())
}

/// Buckets all classes of order `n` by `spec`. Runs on the current rayon
/// pool; the result does not depend on its size.
pub fn run_census(spec: &PolynomialSpec, n: usize, source: &GraphSource) -> Result<Census> {
    check_census_order(spec, n)?;
    let forms = source.classes(n, false)?;
    let buckets = bucket(spec, &forms)?;
    let mut values: BTreeSet<PolynomialKey> = buckets.keys().cloned().collect();
    for lower in (1..n).filter(|&m| spec.defined_at(m)) {
        let lower_forms = source.classes(lower, true)?;
        values.extend(bucket(spec, &lower_forms)?.into_keys());
    }
    let classes = buckets
        .into_values()
        .map(|(polynomial, idx)| PolynomialClass {
            polynomial,
            members: idx.into_iter().map(|i| forms[i].clone()).collect(),
        })
        .collect();
    Ok(Census {
        polynomial: spec.name().to_string(),
        order: n,
        total_graphs: forms.len(),
        classes,
        beta_cumulative: values.len(),
    })
}

impl Census {
    pub fn report(&self) -> CensusReport {
        let sizes: Vec<usize> = self.classes.iter().map(|c| c.members.len()).collect();
        let unique_count = sizes.iter().filter(|&&s| s == 1).count();
        CensusReport {
            polynomial: self.polynomial.clone(),
            n: self.order,
            total_graphs: self.total_graphs,
            class_count: self.classes.len(),
            beta_cumulative: self.beta_cumulative,
            unique_count,
            fraction_unique: if self.total_graphs == 0 {
                0.0
            } else {
                unique_count as f64 / self.total_graphs as f64
            },
            largest_class_size: sizes.iter().copied().max().unwrap_or(0),
            mate_class_count: sizes.iter().filter(|&&s| s >= 2).count(),
        }
    }

    pub fn mates(&self) -> Vec<MateRecord> {
        self.classes
            .iter()
            .filter(|c| c.members.len() >= 2)
            .map(|c| MateRecord {
                polynomial: c.polynomial.clone(),
                members: c.members.iter().map(CanonicalForm::to_graph).collect(),
            })
            .collect()
    }
}

pub fn census(spec: &PolynomialSpec, n: usize, source: &GraphSource) -> Result<CensusReport> {
    Ok(run_census(spec, n, source)?.report())
}

pub fn find_mates(spec: &PolynomialSpec, n: usize, source: &GraphSource) -> Result<Vec<MateRecord>> {
    Ok(run_census(spec, n, source)?.mates())
}
