//! Exact graph-polynomial census engine.
//!
//! Small simple graphs ([`Graph`], at most 64 vertices) carry the polynomial
//! invariants (degree, independence, clique, `P_Q`, harmonious). The
//! [`census`] module enumerates isomorphism classes and measures how often a
//! polynomial pins a graph down; [`random`] samples `G(n, p)` to check the
//! probabilistic facts behind the asymptotic statements.

pub mod bounds;
pub mod canon;
pub mod census;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harmonious;
pub mod invariants;
pub mod parallel;
pub mod polynomial;
pub mod property;
pub mod random;
pub mod structure;

pub use bounds::{class_bound_ratio, uniqueness_bound_ratio, LogBase};
pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use census::{
    census, enumerate_nonisomorphic, find_mates, run_census, CensusReport, GraphSource, MateRecord, PolynomialSpec,
};
pub use error::{Error, Result};
pub use graph::{Adjacency, Bitset, Graph, VertexSet, WideGraph, WideSet, MAX_ORDER};
pub use graph6::{graph6_decode, graph6_encode, read_graph6};
pub use harmonious::{count_harmonious_colorings, harmonious_polynomial, k_harmonious_polynomial};
pub use invariants::{clique_polynomial, deg_polynomial, independence_polynomial};
pub use polynomial::{falling_factorial, IntPolynomial, PolynomialKey};
pub use property::{builtin_properties, pq_generating_function, property_complement, Divisor, GraphProperty};
pub use random::{sample_gnp, Probability, RandomStats};
pub use structure::{alpha, degeneracy, degeneracy_ordering, greedy_independent_set, omega, treewidth_at_most};
