//! Degree, independence and clique polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::graph::Graph;
use crate::polynomial::IntPolynomial;

/// `Deg(G, x) = sum over v of x^deg(v)`.
pub fn deg_polynomial(g: &Graph) -> IntPolynomial {
    let mut counts = vec![0u64; g.order()];
    for v in 0..g.order() {
        counts[g.degree(v)] += 1;
    }
    IntPolynomial::new(counts.into_iter().map(BigInt::from).collect())
}

/// `Ind(G, x)`: coefficient `i` counts independent sets of size `i`, the empty set included.
///
/// Uses `Ind(S) = Ind(S - v) + x * Ind(S - N[v])` on vertex masks, `v` the
/// lowest vertex of `S`, memoized per call.
pub fn independence_polynomial(g: &Graph) -> IntPolynomial {
    let mut memo = HashMap::new();
    let counts = ind_counts(g, g.vertex_set().bits(), &mut memo);
    IntPolynomial::new(counts.to_vec())
}

fn ind_counts<'m>(g: &Graph, set: u64, memo: &'m mut HashMap<u64, Vec<BigInt>>) -> &'m Vec<BigInt> {
    if !memo.contains_key(&set) {
        let value = if set == 0 {
            vec![BigInt::from(1)]
        } else {
            let v = set.trailing_zeros() as usize;
            let without = ind_counts(g, set & !(1 << v), memo).clone();
            let rest = set & !g.closed_neighbors(v).bits();
            let with = ind_counts(g, rest, memo);
            let mut out = without;
            if out.len() < with.len() + 1 {
                out.resize(with.len() + 1, BigInt::from(0));
            }
            for (i, c) in with.iter().enumerate() {
                out[i + 1] += c;
            }
            out
        };
        memo.insert(set, value);
    }
    &memo[&set]
}

/// `Cl(G, x)`: coefficient `i` counts cliques of size `i`, the empty set included.
pub fn clique_polynomial(g: &Graph) -> IntPolynomial {
    independence_polynomial(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{alpha, omega};

    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    fn union(a: &Graph, b: &Graph) -> Graph {
        a.disjoint_union(b).unwrap()
    }

    #[test]
    fn deg_examples() {
        assert_eq!(
            deg_polynomial(&Graph::complete(3).unwrap()),
            IntPolynomial::from_i64s(&[0, 0, 3])
        );
        assert_eq!(deg_polynomial(&Graph::edgeless(4).unwrap()), IntPolynomial::constant(4));
        let p5 = Graph::path(5).unwrap();
        let k3k2 = union(&Graph::complete(3).unwrap(), &Graph::complete(2).unwrap());
        let expected = IntPolynomial::from_i64s(&[0, 2, 3]);
        assert_eq!(deg_polynomial(&p5), expected);
        assert_eq!(deg_polynomial(&k3k2), expected);
    }

    #[test]
    fn ind_examples() {
        for n in 1..7 {
            assert_eq!(
                independence_polynomial(&Graph::complete(n).unwrap()),
                IntPolynomial::from_i64s(&[1, n as i64])
            );
        }
        let mate = IntPolynomial::from_i64s(&[1, 4, 2]);
        assert_eq!(independence_polynomial(&Graph::cycle(4).unwrap()), mate);
        assert_eq!(independence_polynomial(&paw()), mate);

        let mate = IntPolynomial::from_i64s(&[1, 4, 3]);
        let k3k1 = union(&Graph::complete(3).unwrap(), &Graph::edgeless(1).unwrap());
        assert_eq!(independence_polynomial(&Graph::path(4).unwrap()), mate);
        assert_eq!(independence_polynomial(&k3k1), mate);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(
            clique_polynomial(&Graph::complete(3).unwrap()),
            IntPolynomial::from_i64s(&[1, 3, 3, 1])
        );
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let p3k1 = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let mate = IntPolynomial::from_i64s(&[1, 4, 2]);
        assert_eq!(clique_polynomial(&two_k2), mate);
        assert_eq!(clique_polynomial(&p3k1), mate);
        let g = paw();
        assert_eq!(clique_polynomial(&g).coefficient(2), BigInt::from(g.edge_count()));
    }

    #[test]
    fn degrees_match_alpha_and_omega() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(independence_polynomial(&g).degree(), Some(alpha(&g)));
        assert_eq!(clique_polynomial(&g).degree(), Some(omega(&g)));
    }

    #[test]
    fn large_order_coefficients_exceed_u64() {
        // Ind(I_64) = (1 + x)^64; the middle coefficient C(64, 32) fits, the sum does not.
        let i64g = Graph::edgeless(64).unwrap();
        let p = independence_polynomial(&i64g);
        assert_eq!(p.coefficient(32).to_string(), "1832624140942590534");
        assert_eq!(p.evaluate(1).to_string(), "18446744073709551616");
    }
}
