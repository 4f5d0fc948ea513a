//! Harmonious and k-harmonious colouring polynomials.
//!
//! A colouring with `λ` colours is determined by the partition of `V` into
//! its nonempty colour classes plus an injective assignment of colours to
//! classes. Whether a colouring is (k-)harmonious depends only on the
//! partition, so the count is `sum_j a_j * λ(λ-1)..(λ-j+1)` where `a_j` counts
//! admissible partitions into `j` classes. This keeps the computation in
//! exact integer arithmetic with no interpolation.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::{falling_factorial, IntPolynomial};

/// Largest order accepted by the partition enumerations.
pub const HARMONIOUS_MAX_ORDER: usize = 10;

fn check_order(g: &Graph, op: &'static str) -> Result<()> {
    if g.order() > HARMONIOUS_MAX_ORDER {
        return Err(Error::OrderCap {
            op,
            order: g.order(),
            cap: HARMONIOUS_MAX_ORDER,
        });
    }
    Ok(())
}

/// `sum_j counts[j] * λ^(j)` in the monomial basis.
fn from_falling_basis(counts: &[u64]) -> IntPolynomial {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(IntPolynomial::zero(), |acc, (j, &c)| {
            &acc + &(&falling_factorial(j) * &IntPolynomial::constant(BigInt::from(c)))
        })
}

/// `χ_harm(G, λ)`: proper colourings in which every colour pair occurs on at most one edge.
pub fn harmonious_polynomial(g: &Graph) -> Result<IntPolynomial> {
    check_order(g, "harmonious polynomial")?;
    let n = g.order();
    let mut search = HarmSearch {
        g,
        class_of: [0u8; HARMONIOUS_MAX_ORDER],
        members: [0u64; HARMONIOUS_MAX_ORDER],
        pairs: [0u16; HARMONIOUS_MAX_ORDER],
        classes: 0,
        counts: vec![0; n + 1],
    };
    search.assign(0);
    Ok(from_falling_basis(&search.counts))
}

struct HarmSearch<'a> {
    g: &'a Graph,
    class_of: [u8; HARMONIOUS_MAX_ORDER],
    members: [u64; HARMONIOUS_MAX_ORDER],
    /// `pairs[c]` has bit `d` set once an edge joins classes `c` and `d`.
    pairs: [u16; HARMONIOUS_MAX_ORDER],
    classes: usize,
    counts: Vec<u64>,
}

impl HarmSearch<'_> {
    fn assign(&mut self, v: usize) {
        if v == self.g.order() {
            self.counts[self.classes] += 1;
            return;
        }
        let earlier = self.g.neighbors(v).bits() & ((1u64 << v) - 1);
        for c in 0..=self.classes {
            if self.members[c] & earlier != 0 {
                continue;
            }
            // Classes touched by v's edges must be distinct and unused with c.
            let mut touched = 0u16;
            let mut ok = true;
            let mut it = earlier;
            while it != 0 {
                let u = it.trailing_zeros() as usize;
                it &= it - 1;
                let d = self.class_of[u] as usize;
                if touched >> d & 1 == 1 || self.pairs[c] >> d & 1 == 1 {
                    ok = false;
                    break;
                }
                touched |= 1 << d;
            }
            if !ok {
                continue;
            }
            let saved = self.pairs;
            self.pairs[c] |= touched;
            let mut t = touched;
            while t != 0 {
                let d = t.trailing_zeros() as usize;
                t &= t - 1;
                self.pairs[d] |= 1 << c;
            }
            let opened = c == self.classes;
            if opened {
                self.classes += 1;
            }
            self.members[c] |= 1 << v;
            self.class_of[v] = c as u8;
            self.assign(v + 1);
            self.members[c] &= !(1 << v);
            if opened {
                self.classes -= 1;
            }
            self.pairs = saved;
        }
    }
}

/// Number of harmonious colourings `V -> {0..colors-1}`, by direct enumeration
/// of colour maps with the proper and pair-uniqueness checks applied as
/// vertices are coloured.
pub fn count_harmonious_colorings(g: &Graph, colors: usize) -> BigInt {
    fn go(g: &Graph, v: usize, colors: usize, color: &mut Vec<usize>, used: &mut Vec<(usize, usize)>) -> u128 {
        if v == g.order() {
            return 1;
        }
        let mut total = 0u128;
        for c in 0..colors {
            let mark = used.len();
            let mut ok = true;
            for u in g.neighbors(v).iter().filter(|&u| u < v) {
                let d = color[u];
                let pair = (c.min(d), c.max(d));
                if d == c || used.contains(&pair) {
                    ok = false;
                    break;
                }
                used.push(pair);
            }
            if ok {
                color.push(c);
                total += go(g, v + 1, colors, color, used);
                color.pop();
            }
            used.truncate(mark);
        }
        total
    }
    BigInt::from(go(g, 0, colors, &mut Vec::with_capacity(g.order()), &mut Vec::new()))
}

/// `h_k(G, λ)`: proper colourings in which no two distinct `k`-cliques carry
/// the same colour set. `h_2` is the harmonious polynomial; `h_1` is `λ^(n)`.
pub fn k_harmonious_polynomial(g: &Graph, k: usize) -> Result<IntPolynomial> {
    check_order(g, "k-harmonious polynomial")?;
    let n = g.order();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k-harmonious polynomial needs 1 <= k <= {n}, got {k}"
        )));
    }
    // k-cliques grouped by their largest vertex, which is where they complete.
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); n];
    for clique in k_cliques(g, k) {
        let top = 63 - clique.leading_zeros() as usize;
        closing[top].push(clique);
    }
    let mut search = KHarmSearch {
        g,
        closing,
        class_of: [0u8; HARMONIOUS_MAX_ORDER],
        members: [0u64; HARMONIOUS_MAX_ORDER],
        seen: vec![false; 1 << HARMONIOUS_MAX_ORDER],
        classes: 0,
        counts: vec![0; n + 1],
    };
    search.assign(0);
    Ok(from_falling_basis(&search.counts))
}

fn k_cliques(g: &Graph, k: usize) -> Vec<u64> {
    fn grow(g: &Graph, k: usize, set: u64, candidates: u64, out: &mut Vec<u64>) {
        if set.count_ones() as usize == k {
            out.push(set);
            return;
        }
        let mut c = candidates;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            grow(g, k, set | 1 << v, c & g.neighbors(v).bits(), out);
        }
    }
    let mut out = Vec::new();
    grow(g, k, 0, g.vertex_set().bits(), &mut out);
    out
}

struct KHarmSearch<'a> {
    g: &'a Graph,
    closing: Vec<Vec<u64>>,
    class_of: [u8; HARMONIOUS_MAX_ORDER],
    members: [u64; HARMONIOUS_MAX_ORDER],
    /// Colour-class sets already claimed by a k-clique, indexed by class mask.
    seen: Vec<bool>,
    classes: usize,
    counts: Vec<u64>,
}

impl KHarmSearch<'_> {
    fn assign(&mut self, v: usize) {
        if v == self.g.order() {
            self.counts[self.classes] += 1;
            return;
        }
        let earlier = self.g.neighbors(v).bits() & ((1u64 << v) - 1);
        for c in 0..=self.classes {
            if self.members[c] & earlier != 0 {
                continue;
            }
            self.class_of[v] = c as u8;
            let mut claimed: Vec<usize> = Vec::new();
            let mut ok = true;
            for &clique in &self.closing[v] {
                let mut set = 0usize;
                let mut it = clique;
                while it != 0 {
                    let u = it.trailing_zeros() as usize;
                    it &= it - 1;
                    set |= 1 << self.class_of[u];
                }
                if self.seen[set] {
                    ok = false;
                    break;
                }
                self.seen[set] = true;
                claimed.push(set);
            }
            if ok {
                let opened = c == self.classes;
                if opened {
                    self.classes += 1;
                }
                self.members[c] |= 1 << v;
                self.assign(v + 1);
                self.members[c] &= !(1 << v);
                if opened {
                    self.classes -= 1;
                }
            }
            for set in claimed {
                self.seen[set] = false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{has_extension_property, has_k_extension_property};

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(coeffs)
    }

    #[test]
    fn harmonious_examples() {
        assert_eq!(
            harmonious_polynomial(&Graph::edgeless(2).unwrap()).unwrap(),
            p(&[0, 0, 1])
        );
        let ff3 = p(&[0, 2, -3, 1]);
        assert_eq!(harmonious_polynomial(&Graph::path(3).unwrap()).unwrap(), ff3);
        assert_eq!(harmonious_polynomial(&Graph::complete(3).unwrap()).unwrap(), ff3);
        assert!(harmonious_polynomial(&Graph::edgeless(11).unwrap()).is_err());
    }

    #[test]
    fn counting_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(count_harmonious_colorings(&p3, 2), BigInt::from(0));
        assert_eq!(count_harmonious_colorings(&p3, 3), BigInt::from(6));
        let k1 = Graph::edgeless(1).unwrap();
        for m in 0..6 {
            assert_eq!(count_harmonious_colorings(&k1, m), BigInt::from(m));
        }
    }

    #[test]
    fn polynomial_matches_pointwise_counts() {
        let graphs = [
            Graph::path(5).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
        ];
        for g in graphs {
            let h = harmonious_polynomial(&g).unwrap();
            for m in 0..=g.order() + 2 {
                assert_eq!(h.evaluate(m as i64), count_harmonious_colorings(&g, m), "{g:?} at {m}");
            }
        }
    }

    #[test]
    fn k_harmonious_examples() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(k_harmonious_polynomial(&g, 1).unwrap(), falling_factorial(5));
        assert_eq!(
            k_harmonious_polynomial(&g, 2).unwrap(),
            harmonious_polynomial(&g).unwrap()
        );
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k_harmonious_polynomial(&k4, 3).unwrap(), falling_factorial(4));
        assert!(k_harmonious_polynomial(&k4, 0).is_err());
        assert!(k_harmonious_polynomial(&k4, 5).is_err());
        // Without any k-cliques only properness remains: the chromatic polynomial.
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(k_harmonious_polynomial(&c4, 3).unwrap(), p(&[0, -3, 6, -4, 1]));
    }

    #[test]
    fn extension_graphs_get_the_falling_factorial() {
        let k5 = Graph::complete(5).unwrap();
        assert!(has_extension_property(&k5));
        assert_eq!(harmonious_polynomial(&k5).unwrap(), falling_factorial(5));
        assert!(has_k_extension_property(&k5, 2).unwrap());
        assert_eq!(k_harmonious_polynomial(&k5, 2).unwrap(), falling_factorial(5));
        // K_5 minus an edge: still every pair has a common neighbour.
        let g = Graph::complete(5).unwrap();
        let mut rows = g.rows().to_vec();
        rows[0] &= !2;
        rows[1] &= !1;
        let g = Graph::from_adjacency(rows).unwrap();
        assert!(has_extension_property(&g));
        assert_eq!(harmonious_polynomial(&g).unwrap(), falling_factorial(5));
    }
}
