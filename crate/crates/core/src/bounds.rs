//! Log-space evaluation of the counting ratios behind the uniqueness bounds.

use crate::error::{Error, Result};

/// Base of the logarithm inside the class cutoff `4 log(n/2) + 1/10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LogBase {
    #[default]
    Natural,
    Two,
}

impl LogBase {
    fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.ln(),
            LogBase::Two => x.log2(),
        }
    }
}

fn log10_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).log10()).sum()
}

fn log10_binomial(n: usize, k: usize) -> f64 {
    log10_factorial(n) - log10_factorial(k) - log10_factorial(n - k)
}

fn log10_labeled_graphs(n: usize) -> f64 {
    (n * n.saturating_sub(1) / 2) as f64 * 2f64.log10()
}

/// `log10((n+1)^(2n) / 2^(n(n-1)/2))`.
pub fn uniqueness_bound_ratio(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("uniqueness bound needs n >= 1".into()));
    }
    Ok(2.0 * n as f64 * ((n + 1) as f64).log10() - log10_labeled_graphs(n))
}

/// Cutoff `m(n, a) = min(n, ⌊a·(4·log(n/2) + 1/10)⌋)`: the largest induced
/// subgraph of a member of the dominant class that can lie in the property.
pub fn class_cutoff(n: usize, a: usize, base: LogBase) -> usize {
    let m = (a as f64 * (4.0 * base.log(n as f64 / 2.0) + 0.1)).floor();
    (m.max(0.0) as usize).min(n)
}

/// `log10(C(n, m)^m · n! / 2^(n(n-1)/2))` with `m = class_cutoff(n, a, base)`:
/// the bound on distinct values over the dominant class divided by the
/// estimate `2^C(n,2) / n!` of the number of isomorphism classes.
pub fn class_bound_ratio(n: usize, a: usize, base: LogBase) -> Result<f64> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("class bound needs n >= 4, got {n}")));
    }
    if a == 0 {
        return Err(Error::InvalidParameter("class bound needs a >= 1".into()));
    }
    let m = class_cutoff(n, a, base);
    Ok(m as f64 * log10_binomial(n, m) + log10_factorial(n) - log10_labeled_graphs(n))
}
