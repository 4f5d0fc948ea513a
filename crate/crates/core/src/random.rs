//! `G(n, p)` sampling and the random-graph statistics.
//!
//! Sample `i` of a run with seed `s` is drawn from the ChaCha8 stream `i`
//! keyed by `s`; the pair `(u, v)`, `u < v`, consumes the `v(v-1)/2 + u`-th
//! 64-bit word of that stream and is an edge iff the word is below
//! `⌊p · 2^64⌋`. Every sample is therefore a pure function of
//! `(n, p, seed, i)`, independent of scheduling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WideGraph;
use crate::harmonious::{harmonious_polynomial, HARMONIOUS_MAX_ORDER};
use crate::polynomial::falling_factorial;
use crate::structure::{
    alpha_wide, has_extension_property, has_k_extension_property_wide, min_common_neighborhood_wide, omega_wide,
    CLIQUE_MAX_ORDER,
};

/// Largest order the sampler accepts.
pub const RANDOM_MAX_ORDER: usize = CLIQUE_MAX_ORDER;

/// A rational edge probability strictly between 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Probability> {
        if num == 0 || num >= den {
            return Err(Error::InvalidProbability(format!("{num}/{den}")));
        }
        let (mut a, mut b) = (num, den);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        Ok(Probability {
            num: num / a,
            den: den / a,
        })
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `⌊p · 2^64⌋`.
    pub fn threshold(self) -> u64 {
        (((self.num as u128) << 64) / self.den as u128) as u64
    }
}

impl FromStr for Probability {
    type Err = Error;

    /// Accepts `a/b` or a decimal such as `0.9`.
    fn from_str(s: &str) -> Result<Probability> {
        let bad = || Error::InvalidProbability(s.to_string());
        let t = s.trim();
        if let Some((a, b)) = t.split_once('/') {
            let num = a.trim().parse().map_err(|_| bad())?;
            let den = b.trim().parse().map_err(|_| bad())?;
            return Probability::new(num, den).map_err(|_| bad());
        }
        let (int, frac) = t.split_once('.').unwrap_or((t, ""));
        if frac.len() > 18
            || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
            || int.len() + frac.len() == 0
        {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        if int != 0 {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let num = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        Probability::new(num, den).map_err(|_| bad())
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > RANDOM_MAX_ORDER {
        return Err(Error::OrderCap {
            op: "G(n, p) sampling",
            order: n,
            cap: RANDOM_MAX_ORDER,
        });
    }
    Ok(())
}

/// Sample `stream` of the run keyed by `seed`.
pub fn sample_gnp_stream(n: usize, p: Probability, seed: u64, stream: u64) -> Result<WideGraph> {
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let threshold = p.threshold();
    let mut g = WideGraph::edgeless(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.next_u64() < threshold {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// One `G(n, p)` sample, fully determined by `(n, p, seed)`.
pub fn sample_gnp(n: usize, p: Probability, seed: u64) -> Result<WideGraph> {
    sample_gnp_stream(n, p, seed, 0)
}

/// Summary of one metric over a batch of samples.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomStats {
    pub metric: String,
    pub n: usize,
    pub p: String,
    pub samples: usize,
    pub seed: u64,
    pub values: Vec<f64>,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    /// Share of samples satisfying the metric's predicate, when it has one.
    pub fraction: Option<f64>,
}

pub const STATS_CSV_HEADER: &str = "metric,n,p,samples,seed,mean,min,max,fraction";

impl RandomStats {
    fn new(metric: &str, n: usize, p: Probability, seed: u64, values: Vec<f64>, fraction: Option<f64>) -> RandomStats {
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        RandomStats {
            metric: metric.to_string(),
            n,
            p: p.to_string(),
            samples: values.len(),
            seed,
            values,
            mean,
            min,
            max,
            fraction,
        }
    }

    fn from_flags(metric: &str, n: usize, p: Probability, seed: u64, flags: &[bool]) -> RandomStats {
        let values: Vec<f64> = flags.iter().map(|&b| b as u8 as f64).collect();
        let fraction = values.iter().sum::<f64>() / values.len() as f64;
        RandomStats::new(metric, n, p, seed, values, Some(fraction))
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.metric,
            self.n,
            self.p,
            self.samples,
            self.seed,
            self.mean,
            self.min,
            self.max,
            self.fraction.map(|f| f.to_string()).unwrap_or_default()
        )
    }
}

fn per_sample<T, F>(n: usize, p: Probability, samples: usize, seed: u64, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(WideGraph) -> Result<T> + Sync,
{
    check_order(n)?;
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    (0..samples as u64)
        .into_par_iter()
        .map(|i| f(sample_gnp_stream(n, p, seed, i)?))
        .collect()
}

/// Exact `α` and `ω` per sample.
pub fn alpha_omega_stats(n: usize, p: Probability, samples: usize, seed: u64) -> Result<(RandomStats, RandomStats)> {
    let pairs = per_sample(n, p, samples, seed, |g| Ok((alpha_wide(&g)?, omega_wide(&g)?)))?;
    let alpha = pairs.iter().map(|&(a, _)| a as f64).collect();
    let omega = pairs.iter().map(|&(_, w)| w as f64).collect();
    Ok((
        RandomStats::new("alpha", n, p, seed, alpha, None),
        RandomStats::new("omega", n, p, seed, omega, None),
    ))
}

/// Reference curves `(2·log2 n, 4·ln(n/2))` printed next to the `α` statistics.
pub fn alpha_reference_curves(n: usize) -> (f64, f64) {
    let n = n as f64;
    (2.0 * n.log2(), 4.0 * (n / 2.0).ln())
}

/// Share of samples with the `k`-extension property.
pub fn extension_fraction(n: usize, p: Probability, k: usize, samples: usize, seed: u64) -> Result<RandomStats> {
    if k == 0 {
        return Err(Error::InvalidParameter("k-extension needs k >= 1".into()));
    }
    let flags = per_sample(n, p, samples, seed, |g| has_k_extension_property_wide(&g, k))?;
    Ok(RandomStats::from_flags("extension", n, p, seed, &flags))
}

/// `min > (n-2)·p²/9`, decided exactly.
pub fn exceeds_common_neighborhood_threshold(min: usize, n: usize, p: Probability) -> bool {
    let den = BigInt::from(p.den);
    let num = BigInt::from(p.num);
    BigInt::from(9 * min) * &den * &den > BigInt::from(n.saturating_sub(2)) * &num * &num
}

/// Per sample, the smallest common neighbourhood over all vertex pairs;
/// `fraction` is the share whose minimum exceeds `(n-2)·p²/9`.
pub fn common_neighborhood_minimum(n: usize, p: Probability, samples: usize, seed: u64) -> Result<RandomStats> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "common-neighbourhood statistics need n >= 3, got {n}"
        )));
    }
    let mins = per_sample(n, p, samples, seed, |g| {
        Ok(min_common_neighborhood_wide(&g).expect("order >= 3 has pairs"))
    })?;
    let above = mins
        .iter()
        .filter(|&&m| exceeds_common_neighborhood_threshold(m, n, p))
        .count();
    let values = mins.iter().map(|&m| m as f64).collect();
    Ok(RandomStats::new(
        "chernoff",
        n,
        p,
        seed,
        values,
        Some(above as f64 / samples as f64),
    ))
}

/// Share of samples whose harmonious polynomial is the falling factorial.
/// Fails if a sample with the extension property breaks the identity.
pub fn harmonious_falling_factorial_fraction(
    n: usize,
    p: Probability,
    samples: usize,
    seed: u64,
) -> Result<RandomStats> {
    if n > HARMONIOUS_MAX_ORDER {
        return Err(Error::OrderCap {
            op: "harmonious fraction",
            order: n,
            cap: HARMONIOUS_MAX_ORDER,
        });
    }
    let target = falling_factorial(n);
    let flags = per_sample(n, p, samples, seed, |wide| {
        let g = wide.to_graph()?;
        let equal = harmonious_polynomial(&g)? == target;
        if has_extension_property(&g) && !equal {
            return Err(Error::InvariantViolation(format!(
                "graph {} has the extension property but its harmonious polynomial is not the falling factorial",
                crate::graph6::graph6_encode(&g)
            )));
        }
        Ok(equal)
    })?;
    Ok(RandomStats::from_flags("harm-fraction", n, p, seed, &flags))
}
