use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::circuit::WireLayout;
use crate::error::{Error, Result};

use super::state::StateVector;

const SUM_TOLERANCE: f64 = 1e-10;

/// Probability of finding the walker at each position `0..2^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.iter().any(|p| p.is_nan() || *p < 0.0) {
            return Err(Error::InvalidConfig("negative or NaN probability".into()));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::InvalidConfig(format!(
                "probabilities sum to {total}"
            )));
        }
        Ok(Distribution { probs })
    }

    /// Marginal over the low `n` wires of `state`.
    pub fn of_positions(state: &StateVector, n: usize) -> Result<Self> {
        if n > state.num_wires() {
            return Err(Error::DimensionMismatch {
                expected: state.num_wires(),
                found: n,
            });
        }
        let mask = (1usize << n) - 1;
        let mut probs = vec![0.0; 1 << n];
        for (j, a) in state.amplitudes().iter().enumerate() {
            probs[j & mask] += a.norm_sqr();
        }
        Distribution::new(probs)
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn linf_distance(&self, other: &Distribution) -> f64 {
        self.probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn total_variation(&self, other: &Distribution) -> f64 {
        0.5 * self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("distribution serializes")
    }

    pub fn to_csv(&self) -> String {
        to_csv("probability", &self.probs)
    }
}

/// Marginal position distribution of a state on `layout`: the coin and all
/// ancillas are summed out.
pub fn position_distribution(state: &StateVector, layout: &WireLayout) -> Result<Distribution> {
    if state.num_wires() != layout.num_wires() {
        return Err(Error::DimensionMismatch {
            expected: layout.num_wires(),
            found: state.num_wires(),
        });
    }
    Distribution::of_positions(state, layout.n())
}

/// Shot counts per position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    pub counts: Vec<u64>,
    pub shots: u64,
    pub seed: u64,
}

impl Histogram {
    pub fn frequencies(&self) -> Vec<f64> {
        let total = self.shots.max(1) as f64;
        self.counts.iter().map(|&c| c as f64 / total).collect()
    }

    /// Total-variation distance between the empirical frequencies and `dist`.
    pub fn total_variation(&self, dist: &Distribution) -> f64 {
        0.5 * self
            .frequencies()
            .iter()
            .zip(dist.probabilities())
            .map(|(f, p)| (f - p).abs())
            .sum::<f64>()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("histogram serializes")
    }

    pub fn to_csv(&self) -> String {
        to_csv("count", &self.counts)
    }
}

/// Draws `shots` positions from `dist` by inverse-CDF lookup of uniform
/// variates from xoshiro256++ seeded with `seed`.
pub fn sample(dist: &Distribution, shots: u64, seed: u64) -> Histogram {
    let mut cdf = Vec::with_capacity(dist.len());
    let mut acc = 0.0;
    for p in dist.probabilities() {
        acc += p;
        cdf.push(acc);
    }
    let mut counts = vec![0u64; dist.len()];
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let last = dist.len().saturating_sub(1);
    for _ in 0..shots {
        // Scale by the actual total so rounding in the cumulative sum can
        // never leave a draw past the end.
        let u: f64 = rng.random::<f64>() * acc;
        let k = cdf.partition_point(|&c| c <= u).min(last);
        counts[k] += 1;
    }
    Histogram {
        counts,
        shots,
        seed,
    }
}

fn to_csv<T: std::fmt::Display>(column: &str, values: &[T]) -> String {
    let mut out = format!("position,{column}\n");
    for (k, v) in values.iter().enumerate() {
        out.push_str(&format!("{k},{v}\n"));
    }
    out
}

/// `{"0": v0, "1": v1, ...}` in position order.
fn serialize_by_position<S: Serializer, T: Serialize>(
    values: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(values.len()))?;
    for (k, v) in values.iter().enumerate() {
        map.serialize_entry(&k.to_string(), v)?;
    }
    map.end()
}

impl Serialize for Distribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_by_position(&self.probs, s)
    }
}

impl Serialize for Histogram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_by_position(&self.counts, s)
    }
}
