use std::f64::consts::PI;

use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::circuit::CoinAngles;
use crate::error::{Error, Result};
use crate::math::Mat2;

/// One coin operator per position `k = 0..2^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoinTable {
    n: usize,
    angles: Vec<CoinAngles>,
}

impl CoinTable {
    pub fn new(n: usize, angles: Vec<CoinAngles>) -> Result<Self> {
        if angles.len() != 1 << n {
            return Err(Error::InvalidCoins(format!(
                "expected {} coins for n={n}, got {}",
                1usize << n,
                angles.len()
            )));
        }
        if let Some(k) = angles.iter().position(|a| !a.is_finite()) {
            return Err(Error::InvalidCoins(format!(
                "coin {k} has a non-finite angle"
            )));
        }
        Ok(CoinTable { n, angles })
    }

    pub fn identity(n: usize) -> Self {
        CoinTable {
            n,
            angles: vec![CoinAngles::IDENTITY; 1 << n],
        }
    }

    /// Uniform random angles with `alpha, theta` in `[0, pi)` and `phi, lambda`
    /// in `[-pi, pi)`, drawn in that order per coin from xoshiro256++ seeded
    /// with `seed`.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
        let angles = (0..1usize << n)
            .map(|_| {
                let alpha = rng.random_range(0.0..PI);
                let theta = rng.random_range(0.0..PI);
                let phi = rng.random_range(-PI..PI);
                let lambda = rng.random_range(-PI..PI);
                CoinAngles::new(alpha, theta, phi, lambda)
            })
            .collect();
        CoinTable { n, angles }
    }

    /// Parses a JSON array of `{"alpha", "theta", "phi", "lambda"}` objects;
    /// the array index is the position.
    pub fn from_json(text: &str) -> Result<Self> {
        let angles: Vec<CoinAngles> = serde_json::from_str(text)?;
        if !angles.len().is_power_of_two() {
            return Err(Error::InvalidCoins(format!(
                "coin count {} is not a power of two",
                angles.len()
            )));
        }
        let n = angles.len().trailing_zeros() as usize;
        CoinTable::new(n, angles)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.angles).expect("angles serialize")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn get(&self, k: usize) -> CoinAngles {
        self.angles[k]
    }

    pub fn angles(&self) -> &[CoinAngles] {
        &self.angles
    }

    pub fn matrix(&self, k: usize) -> Mat2 {
        self.angles[k].matrix()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_seeded_and_in_range() {
        let a = CoinTable::random(3, 11);
        assert_eq!(a, CoinTable::random(3, 11));
        assert_ne!(a, CoinTable::random(3, 12));
        for c in a.angles() {
            assert!((0.0..PI).contains(&c.alpha) && (0.0..PI).contains(&c.theta));
            assert!((-PI..PI).contains(&c.phi) && (-PI..PI).contains(&c.lambda));
        }
    }

    #[test]
    fn json_round_trip() {
        let t = CoinTable::random(2, 5);
        assert_eq!(CoinTable::from_json(&t.to_json()).unwrap(), t);
        let text = r#"[{"alpha":0,"theta":1,"phi":2,"lambda":3},{"alpha":0,"theta":0,"phi":0,"lambda":0}]"#;
        let t = CoinTable::from_json(text).unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.get(0).lambda, 3.0);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(CoinTable::new(2, vec![CoinAngles::IDENTITY; 3]).is_err());
        let three = r#"[{"alpha":0,"theta":0,"phi":0,"lambda":0},{"alpha":0,"theta":0,"phi":0,"lambda":0},{"alpha":0,"theta":0,"phi":0,"lambda":0}]"#;
        assert!(CoinTable::from_json(three).is_err());
        assert!(CoinTable::from_json(r#"[{"alpha":0}]"#).is_err());
    }
}
