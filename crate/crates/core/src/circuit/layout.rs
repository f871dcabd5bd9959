use std::ops::Range;

use crate::error::{Error, Result};

/// Largest pack exponent we allow a layout to describe. `2^(m+1)` wires beyond
/// this point are not something anyone can build or analyze.
pub const MAX_PACK_EXPONENT: usize = 24;

/// Register layout of the adjustable-depth coin circuit.
///
/// Wires are numbered little-endian: position bit `b_p` lives on wire `p`, then
/// the principal coin `s_0`, the ancillary coins `s_1..s_{2^m-1}` and finally
/// the ancillary positions `b'_0..b'_{2^m-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WireLayout {
    n: usize,
    m: usize,
}

impl WireLayout {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidLayout(format!(
                "pack exponent m={m} exceeds position count n={n}"
            )));
        }
        if m > MAX_PACK_EXPONENT {
            return Err(Error::InvalidLayout(format!(
                "pack exponent m={m} above the supported maximum {MAX_PACK_EXPONENT}"
            )));
        }
        Ok(WireLayout { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of coin operators applied in parallel by one pack.
    pub fn pack_size(&self) -> usize {
        1 << self.m
    }

    /// Number of packs applied one after the other.
    pub fn num_packs(&self) -> usize {
        1 << (self.n - self.m)
    }

    pub fn num_wires(&self) -> usize {
        self.n + 2 * self.pack_size()
    }

    /// Wire of position bit `b_p`.
    pub fn position(&self, p: usize) -> usize {
        debug_assert!(p < self.n);
        p
    }

    /// Wire of coin `s_k`; `k = 0` is the principal coin.
    pub fn coin(&self, k: usize) -> usize {
        debug_assert!(k < self.pack_size());
        self.n + k
    }

    pub fn principal_coin(&self) -> usize {
        self.n
    }

    /// Wire of ancillary position bit `b'_k`.
    pub fn ancillary_position(&self, k: usize) -> usize {
        debug_assert!(k < self.pack_size());
        self.n + self.pack_size() + k
    }

    pub fn position_wires(&self) -> Range<usize> {
        0..self.n
    }

    pub fn ancillary_coins(&self) -> Range<usize> {
        self.n + 1..self.n + self.pack_size()
    }

    pub fn ancillary_positions(&self) -> Range<usize> {
        self.n + self.pack_size()..self.num_wires()
    }

    /// Wires that must hold `|0>` on a correctly initialized state.
    pub fn ancilla_wires(&self) -> Range<usize> {
        self.n + 1..self.num_wires()
    }
}
