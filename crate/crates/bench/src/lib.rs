//! Shared fixtures for the criterion benchmarks.

use dtqw_core::CoinTable;

/// Seed used for every benchmark coin table, so runs are comparable.
pub const BENCH_SEED: u64 = 0x5eed;

pub fn bench_coins(n: usize) -> CoinTable {
    CoinTable::random(n, BENCH_SEED)
}
