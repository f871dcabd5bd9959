use crate::circuit::{Circuit, CostModel, WireLayout};
use crate::error::{Error, Result};

use super::builder::{build_coin_circuit, build_coin_circuit_optimized, walk_layout};
use super::coins::CoinTable;
use super::shift::build_shift_circuit;

#[derive(Clone, Debug, PartialEq)]
pub struct WalkConfig {
    pub n: usize,
    pub m: usize,
    pub coins: CoinTable,
    pub steps: usize,
    pub optimized: bool,
    pub cost: CostModel,
}

impl WalkConfig {
    pub fn new(n: usize, m: usize, coins: CoinTable) -> Result<Self> {
        let config = WalkConfig {
            n,
            m,
            coins,
            steps: 0,
            optimized: false,
            cost: CostModel::default(),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_steps(mut self, steps: usize) -> Self {
        self.steps = steps;
        self
    }

    pub fn with_optimized(mut self, optimized: bool) -> Self {
        self.optimized = optimized;
        self
    }

    pub fn validate(&self) -> Result<()> {
        walk_layout(self.n, self.m)?;
        if self.coins.n() != self.n {
            return Err(Error::InvalidConfig(format!(
                "coin table is for n={}, walk has n={}",
                self.coins.n(),
                self.n
            )));
        }
        Ok(())
    }

    pub fn layout(&self) -> Result<WireLayout> {
        walk_layout(self.n, self.m)
    }
}

/// The coin circuit selected by `config`.
pub fn build_config_coin_circuit(config: &WalkConfig) -> Result<Circuit> {
    if config.optimized {
        build_coin_circuit_optimized(config.n, config.m, &config.coins)
    } else {
        build_coin_circuit(config.n, config.m, &config.coins)
    }
}

/// One walk step `S C`: the coin circuit followed by the shift.
pub fn build_walk_step(config: &WalkConfig) -> Result<Circuit> {
    config.validate()?;
    let mut step = build_config_coin_circuit(config)?;
    step.append(&build_shift_circuit(config.n)?.embed(config.layout()?)?)?;
    Ok(step)
}
