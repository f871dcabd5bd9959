//! Run parameters: command-line flags layered over an optional JSON config.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;

use dtqw_core::circuit::CostModel;
use dtqw_core::sim::Backend;
use dtqw_core::CoinTable;

use crate::error::CliError;

/// The bundled angle table for `n = 3`, selected with `--coins table`.
const TABLE_COINS: &str = include_str!("../../../data/coins_n3.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CostChoice {
    Atomic,
    Linear,
}

impl CostChoice {
    pub fn model(self) -> CostModel {
        match self {
            CostChoice::Atomic => CostModel::atomic(),
            CostChoice::Linear => CostModel::linear(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BackendChoice {
    Auto,
    Dense,
    Sparse,
}

impl From<BackendChoice> for Backend {
    fn from(b: BackendChoice) -> Backend {
        match b {
            BackendChoice::Auto => Backend::Auto,
            BackendChoice::Dense => Backend::Dense,
            BackendChoice::Sparse => Backend::Sparse,
        }
    }
}

/// Flags shared by the commands that build a walk circuit. Every field is
/// optional so a config file can supply it instead.
#[derive(Args, Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub struct RunSpec {
    /// Position qubits; the cycle has 2^n sites.
    #[arg(long)]
    pub n: Option<usize>,
    /// Pack exponent, 0 <= m <= n.
    #[arg(long)]
    pub m: Option<usize>,
    /// Walk steps.
    #[arg(long)]
    pub steps: Option<usize>,
    /// Measurement shots drawn from the final distribution.
    #[arg(long)]
    pub shots: Option<u64>,
    /// Seed for random coins and for sampling.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Coin source: a JSON file, `random` (needs --seed), `identity`, or
    /// `table` (the bundled 8-coin table, n = 3).
    #[arg(long)]
    pub coins: Option<String>,
    /// Use the NOT-reduced coin circuit.
    #[arg(long)]
    #[serde(default)]
    pub optimized: bool,
    /// Starting position of the walker.
    #[arg(long)]
    pub initial_position: Option<usize>,
    /// Starting coin state of the walker (0 or 1).
    #[arg(long)]
    pub initial_coin: Option<usize>,
    /// Simulation backend.
    #[arg(long, value_enum)]
    pub backend: Option<BackendChoice>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON file with any of the fields above; flags take precedence.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

impl RunSpec {
    /// Fills every unset field from the config file named by `--config`.
    pub fn resolve(self) -> Result<RunSpec, CliError> {
        let Some(path) = &self.config else {
            return Ok(self);
        };
        let text = read(path)?;
        let file: RunSpec = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Ok(RunSpec {
            n: self.n.or(file.n),
            m: self.m.or(file.m),
            steps: self.steps.or(file.steps),
            shots: self.shots.or(file.shots),
            seed: self.seed.or(file.seed),
            coins: self.coins.or(file.coins),
            optimized: self.optimized || file.optimized,
            initial_position: self.initial_position.or(file.initial_position),
            initial_coin: self.initial_coin.or(file.initial_coin),
            backend: self.backend.or(file.backend),
            out: self.out.or(file.out),
            config: self.config,
        })
    }

    pub fn n(&self) -> Result<usize, CliError> {
        self.n
            .ok_or_else(|| CliError::Usage("--n is required".into()))
    }

    pub fn m(&self) -> Result<usize, CliError> {
        self.m
            .ok_or_else(|| CliError::Usage("--m is required".into()))
    }

    pub fn coin_table(&self, n: usize) -> Result<CoinTable, CliError> {
        let source = self.coins.as_deref().unwrap_or("random");
        let table = match source {
            "random" => {
                let seed = self
                    .seed
                    .ok_or_else(|| CliError::Usage("random coins need --seed".into()))?;
                CoinTable::random(n, seed)
            }
            "identity" => CoinTable::identity(n),
            "table" => CoinTable::from_json(TABLE_COINS)?,
            path => CoinTable::from_json(&read(Path::new(path))?)?,
        };
        if table.n() != n {
            return Err(CliError::Usage(format!(
                "coin source {source:?} has {} coins, the walk needs {}",
                table.len(),
                1usize << n
            )));
        }
        Ok(table)
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Writes `text` to `out`, or to standard output.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
