use std::fmt::Write as _;

use clap::Args;
use serde::Serialize;

use dtqw_core::circuit::text::write_circuit;
use dtqw_core::sim::{direct_walk_oracle, run_circuit_walk, sample, Backend, MAX_DENSE_WIRES};
use dtqw_core::walk::{
    build_coin_circuit, build_coin_circuit_optimized, build_config_coin_circuit, build_walk_step,
    coin_circuit_error, structural_depth, structural_width,
};
use dtqw_core::{
    circuit_depth, circuit_width, compile, compiled_metrics, CoinTable, DepthMode, Distribution,
    Histogram, StateVector, WalkConfig,
};

use crate::error::CliError;
use crate::spec::{emit, CostChoice, RunSpec};

/// Largest `n` for which the CLI will build a circuit: the coin circuit has
/// `O(2^n)` gates.
pub const MAX_CIRCUIT_N: usize = 20;

/// Run fails verification when the circuit and oracle distributions differ
/// by this much at any position.
pub const RUN_TOLERANCE: f64 = 1e-8;

/// Verify fails when any coin-circuit error reaches this.
pub const VERIFY_TOLERANCE: f64 = 1e-10;

fn check_buildable(n: usize) -> Result<(), CliError> {
    if n > MAX_CIRCUIT_N {
        return Err(CliError::Resource(format!(
            "n={n} exceeds the circuit limit of n={MAX_CIRCUIT_N}"
        )));
    }
    Ok(())
}

fn walk_config(spec: &RunSpec) -> Result<WalkConfig, CliError> {
    let (n, m) = (spec.n()?, spec.m()?);
    if m > n {
        return Err(CliError::Usage(format!("m={m} must not exceed n={n}")));
    }
    check_buildable(n)?;
    let coins = spec.coin_table(n)?;
    Ok(WalkConfig::new(n, m, coins)?
        .with_steps(spec.steps.unwrap_or(0))
        .with_optimized(spec.optimized))
}

#[derive(Serialize)]
struct RunReport {
    n: usize,
    m: usize,
    steps: usize,
    optimized: bool,
    initial_position: usize,
    initial_coin: usize,
    exact: Distribution,
    oracle: Distribution,
    linf_diff: f64,
    shots: u64,
    seed: Option<u64>,
    histogram: Option<Histogram>,
}

pub fn cmd_run(spec: RunSpec) -> Result<(), CliError> {
    let n = spec.n()?;
    if n + 1 > MAX_DENSE_WIRES {
        return Err(CliError::Resource(format!(
            "the walker register for n={n} exceeds {MAX_DENSE_WIRES} wires"
        )));
    }
    let config = walk_config(&spec)?;
    let position = spec.initial_position.unwrap_or(0);
    let coin = spec.initial_coin.unwrap_or(0);
    if position >= 1 << n || coin > 1 {
        return Err(CliError::Usage(format!(
            "initial state (position {position}, coin {coin}) outside the walker space"
        )));
    }
    let initial = StateVector::basis(n + 1, position + (coin << n))?;
    let backend = spec.backend.map(Backend::from).unwrap_or_default();

    let walked = run_circuit_walk(&config, &initial, backend)?;
    let exact = Distribution::of_positions(&walked, n)?;
    let direct = direct_walk_oracle(n, &config.coins, config.steps, &initial)?;
    let oracle = Distribution::of_positions(&direct, n)?;
    let linf_diff = exact.linf_distance(&oracle);

    let histogram = match spec.shots {
        Some(shots) if shots > 0 => Some(sample(&exact, shots, spec.seed.unwrap_or(0))),
        _ => None,
    };
    let report = RunReport {
        n,
        m: config.m,
        steps: config.steps,
        optimized: config.optimized,
        initial_position: position,
        initial_coin: coin,
        exact,
        oracle,
        linf_diff,
        shots: spec.shots.unwrap_or(0),
        seed: spec.seed,
        histogram,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    emit(spec.out.as_deref(), &text)?;
    if linf_diff >= RUN_TOLERANCE {
        return Err(CliError::Verification(format!(
            "circuit and oracle distributions differ by {linf_diff:e}"
        )));
    }
    Ok(())
}

#[derive(Args, Clone, Debug)]
pub struct VerifyArgs {
    /// Check every n from 1 up to this value.
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    /// Comma-separated seeds for random coin tables.
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 3])]
    pub seeds: Vec<u64>,
    /// `random` (one table per seed) or `identity`.
    #[arg(long, default_value = "random")]
    pub coins: String,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Serialize)]
struct VerifyRow {
    n: usize,
    m: usize,
    max_error: f64,
    max_optimized_error: f64,
}

#[derive(Serialize)]
struct VerifyReport {
    tolerance: f64,
    coins: String,
    seeds: Vec<u64>,
    rows: Vec<VerifyRow>,
    max_error: f64,
    pass: bool,
}

pub fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    if args.n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    // every walker basis state is propagated through every circuit
    check_buildable(args.n_max)?;
    let tables = |n: usize| -> Result<Vec<CoinTable>, CliError> {
        match args.coins.as_str() {
            "random" if args.seeds.is_empty() => Err(CliError::Usage("--seeds is empty".into())),
            "random" => Ok(args
                .seeds
                .iter()
                .map(|&s| CoinTable::random(n, s))
                .collect()),
            "identity" => Ok(vec![CoinTable::identity(n)]),
            other => Err(CliError::Usage(format!(
                "verify takes --coins random or identity, got {other:?}"
            ))),
        }
    };
    let mut rows = Vec::new();
    for n in 1..=args.n_max {
        let tables = tables(n)?;
        for m in 0..=n {
            let mut row = VerifyRow {
                n,
                m,
                max_error: 0.0,
                max_optimized_error: 0.0,
            };
            for coins in &tables {
                let plain = coin_circuit_error(&build_coin_circuit(n, m, coins)?, coins)?;
                let opt = coin_circuit_error(&build_coin_circuit_optimized(n, m, coins)?, coins)?;
                row.max_error = row.max_error.max(plain);
                row.max_optimized_error = row.max_optimized_error.max(opt);
            }
            rows.push(row);
        }
    }
    let max_error = rows
        .iter()
        .map(|r| r.max_error.max(r.max_optimized_error))
        .fold(0.0, f64::max);
    let pass = max_error < VERIFY_TOLERANCE;
    let report = VerifyReport {
        tolerance: VERIFY_TOLERANCE,
        coins: args.coins.clone(),
        seeds: if args.coins == "random" {
            args.seeds.clone()
        } else {
            vec![]
        },
        rows,
        max_error,
        pass,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    emit(args.out.as_deref(), &text)?;
    if !pass {
        return Err(CliError::Verification(format!(
            "largest coin-circuit error {max_error:e}"
        )));
    }
    Ok(())
}

#[derive(Args, Clone, Debug)]
pub struct SweepArgs {
    /// Position qubits; one row per m = 0..=n.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = CostChoice::Linear)]
    pub cost_model: CostChoice,
    /// Skip lowering to the basis gate set; compiled columns are left empty.
    #[arg(long)]
    pub structural_only: bool,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

pub const SWEEP_HEADER: &str = "n,m,structural_depth,structural_width,compiled_depth,compiled_width,compiled_size,formula_depth,match";

pub fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let n = args.n;
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    check_buildable(n)?;
    let cost = args.cost_model.model();
    // depths and widths do not depend on the coin angles
    let coins = CoinTable::identity(n);
    let mut csv = String::from(SWEEP_HEADER);
    csv.push('\n');
    let mut all_match = true;
    for m in 0..=n {
        let circuit = build_coin_circuit(n, m, &coins)?;
        let depth = circuit_depth(&circuit, &cost, DepthMode::PerPackSum);
        let width = circuit_width(&circuit, &cost);
        let formula = structural_depth(n, m, &cost);
        let matched = depth == formula && width == structural_width(n, m, &cost);
        all_match &= matched;
        let compiled = if args.structural_only {
            ",,".to_string()
        } else {
            let c = compiled_metrics(&circuit);
            format!("{},{},{}", c.depth, c.width, c.size)
        };
        let _ = writeln!(
            csv,
            "{n},{m},{depth},{width},{compiled},{formula},{matched}"
        );
    }
    emit(args.out.as_deref(), &csv)?;
    if !all_match {
        return Err(CliError::Verification(
            "measured structural cost disagrees with the closed form".into(),
        ));
    }
    Ok(())
}

#[derive(Args, Clone, Debug)]
pub struct ExportArgs {
    #[command(flatten)]
    pub spec: RunSpec,
    /// Lower to the rx/ry/rz/p/cnot basis.
    #[arg(long)]
    pub compile: bool,
    /// Export a full walk step (coin circuit followed by the shift).
    #[arg(long)]
    pub with_shift: bool,
}

pub fn cmd_export(args: ExportArgs) -> Result<(), CliError> {
    let config = walk_config(&args.spec)?;
    let circuit = if args.with_shift {
        build_walk_step(&config)?
    } else {
        build_config_coin_circuit(&config)?
    };
    let text = if args.compile {
        compile(&circuit).to_text()
    } else {
        write_circuit(&circuit)
    };
    emit(args.spec.out.as_deref(), &text)
}
