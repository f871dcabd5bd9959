use dtqw_core::circuit::{Circuit, CoinAngles, Control, Gate};
use dtqw_core::math::Complex64;
use dtqw_core::sim::*;
use dtqw_core::walk::{build_walk_step, CoinTable, WalkConfig};

fn walk_distribution(config: &WalkConfig, start: &StateVector, backend: Backend) -> Distribution {
    let out = run_circuit_walk(config, start, backend).unwrap();
    Distribution::of_positions(&out, config.n).unwrap()
}

#[test]
fn circuit_walks_match_the_oracle() {
    for n in 1..=4 {
        let coins = CoinTable::random(n, 40 + n as u64);
        let start = StateVector::basis(n + 1, 0).unwrap();
        let steps = 100;
        let oracle = direct_walk_oracle(n, &coins, steps, &start).unwrap();
        assert!((oracle.norm() - 1.0).abs() < 1e-10);
        let want = Distribution::of_positions(&oracle, n).unwrap();
        for m in 0..=n {
            let config = WalkConfig::new(n, m, coins.clone())
                .unwrap()
                .with_steps(steps);
            let got = walk_distribution(&config, &start, Backend::Sparse);
            assert!(got.linf_distance(&want) < 1e-10, "n={n} m={m}");
        }
    }
}

#[test]
fn dense_walk_keeps_norm_and_agrees_with_sparse() {
    let coins = CoinTable::random(3, 8);
    // Start in a superposition of two positions and both coin states.
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![Complex64::default(); 16];
    amps[2] = Complex64::new(h * h, 0.0);
    amps[5 + 8] = Complex64::new(0.0, h);
    amps[7] = Complex64::new(-h * h, 0.0);
    let start = StateVector::from_amplitudes(amps).unwrap();
    for m in [1, 2] {
        let config = WalkConfig::new(3, m, coins.clone())
            .unwrap()
            .with_steps(100);
        let dense = run_circuit_walk(&config, &start, Backend::Dense).unwrap();
        let sparse = run_circuit_walk(&config, &start, Backend::Sparse).unwrap();
        assert!((dense.norm() - 1.0).abs() < 1e-10);
        assert!(dense.max_abs_diff(&sparse) < 1e-12);
        let oracle = direct_walk_oracle(3, &coins, 100, &start).unwrap();
        assert!(dense.max_abs_diff(&oracle) < 1e-10);
    }
}

#[test]
fn distribution_does_not_depend_on_m() {
    let coins = CoinTable::random(3, 3);
    let start = StateVector::basis(4, 0).unwrap();
    let dists: Vec<Distribution> = (0..=3)
        .map(|m| {
            let config = WalkConfig::new(3, m, coins.clone()).unwrap().with_steps(30);
            walk_distribution(&config, &start, Backend::Auto)
        })
        .collect();
    for d in &dists[1..] {
        assert!(d.linf_distance(&dists[0]) < 1e-12);
    }
}

#[test]
fn optimized_walk_matches_plain_walk() {
    let coins = CoinTable::random(3, 12);
    let start = StateVector::basis(4, 3).unwrap();
    for m in 0..=3 {
        let base = WalkConfig::new(3, m, coins.clone())
            .unwrap()
            .with_steps(100);
        let plain = walk_distribution(&base, &start, Backend::Sparse);
        let optimized =
            walk_distribution(&base.clone().with_optimized(true), &start, Backend::Sparse);
        assert!(plain.linf_distance(&optimized) < 1e-10, "m={m}");
    }
}

#[test]
fn zero_steps_is_a_point_mass() {
    let config = WalkConfig::new(3, 1, CoinTable::random(3, 1)).unwrap();
    let d = walk_distribution(&config, &StateVector::basis(4, 6).unwrap(), Backend::Dense);
    assert_eq!(d.probabilities()[6], 1.0);
}

#[test]
fn sampled_histogram_tracks_the_distribution() {
    let coins = CoinTable::random(3, 77);
    let start = StateVector::basis(4, 0).unwrap();
    let exact = Distribution::of_positions(&direct_walk_oracle(3, &coins, 100, &start).unwrap(), 3)
        .unwrap();
    let hist = sample(&exact, 10_000, 2024);
    assert_eq!(hist.counts.iter().sum::<u64>(), 10_000);
    assert!(hist.total_variation(&exact) < 0.05);
    assert_eq!(sample(&exact, 10_000, 2024), hist);
    assert_ne!(sample(&exact, 10_000, 2025).counts, hist.counts);
}

#[test]
fn leaking_ancillas_are_reported() {
    // A walk step followed by a stray NOT on an ancilla never restores it.
    let config = WalkConfig::new(2, 1, CoinTable::identity(2)).unwrap();
    let mut bad = build_walk_step(&config).unwrap();
    bad.push(Gate::not(bad.num_wires() - 1)).unwrap();
    let mut state = StateVector::basis(bad.num_wires(), 0).unwrap();
    state.apply(&bad).unwrap();
    assert!(state.weight_above(3) > 0.5);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let w = 18;
    let mut c = Circuit::new(w);
    for t in 0..w {
        c.push(Gate::coin(
            CoinAngles::new(0.1 * t as f64, 1.0, -0.3, 0.7),
            t,
        ))
        .unwrap();
    }
    c.push(Gate::mcx(vec![Control::pos(0), Control::neg(17)], 9))
        .unwrap();
    c.push(Gate::cswap(3, 16, 1)).unwrap();
    c.push(Gate::controlled_coin(
        17,
        CoinAngles::new(0.0, 2.0, 1.0, 0.5),
        0,
    ))
    .unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| apply_circuit(StateVector::zero(w).unwrap(), &c).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert!((one.norm() - 1.0).abs() < 1e-12);
}

#[test]
fn exports() {
    let d = Distribution::new(vec![0.25, 0.75]).unwrap();
    assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"0":0.25,"1":0.75}"#);
    let h = sample(&d, 4, 1);
    let csv = h.to_csv();
    assert!(csv.starts_with("position,count\n0,"));
    let parsed: serde_json::Value = serde_json::from_str(&h.to_json()).unwrap();
    assert_eq!(parsed.as_object().unwrap().len(), 2);
}
