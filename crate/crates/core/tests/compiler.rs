use std::f64::consts::PI;

use dtqw_core::circuit::{circuit_unitary, Circuit, CoinAngles, Control, Gate, WireLayout};
use dtqw_core::compile::*;
use dtqw_core::math::{cis, max_abs_diff, phase_aligned_distance, Mat2, Matrix};
use dtqw_core::walk::*;

const TABLE: [[f64; 4]; 8] = [
    [2.59157236, 0.07621657, 2.38136754, -2.79936369],
    [0.99031147, 0.27887516, -2.67278043, 1.84368898],
    [0.46354727, 3.01620087, 1.5039485, 2.87444318],
    [1.79814059, 2.5016676, -0.50529796, -1.65451052],
    [2.24708944, 0.90254105, -1.48779474, -0.43149381],
    [1.99400865, 0.7635951, -2.15664402, -0.07448489],
    [2.69049595, 1.05540144, -3.12609191, 0.22005922],
    [2.77026061, 1.2182012, -0.29889881, -0.72954279],
];

fn table_coin(k: usize) -> CoinAngles {
    let [a, t, p, l] = TABLE[k];
    CoinAngles::new(a, t, p, l)
}

fn table_coins(n: usize) -> CoinTable {
    CoinTable::new(n, (0..1 << n).map(|k| table_coin(k % 8)).collect()).unwrap()
}

fn product(gates: &[BasisGate], phase: f64) -> Mat2 {
    gates
        .iter()
        .fold(Mat2::IDENTITY, |acc, g| g.matrix().unwrap() * acc)
        .scale(cis(phase))
}

fn compiled_unitary(gates: Vec<BasisGate>, phase: f64, num_wires: usize) -> Matrix {
    CompiledCircuit {
        num_wires,
        gates,
        phase,
    }
    .unitary()
    .unwrap()
}

/// Compiled and abstract unitaries agree both exactly (the phase is tracked)
/// and after phase alignment.
fn assert_equivalent(c: &Circuit, what: &str) {
    let want = circuit_unitary(c).unwrap();
    let got = compile(c).unitary().unwrap();
    let aligned = phase_aligned_distance(&got, &want);
    assert!(aligned < 1e-9, "{what}: aligned distance {aligned}");
    assert!(
        max_abs_diff(&got, &want) < 1e-9,
        "{what}: tracked phase is off"
    );
}

#[test]
fn one_qubit_coins() {
    let (gates, phase) = decompose_1q(&CoinAngles::IDENTITY);
    assert!(gates.is_empty());
    assert_eq!(phase, 0.0);
    let h = CoinAngles::new(0.0, PI / 2.0, 0.0, PI);
    let (gates, phase) = decompose_1q(&h);
    assert!(product(&gates, phase).max_abs_diff(&h.matrix()) < 1e-12);
    for k in 0..8 {
        let (gates, phase) = decompose_1q(&table_coin(k));
        assert!(
            product(&gates, phase).max_abs_diff(&table_coin(k).matrix()) < 1e-12,
            "C_{k}"
        );
    }
}

fn controlled_reference(u: &Mat2) -> Matrix {
    // Control wire 0, target wire 1: index = control + 2 * target.
    let mut m = Matrix::identity(4, 4);
    for r in 0..2 {
        for s in 0..2 {
            m[(1 + 2 * r, 1 + 2 * s)] = u.0[r][s];
        }
    }
    m
}

#[test]
fn controlled_coins() {
    assert!(decompose_controlled_1q(&CoinAngles::IDENTITY).0.is_empty());
    for angles in [
        CoinAngles::new(0.0, PI, 0.0, 0.0),
        table_coin(3),
        table_coin(6),
    ] {
        let (gates, phase) = decompose_controlled_1q(&angles);
        let got = compiled_unitary(gates, phase, 2);
        assert!(max_abs_diff(&got, &controlled_reference(&angles.matrix())) < 1e-12);
    }
}

#[test]
fn multi_controlled_nots() {
    let one = decompose_mcx(&[Control::pos(0)]);
    assert_eq!(
        one.gates,
        vec![BasisGate::Cnot {
            control: 0,
            target: 1
        }]
    );
    let zero = decompose_mcx(&[]);
    assert_eq!(zero.gates, vec![BasisGate::Rx { theta: PI, wire: 0 }]);

    let cases: Vec<Vec<Control>> = vec![
        vec![Control::pos(0), Control::pos(1)],
        vec![Control::pos(0), Control::neg(1), Control::pos(2)],
        (0..4).map(Control::pos).collect(),
        (0..5)
            .map(|w| {
                if w % 2 == 0 {
                    Control::pos(w)
                } else {
                    Control::neg(w)
                }
            })
            .collect(),
        (0..6).map(Control::pos).collect(),
    ];
    for controls in cases {
        let target = controls.len();
        let mut reference = Circuit::new(target + 1);
        reference.push(Gate::mcx(controls.clone(), target)).unwrap();
        let got = decompose_mcx(&controls).unitary().unwrap();
        let want = circuit_unitary(&reference).unwrap();
        assert!(
            phase_aligned_distance(&got, &want) < 1e-9,
            "{} controls",
            target
        );
    }
}

#[test]
fn borrowed_wire_mcx_restores_the_borrowed_wire() {
    // Seven wires, MCX with five controls: one idle wire, used dirty.
    let mut c = Circuit::new(7);
    c.push(Gate::mcx((0..5).map(Control::pos).collect(), 6))
        .unwrap();
    assert_equivalent(&c, "borrowed mcx");
}

#[test]
fn swaps() {
    let mut c = Circuit::new(2);
    c.push(Gate::swap(0, 1)).unwrap();
    let compiled = compile(&c);
    assert_eq!(compiled.gates.len(), 3);
    assert!(compiled
        .gates
        .iter()
        .all(|g| matches!(g, BasisGate::Cnot { .. })));
    assert_equivalent(&c, "swap");

    let mut c = Circuit::new(4);
    c.push(Gate::cswap(0, 1, 2)).unwrap();
    c.push(Gate {
        controls: vec![Control::neg(3), Control::pos(0)],
        ..Gate::swap(1, 2)
    })
    .unwrap();
    assert_equivalent(&c, "controlled swaps");
}

/// Every builder output that fits in eight wires.
fn small_builder_outputs() -> Vec<(String, Circuit)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for m in 0..=n {
            if WireLayout::new(n, m).unwrap().num_wires() > 8 {
                continue;
            }
            let coins = table_coins(n);
            let tag = |what: &str| format!("{what} n={n} m={m}");
            out.push((
                tag("coin circuit"),
                build_coin_circuit(n, m, &coins).unwrap(),
            ));
            out.push((
                tag("optimized"),
                build_coin_circuit_optimized(n, m, &coins).unwrap(),
            ));
            out.push((tag("q2"), build_q2(n, m).unwrap()));
            out.push((tag("q10"), build_q10(n, m).unwrap()));
            for i in 0..1 << (n - m) {
                out.push((
                    tag(&format!("pack {i}")),
                    build_pack(i, n, m, &coins).unwrap(),
                ));
                out.push((tag(&format!("q1 {i}")), build_q1(i, n, m).unwrap()));
                out.push((tag(&format!("q11 {i}")), build_q11(i, n, m).unwrap()));
                out.push((tag(&format!("q0 {i}")), build_q0(i, n, m, &coins).unwrap()));
            }
            let config = WalkConfig::new(n, m, coins).unwrap();
            out.push((tag("walk step"), build_walk_step(&config).unwrap()));
        }
        if n < 8 {
            out.push((format!("shift n={n}"), build_shift_circuit(n).unwrap()));
        }
    }
    out
}

#[test]
fn builder_outputs_round_trip() {
    let outputs = small_builder_outputs();
    assert!(outputs.len() > 100);
    for (what, c) in &outputs {
        assert_equivalent(c, what);
    }
}

#[test]
fn ten_wire_coin_circuit_round_trips() {
    let c = build_coin_circuit(2, 2, &table_coins(2)).unwrap();
    assert_equivalent(&c, "U(2,2)");
}

#[test]
fn compile_commutes_with_inverse() {
    let c = build_coin_circuit(2, 1, &table_coins(2)).unwrap();
    let forward = compile(&c).unitary().unwrap();
    let backward = compile(&c.inverse()).unitary().unwrap();
    assert!(phase_aligned_distance(&backward, &forward.adjoint()) < 1e-9);
}

#[test]
fn compiled_text_holds_only_basis_kinds() {
    let compiled = compile(&build_coin_circuit(2, 1, &table_coins(2)).unwrap());
    let text = compiled.to_text();
    for line in text.lines().skip(2) {
        let kind = line.split_whitespace().next().unwrap();
        assert!(["rx", "ry", "rz", "p", "cnot"].contains(&kind), "{line}");
    }
    assert_eq!(CompiledCircuit::from_text(&text).unwrap(), compiled);
}

#[test]
fn compiled_trend_for_four_position_qubits() {
    let coins = table_coins(4);
    let rows: Vec<CompiledMetrics> = (0..=4)
        .map(|m| compiled_metrics(&build_coin_circuit(4, m, &coins).unwrap()))
        .collect();
    for (m, r) in rows.iter().enumerate() {
        eprintln!("m={m} {r:?}");
    }
    for w in rows.windows(2) {
        assert!(w[1].depth <= w[0].depth, "depth rose: {rows:?}");
        assert!(w[1].width > w[0].width);
    }
}

#[test]
fn compilation_is_deterministic() {
    let c = build_coin_circuit(3, 1, &table_coins(3)).unwrap();
    assert_eq!(compile(&c), compile(&c));
}
