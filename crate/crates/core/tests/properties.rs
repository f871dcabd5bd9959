use std::f64::consts::PI;

use proptest::prelude::*;

use dtqw_core::circuit::text::{parse_circuit, write_circuit};
use dtqw_core::circuit::*;
use dtqw_core::math::{max_abs_diff, unitarity_defect};
use dtqw_core::sim::{SparseState, StateVector};
use dtqw_core::walk::{build_coin_circuit, build_coin_circuit_optimized, CoinTable};

/// Distinct wires drawn from `0..num_wires` by a seeded shuffle.
fn pick_wires(num_wires: usize, count: usize, mut seed: u64) -> Vec<usize> {
    let mut wires: Vec<usize> = (0..num_wires).collect();
    for i in (1..num_wires).rev() {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        wires.swap(i, (seed >> 33) as usize % (i + 1));
    }
    wires.truncate(count);
    wires
}

#[derive(Clone, Debug)]
struct GateSpec {
    kind: u8,
    arity: usize,
    seed: u64,
    angles: [f64; 4],
    segment: bool,
}

fn gate_spec() -> impl Strategy<Value = GateSpec> {
    (
        0u8..4,
        0usize..4,
        any::<u64>(),
        [-PI..PI, 0.0..PI, -PI..PI, -PI..PI],
        any::<bool>(),
    )
        .prop_map(|(kind, arity, seed, angles, segment)| GateSpec {
            kind,
            arity,
            seed,
            angles,
            segment,
        })
}

fn build(num_wires: usize, specs: &[GateSpec]) -> Circuit {
    let mut c = Circuit::new(num_wires);
    for (i, s) in specs.iter().enumerate() {
        if s.segment {
            c.begin_segment(format!("S{i}"));
        }
        let targets = if s.kind == 2 { 2 } else { 1 };
        let controls_max = match s.kind {
            0 => 1,
            _ => num_wires - targets,
        };
        let nc = s.arity.min(controls_max);
        let wires = pick_wires(num_wires, targets + nc, s.seed);
        let controls: Vec<Control> = wires[targets..]
            .iter()
            .enumerate()
            .map(|(j, &w)| {
                if (s.seed >> j) & 1 == 0 {
                    Control::pos(w)
                } else {
                    Control::neg(w)
                }
            })
            .collect();
        let [a, t, p, l] = s.angles;
        let gate = match s.kind {
            0 => Gate {
                controls,
                ..Gate::not(wires[0])
            },
            1 => Gate {
                controls,
                ..Gate::coin(CoinAngles::new(a, t, p, l), wires[0])
            },
            2 => Gate {
                controls,
                ..Gate::swap(wires[0], wires[1])
            },
            _ => Gate::mcx(controls, wires[0]),
        };
        c.push(gate).unwrap();
    }
    c
}

fn circuit() -> impl Strategy<Value = Circuit> {
    (2usize..6, prop::collection::vec(gate_spec(), 0..24)).prop_map(|(w, specs)| build(w, &specs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn depth_is_invariant_under_relabeling(c in circuit(), seed in any::<u64>()) {
        let perm = pick_wires(c.num_wires(), c.num_wires(), seed);
        let relabeled = c.relabeled(&perm).unwrap();
        for cost in [CostModel::atomic(), CostModel::linear()] {
            for mode in [DepthMode::Asap, DepthMode::PerPackSum] {
                prop_assert_eq!(circuit_depth(&c, &cost, mode), circuit_depth(&relabeled, &cost, mode));
            }
        }
    }

    #[test]
    fn asap_is_at_most_the_segment_sum(c in circuit()) {
        for cost in [CostModel::atomic(), CostModel::linear()] {
            prop_assert!(circuit_depth(&c, &cost, DepthMode::Asap) <= circuit_depth(&c, &cost, DepthMode::PerPackSum));
        }
    }

    #[test]
    fn inverse_is_an_involution(c in circuit()) {
        let u = circuit_unitary(&c).unwrap();
        prop_assert!(unitarity_defect(&u) < 1e-12);
        let twice = circuit_unitary(&c.inverse().inverse()).unwrap();
        prop_assert!(max_abs_diff(&u, &twice) < 1e-12);
        let inv = circuit_unitary(&c.inverse()).unwrap();
        prop_assert!(max_abs_diff(&inv, &u.adjoint()) < 1e-12);
        prop_assert_eq!(c.inverse().inverse(), c);
    }

    #[test]
    fn text_round_trips(c in circuit()) {
        let text = write_circuit(&c);
        prop_assert_eq!(parse_circuit(&text).unwrap(), c);
    }

    #[test]
    fn sparse_and_dense_agree(c in circuit(), start in any::<u64>()) {
        let start = (start % (1 << c.num_wires())) as usize;
        let mut dense = StateVector::basis(c.num_wires(), start).unwrap();
        dense.apply(&c).unwrap();
        let mut sparse = SparseState::basis(c.num_wires(), start as u128).unwrap();
        sparse.apply(&c).unwrap();
        for (j, a) in dense.amplitudes().iter().enumerate() {
            prop_assert!((sparse.get(j as u128) - a).norm() < 1e-12);
        }
    }

    #[test]
    fn size_counts_gates(c in circuit()) {
        prop_assert_eq!(circuit_size(&c), c.gates().len());
    }
}

#[test]
fn builder_outputs_are_unitary() {
    for n in 1..=4 {
        for m in 0..=n {
            if WireLayout::new(n, m).unwrap().num_wires() > 10 {
                continue;
            }
            let coins = CoinTable::random(n, 6);
            for c in [
                build_coin_circuit(n, m, &coins).unwrap(),
                build_coin_circuit_optimized(n, m, &coins).unwrap(),
            ] {
                let u = circuit_unitary(&c).unwrap();
                assert!(unitarity_defect(&u) < 1e-12, "n={n} m={m}");
            }
        }
    }
}

#[test]
fn relabeling_a_walk_circuit_keeps_its_depth() {
    let c = build_coin_circuit(3, 2, &CoinTable::random(3, 2)).unwrap();
    let perm: Vec<usize> = (0..c.num_wires()).rev().collect();
    let r = c.relabeled(&perm).unwrap();
    let cost = CostModel::atomic();
    assert_eq!(
        circuit_depth(&c, &cost, DepthMode::PerPackSum),
        circuit_depth(&r, &cost, DepthMode::PerPackSum)
    );
    assert_eq!(circuit_size(&r), circuit_size(&c));
}

#[test]
fn circuit_core_examples() {
    let cost = CostModel::atomic();
    let mut c = Circuit::new(4);
    c.push(Gate::cnot(0, 1)).unwrap();
    c.push(Gate::cnot(2, 3)).unwrap();
    assert_eq!(circuit_depth(&c, &cost, DepthMode::Asap), 1);
    let mut c = Circuit::new(2);
    c.push(Gate::swap(0, 1)).unwrap();
    assert_eq!(circuit_depth(&c, &cost, DepthMode::Asap), 3);
    assert_eq!(
        circuit_width(&Circuit::for_layout(WireLayout::new(3, 1).unwrap()), &cost),
        7
    );
    assert_eq!(
        circuit_width(&Circuit::for_layout(WireLayout::new(2, 2).unwrap()), &cost),
        10
    );
    assert_eq!(
        circuit_width(&Circuit::for_layout(WireLayout::new(0, 0).unwrap()), &cost),
        2
    );
    assert_eq!(circuit_size(&Circuit::new(3)), 0);
    assert!(circuit_unitary(&Circuit::new(13)).is_err());

    let mut c = Circuit::new(2);
    c.push(Gate::not(0)).unwrap();
    c.push(Gate::swap(0, 1)).unwrap();
    assert_eq!(c.inverse().gates(), &[Gate::swap(0, 1), Gate::not(0)]);
    assert!(Circuit::new(2).inverse().is_empty());

    let counted = build_coin_circuit(2, 2, &CoinTable::random(2, 1)).unwrap();
    let recount: usize = counted.segments().iter().map(|s| s.range.len()).sum();
    assert_eq!(circuit_size(&counted), recount);
}
