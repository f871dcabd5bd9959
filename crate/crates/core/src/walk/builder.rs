//! Builders for every operator of the adjustable-depth coin circuit.
//!
//! Circuits are emitted in execution order. A pack at stage `i` runs
//! `Q1,i ; Q2 ; Q0,i ; Q2^dg ; Q1,i^dg`, and packs run for `i = 0, 1, ...`.
//! Every named sub-operator is its own segment, which is what
//! [`DepthMode::PerPackSum`](crate::circuit::DepthMode::PerPackSum) sums over.

use crate::circuit::{Circuit, Control, Gate, WireLayout};
use crate::error::{Error, Result};

use super::coins::CoinTable;

pub(crate) fn walk_layout(n: usize, m: usize) -> Result<WireLayout> {
    if n == 0 {
        return Err(Error::InvalidConfig(
            "the walk needs at least one position qubit".into(),
        ));
    }
    WireLayout::new(n, m)
}

fn check_stage(i: usize, layout: &WireLayout) -> Result<()> {
    if i >= layout.num_packs() {
        return Err(Error::StageOutOfRange {
            stage: i,
            packs: layout.num_packs(),
        });
    }
    Ok(())
}

fn check_coins(coins: &CoinTable, layout: &WireLayout) -> Result<()> {
    if coins.n() != layout.n() {
        return Err(Error::InvalidCoins(format!(
            "table has {} coins but the walk has {} positions",
            coins.len(),
            1usize << layout.n()
        )));
    }
    Ok(())
}

/// Start of the block of ancillary coins that holds copies of position bit
/// `b_k`: `l_0 = 1`, `l_k = 2^(k-1) - 1 + l_(k-1)`.
pub fn ancilla_index_l(k: usize) -> usize {
    (1..=k).fold(1, |l, j| (1 << (j - 1)) - 1 + l)
}

/// Which NOT gates surround the multi-controlled NOT of stage `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FlipRule {
    /// Flip `b_k` when bit `k - m` of `i` is 0, so the MCX fires on `b = i`.
    Generalized,
    /// Flip `b_k` when `i mod 2^(k-m) == 0`: only the flips that do not cancel
    /// against the previous stage's undo.
    Incremental,
    /// No flips at all.
    Skip,
}

impl FlipRule {
    fn flips(self, i: usize, j: usize) -> bool {
        match self {
            FlipRule::Generalized => (i >> j) & 1 == 0,
            FlipRule::Incremental => i & ((1 << j) - 1) == 0,
            FlipRule::Skip => false,
        }
    }
}

/// Controlled coins `C_(i 2^m + k)` on `s_k`, each controlled by `b'_k`.
pub fn build_q0(i: usize, n: usize, m: usize, coins: &CoinTable) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    check_stage(i, &layout)?;
    check_coins(coins, &layout)?;
    let mut c = Circuit::for_layout(layout);
    c.begin_segment("Q0");
    for k in 0..layout.pack_size() {
        c.push(Gate::controlled_coin(
            layout.ancillary_position(k),
            coins.get(i * layout.pack_size() + k),
            layout.coin(k),
        ))?;
    }
    Ok(c)
}

/// Fan-out of the low position bits `b_1..b_(m-1)` onto the ancillary coins,
/// so the controlled SWAPs of each `B_j` can run in parallel. Round `j`
/// doubles the number of copies of every `b_k` with `k > j`; after the last
/// round `b_k` has `2^k - 1` copies on `s_(l_k) .. s_(l_k + 2^k - 2)`.
pub fn build_q10(n: usize, m: usize) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    q10(&layout)
}

fn q10(layout: &WireLayout) -> Result<Circuit> {
    let m = layout.m();
    let mut c = Circuit::for_layout(*layout);
    c.begin_segment("Q10");
    for j in 0..m.saturating_sub(1) {
        for k in j + 1..m {
            let l = ancilla_index_l(k);
            let b = layout.position(k);
            if j == 0 {
                c.push(Gate::cnot(b, layout.coin(l)))?;
            } else {
                c.push(Gate::cnot(b, layout.coin(l + (1 << j) - 1)))?;
                for p in 0..(1 << j) - 1 {
                    c.push(Gate::cnot(
                        layout.coin(l + p),
                        layout.coin(l + p + (1 << j)),
                    ))?;
                }
            }
        }
    }
    Ok(c)
}

/// NOT gates on `b_m..b_(n-1)` chosen by `rule`, then the multi-controlled NOT
/// onto `b'_0` (a bare NOT when `m == n`).
fn push_toffoli(c: &mut Circuit, layout: &WireLayout, i: usize, rule: FlipRule) -> Result<()> {
    let (n, m) = (layout.n(), layout.m());
    for k in m..n {
        if rule.flips(i, k - m) {
            c.push(Gate::not(layout.position(k)))?;
        }
    }
    let target = layout.ancillary_position(0);
    if m == n {
        c.push(Gate::not(target))
    } else {
        let controls = (m..n).map(|k| Control::pos(layout.position(k))).collect();
        c.push(Gate::mcx(controls, target))
    }
}

/// The almost generalized multi-Toffoli of stage `i`: fires on `b'_0` exactly
/// when the high position bits `b_(n-1)..b_m` spell `i`, leaving the flipped
/// control wires for the adjoint to restore.
pub fn build_generalized_toffoli(i: usize, n: usize, m: usize) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    check_stage(i, &layout)?;
    let mut c = Circuit::for_layout(layout);
    push_toffoli(&mut c, &layout, i, FlipRule::Generalized)?;
    Ok(c)
}

/// `B_0 .. B_(m-1)`: `B_j` moves the one-hot marker from `b'_k` to
/// `b'_(k + 2^j)` for every `k < 2^j` when `b_j` is set, reading `b_j` itself
/// for `k = 0` and its copies for the rest.
fn push_swap_network(c: &mut Circuit, layout: &WireLayout) -> Result<()> {
    for j in 0..layout.m() {
        let half = 1 << j;
        c.push(Gate::cswap(
            layout.position(j),
            layout.ancillary_position(0),
            layout.ancillary_position(half),
        ))?;
        let l = ancilla_index_l(j);
        for k in 1..half {
            c.push(Gate::cswap(
                layout.coin(l + k - 1),
                layout.ancillary_position(k),
                layout.ancillary_position(k + half),
            ))?;
        }
    }
    Ok(())
}

fn q11(layout: &WireLayout, i: usize, rule: FlipRule, label: &str) -> Result<Circuit> {
    let mut c = Circuit::for_layout(*layout);
    c.begin_segment(label);
    push_toffoli(&mut c, layout, i, rule)?;
    push_swap_network(&mut c, layout)?;
    Ok(c)
}

/// Generalized Toffoli followed by the controlled-SWAP network.
pub fn build_q11(i: usize, n: usize, m: usize) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    check_stage(i, &layout)?;
    q11(&layout, i, FlipRule::Generalized, "Q11")
}

fn sandwich(layout: &WireLayout, middle: &Circuit) -> Result<Circuit> {
    let copies = q10(layout)?;
    let mut c = copies.clone();
    c.append(middle)?;
    c.append(&copies.inverse())?;
    Ok(c)
}

/// Ancillary-position encoder `Q10^dg Q11,i Q10`: sets `b'` to the one-hot
/// `k - i 2^m` for the current positions `k` of stage `i`, and leaves it at 0
/// otherwise.
pub fn build_q1(i: usize, n: usize, m: usize) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    check_stage(i, &layout)?;
    sandwich(&layout, &q11(&layout, i, FlipRule::Generalized, "Q11")?)
}

/// Encoder of the NOT-reduced pack: like [`build_q1`] but with only the flips
/// that survive cancellation against the previous stage.
pub fn build_p1(i: usize, n: usize, m: usize) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    check_stage(i, &layout)?;
    sandwich(&layout, &q11(&layout, i, FlipRule::Incremental, "P11")?)
}

/// Decoder of the NOT-reduced pack: the adjoint of the encoder without any
/// flips, so the control wires stay flipped for the next stage.
pub fn build_p1_bar(i: usize, n: usize, m: usize) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    check_stage(i, &layout)?;
    Ok(sandwich(&layout, &q11(&layout, i, FlipRule::Skip, "P11")?)?.inverse())
}

/// Moves the principal coin onto `s_k` where `b'_k` is set: a CNOT prefix that
/// accumulates block parities into the top `b'` of each block, then `m`
/// levels of controlled SWAPs halving the block size, each followed by CNOTs
/// that re-derive the parities for the next level.
pub fn build_q2(n: usize, m: usize) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    let top = layout.pack_size() - 1;
    let bp = |k: usize| layout.ancillary_position(k);
    let mut c = Circuit::for_layout(layout);
    c.begin_segment("Q2");
    for j in 0..m.saturating_sub(1) {
        for k in 0..(1usize << (m - j - 1)) - 1 {
            let target = top - k * (1 << (j + 1));
            c.push(Gate::cnot(bp(target - (1 << j)), bp(target)))?;
        }
    }
    for j in 0..m {
        let block = 1usize << (m - j);
        for k in 0..1usize << j {
            c.push(Gate::cswap(
                bp((k + 1) * block - 1),
                layout.coin(k * block),
                layout.coin(k * block + block / 2),
            ))?;
        }
        if j + 1 < m {
            let stride = block / 2;
            for l in 0..(1usize << (j + 1)) - 1 {
                let target = top - l * stride;
                c.push(Gate::cnot(bp(target - stride / 2), bp(target)))?;
            }
        }
    }
    Ok(c)
}

fn assemble_pack(
    encode: &Circuit,
    q2: &Circuit,
    q0: &Circuit,
    decode: &Circuit,
) -> Result<Circuit> {
    let mut c = encode.clone();
    c.append(q2)?;
    c.append(q0)?;
    c.append(&q2.inverse())?;
    c.append(decode)?;
    Ok(c)
}

/// Pack `i`: applies `C_k` for the `2^m` current positions of stage `i`.
pub fn build_pack(i: usize, n: usize, m: usize, coins: &CoinTable) -> Result<Circuit> {
    let q1 = build_q1(i, n, m)?;
    assemble_pack(
        &q1,
        &build_q2(n, m)?,
        &build_q0(i, n, m, coins)?,
        &q1.inverse(),
    )
}

/// Pack `i` of the NOT-reduced circuit. Only meaningful inside the full
/// product: it expects the flips left behind by pack `i - 1`.
pub fn build_pack_optimized(i: usize, n: usize, m: usize, coins: &CoinTable) -> Result<Circuit> {
    assemble_pack(
        &build_p1(i, n, m)?,
        &build_q2(n, m)?,
        &build_q0(i, n, m, coins)?,
        &build_p1_bar(i, n, m)?,
    )
}

/// All `2^(n-m)` packs in increasing stage order.
pub fn build_coin_circuit(n: usize, m: usize, coins: &CoinTable) -> Result<Circuit> {
    chain_packs(n, m, coins, build_pack)
}

/// The coin circuit with redundant NOT pairs between consecutive stages
/// removed.
pub fn build_coin_circuit_optimized(n: usize, m: usize, coins: &CoinTable) -> Result<Circuit> {
    chain_packs(n, m, coins, build_pack_optimized)
}

fn chain_packs(
    n: usize,
    m: usize,
    coins: &CoinTable,
    pack: fn(usize, usize, usize, &CoinTable) -> Result<Circuit>,
) -> Result<Circuit> {
    let layout = walk_layout(n, m)?;
    check_coins(coins, &layout)?;
    let mut c = Circuit::for_layout(layout);
    for i in 0..layout.num_packs() {
        c.append(&pack(i, n, m, coins)?)?;
    }
    Ok(c)
}
