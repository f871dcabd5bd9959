//! In-place gate kernels on a dense little-endian amplitude array.
//!
//! Every kernel updates disjoint pairs of amplitudes whose indices differ only
//! in the target wire(s) and satisfy the controls. Large arrays are split
//! across rayon workers; each amplitude is computed by the same arithmetic
//! whatever the split, so results do not depend on thread count.

use rayon::prelude::*;

use crate::circuit::{Control, Gate, GateKind};
use crate::math::{Complex64, Mat2, ONE, ZERO};

/// Below this many pair updates a gate runs on the calling thread.
const PARALLEL_THRESHOLD: usize = 1 << 14;

/// Pairs handed to one rayon task.
const PARALLEL_BLOCK: usize = 1 << 12;

#[derive(Clone, Copy)]
struct AmpPtr(*mut Complex64);

// SAFETY: kernels only dereference the pointer at indices that are disjoint
// between iterations, and the borrow of the slice outlives the parallel loop.
unsafe impl Send for AmpPtr {}
unsafe impl Sync for AmpPtr {}

impl AmpPtr {
    // Method access keeps closures from capturing the raw field directly.
    fn get(self) -> *mut Complex64 {
        self.0
    }
}

/// Inserts a zero bit at each position of `fixed` (sorted ascending) into `j`.
#[inline]
fn deposit(mut j: usize, fixed: &[usize]) -> usize {
    for &p in fixed {
        let low = j & ((1 << p) - 1);
        j = ((j >> p) << (p + 1)) | low;
    }
    j
}

fn control_bits(controls: &[Control]) -> (Vec<usize>, usize) {
    let mut wires = Vec::with_capacity(controls.len());
    let mut value = 0;
    for c in controls {
        wires.push(c.wire);
        if c.is_positive() {
            value |= 1 << c.wire;
        }
    }
    (wires, value)
}

fn for_each_base<F>(num_wires: usize, mut fixed: Vec<usize>, value: usize, f: F)
where
    F: Fn(usize) + Sync + Send,
{
    fixed.sort_unstable();
    let count = 1usize << (num_wires - fixed.len());
    if count >= PARALLEL_THRESHOLD {
        (0..count)
            .into_par_iter()
            .with_min_len(1 << 12)
            .for_each(|j| f(deposit(j, &fixed) | value));
    } else {
        for j in 0..count {
            f(deposit(j, &fixed) | value);
        }
    }
}

fn num_wires_of(amps: &[Complex64]) -> usize {
    debug_assert!(amps.len().is_power_of_two());
    amps.len().trailing_zeros() as usize
}

/// Calls `f(lo, hi)` on every amplitude pair that differs only in `target`
/// and whose index satisfies `index & mask == value`.
///
/// The array is walked as contiguous blocks of `2^(target+1)` amplitudes, each
/// split into its `target = 0` and `target = 1` halves, which keeps the inner
/// loop free of index arithmetic.
fn for_each_pair<F>(amps: &mut [Complex64], target: usize, mask: usize, value: usize, f: F)
where
    F: Fn(&mut Complex64, &mut Complex64) + Sync + Send,
{
    let half = 1usize << target;
    let run = |offset: usize, lo: &mut [Complex64], hi: &mut [Complex64]| {
        if mask == 0 {
            lo.iter_mut().zip(hi.iter_mut()).for_each(|(a, b)| f(a, b));
        } else {
            for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                if (offset + j) & mask == value {
                    f(a, b);
                }
            }
        }
    };
    if amps.len() / 2 < PARALLEL_THRESHOLD || rayon::current_num_threads() == 1 {
        for (c, block) in amps.chunks_mut(2 * half).enumerate() {
            let (lo, hi) = block.split_at_mut(half);
            run(c * 2 * half, lo, hi);
        }
    } else if half >= PARALLEL_BLOCK {
        for (c, block) in amps.chunks_mut(2 * half).enumerate() {
            let (lo, hi) = block.split_at_mut(half);
            lo.par_chunks_mut(PARALLEL_BLOCK)
                .zip(hi.par_chunks_mut(PARALLEL_BLOCK))
                .enumerate()
                .for_each(|(b, (l, h))| run(c * 2 * half + b * PARALLEL_BLOCK, l, h));
        }
    } else {
        amps.par_chunks_mut(2 * half)
            .enumerate()
            .with_min_len(PARALLEL_BLOCK / half)
            .for_each(|(c, block)| {
                let (lo, hi) = block.split_at_mut(half);
                run(c * 2 * half, lo, hi);
            });
    }
}

fn control_mask(controls: &[Control]) -> (usize, usize) {
    controls.iter().fold((0, 0), |(mask, value), c| {
        let bit = 1 << c.wire;
        (
            mask | bit,
            if c.is_positive() { value | bit } else { value },
        )
    })
}

/// Flips `target` wherever all controls are satisfied.
pub fn apply_x(amps: &mut [Complex64], target: usize, controls: &[Control]) {
    let (mask, value) = control_mask(controls);
    for_each_pair(amps, target, mask, value, std::mem::swap);
}

/// Exchanges wires `a` and `b` wherever all controls are satisfied.
pub fn apply_swap(amps: &mut [Complex64], a: usize, b: usize, controls: &[Control]) {
    let w = num_wires_of(amps);
    let (mut fixed, value) = control_bits(controls);
    fixed.push(a);
    fixed.push(b);
    let (abit, bbit) = (1 << a, 1 << b);
    let ptr = AmpPtr(amps.as_mut_ptr());
    for_each_base(w, fixed, value, move |base| {
        let p = ptr.get();
        // SAFETY: as in `apply_x`; the pair is |..a=1,b=0..> <-> |..a=0,b=1..>.
        unsafe { std::ptr::swap(p.add(base | abit), p.add(base | bbit)) }
    });
}

/// Applies the 2x2 matrix `m` to `target` wherever all controls are satisfied.
pub fn apply_mat2(amps: &mut [Complex64], target: usize, controls: &[Control], m: &Mat2) {
    let (mask, value) = control_mask(controls);
    let [[m00, m01], [m10, m11]] = m.0;
    if m01 == ZERO && m10 == ZERO {
        // Diagonal gates (phases, RZ) dominate lowered circuits.
        if m00 == ONE {
            return for_each_pair(amps, target, mask, value, |_, hi| *hi *= m11);
        }
        return for_each_pair(amps, target, mask, value, |lo, hi| {
            *lo *= m00;
            *hi *= m11;
        });
    }
    for_each_pair(amps, target, mask, value, |lo, hi| {
        let (a0, a1) = (*lo, *hi);
        *lo = m00 * a0 + m01 * a1;
        *hi = m10 * a0 + m11 * a1;
    });
}

pub fn apply_gate(amps: &mut [Complex64], gate: &Gate) {
    match gate.kind {
        GateKind::Not | GateKind::Mcx => apply_x(amps, gate.targets[0], &gate.controls),
        GateKind::Swap => apply_swap(amps, gate.targets[0], gate.targets[1], &gate.controls),
        GateKind::Coin(angles) => {
            apply_mat2(amps, gate.targets[0], &gate.controls, &angles.matrix())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(w: usize, k: usize) -> Vec<Complex64> {
        let mut v = vec![ZERO; 1 << w];
        v[k] = ONE;
        v
    }

    fn hot(v: &[Complex64]) -> usize {
        v.iter().position(|a| a.norm() > 0.5).unwrap()
    }

    #[test]
    fn deposit_skips_fixed_bits() {
        let fixed = [1, 3];
        let got: Vec<usize> = (0..4).map(|j| deposit(j, &fixed)).collect();
        assert_eq!(got, vec![0b0000, 0b0001, 0b0100, 0b0101]);
    }

    #[test]
    fn negative_control_fires_on_zero() {
        // wire 1 is a negative control, wire 0 the target
        let mut v = basis(2, 0b00);
        apply_x(&mut v, 0, &[Control::neg(1)]);
        assert_eq!(hot(&v), 0b01);
        let mut v = basis(2, 0b10);
        apply_x(&mut v, 0, &[Control::neg(1)]);
        assert_eq!(hot(&v), 0b10);
    }

    #[test]
    fn controlled_swap_moves_only_when_set() {
        let mut v = basis(3, 0b101);
        apply_swap(&mut v, 0, 1, &[Control::pos(2)]);
        assert_eq!(hot(&v), 0b110);
        let mut v = basis(3, 0b001);
        apply_swap(&mut v, 0, 1, &[Control::pos(2)]);
        assert_eq!(hot(&v), 0b001);
    }

    #[test]
    fn parallel_and_serial_paths_agree_bitwise() {
        let w = 16;
        let mut v: Vec<Complex64> = (0..1usize << w)
            .map(|i| Complex64::new((i as f64 * 0.37).sin(), (i as f64 * 0.11).cos()))
            .collect();
        let mut serial = v.clone();
        let m = Mat2::coin(0.3, 1.1, -0.4, 2.0);
        apply_mat2(&mut v, 5, &[], &m);
        // reference: plain loop
        for i in 0..serial.len() {
            if i & (1 << 5) == 0 {
                let (a0, a1) = (serial[i], serial[i | 1 << 5]);
                serial[i] = m.0[0][0] * a0 + m.0[0][1] * a1;
                serial[i | 1 << 5] = m.0[1][0] * a0 + m.0[1][1] * a1;
            }
        }
        assert_eq!(v, serial);

        // High target with a negative control takes the in-block split.
        let mut fast = v.clone();
        apply_mat2(&mut fast, 15, &[Control::neg(2)], &m);
        for i in 0..v.len() {
            if i & (1 << 15) == 0 && i & 0b100 == 0 {
                let (a0, a1) = (v[i], v[i | 1 << 15]);
                v[i] = m.0[0][0] * a0 + m.0[0][1] * a1;
                v[i | 1 << 15] = m.0[1][0] * a0 + m.0[1][1] * a1;
            }
        }
        assert_eq!(fast, v);
    }
}
