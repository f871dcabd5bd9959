//! Closed-form width and depth of the coin circuit and of its sub-operators,
//! with multi-controlled NOTs priced by a [`CostModel`].

use crate::circuit::CostModel;

fn delta(a: usize, b: usize) -> usize {
    usize::from(a == b)
}

/// `n + 2^(m+1) + eps_w(n - m)`.
pub fn structural_width(n: usize, m: usize, cost: &CostModel) -> usize {
    n + (2 << m) + cost.eps_w(n - m)
}

/// `2^(n-m) (20m + 2 eps_d(n-m) + 8 delta(m,0) - 5) - 2`.
pub fn structural_depth(n: usize, m: usize, cost: &CostModel) -> usize {
    let per_pack = 20 * m + 2 * cost.eps_d(n - m) + 8 * delta(m, 0) - 5;
    (per_pack << (n - m)) - 2
}

pub fn depth_q0() -> usize {
    1
}

/// `5m - 2(1 - delta(m,0))`.
pub fn depth_q2(m: usize) -> usize {
    if m == 0 {
        0
    } else {
        5 * m - 2
    }
}

/// `m - 1 + delta(m,0)`.
pub fn depth_q10(m: usize) -> usize {
    (m + delta(m, 0)) - 1
}

/// `1 - delta(i, last) + eps_d(n-m) + 3m`, with SWAPs at `cost.swap_cost`.
pub fn depth_q11(i: usize, n: usize, m: usize, cost: &CostModel) -> usize {
    let last = (1 << (n - m)) - 1;
    1 - delta(i, last) + cost.eps_d(n - m) + cost.swap_cost * m
}
