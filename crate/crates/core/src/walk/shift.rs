use crate::circuit::{Circuit, Control, Gate};
use crate::error::{Error, Result};

/// Coin-dependent cyclic shift on `n` position wires plus the coin on wire
/// `n`: coin `|0>` decrements the position mod `2^n`, coin `|1>` increments it.
///
/// Each direction is a cascade of multi-controlled NOTs from the top bit
/// down: bit `b_k` flips when all lower bits are 1 (increment) or all 0
/// (decrement). The decrement cascade uses negative controls throughout.
pub fn build_shift_circuit(n: usize) -> Result<Circuit> {
    if n == 0 {
        return Err(Error::InvalidConfig(
            "the shift needs at least one position qubit".into(),
        ));
    }
    let coin = n;
    let mut c = Circuit::new(n + 1);
    c.begin_segment("S");
    for (coin_ctrl, bit_ctrl) in [
        (Control::neg(coin), Control::neg as fn(usize) -> Control),
        (Control::pos(coin), Control::pos as fn(usize) -> Control),
    ] {
        for k in (0..n).rev() {
            let mut controls: Vec<Control> = (0..k).map(bit_ctrl).collect();
            controls.push(coin_ctrl);
            c.push(Gate::mcx(controls, k))?;
        }
    }
    Ok(c)
}
