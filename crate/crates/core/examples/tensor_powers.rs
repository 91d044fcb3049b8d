//! Tensor powers of P_2(12): 2^{n-1} two-letter cycles over 2^n letters.

use cuntz_rep::repcalc::{tensor_power, Decomposition, RepClass};

pub fn main() -> cuntz_rep::Result<()> {
    let p = Decomposition::single(RepClass::cycle(2, &[1, 2])?);
    for n in 1..=5 {
        let d = tensor_power(&p, n)?;
        println!("n = {n}: {} components", d.len());
        println!("  {d}");
    }
    Ok(())
}
