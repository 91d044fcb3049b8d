//! Swapping the tensor factors is a relabeling of the letters.

use cuntz_rep::repcalc::{relabel, tensor, Decomposition, RepClass};
use cuntz_rep::words::{relabel_perm, SlotPerm};

pub fn main() -> cuntz_rep::Result<()> {
    let a = Decomposition::single(RepClass::cycle(2, &[1, 2])?);
    let b = Decomposition::single(RepClass::cycle(3, &[1, 3, 3])?);
    let alpha = relabel_perm(&[2, 3], &SlotPerm::transposition(2, 1, 2)?, &SlotPerm::identity(2))?;
    println!("alpha = {:?}", alpha.images());

    let ab = tensor(&a, &b)?;
    let ba = tensor(&b, &a)?;
    println!("A (x) B         = {ab}");
    println!("B (x) A         = {ba}");
    println!("alpha(A (x) B)  = {}", relabel(&ab, &alpha)?);
    println!("twist holds: {}", relabel(&ab, &alpha)? == ba);
    Ok(())
}
