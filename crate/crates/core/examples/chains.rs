//! Chain representations: chain (x) cycle gives finitely many chains,
//! chain (x) chain a countable family collapsing to a few tail classes.

use cuntz_rep::oracle::{canonical_bfs_with, decompose_rings, product_bfs, Truncation};
use cuntz_rep::repcalc::{tensor, Decomposition, RepClass};

fn show(a: &RepClass, b: &RepClass) -> cuntz_rep::Result<()> {
    let formula = tensor(&Decomposition::single(a.clone()), &Decomposition::single(b.clone()))?;
    let oracle = decompose_rings(
        |t| product_bfs(&canonical_bfs_with(a, t)?, &canonical_bfs_with(b, t)?),
        Truncation::new(1, 12),
    )?;
    println!("{a} (x) {b}");
    println!("  formula: {formula}");
    println!("  oracle:  {} (complete: {})", oracle.decomposition, oracle.complete);
    Ok(())
}

pub fn main() -> cuntz_rep::Result<()> {
    let ones = RepClass::chain(2, &[], &[1])?;
    let twos = RepClass::chain(2, &[], &[2])?;
    show(&ones, &RepClass::cycle(2, &[2])?)?;
    show(&RepClass::chain(2, &[2], &[1])?, &RepClass::cycle(2, &[1, 2])?)?;
    show(&RepClass::cycle(2, &[1, 2])?, &RepClass::chain(3, &[3], &[1, 2])?)?;
    show(&ones, &twos)?;
    show(&RepClass::chain(2, &[], &[1, 2])?, &RepClass::chain(2, &[], &[1, 1, 2])?)?;
    Ok(())
}
