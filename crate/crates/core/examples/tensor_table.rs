//! The one-letter table and the two-letter formula over O_2 ⊗ O_2.

use cuntz_rep::repcalc::{tensor, Decomposition, RepClass};

pub fn main() -> cuntz_rep::Result<()> {
    println!("one-letter table:");
    for i in 1..=2 {
        for j in 1..=2 {
            let d = tensor(
                &Decomposition::single(RepClass::cycle(2, &[i])?),
                &Decomposition::single(RepClass::cycle(2, &[j])?),
            )?;
            println!("  P(2; {i}) (x) P(2; {j}) = {d}");
        }
    }

    println!("two-letter products:");
    let words: Vec<[u32; 2]> = vec![[1, 2], [1, 1], [2, 1], [2, 2]];
    for k in &words {
        for l in &words {
            let d = tensor(
                &Decomposition::single(RepClass::cycle(2, k)?),
                &Decomposition::single(RepClass::cycle(2, l)?),
            )?;
            println!("  P(2; {} {}) (x) P(2; {} {}) = {d}", k[0], k[1], l[0], l[1]);
        }
    }
    Ok(())
}
