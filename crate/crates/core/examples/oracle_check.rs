//! Recomputes tensor products by orbit enumeration on truncated branching
//! function systems and compares with the closed form.

use cuntz_rep::oracle::{canonical_bfs, decompose_bfs, product_bfs, state_eval_bfs, to_dot};
use cuntz_rep::repcalc::{tensor, Decomposition, RepClass};

pub fn main() -> cuntz_rep::Result<()> {
    let pairs = [
        (RepClass::cycle(2, &[1, 2])?, RepClass::cycle(2, &[1, 2])?),
        (RepClass::cycle(3, &[1, 2, 3])?, RepClass::cycle(2, &[2, 1])?),
        (RepClass::cycle(2, &[1, 1])?, RepClass::cycle(2, &[1, 2])?),
        (RepClass::cycle(4, &[1, 3, 4, 2])?, RepClass::cycle(3, &[3, 1, 1, 2, 2, 2])?),
    ];
    for (a, b) in &pairs {
        let model = product_bfs(&canonical_bfs(a, 2)?, &canonical_bfs(b, 2)?)?;
        let oracle = decompose_bfs(&model)?;
        let formula = tensor(&Decomposition::single(a.clone()), &Decomposition::single(b.clone()))?;
        let verdict = if oracle.complete && oracle.decomposition == formula { "MATCH" } else { "MISMATCH" };
        println!("{a} (x) {b}: {} labels, {verdict}", model.len());
        println!("  {}", oracle.decomposition);
    }

    // vector state of the GP vector: <Ω, s_A s_B^* Ω>
    let p = canonical_bfs(&RepClass::cycle(2, &[1, 2])?, 4)?;
    for (a, b) in [(&[1, 2][..], &[][..]), (&[2, 1], &[]), (&[1], &[2]), (&[1, 2], &[1, 2])] {
        println!("<Ω, s_{a:?} s_{b:?}^* Ω> = {}", state_eval_bfs(&p, a, b)?);
    }

    let small = canonical_bfs(&RepClass::cycle(2, &[1])?, 1)?;
    print!("{}", to_dot(&small));
    Ok(())
}
