//! Branching laws π ∘ ψ computed on truncated models.

use cuntz_rep::endocalc::{branch, builtin};
use cuntz_rep::repcalc::{equivalent, RepClass};

pub fn main() -> cuntz_rep::Result<()> {
    let cases = [
        ("psi12", RepClass::cycle(2, &[1])?),
        ("psi13", RepClass::cycle(2, &[1])?),
        ("rho", RepClass::cycle(4, &[1])?),
        ("rhobar", RepClass::cycle(4, &[1])?),
        ("rho_table", RepClass::cycle(4, &[1])?),
        ("rhobar_table", RepClass::cycle(4, &[1])?),
        ("psi12", RepClass::cycle(2, &[1, 2])?),
    ];
    for (name, r) in cases {
        let b = branch(&r, &builtin(name).expect("built-in"), 8)?;
        println!("{r} o {name} = {} (complete: {})", b.decomposition, b.complete);
    }

    let (a, b) = (RepClass::cycle(4, &[2, 4])?, RepClass::cycle(4, &[3, 4])?);
    println!("{a} ~ {b}: {}", equivalent(&a, &b)?);
    Ok(())
}
