//! Permutative endomorphisms and their φ-tensor products, written out as
//! sums of monomials s_J s_K^*.

use cuntz_rep::endocalc::{builtin, endo_monomials, endo_tensor, PermEndo};

fn print_endo(name: &str, e: &PermEndo) -> cuntz_rep::Result<()> {
    println!("{name} (depth {}):", e.depth());
    for i in 1..=e.alphabet() {
        println!("  s_{i} -> {}", endo_monomials(e, i)?);
    }
    Ok(())
}

pub fn main() -> cuntz_rep::Result<()> {
    let psi12 = builtin("psi12").expect("built-in");
    let psi13 = builtin("psi13").expect("built-in");
    print_endo("psi12", &psi12)?;
    print_endo("psi13", &psi13)?;

    let rho = endo_tensor(&psi12, &psi13)?;
    print_endo("psi12 (x) psi13", &rho)?;
    print_endo("rho_table", &builtin("rho_table").expect("built-in"))?;
    println!("tensor product equals rho_table: {}", rho == builtin("rho_table").expect("built-in"));

    println!("endo JSON: {}", serde_json::to_string(&psi12).expect("serializes"));
    Ok(())
}
