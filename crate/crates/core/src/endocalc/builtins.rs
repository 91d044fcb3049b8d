use super::{endo_tensor, PermEndo};

pub const BUILTIN_NAMES: &[&str] = &["psi12", "psi13", "rho", "rhobar", "rho_table", "rhobar_table"];

// Rows list ψ(s_i) as terms "J,K" = s_J s_K^*.
const PSI12: [&str; 2] = ["12,1 + 11,2", "21,1 + 22,2"];
const PSI13: [&str; 2] = ["21,1 + 12,2", "11,1 + 22,2"];
const RHO_TABLE: [&str; 4] = [
    "23,1 + 21,2 + 14,3 + 12,4",
    "13,1 + 11,2 + 24,3 + 22,4",
    "41,1 + 43,2 + 32,3 + 34,4",
    "31,1 + 33,2 + 42,3 + 44,4",
];
const RHOBAR_TABLE: [&str; 4] = [
    "32,1 + 14,2 + 31,3 + 13,4",
    "41,1 + 23,2 + 42,3 + 24,4",
    "12,1 + 34,2 + 11,3 + 33,4",
    "21,1 + 43,2 + 22,3 + 44,4",
];

/// Named endomorphisms.
///
/// `rho` and `rhobar` are built as `psi12 ⊗_φ psi13` and `psi13 ⊗_φ psi12`.
/// `rho_table` and `rhobar_table` are the commonly quoted monomial tables;
/// they differ from the tensor products by the relabeling 2↔3 of the
/// starred letter and branch `P_4(1)` to itself.
pub fn builtin(name: &str) -> Option<PermEndo> {
    let table = |n, rows: &[&str]| PermEndo::from_table(n, rows).expect("built-in table is a bijection");
    Some(match name {
        "psi12" => table(2, &PSI12),
        "psi13" => table(2, &PSI13),
        "rho" => endo_tensor(&table(2, &PSI12), &table(2, &PSI13)).ok()?,
        "rhobar" => endo_tensor(&table(2, &PSI13), &table(2, &PSI12)).ok()?,
        "rho_table" => table(4, &RHO_TABLE),
        "rhobar_table" => table(4, &RHOBAR_TABLE),
        _ => return None,
    })
}
