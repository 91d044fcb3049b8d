//! The expression language used by the command-line tool.

use cuntz_rep::cli::{default_depth, eval_formula, eval_oracle, parse, CliError};

pub fn main() -> Result<(), CliError> {
    let sources = [
        "P(2;1 2) (x) P(2;2)",
        "P(2;1 2)^3",
        "P(4;1) o rho",
        "(P(2;1) (+) P(2;1 2)) (x) P(3;1 3)",
        "P(2;1) o psi12 (x) P(2;1) o psi13",
        "P(4;1) o (psi12 (x) psi13)",
        "P(2; 2 | 1) (x) P(2; 1 2)",
    ];
    for src in sources {
        let e = parse(src)?;
        let depth = default_depth(&e);
        let formula = eval_formula(&e, depth)?;
        let oracle = eval_oracle(&e, depth)?;
        println!("{e}");
        println!("  = {formula}");
        println!("  oracle agrees: {}", oracle.complete && oracle.decomposition == formula);
    }
    match parse("P(2;1 3)") {
        Err(err) => println!("{err}"),
        Ok(e) => println!("unexpectedly parsed {e}"),
    }
    Ok(())
}
