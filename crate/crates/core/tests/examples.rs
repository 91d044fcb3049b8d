//! Runs every cargo example in-process.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;

        #[test]
        fn $name() {
            $name::main().unwrap();
        }
    };
}

example!(tensor_table, "../examples/tensor_table.rs");
example!(tensor_powers, "../examples/tensor_powers.rs");
example!(chains, "../examples/chains.rs");
example!(endomorphisms, "../examples/endomorphisms.rs");
example!(branching, "../examples/branching.rs");
example!(oracle_check, "../examples/oracle_check.rs");
example!(expressions, "../examples/expressions.rs");
example!(symmetry, "../examples/symmetry.rs");
