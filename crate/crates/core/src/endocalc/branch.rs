use crate::error::{Error, Result};
use crate::oracle::{
    canonical_bfs_with, compose_bfs, decompose_bfs, fitted_tree_depth, Truncation,
};
use crate::repcalc::{Decomposition, RepClass};

use super::PermEndo;

/// Label budget for a single branching model.
pub const BRANCH_LABELS: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branching {
    pub decomposition: Decomposition,
    /// Whether every truncated basis label was accounted for.
    pub complete: bool,
}

/// Decomposes `π ∘ ψ_g` for a cycle class by simulation on its canonical
/// model, with tree depth at most `depth_budget` (reduced to fit
/// [`BRANCH_LABELS`]).
pub fn branch(r: &RepClass, e: &PermEndo, depth_budget: usize) -> Result<Branching> {
    let RepClass::Cycle(j) = r else {
        return Err(Error::Unsupported("branching is computed for cycle classes only".into()));
    };
    if r.alphabet() != e.alphabet() {
        return Err(Error::AlphabetMismatch { left: r.alphabet(), right: e.alphabet() });
    }
    let tree = fitted_tree_depth(r.alphabet(), j.len(), depth_budget.max(1), BRANCH_LABELS);
    let model = canonical_bfs_with(r, Truncation::new(tree, 0))?;
    let d = decompose_bfs(&compose_bfs(&model, e)?)?;
    Ok(Branching { decomposition: d.decomposition, complete: d.complete })
}

/// [`branch`] applied to every component, multiplicities carried through.
pub fn branch_decomposition(d: &Decomposition, e: &PermEndo, depth_budget: usize) -> Result<Branching> {
    let mut out = Branching { decomposition: Decomposition::empty(d.alphabet()), complete: true };
    for (c, m) in d.components() {
        let b = branch(c, e, depth_budget)?;
        out.complete &= b.complete;
        for (c2, m2) in b.decomposition.components() {
            out.decomposition.add(c2.clone(), m * m2)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endocalc::{builtin, endo_tensor};
    use crate::repcalc::{tensor, Multiplicity};

    fn cyc(n: u32, l: &[u32]) -> RepClass {
        RepClass::cycle(n, l).unwrap()
    }

    #[test]
    fn printed_branchings() {
        let cases = [
            ("psi12", cyc(2, &[1]), cyc(2, &[1, 2])),
            ("psi13", cyc(2, &[1]), cyc(2, &[2])),
            ("rho", cyc(4, &[1]), cyc(4, &[2, 4])),
            ("rhobar", cyc(4, &[1]), cyc(4, &[3, 4])),
        ];
        for (name, r, expected) in cases {
            let b = branch(&r, &builtin(name).unwrap(), 8).unwrap();
            assert!(b.complete, "{name}");
            assert_eq!(b.decomposition, Decomposition::single(expected), "{name}");
        }
    }

    #[test]
    fn identity_branching_is_trivial() {
        let r = cyc(3, &[1, 3, 3]);
        let b = branch(&r, &PermEndo::identity(3).unwrap(), 4).unwrap();
        assert_eq!(b.decomposition, Decomposition::single(r));
    }

    #[test]
    fn chains_are_rejected() {
        let r = RepClass::chain(2, &[], &[1]).unwrap();
        assert!(matches!(branch(&r, &builtin("psi12").unwrap(), 4), Err(Error::Unsupported(_))));
        assert!(branch(&cyc(3, &[1]), &builtin("psi12").unwrap(), 4).is_err());
    }

    #[test]
    fn compatible_with_tensor() {
        let names = ["psi12", "psi13"];
        let words: [&[u32]; 3] = [&[1], &[2], &[1, 2]];
        for g in names {
            for h in names {
                let (e1, e2) = (builtin(g).unwrap(), builtin(h).unwrap());
                let e = endo_tensor(&e1, &e2).unwrap();
                for a in words {
                    for b in words {
                        let (r1, r2) = (cyc(2, a), cyc(2, b));
                        let lhs = branch_decomposition(
                            &tensor(&Decomposition::single(r1.clone()), &Decomposition::single(r2.clone())).unwrap(),
                            &e,
                            6,
                        )
                        .unwrap();
                        let b1 = branch(&r1, &e1, 6).unwrap();
                        let b2 = branch(&r2, &e2, 6).unwrap();
                        assert!(lhs.complete && b1.complete && b2.complete);
                        let rhs = tensor(&b1.decomposition, &b2.decomposition).unwrap();
                        assert_eq!(lhs.decomposition, rhs, "{g} {h} {a:?} {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicities_carry_through() {
        let mut d = Decomposition::empty(2);
        d.add(cyc(2, &[1]), Multiplicity::Finite(3)).unwrap();
        let b = branch_decomposition(&d, &builtin("psi12").unwrap(), 5).unwrap();
        assert_eq!(b.decomposition.multiplicity(&cyc(2, &[1, 2])), Some(Multiplicity::Finite(3)));
    }
}
