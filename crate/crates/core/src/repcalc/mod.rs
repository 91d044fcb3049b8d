//! Classes `P_N(J)` of cyclic permutative representations and the
//! φ-tensor product decomposed into canonical direct sums.
//!
//! Equivalence conventions used here:
//!
//! * a cycle class is keyed by the least rotation of its word; periodic
//!   words such as `(1,1)` are kept as they are, not reduced to the root;
//! * a chain class is keyed by its tail class (empty prefix, least-rotation
//!   primitive cycle), so chains that agree after finite prefixes coincide.
//!
//! Distributivity is applied to countable (`ω`) multiplicities as well as
//! finite ones.

mod json;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::words::{
    canonical_rotation, primitive_root, product_alphabet, relabel_perm, rotate, shift_chain, star,
    star_chain, LassoWord, LetterPerm, SlotPerm, Word,
};

pub use json::{ComponentJson, DecompositionJson, MultiplicityJson};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RepClass {
    /// Cycle class; the word is stored in least rotation.
    Cycle(Word),
    /// Chain class; the lasso is stored as its tail-class representative.
    Chain(LassoWord),
}

impl RepClass {
    pub fn alphabet(&self) -> u32 {
        match self {
            RepClass::Cycle(w) => w.alphabet(),
            RepClass::Chain(l) => l.alphabet(),
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, RepClass::Cycle(_))
    }

    pub fn is_chain(&self) -> bool {
        matches!(self, RepClass::Chain(_))
    }

    /// Shorthand for `mk_cycle(n, Word::new(n, letters))`.
    pub fn cycle(n: u32, letters: &[u32]) -> Result<RepClass> {
        mk_cycle(n, &Word::new(n, letters.to_vec())?)
    }

    /// Shorthand for a chain `prefix · cycle^∞` over `n`.
    pub fn chain(n: u32, prefix: &[u32], cycle: &[u32]) -> Result<RepClass> {
        mk_chain(n, &LassoWord::from_letters(n, prefix.to_vec(), cycle.to_vec())?)
    }

    fn sort_key(&self) -> (u8, usize, &[u32], &[u32]) {
        match self {
            RepClass::Cycle(w) => (0, w.len(), w.letters(), &[]),
            RepClass::Chain(l) => (
                1,
                l.prefix_letters().len() + l.cycle_letters().len(),
                l.prefix_letters(),
                l.cycle_letters(),
            ),
        }
    }

    fn map_letters(&self, perm: &LetterPerm) -> Result<RepClass> {
        match self {
            RepClass::Cycle(w) => mk_cycle(w.alphabet(), &w.map_letters(perm)?),
            RepClass::Chain(l) => mk_chain(l.alphabet(), &l.map_letters(perm)?),
        }
    }
}

impl Ord for RepClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphabet()
            .cmp(&other.alphabet())
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl PartialOrd for RepClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

impl fmt::Display for RepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({}; ", self.alphabet())?;
        match self {
            RepClass::Cycle(w) => write_letters(f, w.letters())?,
            RepClass::Chain(l) => {
                if !l.prefix_letters().is_empty() {
                    write_letters(f, l.prefix_letters())?;
                    write!(f, " ")?;
                }
                write!(f, "| ")?;
                write_letters(f, l.cycle_letters())?;
            }
        }
        write!(f, ")")
    }
}

pub fn mk_cycle(n: u32, j: &Word) -> Result<RepClass> {
    if j.is_empty() {
        return Err(Error::EmptyWord);
    }
    if j.alphabet() != n {
        return Err(Error::AlphabetMismatch { left: n, right: j.alphabet() });
    }
    Ok(RepClass::Cycle(canonical_rotation(j)))
}

pub fn mk_chain(n: u32, l: &LassoWord) -> Result<RepClass> {
    if l.alphabet() != n {
        return Err(Error::AlphabetMismatch { left: n, right: l.alphabet() });
    }
    Ok(RepClass::Chain(l.tail_class()))
}

/// Multiplicity of a component: a positive count or `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multiplicity {
    Finite(u64),
    Omega,
}

impl Multiplicity {
    pub const ONE: Multiplicity = Multiplicity::Finite(1);
}

impl Add for Multiplicity {
    type Output = Multiplicity;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => Multiplicity::Finite(a + b),
            _ => Multiplicity::Omega,
        }
    }
}

impl Mul for Multiplicity {
    type Output = Multiplicity;

    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => Multiplicity::Finite(a * b),
            _ => Multiplicity::Omega,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Omega => write!(f, "inf"),
        }
    }
}

/// A direct sum of classes over one alphabet, with aggregated multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    alphabet: u32,
    components: BTreeMap<RepClass, Multiplicity>,
}

impl Decomposition {
    pub fn empty(alphabet: u32) -> Self {
        Decomposition { alphabet, components: BTreeMap::new() }
    }

    pub fn single(class: RepClass) -> Self {
        let mut d = Decomposition::empty(class.alphabet());
        d.components.insert(class, Multiplicity::ONE);
        d
    }

    pub fn from_components<I>(alphabet: u32, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (RepClass, Multiplicity)>,
    {
        let mut d = Decomposition::empty(alphabet);
        for (c, m) in items {
            d.add(c, m)?;
        }
        Ok(d)
    }

    pub fn add(&mut self, class: RepClass, mult: Multiplicity) -> Result<()> {
        if class.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch { left: self.alphabet, right: class.alphabet() });
        }
        if mult == Multiplicity::Finite(0) {
            return Ok(());
        }
        let slot = self.components.entry(class).or_insert(Multiplicity::Finite(0));
        *slot = *slot + mult;
        Ok(())
    }

    /// `self ⊕ other`.
    pub fn direct_sum(&self, other: &Decomposition) -> Result<Decomposition> {
        let mut out = self.clone();
        for (c, &m) in &other.components {
            out.add(c.clone(), m)?;
        }
        Ok(out)
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn components(&self) -> impl Iterator<Item = (&RepClass, Multiplicity)> {
        self.components.iter().map(|(c, &m)| (c, m))
    }

    pub fn multiplicity(&self, class: &RepClass) -> Option<Multiplicity> {
        self.components.get(class).copied()
    }

    /// Number of distinct classes.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Total number of components counted with multiplicity.
    pub fn total(&self) -> Multiplicity {
        self.components.values().fold(Multiplicity::Finite(0), |a, &b| a + b)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.components.values().all(|&m| m == Multiplicity::ONE)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, " (+) ")?;
            }
            if *m != Multiplicity::ONE {
                write!(f, "{m}*")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Component classes of `r1 ⊗_φ r2`, each with its multiplicity (repeats allowed).
pub fn tensor_classes(r1: &RepClass, r2: &RepClass) -> Result<Vec<(RepClass, Multiplicity)>> {
    let nm = product_alphabet(r1.alphabet(), r2.alphabet())?;
    match (r1, r2) {
        (RepClass::Cycle(k), RepClass::Cycle(l)) => {
            let g = k.len().gcd(&l.len());
            (1..=g)
                .map(|i| Ok((mk_cycle(nm, &star(k, &rotate(l, i)?)?)?, Multiplicity::ONE)))
                .collect()
        }
        (RepClass::Chain(k), RepClass::Cycle(l)) => (1..=l.len())
            .map(|i| {
                let li = LassoWord::periodic(&rotate(l, i)?)?;
                Ok((mk_chain(nm, &star_chain(k, &li)?)?, Multiplicity::ONE))
            })
            .collect(),
        (RepClass::Cycle(_), RepClass::Chain(_)) => {
            // Computed as the transposed product, relabeled by α(s_{N(j-1)+i}) = s_{M(i-1)+j}.
            let swapped = tensor_classes(r2, r1)?;
            let alpha = relabel_perm(
                &[r1.alphabet(), r2.alphabet()],
                &SlotPerm::identity(2),
                &SlotPerm::transposition(2, 1, 2)?,
            )?;
            swapped
                .into_iter()
                .map(|(c, m)| Ok((c.map_letters(&alpha)?, m)))
                .collect()
        }
        (RepClass::Chain(k), RepClass::Chain(l)) => {
            // The Z-indexed family is periodic in i up to tail class; one window
            // beyond both prefixes and a full common period covers every class.
            let window = (k.prefix_letters().len()
                + l.prefix_letters().len()
                + k.period().lcm(&l.period())) as i64;
            let mut classes = BTreeSet::new();
            for i in -window..=window {
                classes.insert(mk_chain(nm, &star_chain(k, &shift_chain(l, i))?)?);
            }
            Ok(classes.into_iter().map(|c| (c, Multiplicity::Omega)).collect())
        }
    }
}

/// `d1 ⊗_φ d2`, extended bilinearly over direct sums.
pub fn tensor(d1: &Decomposition, d2: &Decomposition) -> Result<Decomposition> {
    let mut out = Decomposition::empty(product_alphabet(d1.alphabet, d2.alphabet)?);
    for (c1, m1) in d1.components() {
        for (c2, m2) in d2.components() {
            for (c, m) in tensor_classes(c1, c2)? {
                out.add(c, m1 * m2 * m)?;
            }
        }
    }
    Ok(out)
}

/// n-fold left-associated tensor power, `n >= 1`.
pub fn tensor_power(d: &Decomposition, n: usize) -> Result<Decomposition> {
    if n == 0 {
        return Err(Error::Unsupported("tensor power needs n >= 1".into()));
    }
    let mut acc = d.clone();
    for _ in 1..n {
        acc = tensor(&acc, d)?;
    }
    Ok(acc)
}

pub fn equivalent(r1: &RepClass, r2: &RepClass) -> Result<bool> {
    if r1.alphabet() != r2.alphabet() {
        return Err(Error::AlphabetMismatch { left: r1.alphabet(), right: r2.alphabet() });
    }
    Ok(match (r1, r2) {
        (RepClass::Cycle(a), RepClass::Cycle(b)) => {
            a.len() == b.len() && canonical_rotation(a) == canonical_rotation(b)
        }
        (RepClass::Chain(a), RepClass::Chain(b)) => a.tail_equivalent(b),
        _ => false,
    })
}

/// Cycles are irreducible iff their word is non-periodic; chains are
/// treated as irreducible.
pub fn irreducible(r: &RepClass) -> bool {
    match r {
        RepClass::Cycle(w) => primitive_root(w).1 == 1,
        RepClass::Chain(_) => true,
    }
}

/// Applies a letter permutation to every component and re-canonicalizes.
pub fn relabel(d: &Decomposition, p: &LetterPerm) -> Result<Decomposition> {
    if p.len() as u32 != d.alphabet {
        return Err(Error::AlphabetMismatch { left: d.alphabet, right: p.len() as u32 });
    }
    let mut out = Decomposition::empty(d.alphabet);
    for (c, m) in d.components() {
        out.add(c.map_letters(p)?, m)?;
    }
    Ok(out)
}
