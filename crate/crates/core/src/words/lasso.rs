use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{
    canonical_rotation, check_alphabet, check_letters, primitive_root, product_alphabet, Letter,
    Word,
};
use crate::error::{Error, Result};

/// An eventually periodic infinite word `prefix · cycle^∞`.
///
/// Always stored in canonical form: the cycle is primitive and the prefix
/// is as short as possible, so two values are equal iff they denote the
/// same infinite word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LassoWord {
    alphabet: u32,
    prefix: Vec<Letter>,
    cycle: Vec<Letter>,
}

impl LassoWord {
    pub fn new(prefix: &Word, cycle: &Word) -> Result<Self> {
        if !prefix.is_empty() && prefix.alphabet() != cycle.alphabet() {
            return Err(Error::AlphabetMismatch { left: prefix.alphabet(), right: cycle.alphabet() });
        }
        Self::from_letters(cycle.alphabet(), prefix.letters().to_vec(), cycle.letters().to_vec())
    }

    pub fn from_letters(alphabet: u32, prefix: Vec<Letter>, cycle: Vec<Letter>) -> Result<Self> {
        check_alphabet(alphabet)?;
        if cycle.is_empty() {
            return Err(Error::EmptyWord);
        }
        check_letters(alphabet, &prefix)?;
        check_letters(alphabet, &cycle)?;
        Ok(Self::canonical(alphabet, prefix, cycle))
    }

    /// `L^∞` for a nonempty finite word.
    pub fn periodic(cycle: &Word) -> Result<Self> {
        Self::new(&Word::unit(cycle.alphabet()), cycle)
    }

    fn canonical(alphabet: u32, mut prefix: Vec<Letter>, cycle: Vec<Letter>) -> Self {
        let (root, _) = primitive_root(&Word::from_parts_unchecked(alphabet, cycle));
        let mut cycle = root.into_letters();
        while let (Some(&p), Some(&c)) = (prefix.last(), cycle.last()) {
            if p != c {
                break;
            }
            prefix.pop();
            cycle.rotate_right(1);
        }
        LassoWord { alphabet, prefix, cycle }
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn prefix(&self) -> Word {
        Word::from_parts_unchecked(self.alphabet, self.prefix.clone())
    }

    pub fn cycle(&self) -> Word {
        Word::from_parts_unchecked(self.alphabet, self.cycle.clone())
    }

    pub fn prefix_letters(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn cycle_letters(&self) -> &[Letter] {
        &self.cycle
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }

    /// Letter at 0-based position `t`.
    pub fn letter_at(&self, t: usize) -> Letter {
        if t < self.prefix.len() {
            self.prefix[t]
        } else {
            self.cycle[(t - self.prefix.len()) % self.cycle.len()]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..).map(move |t| self.letter_at(t))
    }

    pub fn expand(&self, n: usize) -> Vec<Letter> {
        self.iter().take(n).collect()
    }

    /// Representative of the tail class: empty prefix, least-rotation cycle.
    pub fn tail_class(&self) -> LassoWord {
        let cycle = canonical_rotation(&self.cycle()).into_letters();
        LassoWord { alphabet: self.alphabet, prefix: Vec::new(), cycle }
    }

    /// Whether the two words agree after dropping suitable finite prefixes.
    pub fn tail_equivalent(&self, other: &LassoWord) -> bool {
        self.alphabet == other.alphabet && self.tail_class() == other.tail_class()
    }

    pub fn map_letters(&self, perm: &super::LetterPerm) -> Result<LassoWord> {
        let prefix = self.prefix().map_letters(perm)?;
        let cycle = self.cycle().map_letters(perm)?;
        LassoWord::new(&prefix, &cycle)
    }
}

impl fmt::Display for LassoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})^∞", self.prefix(), self.cycle())
    }
}

/// `L^(i)` for infinite words: drop `i` letters when `i >= 0`, otherwise
/// prepend `|i|` copies of the letter 1.
pub fn shift_chain(l: &LassoWord, i: i64) -> LassoWord {
    if i >= 0 {
        let i = i as usize;
        let (prefix, cycle) = if i <= l.prefix.len() {
            (l.prefix[i..].to_vec(), l.cycle.clone())
        } else {
            let mut c = l.cycle.clone();
            let r = (i - l.prefix.len()) % c.len();
            c.rotate_left(r);
            (Vec::new(), c)
        };
        LassoWord::canonical(l.alphabet, prefix, cycle)
    } else {
        let mut prefix = vec![1; i.unsigned_abs() as usize];
        prefix.extend_from_slice(&l.prefix);
        LassoWord::canonical(l.alphabet, prefix, l.cycle.clone())
    }
}

/// Letterwise packing `K · L` of two infinite words over `N` and `M`.
pub fn star_chain(k: &LassoWord, l: &LassoWord) -> Result<LassoWord> {
    let alphabet = product_alphabet(k.alphabet, l.alphabet)?;
    let m = l.alphabet;
    let pre = k.prefix.len().max(l.prefix.len());
    let per = k.period().lcm(&l.period());
    let packed: Vec<Letter> = (0..pre + per)
        .map(|t| m * (k.letter_at(t) - 1) + l.letter_at(t))
        .collect();
    Ok(LassoWord::canonical(alphabet, packed[..pre].to_vec(), packed[pre..].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lasso(n: u32, p: &[u32], c: &[u32]) -> LassoWord {
        LassoWord::from_letters(n, p.to_vec(), c.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form() {
        let x = lasso(2, &[1, 2, 1, 2], &[1, 2, 1, 2]);
        assert_eq!(x.prefix_letters(), &[] as &[u32]);
        assert_eq!(x.cycle_letters(), &[1, 2]);
        let y = lasso(3, &[3, 2, 1], &[2, 1]);
        assert_eq!((y.prefix_letters(), y.cycle_letters()), (&[3][..], &[2, 1][..]));
        assert!(LassoWord::from_letters(2, vec![], vec![]).is_err());
        assert!(LassoWord::from_letters(2, vec![3], vec![1]).is_err());
    }

    #[test]
    fn equal_iff_same_infinite_word() {
        let a = lasso(2, &[2, 1], &[1]);
        let b = lasso(2, &[2], &[1, 1, 1]);
        assert_eq!(a, b);
        assert_eq!(a.expand(10), b.expand(10));
    }

    #[test]
    fn shift_examples() {
        let l = lasso(2, &[2], &[1]);
        assert_eq!(shift_chain(&l, -1), lasso(2, &[1, 2], &[1]));
        assert_eq!(shift_chain(&l, 1), lasso(2, &[], &[1]));
        let p = lasso(2, &[], &[1, 2]);
        assert_eq!(shift_chain(&p, 2), p);
        // direct expansion oracle to depth 10
        let unfolded: Vec<u32> = p.expand(12)[2..12].to_vec();
        assert_eq!(shift_chain(&p, 2).expand(10), unfolded);
    }

    #[test]
    fn star_chain_examples() {
        let ones = lasso(2, &[], &[1]);
        let twos = LassoWord::periodic(&Word::new(2, vec![2]).unwrap()).unwrap();
        // pack(1, 2) = 2 at every position
        let expected = vec![2u32; 20];
        let x = star_chain(&ones, &twos).unwrap();
        assert_eq!(x.expand(20), expected);
        assert_eq!(x, lasso(4, &[], &[2]));

        assert_eq!(star_chain(&ones, &ones).unwrap(), lasso(4, &[], &[1]));

        let k = lasso(2, &[2], &[1]);
        let l = LassoWord::periodic(&Word::new(2, vec![1, 2]).unwrap()).unwrap();
        let x = star_chain(&k, &l).unwrap();
        let brute: Vec<u32> = (0..20).map(|t| 2 * (k.letter_at(t) - 1) + l.letter_at(t)).collect();
        assert_eq!(&brute[..6], &[3, 2, 1, 2, 1, 2]);
        assert_eq!(x.expand(20), brute);
        assert_eq!(x, lasso(4, &[3], &[2, 1]));
    }

    #[test]
    fn tail_classes() {
        let a = lasso(4, &[3], &[2, 1]);
        let b = lasso(4, &[], &[1, 2]);
        assert!(a.tail_equivalent(&b));
        assert_eq!(a.tail_class(), b);
        assert!(!a.tail_equivalent(&lasso(4, &[], &[1])));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_lasso() -> impl Strategy<Value = LassoWord> {
            (prop::collection::vec(1u32..=3, 0..4), prop::collection::vec(1u32..=3, 1..4))
                .prop_map(|(p, c)| lasso(3, &p, &c))
        }

        fn brute_shift(l: &LassoWord, i: i64, n: usize) -> Vec<u32> {
            (0..n as i64)
                .map(|j| if j + i >= 0 { l.letter_at((j + i) as usize) } else { 1 })
                .collect()
        }

        proptest! {
            #[test]
            fn canonical_is_faithful(p in prop::collection::vec(1u32..=3, 0..5), c in prop::collection::vec(1u32..=3, 1..5)) {
                let x = lasso(3, &p, &c);
                let raw: Vec<u32> = (0..32).map(|t| if t < p.len() { p[t] } else { c[(t - p.len()) % c.len()] }).collect();
                prop_assert_eq!(x.expand(32), raw);
                prop_assert_eq!(primitive_root(&x.cycle()).1, 1);
                if let (Some(a), Some(b)) = (x.prefix_letters().last(), x.cycle_letters().last()) {
                    prop_assert_ne!(a, b);
                }
            }

            #[test]
            fn shift_matches_expansion(l in any_lasso(), i in -5i64..8) {
                prop_assert_eq!(shift_chain(&l, i).expand(32), brute_shift(&l, i, 32));
            }

            #[test]
            fn shifts_compose(l in any_lasso(), i in -4i64..6, j in -4i64..6) {
                let twice = shift_chain(&shift_chain(&l, i), j);
                let once = shift_chain(&l, i + j);
                if i >= 0 && j >= 0 {
                    prop_assert_eq!(twice, once);
                } else {
                    // padding can differ before position max(0, -j)
                    let from = [0, -i, -j, -j - i].into_iter().max().unwrap() as usize;
                    prop_assert_eq!(&twice.expand(32)[from..], &once.expand(32)[from..]);
                }
            }

            #[test]
            fn star_chain_is_letterwise(k in any_lasso(), l in any_lasso()) {
                let x = star_chain(&k, &l).unwrap();
                let brute: Vec<u32> = (0..40).map(|t| 3 * (k.letter_at(t) - 1) + l.letter_at(t)).collect();
                prop_assert_eq!(x.expand(40), brute);
                prop_assert_eq!(num_integer::lcm(k.period(), l.period()) % x.period(), 0);
            }
        }
    }
}
