//! Multiindex algebra over finite alphabets `{1..N}`.
//!
//! Letters are 1-based throughout. A [`Word`] always carries its alphabet
//! size so that packed products can compute the target alphabet `N*M`.
//! The empty word plays the role of the unit `(0)` for concatenation.

mod index;
mod lasso;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use index::{multi_index, pack_index, relabel_perm, unpack_index, LetterPerm, SlotPerm};
pub use lasso::{shift_chain, star_chain, LassoWord};

pub type Letter = u32;

pub(crate) fn check_alphabet(alphabet: u32) -> Result<()> {
    if alphabet < 2 {
        return Err(Error::AlphabetTooSmall(alphabet));
    }
    Ok(())
}

pub(crate) fn check_letters(alphabet: u32, letters: &[Letter]) -> Result<()> {
    match letters.iter().find(|&&l| l == 0 || l > alphabet) {
        Some(&letter) => Err(Error::LetterOutOfRange { letter, alphabet }),
        None => Ok(()),
    }
}

pub(crate) fn product_alphabet(n: u32, m: u32) -> Result<u32> {
    n.checked_mul(m).ok_or(Error::AlphabetOverflow(n, m))
}

/// A finite word over `{1..alphabet}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    alphabet: u32,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: u32, letters: Vec<Letter>) -> Result<Self> {
        check_alphabet(alphabet)?;
        check_letters(alphabet, &letters)?;
        Ok(Word { alphabet, letters })
    }

    /// The unit word `(0)` over `alphabet`.
    pub fn unit(alphabet: u32) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(alphabet: u32, letters: Vec<Letter>) -> Self {
        Word { alphabet, letters }
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Applies a letter permutation position by position.
    pub fn map_letters(&self, perm: &LetterPerm) -> Result<Word> {
        if perm.len() as u32 != self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: perm.len() as u32,
            });
        }
        let letters = self.letters.iter().map(|&l| perm.apply(l)).collect();
        Ok(Word::from_parts_unchecked(self.alphabet, letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// `J1 ∪ J2`. The unit word is compatible with any alphabet.
pub fn concat(j1: &Word, j2: &Word) -> Result<Word> {
    if j1.is_empty() {
        return Ok(j2.clone());
    }
    if j2.is_empty() {
        return Ok(j1.clone());
    }
    if j1.alphabet != j2.alphabet {
        return Err(Error::AlphabetMismatch { left: j1.alphabet, right: j2.alphabet });
    }
    let mut letters = Vec::with_capacity(j1.len() + j2.len());
    letters.extend_from_slice(&j1.letters);
    letters.extend_from_slice(&j2.letters);
    Ok(Word::from_parts_unchecked(j1.alphabet, letters))
}

/// `J^k`; `k = 0` gives the unit word.
pub fn power(j: &Word, k: usize) -> Word {
    Word::from_parts_unchecked(j.alphabet, j.letters.repeat(k))
}

/// `L^(i) = (l_i, ..., l_b, l_1, ..., l_{i-1})` for `1 <= i <= |L|`.
pub fn rotate(l: &Word, i: usize) -> Result<Word> {
    if i == 0 || i > l.len() {
        return Err(Error::RotationOutOfRange { index: i, len: l.len() });
    }
    let mut letters = l.letters.clone();
    letters.rotate_left(i - 1);
    Ok(Word::from_parts_unchecked(l.alphabet, letters))
}

/// Letterwise packing `x_i = M(k_i - 1) + l_i` of equal-length words.
pub fn dot(k: &Word, l: &Word) -> Result<Word> {
    if k.len() != l.len() {
        return Err(Error::LengthMismatch { left: k.len(), right: l.len() });
    }
    if k.is_empty() {
        return Err(Error::EmptyWord);
    }
    let alphabet = product_alphabet(k.alphabet, l.alphabet)?;
    let m = l.alphabet;
    let letters = k
        .letters
        .iter()
        .zip(&l.letters)
        .map(|(&a, &b)| m * (a - 1) + b)
        .collect();
    Ok(Word::from_parts_unchecked(alphabet, letters))
}

/// `K * L = K^{C/a} · L^{C/b}` with `C = lcm(|K|, |L|)`.
pub fn star(k: &Word, l: &Word) -> Result<Word> {
    if k.is_empty() || l.is_empty() {
        return Err(Error::EmptyWord);
    }
    let c = k.len().lcm(&l.len());
    dot(&power(k, c / k.len()), &power(l, c / l.len()))
}

/// Returns `(P, p)` with `J = P^p` and `P` primitive.
///
/// The empty word is its own root with exponent 1.
pub fn primitive_root(j: &Word) -> (Word, usize) {
    let n = j.len();
    if n == 0 {
        return (j.clone(), 1);
    }
    // Smallest period from the KMP failure function; it is a root iff it divides n.
    let mut fail = vec![0usize; n];
    let s = &j.letters;
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let period = n - fail[n - 1];
    if n.is_multiple_of(period) {
        (Word::from_parts_unchecked(j.alphabet, s[..period].to_vec()), n / period)
    } else {
        (j.clone(), 1)
    }
}

/// 0-based start of the lexicographically least rotation (Booth).
pub(crate) fn least_rotation_start(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = f[j - k - 1];
        while i != -1 && sj != s[(k + i as usize + 1) % n] {
            if sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != s[k % n] {
            if sj < s[k % n] {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

/// Lexicographically least cyclic rotation.
pub fn canonical_rotation(j: &Word) -> Word {
    let mut letters = j.letters.clone();
    letters.rotate_left(least_rotation_start(&j.letters));
    Word::from_parts_unchecked(j.alphabet, letters)
}
