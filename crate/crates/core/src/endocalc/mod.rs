//! Permutative endomorphisms `ψ_g` of `O_N` for permutation matrices `g`
//! acting on `C^N ⊗ ⋯ ⊗ C^N` (`l` factors), and their φ-tensor products.
//!
//! A [`PermEndo`] stores `g` as a bijection of length-`l` words, so
//! `u_g = Σ_K s_{g(K)} s_K^*` and `ψ_g(s_i) = u_g s_i`.

mod branch;
mod builtins;
mod json;

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{check_alphabet, check_letters, product_alphabet, Letter, LetterPerm, Word};

pub use branch::{branch, branch_decomposition, Branching, BRANCH_LABELS};
pub use builtins::{builtin, BUILTIN_NAMES};
pub use json::EndoJson;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermEndo {
    alphabet: u32,
    depth: usize,
    // map[code(K)] = code(g(K)), codes in big-endian base N with 0-based digits
    map: Vec<usize>,
}

pub(crate) fn encode(n: u32, letters: &[Letter]) -> usize {
    letters.iter().fold(0, |acc, &x| acc * n as usize + (x - 1) as usize)
}

pub(crate) fn decode(n: u32, len: usize, mut code: usize) -> Vec<Letter> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % n as usize) as Letter + 1;
        code /= n as usize;
    }
    out
}

fn word_count(n: u32, l: usize) -> Result<usize> {
    (n as usize)
        .checked_pow(l as u32)
        .filter(|&c| c <= 1 << 24)
        .ok_or_else(|| Error::Unsupported(format!("{n}^{l} words is too many")))
}

impl PermEndo {
    /// Builds from a code table and reduces to canonical depth.
    fn from_codes(alphabet: u32, depth: usize, map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &j in &map {
            if j >= map.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::NotABijection(format!(
                    "depth-{depth} map over {alphabet} letters repeats an image"
                )));
            }
        }
        let mut e = PermEndo { alphabet, depth, map };
        while let Some(r) = e.reduce_once() {
            e = r;
        }
        Ok(e)
    }

    // map = map' × id on the last letter
    fn reduce_once(&self) -> Option<PermEndo> {
        if self.depth <= 1 {
            return None;
        }
        let n = self.alphabet as usize;
        let mut inner = Vec::with_capacity(self.map.len() / n);
        for head in 0..self.map.len() / n {
            let base = self.map[head * n] / n;
            for x in 0..n {
                let img = self.map[head * n + x];
                if img % n != x || img / n != base {
                    return None;
                }
            }
            inner.push(base);
        }
        Some(PermEndo { alphabet: self.alphabet, depth: self.depth - 1, map: inner })
    }

    pub fn from_fn<F>(alphabet: u32, depth: usize, f: F) -> Result<Self>
    where
        F: Fn(&[Letter]) -> Vec<Letter>,
    {
        check_alphabet(alphabet)?;
        if depth == 0 {
            return Err(Error::Unsupported("endomorphism depth must be >= 1".into()));
        }
        let count = word_count(alphabet, depth)?;
        let mut map = Vec::with_capacity(count);
        for code in 0..count {
            let img = f(&decode(alphabet, depth, code));
            if img.len() != depth {
                return Err(Error::LengthMismatch { left: depth, right: img.len() });
            }
            check_letters(alphabet, &img)?;
            map.push(encode(alphabet, &img));
        }
        Self::from_codes(alphabet, depth, map)
    }

    pub fn identity(alphabet: u32) -> Result<Self> {
        Self::from_fn(alphabet, 1, |k| k.to_vec())
    }

    /// The canonical `U(N)` action `α_g` for a letter permutation `g`.
    pub fn from_letter_perm(g: &LetterPerm) -> Result<Self> {
        Self::from_fn(g.len() as u32, 1, |k| vec![g.apply(k[0])])
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `g(K)` for a word of exactly the stored depth.
    pub fn apply(&self, k: &[Letter]) -> Vec<Letter> {
        debug_assert_eq!(k.len(), self.depth);
        decode(self.alphabet, self.depth, self.map[encode(self.alphabet, k)])
    }

    /// `g` padded with the identity to a longer depth: `K·X ↦ g(K)·X`.
    pub fn apply_padded(&self, k: &[Letter]) -> Vec<Letter> {
        let mut out = self.apply(&k[..self.depth]);
        out.extend_from_slice(&k[self.depth..]);
        out
    }

    pub fn inverse(&self) -> PermEndo {
        let mut inv = vec![0; self.map.len()];
        for (k, &j) in self.map.iter().enumerate() {
            inv[j] = k;
        }
        PermEndo { alphabet: self.alphabet, depth: self.depth, map: inv }
    }

    /// `(K, g(K))` for all K in lexicographic order.
    pub fn pairs(&self) -> Vec<(Word, Word)> {
        (0..self.map.len())
            .map(|c| {
                let k = decode(self.alphabet, self.depth, c);
                let j = decode(self.alphabet, self.depth, self.map[c]);
                (Word::from_parts_unchecked(self.alphabet, k), Word::from_parts_unchecked(self.alphabet, j))
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.depth == 1 && self.map.iter().enumerate().all(|(k, &j)| k == j)
    }

    /// Builds from rows of printed monomials, one row per generator:
    /// row `i` holds terms `"J,K"` meaning `s_J s_K^*` in `ψ(s_i)`, letters
    /// written as single digits, terms separated by `+` or whitespace.
    pub fn from_table(alphabet: u32, rows: &[&str]) -> Result<Self> {
        if rows.len() != alphabet as usize {
            return Err(Error::LengthMismatch { left: alphabet as usize, right: rows.len() });
        }
        let digits = |s: &str| -> Result<Vec<Letter>> {
            s.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Unsupported(format!("bad letter {c:?} in table")))
                })
                .collect::<Result<_>>()
        };
        let mut pairs = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for term in row.split(|c: char| c == '+' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                let (j, k) = term
                    .split_once(',')
                    .ok_or_else(|| Error::Unsupported(format!("bad table term {term:?}")))?;
                let mut source = vec![i as Letter + 1];
                source.extend(digits(k)?);
                pairs.push((Word::new(alphabet, source)?, Word::new(alphabet, digits(j)?)?));
            }
        }
        let depth = pairs.first().map_or(1, |(k, _)| k.len());
        mk_endo(alphabet, depth, &pairs)
    }
}

impl fmt::Debug for PermEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermEndo(N={}, l={}, {{", self.alphabet, self.depth)?;
        for (k, (a, b)) in self.pairs().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        write!(f, "}})")
    }
}

/// Checks `(K, g(K))` pairs for a bijection of `{1..N}^l` and reduces depth.
pub fn mk_endo(n: u32, l: usize, pairs: &[(Word, Word)]) -> Result<PermEndo> {
    check_alphabet(n)?;
    if l == 0 {
        return Err(Error::Unsupported("endomorphism depth must be >= 1".into()));
    }
    let count = word_count(n, l)?;
    let mut map = vec![usize::MAX; count];
    for (k, j) in pairs {
        for w in [k, j] {
            if w.alphabet() != n {
                return Err(Error::AlphabetMismatch { left: n, right: w.alphabet() });
            }
            if w.len() != l {
                return Err(Error::LengthMismatch { left: l, right: w.len() });
            }
        }
        let slot = &mut map[encode(n, k.letters())];
        if *slot != usize::MAX {
            return Err(Error::NotABijection(format!("{k} listed twice")));
        }
        *slot = encode(n, j.letters());
    }
    if let Some(missing) = map.iter().position(|&j| j == usize::MAX) {
        return Err(Error::NotABijection(format!(
            "{} has no image",
            Word::from_parts_unchecked(n, decode(n, l, missing))
        )));
    }
    PermEndo::from_codes(n, l, map)
}

/// `s_J s_K^*`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub range: Word,
    pub source: Word,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s_{} s_{}^*", self.range, self.source)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialSum(pub Vec<Monomial>);

impl MonomialSum {
    pub fn terms(&self) -> &[Monomial] {
        &self.0
    }

    /// Merges every full family `Σ_x s_{Jx} s_{Kx}^*` into `s_J s_K^*`,
    /// repeatedly, then sorts.
    pub fn normalized(mut self, n: u32) -> MonomialSum {
        loop {
            self.0.sort();
            self.0.dedup();
            let mut merged = false;
            let mut out: Vec<Monomial> = Vec::with_capacity(self.0.len());
            let mut used = vec![false; self.0.len()];
            for a in 0..self.0.len() {
                if used[a] {
                    continue;
                }
                let m = &self.0[a];
                let (Some(&x), Some(&y)) = (m.range.letters().last(), m.source.letters().last()) else {
                    continue;
                };
                if x != y {
                    continue;
                }
                let jr = &m.range.letters()[..m.range.len() - 1];
                let ks = &m.source.letters()[..m.source.len() - 1];
                let family: Vec<usize> = (a..self.0.len())
                    .filter(|&b| {
                        let t = &self.0[b];
                        !used[b]
                            && t.range.len() == m.range.len()
                            && t.source.len() == m.source.len()
                            && &t.range.letters()[..jr.len()] == jr
                            && &t.source.letters()[..ks.len()] == ks
                            && t.range.letters().last() == t.source.letters().last()
                    })
                    .collect();
                if family.len() == n as usize {
                    for &b in &family {
                        used[b] = true;
                    }
                    out.push(Monomial {
                        range: Word::from_parts_unchecked(n, jr.to_vec()),
                        source: Word::from_parts_unchecked(n, ks.to_vec()),
                    });
                    merged = true;
                }
            }
            for (b, m) in self.0.iter().enumerate() {
                if !used[b] {
                    out.push(m.clone());
                }
            }
            self.0 = out;
            if !merged {
                self.0.sort();
                return self;
            }
        }
    }
}

impl fmt::Display for MonomialSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// `u_g = Σ_K s_{g(K)} s_K^*`, unnormalized.
pub fn unitary_monomials(e: &PermEndo) -> MonomialSum {
    MonomialSum(
        e.pairs()
            .into_iter()
            .map(|(k, j)| Monomial { range: j, source: k })
            .collect(),
    )
}

/// `ψ_g(s_i) = Σ_w s_{g(i·w)} s_w^*` over `|w| = l-1`, normalized.
pub fn endo_monomials(e: &PermEndo, i: Letter) -> Result<MonomialSum> {
    check_letters(e.alphabet, &[i])?;
    let n = e.alphabet;
    let tails = word_count(n, e.depth - 1)?;
    let terms = (0..tails)
        .map(|c| {
            let w = decode(n, e.depth - 1, c);
            let mut k = vec![i];
            k.extend_from_slice(&w);
            Monomial {
                range: Word::from_parts_unchecked(n, e.apply(&k)),
                source: Word::from_parts_unchecked(n, w),
            }
        })
        .collect();
    Ok(MonomialSum(terms).normalized(n))
}

/// `ψ_g ⊗_φ ψ_h = ψ_{g ×_φ ĥ}`, with the shallower map padded by identities.
pub fn endo_tensor(e1: &PermEndo, e2: &PermEndo) -> Result<PermEndo> {
    let (n, m) = (e1.alphabet, e2.alphabet);
    let nm = product_alphabet(n, m)?;
    let depth = e1.depth.max(e2.depth);
    PermEndo::from_fn(nm, depth, |x| {
        let (k, q): (Vec<Letter>, Vec<Letter>) =
            x.iter().map(|&c| ((c - 1) / m + 1, (c - 1) % m + 1)).unzip();
        let gk = e1.apply_padded(&k);
        let hq = e2.apply_padded(&q);
        gk.iter().zip(&hq).map(|(&a, &b)| m * (a - 1) + b).collect()
    })
}

/// The packed permutation `g*h`: `M(i-1)+j ↦ M(g(i)-1)+h(j)`.
pub fn action_product(g: &LetterPerm, h: &LetterPerm) -> Result<LetterPerm> {
    let (n, m) = (g.len() as u32, h.len() as u32);
    let nm = product_alphabet(n, m)?;
    LetterPerm::new(
        (1..=nm)
            .map(|x| {
                let (i, j) = ((x - 1) / m + 1, (x - 1) % m + 1);
                m * (g.apply(i) - 1) + h.apply(j)
            })
            .collect(),
    )
}
