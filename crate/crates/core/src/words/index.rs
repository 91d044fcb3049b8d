use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_alphabet, product_alphabet, Letter};
use crate::error::{Error, Result};

/// `φ(a, b) = M(a-1) + b`, a bijection `{1..N} x {1..M} -> {1..NM}`.
pub fn pack_index(n: u32, m: u32, a: Letter, b: Letter) -> Result<Letter> {
    check_alphabet(n)?;
    check_alphabet(m)?;
    let nm = product_alphabet(n, m)?;
    if a == 0 || a > n {
        return Err(Error::LetterOutOfRange { letter: a, alphabet: n });
    }
    if b == 0 || b > m {
        return Err(Error::LetterOutOfRange { letter: b, alphabet: m });
    }
    debug_assert!(m * (a - 1) + b <= nm);
    Ok(m * (a - 1) + b)
}

pub fn unpack_index(n: u32, m: u32, x: Letter) -> Result<(Letter, Letter)> {
    check_alphabet(n)?;
    check_alphabet(m)?;
    let nm = product_alphabet(n, m)?;
    if x == 0 || x > nm {
        return Err(Error::LetterOutOfRange { letter: x, alphabet: nm });
    }
    Ok(((x - 1) / m + 1, (x - 1) % m + 1))
}

/// A permutation of tensor slots `1..=n`, stored as the images `σ(1), ..., σ(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlotPerm(Vec<usize>);

impl SlotPerm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &s in &images {
            if s == 0 || s > n || seen[s - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[s - 1] = true;
        }
        Ok(SlotPerm(images))
    }

    pub fn identity(n: usize) -> Self {
        SlotPerm((1..=n).collect())
    }

    /// The transposition swapping slots `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("slots {a},{b} outside 1..={n}")));
        }
        images.swap(a - 1, b - 1);
        Ok(SlotPerm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, slot: usize) -> usize {
        self.0[slot - 1]
    }
}

/// `[i_1, ..., i_n]_σ`: the nested packing of `(i_σ(1), ..., i_σ(n))` with
/// radices `N_σ(1), ..., N_σ(n)`.
pub fn multi_index(ns: &[u32], sigma: &SlotPerm, is: &[Letter]) -> Result<Letter> {
    if ns.len() < 2 {
        return Err(Error::LengthMismatch { left: ns.len(), right: 2 });
    }
    if sigma.len() != ns.len() {
        return Err(Error::LengthMismatch { left: sigma.len(), right: ns.len() });
    }
    if is.len() != ns.len() {
        return Err(Error::LengthMismatch { left: is.len(), right: ns.len() });
    }
    for (&n, &i) in ns.iter().zip(is) {
        check_alphabet(n)?;
        if i == 0 || i > n {
            return Err(Error::LetterOutOfRange { letter: i, alphabet: n });
        }
    }
    let first = sigma.image(1);
    let mut radix = ns[first - 1];
    let mut acc = is[first - 1];
    for k in 2..=ns.len() {
        let slot = sigma.image(k);
        acc = pack_index(radix, ns[slot - 1], acc, is[slot - 1])?;
        radix = product_alphabet(radix, ns[slot - 1])?;
    }
    Ok(acc)
}

/// A bijection on letters `1..=len`, stored as 1-based images.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LetterPerm {
    images: Vec<Letter>,
}

impl LetterPerm {
    pub fn new(images: Vec<Letter>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on 1..={n}")));
            }
            seen[x as usize - 1] = true;
        }
        Ok(LetterPerm { images })
    }

    pub fn identity(n: u32) -> Self {
        LetterPerm { images: (1..=n).collect() }
    }

    /// Swaps the letters `a` and `b` of `1..=n`.
    pub fn swap(n: u32, a: Letter, b: Letter) -> Result<Self> {
        let mut images: Vec<Letter> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("letters {a},{b} outside 1..={n}")));
        }
        images.swap(a as usize - 1, b as usize - 1);
        Ok(LetterPerm { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: Letter) -> Letter {
        self.images[x as usize - 1]
    }

    pub fn images(&self) -> &[Letter] {
        &self.images
    }

    pub fn inverse(&self) -> LetterPerm {
        let mut images = vec![0; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = k as Letter + 1;
        }
        LetterPerm { images }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LetterPerm) -> Result<LetterPerm> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(LetterPerm { images: other.images.iter().map(|&x| self.apply(x)).collect() })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }
}

impl fmt::Debug for LetterPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LetterPerm{:?}", self.images)
    }
}

fn tuples(ns: &[u32]) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for &n in ns {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// The letter permutation `[i]_η ↦ [i]_σ` of `{1..N_1⋯N_n}` realizing the
/// automorphism that reorders tensor factors.
pub fn relabel_perm(ns: &[u32], sigma: &SlotPerm, eta: &SlotPerm) -> Result<LetterPerm> {
    let total = ns.iter().try_fold(1u32, |acc, &n| product_alphabet(acc, n))?;
    let mut images = vec![0; total as usize];
    for t in tuples(ns) {
        let from = multi_index(ns, eta, &t)?;
        images[from as usize - 1] = multi_index(ns, sigma, &t)?;
    }
    LetterPerm::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_examples() {
        assert_eq!(pack_index(2, 2, 2, 2).unwrap(), 4);
        assert_eq!(pack_index(2, 2, 1, 1).unwrap(), 1);
        assert_eq!(unpack_index(2, 2, 3).unwrap(), (2, 1));
        assert!(pack_index(2, 3, 3, 1).is_err());
        assert!(pack_index(2, 3, 1, 4).is_err());
        assert!(unpack_index(2, 3, 7).is_err());
        assert!(unpack_index(2, 3, 0).is_err());
    }

    #[test]
    fn pack_unpack_inverse() {
        for n in 2..5 {
            for m in 2..5 {
                for x in 1..=n * m {
                    let (a, b) = unpack_index(n, m, x).unwrap();
                    assert_eq!(pack_index(n, m, a, b).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn multi_index_examples() {
        let id2 = SlotPerm::identity(2);
        for i1 in 1..=3 {
            for i2 in 1..=4 {
                assert_eq!(multi_index(&[3, 4], &id2, &[i1, i2]).unwrap(), 4 * (i1 - 1) + i2);
            }
        }
        let swap = SlotPerm::transposition(2, 1, 2).unwrap();
        assert_eq!(multi_index(&[2, 2], &swap, &[1, 2]).unwrap(), 3);
        // all four inputs, by hand: (i1,i2) -> 2(i2-1)+i1
        let got: Vec<_> = [[1, 1], [1, 2], [2, 1], [2, 2]]
            .iter()
            .map(|t| multi_index(&[2, 2], &swap, t).unwrap())
            .collect();
        assert_eq!(got, vec![1, 3, 2, 4]);
        assert_eq!(multi_index(&[2, 2, 2], &SlotPerm::identity(3), &[2, 1, 1]).unwrap(), 5);
        assert!(multi_index(&[2, 2], &id2, &[1]).is_err());
        assert!(multi_index(&[2], &SlotPerm::identity(1), &[1]).is_err());
    }

    #[test]
    fn multi_index_is_bijective() {
        let ns = [2, 3, 2];
        for sigma in all_perms(3) {
            let mut hit = [false; 12];
            for t in tuples(&ns) {
                let x = multi_index(&ns, &sigma, &t).unwrap() as usize;
                assert!(!hit[x - 1]);
                hit[x - 1] = true;
            }
            assert!(hit.iter().all(|&h| h));
        }
    }

    #[test]
    fn transposition_relabel_swaps_packed_pairs() {
        let p = relabel_perm(&[2, 2], &SlotPerm::identity(2), &SlotPerm::transposition(2, 1, 2).unwrap()).unwrap();
        assert_eq!(p.images(), &[1, 3, 2, 4]);
        // alpha(s_{N(j-1)+i}) = s_{M(i-1)+j} for N=2, M=3
        let p = relabel_perm(&[2, 3], &SlotPerm::identity(2), &SlotPerm::transposition(2, 1, 2).unwrap()).unwrap();
        for i in 1..=2 {
            for j in 1..=3 {
                assert_eq!(p.apply(2 * (j - 1) + i), 3 * (i - 1) + j);
            }
        }
    }

    #[test]
    fn relabel_same_is_identity() {
        for sigma in all_perms(3) {
            assert!(relabel_perm(&[2, 3, 2], &sigma, &sigma).unwrap().is_identity());
        }
    }

    #[test]
    fn relabel_three_slots_reverse() {
        let ns = [2, 2, 2];
        let eta = SlotPerm::transposition(3, 1, 3).unwrap();
        let p = relabel_perm(&ns, &SlotPerm::identity(3), &eta).unwrap();
        // [i1,i2,i3]_eta packs (i3,i2,i1); image packs (i1,i2,i3)
        for t in tuples(&ns) {
            let from = 4 * (t[2] - 1) + 2 * (t[1] - 1) + t[0];
            let to = 4 * (t[0] - 1) + 2 * (t[1] - 1) + t[2];
            assert_eq!(p.apply(from), to);
        }
        assert_eq!(p.images(), &[1, 5, 3, 7, 2, 6, 4, 8]);
    }

    #[test]
    fn relabel_composition_law() {
        let ns = [2, 3, 2];
        let perms = all_perms(3);
        for s in &perms {
            for e in &perms {
                for t in &perms {
                    let lhs = relabel_perm(&ns, s, e)
                        .unwrap()
                        .compose(&relabel_perm(&ns, e, t).unwrap())
                        .unwrap();
                    assert_eq!(lhs, relabel_perm(&ns, s, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn invalid_permutations_rejected() {
        assert!(SlotPerm::new(vec![1, 1]).is_err());
        assert!(SlotPerm::new(vec![0, 1]).is_err());
        assert!(LetterPerm::new(vec![2, 3]).is_err());
        assert_eq!(LetterPerm::new(vec![2, 3, 1]).unwrap().inverse().images(), &[3, 1, 2]);
    }

    fn all_perms(n: usize) -> Vec<SlotPerm> {
        fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<SlotPerm>) {
            if prefix.len() == n {
                out.push(SlotPerm::new(prefix.clone()).unwrap());
                return;
            }
            for s in 1..=n {
                if !prefix.contains(&s) {
                    prefix.push(s);
                    go(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), n, &mut out);
        out
    }
}
