//! Brute-force verifier built on branching function systems.
//!
//! A representation is realized on a finite set of basis labels with
//! partial injections `f_i` (`π(s_i) e_x = e_{f_i(x)}`). Products, direct
//! sums and compositions with endomorphisms are taken label by label, and
//! decompositions are read off the orbit structure of the inverse shift
//! `F` (`F(f_i(x)) = x`, reading the letter `i`).
//!
//! Canonical models: for a cycle `P_N(J)` the anchors are the cycle vectors
//! `Ω_r`, for a chain the spine vectors `Ω_n = π(s_{J_(n)})^* Ω`,
//! `0 <= n <= spine`. Every other label is `s_W Ω_r` with `|W| <= tree`.

mod decompose;

use std::fmt::Write as _;

use num_integer::Integer;

use crate::endocalc::PermEndo;
use crate::error::{Error, Result};
use crate::repcalc::RepClass;
use crate::words::{check_letters, product_alphabet, LassoWord, Letter};

pub use decompose::{decompose_bfs, decompose_rings, state_eval, state_eval_bfs, OracleDecomposition, StateProbe};

pub(crate) const NONE: u32 = u32::MAX;

/// Label-count ceiling for a single model.
pub const MAX_LABELS: usize = 1 << 22;
const MAX_ENTRIES: usize = 1 << 26;

/// Truncation depths: `tree` bounds `|W|`, `spine` the chain length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub tree: usize,
    pub spine: usize,
}

impl Truncation {
    pub fn uniform(depth: usize) -> Self {
        Truncation { tree: depth, spine: depth }
    }

    pub fn new(tree: usize, spine: usize) -> Self {
        Truncation { tree, spine }
    }
}

/// Largest tree depth `t <= want` keeping `anchors * N^t <= budget`, at least 1.
pub fn fitted_tree_depth(alphabet: u32, anchors: usize, want: usize, budget: usize) -> usize {
    let mut t = 1;
    let mut size = anchors.saturating_mul(alphabet as usize);
    while t < want {
        size = size.saturating_mul(alphabet as usize);
        if size > budget {
            break;
        }
        t += 1;
    }
    t
}

#[derive(Clone, Debug)]
enum Streams {
    Cycle { word: Vec<Letter>, labels: Vec<(Vec<Letter>, usize)> },
    Chain { lasso: LassoWord, labels: Vec<(Vec<Letter>, usize)> },
    Product { left: Box<Streams>, right: Box<Streams>, right_len: usize, right_alphabet: u32 },
    Sum { left: Box<Streams>, right: Box<Streams>, left_len: usize },
    // labels survive composition, letter streams do not
    Composed(Box<Streams>),
}

impl Streams {
    fn letter(&self, x: usize, t: usize) -> Option<Letter> {
        match self {
            Streams::Cycle { word, labels } => {
                let (w, r) = &labels[x];
                Some(if t < w.len() { w[t] } else { word[(r + t - w.len()) % word.len()] })
            }
            Streams::Chain { lasso, labels } => {
                let (w, n) = &labels[x];
                Some(if t < w.len() { w[t] } else { lasso.letter_at(n + t - w.len()) })
            }
            Streams::Product { left, right, right_len, right_alphabet } => {
                let a = left.letter(x / right_len, t)?;
                let b = right.letter(x % right_len, t)?;
                Some(right_alphabet * (a - 1) + b)
            }
            Streams::Sum { left, right, left_len } => {
                if x < *left_len {
                    left.letter(x, t)
                } else {
                    right.letter(x - left_len, t)
                }
            }
            Streams::Composed(_) => None,
        }
    }

    fn name(&self, x: usize) -> String {
        let word = |w: &[Letter]| w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(".");
        match self {
            Streams::Cycle { labels, .. } | Streams::Chain { labels, .. } => {
                let (w, a) = &labels[x];
                format!("{}@{a}", word(w))
            }
            Streams::Product { left, right, right_len, .. } => {
                format!("({},{})", left.name(x / right_len), right.name(x % right_len))
            }
            Streams::Sum { left, right, left_len } => {
                if x < *left_len {
                    format!("L:{}", left.name(x))
                } else {
                    format!("R:{}", right.name(x - left_len))
                }
            }
            Streams::Composed(inner) => inner.name(x),
        }
    }
}

/// A truncated branching function system.
#[derive(Clone, Debug)]
pub struct TruncatedBfs {
    alphabet: u32,
    len: usize,
    // f[x * N + i - 1] = f_i(x), NONE where truncated
    f: Vec<u32>,
    core: Vec<bool>,
    gp: usize,
    has_spine: bool,
    period: usize,
    streams: Streams,
}

fn guard(labels: usize, alphabet: u32) -> Result<()> {
    if labels > MAX_LABELS || labels.saturating_mul(alphabet as usize) > MAX_ENTRIES {
        return Err(Error::ModelTooLarge { labels, limit: MAX_LABELS });
    }
    Ok(())
}

impl TruncatedBfs {
    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `f_i(x)`, `None` when truncated.
    pub fn f(&self, i: Letter, x: usize) -> Option<usize> {
        let y = self.f[x * self.alphabet as usize + (i - 1) as usize];
        (y != NONE).then_some(y as usize)
    }

    /// The GP (cyclic) label `Ω`.
    pub fn gp(&self) -> usize {
        self.gp
    }

    pub fn is_core(&self, x: usize) -> bool {
        self.core[x]
    }

    pub fn has_spine(&self) -> bool {
        self.has_spine
    }

    /// lcm of the defining periods; the ring step for `ω` certification.
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn label_name(&self, x: usize) -> String {
        self.streams.name(x)
    }

    /// First `n` letters read along `F` from `x` in the untruncated model.
    pub fn stream(&self, x: usize, n: usize) -> Option<Vec<Letter>> {
        (0..n).map(|t| self.streams.letter(x, t)).collect()
    }

    /// `F(x)` with its letter, `NONE` where undefined; fails if the
    /// images of the `f_i` overlap.
    pub fn backward(&self) -> Result<Vec<(u32, u32)>> {
        let n = self.alphabet as usize;
        let mut back = vec![(NONE, NONE); self.len];
        for x in 0..self.len {
            for i in 0..n {
                let y = self.f[x * n + i];
                if y == NONE {
                    continue;
                }
                let slot = &mut back[y as usize];
                if slot.0 != NONE {
                    return Err(Error::NotABijection(format!(
                        "label {} is hit twice",
                        self.label_name(y as usize)
                    )));
                }
                *slot = (x as u32, i as u32 + 1);
            }
        }
        Ok(back)
    }

    /// Labels where some `f_i` or `F` is undefined.
    pub fn frontier(&self, back: &[(u32, u32)]) -> Vec<bool> {
        let n = self.alphabet as usize;
        (0..self.len)
            .map(|x| back[x].0 == NONE || self.f[x * n..(x + 1) * n].contains(&NONE))
            .collect()
    }
}

// (W, anchor) stands for s_W Ω_anchor
type TreeLabels = Vec<(Vec<Letter>, usize)>;

fn tree_model<P>(n: u32, anchors: usize, pred: P, tree: usize) -> Result<(Vec<u32>, TreeLabels)>
where
    P: Fn(usize) -> Option<(Letter, usize)>,
{
    let nu = n as usize;
    let mut labels: TreeLabels = (0..anchors).map(|a| (Vec::new(), a)).collect();
    let mut f = vec![NONE; anchors * nu];
    for a in 0..anchors {
        if let Some((i, b)) = pred(a) {
            f[a * nu + (i - 1) as usize] = b as u32;
        }
    }
    let mut level: Vec<usize> = (0..anchors).collect();
    for _ in 0..tree {
        guard(labels.len() + level.len() * nu, n)?;
        let mut next = Vec::with_capacity(level.len() * nu);
        for &x in &level {
            for i in 1..=n {
                let slot = x * nu + (i - 1) as usize;
                if f[slot] != NONE {
                    continue;
                }
                let mut w = vec![i];
                w.extend_from_slice(&labels[x].0);
                let y = labels.len();
                labels.push((w, labels[x].1));
                f.extend(std::iter::repeat_n(NONE, nu));
                f[slot] = y as u32;
                next.push(y);
            }
        }
        level = next;
    }
    Ok((f, labels))
}

/// Canonical model with uniform truncation depth.
pub fn canonical_bfs(r: &RepClass, depth: usize) -> Result<TruncatedBfs> {
    canonical_bfs_with(r, Truncation::uniform(depth))
}

pub fn canonical_bfs_with(r: &RepClass, t: Truncation) -> Result<TruncatedBfs> {
    let n = r.alphabet();
    match r {
        RepClass::Cycle(j) => {
            let word = j.letters().to_vec();
            let k = word.len();
            let (f, labels) = tree_model(n, k, |r| Some((word[(r + k - 1) % k], (r + k - 1) % k)), t.tree)?;
            Ok(TruncatedBfs {
                alphabet: n,
                len: labels.len(),
                f,
                core: (0..labels.len()).map(|x| x < k).collect(),
                gp: 0,
                has_spine: false,
                period: k,
                streams: Streams::Cycle { word, labels },
            })
        }
        RepClass::Chain(l) => {
            let anchors = t.spine + 1;
            let (f, labels) =
                tree_model(n, anchors, |a| (a > 0).then(|| (l.letter_at(a - 1), a - 1)), t.tree)?;
            Ok(TruncatedBfs {
                alphabet: n,
                len: labels.len(),
                f,
                core: (0..labels.len()).map(|x| x < anchors).collect(),
                gp: 0,
                has_spine: true,
                period: l.period(),
                streams: Streams::Chain { lasso: l.clone(), labels },
            })
        }
    }
}

/// The φ-product: `f_{M(i-1)+j}(x, y) = (f_i x, g_j y)`.
pub fn product_bfs(b1: &TruncatedBfs, b2: &TruncatedBfs) -> Result<TruncatedBfs> {
    let (n, m) = (b1.alphabet, b2.alphabet);
    let nm = product_alphabet(n, m)?;
    let len = b1.len.saturating_mul(b2.len);
    guard(len, nm)?;
    let (nu, mu) = (n as usize, m as usize);
    let mut f = vec![NONE; len * nm as usize];
    for x in 0..b1.len {
        for y in 0..b2.len {
            let base = (x * b2.len + y) * nm as usize;
            for i in 0..nu {
                let fx = b1.f[x * nu + i];
                if fx == NONE {
                    continue;
                }
                for j in 0..mu {
                    let gy = b2.f[y * mu + j];
                    if gy != NONE {
                        f[base + i * mu + j] = (fx as usize * b2.len + gy as usize) as u32;
                    }
                }
            }
        }
    }
    let core = (0..len).map(|z| b1.core[z / b2.len] && b2.core[z % b2.len]).collect();
    Ok(TruncatedBfs {
        alphabet: nm,
        len,
        f,
        core,
        gp: b1.gp * b2.len + b2.gp,
        has_spine: b1.has_spine || b2.has_spine,
        period: b1.period.lcm(&b2.period),
        streams: Streams::Product {
            left: Box::new(b1.streams.clone()),
            right: Box::new(b2.streams.clone()),
            right_len: b2.len,
            right_alphabet: m,
        },
    })
}

/// Disjoint union; the GP label is taken from the left summand.
pub fn direct_sum_bfs(b1: &TruncatedBfs, b2: &TruncatedBfs) -> Result<TruncatedBfs> {
    if b1.alphabet != b2.alphabet {
        return Err(Error::AlphabetMismatch { left: b1.alphabet, right: b2.alphabet });
    }
    let len = b1.len + b2.len;
    guard(len, b1.alphabet)?;
    let mut f = b1.f.clone();
    f.extend(b2.f.iter().map(|&y| if y == NONE { NONE } else { y + b1.len as u32 }));
    let mut core = b1.core.clone();
    core.extend_from_slice(&b2.core);
    Ok(TruncatedBfs {
        alphabet: b1.alphabet,
        len,
        f,
        core,
        gp: b1.gp,
        has_spine: b1.has_spine || b2.has_spine,
        period: b1.period.lcm(&b2.period),
        streams: Streams::Sum {
            left: Box::new(b1.streams.clone()),
            right: Box::new(b2.streams.clone()),
            left_len: b1.len,
        },
    })
}

/// `π ∘ ψ_g`: `f'_i(x) = f_{g(i·w)}(F^{l-1} x)` where `w` are the first
/// `l-1` letters read from `x`.
pub fn compose_bfs(b: &TruncatedBfs, e: &PermEndo) -> Result<TruncatedBfs> {
    if b.alphabet != e.alphabet() {
        return Err(Error::AlphabetMismatch { left: b.alphabet, right: e.alphabet() });
    }
    let n = b.alphabet as usize;
    let l = e.depth();
    let back = b.backward()?;
    let mut f = vec![NONE; b.len * n];
    let mut k = vec![0; l];
    'labels: for x in 0..b.len {
        let mut y = x;
        for slot in k.iter_mut().skip(1) {
            let (p, letter) = back[y];
            if p == NONE {
                continue 'labels;
            }
            *slot = letter;
            y = p as usize;
        }
        for i in 1..=n as u32 {
            k[0] = i;
            let v = e.apply(&k);
            let mut z = Some(y);
            for &letter in v.iter().rev() {
                z = z.and_then(|z| b.f(letter, z));
            }
            if let Some(z) = z {
                f[x * n + (i - 1) as usize] = z as u32;
            }
        }
    }
    Ok(TruncatedBfs {
        alphabet: b.alphabet,
        len: b.len,
        f,
        core: b.core.clone(),
        gp: b.gp,
        has_spine: b.has_spine,
        period: b.period,
        streams: Streams::Composed(Box::new(b.streams.clone())),
    })
}

/// Verifies the truncated Cuntz relations: the images of the `f_i` are disjoint.
pub fn check_cuntz(b: &TruncatedBfs) -> Result<()> {
    b.backward().map(|_| ())
}

/// Graphviz rendering of the `f_i` edges.
pub fn to_dot(b: &TruncatedBfs) -> String {
    let mut out = String::from("digraph bfs {\n");
    for x in 0..b.len {
        let shape = if x == b.gp { "doublecircle" } else if b.core[x] { "circle" } else { "ellipse" };
        let _ = writeln!(out, "  n{x} [label=\"{}\", shape={shape}];", b.label_name(x));
    }
    for x in 0..b.len {
        for i in 1..=b.alphabet {
            if let Some(y) = b.f(i, x) {
                let _ = writeln!(out, "  n{x} -> n{y} [label=\"{i}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

pub(crate) fn check_word(alphabet: u32, w: &[Letter]) -> Result<()> {
    check_letters(alphabet, w)
}
