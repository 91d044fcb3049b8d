use std::collections::{BTreeMap, BTreeSet};

use super::{check_word, TruncatedBfs, Truncation, NONE};
use crate::error::{Error, Result};
use crate::repcalc::{mk_chain, mk_cycle, Decomposition, Multiplicity, RepClass};
use crate::words::{LassoWord, Letter, Word};

const STREAM_WINDOW: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDecomposition {
    pub decomposition: Decomposition,
    /// No discarded cycles, no unreadable chains, and no stray fragments
    /// outside spine models.
    pub complete: bool,
    /// Cycles touching the frontier.
    pub discarded_cycles: usize,
    /// Chain roots without a readable letter stream.
    pub unreadable_chains: usize,
    /// Trees hanging off truncated non-core labels.
    pub fragments: usize,
}

// Minimal period of the second half of the window, found by brute force.
fn tail_of(alphabet: u32, letters: &[Letter]) -> Option<LassoWord> {
    let tail = &letters[letters.len() / 2..];
    (1..=tail.len() / 2)
        .find(|&p| (p..tail.len()).all(|t| tail[t] == tail[t - p]))
        .and_then(|p| LassoWord::from_letters(alphabet, Vec::new(), tail[..p].to_vec()).ok())
        .map(|l| l.tail_class())
}

/// Reads the decomposition off the orbits of `F`.
///
/// Every `F`-cycle away from the frontier is a cycle component, read from
/// its least label. Every root (label with `F` undefined) in the core is the
/// end of a chain component, classified by the tail of its letter stream.
pub fn decompose_bfs(b: &TruncatedBfs) -> Result<OracleDecomposition> {
    let n = b.alphabet();
    let back = b.backward()?;
    let frontier = b.frontier(&back);
    let mut out = OracleDecomposition {
        decomposition: Decomposition::empty(n),
        complete: true,
        discarded_cycles: 0,
        unreadable_chains: 0,
        fragments: 0,
    };

    // 0 = new, 1 = on current path, 2 = done
    let mut state = vec![0u8; b.len()];
    let mut path = Vec::new();
    for start in 0..b.len() {
        let mut x = start;
        while state[x] == 0 {
            state[x] = 1;
            path.push(x);
            match back[x].0 {
                NONE => break,
                p => x = p as usize,
            }
        }
        if state[x] == 1 && back[x].0 != NONE {
            let pos = path.iter().position(|&y| y == x).expect("cycle start on path");
            let cycle = &path[pos..];
            if cycle.iter().any(|&y| frontier[y]) {
                out.discarded_cycles += 1;
            } else {
                let least = *cycle.iter().min().expect("nonempty cycle");
                let mut letters = Vec::with_capacity(cycle.len());
                let mut y = least;
                loop {
                    letters.push(back[y].1);
                    y = back[y].0 as usize;
                    if y == least {
                        break;
                    }
                }
                out.decomposition.add(mk_cycle(n, &Word::new(n, letters)?)?, Multiplicity::ONE)?;
            }
        }
        for y in path.drain(..) {
            state[y] = 2;
        }
    }

    for (x, &(parent, _)) in back.iter().enumerate() {
        if parent != NONE {
            continue;
        }
        if !b.is_core(x) {
            out.fragments += 1;
            continue;
        }
        match b.stream(x, STREAM_WINDOW).and_then(|s| tail_of(n, &s)) {
            Some(tail) => out.decomposition.add(mk_chain(n, &tail)?, Multiplicity::ONE)?,
            None => out.unreadable_chains += 1,
        }
    }

    out.complete = out.discarded_cycles == 0
        && out.unreadable_chains == 0
        && (b.has_spine() || out.fragments == 0);
    Ok(out)
}

/// Decomposes at spine lengths `s`, `s + p`, `s + 2p` with `p` the model
/// period. A chain class
/// whose count strictly increases across the three rings is reported with
/// multiplicity `ω`; a constant count is kept finite; anything else clears
/// the completeness flag.
pub fn decompose_rings<B>(mut build: B, base: Truncation) -> Result<OracleDecomposition>
where
    B: FnMut(Truncation) -> Result<TruncatedBfs>,
{
    let first = build(base)?;
    let d0 = decompose_bfs(&first)?;
    if !first.has_spine() {
        return Ok(d0);
    }
    let step = first.period().max(1);
    let d1 = decompose_bfs(&build(Truncation::new(base.tree, base.spine + step))?)?;
    let d2 = decompose_bfs(&build(Truncation::new(base.tree, base.spine + 2 * step))?)?;
    let rings = [&d0, &d1, &d2];

    let chains: BTreeSet<&RepClass> = rings
        .iter()
        .flat_map(|d| d.decomposition.components().map(|(c, _)| c))
        .filter(|c| c.is_chain())
        .collect();
    let count = |d: &OracleDecomposition, c: &RepClass| match d.decomposition.multiplicity(c) {
        Some(Multiplicity::Finite(k)) => k,
        Some(Multiplicity::Omega) => u64::MAX,
        None => 0,
    };

    let mut complete = rings.iter().all(|d| d.complete);
    let cycles = |d: &OracleDecomposition| -> BTreeMap<RepClass, Multiplicity> {
        d.decomposition.components().filter(|(c, _)| c.is_cycle()).map(|(c, m)| (c.clone(), m)).collect()
    };
    if cycles(&d0) != cycles(&d1) || cycles(&d1) != cycles(&d2) {
        complete = false;
    }

    let mut decomposition = Decomposition::empty(first.alphabet());
    for (c, m) in cycles(&d0) {
        decomposition.add(c, m)?;
    }
    for c in chains {
        let (c0, c1, c2) = (count(&d0, c), count(&d1, c), count(&d2, c));
        let m = if c0 < c1 && c1 < c2 {
            Multiplicity::Omega
        } else if c0 == c1 && c1 == c2 {
            Multiplicity::Finite(c0)
        } else {
            complete = false;
            Multiplicity::Finite(c2)
        };
        decomposition.add(c.clone(), m)?;
    }
    Ok(OracleDecomposition {
        decomposition,
        complete,
        discarded_cycles: d0.discarded_cycles,
        unreadable_chains: d0.unreadable_chains,
        fragments: d0.fragments,
    })
}

/// `⟨Ω, π(s_A s_B^*) Ω⟩` for the GP label, as 0 or 1.
pub fn state_eval_bfs(b: &TruncatedBfs, a: &[Letter], bw: &[Letter]) -> Result<u8> {
    StateProbe::new(b)?.eval(a, bw)
}

/// Vector-state evaluator holding the inverse shift of one model.
pub struct StateProbe<'a> {
    bfs: &'a TruncatedBfs,
    back: Vec<(u32, u32)>,
}

impl<'a> StateProbe<'a> {
    pub fn new(bfs: &'a TruncatedBfs) -> Result<Self> {
        Ok(StateProbe { bfs, back: bfs.backward()? })
    }

    pub fn eval(&self, a: &[Letter], bw: &[Letter]) -> Result<u8> {
        let b = self.bfs;
        check_word(b.alphabet(), a)?;
        check_word(b.alphabet(), bw)?;
        let short = || Error::InsufficientDepth(format!("state on {} labels", b.len()));
        let mut x = b.gp();
        for &l in bw {
            let (p, letter) = self.back[x];
            if p == NONE {
                return Err(short());
            }
            if letter != l {
                return Ok(0);
            }
            x = p as usize;
        }
        for &l in a.iter().rev() {
            x = b.f(l, x).ok_or_else(short)?;
        }
        Ok((x == b.gp()) as u8)
    }
}

pub fn state_eval(r: &RepClass, a: &Word, bw: &Word, depth: usize) -> Result<u8> {
    for w in [a, bw] {
        if !w.is_empty() && w.alphabet() != r.alphabet() {
            return Err(Error::AlphabetMismatch { left: r.alphabet(), right: w.alphabet() });
        }
    }
    let b = super::canonical_bfs(r, depth)?;
    state_eval_bfs(&b, a.letters(), bw.letters())
}
