use std::path::Path;

use thiserror::Error;

use super::syntax::{EndoExpr, Expr, ExprKind, ParseError, Span};
use crate::endocalc::{branch_decomposition, builtin, endo_tensor, PermEndo, BUILTIN_NAMES};
use crate::error::Error;
use crate::oracle::{
    canonical_bfs_with, compose_bfs, decompose_rings, direct_sum_bfs, fitted_tree_depth,
    product_bfs, OracleDecomposition, TruncatedBfs, Truncation,
};
use crate::repcalc::{tensor, tensor_power, Decomposition, RepClass};
use crate::words::product_alphabet;

/// Total oracle label budget shared by the literals of one expression.
pub const ORACLE_LABELS: usize = 1 << 20;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("alphabet mismatch at {span}: {left} vs {right}")]
    Alphabet { span: Span, left: u32, right: u32 },
    #[error("unknown endomorphism `{0}` (built-ins: {names})", names = BUILTIN_NAMES.join(", "))]
    UnknownEndo(String),
    #[error("cannot load {path}: {msg}")]
    EndoFile { path: String, msg: String },
    #[error("truncation depth insufficient: {0}")]
    Depth(String),
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Depth(_) => 3,
            CliError::Lib(Error::InsufficientDepth(_) | Error::ModelTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

pub fn resolve_endo(e: &EndoExpr) -> Result<PermEndo, CliError> {
    match e {
        EndoExpr::Named(n) => builtin(n).ok_or_else(|| CliError::UnknownEndo(n.clone())),
        EndoExpr::File(p) => {
            let text = std::fs::read_to_string(Path::new(p))
                .map_err(|err| CliError::EndoFile { path: p.clone(), msg: err.to_string() })?;
            serde_json::from_str(&text).map_err(|err| CliError::EndoFile { path: p.clone(), msg: err.to_string() })
        }
        EndoExpr::Tensor(a, b) => Ok(endo_tensor(&resolve_endo(a)?, &resolve_endo(b)?)?),
    }
}

/// Alphabet of every node, checked bottom-up.
pub fn alphabet_of(e: &Expr) -> Result<u32, CliError> {
    match &e.kind {
        ExprKind::Rep(r) => Ok(r.alphabet()),
        ExprKind::Tensor(a, b) => Ok(product_alphabet(alphabet_of(a)?, alphabet_of(b)?)?),
        ExprKind::Sum(a, b) => {
            let (l, r) = (alphabet_of(a)?, alphabet_of(b)?);
            if l != r {
                return Err(CliError::Alphabet { span: e.span, left: l, right: r });
            }
            Ok(l)
        }
        ExprKind::Power(a, n) => {
            let base = alphabet_of(a)?;
            (1..*n).try_fold(base, |acc, _| Ok(product_alphabet(acc, base)?))
        }
        ExprKind::Compose(a, endo) => {
            let l = alphabet_of(a)?;
            let r = resolve_endo(endo)?.alphabet();
            if l != r {
                return Err(CliError::Alphabet { span: e.span, left: l, right: r });
            }
            Ok(l)
        }
    }
}

/// Default truncation depth: twice the longest literal word plus 4.
pub fn default_depth(e: &Expr) -> usize {
    let longest = e
        .literals()
        .iter()
        .map(|r| match r {
            RepClass::Cycle(w) => w.len(),
            RepClass::Chain(l) => l.prefix_letters().len() + l.period(),
        })
        .max()
        .unwrap_or(1);
    2 * longest + 4
}

/// Closed-form evaluation; compositions branch by simulation with the
/// given depth budget.
pub fn eval_formula(e: &Expr, depth: usize) -> Result<Decomposition, CliError> {
    alphabet_of(e)?;
    formula(e, depth)
}

fn formula(e: &Expr, depth: usize) -> Result<Decomposition, CliError> {
    Ok(match &e.kind {
        ExprKind::Rep(r) => Decomposition::single(r.clone()),
        ExprKind::Tensor(a, b) => tensor(&formula(a, depth)?, &formula(b, depth)?)?,
        ExprKind::Sum(a, b) => formula(a, depth)?.direct_sum(&formula(b, depth)?)?,
        ExprKind::Power(a, n) => tensor_power(&formula(a, depth)?, *n)?,
        ExprKind::Compose(a, endo) => {
            let b = branch_decomposition(&formula(a, depth)?, &resolve_endo(endo)?, depth)?;
            if !b.complete {
                return Err(CliError::Depth(format!("branching of {a} at depth {depth}")));
            }
            b.decomposition
        }
    })
}

fn factor_count(e: &Expr) -> usize {
    match &e.kind {
        ExprKind::Rep(_) => 1,
        ExprKind::Tensor(a, b) | ExprKind::Sum(a, b) => factor_count(a) + factor_count(b),
        ExprKind::Power(a, n) => factor_count(a) * n,
        ExprKind::Compose(a, _) => factor_count(a),
    }
}

/// Builds the oracle model; each literal gets tree depth `t.tree` cut
/// down to its share of [`ORACLE_LABELS`].
pub fn build_oracle(e: &Expr, t: Truncation) -> Result<TruncatedBfs, CliError> {
    let k = factor_count(e).max(1) as f64;
    let share = (ORACLE_LABELS as f64).powf(1.0 / k).floor() as usize;
    model(e, t, share.max(1))
}

fn model(e: &Expr, t: Truncation, share: usize) -> Result<TruncatedBfs, CliError> {
    Ok(match &e.kind {
        ExprKind::Rep(r) => {
            let anchors = match r {
                RepClass::Cycle(w) => w.len(),
                RepClass::Chain(_) => t.spine + 1,
            };
            let tree = fitted_tree_depth(r.alphabet(), anchors, t.tree, share);
            canonical_bfs_with(r, Truncation::new(tree, t.spine))?
        }
        ExprKind::Tensor(a, b) => product_bfs(&model(a, t, share)?, &model(b, t, share)?)?,
        ExprKind::Sum(a, b) => direct_sum_bfs(&model(a, t, share)?, &model(b, t, share)?)?,
        ExprKind::Power(a, n) => {
            let base = model(a, t, share)?;
            let mut acc = base.clone();
            for _ in 1..*n {
                acc = product_bfs(&acc, &base)?;
            }
            acc
        }
        ExprKind::Compose(a, endo) => compose_bfs(&model(a, t, share)?, &resolve_endo(endo)?)?,
    })
}

/// Oracle evaluation with ring certification of chain multiplicities.
pub fn eval_oracle(e: &Expr, depth: usize) -> Result<OracleDecomposition, CliError> {
    alphabet_of(e)?;
    let mut failure = None;
    let result = decompose_rings(
        |t| {
            build_oracle(e, t).map_err(|err| {
                let lib = match &err {
                    CliError::Lib(l) => l.clone(),
                    other => Error::Unsupported(other.to_string()),
                };
                failure = Some(err);
                lib
            })
        },
        Truncation::uniform(depth),
    );
    match (result, failure) {
        (Ok(d), _) => Ok(d),
        (Err(_), Some(err)) => Err(err),
        (Err(err), None) => Err(err.into()),
    }
}
