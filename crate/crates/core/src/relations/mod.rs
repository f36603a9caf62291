//! Runnable identity catalog and the derivations that fix the ladder
//! constants.
//!
//! Each check builds both sides from the primitive maps in [`maps`] and
//! compares them exactly. Check ids are stable strings used by the CLI
//! filter.

mod catalog;
pub mod derive;
pub mod maps;
pub mod states;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{difference, Expr};
use crate::coeff::Coefficient;
use crate::exec::{self, Execution};

pub use catalog::catalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Informational record; never counts as a failure.
    Noted,
}

/// One catalog entry.
#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
    pub(crate) build: fn() -> Outcome,
}

impl std::fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCheck").field("id", &self.id).finish()
    }
}

/// What a check produces before it is judged.
#[derive(Clone, Debug)]
pub enum Outcome {
    Identity { lhs: Expr, rhs: Expr },
    Scalar { value: Coefficient, expected: Coefficient },
    /// Must not normalize to zero.
    Nonzero(Expr),
    All(Vec<Outcome>),
    /// A property that is not an equation, with its explanation.
    Claim(bool, String),
    /// The inner outcome, plus extra detail for the report.
    Detailed(Box<Outcome>, String),
    Noted(String),
}

impl Outcome {
    pub fn identity(lhs: Expr, rhs: Expr) -> Self {
        Outcome::Identity { lhs, rhs }
    }

    pub fn scalar(value: Coefficient, expected: Coefficient) -> Self {
        Outcome::Scalar { value, expected }
    }

    /// `(passed, residual text if nonzero)`.
    fn judge(&self) -> (bool, Option<String>) {
        match self {
            Outcome::Identity { lhs, rhs } => match difference(lhs, rhs) {
                Ok(d) if d.is_zero() => (true, None),
                Ok(d) => (false, Some(d.render())),
                Err(e) => (false, Some(e.to_string())),
            },
            Outcome::Scalar { value, expected } => {
                let d = (value - expected).xi_reduced();
                if d.is_zero() {
                    (true, None)
                } else {
                    (false, Some(d.render()))
                }
            }
            Outcome::Nonzero(e) => {
                let r = e.normal_order().xi_reduced();
                (!r.is_zero(), Some(r.render()))
            }
            Outcome::All(parts) => {
                for p in parts {
                    let (ok, r) = p.judge();
                    if !ok {
                        return (false, r);
                    }
                }
                (true, None)
            }
            Outcome::Claim(ok, why) => (*ok, (!ok).then(|| why.clone())),
            Outcome::Detailed(inner, _) => inner.judge(),
            Outcome::Noted(_) => (true, None),
        }
    }
}

/// Report line for one check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: CheckStatus,
    pub anchor: String,
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CatalogError {
    #[error("no check with id `{0}`")]
    UnknownId(String),
}

fn evaluate(c: &IdentityCheck) -> CheckRecord {
    let out = (c.build)();
    let (status, residual, detail) = match &out {
        Outcome::Noted(text) => (CheckStatus::Noted, None, Some(text.clone())),
        Outcome::Nonzero(_) => {
            let (ok, r) = out.judge();
            (if ok { CheckStatus::Pass } else { CheckStatus::Fail }, None, r)
        }
        Outcome::Detailed(inner, text) => {
            let (ok, r) = inner.judge();
            (if ok { CheckStatus::Pass } else { CheckStatus::Fail }, r, Some(text.clone()))
        }
        _ => {
            let (ok, r) = out.judge();
            (if ok { CheckStatus::Pass } else { CheckStatus::Fail }, r, None)
        }
    };
    CheckRecord {
        id: c.id.into(),
        status,
        anchor: c.anchor.into(),
        description: c.description.into(),
        residual,
        detail,
    }
}

/// Runs every check whose id starts with `filter`, in catalog order.
pub fn run_catalog(filter: Option<&str>, exec: Execution) -> Vec<CheckRecord> {
    let selected: Vec<IdentityCheck> =
        catalog().iter().filter(|c| filter.is_none_or(|f| c.id.starts_with(f))).copied().collect();
    exec::map(exec, &selected, evaluate)
}

/// Runs the check with exactly this id.
pub fn run_check(id: &str) -> Result<CheckRecord, CatalogError> {
    catalog().iter().find(|c| c.id == id).map(evaluate).ok_or_else(|| CatalogError::UnknownId(id.into()))
}
