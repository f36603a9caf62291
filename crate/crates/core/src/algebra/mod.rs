//! Noncommutative polynomials over generators with central commutators.

pub mod builtin;
mod expr;
mod render;
mod subst;
mod table;
mod vacuum;

use thiserror::Error;

pub use expr::{commutator, difference, expr_equal, Expr, Word};
pub use subst::{substitute, SubstMap};
pub use table::{AlgebraBuilder, AlgebraTable};
pub use vacuum::{fock_word, inner_product, vacuum_expectation, vacuum_expectation_by_action};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum AlgebraError {
    #[error("operands belong to different algebras (`{left}` and `{right}`)")]
    AlgebraMismatch { left: String, right: String },
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("algebra `{algebra}` has no generator `{name}`")]
    UnknownGenerator { algebra: String, name: String },
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("algebra `{0}` declares no annihilators")]
    NoVacuumDeclared(String),
    #[error("invalid algebra `{algebra}`: {reason}")]
    InvalidAlgebra { algebra: String, reason: String },
}

#[cfg(test)]
mod tests;
