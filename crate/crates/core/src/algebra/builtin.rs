//! Registered algebras.
//!
//! | name         | generators (canonical order)              |
//! |--------------|-------------------------------------------|
//! | `deformed`   | `xh1 xh2 ph1 ph2`                         |
//! | `undeformed` | `x1 x2 p1 p2`                             |
//! | `bose`       | `adj(a1) adj(a2) a1 a2`                   |
//! | `hatbose`    | `adj(ah1) adj(ah2) ah1 ah2`               |
//! | `tilde`      | `adj(at1) adj(at2) at1 at2`               |

use std::sync::{Arc, OnceLock};

use crate::coeff::{sym, Coefficient};

use super::table::{AlgebraBuilder, AlgebraTable};
use super::AlgebraError;

pub const DEFORMED: &str = "deformed";
pub const UNDEFORMED: &str = "undeformed";
pub const BOSE: &str = "bose";
pub const HATBOSE: &str = "hatbose";
pub const TILDE: &str = "tilde";

pub const ALL: [&str; 5] = [DEFORMED, UNDEFORMED, BOSE, HATBOSE, TILDE];

fn s(name: &str) -> Coefficient {
    Coefficient::symbol(name)
}

fn i_hbar() -> Coefficient {
    Coefficient::i() * s(sym::HBAR)
}

/// `(i/hbar) xi^2 theta^(1/2) eta^(1/2)`, the hat-mode mixing constant.
pub fn hat_mixing() -> Coefficient {
    Coefficient::i()
        * s(sym::HBAR).inv().expect("nonzero")
        * s(sym::XI).pow_int(2).expect("integer power")
        * Coefficient::symbol_pow(sym::THETA, 1, 2)
        * Coefficient::symbol_pow(sym::ETA, 1, 2)
}

/// Name of the creation partner of a ladder generator.
pub fn adj_name(g: &str) -> String {
    format!("adj({g})")
}

fn phase_space(name: &str, x: [&str; 2], p: [&str; 2], xx: Coefficient, pp: Coefficient) -> Arc<AlgebraTable> {
    AlgebraBuilder::new(name)
        .generator(x[0])
        .generator(x[1])
        .generator(p[0])
        .generator(p[1])
        .commutator(x[0], x[1], xx)
        .commutator(p[0], p[1], pp)
        .commutator(x[0], p[0], i_hbar())
        .commutator(x[1], p[1], i_hbar())
        .build()
        .expect("built-in phase-space algebra is consistent")
}

fn ladder(name: &str, a: [&str; 2], cross: Coefficient) -> Arc<AlgebraTable> {
    let ad = [adj_name(a[0]), adj_name(a[1])];
    AlgebraBuilder::new(name)
        .generator(&ad[0])
        .generator(&ad[1])
        .generator(a[0])
        .generator(a[1])
        .adjoint(a[0], &ad[0])
        .adjoint(a[1], &ad[1])
        .annihilator(a[0])
        .annihilator(a[1])
        .commutator(a[0], &ad[0], Coefficient::one())
        .commutator(a[1], &ad[1], Coefficient::one())
        .commutator(a[0], &ad[1], cross.clone())
        .commutator(a[1], &ad[0], -cross)
        .build()
        .expect("built-in ladder algebra is consistent")
}

/// `[xh1,xh2] = i xi^2 theta`, `[ph1,ph2] = i xi^2 eta`, `[xh_i,ph_j] = i hbar delta_ij`.
pub fn deformed() -> Arc<AlgebraTable> {
    static T: OnceLock<Arc<AlgebraTable>> = OnceLock::new();
    T.get_or_init(|| {
        let xi2 = s(sym::XI).pow_int(2).expect("integer power");
        phase_space(
            DEFORMED,
            ["xh1", "xh2"],
            ["ph1", "ph2"],
            Coefficient::i() * xi2.clone() * s(sym::THETA),
            Coefficient::i() * xi2 * s(sym::ETA),
        )
    })
    .clone()
}

/// Canonical Heisenberg-Weyl algebra in two dimensions.
pub fn undeformed() -> Arc<AlgebraTable> {
    static T: OnceLock<Arc<AlgebraTable>> = OnceLock::new();
    T.get_or_init(|| phase_space(UNDEFORMED, ["x1", "x2"], ["p1", "p2"], Coefficient::zero(), Coefficient::zero()))
        .clone()
}

/// Two independent bosonic modes.
pub fn bose() -> Arc<AlgebraTable> {
    static T: OnceLock<Arc<AlgebraTable>> = OnceLock::new();
    T.get_or_init(|| ladder(BOSE, ["a1", "a2"], Coefficient::zero())).clone()
}

/// Deformed bosonic modes: `[ah_i, adj(ah_j)] = delta_ij + hat_mixing * eps_ij`.
pub fn hatbose() -> Arc<AlgebraTable> {
    static T: OnceLock<Arc<AlgebraTable>> = OnceLock::new();
    T.get_or_init(|| ladder(HATBOSE, ["ah1", "ah2"], hat_mixing())).clone()
}

/// Decoupled modes built from the hat modes.
pub fn tilde() -> Arc<AlgebraTable> {
    static T: OnceLock<Arc<AlgebraTable>> = OnceLock::new();
    T.get_or_init(|| ladder(TILDE, ["at1", "at2"], Coefficient::zero())).clone()
}

pub fn lookup(name: &str) -> Result<Arc<AlgebraTable>, AlgebraError> {
    match name {
        DEFORMED => Ok(deformed()),
        UNDEFORMED => Ok(undeformed()),
        BOSE => Ok(bose()),
        HATBOSE => Ok(hatbose()),
        TILDE => Ok(tilde()),
        _ => Err(AlgebraError::UnknownAlgebra(name.to_string())),
    }
}
