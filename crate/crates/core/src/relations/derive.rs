//! Solving for the ladder constants.

use serde::Serialize;

use crate::algebra::{commutator, Expr};
use crate::coeff::{bindings, sym, CoeffError, Coefficient, Exponent, Symbol};

use super::maps::hat_ladder;

/// A symbol fixed by a scalar condition.
#[derive(Clone, Debug)]
pub struct DerivationResult {
    pub symbol: String,
    /// Positive root that solves the condition.
    pub value: Coefficient,
    /// The scalar condition before solving.
    pub extracted: Coefficient,
    /// Condition with the solution substituted; zero when solved.
    pub residual: Coefficient,
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivationRecord {
    pub symbol: String,
    pub value: String,
    pub extracted: String,
    pub residual: String,
}

impl DerivationResult {
    pub fn record(&self) -> DerivationRecord {
        DerivationRecord {
            symbol: self.symbol.clone(),
            value: self.value.render(),
            extracted: self.extracted.render(),
            residual: self.residual.render(),
        }
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum DeriveError {
    #[error("condition is not of the form A*{0}^2 + B")]
    NotQuadratic(String),
    #[error("the square of `{0}` would be {1}, which has no positive monomial root")]
    NoPositiveRoot(String, String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Solves `A u^2 + B = target` for the positive monomial `u`.
pub fn solve_square(cond: &Coefficient, u: &str, target: &Coefficient) -> Result<Coefficient, DeriveError> {
    let s = Symbol::new(u);
    let parts = cond.collect(&s).ok_or_else(|| DeriveError::NotQuadratic(u.into()))?;
    let two = Exponent::from_integer(2);
    if parts.keys().any(|k| *k != two && *k != Exponent::from_integer(0)) {
        return Err(DeriveError::NotQuadratic(u.into()));
    }
    let a = parts.get(&two).cloned().ok_or_else(|| DeriveError::NotQuadratic(u.into()))?;
    let b = parts.get(&Exponent::from_integer(0)).cloned().unwrap_or_else(Coefficient::zero);
    let sq = (target - &b).div(&a)?;
    match sq.as_monomial() {
        Some((_, c)) if c.is_real() && c.re > num_rational::BigRational::from_integer(0.into()) => Ok(sq.sqrt()?),
        _ => Err(DeriveError::NoPositiveRoot(u.into(), sq.render())),
    }
}

fn ansatz(c1: &Coefficient, c2: &Coefficient) -> [Expr; 4] {
    let m = hat_ladder(c1, c2);
    ["ah1", "ah2", "adj(ah1)", "adj(ah2)"].map(|n| m.image(n).expect("generator").clone())
}

/// `[ah1, ah2]` for the ansatz `ah_i = c1 (xh_i + i c2 ph_i)` fixes `c2`.
pub fn derive_bose_condition() -> DerivationResult {
    let [a1, a2, _, _] = ansatz(&Coefficient::symbol(sym::C1), &Coefficient::symbol(sym::C2));
    let extracted = commutator(&a1, &a2).expect("same algebra").as_scalar().expect("central commutator");
    let value = solve_square(&extracted, sym::C2, &Coefficient::zero()).expect("quadratic in c2");
    let residual = extracted.subst(&bindings([(sym::C2, value.clone())])).expect("monomial binding");
    DerivationResult { symbol: sym::C2.into(), value, extracted, residual }
}

/// `[ah1, adj(ah1)] = 1` fixes `c1` for a given `c2`.
pub fn derive_c1(c2: &Coefficient) -> DerivationResult {
    let [a1, _, a1d, _] = ansatz(&Coefficient::symbol(sym::C1), c2);
    let extracted = commutator(&a1, &a1d).expect("same algebra").as_scalar().expect("central commutator");
    let value = solve_square(&extracted, sym::C1, &Coefficient::one()).expect("quadratic in c1");
    let residual =
        extracted.subst(&bindings([(sym::C1, value.clone())])).expect("monomial binding") - Coefficient::one();
    DerivationResult { symbol: sym::C1.into(), value, extracted, residual }
}

/// `c1` and `c2` from the two conditions, with `c1` expressed through the
/// solved `c2`.
pub fn solved_constants() -> (Coefficient, Coefficient) {
    let c2 = derive_bose_condition().value;
    let c1 = derive_c1(&Coefficient::symbol(sym::C2))
        .value
        .subst(&bindings([(sym::C2, c2.clone())]))
        .expect("monomial binding");
    (c1, c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::coeff;

    #[test]
    fn bose_condition() {
        let d = derive_bose_condition();
        assert_eq!(d.extracted, coeff("i*c1^2*xi^2*(theta - c2^2*eta)"));
        assert_eq!(d.value, coeff("theta^(1/2)*eta^(-1/2)"));
        assert!(d.residual.is_zero());
    }

    #[test]
    fn c1_condition() {
        let d = derive_c1(&Coefficient::symbol(sym::C2));
        assert_eq!(&d.value * &d.value, coeff("1/(2*hbar*c2)"));
        assert!(d.residual.is_zero());
        let at = derive_c1(&coeff("1/(mu*omega)"));
        assert_eq!(at.value, coeff("(mu*omega/(2*hbar))^(1/2)"));
    }

    #[test]
    fn symmetric_parameters_give_unit_c2() {
        let d = derive_bose_condition();
        let v = d.value.subst(&bindings([(sym::ETA, Coefficient::symbol(sym::THETA))])).unwrap();
        assert!(v.is_one());
    }

    #[test]
    fn rejects_non_quadratic_conditions() {
        assert!(matches!(solve_square(&coeff("c2^3"), "c2", &Coefficient::zero()), Err(DeriveError::NotQuadratic(_))));
        assert!(matches!(
            solve_square(&coeff("c2^2 + 1"), "c2", &Coefficient::zero()),
            Err(DeriveError::NoPositiveRoot(..))
        ));
    }
}
