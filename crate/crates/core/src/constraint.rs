//! Dimensional analysis for the ladder parameter and the resulting
//! proportionality between the two noncommutativity parameters.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{vacuum_expectation, Expr};
use crate::coeff::{bindings, sym, values, Bindings, CoeffError, Coefficient, Exponent, Monomial, Symbol};
use crate::parser::coeff;
use crate::relations::derive::solve_square;
use crate::relations::maps::undeformed_in_bose;

/// Physical dimension as `(mass, length, time)` exponents.
pub type Dimension = [Exponent; 3];

pub fn dim(m: i64, l: i64, t: i64) -> Dimension {
    [Exponent::from_integer(m), Exponent::from_integer(l), Exponent::from_integer(t)]
}

/// A system's characteristic parameters and their dimensions.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    pub name: String,
    pub params: Vec<(String, Dimension)>,
}

impl SystemSpec {
    pub fn new(name: &str, params: impl IntoIterator<Item = (&'static str, Dimension)>) -> Result<Self, ConstraintError> {
        let params: Vec<(String, Dimension)> = params.into_iter().map(|(n, d)| (n.to_string(), d)).collect();
        for (k, (n, _)) in params.iter().enumerate() {
            if params[..k].iter().any(|(m, _)| m == n) {
                return Err(ConstraintError::DuplicateParameter(n.clone()));
            }
        }
        Ok(SystemSpec { name: name.into(), params })
    }

    /// Mass, frequency and the quantum of action.
    pub fn oscillator() -> Self {
        SystemSpec::new("oscillator", [(sym::MU, dim(1, 0, 0)), (sym::OMEGA, dim(0, 0, -1)), (sym::HBAR, dim(1, 2, -1))])
            .expect("distinct names")
    }

    /// Formal dimension of a monomial in the parameters.
    pub fn dimension_of(&self, c: &Coefficient) -> Result<Dimension, ConstraintError> {
        let (m, _) = c.as_monomial().ok_or(ConstraintError::NotMonomial(c.render()))?;
        let mut d = dim(0, 0, 0);
        for (s, e) in m.symbols() {
            let (_, pd) = self
                .params
                .iter()
                .find(|(n, _)| n == s.name())
                .ok_or_else(|| ConstraintError::UnknownParameter(s.name().into()))?;
            for k in 0..3 {
                d[k] += pd[k] * e;
            }
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ConstraintError {
    #[error("the parameter dimensions are dependent; solutions: {particular:?} + span {family:?}")]
    NonUniqueSolution { particular: Vec<(String, Exponent)>, family: Vec<Vec<(String, Exponent)>> },
    #[error("no product of the parameters has the requested dimension")]
    NoSolution,
    #[error("duplicate parameter `{0}`")]
    DuplicateParameter(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("`{0}` is not a monomial")]
    NotMonomial(String),
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Exponents `t_k` with `prod p_k^t_k` of the target dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionalSolution {
    pub exponents: Vec<(String, Exponent)>,
    pub monomial: Coefficient,
}

/// Solves the exponent-matching linear system exactly.
pub fn dimensional_solve(spec: &SystemSpec, target: Dimension) -> Result<DimensionalSolution, ConstraintError> {
    let n = spec.params.len();
    // augmented 3 x (n+1) matrix, columns = parameters
    let mut a: Vec<Vec<Exponent>> =
        (0..3).map(|r| spec.params.iter().map(|(_, d)| d[r]).chain([target[r]]).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..3).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = Exponent::one() / a[row][col];
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..3 {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                let src = a[row].clone();
                for (x, v) in a[r].iter_mut().zip(&src) {
                    *x -= f * *v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == 3 {
            break;
        }
    }
    if (row..3).any(|r| !a[r][n].is_zero()) {
        return Err(ConstraintError::NoSolution);
    }
    let mut particular = vec![Exponent::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = a[r][n];
    }
    let named = |v: &[Exponent]| spec.params.iter().map(|(s, _)| s.clone()).zip(v.iter().copied()).collect::<Vec<_>>();
    if pivots.len() < n {
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let family = free
            .iter()
            .map(|&f| {
                let mut v = vec![Exponent::zero(); n];
                v[f] = Exponent::one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -a[r][f];
                }
                named(&v)
            })
            .collect();
        return Err(ConstraintError::NonUniqueSolution { particular: named(&particular), family });
    }
    let (_, m) = Monomial::from_factors(
        spec.params
            .iter()
            .zip(&particular)
            .map(|((s, _), e)| (crate::coeff::Base::Sym(Symbol::new(s)), *e)),
    );
    Ok(DimensionalSolution {
        exponents: named(&particular),
        monomial: Coefficient::monomial(m, crate::coeff::GaussianRational::one()),
    })
}

/// `time/mass`, the dimension of the ladder parameter `c2'`.
pub fn ladder_parameter_dimension() -> Dimension {
    dim(-1, 0, 1)
}

/// Outcome of fixing the constraint for a system.
#[derive(Clone, Debug)]
pub struct ConstraintResult {
    pub system: String,
    /// `c2'` with the dimensionless factor resolved where possible.
    pub c2_prime: Coefficient,
    /// `K = c2'^-2`.
    pub k: Coefficient,
    /// Value of the dimensionless factor, when the dynamics fix it.
    pub gamma: Option<Coefficient>,
    pub energies: Option<VacuumEnergies>,
}

/// Vacuum expectations as functions of gamma.
#[derive(Clone, Debug)]
pub struct VacuumEnergies {
    /// Per mode.
    pub kinetic: Coefficient,
    pub potential: Coefficient,
    /// Kinetic energy summed over both modes.
    pub kinetic_total: Coefficient,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstraintRecord {
    pub system: String,
    pub c2_prime: String,
    #[serde(rename = "K")]
    pub k: String,
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kinetic: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub potential: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
}

impl ConstraintResult {
    pub fn record(&self, eta: Option<f64>) -> ConstraintRecord {
        ConstraintRecord {
            system: self.system.clone(),
            c2_prime: self.c2_prime.render(),
            k: self.k.render(),
            gamma: self.gamma.as_ref().map(Coefficient::render),
            kinetic: self.energies.as_ref().map(|e| e.kinetic.render()),
            potential: self.energies.as_ref().map(|e| e.potential.render()),
            eta,
        }
    }
}

/// Vacuum energies with `c2' = gamma/(mu omega)`; equal kinetic and
/// potential energy with positive kinetic energy forces `gamma = 1`.
pub fn fix_gamma_oscillator() -> Result<ConstraintResult, ConstraintError> {
    let spec = SystemSpec::oscillator();
    let base = dimensional_solve(&spec, ladder_parameter_dimension())?.monomial;
    let gamma = Coefficient::symbol(sym::GAMMA);
    let c2p = &gamma * &base;
    let m = undeformed_in_bose(&c2p);
    let p1 = m.image("p1").expect("generator");
    let p2 = m.image("p2").expect("generator");
    let x1 = m.image("x1").expect("generator");
    let vev = |e: &Expr| vacuum_expectation(e).expect("ladder algebra");
    let kinetic = vev(&(p1 * p1)) * coeff("1/(2*mu)");
    let kinetic_total = (vev(&(p1 * p1)) + vev(&(p2 * p2))) * coeff("1/(2*mu)");
    let potential = vev(&(x1 * x1)) * coeff("mu*omega^2/2");
    let cond = (&kinetic - &potential) * gamma.clone();
    let g = solve_square(&cond, sym::GAMMA, &Coefficient::zero())
        .map_err(|e| ConstraintError::Coeff(CoeffError::UnboundSymbol(e.to_string())))?;
    let c2_prime = c2p.subst(&bindings([(sym::GAMMA, g.clone())]))?;
    let k = c2_prime.pow_int(-2)?;
    Ok(ConstraintResult {
        system: spec.name,
        c2_prime,
        k,
        gamma: Some(g),
        energies: Some(VacuumEnergies { kinetic, potential, kinetic_total }),
    })
}

/// `c2' = gamma * m` with `m` the unique monomial of dimension time/mass,
/// and `K = c2'^-2`. The dimensionless `gamma` stays symbolic.
pub fn dimensional_constraint(spec: &SystemSpec) -> Result<ConstraintResult, ConstraintError> {
    let base = dimensional_solve(spec, ladder_parameter_dimension())?.monomial;
    let c2_prime = Coefficient::symbol(sym::GAMMA) * base;
    let k = c2_prime.pow_int(-2)?;
    Ok(ConstraintResult { system: spec.name.clone(), c2_prime, k, gamma: None, energies: None })
}

/// Constraint for a registered system name.
pub fn constraint_for(system: &str) -> Result<ConstraintResult, ConstraintError> {
    match system {
        "oscillator" => fix_gamma_oscillator(),
        _ => Err(ConstraintError::UnknownSystem(system.into())),
    }
}

/// `eta = K * theta`.
pub fn eta_from_theta(k: &Coefficient, theta: f64, vals: &Bindings) -> Result<f64, CoeffError> {
    Ok(k.eval(vals)?.re * theta)
}

/// Numeric bindings for `mu`, `omega`, `hbar`.
pub fn oscillator_values(mu: f64, omega: f64, hbar: f64) -> Bindings {
    values([(sym::MU, mu), (sym::OMEGA, omega), (sym::HBAR, hbar)])
}
