//! Truncated two-mode Fock space.
//!
//! Basis `|n1, n2>` with `0 <= n1, n2 < N` sits at index `n1 * N + n2`.
//! Operators are dense complex matrices in that basis.

mod checks;
mod realize;
mod spectrum;

use faer::{c64, Mat};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::coeff::{sym, values, Bindings, CoeffError, Coefficient};
use crate::exec::Execution;

pub use checks::{numeric_checks, HERMITICITY_TOLERANCE, NUMERIC_PREFIX, SPECTRUM_TOLERANCE, TOLERANCE};
pub use realize::{bose_image, realize, realize_bose, Route};
pub use spectrum::{hat_state_gram, level, oscillator_spectrum, tilde_state_gram, Gram, Label, SpectrumResult, LABEL_TOLERANCE};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FockError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("no realization route from algebra `{0}`")]
    UnreachableAlgebra(String),
    /// Hat ladders need `theta` and `eta` both positive or both zero.
    #[error("route unavailable: {0}")]
    RouteUnavailable(String),
    #[error("operator dimensions {0} and {1} differ")]
    DimensionMismatch(usize, usize),
    #[error("eigensolver failed: {0}")]
    SolverFailure(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Physical parameters. `theta` or `eta` may be zero.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Params {
    pub hbar: f64,
    pub theta: f64,
    pub eta: f64,
    pub mu: f64,
    pub omega: f64,
}

impl Default for Params {
    fn default() -> Self {
        Params { hbar: 1.0, theta: 0.1, eta: 0.1, mu: 1.0, omega: 1.0 }
    }
}

impl Params {
    /// `eta = mu^2 omega^2 theta`.
    pub fn on_constraint(hbar: f64, theta: f64, mu: f64, omega: f64) -> Self {
        Params { hbar, theta, eta: mu * mu * omega * omega * theta, mu, omega }
    }

    pub fn xi(&self) -> f64 {
        (1.0 + self.theta * self.eta / (4.0 * self.hbar * self.hbar)).powf(-0.5)
    }

    /// `xi^2 (theta eta)^(1/2) / hbar`.
    pub fn splitting_ratio(&self) -> f64 {
        self.xi().powi(2) * (self.theta * self.eta).sqrt() / self.hbar
    }

    /// `(theta/eta)^(1/2)` when both are positive, else `1/(mu omega)`.
    pub fn c2(&self) -> f64 {
        if self.theta > 0.0 && self.eta > 0.0 {
            (self.theta / self.eta).sqrt()
        } else {
            1.0 / (self.mu * self.omega)
        }
    }

    /// Whether the Bose condition `c2 = (theta/eta)^(1/2)` has a finite
    /// positive solution, or the commutative limit is taken.
    pub fn hat_ladders_exist(&self) -> bool {
        (self.theta > 0.0) == (self.eta > 0.0)
    }

    pub fn satisfies_constraint(&self) -> bool {
        let k = (self.mu * self.omega).powi(2);
        (self.eta - k * self.theta).abs() <= 1e-12 * (1.0 + self.eta.abs())
    }

    /// Numeric values for every symbol the realization maps use. The ladder
    /// parameter `c2'` is tied to `c2`.
    pub fn bindings(&self) -> Bindings {
        let c2 = self.c2();
        let r = self.splitting_ratio();
        values([
            (sym::HBAR, self.hbar),
            (sym::THETA, self.theta),
            (sym::ETA, self.eta),
            (sym::MU, self.mu),
            (sym::OMEGA, self.omega),
            (sym::XI, self.xi()),
            (sym::C2, c2),
            (sym::C2P, c2),
            (sym::C1, (2.0 * self.hbar * c2).powf(-0.5)),
            (sym::ALPHA1, 1.0 + r),
            (sym::ALPHA2, 1.0 - r),
            (sym::GAMMA, 1.0),
        ])
    }

    fn validate(&self) -> Result<(), FockError> {
        let named = [("hbar", self.hbar), ("theta", self.theta), ("eta", self.eta), ("mu", self.mu), ("omega", self.omega)];
        for (n, v) in named {
            if !v.is_finite() || v < 0.0 {
                return Err(FockError::InvalidConfig(format!("{n} = {v} must be finite and non-negative")));
            }
        }
        for (n, v) in [("hbar", self.hbar), ("mu", self.mu), ("omega", self.omega)] {
            if v == 0.0 {
                return Err(FockError::InvalidConfig(format!("{n} must be positive")));
            }
        }
        if self.splitting_ratio() >= 1.0 {
            return Err(FockError::InvalidConfig("xi^2 (theta eta)^(1/2) / hbar must be below 1".into()));
        }
        Ok(())
    }
}

/// Truncation, residual buffer and parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FockConfig {
    /// Levels per mode.
    pub n: usize,
    pub buffer: usize,
    pub params: Params,
    pub exec: Execution,
}

impl FockConfig {
    pub fn new(n: usize, buffer: usize, params: Params) -> Result<Self, FockError> {
        if n < 4 {
            return Err(FockError::InvalidConfig(format!("N = {n} must be at least 4")));
        }
        if buffer < 1 || buffer > n - 2 {
            return Err(FockError::InvalidConfig(format!("buffer = {buffer} must lie in 1..={}", n - 2)));
        }
        params.validate()?;
        Ok(FockConfig { n, buffer, params, exec: Execution::available() })
    }

    pub fn with_exec(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn index(&self, n1: usize, n2: usize) -> usize {
        n1 * self.n + n2
    }

    pub fn levels(&self, k: usize) -> (usize, usize) {
        (k / self.n, k % self.n)
    }

    /// Basis indices with `n1 + n2 <= N - 1 - buffer`.
    pub fn buffered(&self) -> Vec<usize> {
        let top = self.n - 1 - self.buffer;
        (0..self.dim()).filter(|&k| {
            let (a, b) = self.levels(k);
            a + b <= top
        })
        .collect()
    }

    pub fn eval(&self, c: &Coefficient) -> Result<c64, FockError> {
        Ok(c.eval(&self.params.bindings())?)
    }
}

/// A dense operator on the truncated space.
#[derive(Clone, Debug)]
pub struct FockOperator {
    pub n: usize,
    pub matrix: Mat<c64>,
}

impl FockOperator {
    pub fn zeros(n: usize) -> Self {
        FockOperator { n, matrix: Mat::zeros(n * n, n * n) }
    }

    pub fn identity(n: usize) -> Self {
        FockOperator { n, matrix: Mat::identity(n * n, n * n) }
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn get(&self, row: usize, col: usize) -> c64 {
        self.matrix[(row, col)]
    }

    fn check(&self, o: &FockOperator) -> Result<(), FockError> {
        if self.dim() != o.dim() {
            Err(FockError::DimensionMismatch(self.dim(), o.dim()))
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, o: &FockOperator) -> Result<FockOperator, FockError> {
        self.check(o)?;
        Ok(FockOperator { n: self.n, matrix: &self.matrix * &o.matrix })
    }

    pub fn sub(&self, o: &FockOperator) -> Result<FockOperator, FockError> {
        self.check(o)?;
        Ok(FockOperator { n: self.n, matrix: &self.matrix - &o.matrix })
    }

    pub fn add(&self, o: &FockOperator) -> Result<FockOperator, FockError> {
        self.check(o)?;
        Ok(FockOperator { n: self.n, matrix: &self.matrix + &o.matrix })
    }

    pub fn scale(&self, z: c64) -> FockOperator {
        let m = &self.matrix;
        FockOperator { n: self.n, matrix: Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)] * z) }
    }

    pub fn adjoint(&self) -> FockOperator {
        FockOperator { n: self.n, matrix: self.matrix.adjoint().to_owned() }
    }

    pub fn commutator(&self, o: &FockOperator) -> Result<FockOperator, FockError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    /// `self |v>`.
    pub fn apply(&self, v: &[c64]) -> Vec<c64> {
        let m = &self.matrix;
        (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)] * v[j]).sum()).collect()
    }

    /// Largest entry modulus of `P self P` on the index set `p`.
    pub fn max_on(&self, p: &[usize]) -> f64 {
        let mut best = 0.0f64;
        for &i in p {
            for &j in p {
                best = best.max(self.matrix[(i, j)].norm());
            }
        }
        best
    }

    /// Largest entry modulus over the whole matrix.
    pub fn max_abs(&self) -> f64 {
        let mut best = 0.0f64;
        for j in 0..self.matrix.ncols() {
            for i in 0..self.matrix.nrows() {
                best = best.max(self.matrix[(i, j)].norm());
            }
        }
        best
    }

    /// Row-major `re im` pairs, one row per line.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for i in 0..self.matrix.nrows() {
            let row: Vec<String> = (0..self.matrix.ncols())
                .map(|j| {
                    let z = self.matrix[(i, j)];
                    format!("{:.16e} {:.16e}", z.re, z.im)
                })
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// `(a1, adj(a1), a2, adj(a2))` with `a|n> = sqrt(n) |n-1>` in each mode.
pub fn build_ladders(cfg: &FockConfig) -> (FockOperator, FockOperator, FockOperator, FockOperator) {
    let n = cfg.n;
    let d = cfg.dim();
    let a1 = Mat::from_fn(d, d, |i, j| {
        let ((r1, r2), (c1, c2)) = (cfg.levels(i), cfg.levels(j));
        if r2 == c2 && c1 == r1 + 1 {
            c64::new((c1 as f64).sqrt(), 0.0)
        } else {
            c64::new(0.0, 0.0)
        }
    });
    let a2 = Mat::from_fn(d, d, |i, j| {
        let ((r1, r2), (c1, c2)) = (cfg.levels(i), cfg.levels(j));
        if r1 == c1 && c2 == r2 + 1 {
            c64::new((c2 as f64).sqrt(), 0.0)
        } else {
            c64::new(0.0, 0.0)
        }
    });
    let a1 = FockOperator { n, matrix: a1 };
    let a2 = FockOperator { n, matrix: a2 };
    let (a1d, a2d) = (a1.adjoint(), a2.adjoint());
    (a1, a1d, a2, a2d)
}

/// Max modulus of `P (AB - BA - expected) P` on the buffered subspace.
pub fn commutator_residual(
    a: &FockOperator,
    b: &FockOperator,
    expected: &Coefficient,
    cfg: &FockConfig,
) -> Result<f64, FockError> {
    let z = cfg.eval(expected)?;
    let c = a.commutator(b)?.sub(&FockOperator::identity(a.n).scale(z))?;
    Ok(c.max_on(&cfg.buffered()))
}

#[cfg(test)]
mod tests;
