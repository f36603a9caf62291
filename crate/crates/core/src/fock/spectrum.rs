//! Oscillator eigenvalues and state overlaps.

use faer::{c64, Mat, Side};
use serde::Serialize;

use crate::algebra::builtin;
use crate::algebra::Expr;
use crate::relations::maps::oscillator_hamiltonian;

use super::realize::{realize, Route};
use super::{FockConfig, FockError, FockOperator, Params};

/// Largest residual accepted when assigning a label.
pub const LABEL_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Label {
    pub n1: usize,
    pub n2: usize,
    pub lambda: f64,
    pub formula: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumResult {
    pub params: Params,
    /// All eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Levels with `n1 + n2 <= N - buffer`, in formula order.
    pub labels: Vec<Label>,
    /// Labels with no eigenvalue within [`LABEL_TOLERANCE`].
    pub unmatched: Vec<(usize, usize)>,
    /// `false` when `eta != mu^2 omega^2 theta`; the level formula is then
    /// not expected to hold.
    pub constrained: bool,
    /// Max entry difference of the two realizations on the buffered block,
    /// when both exist.
    pub route_difference: Option<f64>,
}

impl SpectrumResult {
    pub fn max_residual(&self) -> f64 {
        self.labels.iter().map(|l| l.residual).fold(0.0, f64::max)
    }

    pub fn label(&self, n1: usize, n2: usize) -> Option<&Label> {
        self.labels.iter().find(|l| l.n1 == n1 && l.n2 == n2)
    }

    pub fn all_matched(&self) -> bool {
        self.unmatched.is_empty()
    }

    /// `n1,n2,lambda,formula,residual` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n1,n2,lambda,formula,residual\n");
        for l in &self.labels {
            out.push_str(&format!("{},{},{:.16e},{:.16e},{:.16e}\n", l.n1, l.n2, l.lambda, l.formula, l.residual));
        }
        out
    }
}

/// `hbar (alpha1 omega n1 + alpha2 omega n2 + omega)`.
pub fn level(p: &Params, n1: usize, n2: usize) -> f64 {
    let r = p.splitting_ratio();
    p.hbar * p.omega * ((1.0 + r) * n1 as f64 + (1.0 - r) * n2 as f64 + 1.0)
}

fn hermitian_part(m: &FockOperator) -> Mat<c64> {
    let a = &m.matrix;
    Mat::from_fn(a.nrows(), a.ncols(), |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5)
}

/// Diagonalizes the oscillator and labels the eigenvalues inside the
/// reliable window by greedy nearest match against the level formula.
pub fn oscillator_spectrum(cfg: &FockConfig) -> Result<SpectrumResult, FockError> {
    let h = oscillator_hamiltonian();
    let hb = realize(&h, cfg, Route::Bopp)?;
    let route_difference = match realize(&h, cfg, Route::LadderDirect) {
        Ok(hl) => Some(hb.sub(&hl)?.max_on(&cfg.buffered())),
        Err(FockError::RouteUnavailable(_)) => None,
        Err(e) => return Err(e),
    };
    let eigenvalues = hermitian_part(&hb)
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| FockError::SolverFailure(format!("{e:?}")))?;

    let top = cfg.n - cfg.buffer;
    let mut wanted: Vec<(usize, usize, f64)> = Vec::new();
    for n1 in 0..=top {
        for n2 in 0..=top - n1 {
            wanted.push((n1, n2, level(&cfg.params, n1, n2)));
        }
    }
    wanted.sort_by(|a, b| a.2.total_cmp(&b.2).then((a.0, a.1).cmp(&(b.0, b.1))));
    let mut used = vec![false; eigenvalues.len()];
    let mut labels = Vec::with_capacity(wanted.len());
    let mut unmatched = Vec::new();
    for (n1, n2, f) in wanted {
        let best = (0..eigenvalues.len())
            .filter(|&k| !used[k])
            .min_by(|&a, &b| (eigenvalues[a] - f).abs().total_cmp(&(eigenvalues[b] - f).abs()));
        let Some(k) = best else {
            unmatched.push((n1, n2));
            continue;
        };
        let residual = (eigenvalues[k] - f).abs();
        if residual > LABEL_TOLERANCE {
            unmatched.push((n1, n2));
        } else {
            used[k] = true;
        }
        labels.push(Label { n1, n2, lambda: eigenvalues[k], formula: f, residual });
    }
    Ok(SpectrumResult {
        params: cfg.params,
        eigenvalues,
        labels,
        unmatched,
        constrained: cfg.params.satisfies_constraint(),
        route_difference,
    })
}

/// Gram matrix of states built by two creator expressions.
#[derive(Clone, Debug)]
pub struct Gram {
    /// `(m, n)` for each row and column.
    pub states: Vec<(usize, usize)>,
    pub matrix: Mat<c64>,
}

impl Gram {
    pub fn entry(&self, a: (usize, usize), b: (usize, usize)) -> Option<c64> {
        let i = self.states.iter().position(|s| *s == a)?;
        let j = self.states.iter().position(|s| *s == b)?;
        Some(self.matrix[(i, j)])
    }

    /// Max entry distance from the identity matrix.
    pub fn identity_deviation(&self) -> f64 {
        let m = &self.matrix;
        let mut best = 0.0f64;
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let e = if i == j { c64::new(1.0, 0.0) } else { c64::new(0.0, 0.0) };
                best = best.max((m[(i, j)] - e).norm());
            }
        }
        best
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn gram(
    cfg: &FockConfig,
    creators: [Expr; 2],
    mmax: usize,
    norm: impl Fn(usize, usize, &[c64]) -> f64,
) -> Result<Gram, FockError> {
    let c1 = realize(&creators[0], cfg, Route::LadderDirect)?;
    let c2 = realize(&creators[1], cfg, Route::LadderDirect)?;
    let mut states = Vec::new();
    let mut vectors = Vec::new();
    for total in 0..=mmax {
        for m in (0..=total).rev() {
            let n = total - m;
            let mut v = vec![c64::new(0.0, 0.0); cfg.dim()];
            v[0] = c64::new(1.0, 0.0);
            for _ in 0..n {
                v = c2.apply(&v);
            }
            for _ in 0..m {
                v = c1.apply(&v);
            }
            let s = norm(m, n, &v);
            states.push((m, n));
            vectors.push(v.into_iter().map(|z| z / s).collect::<Vec<_>>());
        }
    }
    let k = states.len();
    let matrix = Mat::from_fn(k, k, |i, j| vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a.conj() * b).sum());
    Ok(Gram { states, matrix })
}

/// Overlaps of the hat states `(adj(ah1))^m (adj(ah2))^n |0>`, each scaled
/// to unit norm, for `m + n <= mmax`.
pub fn hat_state_gram(cfg: &FockConfig, mmax: usize) -> Result<Gram, FockError> {
    let h = builtin::hatbose();
    let c = [Expr::generator(&h, "adj(ah1)")?, Expr::generator(&h, "adj(ah2)")?];
    gram(cfg, c, mmax, |_, _, v| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
}

/// Overlaps of the tilde states `(m! n!)^(-1/2) (adj(at1))^m (adj(at2))^n |0>`.
pub fn tilde_state_gram(cfg: &FockConfig, mmax: usize) -> Result<Gram, FockError> {
    let t = builtin::tilde();
    let c = [Expr::generator(&t, "adj(at1)")?, Expr::generator(&t, "adj(at2)")?];
    gram(cfg, c, mmax, |m, n, _| (factorial(m) * factorial(n)).sqrt())
}
