use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::{Bindings, CoeffError, Coefficient};

use super::table::AlgebraTable;
use super::AlgebraError;

/// Sequence of generator indices. Ordered longest first, then by letters,
/// so the identity sorts last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// Positions `k` with `w[k] > w[k+1]`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.0.len().saturating_sub(1)).filter(|&k| self.0[k] > self.0[k + 1]).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        o.0.len().cmp(&self.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Finite sum of words with scalar coefficients over one algebra.
#[derive(Clone, Debug)]
pub struct Expr {
    alg: Arc<AlgebraTable>,
    terms: BTreeMap<Word, Coefficient>,
}

fn accumulate(map: &mut BTreeMap<Word, Coefficient>, w: Word, c: Coefficient) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(v) => {
            let s = &*v + &c;
            if s.is_zero() {
                map.remove(&w);
            } else {
                *v = s;
            }
        }
        None => {
            map.insert(w, c);
        }
    }
}

impl Expr {
    pub fn zero(alg: &Arc<AlgebraTable>) -> Self {
        Expr { alg: alg.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(alg: &Arc<AlgebraTable>, c: Coefficient) -> Self {
        Expr::from_terms(alg, [(Word::identity(), c)])
    }

    pub fn identity(alg: &Arc<AlgebraTable>) -> Self {
        Expr::scalar(alg, Coefficient::one())
    }

    pub fn letter(alg: &Arc<AlgebraTable>, g: u8) -> Self {
        Expr::from_terms(alg, [(Word(vec![g]), Coefficient::one())])
    }

    pub fn generator(alg: &Arc<AlgebraTable>, name: &str) -> Result<Self, AlgebraError> {
        Ok(Expr::letter(alg, alg.lookup(name)?))
    }

    /// A single word given by generator names, as written (not reordered).
    pub fn word(alg: &Arc<AlgebraTable>, names: &[&str]) -> Result<Self, AlgebraError> {
        let letters = names.iter().map(|n| alg.lookup(n)).collect::<Result<Vec<_>, _>>()?;
        Ok(Expr::from_terms(alg, [(Word(letters), Coefficient::one())]))
    }

    pub fn from_terms(alg: &Arc<AlgebraTable>, terms: impl IntoIterator<Item = (Word, Coefficient)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            accumulate(&mut map, w, c);
        }
        Expr { alg: alg.clone(), terms: map }
    }

    pub fn algebra(&self) -> &Arc<AlgebraTable> {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, w: &Word) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn identity_coefficient(&self) -> Coefficient {
        self.coefficient_of(&Word::identity())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every word is in canonical generator order.
    pub fn is_normalized(&self) -> bool {
        self.terms.keys().all(Word::is_sorted)
    }

    /// True for `c * identity`; returns `c`.
    pub fn as_scalar(&self) -> Option<Coefficient> {
        match self.terms.len() {
            0 => Some(Coefficient::zero()),
            1 => self.terms.get(&Word::identity()).cloned(),
            _ => None,
        }
    }

    fn check(&self, o: &Expr) -> Result<(), AlgebraError> {
        if self.alg == o.alg {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch { left: self.alg.name().into(), right: o.alg.name().into() })
        }
    }

    pub fn checked_add(&self, o: &Expr) -> Result<Expr, AlgebraError> {
        self.check(o)?;
        let mut map = self.terms.clone();
        for (w, c) in &o.terms {
            accumulate(&mut map, w.clone(), c.clone());
        }
        Ok(Expr { alg: self.alg.clone(), terms: map })
    }

    pub fn checked_sub(&self, o: &Expr) -> Result<Expr, AlgebraError> {
        self.checked_add(&o.scale(&Coefficient::int(-1)))
    }

    /// Concatenation product, without reordering.
    pub fn checked_mul(&self, o: &Expr) -> Result<Expr, AlgebraError> {
        self.check(o)?;
        let mut map = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                accumulate(&mut map, w1.concat(w2), c1 * c2);
            }
        }
        Ok(Expr { alg: self.alg.clone(), terms: map })
    }

    pub fn scale(&self, c: &Coefficient) -> Expr {
        if c.is_zero() {
            return Expr::zero(&self.alg);
        }
        Expr {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    /// Normal-ordered power.
    pub fn pow(&self, k: u32) -> Expr {
        let mut acc = Expr::identity(&self.alg);
        for _ in 0..k {
            acc = (&acc * self).normal_order();
        }
        acc
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coefficients(&self, mut f: impl FnMut(&Coefficient) -> Coefficient) -> Expr {
        Expr::from_terms(&self.alg, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map_coefficients<E>(
        &self,
        mut f: impl FnMut(&Coefficient) -> Result<Coefficient, E>,
    ) -> Result<Expr, E> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (w, c) in &self.terms {
            out.push((w.clone(), f(c)?));
        }
        Ok(Expr::from_terms(&self.alg, out))
    }

    pub fn subst_coefficients(
        &self,
        b: &BTreeMap<crate::coeff::Symbol, Coefficient>,
    ) -> Result<Expr, CoeffError> {
        self.try_map_coefficients(|c| c.subst(b))
    }

    pub fn xi_reduced(&self) -> Expr {
        self.map_coefficients(Coefficient::xi_reduced)
    }

    /// Numeric values of the coefficients.
    pub fn eval_coefficients(&self, v: &Bindings) -> Result<Vec<(Word, num_complex::Complex64)>, CoeffError> {
        self.terms.iter().map(|(w, c)| Ok((w.clone(), c.eval(v)?))).collect()
    }

    /// Sorts every word into canonical order using central commutators.
    pub fn normal_order(&self) -> Expr {
        self.normal_order_with(|d| d[0])
    }

    /// As [`Expr::normal_order`], with `pick` choosing which of the current
    /// descents of a word to swap next. The result does not depend on it.
    pub fn normal_order_with(&self, mut pick: impl FnMut(&[usize]) -> usize) -> Expr {
        if self.is_normalized() {
            return self.clone();
        }
        let alg = &self.alg;
        let mut pending = self.terms.clone();
        let mut done: BTreeMap<Word, Coefficient> = BTreeMap::new();
        while let Some((w, c)) = pending.pop_first() {
            let mut w = w.0;
            loop {
                let d = Word(w.clone()).descents();
                if d.is_empty() {
                    break;
                }
                let k = pick(&d);
                debug_assert!(w[k] > w[k + 1]);
                // g_j g_i = g_i g_j + [g_j, g_i]
                let z = alg.lowered(w[k], w[k + 1]);
                if !z.is_zero() {
                    let mut shorter = Vec::with_capacity(w.len() - 2);
                    shorter.extend_from_slice(&w[..k]);
                    shorter.extend_from_slice(&w[k + 2..]);
                    accumulate(&mut pending, Word(shorter), &c * z);
                }
                w.swap(k, k + 1);
            }
            accumulate(&mut done, Word(w), c);
        }
        Expr { alg: alg.clone(), terms: done }
    }

    /// Hermitian adjoint, normal-ordered.
    pub fn adjoint(&self) -> Expr {
        let alg = &self.alg;
        Expr::from_terms(
            alg,
            self.terms.iter().map(|(w, c)| {
                (Word(w.0.iter().rev().map(|g| alg.adjoint_of(*g)).collect()), c.conj())
            }),
        )
        .normal_order()
    }

    /// How the expression prints and parses back.
    pub fn render(&self) -> String {
        super::render::expr(self)
    }
}

/// `normal_order(ab - ba)`.
pub fn commutator(a: &Expr, b: &Expr) -> Result<Expr, AlgebraError> {
    a.check(b)?;
    let ab = a.checked_mul(b)?;
    let ba = b.checked_mul(a)?;
    Ok(ab.checked_sub(&ba)?.normal_order())
}

/// Operator equality after normal ordering and reduction of even powers
/// of `xi`.
pub fn expr_equal(a: &Expr, b: &Expr) -> Result<bool, AlgebraError> {
    Ok(difference(a, b)?.is_zero())
}

/// The normal-ordered, xi-reduced `a - b`.
pub fn difference(a: &Expr, b: &Expr) -> Result<Expr, AlgebraError> {
    Ok(a.checked_sub(b)?.normal_order().xi_reduced())
}

impl PartialEq for Expr {
    fn eq(&self, o: &Self) -> bool {
        self.alg == o.alg && self.terms == o.terms
    }
}

impl Eq for Expr {}

macro_rules! expr_op {
    ($tr:ident, $m:ident, $f:ident) => {
        /// Panics when the operands live in different algebras; see the
        /// `checked_` methods for the fallible form.
        impl $tr for &Expr {
            type Output = Expr;
            fn $m(self, o: &Expr) -> Expr {
                self.$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for Expr {
            type Output = Expr;
            fn $m(self, o: Expr) -> Expr {
                (&self).$f(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<&Expr> for Expr {
            type Output = Expr;
            fn $m(self, o: &Expr) -> Expr {
                (&self).$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}
expr_op!(Add, add, checked_add);
expr_op!(Sub, sub, checked_sub);
expr_op!(Mul, mul, checked_mul);

impl Mul<&Expr> for &Coefficient {
    type Output = Expr;
    fn mul(self, e: &Expr) -> Expr {
        e.scale(self)
    }
}

impl Mul<Expr> for Coefficient {
    type Output = Expr;
    fn mul(self, e: Expr) -> Expr {
        e.scale(&self)
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(&Coefficient::int(-1))
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale(&Coefficient::int(-1))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
