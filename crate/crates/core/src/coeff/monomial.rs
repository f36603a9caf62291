//! Symbols, radical bases and monomials with rational exponents.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CoeffError;

/// Exponent of a base inside a monomial.
pub type Exponent = Ratio<i64>;

/// Symbols that get a fixed position in the canonical order. Everything else
/// sorts after them by name.
const RANKED: &[&str] = &[
    "xi", "theta", "eta", "hbar", "mu", "omega", "gamma", "c1", "c2", "c2p", "alpha1", "alpha2",
    "K", "q", "c", "B3",
];

/// A named real, positive parameter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    rank: u16,
    name: Arc<str>,
}

impl Symbol {
    pub fn new(name: &str) -> Self {
        let rank = RANKED
            .iter()
            .position(|s| *s == name)
            .map(|p| p as u16)
            .unwrap_or(u16::MAX);
        Symbol { rank, name: Arc::from(name) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

/// Base of a monomial factor: a positive prime carrying a fractional
/// exponent in (0, 1), or a symbol carrying any nonzero rational exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Prime(u64),
    Sym(Symbol),
}

/// Product of bases raised to rational powers. Factors are sorted by base
/// and never carry a zero exponent. Integer parts of prime exponents are
/// folded into the numeric coefficient by the constructors, so the
/// representation of a radical like `2^(1/2)` is unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Base, Exponent)>);

fn rat_pow(base: u64, k: i64) -> BigRational {
    let p = BigInt::from(base).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn symbol(s: Symbol, e: Exponent) -> Self {
        if e.is_zero() {
            Monomial::one()
        } else {
            Monomial(vec![(Base::Sym(s), e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Base, Exponent)] {
        &self.0
    }

    pub fn exponent(&self, s: &Symbol) -> Exponent {
        self.0
            .iter()
            .find_map(|(b, e)| match b {
                Base::Sym(t) if t == s => Some(*e),
                _ => None,
            })
            .unwrap_or_else(Exponent::zero)
    }

    /// Copy of `self` with the factor for `s` dropped.
    pub fn without(&self, s: &Symbol) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter(|(b, _)| !matches!(b, Base::Sym(t) if t == s))
                .cloned()
                .collect(),
        )
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&Symbol, Exponent)> {
        self.0.iter().filter_map(|(b, e)| match b {
            Base::Sym(s) => Some((s, *e)),
            Base::Prime(_) => None,
        })
    }

    /// Builds a monomial from raw factors, folding prime exponents.
    /// Returns the rational factor split off along the way.
    pub fn from_factors(
        factors: impl IntoIterator<Item = (Base, Exponent)>,
    ) -> (BigRational, Monomial) {
        let mut v: Vec<(Base, Exponent)> = factors.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Base, Exponent)> = Vec::with_capacity(v.len());
        for (b, e) in v {
            match merged.last_mut() {
                Some((lb, le)) if *lb == b => *le += e,
                _ => merged.push((b, e)),
            }
        }
        let mut scale = BigRational::one();
        let mut out = Vec::with_capacity(merged.len());
        for (b, e) in merged {
            match b {
                Base::Prime(p) => {
                    let whole = e.floor();
                    let frac = e - whole;
                    let k = *whole.numer() / *whole.denom();
                    if k != 0 {
                        scale *= rat_pow(p, k);
                    }
                    if !frac.is_zero() {
                        out.push((Base::Prime(p), frac));
                    }
                }
                Base::Sym(_) => {
                    if !e.is_zero() {
                        out.push((b, e));
                    }
                }
            }
        }
        (scale, Monomial(out))
    }

    pub fn mul(&self, other: &Monomial) -> (BigRational, Monomial) {
        if other.is_one() {
            return (BigRational::one(), self.clone());
        }
        if self.is_one() {
            return (BigRational::one(), other.clone());
        }
        let has_primes = self.0.iter().chain(other.0.iter()).any(|(b, _)| matches!(b, Base::Prime(_)));
        if !has_primes {
            // fast path: plain merge
            let mut out = Vec::with_capacity(self.0.len() + other.0.len());
            let (mut i, mut j) = (0, 0);
            while i < self.0.len() && j < other.0.len() {
                match self.0[i].0.cmp(&other.0[j].0) {
                    Ordering::Less => {
                        out.push(self.0[i].clone());
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push(other.0[j].clone());
                        j += 1;
                    }
                    Ordering::Equal => {
                        let e = self.0[i].1 + other.0[j].1;
                        if !e.is_zero() {
                            out.push((self.0[i].0.clone(), e));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            out.extend_from_slice(&self.0[i..]);
            out.extend_from_slice(&other.0[j..]);
            return (BigRational::one(), Monomial(out));
        }
        Monomial::from_factors(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn pow(&self, q: Exponent) -> (BigRational, Monomial) {
        Monomial::from_factors(self.0.iter().map(|(b, e)| (b.clone(), *e * q)))
    }

    pub fn inverse(&self) -> (BigRational, Monomial) {
        self.pow(Exponent::from_integer(-1))
    }

    /// `r^q` for a positive rational `r`, written as a rational times a
    /// radical monomial over primes.
    pub fn rational_power(r: &BigRational, q: Exponent) -> Result<(BigRational, Monomial), CoeffError> {
        if !r.is_positive() {
            return Err(CoeffError::NonPositiveRadicand(r.to_string()));
        }
        if q.is_integer() {
            let k = q.to_integer();
            let p = num_traits::pow(r.clone(), k.unsigned_abs() as usize);
            let v = if k >= 0 { p } else { p.recip() };
            return Ok((v, Monomial::one()));
        }
        let mut factors = Vec::new();
        for (big, sign) in [(r.numer(), 1i64), (r.denom(), -1i64)] {
            let n = big
                .to_u64()
                .ok_or_else(|| CoeffError::NonPositiveRadicand(format!("{r} (too large to factor)")))?;
            for (p, k) in factorize(n) {
                factors.push((Base::Prime(p), q * Exponent::from_integer(sign * k as i64)));
            }
        }
        Ok(Monomial::from_factors(factors))
    }

    /// Per-symbol (min, max) exponents are taken over a set of monomials
    /// with absent symbols counted as 0.
    pub(crate) fn symbol_range<'a>(
        monos: impl Iterator<Item = &'a Monomial> + Clone,
        s: &Symbol,
    ) -> (Exponent, Exponent) {
        let mut lo = Exponent::zero();
        let mut hi = Exponent::zero();
        let mut first = true;
        for m in monos {
            let e = m.exponent(s);
            if first {
                lo = e;
                hi = e;
                first = false;
            } else {
                lo = lo.min(e);
                hi = hi.max(e);
            }
        }
        (lo, hi)
    }
}

/// Lexicographic order on exponent vectors, bases in canonical order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let zero = Exponent::zero();
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, e)), None) => return e.cmp(&zero),
                (None, Some((_, e))) => return zero.cmp(e),
                (Some((b1, e1)), Some((b2, e2))) => match b1.cmp(b2) {
                    Ordering::Less => return e1.cmp(&zero),
                    Ordering::Greater => return zero.cmp(e2),
                    Ordering::Equal => {
                        if e1 != e2 {
                            return e1.cmp(e2);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Trial-division factorization, fine for the small integers that show up
/// as radicands here.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn exponent_text(e: Exponent) -> String {
    if e.is_integer() {
        e.to_integer().to_string()
    } else {
        format!("({}/{})", e.numer(), e.denom())
    }
}
