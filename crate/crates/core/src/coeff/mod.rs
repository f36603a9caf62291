//! Exact scalar coefficients.
//!
//! A [`Coefficient`] is a single fraction `num / den` of sparse sums over
//! monomials in real positive symbols with rational exponents, with Gaussian
//! rational numeric coefficients. Radicals of integers are carried as prime
//! bases with exponents in (0, 1). Zero testing is exact: a fraction is zero
//! iff its numerator is the empty sum.

mod gaussian;
mod monomial;
mod poly;
mod render;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use gaussian::GaussianRational;
pub use monomial::{Base, Exponent, Monomial, Symbol};
pub use poly::Poly;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CoeffError {
    #[error("odd power of xi remains after reduction: {reduced}")]
    OddXiPower { reduced: Coefficient },
    #[error("binding for `{symbol}` is a sum and meets the fractional exponent {exponent}")]
    FractionalPowerOfSum { symbol: String, exponent: String },
    #[error("fractional power of a non-monomial coefficient")]
    FractionalPowerOfNonMonomial,
    #[error("cannot take a fractional power of the non-positive number {0}")]
    NonPositiveRadicand(String),
    #[error("unbound symbol `{0}`")]
    UnboundSymbol(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative or complex value for `{0}` raised to a fractional power")]
    NegativeFractionalPower(String),
}

/// Symbol names used throughout the crate.
pub mod sym {
    pub const XI: &str = "xi";
    pub const THETA: &str = "theta";
    pub const ETA: &str = "eta";
    pub const HBAR: &str = "hbar";
    pub const MU: &str = "mu";
    pub const OMEGA: &str = "omega";
    pub const GAMMA: &str = "gamma";
    pub const C1: &str = "c1";
    pub const C2: &str = "c2";
    pub const C2P: &str = "c2p";
    pub const ALPHA1: &str = "alpha1";
    pub const ALPHA2: &str = "alpha2";
    pub const K: &str = "K";
}

/// Exact scalar `num / den`.
#[derive(Clone, Debug)]
pub struct Coefficient {
    num: Poly,
    den: Poly,
}

/// Numeric values for symbols, used by [`Coefficient::eval`].
pub type Bindings = HashMap<Symbol, Complex64>;

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Coefficient { num: Poly::one(), den: Poly::one() }
    }

    pub fn i() -> Self {
        Coefficient::from(GaussianRational::i())
    }

    pub fn int(n: i64) -> Self {
        Coefficient::from(GaussianRational::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Coefficient::from(GaussianRational::frac(n, d))
    }

    pub fn symbol(name: &str) -> Self {
        Coefficient::monomial(Monomial::symbol(Symbol::new(name), Exponent::one()), GaussianRational::one())
    }

    /// `name^(n/d)`.
    pub fn symbol_pow(name: &str, n: i64, d: i64) -> Self {
        Coefficient::monomial(Monomial::symbol(Symbol::new(name), Exponent::new(n, d)), GaussianRational::one())
    }

    pub fn monomial(m: Monomial, c: GaussianRational) -> Self {
        Coefficient { num: Poly::term(m, c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        Coefficient { num: p, den: Poly::one() }
    }

    /// Builds and canonicalizes `num / den`.
    pub fn ratio(num: Poly, den: Poly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Coefficient::normalized(num, den))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is `c * m` for a single monomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &GaussianRational)> {
        if self.den.is_one() {
            self.num.single()
        } else {
            None
        }
    }

    pub fn as_number(&self) -> Option<&GaussianRational> {
        match self.as_monomial() {
            Some((m, c)) if m.is_one() => Some(c),
            _ => None,
        }
    }

    fn normalized(num: Poly, den: Poly) -> Coefficient {
        if num.is_zero() {
            return Coefficient::zero();
        }
        if den.is_one() {
            return Coefficient { num, den };
        }
        if let Some((m, c)) = den.single() {
            let (f, inv) = m.inverse();
            let ci = c.inv().expect("nonzero denominator").scale(&f);
            return Coefficient { num: num.mul_term(&inv, &ci), den: Poly::one() };
        }
        // shift so the denominator has trivial monomial content, then make
        // its leading coefficient 1
        let content = den.content();
        let (num, den) = if content.is_one() {
            (num, den)
        } else {
            let (f, inv) = content.inverse();
            let s = GaussianRational::real(f);
            (num.mul_term(&inv, &s), den.mul_term(&inv, &s))
        };
        let lc = den.lead().expect("nonzero").1.inv().expect("nonzero");
        let num = num.scale(&lc);
        let den = den.scale(&lc);
        if let Some(q) = num.div_exact(&den) {
            return Coefficient { num: q, den: Poly::one() };
        }
        if num.len() > 1 {
            if let Some(q) = den.div_exact(&num) {
                // num / (num * q) = 1 / q
                return Coefficient::normalized(Poly::one(), q);
            }
        }
        Coefficient { num, den }
    }

    fn sum(&self, o: &Coefficient) -> Coefficient {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Coefficient::normalized(self.num.add(&o.num), self.den.clone());
        }
        if let Some(s) = o.den.div_exact(&self.den) {
            return Coefficient::normalized(self.num.mul(&s).add(&o.num), o.den.clone());
        }
        if let Some(s) = self.den.div_exact(&o.den) {
            return Coefficient::normalized(self.num.add(&o.num.mul(&s)), self.den.clone());
        }
        Coefficient::normalized(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    fn negated(&self) -> Coefficient {
        Coefficient { num: self.num.neg(), den: self.den.clone() }
    }

    fn difference(&self, o: &Coefficient) -> Coefficient {
        self.sum(&o.negated())
    }

    fn product(&self, o: &Coefficient) -> Coefficient {
        if self.is_zero() || o.is_zero() {
            return Coefficient::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Coefficient { num: self.num.mul(&o.num), den: Poly::one() };
        }
        // cross-cancel before multiplying out
        let (mut n1, mut d2) = (self.num.clone(), o.den.clone());
        if !d2.is_one() {
            if let Some(q) = n1.div_exact(&d2) {
                n1 = q;
                d2 = Poly::one();
            }
        }
        let (mut n2, mut d1) = (o.num.clone(), self.den.clone());
        if !d1.is_one() {
            if let Some(q) = n2.div_exact(&d1) {
                n2 = q;
                d1 = Poly::one();
            }
        }
        Coefficient::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Coefficient, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Coefficient::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Coefficient) -> Result<Coefficient, CoeffError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow_int(&self, k: i64) -> Result<Coefficient, CoeffError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        if base.den.is_one() {
            return Ok(Coefficient { num: base.num.pow(k), den: Poly::one() });
        }
        Ok(Coefficient::normalized(base.num.pow(k), base.den.pow(k)))
    }

    /// Rational power. Integer exponents work on anything; fractional ones
    /// need a single monomial with a positive real numeric factor (or a
    /// factor `i^k` that stays exact), since all symbols are positive reals.
    pub fn pow(&self, q: Exponent) -> Result<Coefficient, CoeffError> {
        if q.is_integer() {
            return self.pow_int(q.to_integer());
        }
        if self.is_zero() {
            return if q > Exponent::zero() { Ok(Coefficient::zero()) } else { Err(CoeffError::DivisionByZero) };
        }
        let (m, c) = self.as_monomial().ok_or(CoeffError::FractionalPowerOfNonMonomial)?;
        if !c.is_real() || !c.re.is_positive() {
            return Err(CoeffError::NonPositiveRadicand(c.to_string()));
        }
        let (f1, rad) = Monomial::rational_power(&c.re, q)?;
        let (f2, mp) = m.pow(q);
        let (f3, prod) = rad.mul(&mp);
        Ok(Coefficient::monomial(prod, GaussianRational::real(f1 * f2 * f3)))
    }

    pub fn sqrt(&self) -> Result<Coefficient, CoeffError> {
        self.pow(Exponent::new(1, 2))
    }

    /// Complex conjugate (symbols are real).
    pub fn conj(&self) -> Coefficient {
        Coefficient { num: self.num.conj(), den: self.den.conj() }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut v = self.num.symbols();
        v.extend(self.den.symbols());
        v.sort();
        v.dedup();
        v
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.symbols().contains(s)
    }

    /// Collects by powers of `s`: `self = sum_k s^k * part_k`. Fails when
    /// `s` appears in the denominator.
    pub fn collect(&self, s: &Symbol) -> Option<BTreeMap<Exponent, Coefficient>> {
        if self.den.symbols().contains(s) {
            return None;
        }
        Some(
            self.num
                .collect(s)
                .into_iter()
                .map(|(k, p)| (k, Coefficient::normalized(p, self.den.clone())))
                .collect(),
        )
    }

    /// Replaces `xi^2` by `1/(1 + theta*eta/(4*hbar^2))` everywhere.
    /// Odd or fractional powers of `xi` are left in place and reported
    /// through [`CoeffError::OddXiPower`], which carries the partially
    /// reduced value.
    pub fn xi_reduce(&self) -> Result<Coefficient, CoeffError> {
        let xi = Symbol::new(sym::XI);
        let (n, nk, odd_n) = xi_reduce_poly(&self.num, &xi);
        let (d, dk, odd_d) = xi_reduce_poly(&self.den, &xi);
        // self = (n * D^-nk) / (d * D^-dk) = n * D^(dk-nk) / d
        let shift = dk - nk;
        let dpoly = xi_defining_poly();
        let (n, d) = if shift >= 0 {
            (n.mul(&dpoly.pow(shift as u32)), d)
        } else {
            (n, d.mul(&dpoly.pow((-shift) as u32)))
        };
        let reduced = Coefficient::normalized(n, d);
        if odd_n || odd_d {
            Err(CoeffError::OddXiPower { reduced })
        } else {
            Ok(reduced)
        }
    }

    /// [`Coefficient::xi_reduce`] that keeps the partial result when odd
    /// powers remain.
    pub fn xi_reduced(&self) -> Coefficient {
        match self.xi_reduce() {
            Ok(c) => c,
            Err(CoeffError::OddXiPower { reduced }) => reduced,
            Err(_) => unreachable!("xi reduction only reports odd powers"),
        }
    }

    /// Substitutes symbols by coefficients. A binding that is a sum may only
    /// meet integer exponents; monomial bindings distribute over rational
    /// powers, as all symbols are positive.
    pub fn subst(&self, bindings: &BTreeMap<Symbol, Coefficient>) -> Result<Coefficient, CoeffError> {
        if bindings.is_empty() || !self.symbols().iter().any(|s| bindings.contains_key(s)) {
            return Ok(self.clone());
        }
        let n = subst_poly(&self.num, bindings)?;
        let d = subst_poly(&self.den, bindings)?;
        n.div(&d)
    }

    /// Floating-point value under numeric bindings.
    pub fn eval(&self, values: &Bindings) -> Result<Complex64, CoeffError> {
        let n = eval_poly(&self.num, values)?;
        let d = eval_poly(&self.den, values)?;
        if d == Complex64::new(0.0, 0.0) {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(n / d)
    }

    /// Canonical text rendering.
    pub fn render(&self) -> String {
        render::coefficient(self)
    }

    /// For a single-term coefficient: whether it prints with a leading
    /// minus, and the text of its absolute value.
    pub fn term_text(&self) -> Option<(bool, String)> {
        self.as_monomial().map(|(m, c)| render::term(m, c))
    }
}

fn xi_defining_poly() -> Poly {
    // 1 + theta*eta/(4 hbar^2)
    let (_, m) = Monomial::from_factors([
        (Base::Sym(Symbol::new(sym::THETA)), Exponent::one()),
        (Base::Sym(Symbol::new(sym::ETA)), Exponent::one()),
        (Base::Sym(Symbol::new(sym::HBAR)), Exponent::from_integer(-2)),
    ]);
    Poly::one().add(&Poly::term(m, GaussianRational::frac(1, 4)))
}

/// Returns `(n, k, odd)` with `p(xi^2 -> 1/D) = n * D^-k`.
fn xi_reduce_poly(p: &Poly, xi: &Symbol) -> (Poly, i64, bool) {
    let mut odd = false;
    let mut parts: Vec<(i64, Monomial, GaussianRational)> = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exponent(xi);
        if e.is_zero() {
            parts.push((0, m.clone(), c.clone()));
            continue;
        }
        if !e.is_integer() {
            odd = true;
            parts.push((0, m.clone(), c.clone()));
            continue;
        }
        let e = e.to_integer();
        let k = e.div_euclid(2);
        let r = e.rem_euclid(2);
        if r != 0 {
            odd = true;
        }
        let rest = m.without(xi);
        let (_, rest) = rest.mul(&Monomial::symbol(xi.clone(), Exponent::from_integer(r)));
        parts.push((k, rest, c.clone()));
    }
    let kmax = parts.iter().map(|t| t.0).max().unwrap_or(0);
    let d = xi_defining_poly();
    let mut acc = Poly::zero();
    let mut cache: HashMap<i64, Poly> = HashMap::new();
    for (k, m, c) in parts {
        let j = kmax - k;
        let dp = cache.entry(j).or_insert_with(|| d.pow(j as u32)).clone();
        acc = acc.add(&dp.mul_term(&m, &c));
    }
    (acc, kmax, odd)
}

fn subst_poly(p: &Poly, b: &BTreeMap<Symbol, Coefficient>) -> Result<Coefficient, CoeffError> {
    let mut acc = Coefficient::zero();
    for (m, c) in p.terms() {
        let mut kept = Vec::new();
        let mut factor = Coefficient::from(c.clone());
        for (base, e) in m.factors() {
            match base {
                Base::Sym(s) if b.contains_key(s) => {
                    let v = &b[s];
                    let powered = if e.is_integer() {
                        v.pow_int(e.to_integer())?
                    } else if v.is_zero() || v.as_monomial().is_some() {
                        v.pow(*e)?
                    } else {
                        return Err(CoeffError::FractionalPowerOfSum {
                            symbol: s.name().to_string(),
                            exponent: e.to_string(),
                        });
                    };
                    factor = &factor * &powered;
                }
                _ => kept.push((base.clone(), *e)),
            }
        }
        let (f, rest) = Monomial::from_factors(kept);
        let rest = Coefficient::monomial(rest, GaussianRational::real(f));
        acc = &acc + &(&factor * &rest);
    }
    Ok(acc)
}

fn eval_poly(p: &Poly, values: &Bindings) -> Result<Complex64, CoeffError> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (m, c) in p.terms() {
        let mut v = c.to_c64();
        for (base, e) in m.factors() {
            let ef = e.numer().to_f64().unwrap_or(f64::NAN) / *e.denom() as f64;
            match base {
                Base::Prime(q) => v *= (*q as f64).powf(ef),
                Base::Sym(s) => {
                    let x = *values.get(s).ok_or_else(|| CoeffError::UnboundSymbol(s.name().to_string()))?;
                    if e.is_integer() {
                        let k = e.to_integer();
                        if x == Complex64::new(0.0, 0.0) && k < 0 {
                            return Err(CoeffError::DivisionByZero);
                        }
                        v *= x.powi(k as i32);
                    } else {
                        if x.im != 0.0 || x.re < 0.0 {
                            return Err(CoeffError::NegativeFractionalPower(s.name().to_string()));
                        }
                        if x.re == 0.0 && ef < 0.0 {
                            return Err(CoeffError::DivisionByZero);
                        }
                        v *= x.re.powf(ef);
                    }
                }
            }
        }
        acc += v;
    }
    Ok(acc)
}

/// Value equality, decided by exact zero testing of the difference.
impl PartialEq for Coefficient {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for Coefficient {}

impl From<GaussianRational> for Coefficient {
    fn from(c: GaussianRational) -> Self {
        Coefficient::monomial(Monomial::one(), c)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::int(n)
    }
}

impl From<BigRational> for Coefficient {
    fn from(r: BigRational) -> Self {
        Coefficient::from(GaussianRational::real(r))
    }
}

impl From<BigInt> for Coefficient {
    fn from(n: BigInt) -> Self {
        Coefficient::from(BigRational::from_integer(n))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr for &Coefficient {
            type Output = Coefficient;
            fn $m(self, o: &Coefficient) -> Coefficient {
                Coefficient::$f(self, o)
            }
        }
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, o: Coefficient) -> Coefficient {
                Coefficient::$f(&self, &o)
            }
        }
        impl $tr<&Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $m(self, o: &Coefficient) -> Coefficient {
                Coefficient::$f(&self, o)
            }
        }
        impl $tr<Coefficient> for &Coefficient {
            type Output = Coefficient;
            fn $m(self, o: Coefficient) -> Coefficient {
                Coefficient::$f(self, &o)
            }
        }
    };
}
binop!(Add, add, sum);
binop!(Sub, sub, difference);
binop!(Mul, mul, product);

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        self.negated()
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        self.negated()
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Bindings map from `(name, value)` pairs.
pub fn bindings<'a>(pairs: impl IntoIterator<Item = (&'a str, Coefficient)>) -> BTreeMap<Symbol, Coefficient> {
    pairs.into_iter().map(|(k, v)| (Symbol::new(k), v)).collect()
}

/// Numeric bindings from `(name, real value)` pairs.
pub fn values<'a>(pairs: impl IntoIterator<Item = (&'a str, f64)>) -> Bindings {
    pairs.into_iter().map(|(k, v)| (Symbol::new(k), Complex64::new(v, 0.0))).collect()
}

#[cfg(test)]
mod tests;
