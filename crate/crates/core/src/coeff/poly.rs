//! Sparse sums of monomials over the Gaussian rationals.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::monomial::{Base, Exponent, Monomial, Symbol};

/// Terms sorted by monomial, largest first; no zero coefficients and no
/// repeated monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, GaussianRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Poly::constant(GaussianRational::one())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary list of terms: merges like monomials and
    /// drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut acc: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Poly { terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn single(&self) -> Option<(&Monomial, &GaussianRational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn lead(&self) -> Option<&(Monomial, GaussianRational)> {
        self.terms.first()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        // both sorted descending: merge
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Multiplies every term by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let simple = !m.factors().iter().any(|(b, _)| matches!(b, Base::Prime(_)))
            && !self
                .terms
                .iter()
                .any(|(t, _)| t.factors().iter().any(|(b, _)| matches!(b, Base::Prime(_))));
        let prods = self.terms.iter().map(|(t, x)| {
            let (f, tm) = t.mul(m);
            let mut v = x * c;
            if !f.is_one() {
                v = v.scale(&f);
            }
            (tm, v)
        });
        if simple {
            // multiplying by a monomial preserves the order in a group order
            Poly { terms: prods.collect() }
        } else {
            Poly::from_terms(prods)
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some((m, c)) = o.single() {
            return self.mul_term(m, c);
        }
        if let Some((m, c)) = self.single() {
            return o.mul_term(m, c);
        }
        let mut acc: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let (f, m) = ma.mul(mb);
                let mut v = ca * cb;
                if !f.is_one() {
                    v = v.scale(&f);
                }
                match acc.get_mut(&m) {
                    Some(x) => *x += &v,
                    None => {
                        acc.insert(m, v);
                    }
                }
            }
        }
        Poly { terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn conj(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut v: Vec<Symbol> =
            self.terms.iter().flat_map(|(m, _)| m.symbols().map(|(s, _)| s.clone())).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Largest monomial dividing every term: per-base minimum exponent,
    /// absent bases counted as 0. Prime parts are included so the shift
    /// clears them as well.
    pub fn content(&self) -> Monomial {
        let mut bases: Vec<Base> =
            self.terms.iter().flat_map(|(m, _)| m.factors().iter().map(|(b, _)| b.clone())).collect();
        bases.sort();
        bases.dedup();
        let mut factors = Vec::new();
        for b in bases {
            let mut lo: Option<Exponent> = None;
            for (m, _) in &self.terms {
                let e = m
                    .factors()
                    .iter()
                    .find(|(x, _)| *x == b)
                    .map(|(_, e)| *e)
                    .unwrap_or_else(Exponent::zero);
                lo = Some(lo.map_or(e, |l| l.min(e)));
            }
            if let Some(l) = lo {
                if !l.is_zero() {
                    factors.push((b, l));
                }
            }
        }
        let (_, m) = Monomial::from_factors(factors);
        // primes have exponents in (0,1), so the min never overflows the fold
        m
    }

    /// Exact quotient `self / q` when it exists as a finite sum of
    /// monomials; `None` otherwise or when the search gives up.
    pub fn div_exact(&self, q: &Poly) -> Option<Poly> {
        if q.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some((m, c)) = q.single() {
            let (f, inv) = m.inverse();
            let ci = c.inv()?.scale(&f);
            return Some(self.mul_term(&inv, &ci));
        }
        let syms: Vec<Symbol> = {
            let mut s = self.symbols();
            s.extend(q.symbols());
            s.sort();
            s.dedup();
            s
        };
        // exponent box for quotient terms: max and min degrees are additive
        let bounds: Vec<(Symbol, Exponent, Exponent)> = syms
            .iter()
            .map(|s| {
                let (plo, phi) = Monomial::symbol_range(self.terms.iter().map(|t| &t.0), s);
                let (qlo, qhi) = Monomial::symbol_range(q.terms.iter().map(|t| &t.0), s);
                (s.clone(), plo - qlo, phi - qhi)
            })
            .collect();
        let (lq_m, lq_c) = q.lead().expect("nonzero");
        let (f, lq_inv) = lq_m.inverse();
        let lq_cinv = lq_c.inv()?.scale(&f);
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, GaussianRational)> = Vec::new();
        let cap = 4 * (self.len() + 1) * (q.len() + 1) + 64;
        for _ in 0..cap {
            let (rm, rc) = match rem.lead() {
                None => return Some(Poly::from_terms(quot)),
                Some(t) => t.clone(),
            };
            let (g, tm) = rm.mul(&lq_inv);
            let tc = (&rc * &lq_cinv).scale(&g);
            for (s, lo, hi) in &bounds {
                let e = tm.exponent(s);
                if e < *lo || e > *hi {
                    return None;
                }
            }
            rem = rem.sub(&q.mul_term(&tm, &tc));
            quot.push((tm, tc));
        }
        None
    }

    /// Splits by the exponent of `s`: `self = sum_k s^k * part_k`.
    pub fn collect(&self, s: &Symbol) -> BTreeMap<Exponent, Poly> {
        let mut groups: BTreeMap<Exponent, Vec<(Monomial, GaussianRational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry(m.exponent(s)).or_default().push((m.without(s), c.clone()));
        }
        groups.into_iter().map(|(k, v)| (k, Poly::from_terms(v))).collect()
    }

    pub fn scale_rational(&self, r: &BigRational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.scale(r))).collect() }
    }
}
