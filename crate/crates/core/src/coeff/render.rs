use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianRational;
use super::monomial::{exponent_text, Base, Exponent, Monomial};
use super::poly::Poly;
use super::Coefficient;

fn factor_text(b: &Base, e: Exponent) -> String {
    let name = match b {
        Base::Prime(p) => p.to_string(),
        Base::Sym(s) => s.name().to_string(),
    };
    if e.is_one() {
        name
    } else {
        format!("{name}^{}", exponent_text(e))
    }
}

fn product(items: &[String]) -> String {
    if items.len() == 1 {
        items[0].clone()
    } else {
        format!("({})", items.join("*"))
    }
}

/// Renders one term. Returns whether it carries a leading minus, and the
/// text of its absolute value.
pub(crate) fn term(m: &Monomial, c: &GaussianRational) -> (bool, String) {
    let negative = c.is_negative_lead();
    let c = if negative { -c } else { c.clone() };
    let (num, dnum) = if c.is_real() {
        (c.re.numer().to_string(), c.re.denom().clone())
    } else if c.re.is_zero() {
        let n = c.im.numer();
        let t = if n.is_one() { "i".to_string() } else { format!("{n}*i") };
        (t, c.im.denom().clone())
    } else {
        (c.to_string(), num_bigint::BigInt::one())
    };
    let mut den = Vec::new();
    if !dnum.is_one() {
        den.push(dnum.to_string());
    }
    let mut pos = Vec::new();
    for (b, e) in m.factors() {
        if e.is_negative() {
            den.push(factor_text(b, -*e));
        } else {
            pos.push(factor_text(b, *e));
        }
    }
    let mut parts = Vec::new();
    if den.is_empty() {
        if num != "1" || pos.is_empty() {
            parts.push(num);
        }
    } else {
        parts.push(format!("({num}/{})", product(&den)));
    }
    parts.extend(pos);
    (negative, parts.join("*"))
}

pub(crate) fn poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let (neg, t) = term(m, c);
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&t);
    }
    out
}

pub(crate) fn coefficient(c: &Coefficient) -> String {
    if c.denom().is_one() {
        poly(c.numer())
    } else {
        format!("({})/({})", poly(c.numer()), poly(c.denom()))
    }
}
