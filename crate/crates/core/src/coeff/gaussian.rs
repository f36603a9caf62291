use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact complex rational `re + i*im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if n.is_zero() {
            return None;
        }
        Some(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        use num_traits::ToPrimitive;
        num_complex::Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Sign used when a term is printed with a leading `-`: negative real
    /// part, or zero real part and negative imaginary part.
    pub(crate) fn is_negative_lead(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.re.is_negative() && self.im.is_zero()
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

fn rat_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => f.write_str(&rat_text(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    f.write_str("i")
                } else if (-&self.im).is_one() {
                    f.write_str("-i")
                } else {
                    write!(f, "{}*i", rat_text(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                let m = self.im.abs();
                if m.is_one() {
                    write!(f, "({}{}i)", rat_text(&self.re), sign)
                } else {
                    write!(f, "({}{}{}*i)", rat_text(&self.re), sign, rat_text(&m))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::int(-1));
    }

    #[test]
    fn inverse_roundtrip() {
        let z = GaussianRational::new(BigRational::new(3.into(), 4.into()), BigRational::from_integer((-2).into()));
        assert!((&z * &z.inv().unwrap()).is_one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::frac(3, 4).to_string(), "3/4");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((&GaussianRational::i() * &GaussianRational::int(2)).to_string(), "2*i");
        let z = &GaussianRational::int(1) - &GaussianRational::i();
        assert_eq!(z.to_string(), "(1-i)");
    }
}
