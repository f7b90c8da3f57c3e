//! Exact complex-rational scalars.
//!
//! Every value the toolkit produces (Holant values, fingerprints, coefficients)
//! is an [`ExactScalar`]: a Gaussian rational `re + im·i` with arbitrary
//! precision rational parts. Zero testing is exact.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{HolantError, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    re: BigRational,
    im: BigRational,
}

impl ExactScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactScalar { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        ExactScalar {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    /// `num / den` as a real scalar. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ExactScalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
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

    pub fn checked_div(&self, rhs: &ExactScalar) -> Result<ExactScalar> {
        let inv = rhs.inverse()?;
        Ok(self * &inv)
    }

    pub fn inverse(&self) -> Result<ExactScalar> {
        if self.is_zero() {
            return Err(HolantError::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Self::from_rational(self.re.recip()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(ExactScalar {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }

    /// Integer power; negative exponents require a non-zero base.
    pub fn pow(&self, exp: i64) -> Result<ExactScalar> {
        if exp < 0 {
            if self.is_zero() {
                return Err(HolantError::NegativePowerOfZero);
            }
            return self.inverse()?.pow(-exp);
        }
        Ok(self.pow_u(exp as u64))
    }

    /// Non-negative power by repeated squaring. `0^0 = 1`.
    pub fn pow_u(&self, mut exp: u64) -> ExactScalar {
        if self.im.is_zero() {
            return Self::from_rational(num_traits::pow::Pow::pow(&self.re, exp));
        }
        let mut base = self.clone();
        let mut acc = ExactScalar::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Canonical text form: `"p/q"` for reals, `"p/q+r/ti"` otherwise.
    pub fn to_canonical_string(&self) -> String {
        if self.im.is_zero() {
            rational_to_string(&self.re)
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            format!(
                "{}{}{}i",
                rational_to_string(&self.re),
                sign,
                rational_to_string(&self.im.abs())
            )
        }
    }
}

/// Always prints the denominator, so integers appear as `"3/1"`.
pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || HolantError::InvalidInput(format!("not an exact rational: {s:?}"));
    if s.is_empty() || s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(HolantError::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for ExactScalar {
    type Err = HolantError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(ExactScalar::from_rational(parse_rational(s)?))
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::from_int(n)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        ExactScalar::from_bigint(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(q: BigRational) -> Self {
        ExactScalar::from_rational(q)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        *self += &rhs;
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        &self - &rhs
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return ExactScalar::from_rational(&self.re * &rhs.re);
        }
        ExactScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        if self.im.is_zero() && rhs.im.is_zero() {
            self.re *= &rhs.re;
        } else {
            *self = &*self * rhs;
        }
    }
}

impl MulAssign for ExactScalar {
    fn mul_assign(&mut self, rhs: ExactScalar) {
        *self *= &rhs;
    }
}

/// Panics on division by zero; use [`ExactScalar::checked_div`] for a `Result`.
impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for ExactScalar {
    fn product<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::one(), |mut acc, x| {
            acc *= &x;
            acc
        })
    }
}

// Reals serialize as "p/q"; anything with an imaginary part as {re, im}.
impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.im.is_zero() {
            serializer.serialize_str(&rational_to_string(&self.re))
        } else {
            let mut map = serializer.serialize_map(Some(2))?;
            map.serialize_entry("re", &rational_to_string(&self.re))?;
            map.serialize_entry("im", &rational_to_string(&self.im))?;
            map.end()
        }
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl<'de> Visitor<'de> for ScalarVisitor {
            type Value = ExactScalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an object {re, im}")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExactScalar, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExactScalar, E> {
                Ok(ExactScalar::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExactScalar, E> {
                Ok(ExactScalar::from_bigint(BigInt::from(v)))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExactScalar, E> {
                Err(E::custom(format!(
                    "floating-point literal {v} is not an exact scalar"
                )))
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<ExactScalar, A::Error> {
                let mut re = None;
                let mut im = None;
                while let Some(key) = map.next_key::<String>()? {
                    let value: String = map.next_value()?;
                    let q = parse_rational(&value).map_err(de::Error::custom)?;
                    match key.as_str() {
                        "re" => re = Some(q),
                        "im" => im = Some(q),
                        other => return Err(de::Error::unknown_field(other, &["re", "im"])),
                    }
                }
                Ok(ExactScalar::new(
                    re.unwrap_or_else(BigRational::zero),
                    im.unwrap_or_else(BigRational::zero),
                ))
            }
        }

        deserializer.deserialize_any(ScalarVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(&q("1/2") + &q("1/3"), q("5/6"));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = ExactScalar::i();
        assert_eq!(&i * &i, ExactScalar::from_int(-1));
        assert_eq!(i.pow(2).unwrap(), ExactScalar::from_int(-1));
        assert_eq!(i.pow(-1).unwrap(), -ExactScalar::i());
    }

    #[test]
    fn zero_test_is_exact() {
        assert!((&q("2/4") - &q("1/2")).is_zero());
        assert!(!q("1/1000000000000000000000").is_zero());
    }

    #[test]
    fn division_errors() {
        assert_eq!(
            q("1").checked_div(&ExactScalar::zero()),
            Err(HolantError::DivisionByZero)
        );
        assert_eq!(
            ExactScalar::zero().pow(-2),
            Err(HolantError::NegativePowerOfZero)
        );
        assert_eq!(ExactScalar::zero().pow(0).unwrap(), ExactScalar::one());
    }

    #[test]
    fn complex_division_round_trips() {
        let a = ExactScalar::new(
            BigRational::from_integer(3.into()),
            BigRational::new(1.into(), 2.into()),
        );
        let b = ExactScalar::new(
            BigRational::new((-2).into(), 7.into()),
            BigRational::from_integer(5.into()),
        );
        let c = a.checked_div(&b).unwrap();
        assert_eq!(&c * &b, a);
    }

    #[test]
    fn text_forms() {
        assert_eq!(q("3").to_string(), "3/1");
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert!("0.333".parse::<ExactScalar>().is_err());
        assert!("1e3".parse::<ExactScalar>().is_err());
        let z: ExactScalar = serde_json::from_str(r#"{"re":"1/2","im":"-1/3"}"#).unwrap();
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            r#"{"re":"1/2","im":"-1/3"}"#
        );
        assert_eq!(serde_json::to_string(&q("1/3")).unwrap(), r#""1/3""#);
        assert!(serde_json::from_str::<ExactScalar>("0.5").is_err());
    }
}
