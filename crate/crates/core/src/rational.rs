//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! `Rational` is the carrier for every probability in this crate. All
//! arithmetic is exact; values are kept in canonical form (positive
//! denominator, fully reduced) after every operation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact fraction of arbitrary-precision integers.
///
/// Canonical form is maintained by construction: the denominator is always
/// positive and gcd(|numerator|, denominator) = 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, normalizing sign and reducing.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Parameter("rational denominator is zero".into()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Convenience constructor from small integers. Panics on zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational denominator is zero");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Parameter("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    /// Nearest binary64 value; exact when representable.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Best rational approximation of `x` with denominator at most `max_denom`,
    /// computed by truncating the continued-fraction expansion.
    ///
    /// The final convergent is refined with the largest admissible semiconvergent
    /// so the result is a best approximation under the denominator cap.
    pub fn approximate_f64(x: f64, max_denom: u64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Parameter(format!("cannot rationalize {x}")));
        }
        if max_denom == 0 {
            return Err(Error::Parameter("max denominator must be positive".into()));
        }
        let negative = x < 0.0;
        let mut rest = x.abs();

        // Convergents p/q of the continued fraction [a0; a1, a2, ...].
        let mut p_prev = BigInt::one();
        let mut q_prev = BigInt::zero();
        let mut p = BigInt::from(rest.floor() as i64);
        let mut q = BigInt::one();
        let cap = BigInt::from(max_denom);

        loop {
            let a = rest.floor();
            rest -= a;
            if rest <= f64::EPSILON * 4.0 {
                break;
            }
            rest = rest.recip();
            let a_next = BigInt::from(rest.floor() as i128);
            let p_next = &a_next * &p + &p_prev;
            let q_next = &a_next * &q + &q_prev;
            if q_next > cap {
                // Largest semiconvergent still under the cap.
                let k = (&cap - &q_prev) / &q;
                if k.is_positive() {
                    let p_semi = &k * &p + &p_prev;
                    let q_semi = &k * &q + &q_prev;
                    let cand = BigRational::new(p_semi, q_semi);
                    let best = BigRational::new(p.clone(), q.clone());
                    let target = BigRational::from_float(x.abs())
                        .ok_or_else(|| Error::Parameter("cannot rationalize".into()))?;
                    if (&cand - &target).abs() < (&best - &target).abs() {
                        p = cand.numer().clone();
                        q = cand.denom().clone();
                    }
                }
                break;
            }
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
        }

        let mut r = BigRational::new(p, q);
        if negative {
            r = -r;
        }
        Ok(Rational(r))
    }
}

impl fmt::Display for Rational {
    /// Canonical form: `"3"` for integers, `"3/4"` otherwise, always reduced.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::ParseRational(s.to_owned()))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let numer = parse_int(n)?;
                let denom = parse_int(d)?;
                if denom.is_zero() {
                    return Err(Error::ParseRational(s.to_owned()));
                }
                Rational::new(numer, denom)
            }
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl<'a> Neg for &'a Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, r| acc + r)
    }
}

impl<'a> std::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, r| acc + r)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced_with_positive_denominator() {
        let r = Rational::ratio(6, -8);
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
    }

    #[test]
    fn integers_format_without_denominator() {
        assert_eq!(Rational::ratio(8, 4).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parse_accepts_fractions_and_integers() {
        let r: Rational = "3/4".parse().unwrap();
        assert_eq!(r, Rational::ratio(3, 4));
        let n: Rational = "3".parse().unwrap();
        assert_eq!(n, Rational::from_integer(3));
        let m: Rational = "-10/4".parse().unwrap();
        assert_eq!(m.to_string(), "-5/2");
    }

    #[test]
    fn parse_rejects_garbage_and_zero_denominator() {
        assert!("".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Rational::ratio(1, 3);
        let sum = &third + &third;
        assert_eq!(&sum + &third, Rational::one());
        assert_eq!(&third * &Rational::ratio(3, 1), Rational::one());
        assert_eq!(Rational::ratio(1, 2) - Rational::ratio(1, 2), Rational::zero());
        assert_eq!(
            Rational::ratio(1, 6) / Rational::ratio(1, 3),
            Rational::ratio(1, 2)
        );
    }

    #[test]
    fn approximate_f64_recovers_simple_fractions() {
        assert_eq!(
            Rational::approximate_f64(0.5, 1_000_000).unwrap(),
            Rational::ratio(1, 2)
        );
        assert_eq!(
            Rational::approximate_f64(1.0 / 3.0, 1_000_000).unwrap(),
            Rational::ratio(1, 3)
        );
        assert_eq!(
            Rational::approximate_f64(-0.25, 10).unwrap(),
            Rational::ratio(-1, 4)
        );
    }

    #[test]
    fn approximate_f64_honors_denominator_cap() {
        let pi = Rational::approximate_f64(std::f64::consts::PI, 120).unwrap();
        assert_eq!(pi, Rational::ratio(355, 113));
        let r = Rational::approximate_f64(std::f64::consts::PI, 1_000_000).unwrap();
        assert!(r.denom() <= &BigInt::from(1_000_000u64));
        assert!((r.to_f64() - std::f64::consts::PI).abs() < 1e-11);
    }

    #[test]
    fn approximate_f64_rejects_non_finite() {
        assert!(Rational::approximate_f64(f64::NAN, 10).is_err());
        assert!(Rational::approximate_f64(f64::INFINITY, 10).is_err());
    }
}
