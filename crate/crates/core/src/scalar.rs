//! Exact scalar fields.
//!
//! Every structural constant that shows up in this crate lives in ℚ(i), so the
//! algebra is written against the [`Scalar`] trait and instantiated with exact
//! Gaussian rationals. There is no floating point implementation: kernels,
//! ranks and harmonic projections below compare against exact zero.

use std::fmt::{self, Debug};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};

use crate::error::ParseScalarError;

/// A field with complex conjugation, exact equality and an imaginary unit.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + Send + Sync + 'static {
    fn conj(&self) -> Self;
    fn imag_unit() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Pure imaginary `(num/den)·i`.
    fn imag_ratio(num: i64, den: i64) -> Self {
        Self::imag_unit() * Self::from_ratio(num, den)
    }

    /// Human-readable form, e.g. `-(i/2)` or `1/2 + 3i`.
    fn pretty(&self) -> String;

    /// The `["re","im"]` pair of rational strings.
    fn to_pair(&self) -> [String; 2];
}

/// Rational coefficient type behind a [`Complex`] scalar.
pub trait ExactRational: Clone + Num + Signed + Debug + fmt::Display + Send + Sync + 'static {
    fn ratio(num: i64, den: i64) -> Self;
    fn parse_ratio(s: &str) -> Option<Self>;
}

impl ExactRational for BigRational {
    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn parse_ratio(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).ok()?;
                let d = BigInt::from_str(d.trim()).ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(BigRational::new(n, d))
            }
            None => BigInt::from_str(s).ok().map(BigRational::from_integer),
        }
    }
}

impl ExactRational for Ratio<i64> {
    fn ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn parse_ratio(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().ok()?;
                let d: i64 = d.trim().parse().ok()?;
                if d == 0 {
                    return None;
                }
                Some(Ratio::new(n, d))
            }
            None => s.parse().ok().map(Ratio::from_integer),
        }
    }
}

impl<R: ExactRational> Scalar for Complex<R> {
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn imag_unit() -> Self {
        Complex::new(R::zero(), R::one())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(R::ratio(num, den), R::zero())
    }

    fn pretty(&self) -> String {
        let (re, im) = (&self.re, &self.im);
        if im.is_zero() {
            return format!("{re}");
        }
        if re.is_zero() {
            tidy_imag(im)
        } else if im.is_negative() {
            format!("{re} - {}", tidy_imag(&im.abs()))
        } else {
            format!("{re} + {}", tidy_imag(im))
        }
    }

    fn to_pair(&self) -> [String; 2] {
        [self.re.to_string(), self.im.to_string()]
    }
}

// Renders `q·i` as `i`, `-i`, `2i`, `(i/2)`, `-(3i/2)`.
fn tidy_imag<R: ExactRational>(im: &R) -> String {
    let neg = im.is_negative();
    let mag = im.abs();
    let body = if mag.is_one() {
        "i".to_string()
    } else {
        let text = mag.to_string();
        match text.split_once('/') {
            Some((n, d)) if n == "1" => format!("(i/{d})"),
            Some((n, d)) => format!("({n}i/{d})"),
            None => format!("{text}i"),
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Parses a Gaussian rational from its `["re","im"]` string pair.
pub fn parse_pair<R: ExactRational>(re: &str, im: &str) -> Result<Complex<R>, ParseScalarError> {
    let r = R::parse_ratio(re).ok_or_else(|| ParseScalarError(re.to_string()))?;
    let i = R::parse_ratio(im).ok_or_else(|| ParseScalarError(im.to_string()))?;
    Ok(Complex::new(r, i))
}

/// Parses a real rational `p/q` string into a scalar.
pub fn parse_real<R: ExactRational>(s: &str) -> Result<Complex<R>, ParseScalarError> {
    parse_pair(s, "0")
}

pub fn is_real<R: ExactRational>(z: &Complex<R>) -> bool {
    z.im.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as Q;

    #[test]
    fn product_of_i_and_minus_half_i_is_half() {
        let a = Q::imag_unit();
        let b = Q::imag_ratio(-1, 2);
        assert_eq!(a * b, Q::from_ratio(1, 2));
    }

    #[test]
    fn ratios_are_reduced() {
        let q = Q::from_ratio(4, -6);
        assert_eq!(q.re, BigRational::ratio(-2, 3));
        assert!(q.re.denom() > &BigInt::zero());
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(Q::imag_ratio(-1, 2).pretty(), "-(i/2)");
        assert_eq!(Q::imag_ratio(1, 2).pretty(), "(i/2)");
        assert_eq!(Q::imag_ratio(2, 1).pretty(), "2i");
        assert_eq!(Q::from_int(-3).pretty(), "-3");
        assert_eq!((Q::from_ratio(1, 2) + Q::imag_unit()).pretty(), "1/2 + i");
        assert_eq!((Q::from_ratio(1, 2) - Q::imag_unit()).pretty(), "1/2 - i");
    }

    #[test]
    fn parse_round_trip() {
        let z: Q = parse_pair("-1/2", "3").unwrap();
        assert_eq!(z.to_pair(), ["-1/2".to_string(), "3".to_string()]);
        assert!(parse_pair::<BigRational>("1/0", "0").is_err());
        assert!(parse_pair::<BigRational>("x", "0").is_err());
    }
}
