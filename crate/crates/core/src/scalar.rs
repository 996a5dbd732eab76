//! Scalar field used by every vector and linear map.
//!
//! The default build uses exact rationals so that categorical equalities
//! hold on the nose. With the `float` feature the field becomes `f64` and
//! zero tests use an absolute tolerance of [`FLOAT_TOLERANCE`].

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

#[cfg(not(feature = "float"))]
use num_bigint::BigInt;
#[cfg(not(feature = "float"))]
use num_rational::BigRational;
#[cfg(not(feature = "float"))]
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Absolute tolerance for zero tests in the `float` build.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[cfg(not(feature = "float"))]
type Inner = BigRational;
#[cfg(feature = "float")]
type Inner = f64;

#[derive(Clone, PartialEq, PartialOrd, Default)]
pub struct Scalar(Inner);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal `{0}`")]
pub struct ParseScalarError(pub String);

impl Scalar {
    #[cfg(not(feature = "float"))]
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }
    #[cfg(feature = "float")]
    pub fn zero() -> Self {
        Scalar(0.0)
    }

    #[cfg(not(feature = "float"))]
    pub fn one() -> Self {
        Scalar(BigRational::one())
    }
    #[cfg(feature = "float")]
    pub fn one() -> Self {
        Scalar(1.0)
    }

    #[cfg(not(feature = "float"))]
    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
    #[cfg(feature = "float")]
    pub fn from_int(n: i64) -> Self {
        Scalar(n as f64)
    }

    /// `num / den`; panics when `den == 0`.
    #[cfg(not(feature = "float"))]
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    #[cfg(feature = "float")]
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(num as f64 / den as f64)
    }

    #[cfg(not(feature = "float"))]
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    #[cfg(feature = "float")]
    pub fn is_zero(&self) -> bool {
        self.0.abs() < FLOAT_TOLERANCE
    }

    #[cfg(not(feature = "float"))]
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
    #[cfg(feature = "float")]
    pub fn is_negative(&self) -> bool {
        self.0 < -FLOAT_TOLERANCE
    }

    /// Equality up to the build's comparison rule (exact, or within tolerance).
    pub fn approx_eq(&self, other: &Scalar) -> bool {
        (self.clone() - other.clone()).is_zero()
    }

    #[cfg(not(feature = "float"))]
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
    #[cfg(feature = "float")]
    pub fn to_f64(&self) -> f64 {
        self.0
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// Accepts integers (`3`), fractions (`3/4`) and decimals (`0.25`, `-1.5`).
impl FromStr for Scalar {
    type Err = ParseScalarError;

    #[cfg(not(feature = "float"))]
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            return Ok(Scalar(BigRational::new(n, d)));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        let all_digits = |p: &str| p.chars().all(|c| c.is_ascii_digit());
        if !all_digits(int_part) || !all_digits(frac_part) {
            return Err(err());
        }
        let digits = format!("{int_part}{frac_part}");
        let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| err())? };
        let den = num_traits::pow(BigInt::from(10u32), frac_part.len());
        let value = BigRational::new(num, den);
        Ok(Scalar(if neg { -value } else { value }))
    }

    #[cfg(feature = "float")]
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: f64 = n.trim().parse().map_err(|_| ParseScalarError(s.to_string()))?;
            let d: f64 = d.trim().parse().map_err(|_| ParseScalarError(s.to_string()))?;
            if d == 0.0 {
                return Err(ParseScalarError(s.to_string()));
            }
            return Ok(Scalar(n / d));
        }
        t.parse::<f64>().ok().filter(|v| v.is_finite()).map(Scalar).ok_or_else(|| ParseScalarError(s.to_string()))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar(self.0.clone() + rhs.0.clone())
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 - rhs.0)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar(self.0.clone() * rhs.0.clone())
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        self.0 *= rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}
