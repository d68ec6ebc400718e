//! Dual-mode numbers: exact rationals and complex floats.
//!
//! The numeric kernels in this crate are generic over [`Field`], with two
//! implementations: [`BigRational`] (exact mode — every operation is exact,
//! results never degrade to floating point) and [`Complex64`] (float mode,
//! ~15.9 significant digits). Because the modes are distinct types, mixing
//! them inside a computation is a compile error; at dynamic boundaries (CLI
//! parameters, reports) the [`Scalar`] enum carries either mode and its
//! arithmetic returns [`Error::ModeMismatch`] instead of coercing.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arithmetic required by the q-series kernels.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    fn from_int(n: i64) -> Self;

    /// Magnitude as f64, used for tolerances and report output.
    fn abs_f64(&self) -> f64;

    /// Detects the value 1: exact for rationals, within 1e-10 relative for
    /// floats (used to recognize terminating series parameters q^{-k}).
    fn detect_one(&self) -> bool;

    /// Integer power, with negative exponents via the reciprocal.
    fn ipow(&self, n: i64) -> Self {
        let mut e = n.unsigned_abs();
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        if n < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }

    /// Whether the value is admissible as a base q.
    fn valid_base(&self) -> bool;
}

impl Field for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn abs_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN).abs()
    }

    fn detect_one(&self) -> bool {
        self.is_one()
    }

    // 0 < q < 1, exactly.
    fn valid_base(&self) -> bool {
        self > &BigRational::zero() && self < &BigRational::one()
    }
}

impl Field for Complex64 {
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn abs_f64(&self) -> f64 {
        self.norm()
    }

    fn detect_one(&self) -> bool {
        (self - Complex64::one()).norm() <= 1e-10 * (1.0 + self.norm())
    }

    // 0 < |q| < 1; strict inequalities.
    fn valid_base(&self) -> bool {
        let r = self.norm();
        r > 0.0 && r < 1.0
    }
}

/// A validated base q.
#[derive(Clone, Debug, PartialEq)]
pub struct QBase<T: Field>(T);

impl<T: Field> QBase<T> {
    pub fn new(q: T) -> Result<Self> {
        if q.valid_base() {
            Ok(QBase(q))
        } else {
            Err(Error::InvalidParams(format!(
                "base q = {q} must satisfy 0 < |q| < 1 (0 < q < 1 in exact mode)"
            )))
        }
    }

    pub fn value(&self) -> &T {
        &self.0
    }
}

/// Boundary type holding a value of either mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    /// Exact arbitrary-precision rational, always in lowest terms with
    /// positive denominator (maintained by `BigRational` itself).
    Rational(BigRational),
    /// Complex double-precision float.
    Complex(Complex64),
}

impl Scalar {
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_f64(x: f64) -> Self {
        Scalar::Complex(Complex64::new(x, 0.0))
    }

    /// Parses an exact rational from "num/den" or plain integer notation.
    pub fn parse_rational(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |what: &str| Error::InvalidParams(format!("cannot parse {what}: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let num: BigInt = n.trim().parse().map_err(|_| bad("rational numerator"))?;
                let den: BigInt = d.trim().parse().map_err(|_| bad("rational denominator"))?;
                if den.is_zero() {
                    return Err(bad("rational (zero denominator)"));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            None => {
                let num: BigInt = s.parse().map_err(|_| bad("rational"))?;
                Ok(Scalar::Rational(BigRational::from_integer(num)))
            }
        }
    }

    /// Parses a real decimal into the complex-float mode.
    pub fn parse_real(s: &str) -> Result<Self> {
        s.trim()
            .parse::<f64>()
            .map(Scalar::from_f64)
            .map_err(|_| Error::InvalidParams(format!("cannot parse real: {s:?}")))
    }

    pub fn as_rational(&self) -> Result<&BigRational> {
        match self {
            Scalar::Rational(r) => Ok(r),
            Scalar::Complex(_) => Err(Error::ModeMismatch),
        }
    }

    pub fn as_complex(&self) -> Result<Complex64> {
        match self {
            Scalar::Complex(z) => Ok(*z),
            Scalar::Rational(_) => Err(Error::ModeMismatch),
        }
    }

    /// Explicit (lossy) conversion of either mode to a complex float.
    pub fn to_complex_lossy(&self) -> Complex64 {
        match self {
            Scalar::Complex(z) => *z,
            Scalar::Rational(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Complex(z) => z.is_zero(),
        }
    }

    fn binop(
        &self,
        rhs: &Scalar,
        fr: impl Fn(&BigRational, &BigRational) -> BigRational,
        fc: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(fr(a, b))),
            (Scalar::Complex(a), Scalar::Complex(b)) => Ok(Scalar::Complex(fc(*a, *b))),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binop(rhs, |a, b| a + b, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binop(rhs, |a, b| a - b, |a, b| a - b)
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.binop(rhs, |a, b| a * b, |a, b| a * b)
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::Pole("division by zero".into()));
        }
        self.binop(rhs, |a, b| a / b, |a, b| a / b)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Complex(z) => {
                if z.im == 0.0 {
                    write!(f, "{}", z.re)
                } else {
                    write!(f, "{}{}{}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
                }
            }
        }
    }
}
