//! Exact arithmetic over the quadratic fields Q(√2), Q(√3), Q(√5).
//!
//! Every geometric predicate in this crate bottoms out in [`QuadExt::sign`],
//! which decides the sign of `a + b·√d` with pure rational arithmetic. No
//! floating point is used anywhere on the trusted path; floats appear only in
//! [`QuadExt::to_f64`] for rendering.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational in canonical form (positive denominator,
/// reduced). `num_rational` maintains both invariants on construction.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `"p/q"` / `"p"` format produced by [`rational_to_string`].
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let bad = || FieldError::BadRational(s.to_string());
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("mismatched radicands: √{0} vs √{1}")]
    MismatchedRadicands(u32, u32),
    #[error("invalid radicand {0} (expected 2, 3 or 5)")]
    InvalidRadicand(u32),
    #[error("malformed rational literal {0:?}")]
    BadRational(String),
}

/// An exact element `a + b·√d` of Q(√d), `d ∈ {2, 3, 5}`.
///
/// Equality and hashing are componentwise; the components are rationals in
/// canonical form, so two values compare equal iff they are the same element
/// of the same field. Values from different fields never mix: the checked
/// operations report a mismatch and the operator impls panic on one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    d: u32,
    a: Rational,
    b: Rational,
}

impl QuadExt {
    pub fn new(d: u32, a: Rational, b: Rational) -> Result<Self, FieldError> {
        match d {
            2 | 3 | 5 => Ok(QuadExt { d, a, b }),
            _ => Err(FieldError::InvalidRadicand(d)),
        }
    }

    /// `a + b·√d` from integer components. Panics on an invalid radicand.
    pub fn from_integers(d: u32, a: i64, b: i64) -> Self {
        Self::new(d, rat(a), rat(b)).expect("valid radicand")
    }

    /// `(an/ad) + (bn/bd)·√d` from integer numerators and denominators.
    pub fn from_ratios(d: u32, an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        Self::new(d, ratio(an, ad), ratio(bn, bd)).expect("valid radicand")
    }

    pub fn zero(d: u32) -> Self {
        Self::from_integers(d, 0, 0)
    }

    pub fn one(d: u32) -> Self {
        Self::from_integers(d, 1, 0)
    }

    /// The generator √d itself.
    pub fn sqrt_d(d: u32) -> Self {
        Self::from_integers(d, 0, 1)
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check_same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(FieldError::MismatchedRadicands(self.d, other.d))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_same_field(other)?;
        Ok(QuadExt {
            d: self.d,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_same_field(other)?;
        Ok(QuadExt {
            d: self.d,
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        })
    }

    /// `(a₁ + b₁√d)(a₂ + b₂√d) = (a₁a₂ + d·b₁b₂) + (a₁b₂ + b₁a₂)√d`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check_same_field(other)?;
        let d = Rational::from_integer(BigInt::from(self.d));
        Ok(QuadExt {
            d: self.d,
            a: &self.a * &other.a + d * (&self.b * &other.b),
            b: &self.a * &other.b + &self.b * &other.a,
        })
    }

    /// Multiplies by a plain rational scalar.
    pub fn scale(&self, s: &Rational) -> Self {
        QuadExt {
            d: self.d,
            a: &self.a * s,
            b: &self.b * s,
        }
    }

    /// The sign of the real number `a + b·√d`.
    ///
    /// When `a` and `b` agree in sign (or one vanishes) the answer is
    /// immediate. Otherwise the signs differ, and comparing `a²` against
    /// `d·b²` decides which term dominates: the result carries the sign of
    /// `a` iff `a² > d·b²`. Exact throughout; `Equal` is only possible for
    /// the zero element because √d is irrational.
    pub fn sign(&self) -> Ordering {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (s, t) if s == t => s,
            (s, t) => {
                let a2 = &self.a * &self.a;
                let db2 = Rational::from_integer(BigInt::from(self.d)) * &self.b * &self.b;
                match a2.cmp(&db2) {
                    Ordering::Greater => s,
                    Ordering::Less => t,
                    // a² = d·b² with a, b ≠ 0 would make √d rational.
                    Ordering::Equal => unreachable!("√{} is irrational", self.d),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    /// Untrusted floating evaluation, for rendering only.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

fn rational_sign(r: &Rational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Lossy conversion for rendering; good to f64 precision for the coordinate
/// magnitudes in this crate.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of truncated parts for huge components.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Ordering within one field, via the sign of the difference. `None` when
/// the radicands differ.
impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.sign())
    }
}

macro_rules! quadext_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs).expect("operands from the same field")
            }
        }
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}

quadext_binop!(Add, add, checked_add);
quadext_binop!(Sub, sub, checked_sub);
quadext_binop!(Mul, mul, checked_mul);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            d: self.d,
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct QuadExtRepr {
    a: String,
    b: String,
    d: u32,
}

impl serde::Serialize for QuadExt {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QuadExtRepr {
            a: rational_to_string(&self.a),
            b: rational_to_string(&self.b),
            d: self.d,
        }
        .serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for QuadExt {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = QuadExtRepr::deserialize(deserializer)?;
        let a = parse_rational(&repr.a).map_err(D::Error::custom)?;
        let b = parse_rational(&repr.b).map_err(D::Error::custom)?;
        QuadExt::new(repr.d, a, b).map_err(D::Error::custom)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", rational_to_string(&self.a));
        }
        if self.a.is_zero() {
            return write!(f, "{}√{}", rational_to_string(&self.b), self.d);
        }
        if self.b.is_negative() {
            write!(
                f,
                "{} - {}√{}",
                rational_to_string(&self.a),
                rational_to_string(&-&self.b),
                self.d
            )
        } else {
            write!(
                f,
                "{} + {}√{}",
                rational_to_string(&self.a),
                rational_to_string(&self.b),
                self.d
            )
        }
    }
}
