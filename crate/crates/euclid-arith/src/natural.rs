//! The `Natural` type: an arbitrary-precision whole number that is at least 1.
//!
//! The ancient arithmos is a plurality of units; zero and negatives are not
//! representable, and the unit 1 is a first-class value that participates in
//! every operation. Keeping the invariant in the type means no operation in
//! this workspace ever has to re-check it.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};

/// A positive whole number (>= 1), arbitrary precision.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

/// Error for conversions that would produce the unrepresentable zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroNatural;

impl fmt::Display for ZeroNatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zero is not a natural; the domain starts at the unit 1")
    }
}

impl std::error::Error for ZeroNatural {}

/// Error returned when parsing a decimal string into a [`Natural`] fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseNaturalError {
    /// The input was empty.
    Empty,
    /// The input contained a byte outside `0..=9`.
    InvalidDigit,
    /// The input parsed as zero.
    Zero,
}

impl fmt::Display for ParseNaturalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseNaturalError::Empty => write!(f, "empty string is not a natural"),
            ParseNaturalError::InvalidDigit => write!(f, "naturals are plain decimal digits"),
            ParseNaturalError::Zero => write!(f, "{}", ZeroNatural),
        }
    }
}

impl std::error::Error for ParseNaturalError {}

impl Natural {
    /// The unit, 1.
    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    /// Wraps a value already known to be positive. Internal shortcut for
    /// algorithms whose arithmetic cannot reach zero.
    pub(crate) fn from_positive(value: BigUint) -> Self {
        debug_assert!(!value.is_zero());
        Natural(value)
    }

    pub fn new(value: BigUint) -> Result<Self, ZeroNatural> {
        if value.is_zero() {
            Err(ZeroNatural)
        } else {
            Ok(Natural(value))
        }
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Number of bits in the binary expansion.
    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    /// Raises to an integer power. `exponent` 0 yields the unit, so the
    /// result is always a legal natural.
    pub fn pow(&self, exponent: u32) -> Natural {
        Natural(Pow::pow(&self.0, exponent))
    }

    /// Subtraction, defined only when the difference stays at or above 1.
    pub fn checked_sub(&self, rhs: &Natural) -> Option<Natural> {
        if self.0 > rhs.0 {
            Some(Natural(&self.0 - &rhs.0))
        } else {
            None
        }
    }

    /// True when `self` measures `other`, i.e. divides it exactly.
    pub fn divides(&self, other: &Natural) -> bool {
        (&other.0 % &self.0).is_zero()
    }

    /// Exact quotient, or `None` when `divisor` does not measure `self`.
    pub fn div_exact(&self, divisor: &Natural) -> Option<Natural> {
        let (q, r) = (&self.0 / &divisor.0, &self.0 % &divisor.0);
        if r.is_zero() {
            Some(Natural(q))
        } else {
            None
        }
    }
}

impl TryFrom<BigUint> for Natural {
    type Error = ZeroNatural;

    fn try_from(value: BigUint) -> Result<Self, Self::Error> {
        Natural::new(value)
    }
}

impl TryFrom<u64> for Natural {
    type Error = ZeroNatural;

    fn try_from(value: u64) -> Result<Self, Self::Error> {
        Natural::new(BigUint::from(value))
    }
}

impl TryFrom<u128> for Natural {
    type Error = ZeroNatural;

    fn try_from(value: u128) -> Result<Self, Self::Error> {
        Natural::new(BigUint::from(value))
    }
}

impl From<Natural> for BigUint {
    fn from(value: Natural) -> Self {
        value.0
    }
}

impl Add<&Natural> for &Natural {
    type Output = Natural;

    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Natural> for Natural {
    fn add_assign(&mut self, rhs: &Natural) {
        self.0 += &rhs.0;
    }
}

impl Mul<&Natural> for &Natural {
    type Output = Natural;

    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Natural({})", self.0)
    }
}

impl FromStr for Natural {
    type Err = ParseNaturalError;

    /// Strict decimal parse: non-empty, digits `0..=9` only (no sign, no
    /// whitespace), value at least 1. Leading zeros are tolerated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseNaturalError::Empty);
        }
        if !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseNaturalError::InvalidDigit);
        }
        let value: BigUint = s.parse().map_err(|_| ParseNaturalError::InvalidDigit)?;
        Natural::new(value).map_err(|_| ParseNaturalError::Zero)
    }
}

impl serde::Serialize for Natural {
    /// Naturals serialize as decimal strings so that JSON consumers never
    /// round them through a float.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> serde::Deserialize<'de> for Natural {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct NaturalVisitor;

        impl serde::de::Visitor<'_> for NaturalVisitor {
            type Value = Natural;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a decimal string holding a whole number >= 1")
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Natural, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_str(NaturalVisitor)
    }
}
