//! Exact integer roots by monotone binary search. No floating point is
//! involved anywhere: exactness here is a correctness requirement.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::natural::Natural;

/// Root degree. The geometric construction behind the domain stops at three
/// dimensions, so only square and cube roots exist.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Degree {
    Square,
    Cube,
}

impl Degree {
    pub fn exponent(self) -> u32 {
        match self {
            Degree::Square => 2,
            Degree::Cube => 3,
        }
    }

    /// Root-sign spelling used by the text forms: `sqrt` or `cbrt`.
    pub fn root_name(self) -> &'static str {
        match self {
            Degree::Square => "sqrt",
            Degree::Cube => "cbrt",
        }
    }
}

/// Error for degrees outside {2, 3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeError(pub u32);

impl fmt::Display for DegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree must be 2 or 3, got {}", self.0)
    }
}

impl std::error::Error for DegreeError {}

impl TryFrom<u32> for Degree {
    type Error = DegreeError;

    fn try_from(value: u32) -> Result<Self, Self::Error> {
        match value {
            2 => Ok(Degree::Square),
            3 => Ok(Degree::Cube),
            other => Err(DegreeError(other)),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exponent())
    }
}

impl serde::Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.exponent())
    }
}

impl<'de> serde::Deserialize<'de> for Degree {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = u32::deserialize(deserializer)?;
        Degree::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// `⌊n^(1/e)⌋` for `n >= 1`; always at least 1, hence a natural.
pub fn floor_root(n: &Natural, degree: Degree) -> Natural {
    if let Some(small) = n.to_u128() {
        let r = floor_root_u128(small, degree);
        return Natural::try_from(r).expect("floor root of a natural is >= 1");
    }
    let e = degree.exponent();
    let n = n.as_biguint();
    // Bracket the root by bit length: lo^e <= n < hi^e.
    let shift = (n.bits() - 1) / u64::from(e);
    let mut lo: BigUint = BigUint::one() << shift;
    let mut hi: BigUint = &lo << 1u8;
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1u8;
        if Pow::pow(&mid, e) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Natural::from_positive(lo)
}

/// `⌊n^(1/e)⌋` on machine words; returns 0 only for `n = 0`.
pub fn floor_root_u128(n: u128, degree: Degree) -> u128 {
    if n == 0 {
        return 0;
    }
    let e = degree.exponent();
    let bits = 128 - n.leading_zeros();
    let mut lo: u128 = 1 << ((bits - 1) / e);
    let mut hi: u128 = lo << 1;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        // Overflow of mid^e means it certainly exceeds n.
        match mid.checked_pow(e) {
            Some(m) if m <= n => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

/// The exact root: `Some(k)` iff `k^e = n`, otherwise `None`.
pub fn integer_root(n: &Natural, degree: Degree) -> Option<Natural> {
    let r = floor_root(n, degree);
    if &r.pow(degree.exponent()) == n {
        Some(r)
    } else {
        None
    }
}

/// Machine-word companion of [`integer_root`], used by the brute-force
/// oracles so their scans stay cheap without leaving exact integers.
pub fn integer_root_u128(n: u128, degree: Degree) -> Option<u128> {
    let r = floor_root_u128(n, degree);
    if r.checked_pow(degree.exponent()) == Some(n) {
        Some(r)
    } else {
        None
    }
}
