//! The common measure of two naturals, by two routes.
//!
//! `gcd_subtractive` is anthyphairesis — reciprocal subtraction, the form the
//! measure takes in the Elements. `gcd` replaces runs of subtractions by a
//! remainder, which is the same computation with the quotient batched. The
//! two must agree everywhere; the property suite pins that down.

use num_traits::Zero;

use crate::natural::Natural;

/// Greatest natural measuring both `a` and `b`, by the remainder form of the
/// algorithm. This is the fast path used everywhere in the workspace.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    let mut x = a.as_biguint().clone();
    let mut y = b.as_biguint().clone();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    // x started >= 1 and only ever takes values of earlier nonzero terms.
    Natural::from_positive(x)
}

/// Greatest common measure by reciprocal subtraction: the lesser is taken
/// from the greater until the two are equal.
///
/// Runs in time proportional to the sum of the quotients, so prefer [`gcd`]
/// unless the operands are small.
pub fn gcd_subtractive(a: &Natural, b: &Natural) -> Natural {
    let mut x = a.as_biguint().clone();
    let mut y = b.as_biguint().clone();
    while x != y {
        if x > y {
            x -= &y;
        } else {
            y -= &x;
        }
    }
    Natural::from_positive(x)
}

/// Definition VII.13 test: `a` and `b` are measured by the unit alone.
pub fn are_relatively_prime(a: &Natural, b: &Natural) -> bool {
    gcd(a, b).is_one()
}
