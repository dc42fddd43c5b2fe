//! Root expressions: the side of a square or cube of natural area/volume.

use std::fmt;

use euclid_arith::{Degree, Natural};
use serde::{Deserialize, Serialize};

/// `sqrt(n)` or `cbrt(n)` for a natural `n`.
///
/// Degrees stop at 3: the geometric construction these lines come from has
/// nowhere to put a fourth dimension, so no higher roots exist here.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Surd {
    radicand: Natural,
    degree: Degree,
}

impl Surd {
    pub fn new(radicand: Natural, degree: Degree) -> Self {
        Surd { radicand, degree }
    }

    pub fn sqrt(radicand: Natural) -> Self {
        Surd::new(radicand, Degree::Square)
    }

    pub fn cbrt(radicand: Natural) -> Self {
        Surd::new(radicand, Degree::Cube)
    }

    pub fn radicand(&self) -> &Natural {
        &self.radicand
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    /// The square (or cube) this line has the power to produce — always a
    /// natural, which is why every such line is commensurable "as areas"
    /// even when it is incommensurable as a length.
    pub fn produced_power(&self) -> &Natural {
        &self.radicand
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.degree.root_name(), self.radicand)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::try_from(v).unwrap()
    }

    #[test]
    fn display_uses_root_names() {
        assert_eq!(Surd::sqrt(nat(2)).to_string(), "sqrt(2)");
        assert_eq!(Surd::cbrt(nat(3)).to_string(), "cbrt(3)");
    }

    #[test]
    fn serde_shape() {
        let s = Surd::sqrt(nat(2));
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"radicand":"2","degree":2}"#
        );
        assert_eq!(serde_json::from_str::<Surd>(r#"{"radicand":"2","degree":2}"#).unwrap(), s);
        assert!(serde_json::from_str::<Surd>(r#"{"radicand":"2","degree":4}"#).is_err());
    }
}
