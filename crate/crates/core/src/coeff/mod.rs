//! Exact arithmetic in `Q(s)`, the field of rational functions in `s = q^(1/2)`.
//!
//! Working over a transcendental `q` means every `q^k - 1` with `k != 0` is a
//! nonzero, invertible scalar, so no step of the torus algebra ever has to
//! special-case roots of unity.

mod poly;
mod scalar;

use std::str::FromStr;

pub use poly::IntPoly;
pub use scalar::ScalarRat;

use crate::error::Error;

/// Parses a coefficient such as `(-s^6+3*s^4-3*s^2+1)/(1)`. `q` is accepted
/// as an alias for `s^2`, and `q^(k/2)` for `s^k`.
impl FromStr for ScalarRat {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let ast = crate::expr::parse_expr(text)?;
        crate::expr::eval_scalar(&ast)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonical_and_aliases() {
        let x: ScalarRat = "(-s^6+3*s^4-3*s^2+1)/(1)".parse().unwrap();
        assert_eq!(x, ScalarRat::one_minus_q_pow(1).pow(3).unwrap());
        let y: ScalarRat = "q^(-1/2) - 1/s".parse().unwrap();
        assert!(y.is_zero());
        let z: ScalarRat = "(1-q)^-3".parse().unwrap();
        assert_eq!(z, ScalarRat::one_minus_q_pow(1).pow(-3).unwrap());
    }

    #[test]
    fn parse_rejects_generators() {
        assert!(matches!("z1".parse::<ScalarRat>(), Err(Error::Domain(_))));
    }
}
