//! Exact rational scalars. Everything in this crate is computed over
//! arbitrary-precision rationals; there is no floating point anywhere.

use num::{BigInt, BigRational};

/// Arbitrary-precision rational, always kept reduced with a positive
/// denominator by the underlying representation.
pub type Rational = BigRational;

/// Builds `numer/denom` from machine integers. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Builds the integer rational `n/1`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `1/2^exp`, the shrinkage scale used by default cap constructions.
pub fn rat_pow2_inv(exp: u32) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(2u8).pow(exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-3, -6), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
    }

    #[test]
    fn pow2() {
        assert_eq!(rat_pow2_inv(0), rat_int(1));
        assert_eq!(rat_pow2_inv(10), rat(1, 1024));
    }
}
