//! Exact scalars: arbitrary-precision rationals, quadratic surds `a + b√d`,
//! truncated decimal rendering and periodic continued fractions.

mod cont_frac;
mod surd;

pub use cont_frac::ContinuedFraction;
pub use surd::{QuadraticSurd, SurdOp, MAX_DECIMAL_DIGITS};

use num_bigint::BigInt;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num / den` as a reduced [`Rational`].
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Splits `d` into `(outer, inner)` with `d = outer² · inner` and `inner`
/// square-free. Trial division up to `√d`.
pub fn square_free_split(d: u64) -> (u64, u64) {
    if d == 0 {
        return (0, 0);
    }
    let mut rest = d;
    let mut outer = 1u64;
    let mut inner = 1u64;
    let mut p = 2u64;
    while (p as u128) * (p as u128) <= rest as u128 {
        let mut exp = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            exp += 1;
        }
        outer *= p.pow(exp / 2);
        if exp % 2 == 1 {
            inner *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outer, inner * rest)
}

/// Returns `Some(s)` when `n = s²`.
pub fn exact_sqrt_u128(n: u128) -> Option<u128> {
    let s = num_integer::Roots::sqrt(&n);
    (s * s == n).then_some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_split_extracts_squares() {
        assert_eq!(square_free_split(0), (0, 0));
        assert_eq!(square_free_split(1), (1, 1));
        assert_eq!(square_free_split(12), (2, 3));
        assert_eq!(square_free_split(9), (3, 1));
        assert_eq!(square_free_split(72), (6, 2));
        assert_eq!(square_free_split(97), (1, 97));
        assert_eq!(square_free_split(121 * 7), (11, 7));
    }

    #[test]
    fn ratio_is_reduced() {
        let r = ratio(2, -4);
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt_u128(81), Some(9));
        assert_eq!(exact_sqrt_u128(21), None);
        assert_eq!(exact_sqrt_u128(0), Some(0));
    }
}
