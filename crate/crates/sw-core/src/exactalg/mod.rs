//! Exact scalar and polynomial arithmetic shared by the other modules:
//! arbitrary-precision rationals, integer Chebyshev polynomials in the
//! second-kind basis, and sparse two-variable Laurent polynomials.

pub mod chebyshev;
pub mod laurent;

pub use chebyshev::{chebyshev_product, chebyshev_u, ChebyshevPoly};
pub use laurent::{Coefficient, LaurentPoly1, LaurentPoly2};

use num::{BigInt, BigRational, ToPrimitive};

/// Exact rational scalar. Reduced form with positive denominator is
/// maintained by construction.
pub type Rational = BigRational;

/// Rational from an integer pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Lossy conversion for floating checks and reports.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of leading digits when out of f64 range
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        // (a/b + c/d) - c/d == a/b exactly
        #[test]
        fn rational_add_sub_exact(an in -1_000_000_000i64..1_000_000_000, ad in 1i64..1_000_000_000,
                                  cn in -1_000_000_000i64..1_000_000_000, cd in 1i64..1_000_000_000) {
            let x = rat(an, ad);
            let y = rat(cn, cd);
            prop_assert_eq!(&(&x + &y) - &y, x);
        }

        #[test]
        fn rational_mul_div_exact(an in -1_000_000i64..1_000_000, ad in 1i64..1_000_000,
                                  cn in 1i64..1_000_000, cd in 1i64..1_000_000) {
            let x = rat(an, ad);
            let y = rat(cn, cd);
            prop_assert_eq!(&(&x * &y) / &y, x);
        }
    }

    #[test]
    fn reduced_form() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &BigInt::from(0));
    }
}
