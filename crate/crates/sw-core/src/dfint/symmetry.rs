//! The diagonal compatibility condition on two-variable Laurent polynomials
//! and the Taylor-coefficient families of the expansion generating
//! functions.

use crate::exactalg::{Coefficient, LaurentPoly2};
use num::complex::Complex64;

/// Checks `(1 - 1/rho) (dF/du)|_{u=v} = d/dv (F|_{u=v})` as a Laurent
/// polynomial identity in the diagonal variable; `rho_inv` is `1/rho` in the
/// coefficient ring. The tolerance only matters for floating coefficients.
pub fn is_df_symmetric<C: Coefficient>(f: &LaurentPoly2<C>, rho_inv: &C, tol: f64) -> bool {
    let factor = C::one().add_ref(&rho_inv.neg_ref());
    let lhs = f.partial_u().restrict_diagonal().scale(&factor);
    let rhs = f.restrict_diagonal().derivative();
    lhs.sub(&rhs).is_zero_within(tol)
}

/// Complex-coefficient convenience wrapper with a scale-aware tolerance.
pub fn is_df_symmetric_c(f: &LaurentPoly2<Complex64>, rho: Complex64, tol: f64) -> bool {
    let scale = f.max_coeff_norm().max(1.0);
    is_df_symmetric(f, &(Complex64::new(1.0, 0.0) / rho), tol * scale)
}

/// The generator family `(u-x)^n + (-1/rho)(v-x)^n` of the diagonal-
/// compatible subalgebra at center `x`.
pub fn df_generator(center: i64, n: i64, rho: Complex64) -> LaurentPoly2<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    LaurentPoly2::monomial(center, n, 0, one).add(&LaurentPoly2::monomial(center, 0, n, -one / rho))
}

/// Which expansion family a Taylor coefficient polynomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaylorVariant {
    /// coefficient of `z^k` in `(1 - z/u)^a (1 - z/v)^{a'}` (center 0)
    PlusOne,
    /// coefficient of `z^k` in `(1 - z u)^a (1 - z v)^{a'}` (center 0)
    PlusZero,
    /// the PlusOne family in the variables `(u-1, v-1)` (center 1)
    MinusOne,
    /// coefficient of `z^k` in `(1 - z(1-u))^a (1 - z(1-v))^{a'}` (center 1)
    MinusZero,
    /// mixed families from the generating product with the extra
    /// `(1 - z x1 x2)^{-2}` factor; (i, j) in {(0,1), (1,0)}, sign +/-
    Mixed { i: u8, j: u8, plus: bool },
}

fn binom_c(alpha: Complex64, n: usize) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for i in 0..n {
        acc *= (alpha - i as f64) / (i as f64 + 1.0);
    }
    acc
}

/// The k-th Taylor coefficient polynomial of the requested generating
/// product, as an exact finite Laurent polynomial.
pub fn taylor_factor(
    variant: TaylorVariant,
    k: usize,
    a: Complex64,
    a_prime: Complex64,
) -> LaurentPoly2<Complex64> {
    match variant {
        TaylorVariant::PlusOne
        | TaylorVariant::PlusZero
        | TaylorVariant::MinusOne
        | TaylorVariant::MinusZero => {
            let (center, sign_exp, coeff_sign) = match variant {
                TaylorVariant::PlusOne => (0, -1i64, true),
                TaylorVariant::PlusZero => (0, 1, true),
                TaylorVariant::MinusOne => (1, -1, true),
                TaylorVariant::MinusZero => (1, 1, false),
                _ => unreachable!(),
            };
            let mut out = LaurentPoly2::zero(center);
            for i in 0..=k {
                let j = k - i;
                let mut c = binom_c(a, i) * binom_c(a_prime, j);
                if coeff_sign && (i + j) % 2 == 1 {
                    c = -c;
                }
                out.insert_add(sign_exp * i as i64, sign_exp * j as i64, c);
            }
            out
        }
        TaylorVariant::Mixed { i: vi, j: vj, plus } => {
            // G_k(x1, x2) = sum_{p+q+r=k} binom(a,p)(-1)^p binom(a',q)(-1)^q
            //               (r+1) x1^{p+r} x2^{q+r}
            // with (x1, x2) substituted per variant
            let center = if plus { 0 } else { 1 };
            let mut out = LaurentPoly2::zero(center);
            for p in 0..=k {
                for q in 0..=(k - p) {
                    let r = k - p - q;
                    let mut c = binom_c(a, p) * binom_c(a_prime, q) * (r as f64 + 1.0);
                    if (p + q) % 2 == 1 {
                        c = -c;
                    }
                    // exponent of x1 is p+r, of x2 is q+r
                    let e1 = (p + r) as i64;
                    let e2 = (q + r) as i64;
                    let (ue, ve, extra_sign) = match (vi, vj, plus) {
                        // x1 = u, x2 = v^{-1}
                        (0, 1, true) => (e1, -e2, false),
                        // x1 = u^{-1}, x2 = v
                        (1, 0, true) => (-e1, e2, false),
                        // x1 = 1-u = -(u-1), x2 = (1-v)^{-1}
                        (0, 1, false) => (e1, -e2, (e1 + e2) % 2 == 1),
                        // x1 = (1-u)^{-1}, x2 = 1-v
                        (1, 0, false) => (-e1, e2, (e1 + e2) % 2 == 1),
                        _ => unreachable!("mixed variant needs (i,j) in {{(0,1),(1,0)}}"),
                    };
                    if extra_sign {
                        c = -c;
                    }
                    out.insert_add(ue, ve, c);
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_int, Rational};

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn generators_are_symmetric() {
        for center in [0i64, 1] {
            for n in [-3i64, -1, 1, 2, 5] {
                let rho = c(2.5);
                let f = df_generator(center, n, rho);
                assert!(is_df_symmetric_c(&f, rho, 1e-12), "center={center} n={n}");
            }
        }
    }

    #[test]
    fn exact_rational_variant() {
        // (u)^2 - (1/rho)(v)^2 with rho = 3/2 exactly
        let rho_inv = rat(2, 3);
        let f = LaurentPoly2::<Rational>::monomial(0, 2, 0, rat_int(1))
            .add(&LaurentPoly2::monomial(0, 0, 2, -rho_inv.clone()));
        assert!(is_df_symmetric(&f, &rho_inv, 0.0));
    }

    #[test]
    fn sums_and_products_stay_symmetric() {
        let rho = c(1.7);
        let f = df_generator(0, 1, rho);
        let g = df_generator(0, -2, rho);
        assert!(is_df_symmetric_c(&f.mul(&g), rho, 1e-10));
        assert!(is_df_symmetric_c(&f.add(&g), rho, 1e-10));
        let one = LaurentPoly2::one(0);
        assert!(is_df_symmetric_c(&one.add(&f), rho, 1e-10));
    }

    #[test]
    fn u_plus_v_is_not_symmetric() {
        let one = c(1.0);
        let f = LaurentPoly2::monomial(0, 1, 0, one).add(&LaurentPoly2::monomial(0, 0, 1, one));
        assert!(!is_df_symmetric_c(&f, c(2.5), 1e-12));
        // and the constant is trivially symmetric
        assert!(is_df_symmetric_c(&LaurentPoly2::one(0), c(2.5), 1e-12));
    }

    #[test]
    fn taylor_low_orders() {
        let (a, ap) = (c(-0.4), c(0.16));
        // k = 0 is the constant 1 for every plain variant
        for v in [
            TaylorVariant::PlusOne,
            TaylorVariant::PlusZero,
            TaylorVariant::MinusOne,
            TaylorVariant::MinusZero,
        ] {
            let f = taylor_factor(v, 0, a, ap);
            let terms: Vec<_> = f.terms().collect();
            assert_eq!(terms.len(), 1);
            assert_eq!(*terms[0].0, (0, 0));
            assert!((terms[0].1 - c(1.0)).norm() < 1e-15);
        }
        // PlusOne, k=1: -a u^{-1} - a' v^{-1}
        let f = taylor_factor(TaylorVariant::PlusOne, 1, a, ap);
        let got: Vec<_> = f.terms().map(|(k, v)| (*k, *v)).collect();
        assert_eq!(got.len(), 2);
        assert!((got[0].1 + a).norm() < 1e-15 && got[0].0 == (-1, 0));
        assert!((got[1].1 + ap).norm() < 1e-15 && got[1].0 == (0, -1));
    }

    #[test]
    fn taylor_matches_numeric_derivative() {
        // compare the k-th coefficient against a finite-difference Taylor
        // coefficient of the generating function at sample (u, v)
        let (a, ap) = (c(-0.35), c(0.14));
        let (u, v) = (1.7, 0.6);
        let gen = |z: f64, variant: TaylorVariant| -> f64 {
            match variant {
                TaylorVariant::PlusOne => (1.0 - z / u).powf(a.re) * (1.0 - z / v).powf(ap.re),
                TaylorVariant::PlusZero => (1.0 - z * u).powf(a.re) * (1.0 - z * v).powf(ap.re),
                TaylorVariant::Mixed {
                    i: 0,
                    j: 1,
                    plus: true,
                } => {
                    (1.0 - z * u).powf(a.re)
                        * (1.0 - z / v).powf(ap.re)
                        * (1.0 - z * u / v).powi(-2)
                }
                _ => unreachable!(),
            }
        };
        for variant in [
            TaylorVariant::PlusOne,
            TaylorVariant::PlusZero,
            TaylorVariant::Mixed {
                i: 0,
                j: 1,
                plus: true,
            },
        ] {
            // fourth-order series coefficients via polynomial fit on small z
            let k = 3;
            let h = 5e-3;
            // Richardson through a small Vandermonde solve over 7 samples
            let n = 7;
            let mut vander = vec![vec![0.0; n]; n];
            let mut rhs = vec![0.0; n];
            for (row, idx) in (-3i32..=3).enumerate() {
                let z = idx as f64 * h;
                for (col, vslot) in vander[row].iter_mut().enumerate() {
                    *vslot = z.powi(col as i32);
                }
                rhs[row] = gen(z, variant);
            }
            // gaussian elimination
            for col in 0..n {
                let piv = (col..n)
                    .max_by(|&x, &y| {
                        vander[x][col]
                            .abs()
                            .partial_cmp(&vander[y][col].abs())
                            .unwrap()
                    })
                    .unwrap();
                vander.swap(col, piv);
                rhs.swap(col, piv);
                let p = vander[col][col];
                for x in vander[col].iter_mut() {
                    *x /= p;
                }
                rhs[col] /= p;
                for r in 0..n {
                    if r != col {
                        let f = vander[r][col];
                        for j in 0..n {
                            vander[r][j] -= f * vander[col][j];
                        }
                        rhs[r] -= f * rhs[col];
                    }
                }
            }
            let coeff_k = rhs[k];
            let poly = taylor_factor(variant, k, a, ap);
            let direct = poly.eval_offsets(u, v).re;
            assert!(
                (coeff_k - direct).abs() < 1e-5 * direct.abs().max(1.0),
                "{variant:?}: fd {coeff_k} vs poly {direct}"
            );
        }
    }

    #[test]
    fn plus_one_k1_symmetric_with_matching_rho() {
        let a = c(-0.4);
        let ap = c(0.16);
        let rho = -a / ap;
        let f = taylor_factor(TaylorVariant::PlusOne, 1, a, ap);
        assert!(is_df_symmetric_c(&f, rho, 1e-12));
        // and for a couple of higher orders
        for k in 2..5 {
            let f = taylor_factor(TaylorVariant::PlusZero, k, a, ap);
            assert!(is_df_symmetric_c(&f, rho, 1e-10), "k={k}");
        }
    }
}
