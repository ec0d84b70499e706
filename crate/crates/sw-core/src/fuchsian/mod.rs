//! The fourth-order Fuchsian operator with regular singular points at
//! 0, 1 and infinity: exact construction, indicial exponents, Frobenius
//! series (including resonant cases) and connection matrices.

mod connection;
mod frobenius;

pub use connection::{
    connection_matrix, cross_ratio_residual, exchange_matrix, exchange_matrix_is_involution,
    reduced_subspace_check, reference_connection_matrix_exact, reference_connection_matrix_f64,
    reference_matrix_is_involution, CLaurent, ConnectionResult, ExponentAssignment, GaugeChoice,
};
pub use frobenius::{evaluate_solution, frobenius_series, FrobeniusSolution};

use crate::exactalg::{rat, rat_int, Rational};
use crate::repdata::{riemann_exponents, RepDataError};
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FuchsianError {
    #[error(transparent)]
    RepData(#[from] RepDataError),
    #[error("indicial polynomial at {point} has a non-rational root; transcription bug")]
    NonRationalIndicialRoot { point: String },
    #[error("exponent {0} is not an indicial root at this point")]
    NotAnExponent(String),
    #[error("logarithmic obstruction {residual} at order {order} for exponent {exponent}")]
    LogarithmicSolution {
        exponent: String,
        order: usize,
        residual: String,
    },
    #[error("evaluation point outside the convergence disk (|local| = {0})")]
    OutsideDisk(f64),
    #[error("matching point must lie strictly inside (0,1), got {0}")]
    BadMatchingPoint(f64),
    #[error("ill-conditioned or singular matching system: {0}")]
    IllConditioned(String),
}

/// Dense polynomial over rationals, index = power.
pub(crate) type RatPoly = Vec<Rational>;

pub(crate) fn poly_mul(a: &[Rational], b: &[Rational]) -> RatPoly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_scale(a: &[Rational], k: &Rational) -> RatPoly {
    a.iter().map(|c| c * k).collect()
}

/// The operator `d^4 + p3/(z(z-1)) d^3 + p2/(z^2(z-1)^2) d^2
/// + p1/(z^3(z-1)^3) d + p0/(z^4(z-1)^4)`, stored both through the numerator
/// polynomials `p0..p3` and the cleared form `sum_j z^j r_j(z) d^j`.
#[derive(Clone, Debug)]
pub struct FuchsianOperator {
    pub m: usize,
    /// numerators [p0, p1, p2, p3]
    pub p: [RatPoly; 4],
    /// cleared coefficients: q_j(z) = z^j r_j(z), j = 0..4
    pub(crate) r: [RatPoly; 5],
}

/// Transcription of the displayed coefficients at family parameter `m`.
pub fn build_operator(m: usize) -> Result<FuchsianOperator, FuchsianError> {
    if m < 1 {
        return Err(RepDataError::InvalidParameter("m must be >= 1".into()).into());
    }
    let mi = m as i64;
    let t = 2 * mi + 1;
    let t2 = t * t;
    let p0 = poly_scale(
        &[
            rat_int(3 * mi.pow(4) + 12 * mi.pow(3) + 2 * mi * mi - 4 * mi - 1),
            rat_int(-16 * mi.pow(3) + 8 * mi * mi + 16 * mi + 4),
            rat_int(16 * mi.pow(3) - 8 * mi * mi - 16 * mi - 4),
        ],
        &rat(3 * mi.pow(4), t2 * t2),
    );
    let p1 = poly_scale(
        &[
            rat_int(6 * mi.pow(6) + 8 * mi.pow(5) + 12 * mi.pow(4) + 8 * mi.pow(3) + 2 * mi * mi),
            rat_int(-12 * mi.pow(6) - 8 * mi.pow(5) + 12 * mi.pow(3) + 13 * mi * mi + 6 * mi + 1),
            rat_int(-24 * mi.pow(5) - 72 * mi.pow(4) - 84 * mi.pow(3) - 51 * mi * mi - 18 * mi - 3),
            rat_int(16 * mi.pow(5) + 48 * mi.pow(4) + 56 * mi.pow(3) + 34 * mi * mi + 12 * mi + 2),
        ],
        &rat(2, t2 * t),
    );
    let p2 = poly_scale(
        &[
            rat_int(-mi.pow(4) + 2 * mi.pow(3) + 5 * mi * mi + 4 * mi + 1),
            rat_int(-8 * mi.pow(4) - 32 * mi.pow(3) - 44 * mi * mi - 28 * mi - 7),
            rat_int(8 * mi.pow(4) + 32 * mi.pow(3) + 44 * mi * mi + 28 * mi + 7),
        ],
        &rat(2, t2),
    );
    let p3 = poly_scale(&[rat_int(-1), rat_int(2)], &rat(4 * (mi + 1) * (mi + 1), t));

    let zm1 = vec![rat_int(-1), rat_int(1)];
    let zm1_2 = poly_mul(&zm1, &zm1);
    let zm1_3 = poly_mul(&zm1_2, &zm1);
    let zm1_4 = poly_mul(&zm1_3, &zm1);
    let r = [
        p0.clone(),
        poly_mul(&zm1, &p1),
        poly_mul(&zm1_2, &p2),
        poly_mul(&zm1_3, &p3),
        zm1_4,
    ];
    Ok(FuchsianOperator {
        m,
        p: [p0, p1, p2, p3],
        r,
    })
}

impl FuchsianOperator {
    pub(crate) fn r_coeff(&self, j: usize, i: usize) -> Rational {
        self.r[j].get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Indicial polynomial at 0 (equals the one at 1 by the z <-> 1-z
    /// symmetry of the operator), evaluated at `x`.
    pub(crate) fn indicial_at_zero(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for j in 0..5 {
            acc += falling(x, j) * self.r_coeff(j, 0);
        }
        acc
    }

    fn indicial_at_infinity(&self, lam: &Rational) -> Rational {
        // sum_j (-1)^j lam(lam+1)...(lam+j-1) * [z^{4+j}] q_j
        let mut acc = Rational::zero();
        for j in 0..5 {
            let mut rising = Rational::one();
            for i in 0..j {
                rising *= lam + rat_int(i as i64);
            }
            let lead = self.r_coeff(j, 4);
            let sign = if j % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            acc += sign * rising * lead;
        }
        acc
    }
}

pub(crate) fn falling(x: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j {
        acc *= x - rat_int(i as i64);
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SingularPoint {
    Zero,
    One,
    Infinity,
}

/// The four indicial roots at a singular point, found by exact candidate
/// testing against the scheme values and certified by exact factorization
/// of the quartic indicial polynomial.
pub fn indicial_exponents(
    op: &FuchsianOperator,
    point: SingularPoint,
) -> Result<[Rational; 4], FuchsianError> {
    let scheme = riemann_exponents(op.m)?;
    let (candidates, eval): (&[Rational; 4], Box<dyn Fn(&Rational) -> Rational + '_>) = match point
    {
        SingularPoint::Zero => (&scheme.exponents_at_0, Box::new(|x| op.indicial_at_zero(x))),
        SingularPoint::One => (&scheme.exponents_at_1, Box::new(|x| op.indicial_at_zero(x))),
        SingularPoint::Infinity => (
            &scheme.exponents_at_infinity,
            Box::new(|x| op.indicial_at_infinity(x)),
        ),
    };
    for c in candidates.iter() {
        if !eval(c).is_zero() {
            return Err(FuchsianError::NonRationalIndicialRoot {
                point: format!("{point:?}"),
            });
        }
    }
    // certify: the quartic equals lead * prod (x - rho_i), checked at a
    // fifth point
    let lead = match point {
        SingularPoint::Zero | SingularPoint::One => op.r_coeff(4, 0),
        SingularPoint::Infinity => op.r_coeff(4, 4),
    };
    let probe = rat(7, 3) + candidates.iter().fold(Rational::zero(), |a, b| a + b.abs());
    let mut prod = lead;
    for c in candidates.iter() {
        prod *= &probe - c;
    }
    if eval(&probe) != prod {
        return Err(FuchsianError::NonRationalIndicialRoot {
            point: format!("{point:?}"),
        });
    }
    Ok(candidates.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_values() {
        let op = build_operator(1).unwrap();
        // p3(z) = (16/3)(2z - 1)
        assert_eq!(op.p[3], vec![rat(-16, 3), rat(32, 3)]);
        for m in 1..6 {
            let op = build_operator(m).unwrap();
            // p3(1/2) = 0
            let half = rat(1, 2);
            let v = &op.p[3][0] + &(&op.p[3][1] * &half);
            assert!(v.is_zero());
        }
    }

    #[test]
    fn indicial_matches_scheme() {
        for m in 1..=10 {
            let op = build_operator(m).unwrap();
            let scheme = riemann_exponents(m).unwrap();
            assert_eq!(
                indicial_exponents(&op, SingularPoint::Zero).unwrap(),
                scheme.exponents_at_0
            );
            assert_eq!(
                indicial_exponents(&op, SingularPoint::One).unwrap(),
                scheme.exponents_at_1
            );
            assert_eq!(
                indicial_exponents(&op, SingularPoint::Infinity).unwrap(),
                scheme.exponents_at_infinity
            );
        }
    }

    #[test]
    fn operator_is_symmetric_under_z_to_one_minus_z() {
        // substituting z -> 1-z and d -> -d must reproduce the cleared
        // coefficients q_j(z) = z^j r_j(z) up to the induced sign
        for m in 1..5 {
            let op = build_operator(m).unwrap();
            for j in 0..5usize {
                // q_j(1-z) * (-1)^j should equal q_j(z) as polynomials
                let qj = {
                    let mut zpow = vec![Rational::zero(); j + 1];
                    zpow[j] = Rational::one();
                    poly_mul(&zpow, &op.r[j])
                };
                // compose with 1-z
                let mut comp = vec![Rational::zero(); qj.len()];
                for (i, c) in qj.iter().enumerate() {
                    // (1-z)^i
                    let mut pw = vec![Rational::one()];
                    for _ in 0..i {
                        pw = poly_mul(&pw, &[rat_int(1), rat_int(-1)]);
                    }
                    for (k, x) in pw.iter().enumerate() {
                        comp[k] += c * x;
                    }
                }
                let sign = if j % 2 == 0 { rat_int(1) } else { rat_int(-1) };
                let comp: Vec<_> = comp.iter().map(|c| c * &sign).collect();
                assert_eq!(comp, qj, "m={m}, j={j}");
            }
        }
    }
}
