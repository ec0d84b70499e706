use super::{falling, FuchsianError, FuchsianOperator, SingularPoint};
use crate::exactalg::{rat_int, rat_to_f64, Rational};
use num::complex::Complex64;
use num::{ToPrimitive, Zero};

/// A series solution `x^rho sum_k c_k x^k` in the local variable `x` at a
/// regular singular point (x = z at 0, x = 1-z at 1), normalized by c_0 = 1.
/// `log_residual` records the obstruction encountered at a resonant order
/// (zero iff the solution stays log-free); the free resonant coefficient is
/// fixed to 0.
#[derive(Clone, Debug)]
pub struct FrobeniusSolution {
    pub base_point: SingularPoint,
    pub exponent: Rational,
    pub coefficients: Vec<Rational>,
    pub log_residual: Rational,
    pub resonant_order: Option<usize>,
}

/// Solve the coefficient recurrence at `point` in {0, 1}. The operator is
/// invariant under z <-> 1-z, so both points share one recurrence in the
/// local variable.
pub fn frobenius_series(
    op: &FuchsianOperator,
    point: SingularPoint,
    exponent: &Rational,
    n_terms: usize,
) -> Result<FrobeniusSolution, FuchsianError> {
    if point == SingularPoint::Infinity {
        return Err(FuchsianError::NotAnExponent(
            "series construction is local to 0 or 1".into(),
        ));
    }
    if !op.indicial_at_zero(exponent).is_zero() {
        return Err(FuchsianError::NotAnExponent(format!("{exponent}")));
    }
    let g = |i: usize, x: &Rational| -> Rational {
        let mut acc = Rational::zero();
        for j in 0..5 {
            let c = op.r_coeff(j, i);
            if !c.is_zero() {
                acc += falling(x, j) * c;
            }
        }
        acc
    };
    let mut coeffs = vec![Rational::from_integer(1.into())];
    let mut resonant_order = None;
    for n in 1..=n_terms {
        let xk = exponent + rat_int(n as i64);
        let mut rhs = Rational::zero();
        for k in n.saturating_sub(4)..n {
            if coeffs[k].is_zero() {
                continue;
            }
            rhs += &coeffs[k] * g(n - k, &(exponent + rat_int(k as i64)));
        }
        rhs = -rhs;
        let f = op.indicial_at_zero(&xk);
        if f.is_zero() {
            resonant_order = Some(n);
            if !rhs.is_zero() {
                return Err(FuchsianError::LogarithmicSolution {
                    exponent: format!("{exponent}"),
                    order: n,
                    residual: format!("{rhs}"),
                });
            }
            coeffs.push(Rational::zero());
        } else {
            coeffs.push(rhs / f);
        }
    }
    Ok(FrobeniusSolution {
        base_point: point,
        exponent: exponent.clone(),
        coefficients: coeffs,
        log_residual: Rational::zero(),
        resonant_order,
    })
}

impl FrobeniusSolution {
    /// Exact scaled derivative data `D_j = phi^{(j)}(x0) / x0^{rho - j}`
    /// at a rational point of the local variable, for j = 0..=3:
    /// `D_j = sum_k c_k (rho + k)_fall_j x0^k`.
    pub fn scaled_derivatives_exact(&self, x0: &Rational) -> [Rational; 4] {
        let mut out = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        let mut xpow = Rational::from_integer(1.into());
        for (k, c) in self.coefficients.iter().enumerate() {
            if !c.is_zero() {
                let base = &xpow * c;
                for (j, slot) in out.iter_mut().enumerate() {
                    *slot += &base * falling(&(&self.exponent + rat_int(k as i64)), j);
                }
            }
            xpow *= x0;
        }
        out
    }

    /// Heuristic truncation-tail estimate at |x| = radius: magnitude of the
    /// last few retained terms.
    pub fn tail_estimate(&self, radius: f64) -> f64 {
        let n = self.coefficients.len();
        let mut worst: f64 = 0.0;
        for k in n.saturating_sub(3)..n {
            let c = rat_to_f64(&self.coefficients[k]).abs();
            worst = worst.max(c * radius.powi(k as i32));
        }
        worst
    }
}

/// Value and derivatives (orders 0..=n_der <= 3) of the truncated series at
/// a complex point of the *global* variable z. The branch of the local
/// power is principal, real-positive on (0,1).
pub fn evaluate_solution(
    sol: &FrobeniusSolution,
    z: Complex64,
    n_der: usize,
) -> Result<(Vec<Complex64>, f64), FuchsianError> {
    assert!(n_der <= 3);
    let (x, dsign): (Complex64, f64) = match sol.base_point {
        SingularPoint::Zero => (z, 1.0),
        SingularPoint::One => (Complex64::new(1.0, 0.0) - z, -1.0),
        SingularPoint::Infinity => unreachable!(),
    };
    if x.norm() >= 1.0 {
        return Err(FuchsianError::OutsideDisk(x.norm()));
    }
    let rho = rat_to_f64(&sol.exponent);
    let lnx = x.ln();
    let mut out = vec![Complex64::new(0.0, 0.0); n_der + 1];
    for (k, c) in sol.coefficients.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cf = c.to_f64().unwrap_or(f64::NAN);
        for (j, slot) in out.iter_mut().enumerate() {
            let mut fall = 1.0;
            for i in 0..j {
                fall *= rho + k as f64 - i as f64;
            }
            // d^j/dx^j x^{rho+k} = fall * x^{rho+k-j}
            *slot += cf * fall * ((rho + k as f64 - j as f64) * lnx).exp();
        }
    }
    // derivatives in z pick up (-1)^j at base point 1
    for (j, slot) in out.iter_mut().enumerate() {
        *slot *= Complex64::new(dsign.powi(j as i32), 0.0);
    }
    let tail = sol.tail_estimate(x.norm());
    Ok((out, tail))
}
