//! Evaluation of the unit-square integral
//! `J[F] = int_{(0,1)^2} u^{a1}(u-1)^{b1} v^{a2}(v-1)^{b2} (u-v+i0)^{-2} F`
//! at diagonal exponent `gamma = 1`, where the two diagonal triangles
//! diverge separately. One integration by parts in the variable whose
//! endpoint exponents are positive, together with the boundary-value split
//! `(x+i0)^{-1} = PV(1/x) - i pi delta(x)`, turns the integral into
//! absolutely convergent principal-value quadratures; this realizes the
//! analytic continuation in `gamma` from the convergent window.

use super::quad::{ts01_c, QuadratureConfig};
use super::DfIntError;
use crate::exactalg::LaurentPoly2;
use num::complex::Complex64;
use std::f64::consts::PI;

fn powc(d: f64, p: Complex64) -> Complex64 {
    if p.im == 0.0 {
        Complex64::new(d.powf(p.re), 0.0)
    } else {
        (p * d.ln()).exp()
    }
}

/// Which variable was integrated by parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IbpSide {
    U,
    V,
}

fn f_offsets(center: i64, x: f64, mx: f64) -> f64 {
    if center == 0 {
        x
    } else {
        -mx
    }
}

/// `J^+_{0,0}[F]` at `gamma = 1`. Requires positive real endpoint exponents
/// on one side and positive corner sums `Re(a1+a2) > 0`, `Re(b1+b2) > 0`.
pub fn j00_gamma_one(
    a1: Complex64,
    b1: Complex64,
    a2: Complex64,
    b2: Complex64,
    poly: Option<&LaurentPoly2<Complex64>>,
    cfg: &QuadratureConfig,
) -> Result<(Complex64, f64, IbpSide), DfIntError> {
    cfg.validate()?;
    let fail = |reason: String| DfIntError::Convergence {
        region: "+00 (gamma = 1)".into(),
        reason,
    };
    if a1.re + a2.re <= 0.0 {
        return Err(fail(format!(
            "corner exponent Re(a1+a2) = {:.4} must exceed 0",
            a1.re + a2.re
        )));
    }
    if b1.re + b2.re <= 0.0 {
        return Err(fail(format!(
            "corner exponent Re(b1+b2) = {:.4} must exceed 0",
            b1.re + b2.re
        )));
    }
    let side = if a2.re > 0.0 && b2.re > 0.0 {
        IbpSide::V
    } else if a1.re > 0.0 && b1.re > 0.0 {
        IbpSide::U
    } else {
        return Err(fail(
            "one variable needs positive real endpoint exponents for the boundary terms to vanish"
                .into(),
        ));
    };
    // swap roles so the IBP variable is always "v"
    let (oa, ob, ia, ib, swapped) = match side {
        IbpSide::V => (a1, b1, a2, b2, false),
        IbpSide::U => (a2, b2, a1, b1, true),
    };
    // F with swapped arguments when integrating by parts in u
    let feval = |du: f64, dv: f64| -> Complex64 {
        match poly {
            None => Complex64::new(1.0, 0.0),
            Some(f) => {
                if swapped {
                    f.eval_offsets(dv, du)
                } else {
                    f.eval_offsets(du, dv)
                }
            }
        }
    };
    let feval_d = |du: f64, dv: f64| -> Complex64 {
        match poly {
            None => Complex64::new(0.0, 0.0),
            Some(f) => {
                if swapped {
                    f.eval_partial_u_offsets(dv, du)
                } else {
                    f.eval_partial_v_offsets(du, dv)
                }
            }
        }
    };
    let center = poly.map_or(0, |f| f.center());
    if let Some(f) = poly {
        // boundary terms need the integrated-by-parts variable's weight
        // times F to vanish at both endpoints; the degree shift acts at the
        // multiplier's center
        let (ibp_min, _) = if swapped {
            f.u_degree_range().unwrap_or((0, 0))
        } else {
            f.v_degree_range().unwrap_or((0, 0))
        };
        let (s0, s1) = if center == 0 {
            (ibp_min as f64, 0.0)
        } else {
            (0.0, ibp_min as f64)
        };
        if ia.re + s0 <= 0.0 || ib.re + s1 <= 0.0 {
            return Err(fail(
                "Laurent multiplier breaks the vanishing boundary terms".into(),
            ));
        }
    }
    // G_v(u, v) with stable endpoint distances (v, 1-v)
    let gv = |du_u: f64, mu_u: f64, v: f64, mv: f64| -> Complex64 {
        let g = powc(v, ia) * powc(mv, ib);
        let du = f_offsets(center, du_u, mu_u);
        let dv = f_offsets(center, v, mv);
        g * ((ia / v - ib / mv) * feval(du, dv) + feval_d(du, dv))
    };
    let run = |level: usize| -> Complex64 {
        let mut outer_re = Complex64::new(0.0, 0.0);
        let mut outer_im = Complex64::new(0.0, 0.0);
        outer_re += ts01_c(level, &mut |u, mu| {
            let f_u = powc(u, oa) * powc(mu, ob);
            let g_diag = gv(u, mu, u, mu);
            // (0, u): v = u w
            // the divided difference cancels near the diagonal; nodes with
            // negligible separation contribute below machine level and are
            // dropped to keep the division finite
            let low = ts01_c(level, &mut |w, mw| {
                let v = u * w;
                if v < 1e-300 || mw < 1e-60 {
                    return Complex64::new(0.0, 0.0);
                }
                (gv(u, mu, v, mu + u * mw) - g_diag) / mw
            });
            // (u, 1): v = u + mu w
            let high = -ts01_c(level, &mut |w, mw| {
                let mv = mu * mw;
                if mv < 1e-300 || w < 1e-60 {
                    return Complex64::new(0.0, 0.0);
                }
                (gv(u, mu, u + mu * w, mv) - g_diag) / w
            });
            let pv = low + high + g_diag * (u / mu).ln();
            -f_u * pv
        });
        outer_im += ts01_c(level, &mut |u, mu| {
            let f_u = powc(u, oa) * powc(mu, ob);
            f_u * gv(u, mu, u, mu)
        }) * Complex64::new(0.0, PI);
        outer_re + outer_im
    };
    let coarse = run(cfg.levels - 1);
    let fine = run(cfg.levels);
    let est = (fine - coarse).norm();
    if est > 0.02 * fine.norm().max(1e-300) && est > 1e-12 {
        return Err(DfIntError::Accuracy { estimate: est });
    }
    Ok((fine, est, side))
}
