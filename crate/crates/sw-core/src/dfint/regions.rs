use super::quad::{nodes, QuadratureConfig};
use super::DfIntError;
use crate::exactalg::LaurentPoly2;
use num::complex::Complex64;
use std::f64::consts::PI;

/// One axis range whose endpoints come from the singular set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Interval {
    Fin(f64, f64),
    PlusInf(f64),
    MinusInf(f64),
}

impl Interval {
    fn is_infinite(&self) -> bool {
        !matches!(self, Interval::Fin(..))
    }
    fn right_end(&self) -> f64 {
        match *self {
            Interval::Fin(_, hi) => hi,
            Interval::MinusInf(b) => b,
            Interval::PlusInf(_) => f64::INFINITY,
        }
    }
    fn left_end(&self) -> f64 {
        match *self {
            Interval::Fin(lo, _) => lo,
            Interval::PlusInf(a) => a,
            Interval::MinusInf(_) => f64::NEG_INFINITY,
        }
    }
}

/// Sampled axis coordinate. Distances to the singular points are carried
/// together with their logarithms (computed from the stable construction,
/// so deep-tail nodes neither underflow nor lose the singular scale), and
/// the jacobian is kept in log form.
#[derive(Clone, Debug)]
struct AxisPoint {
    dist: [f64; 3],
    ln_dist: [f64; 3],
    sign: [f64; 3],
    /// distance to the interval's own anchor endpoints
    off_lo: f64,
    ln_off_lo: f64,
    off_hi: f64,
    ln_off_hi: f64,
    ln_jac: f64,
}

impl Default for AxisPoint {
    fn default() -> Self {
        AxisPoint {
            dist: [0.0; 3],
            ln_dist: [0.0; 3],
            sign: [1.0; 3],
            off_lo: 0.0,
            ln_off_lo: 0.0,
            off_hi: 0.0,
            ln_off_hi: 0.0,
            ln_jac: 0.0,
        }
    }
}

/// `ln(base + small)` where `small` is given by its parts `p * q`; exact in
/// log space when `base` vanishes.
fn ln_shifted(base: f64, p: f64, ln_p: f64, q: f64, ln_q: f64) -> f64 {
    if base == 0.0 {
        ln_p + ln_q
    } else {
        (base + p * q).ln()
    }
}

fn axis_point(iv: &Interval, sing: &[f64], t: f64, mt: f64) -> AxisPoint {
    let mut pt = AxisPoint::default();
    let (ln_t, ln_mt) = (t.ln(), mt.ln());
    match *iv {
        Interval::Fin(lo, hi) => {
            let len = hi - lo;
            let ln_len = len.ln();
            pt.off_lo = len * t;
            pt.ln_off_lo = ln_len + ln_t;
            pt.off_hi = len * mt;
            pt.ln_off_hi = ln_len + ln_mt;
            pt.ln_jac = ln_len;
            for (k, &s) in sing.iter().enumerate() {
                if s <= lo {
                    pt.dist[k] = (lo - s) + pt.off_lo;
                    pt.ln_dist[k] = ln_shifted(lo - s, len, ln_len, t, ln_t);
                    pt.sign[k] = 1.0;
                } else {
                    pt.dist[k] = (s - hi) + pt.off_hi;
                    pt.ln_dist[k] = ln_shifted(s - hi, len, ln_len, mt, ln_mt);
                    pt.sign[k] = -1.0;
                }
            }
        }
        Interval::PlusInf(a) => {
            let d = mt / t;
            let ln_d = ln_mt - ln_t;
            pt.off_lo = d;
            pt.ln_off_lo = ln_d;
            pt.off_hi = f64::INFINITY;
            pt.ln_off_hi = f64::INFINITY;
            pt.ln_jac = -2.0 * ln_t;
            for (k, &s) in sing.iter().enumerate() {
                pt.dist[k] = (a - s) + d;
                pt.ln_dist[k] = ln_shifted(a - s, mt, ln_mt, 1.0 / t, -ln_t);
                pt.sign[k] = 1.0;
            }
        }
        Interval::MinusInf(b) => {
            let d = mt / t;
            let ln_d = ln_mt - ln_t;
            pt.off_lo = f64::INFINITY;
            pt.ln_off_lo = f64::INFINITY;
            pt.off_hi = d;
            pt.ln_off_hi = ln_d;
            pt.ln_jac = -2.0 * ln_t;
            for (k, &s) in sing.iter().enumerate() {
                pt.dist[k] = (s - b) + d;
                pt.ln_dist[k] = ln_shifted(s - b, mt, ln_mt, 1.0 / t, -ln_t);
                pt.sign[k] = -1.0;
            }
        }
    }
    pt
}

/// Power-product integrand
/// `prod_k |u-s_k|^{ue_k} |v-s_k|^{ve_k} * |u-v|^{-2 gamma} * F(u,v)` in the
/// positive convention. Callers apply the i0 phase `e^{-2 i pi gamma}` on
/// the `u < v` parts where the prescription asks for it.
pub struct DfIntegrand<'a> {
    pub sing: Vec<f64>,
    pub u_exps: Vec<Complex64>,
    pub v_exps: Vec<Complex64>,
    pub gamma: Complex64,
    pub poly: Option<&'a LaurentPoly2<Complex64>>,
    pub poly_center_idx: usize,
}

impl DfIntegrand<'_> {
    /// All power factors, both jacobians and the quadrature weight,
    /// accumulated in log space so that strong-but-integrable corner values
    /// never leave the floating range before weighting.
    fn eval_log(&self, u: &AxisPoint, v: &AxisPoint, ln_absdiff: f64, ln_weight: f64) -> Complex64 {
        let mut lm = Complex64::new(u.ln_jac + v.ln_jac + ln_weight, 0.0);
        for k in 0..self.sing.len() {
            let (ue, ve) = (self.u_exps[k], self.v_exps[k]);
            if ue != Complex64::new(0.0, 0.0) {
                lm += ue * u.ln_dist[k];
            }
            if ve != Complex64::new(0.0, 0.0) {
                lm += ve * v.ln_dist[k];
            }
        }
        if self.gamma != Complex64::new(0.0, 0.0) {
            lm -= 2.0 * self.gamma * ln_absdiff;
        }
        let mag = lm.exp();
        if mag == Complex64::new(0.0, 0.0) || !mag.is_finite() {
            return Complex64::new(0.0, 0.0);
        }
        match self.poly {
            None => mag,
            Some(f) => {
                let k = self.poly_center_idx;
                mag * f.eval_offsets(u.sign[k] * u.dist[k], v.sign[k] * v.dist[k])
            }
        }
    }

    /// The i0 phase on the `u < v` side.
    pub fn i0_phase(&self) -> Complex64 {
        (Complex64::new(0.0, -2.0 * PI) * self.gamma).exp()
    }
}

fn for_each_node_pair(level: usize, f: &mut dyn FnMut(f64, f64, f64)) {
    for (i, n) in nodes(level).iter().enumerate() {
        if i == 0 {
            f(0.5, 0.5, n.ln_w);
        } else {
            f(n.d, 1.0 - n.d, n.ln_w);
            f(1.0 - n.d, n.d, n.ln_w);
        }
    }
}

/// Rectangle with disjoint u- and v-intervals, positive convention.
/// Returns the value and whether `u < v` holds on the region.
fn rect_positive(
    level: usize,
    integrand: &DfIntegrand,
    u_iv: &Interval,
    v_iv: &Interval,
) -> (Complex64, bool) {
    let u_left = u_iv.right_end() <= v_iv.left_end();
    let gap = if u_left {
        v_iv.left_end() - u_iv.right_end()
    } else {
        u_iv.left_end() - v_iv.right_end()
    };
    let mut acc = Complex64::new(0.0, 0.0);
    for_each_node_pair(level, &mut |t, mt, ln_wu| {
        let up = axis_point(u_iv, &integrand.sing, t, mt);
        let mut inner = Complex64::new(0.0, 0.0);
        for_each_node_pair(level, &mut |w, mw, ln_wv| {
            let vp = axis_point(v_iv, &integrand.sing, w, mw);
            let ln_absdiff = if u_left {
                (up.off_hi + gap + vp.off_lo).ln()
            } else {
                (vp.off_hi + gap + up.off_lo).ln()
            };
            inner += integrand.eval_log(&up, &vp, ln_absdiff, ln_wu + ln_wv);
        });
        acc += inner;
    });
    (acc, u_left)
}

/// The two diagonal triangles of a square region, positive convention:
/// `(lower, upper) = (integral over {v < u}, integral over {u < v})`.
fn triangles_positive(
    level: usize,
    integrand: &DfIntegrand,
    iv: &Interval,
) -> (Complex64, Complex64) {
    let sing = &integrand.sing;
    let one_triangle = |outer_is_u: bool| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for_each_node_pair(level, &mut |t, mt, ln_wo| {
            let outer = axis_point(iv, sing, t, mt);
            let mut inner_acc = Complex64::new(0.0, 0.0);
            for_each_node_pair(level, &mut |w, mw, ln_wi| {
                let (ln_w, ln_mw) = (w.ln(), mw.ln());
                // inner point strictly between the interval anchor and the
                // outer point; always the smaller coordinate
                let mut inner = AxisPoint::default();
                let ln_absdiff;
                match *iv {
                    Interval::Fin(lo, hi) => {
                        let du = outer.off_lo;
                        let ln_du = outer.ln_off_lo;
                        inner.off_lo = du * w;
                        inner.ln_off_lo = ln_du + ln_w;
                        inner.off_hi = outer.off_hi + du * mw;
                        inner.ln_off_hi = (outer.off_hi + du * mw).ln();
                        inner.ln_jac = ln_du; // dv = du dw
                        ln_absdiff = ln_du + ln_mw;
                        for (k, &s) in sing.iter().enumerate() {
                            if s <= lo {
                                inner.dist[k] = (lo - s) + inner.off_lo;
                                inner.ln_dist[k] = ln_shifted(lo - s, du, ln_du, w, ln_w);
                                inner.sign[k] = 1.0;
                            } else {
                                inner.dist[k] = (s - hi) + inner.off_hi;
                                inner.ln_dist[k] = if s == hi {
                                    inner.off_hi.ln()
                                } else {
                                    inner.dist[k].ln()
                                };
                                inner.sign[k] = -1.0;
                            }
                        }
                    }
                    Interval::PlusInf(a) => {
                        let du = outer.off_lo;
                        let ln_du = outer.ln_off_lo;
                        inner.off_lo = du * w;
                        inner.ln_off_lo = ln_du + ln_w;
                        inner.off_hi = f64::INFINITY;
                        inner.ln_off_hi = f64::INFINITY;
                        inner.ln_jac = ln_du;
                        ln_absdiff = ln_du + ln_mw;
                        for (k, &s) in sing.iter().enumerate() {
                            inner.dist[k] = (a - s) + inner.off_lo;
                            inner.ln_dist[k] = ln_shifted(a - s, du, ln_du, w, ln_w);
                            inner.sign[k] = 1.0;
                        }
                    }
                    Interval::MinusInf(b) => {
                        // inner between -infinity and the outer point
                        let du = outer.off_hi;
                        let ln_du = outer.ln_off_hi;
                        let d = du / w;
                        let ln_d = ln_du - ln_w;
                        inner.off_lo = f64::INFINITY;
                        inner.ln_off_lo = f64::INFINITY;
                        inner.off_hi = d;
                        inner.ln_off_hi = ln_d;
                        inner.ln_jac = ln_du - 2.0 * ln_w; // dv = du/w^2 dw
                        ln_absdiff = ln_du + ln_mw - ln_w;
                        for (k, &s) in sing.iter().enumerate() {
                            inner.dist[k] = (s - b) + d;
                            inner.ln_dist[k] = ln_shifted(s - b, du, ln_du, 1.0 / w, -ln_w);
                            inner.sign[k] = -1.0;
                        }
                    }
                }
                let val = if outer_is_u {
                    integrand.eval_log(&outer, &inner, ln_absdiff, ln_wo + ln_wi)
                } else {
                    integrand.eval_log(&inner, &outer, ln_absdiff, ln_wo + ln_wi)
                };
                inner_acc += val;
            });
            acc += inner_acc;
        });
        acc
    };
    // the inner coordinate always sits below the outer one, so outer_is_u
    // selects the {v < u} triangle
    (one_triangle(true), one_triangle(false))
}

/// Product-rule evaluation of a square without the diagonal split; samples
/// the i0 phase from the coordinate ordering. Diagnostic only.
fn square_unsplit(
    level: usize,
    integrand: &DfIntegrand,
    iv: &Interval,
    phase: Complex64,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for_each_node_pair(level, &mut |t, mt, ln_wu| {
        let up = axis_point(iv, &integrand.sing, t, mt);
        for_each_node_pair(level, &mut |w, mw, ln_wv| {
            let vp = axis_point(iv, &integrand.sing, w, mw);
            // compare positions through the anchored offsets
            let (du, dv, flipped) = match iv {
                Interval::MinusInf(_) => (up.off_hi, vp.off_hi, true),
                _ => (up.off_lo, vp.off_lo, false),
            };
            if du == dv && integrand.gamma != Complex64::new(0.0, 0.0) {
                return;
            }
            let u_less_v = (du < dv) ^ flipped;
            let val = integrand.eval_log(&up, &vp, (du - dv).abs().ln(), ln_wu + ln_wv);
            acc += if u_less_v { val * phase } else { val };
        });
    });
    acc
}

#[derive(Clone, Copy, Debug)]
pub struct DfValue {
    pub value: Complex64,
    pub error_estimate: f64,
}

/// Integrate the i0-prescribed integrand over an interval pair: squares are
/// split along the diagonal with the phase on the `u < v` triangle, and
/// rectangles carry the phase when the whole region has `u < v`. The error
/// estimate compares the two highest levels.
pub fn integrate_region(
    cfg: &QuadratureConfig,
    integrand: &DfIntegrand,
    u_iv: &Interval,
    v_iv: &Interval,
) -> Result<DfValue, DfIntError> {
    cfg.validate()?;
    let phase = integrand.i0_phase();
    let run = |level: usize| -> Complex64 {
        if u_iv == v_iv {
            if !cfg.split_diagonal {
                // diagnostic mode: plain product rule on the square; only
                // adequate when the diagonal factor is absent
                return square_unsplit(level, integrand, u_iv, phase);
            }
            let (lower, upper) = triangles_positive(level, integrand, u_iv);
            lower + phase * upper
        } else {
            let (val, u_less_v) = rect_positive(level, integrand, u_iv, v_iv);
            if u_less_v {
                val * phase
            } else {
                val
            }
        }
    };
    let coarse = run(cfg.levels - 1);
    let fine = run(cfg.levels);
    let est = (fine - coarse).norm();
    if est > 0.02 * fine.norm().max(1e-300) && est > 1e-12 {
        return Err(DfIntError::Accuracy { estimate: est });
    }
    Ok(DfValue {
        value: fine,
        error_estimate: est,
    })
}

/// Positive-convention rectangle value (no i0 phase) with a two-level error
/// estimate.
pub fn rect_positive_checked(
    cfg: &QuadratureConfig,
    integrand: &DfIntegrand,
    u_iv: &Interval,
    v_iv: &Interval,
) -> Result<DfValue, DfIntError> {
    cfg.validate()?;
    let (coarse, _) = rect_positive(cfg.levels - 1, integrand, u_iv, v_iv);
    let (fine, _) = rect_positive(cfg.levels, integrand, u_iv, v_iv);
    let est = (fine - coarse).norm();
    if est > 0.02 * fine.norm().max(1e-300) && est > 1e-12 {
        return Err(DfIntError::Accuracy { estimate: est });
    }
    Ok(DfValue {
        value: fine,
        error_estimate: est,
    })
}

/// Positive-convention diagonal triangles with a two-level error estimate.
pub fn triangles_positive_checked(
    cfg: &QuadratureConfig,
    integrand: &DfIntegrand,
    iv: &Interval,
) -> Result<(DfValue, DfValue), DfIntError> {
    cfg.validate()?;
    let (cl, cu) = triangles_positive(cfg.levels - 1, integrand, iv);
    let (fl, fu) = triangles_positive(cfg.levels, integrand, iv);
    let est_l = (fl - cl).norm();
    let est_u = (fu - cu).norm();
    for (f, e) in [(fl, est_l), (fu, est_u)] {
        if e > 0.02 * f.norm().max(1e-300) && e > 1e-12 {
            return Err(DfIntError::Accuracy { estimate: e });
        }
    }
    Ok((
        DfValue {
            value: fl,
            error_estimate: est_l,
        },
        DfValue {
            value: fu,
            error_estimate: est_u,
        },
    ))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegionKind {
    /// unit-interval geometry, singular points {0, 1}
    J,
    /// geometry over {0, z2, z1}
    I,
}

/// A box region label `(sign, i, j)` in one of the two geometries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RegionSpec {
    pub kind: RegionKind,
    pub sign: Sign,
    pub i: u8,
    pub j: u8,
}

impl RegionSpec {
    pub fn j_region(sign: Sign, i: u8, j: u8) -> Self {
        RegionSpec {
            kind: RegionKind::J,
            sign,
            i,
            j,
        }
    }
    pub fn i_region(sign: Sign, i: u8, j: u8) -> Self {
        RegionSpec {
            kind: RegionKind::I,
            sign,
            i,
            j,
        }
    }

    /// Parse strings like `+00`, `-10`.
    pub fn parse(kind: RegionKind, s: &str) -> Result<Self, DfIntError> {
        let bytes = s.as_bytes();
        if bytes.len() != 3 || !(bytes[0] == b'+' || bytes[0] == b'-') {
            return Err(DfIntError::BadParams(format!("bad region string '{s}'")));
        }
        let digit = |b: u8| -> Result<u8, DfIntError> {
            match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(DfIntError::BadParams(format!("bad region string '{s}'"))),
            }
        };
        Ok(RegionSpec {
            kind,
            sign: if bytes[0] == b'+' {
                Sign::Plus
            } else {
                Sign::Minus
            },
            i: digit(bytes[1])?,
            j: digit(bytes[2])?,
        })
    }

    pub fn label(&self) -> String {
        format!(
            "{}{}{}",
            if self.sign == Sign::Plus { '+' } else { '-' },
            self.i,
            self.j
        )
    }

    /// The (u, v) interval pair of the box.
    pub fn intervals(&self, z1: f64, z2: f64) -> (Interval, Interval) {
        use Interval::*;
        let one_axis = |i: u8| match (self.kind, self.sign, i) {
            (RegionKind::J, _, 0) => Fin(0.0, 1.0),
            (RegionKind::J, Sign::Plus, _) => PlusInf(1.0),
            (RegionKind::J, Sign::Minus, _) => MinusInf(0.0),
            (RegionKind::I, Sign::Plus, 0) => Fin(0.0, z2),
            (RegionKind::I, Sign::Minus, 0) => Fin(z2, z1),
            (RegionKind::I, Sign::Plus, _) => PlusInf(z1),
            (RegionKind::I, Sign::Minus, _) => MinusInf(0.0),
        };
        (one_axis(self.i), one_axis(self.j))
    }
}

/// Exponent data of one integrand for window checking.
#[derive(Clone, Debug)]
pub struct RegionParams {
    pub u_exps: Vec<Complex64>,
    pub v_exps: Vec<Complex64>,
    pub gamma: Complex64,
}

/// Absolute-convergence window check for one region; `f_info` carries the
/// Laurent multiplier's center index and degree ranges per axis.
pub fn check_window(
    spec_label: &str,
    sing: &[f64],
    params: &RegionParams,
    u_iv: &Interval,
    v_iv: &Interval,
    f_info: Option<(usize, (i64, i64), (i64, i64))>,
) -> Result<(), DfIntError> {
    let fail = |reason: String| -> Result<(), DfIntError> {
        Err(DfIntError::Convergence {
            region: spec_label.to_string(),
            reason,
        })
    };
    let (center_idx, u_range, v_range) = f_info.unwrap_or((0, (0, 0), (0, 0)));
    let shift_at = |k: usize, range: (i64, i64)| -> f64 {
        if k == center_idx {
            range.0 as f64
        } else {
            0.0
        }
    };
    let shift_inf = |range: (i64, i64)| range.1 as f64;
    let idx_of = |x: f64| sing.iter().position(|&s| s == x).unwrap();

    let endpoints = |iv: &Interval| -> Vec<f64> {
        match *iv {
            Interval::Fin(lo, hi) => vec![lo, hi],
            Interval::PlusInf(a) => vec![a],
            Interval::MinusInf(b) => vec![b],
        }
    };
    for (iv, exps, range, axis) in [
        (u_iv, &params.u_exps, u_range, "u"),
        (v_iv, &params.v_exps, v_range, "v"),
    ] {
        for p in endpoints(iv) {
            let k = idx_of(p);
            let e = exps[k].re + shift_at(k, range);
            if e <= -1.0 {
                return fail(format!(
                    "{axis}-endpoint exponent {e:.4} at {p} must exceed -1"
                ));
            }
        }
        if iv.is_infinite() {
            let total: f64 =
                exps.iter().map(|e| e.re).sum::<f64>() - 2.0 * params.gamma.re + shift_inf(range);
            if total >= -1.0 {
                return fail(format!(
                    "{axis}-decay exponent {total:.4} at infinity must be below -1"
                ));
            }
        }
    }

    if u_iv == v_iv {
        if params.gamma.re >= 0.5 {
            return fail(format!(
                "diagonal needs Re(gamma) < 1/2 on a square region, got {}",
                params.gamma.re
            ));
        }
        for p in endpoints(u_iv) {
            let k = idx_of(p);
            let e = params.u_exps[k].re + params.v_exps[k].re - 2.0 * params.gamma.re
                + shift_at(k, u_range)
                + shift_at(k, v_range);
            if e <= -2.0 {
                return fail(format!(
                    "corner exponent {e:.4} at ({p},{p}) must exceed -2"
                ));
            }
        }
        if u_iv.is_infinite() {
            let total: f64 = params.u_exps.iter().map(|e| e.re).sum::<f64>()
                + params.v_exps.iter().map(|e| e.re).sum::<f64>()
                - 2.0 * params.gamma.re
                + shift_inf(u_range)
                + shift_inf(v_range);
            if total >= -2.0 {
                return fail(format!(
                    "double-infinity exponent {total:.4} must be below -2"
                ));
            }
        }
    } else {
        let shared = if u_iv.right_end() == v_iv.left_end() && u_iv.right_end().is_finite() {
            Some(u_iv.right_end())
        } else if v_iv.right_end() == u_iv.left_end() && v_iv.right_end().is_finite() {
            Some(v_iv.right_end())
        } else {
            None
        };
        if let Some(p) = shared {
            let k = idx_of(p);
            let e = params.u_exps[k].re + params.v_exps[k].re - 2.0 * params.gamma.re
                + shift_at(k, u_range)
                + shift_at(k, v_range);
            if e <= -2.0 {
                return fail(format!(
                    "shared-corner exponent {e:.4} at ({p},{p}) must exceed -2"
                ));
            }
        }
    }
    Ok(())
}

fn f_info_of(
    poly: Option<&LaurentPoly2<Complex64>>,
    center_idx_of: impl Fn(i64) -> usize,
) -> Option<(usize, (i64, i64), (i64, i64))> {
    poly.map(|f| {
        (
            center_idx_of(f.center()),
            f.u_degree_range().unwrap_or((0, 0)),
            f.v_degree_range().unwrap_or((0, 0)),
        )
    })
}

/// `J`-type integral `u^{a1}(u-1)^{b1} v^{a2}(v-1)^{b2} (u-v+i0)^{-2g} F`
/// over the chosen box.
#[allow(clippy::too_many_arguments)]
pub fn df_j(
    spec: &RegionSpec,
    poly: Option<&LaurentPoly2<Complex64>>,
    a1: Complex64,
    a2: Complex64,
    b1: Complex64,
    b2: Complex64,
    gamma: Complex64,
    cfg: &QuadratureConfig,
) -> Result<DfValue, DfIntError> {
    assert_eq!(spec.kind, RegionKind::J);
    let sing = vec![0.0, 1.0];
    let params = RegionParams {
        u_exps: vec![a1, b1],
        v_exps: vec![a2, b2],
        gamma,
    };
    let (u_iv, v_iv) = spec.intervals(1.0, 0.0);
    let f_info = f_info_of(poly, |c| if c == 0 { 0 } else { 1 });
    check_window(&spec.label(), &sing, &params, &u_iv, &v_iv, f_info)?;
    let integrand = DfIntegrand {
        sing,
        u_exps: params.u_exps.clone(),
        v_exps: params.v_exps.clone(),
        gamma,
        poly,
        poly_center_idx: f_info.map_or(0, |x| x.0),
    };
    integrate_region(cfg, &integrand, &u_iv, &v_iv)
}

/// Full seven-exponent parameter set of an `I`-type integrand. The
/// constrained family ties every pair to `(a, a')` with `a' = -a/rho` and
/// `gamma = 1`.
#[derive(Clone, Copy, Debug)]
pub struct DfParams {
    pub a: [Complex64; 2],
    pub b: [Complex64; 2],
    pub c: [Complex64; 2],
    pub gamma: Complex64,
}

impl DfParams {
    pub fn constrained(a: Complex64, rho: Complex64) -> Result<Self, DfIntError> {
        if rho.norm() < 1e-12 || (rho - 1.0).norm() < 1e-12 {
            return Err(DfIntError::BadParams("rho must avoid 0 and 1".into()));
        }
        let ap = -a / rho;
        Ok(DfParams {
            a: [a, ap],
            b: [a, ap],
            c: [a, ap],
            gamma: Complex64::new(1.0, 0.0),
        })
    }
}

/// `I`-type integral over the `{0, z2, z1}` geometry. Requires
/// `z1 > z2 > 0`.
pub fn df_i(
    spec: &RegionSpec,
    poly: Option<&LaurentPoly2<Complex64>>,
    params: &DfParams,
    z1: f64,
    z2: f64,
    cfg: &QuadratureConfig,
) -> Result<DfValue, DfIntError> {
    assert_eq!(spec.kind, RegionKind::I);
    if !(z1 > z2 && z2 > 0.0) {
        return Err(DfIntError::BadParams(format!(
            "need z1 > z2 > 0, got z1={z1}, z2={z2}"
        )));
    }
    let sing = vec![0.0, z2, z1];
    let rp = RegionParams {
        u_exps: vec![params.a[0], params.b[0], params.c[0]],
        v_exps: vec![params.a[1], params.b[1], params.c[1]],
        gamma: params.gamma,
    };
    let (u_iv, v_iv) = spec.intervals(z1, z2);
    let f_info = f_info_of(poly, |c| if c == 0 { 0 } else { 2 });
    check_window(&spec.label(), &sing, &rp, &u_iv, &v_iv, f_info)?;
    let integrand = DfIntegrand {
        sing,
        u_exps: rp.u_exps.clone(),
        v_exps: rp.v_exps.clone(),
        gamma: params.gamma,
        poly,
        poly_center_idx: f_info.map_or(0, |x| x.0),
    };
    integrate_region(cfg, &integrand, &u_iv, &v_iv)
}
