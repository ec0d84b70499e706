use num::complex::Complex64;
use std::f64::consts::PI;

// Lanczos g=7, n=9 coefficient set (double precision).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal-branch log-Gamma for complex arguments (Lanczos with the
/// reflection formula for Re z < 1/2). The imaginary part is reported
/// modulo the branch structure of the reflection; exponentiating always
/// recovers Gamma itself.
pub fn log_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let s = sin_pi(z);
        Complex64::new(PI, 0.0).ln() - s.ln() - log_gamma(Complex64::new(1.0, 0.0) - z)
    } else {
        let zm = z - 1.0;
        let mut acc = Complex64::new(LANCZOS[0], 0.0);
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            acc += c / (zm + i as f64);
        }
        let t = zm + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (zm + 0.5) * t.ln() - t + acc.ln()
    }
}

pub fn gamma(z: Complex64) -> Complex64 {
    log_gamma(z).exp()
}

/// `sin(pi z)` computed stably for complex `z`.
pub fn sin_pi(z: Complex64) -> Complex64 {
    (z * PI).sin()
}

/// True when `z` sits within `tol` of a nonpositive integer (a Gamma pole).
pub fn near_gamma_pole(z: Complex64, tol: f64) -> bool {
    if z.re > 0.5 {
        return false;
    }
    let k = z.re.round();
    k <= 0.0 && (z - Complex64::new(k, 0.0)).norm() < tol
}

/// Euler beta through log-Gamma.
pub fn beta(a: Complex64, b: Complex64) -> Complex64 {
    (log_gamma(a) + log_gamma(b) - log_gamma(a + b)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn classical_values() {
        // Gamma(5) = 24
        assert!((log_gamma(c(5.0, 0.0)).re - 24f64.ln()).abs() < 1e-13);
        assert!(log_gamma(c(5.0, 0.0)).im.abs() < 1e-13);
        // Gamma(1/2) = sqrt(pi)
        assert!((log_gamma(c(0.5, 0.0)).re - PI.sqrt().ln()).abs() < 1e-13);
        // Gamma(1) = Gamma(2) = 1
        assert!(gamma(c(1.0, 0.0)).norm() - 1.0 < 1e-13);
        assert!((gamma(c(2.0, 0.0)) - c(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn reflection_identity() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        for _ in 0..20 {
            let z = c(rng.gen_range(-3.0..3.0), rng.gen_range(-2.0..2.0));
            if near_gamma_pole(z, 1e-3) || near_gamma_pole(c(1.0, 0.0) - z, 1e-3) {
                continue;
            }
            let lhs = gamma(z) * gamma(c(1.0, 0.0) - z);
            let rhs = c(PI, 0.0) / sin_pi(z);
            assert!(
                (lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0),
                "z={z}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn recurrence() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(100);
        for _ in 0..20 {
            let z = c(rng.gen_range(0.2..4.0), rng.gen_range(-2.0..2.0));
            let lhs = gamma(z + 1.0);
            let rhs = z * gamma(z);
            assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
        }
    }

    #[test]
    fn beta_positive_reals() {
        // B(1/2, 1/2) = pi
        assert!((beta(c(0.5, 0.0), c(0.5, 0.0)).re - PI).abs() < 1e-12);
    }

    #[test]
    fn pole_detection() {
        assert!(near_gamma_pole(c(0.0, 0.0), 1e-6));
        assert!(near_gamma_pole(c(-3.0, 0.0), 1e-6));
        assert!(!near_gamma_pole(c(0.25, 0.0), 1e-6));
        assert!(!near_gamma_pole(c(-3.0, 1.0), 1e-6));
    }
}
