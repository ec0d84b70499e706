//! Numerical evaluation of the two-variable Dotsenko-Fateev integrals over
//! the box-region taxonomy, the special functions and singular quadrature
//! behind them, and verification of their identities.

pub mod gamma1;
pub mod identities;
pub mod locus;
pub mod quad;
pub mod regions;
pub mod special;
pub mod symmetry;

pub use gamma1::{j00_gamma_one, IbpSide};
pub use identities::{
    beta_degeneration_check, contour_identity_check, entire_factor_probe, forrester_closed_form,
    series_expansion_check, transformation_check, ContourReport, ProbeReport, RatioCheck,
    TransformationReport,
};
pub use locus::{c_prefactor, d_prefactor, e_factor, on_singular_locus, on_singular_locus_j};
pub use quad::QuadratureConfig;
pub use regions::{df_i, df_j, DfParams, DfValue, Interval, RegionKind, RegionSpec, Sign};
pub use special::{beta, gamma, log_gamma, sin_pi};
pub use symmetry::{
    df_generator, is_df_symmetric, is_df_symmetric_c, taylor_factor, TaylorVariant,
};

use num::complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DfIntError {
    #[error("parameters outside the convergence window of region {region}: {reason}")]
    Convergence { region: String, reason: String },
    #[error("pole: {0}")]
    Pole(String),
    #[error("quadrature did not converge across levels (estimate {estimate:.3e})")]
    Accuracy { estimate: f64 },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("singular point hit: {0}")]
    SingularPoint(String),
}

/// Branch convention for real powers of signed arguments.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum I0 {
    Plus,
    Minus,
    None,
}

/// `x^p` under the fixed phase convention: positive `x` gives the principal
/// value; negative `x` gives `e^{+/- i pi p} |x|^p` for the `+/-`
/// prescriptions and the plain modulus power for `None`.
pub fn phase_power(x: f64, p: Complex64, i0: I0) -> Result<Complex64, DfIntError> {
    if x == 0.0 {
        return Err(DfIntError::SingularPoint("x = 0 in phase_power".into()));
    }
    let mag = (p * x.abs().ln()).exp();
    if x > 0.0 {
        return Ok(mag);
    }
    let phase = match i0 {
        I0::Plus => (Complex64::new(0.0, std::f64::consts::PI) * p).exp(),
        I0::Minus => (Complex64::new(0.0, -std::f64::consts::PI) * p).exp(),
        I0::None => Complex64::new(1.0, 0.0),
    };
    Ok(mag * phase)
}
