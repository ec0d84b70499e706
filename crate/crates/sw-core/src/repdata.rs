//! Exact representation data of the algebra family indexed by `m`: central
//! charge, conformal weights, module labels, decomposition multiplicities,
//! block assignment, Zhu-algebra dimension and the Riemann-scheme exponents
//! of the associated fourth-order operator.

use crate::exactalg::{rat, rat_int, Rational};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepDataError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported label: {0}")]
    UnsupportedLabel(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum LabelKind {
    Simple,
    Projective,
}

/// A basis label: simple `X_s` (1 <= s <= 2m+1) or projective cover `P_s`
/// (1 <= s <= 2m), at family parameter `m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct ModuleLabel {
    pub kind: LabelKind,
    pub index: usize,
    pub m: usize,
}

impl ModuleLabel {
    pub fn simple(index: usize, m: usize) -> Result<Self, RepDataError> {
        if m < 1 {
            return Err(RepDataError::InvalidParameter("m must be >= 1".into()));
        }
        if index < 1 || index > 2 * m + 1 {
            return Err(RepDataError::InvalidParameter(format!(
                "simple index {index} out of range 1..={}",
                2 * m + 1
            )));
        }
        Ok(ModuleLabel {
            kind: LabelKind::Simple,
            index,
            m,
        })
    }

    pub fn projective(index: usize, m: usize) -> Result<Self, RepDataError> {
        if m < 1 {
            return Err(RepDataError::InvalidParameter("m must be >= 1".into()));
        }
        if index < 1 || index > 2 * m {
            return Err(RepDataError::InvalidParameter(format!(
                "projective index {index} out of range 1..={}",
                2 * m
            )));
        }
        Ok(ModuleLabel {
            kind: LabelKind::Projective,
            index,
            m,
        })
    }

    /// All 4m+1 basis labels in the canonical order X_1..X_{2m+1}, P_1..P_{2m}.
    pub fn basis(m: usize) -> Vec<ModuleLabel> {
        let mut v = Vec::with_capacity(4 * m + 1);
        for s in 1..=2 * m + 1 {
            v.push(ModuleLabel::simple(s, m).unwrap());
        }
        for s in 1..=2 * m {
            v.push(ModuleLabel::projective(s, m).unwrap());
        }
        v
    }

    pub fn name(&self) -> String {
        match self.kind {
            LabelKind::Simple => format!("X{}", self.index),
            LabelKind::Projective => format!("P{}", self.index),
        }
    }
}

impl std::fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Central charge `15/2 - 3(2m+1 + 1/(2m+1))`.
pub fn central_charge(m: usize) -> Result<Rational, RepDataError> {
    if m < 1 {
        return Err(RepDataError::InvalidParameter("m must be >= 1".into()));
    }
    let t = 2 * m as i64 + 1;
    Ok(rat(15, 2) - rat_int(3) * (rat_int(t) + rat(1, t)))
}

/// Conformal weight `h_{r,s;n} = h_{r-n,s}` with
/// `h_{r,s} = (r^2-1)(2m+1)/8 - (rs-1)/4 + (s^2-1)/(8(2m+1))`.
pub fn conformal_weight(r: i64, s: i64, n: i64, m: usize) -> Rational {
    let t = 2 * m as i64 + 1;
    let r = r - n;
    rat(r * r - 1, 8) * rat_int(t) - rat(r * s - 1, 4) + rat(s * s - 1, 8 * t)
}

/// Minimal conformal weight of a simple module. Projective labels are
/// rejected: their lowest-weight data is carried by the socle series, not a
/// single weight.
pub fn min_weight(label: &ModuleLabel) -> Result<Rational, RepDataError> {
    match label.kind {
        LabelKind::Projective => Err(RepDataError::UnsupportedLabel(format!(
            "{} is projective; use the socle series",
            label.name()
        ))),
        LabelKind::Simple => {
            let s = label.index as i64;
            if s % 2 == 1 {
                Ok(conformal_weight(1, s, 0, label.m))
            } else {
                Ok(conformal_weight(1, s, -1, label.m))
            }
        }
    }
}

/// Multiplicity/weight pattern of the restriction of a simple module to the
/// underlying superconformal algebra, truncated at level `n_max`:
/// odd labels contribute `(2n+1, h_{1,s;-2n})` for `0 <= n <= n_max`,
/// even labels `(2n, h_{1,s;-2n+1})` for `1 <= n <= n_max`.
pub fn ns_decomposition(
    label: &ModuleLabel,
    n_max: usize,
) -> Result<Vec<(usize, Rational)>, RepDataError> {
    if label.kind != LabelKind::Simple {
        return Err(RepDataError::UnsupportedLabel(format!(
            "{} is not simple",
            label.name()
        )));
    }
    let s = label.index as i64;
    let mut out = Vec::new();
    if s % 2 == 1 {
        for n in 0..=n_max as i64 {
            out.push((
                (2 * n + 1) as usize,
                conformal_weight(1, s, -2 * n, label.m),
            ));
        }
    } else {
        for n in 1..=n_max as i64 {
            out.push((
                (2 * n) as usize,
                conformal_weight(1, s, -2 * n + 1, label.m),
            ));
        }
    }
    Ok(out)
}

/// Block index in `1..=m+1`: odd labels (simple or projective) with index
/// `s = 2i+1` lie in block `i+1`; even labels with index `s` lie in block
/// `m - s/2 + 1`; `X_{2m+1}` lies in block `m+1`.
pub fn block_of(label: &ModuleLabel) -> usize {
    let m = label.m;
    let s = label.index;
    if s == 2 * m + 1 {
        return m + 1;
    }
    if s % 2 == 1 {
        (s - 1) / 2 + 1
    } else {
        m - s / 2 + 1
    }
}

/// Dimension of the Zhu algebra: m two-by-two matrix blocks (dim 4 each),
/// m two-dimensional ideals and one one-dimensional ideal: `6m+1`.
pub fn zhu_dimension(m: usize) -> Result<usize, RepDataError> {
    if m < 1 {
        return Err(RepDataError::InvalidParameter("m must be >= 1".into()));
    }
    Ok(6 * m + 1)
}

/// Characteristic exponents of the fourth-order operator at its three
/// regular singular points. The exponents at 0 and 1 coincide.
#[derive(Clone, Debug, PartialEq)]
pub struct RiemannScheme {
    /// `[rho_{1,1}, rho_{0,1}, rho_{1,0}, rho_{0,0}]`
    pub exponents_at_0: [Rational; 4],
    pub exponents_at_1: [Rational; 4],
    /// `[0, 1/(2m+1), 4m^2/(2m+1), 2m+1]`
    pub exponents_at_infinity: [Rational; 4],
}

impl RiemannScheme {
    pub fn sum(&self) -> Rational {
        let mut acc = rat_int(0);
        for e in self
            .exponents_at_0
            .iter()
            .chain(self.exponents_at_1.iter())
            .chain(self.exponents_at_infinity.iter())
        {
            acc += e;
        }
        acc
    }
}

/// Exponents `rho_{i,j}` at 0 and 1 and the infinity column.
pub fn riemann_exponents(m: usize) -> Result<RiemannScheme, RepDataError> {
    if m < 1 {
        return Err(RepDataError::InvalidParameter("m must be >= 1".into()));
    }
    let mi = m as i64;
    let t = 2 * mi + 1;
    let at0 = [
        rat(mi * mi, t),
        rat(mi * mi + 4 * mi + 1, t),
        rat(1 - 3 * mi * mi, t),
        rat(-3 * mi * mi, t),
    ];
    Ok(RiemannScheme {
        exponents_at_0: at0.clone(),
        exponents_at_1: at0,
        exponents_at_infinity: [rat_int(0), rat(1, t), rat(4 * mi * mi, t), rat_int(t)],
    })
}
