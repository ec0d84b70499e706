use num::complex::Complex64;
use std::sync::{Mutex, OnceLock};

use super::DfIntError;

/// Tanh-sinh settings. `levels` is the refinement depth of the final rule
/// (step `h = 2^-levels`); `precision` is the target mantissa size in bits
/// driving the error-estimate threshold; `tail_cutoff` bounds the node
/// parameter so mapped infinite ranges stay inside f64 range.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureConfig {
    pub levels: usize,
    pub split_diagonal: bool,
    pub precision: u32,
    pub tail_cutoff: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            levels: 7,
            split_diagonal: true,
            precision: 53,
            tail_cutoff: 6.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<(), DfIntError> {
        if self.levels < 3 {
            return Err(DfIntError::BadParams("levels must be >= 3".into()));
        }
        if self.precision < 53 {
            return Err(DfIntError::BadParams("precision must be >= 53 bits".into()));
        }
        Ok(())
    }

    pub fn with_levels(mut self, levels: usize) -> Self {
        self.levels = levels;
        self
    }
}

/// Node pair `(d, w)`: the rule evaluates the integrand at `x = d` and
/// `x = 1 - d` with common weight `w` (the abscissa distance to the nearer
/// endpoint of `(0,1)` is kept exact so endpoint singularities evaluate
/// stably).
#[derive(Clone, Copy, Debug)]
pub struct Node {
    pub d: f64,
    pub w: f64,
    pub ln_w: f64,
}

fn build_nodes(level: usize, tmax: f64) -> Vec<Node> {
    let h = 1.0 / (1u64 << level) as f64;
    let mut out = Vec::new();
    let mut k = 0u64;
    loop {
        let t = k as f64 * h;
        if t > tmax {
            break;
        }
        let sh = std::f64::consts::FRAC_PI_2 * t.sinh();
        let d = 1.0 / (1.0 + (2.0 * sh).exp());
        let w = h * std::f64::consts::FRAC_PI_2 * t.cosh() / sh.cosh().powi(2) * 0.5;
        if d < 1e-280 || w < 1e-300 {
            break;
        }
        out.push(Node { d, w, ln_w: w.ln() });
        k += 1;
    }
    out
}

fn node_cache() -> &'static Mutex<std::collections::HashMap<(usize, u64), &'static [Node]>> {
    static CACHE: OnceLock<Mutex<std::collections::HashMap<(usize, u64), &'static [Node]>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()))
}

/// Cached node set for a level at the default tail cutoff.
pub fn nodes(level: usize) -> &'static [Node] {
    nodes_with_cutoff(level, QuadratureConfig::default().tail_cutoff)
}

pub fn nodes_with_cutoff(level: usize, tmax: f64) -> &'static [Node] {
    assert!(level < 16, "level too large");
    let cache = node_cache();
    let mut guard = cache.lock().unwrap();
    let key = (level, tmax.to_bits());
    if let Some(v) = guard.get(&key) {
        return v;
    }
    let v: &'static [Node] = Box::leak(build_nodes(level, tmax).into_boxed_slice());
    guard.insert(key, v);
    v
}

/// Integrate `f(x, 1-x)` over `(0,1)`; the two arguments are the exact
/// distances to the left and right endpoints.
pub fn ts01_c(level: usize, f: &mut dyn FnMut(f64, f64) -> Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, n) in nodes(level).iter().enumerate() {
        if i == 0 {
            acc += f(0.5, 0.5) * n.w;
        } else {
            acc += (f(n.d, 1.0 - n.d) + f(1.0 - n.d, n.d)) * n.w;
        }
    }
    acc
}

pub fn ts01_r(level: usize, f: &mut dyn FnMut(f64, f64) -> f64) -> f64 {
    let mut acc = 0.0;
    for (i, n) in nodes(level).iter().enumerate() {
        if i == 0 {
            acc += f(0.5, 0.5) * n.w;
        } else {
            acc += (f(n.d, 1.0 - n.d) + f(1.0 - n.d, n.d)) * n.w;
        }
    }
    acc
}

/// Integrate with an error estimate from the two highest levels; errors if
/// the estimate exceeds the requested tolerance.
pub fn ts01_c_checked(
    cfg: &QuadratureConfig,
    rtol: f64,
    f: &mut dyn FnMut(f64, f64) -> Complex64,
) -> Result<(Complex64, f64), DfIntError> {
    let coarse = ts01_c(cfg.levels - 1, f);
    let fine = ts01_c(cfg.levels, f);
    let est = (fine - coarse).norm();
    let scale = fine.norm().max(1.0);
    if est > rtol * scale {
        return Err(DfIntError::Accuracy { estimate: est });
    }
    Ok((fine, est))
}
