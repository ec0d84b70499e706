use num::{BigInt, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer-coefficient polynomial stored in the second-kind Chebyshev basis:
/// `coeffs[k]` multiplies `U_k`. Trailing zeros are trimmed; the empty vector
/// is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ChebyshevPoly {
    coeffs: Vec<BigInt>,
}

impl ChebyshevPoly {
    pub fn zero() -> Self {
        ChebyshevPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = ChebyshevPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The basis element `U_n`.
    pub fn basis(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        ChebyshevPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the U-basis; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        ChebyshevPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Coefficients in the monomial basis (index = power of the variable),
    /// obtained from U_0 = 1, U_1 = A, U_{n+1} = A*U_n - U_{n-1}.
    pub fn to_monomial(&self) -> Vec<BigInt> {
        if self.coeffs.is_empty() {
            return Vec::new();
        }
        let deg = self.coeffs.len() - 1;
        let mut out = vec![BigInt::zero(); deg + 1];
        // monomial coefficients of U_k, built up by the recursion
        let mut prev: Vec<BigInt> = vec![BigInt::from(1)]; // U_0
        let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(1)]; // U_1
        for (k, c) in self.coeffs.iter().enumerate() {
            let uk: &Vec<BigInt> = if k == 0 { &prev } else { &cur };
            if !c.is_zero() {
                for (i, m) in uk.iter().enumerate() {
                    out[i] += c * m;
                }
            }
            if k >= 1 && k < deg {
                // next = A*cur - prev
                let mut next = vec![BigInt::zero(); k + 2];
                for (i, m) in cur.iter().enumerate() {
                    next[i + 1] += m;
                }
                for (i, m) in prev.iter().enumerate() {
                    next[i] -= m;
                }
                prev = std::mem::replace(&mut cur, next);
            }
        }
        while out.last().map_or(false, |c| c.is_zero()) {
            out.pop();
        }
        out
    }

    /// Floating evaluation at `x` through the monomial form.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num::ToPrimitive;
        let mono = self.to_monomial();
        let mut acc = 0.0;
        for c in mono.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

/// `U_n` as a Chebyshev-basis polynomial.
pub fn chebyshev_u(n: usize) -> ChebyshevPoly {
    ChebyshevPoly::basis(n)
}

/// U-basis linearization `U_j * U_k = sum_{i=0}^{min(j,k)} U_{j+k-2i}`.
pub fn chebyshev_product(j: usize, k: usize) -> ChebyshevPoly {
    let lo = j.min(k);
    let hi = j.max(k);
    let mut coeffs = vec![BigInt::zero(); j + k + 1];
    for i in 0..=lo {
        coeffs[hi - lo + 2 * i] = BigInt::from(1);
    }
    ChebyshevPoly::from_coeffs(coeffs)
}

impl Add for &ChebyshevPoly {
    type Output = ChebyshevPoly;
    fn add(self, rhs: &ChebyshevPoly) -> ChebyshevPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        ChebyshevPoly::from_coeffs(coeffs)
    }
}

impl Sub for &ChebyshevPoly {
    type Output = ChebyshevPoly;
    fn sub(self, rhs: &ChebyshevPoly) -> ChebyshevPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        ChebyshevPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ChebyshevPoly {
    type Output = ChebyshevPoly;
    fn neg(self) -> ChebyshevPoly {
        ChebyshevPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ChebyshevPoly {
    type Output = ChebyshevPoly;
    fn mul(self, rhs: &ChebyshevPoly) -> ChebyshevPoly {
        if self.is_zero() || rhs.is_zero() {
            return ChebyshevPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let lo = j.min(k);
                let hi = j.max(k);
                for i in 0..=lo {
                    coeffs[hi - lo + 2 * i] += &ab;
                }
            }
        }
        ChebyshevPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for ChebyshevPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c == &BigInt::from(1) {
                write!(f, "U_{}", k)?;
            } else {
                write!(f, "{}*U_{}", c, k)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn u_small() {
        assert_eq!(chebyshev_u(0).to_monomial(), vec![BigInt::from(1)]);
        // U_2 = A^2 - 1
        assert_eq!(
            chebyshev_u(2).to_monomial(),
            vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)]
        );
        // U_4 = A^4 - 3A^2 + 1
        assert_eq!(
            chebyshev_u(4).to_monomial(),
            vec![
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(-3),
                BigInt::from(0),
                BigInt::from(1)
            ]
        );
    }

    #[test]
    fn leading_coefficient_is_one() {
        for n in 0..12 {
            let mono = chebyshev_u(n).to_monomial();
            assert_eq!(mono.last().unwrap(), &BigInt::from(1));
        }
    }

    #[test]
    fn product_rule() {
        assert_eq!(chebyshev_product(0, 5), chebyshev_u(5));
        assert_eq!(chebyshev_product(1, 1), ChebyshevPoly::from_i64(&[1, 0, 1]));
        assert_eq!(
            chebyshev_product(2, 2),
            ChebyshevPoly::from_i64(&[1, 0, 1, 0, 1])
        );
        // term count and unit coefficients
        for j in 0..7usize {
            for k in 0..7usize {
                let p = chebyshev_product(j, k);
                let nonzero: Vec<_> = p.coeffs().iter().filter(|c| !c.is_zero()).collect();
                assert_eq!(nonzero.len(), j.min(k) + 1);
                assert!(nonzero.iter().all(|c| **c == BigInt::from(1)));
            }
        }
    }

    // U_n(2cos t) sin t = sin((n+1)t)
    #[test]
    fn sine_identity() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let t: f64 = rng.gen_range(0.1..3.0);
            for n in 0..9 {
                let lhs = chebyshev_u(n).eval_f64(2.0 * t.cos()) * t.sin();
                let rhs = ((n as f64 + 1.0) * t).sin();
                assert!((lhs - rhs).abs() < 1e-12, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn product_matches_pointwise() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(8);
        for _ in 0..60 {
            let t: f64 = rng.gen_range(0.1..3.0);
            let x = 2.0 * t.cos();
            for j in 0..6 {
                for k in 0..6 {
                    let lhs = chebyshev_product(j, k).eval_f64(x);
                    let rhs = chebyshev_u(j).eval_f64(x) * chebyshev_u(k).eval_f64(x);
                    assert!((lhs - rhs).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn ring_ops() {
        let a = ChebyshevPoly::from_i64(&[1, 2]);
        let b = ChebyshevPoly::from_i64(&[0, 3, 1]);
        let ab = &a * &b;
        // (U0 + 2U1)(3U1 + U2) = 3U1 + U2 + 6(U2+U0) + 2(U3+U1)
        assert_eq!(ab, ChebyshevPoly::from_i64(&[6, 5, 7, 2]));
        assert_eq!(&(&a + &b) - &b, a);
    }
}
