use num::complex::Complex64;
use num::{BigRational, Zero};
use std::collections::BTreeMap;

/// Coefficient ring for sparse Laurent polynomials. Exact types compare
/// exactly; floating types compare against a tolerance scaled by the caller.
pub trait Coefficient: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero_within(&self, tol: f64) -> bool;
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        BigRational::from_integer(1.into())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_within(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

impl Coefficient for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_within(&self, tol: f64) -> bool {
        self.norm() <= tol
    }
}

/// Sparse two-variable Laurent polynomial. A term `(p, q) -> c` denotes
/// `c (u-x)^p (v-x)^q` where `x` is the common center (0 or 1 in all
/// in-scope uses). Zero coefficients are never stored; iteration order is
/// lexicographic on the exponent pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly2<C: Coefficient> {
    terms: BTreeMap<(i64, i64), C>,
    center: i64,
}

impl<C: Coefficient> LaurentPoly2<C> {
    pub fn zero(center: i64) -> Self {
        LaurentPoly2 {
            terms: BTreeMap::new(),
            center,
        }
    }

    pub fn one(center: i64) -> Self {
        Self::monomial(center, 0, 0, C::one())
    }

    pub fn monomial(center: i64, p: i64, q: i64, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero_within(0.0) {
            terms.insert((p, q), c);
        }
        LaurentPoly2 { terms, center }
    }

    pub fn center(&self) -> i64 {
        self.center
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, p: i64, q: i64, c: C) {
        let entry = self.terms.entry((p, q)).or_insert_with(C::zero).add_ref(&c);
        if entry.is_zero_within(0.0) {
            self.terms.remove(&(p, q));
        } else {
            self.terms.insert((p, q), entry);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.center, other.center, "mixed centers");
        let mut out = self.clone();
        for (&(p, q), c) in &other.terms {
            out.insert_add(p, q, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.center);
        for (&(p, q), c) in &self.terms {
            out.insert_add(p, q, c.mul_ref(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.center, other.center, "mixed centers");
        let mut out = Self::zero(self.center);
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &other.terms {
                out.insert_add(p1 + p2, q1 + q2, c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn partial_u(&self) -> Self {
        let mut out = Self::zero(self.center);
        for (&(p, q), c) in &self.terms {
            if p != 0 {
                out.insert_add(p - 1, q, c.mul_ref(&int_coeff::<C>(p)));
            }
        }
        out
    }

    pub fn partial_v(&self) -> Self {
        let mut out = Self::zero(self.center);
        for (&(p, q), c) in &self.terms {
            if q != 0 {
                out.insert_add(p, q - 1, c.mul_ref(&int_coeff::<C>(q)));
            }
        }
        out
    }

    /// Evaluation `F(u,u) = F|_{u=v}` as a one-variable Laurent polynomial in
    /// `(v - center)`.
    pub fn restrict_diagonal(&self) -> LaurentPoly1<C> {
        let mut out = LaurentPoly1::zero(self.center);
        for (&(p, q), c) in &self.terms {
            out.insert_add(p + q, c.clone());
        }
        out
    }

    /// Exponent range in `u` (min, max); `None` for the zero polynomial.
    pub fn u_degree_range(&self) -> Option<(i64, i64)> {
        degree_range(self.terms.keys().map(|k| k.0))
    }

    pub fn v_degree_range(&self) -> Option<(i64, i64)> {
        degree_range(self.terms.keys().map(|k| k.1))
    }
}

fn degree_range(it: impl Iterator<Item = i64>) -> Option<(i64, i64)> {
    let mut range = None;
    for p in it {
        range = Some(match range {
            None => (p, p),
            Some((lo, hi)) => (p.min(lo), p.max(hi)),
        });
    }
    range
}

fn int_coeff<C: Coefficient>(n: i64) -> C {
    let mut acc = C::zero();
    let one = C::one();
    for _ in 0..n.unsigned_abs() {
        acc = acc.add_ref(&one);
    }
    if n < 0 {
        acc.neg_ref()
    } else {
        acc
    }
}

impl LaurentPoly2<Complex64> {
    /// Evaluate with the offsets `u - center`, `v - center` supplied
    /// directly, so callers can keep endpoint distances exact.
    pub fn eval_offsets(&self, du: f64, dv: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(p, q), c) in &self.terms {
            acc += c * du.powi(p as i32) * dv.powi(q as i32);
        }
        acc
    }

    /// d/dv evaluated at offsets.
    pub fn eval_partial_v_offsets(&self, du: f64, dv: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(p, q), c) in &self.terms {
            if q != 0 {
                acc += c * (q as f64) * du.powi(p as i32) * dv.powi((q - 1) as i32);
            }
        }
        acc
    }

    /// d/du evaluated at offsets.
    pub fn eval_partial_u_offsets(&self, du: f64, dv: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(p, q), c) in &self.terms {
            if p != 0 {
                acc += c * (p as f64) * du.powi((p - 1) as i32) * dv.powi(q as i32);
            }
        }
        acc
    }

    /// Largest coefficient modulus, used to scale comparison tolerances.
    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Sparse one-variable Laurent polynomial in `(v - center)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly1<C: Coefficient> {
    terms: BTreeMap<i64, C>,
    center: i64,
}

impl<C: Coefficient> LaurentPoly1<C> {
    pub fn zero(center: i64) -> Self {
        LaurentPoly1 {
            terms: BTreeMap::new(),
            center,
        }
    }

    pub fn center(&self) -> i64 {
        self.center
    }

    pub fn insert_add(&mut self, k: i64, c: C) {
        let entry = self.terms.entry(k).or_insert_with(C::zero).add_ref(&c);
        if entry.is_zero_within(0.0) {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, entry);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.center);
        for (&k, c) in &self.terms {
            if k != 0 {
                out.insert_add(k - 1, c.mul_ref(&int_coeff::<C>(k)));
            }
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.center);
        for (&p, c) in &self.terms {
            out.insert_add(p, c.mul_ref(k));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.center, other.center, "mixed centers");
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.insert_add(k, c.neg_ref());
        }
        out
    }

    /// Coefficient-wise zero test with a floating tolerance (exact for
    /// rational coefficients).
    pub fn is_zero_within(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.is_zero_within(tol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;

    #[test]
    fn restrict_diagonal_basic() {
        // F = (u-x)(v-x) -> (v-x)^2
        let f = LaurentPoly2::<BigRational>::monomial(0, 1, 1, rat_int(1));
        let d = f.restrict_diagonal();
        let terms: Vec<_> = d.terms().collect();
        assert_eq!(terms, vec![(&2i64, &rat_int(1))]);

        // F = 1 -> 1
        let one = LaurentPoly2::<BigRational>::one(1);
        let d1 = one.restrict_diagonal();
        assert_eq!(d1.terms().collect::<Vec<_>>(), vec![(&0i64, &rat_int(1))]);
    }

    #[test]
    fn restrict_diagonal_difference() {
        // F = (u-x)^n - k (v-x)^n  ->  (1-k)(v-x)^n
        let n = 3;
        let k = rat_int(5);
        let mut f = LaurentPoly2::<BigRational>::monomial(0, n, 0, rat_int(1));
        f = f.add(&LaurentPoly2::monomial(0, 0, n, -k.clone()));
        let d = f.restrict_diagonal();
        assert_eq!(d.terms().collect::<Vec<_>>(), vec![(&n, &(rat_int(1) - k))]);
    }

    #[test]
    fn product_and_derivatives() {
        // F = u^{-1} v: partial_u = -u^{-2} v, partial_v = u^{-1}
        let f = LaurentPoly2::<BigRational>::monomial(0, -1, 1, rat_int(1));
        let fu = f.partial_u();
        assert_eq!(
            fu.terms().collect::<Vec<_>>(),
            vec![(&(-2i64, 1i64), &rat_int(-1))]
        );
        let fv = f.partial_v();
        assert_eq!(
            fv.terms().collect::<Vec<_>>(),
            vec![(&(-1i64, 0i64), &rat_int(1))]
        );
        let g = f.mul(&f);
        assert_eq!(
            g.terms().collect::<Vec<_>>(),
            vec![(&(-2i64, 2i64), &rat_int(1))]
        );
    }

    #[test]
    fn complex_eval() {
        use num::complex::Complex64;
        let f = LaurentPoly2::<Complex64>::monomial(0, -1, 2, Complex64::new(2.0, 0.0));
        let v = f.eval_offsets(0.5, 3.0);
        assert!((v - Complex64::new(36.0, 0.0)).norm() < 1e-14);
    }
}
