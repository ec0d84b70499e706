use super::{build_operator, frobenius_series, FuchsianError, SingularPoint};
use crate::exactalg::{rat, rat_int, rat_to_f64, LaurentPoly2, Rational};
use crate::repdata::riemann_exponents;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Laurent polynomial in the single quantity `c` with rational coefficients;
/// carrier for the exact connection-matrix entries.
#[derive(Clone, Debug, PartialEq)]
pub struct CLaurent(BTreeMap<i64, Rational>);

impl CLaurent {
    pub fn zero() -> Self {
        CLaurent(BTreeMap::new())
    }
    pub fn term(k: i64, c: Rational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        CLaurent(m)
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.0 {
            let v = out.0.entry(k).or_insert_with(Rational::zero);
            *v += c;
            if v.is_zero() {
                out.0.remove(&k);
            }
        }
        out
    }
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = CLaurent::zero();
        for (&k1, c1) in &self.0 {
            for (&k2, c2) in &other.0 {
                let t = CLaurent::term(k1 + k2, c1 * c2);
                out = out.add(&t);
            }
        }
        out
    }
    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = CLaurent::zero();
        for (&p, c) in &self.0 {
            out = out.add(&CLaurent::term(p, c * k));
        }
        out
    }
    pub fn eval(&self, c: f64) -> f64 {
        self.0
            .iter()
            .map(|(&k, q)| rat_to_f64(q) * c.powi(k as i32))
            .sum()
    }
    pub fn to_string_in(&self, var: &str) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&k, q) in &self.0 {
            let body = match k {
                0 => format!("{q}"),
                1 => format!("{q}*{var}"),
                _ => format!("{q}*{var}^{k}"),
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

/// `c = 2 cos(pi m / (2m+1))`.
pub fn connection_constant(m: usize) -> f64 {
    2.0 * (PI * m as f64 / (2.0 * m as f64 + 1.0)).cos()
}

/// The exact 4x4 connection matrix in the basis order
/// `(1,1), (0,1), (1,0), (0,0)`, as Laurent polynomials in `c`.
pub fn reference_connection_matrix_exact(m: usize) -> [[CLaurent; 4]; 4] {
    let s = if m % 2 == 0 { rat(1, 2) } else { rat(-1, 2) };
    let e = |k: i64, n: i64| CLaurent::term(k, rat_int(n) * &s);
    let two = |a: i64, b: i64| e(1, a).add(&e(-1, b)); // a*c + b/c
    [
        [e(-1, 1), e(-1, -1), e(-1, -1), e(-1, 1)],
        [two(-1, 1), e(-1, -1), two(1, -1), e(-1, 1)],
        [e(-1, -3), e(-1, 3), e(-1, -1), e(-1, 1)],
        [two(3, -3), e(-1, 3), two(1, -1), e(-1, 1)],
    ]
}

pub fn reference_connection_matrix_f64(m: usize) -> [[f64; 4]; 4] {
    let c = connection_constant(m);
    let e = reference_connection_matrix_exact(m);
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = e[i][j].eval(c);
        }
    }
    out
}

/// Exact symbolic check that the connection matrix squares to the identity.
pub fn reference_matrix_is_involution(m: usize) -> bool {
    let e = reference_connection_matrix_exact(m);
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = CLaurent::zero();
            for k in 0..4 {
                acc = acc.add(&e[i][k].mul(&e[k][j]));
            }
            let expect = if i == j {
                CLaurent::term(0, rat_int(1))
            } else {
                CLaurent::zero()
            };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

/// The involutory 4x4 matrix in the two quantities `(c, c')`, realized as
/// two-variable Laurent polynomials (u = c, v = c').
pub fn exchange_matrix() -> [[LaurentPoly2<Rational>; 4]; 4] {
    type L = LaurentPoly2<Rational>;
    let mono = |p: i64, q: i64, n: i64| L::monomial(0, p, q, rat_int(n));
    let cc_inv = |n: i64| mono(-1, -1, n); // n/(c c')
                                           // c - 1/c and c' - 1/c'
    let cm = |n: i64| mono(1, 0, n).add(&mono(-1, 0, -n));
    let cpm = |n: i64| mono(0, 1, n).add(&mono(0, -1, -n));
    [
        [cc_inv(1), cc_inv(-1), cc_inv(-1), cc_inv(1)],
        [
            cm(-1).mul(&mono(0, -1, 1)),
            cc_inv(-1),
            cm(1).mul(&mono(0, -1, 1)),
            cc_inv(1),
        ],
        [
            cpm(-1).mul(&mono(-1, 0, 1)),
            cpm(1).mul(&mono(-1, 0, 1)),
            cc_inv(-1),
            cc_inv(1),
        ],
        [
            cm(1).mul(&cpm(1)),
            cpm(1).mul(&mono(-1, 0, 1)),
            cm(1).mul(&mono(0, -1, 1)),
            cc_inv(1),
        ],
    ]
}

/// Symbolic involution check for the `(c, c')` matrix.
pub fn exchange_matrix_is_involution() -> bool {
    let f = exchange_matrix();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = LaurentPoly2::<Rational>::zero(0);
            for k in 0..4 {
                acc = acc.add(&f[i][k].mul(&f[k][j]));
            }
            let expect = if i == j {
                LaurentPoly2::one(0)
            } else {
                LaurentPoly2::zero(0)
            };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

/// Verifies, symbolically in `c`, that summing the rows in pairs
/// (rows 1+3 and 2+4, applied to column sums 1+3 and 2+4) reproduces the
/// reduced two-by-two matrix `(-1)^m [[-1/c, 1/c], [c - 1/c, 1/c]]`, and
/// that this two-by-two matrix squares to the identity.
pub fn reduced_subspace_check(m: usize) -> bool {
    let e = reference_connection_matrix_exact(m);
    let sgn = if m % 2 == 0 { rat_int(1) } else { rat_int(-1) };
    let target = [
        [CLaurent::term(-1, -&sgn), CLaurent::term(-1, sgn.clone())],
        [
            CLaurent::term(1, sgn.clone()).add(&CLaurent::term(-1, -&sgn)),
            CLaurent::term(-1, sgn.clone()),
        ],
    ];
    // row pairs (0,2) and (1,3); column pairs (0,2) and (1,3)
    let rows = [[0usize, 2], [1, 3]];
    for (ri, rpair) in rows.iter().enumerate() {
        for (ci, cpair) in rows.iter().enumerate() {
            let acc = e[rpair[0]][cpair[0]].add(&e[rpair[1]][cpair[0]]);
            let acc2 = e[rpair[0]][cpair[1]].add(&e[rpair[1]][cpair[1]]);
            // both columns of a pair must carry the same reduced entry
            if acc != target[ri][ci] || acc2 != target[ri][ci] {
                return false;
            }
        }
    }
    // the reduced matrix is involutory
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = CLaurent::zero();
            for k in 0..2 {
                acc = acc.add(&target[i][k].mul(&target[k][j]));
            }
            let expect = if i == j {
                CLaurent::term(0, rat_int(1))
            } else {
                CLaurent::zero()
            };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

/// Which pairing of computed solutions to matrix labels matched.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExponentAssignment {
    /// labels (i,j) carry exponents rho_{i,j}
    Direct,
    /// labels (i,j) carry exponents rho_{1-i,j} (resonant partners swapped)
    PairSwapped,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum GaugeChoice {
    /// zero-gauge bases compared as computed
    Raw,
    /// pair-structured gauge transform fitted (mixing coefficients reported)
    Fitted { t1: f64, t2: f64 },
}

#[derive(Clone, Debug)]
pub struct ConnectionResult {
    pub m: usize,
    /// raw numeric connection matrix, rows/cols ordered by exponents
    /// `[rho_{1,1}, rho_{0,1}, rho_{1,0}, rho_{0,0}]`
    pub numeric_matrix: [[f64; 4]; 4],
    /// numeric matrix after assignment + gauge adjustment
    pub adjusted_matrix: [[f64; 4]; 4],
    pub reference_matrix: [[f64; 4]; 4],
    pub cross_ratio_residual: f64,
    pub zero_pattern_ok: bool,
    pub entrywise_residual: f64,
    pub assignment: ExponentAssignment,
    pub gauge: GaugeChoice,
    pub gauge_fit_residual: f64,
}

fn mat_inv4_exact(a: &[[Rational; 4]; 4]) -> Result<[[Rational; 4]; 4], FuchsianError> {
    let mut aug: Vec<Vec<Rational>> = (0..4)
        .map(|i| {
            let mut row: Vec<Rational> = a[i].to_vec();
            for j in 0..4 {
                row.push(if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                });
            }
            row
        })
        .collect();
    for col in 0..4 {
        let piv = (col..4)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or_else(|| FuchsianError::IllConditioned("singular matching matrix".into()))?;
        aug.swap(col, piv);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..4 {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in 0..8 {
                    let sub = &f * &aug[col][j];
                    aug[r][j] -= sub;
                }
            }
        }
    }
    let mut out = std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
    let o: &mut [[Rational; 4]; 4] = &mut out;
    for i in 0..4 {
        for j in 0..4 {
            o[i][j] = aug[i][j + 4].clone();
        }
    }
    Ok(out)
}

fn mat_inv4_f64(a: &[[f64; 4]; 4]) -> Option<[[f64; 4]; 4]> {
    let mut aug = [[0.0f64; 8]; 4];
    for i in 0..4 {
        for j in 0..4 {
            aug[i][j] = a[i][j];
        }
        aug[i][i + 4] = 1.0;
    }
    for col in 0..4 {
        let piv =
            (col..4).max_by(|&x, &y| aug[x][col].abs().partial_cmp(&aug[y][col].abs()).unwrap())?;
        if aug[piv][col].abs() < 1e-300 {
            return None;
        }
        aug.swap(col, piv);
        let p = aug[col][col];
        for x in aug[col].iter_mut() {
            *x /= p;
        }
        for r in 0..4 {
            if r != col {
                let f = aug[r][col];
                for j in 0..8 {
                    aug[r][j] -= f * aug[col][j];
                }
            }
        }
    }
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = aug[i][j + 4];
        }
    }
    Some(out)
}

fn mat_mul4(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// Spec-form cross-ratio residual: quadruples restricted to entries where
/// the reference matrix is nonzero.
pub fn cross_ratio_residual(n: &[[f64; 4]; 4], m: &[[f64; 4]; 4]) -> f64 {
    let mmax = m.iter().flatten().fold(0.0f64, |a, &b| a.max(b.abs()));
    let zero_tol = 1e-12 * mmax;
    let mut worst = 0.0f64;
    for i in 0..4 {
        for k in 0..4 {
            if i == k {
                continue;
            }
            for j in 0..4 {
                for l in 0..4 {
                    if j == l {
                        continue;
                    }
                    let entries = [m[i][j], m[k][l], m[i][l], m[k][j]];
                    if entries.iter().any(|e| e.abs() <= zero_tol) {
                        continue;
                    }
                    let r = n[i][j] * n[k][l] * m[i][l] * m[k][j]
                        - n[i][l] * n[k][j] * m[i][j] * m[k][l];
                    // normalize by the magnitude of the products involved
                    let scale = (m[i][j] * m[k][l] * m[i][l] * m[k][j]).abs().max(1e-300);
                    worst = worst.max(r.abs() / scale);
                }
            }
        }
    }
    worst
}

fn zero_pattern_ok(n: &[[f64; 4]; 4], m: &[[f64; 4]; 4], tol: f64) -> bool {
    let mmax = m.iter().flatten().fold(0.0f64, |a, &b| a.max(b.abs()));
    let nmax = n.iter().flatten().fold(0.0f64, |a, &b| a.max(b.abs()));
    for i in 0..4 {
        for j in 0..4 {
            if m[i][j].abs() <= 1e-12 * mmax && n[i][j].abs() > tol * nmax {
                return false;
            }
        }
    }
    true
}

/// Fit a pair-structured transform `T` (diagonal + resonant mixing
/// `t1: row3<-row1`, `t2: row4<-row2`) with `T N = M T` in least squares.
/// Returns `(residual, T)`.
fn fit_gauge(n: &[[f64; 4]; 4], m: &[[f64; 4]; 4]) -> (f64, [[f64; 4]; 4]) {
    // unknowns x = [l1, l2, l3, l4, t1, t2]
    let tmap: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (3, 3), (2, 0), (3, 1)];
    let mut a = [[0.0f64; 6]; 16];
    for i in 0..4 {
        for j in 0..4 {
            let row = &mut a[4 * i + j];
            for (idx, &(p, q)) in tmap.iter().enumerate() {
                if p == i {
                    row[idx] += n[q][j];
                }
                if q == j {
                    row[idx] -= m[i][p];
                }
            }
        }
    }
    let scale = n.iter().flatten().fold(0.0f64, |x, &y| x.max(y.abs()))
        + m.iter().flatten().fold(0.0f64, |x, &y| x.max(y.abs()));
    let mut best: Option<(f64, [f64; 6])> = None;
    for fix in 0..6 {
        // minimize |A x| with x[fix] = 1 over the other five components
        let mut ata = [[0.0f64; 5]; 5];
        let mut atb = [0.0f64; 5];
        let others: Vec<usize> = (0..6).filter(|&k| k != fix).collect();
        for r in 0..16 {
            for (ii, &ci) in others.iter().enumerate() {
                for (jj, &cj) in others.iter().enumerate() {
                    ata[ii][jj] += a[r][ci] * a[r][cj];
                }
                atb[ii] -= a[r][ci] * a[r][fix];
            }
        }
        if let Some(sol) = solve5(&ata, &atb) {
            let mut x = [0.0f64; 6];
            x[fix] = 1.0;
            for (ii, &ci) in others.iter().enumerate() {
                x[ci] = sol[ii];
            }
            let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            for v in x.iter_mut() {
                *v /= norm;
            }
            let mut res = 0.0f64;
            for r in 0..16 {
                let mut acc = 0.0;
                for c in 0..6 {
                    acc += a[r][c] * x[c];
                }
                res += acc * acc;
            }
            let res = res.sqrt() / scale.max(1e-300);
            // invertibility of T: all diagonal entries away from zero
            let dmin = x[..4].iter().fold(f64::INFINITY, |p, &v| p.min(v.abs()));
            let res_eff = if dmin < 1e-8 { res + 1.0 } else { res };
            if best.map_or(true, |(b, _)| res_eff < b) {
                best = Some((res_eff, x));
            }
        }
    }
    let (res, x) = best.unwrap_or((f64::INFINITY, [1.0, 1.0, 1.0, 1.0, 0.0, 0.0]));
    let t = [
        [x[0], 0.0, 0.0, 0.0],
        [0.0, x[1], 0.0, 0.0],
        [x[4], 0.0, x[2], 0.0],
        [0.0, x[5], 0.0, x[3]],
    ];
    (res, t)
}

fn solve5(a: &[[f64; 5]; 5], b: &[f64; 5]) -> Option<[f64; 5]> {
    let mut m = [[0.0f64; 6]; 5];
    for i in 0..5 {
        for j in 0..5 {
            m[i][j] = a[i][j];
        }
        m[i][5] = b[i];
    }
    for col in 0..5 {
        let piv =
            (col..5).max_by(|&x, &y| m[x][col].abs().partial_cmp(&m[y][col].abs()).unwrap())?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..5 {
            if r != col {
                let f = m[r][col];
                for j in 0..6 {
                    m[r][j] -= f * m[col][j];
                }
            }
        }
    }
    let mut out = [0.0f64; 5];
    for i in 0..5 {
        out[i] = m[i][5];
    }
    Some(out)
}

/// Compute the connection matrix between the series bases at 0 and 1 by
/// matching values and three derivatives at `matching_point`, and compare
/// against the exact reference matrix. The core matching is carried out in
/// exact rational arithmetic; floating error enters only through the final
/// diagonal dressing and the comparison constants.
pub fn connection_matrix(
    m: usize,
    n_terms: usize,
    matching_point: &Rational,
    tolerance: f64,
) -> Result<ConnectionResult, FuchsianError> {
    let x0f = rat_to_f64(matching_point);
    if !(x0f > 0.0 && x0f < 1.0) {
        return Err(FuchsianError::BadMatchingPoint(x0f));
    }
    let op = build_operator(m)?;
    let scheme = riemann_exponents(m)?;
    let exps = scheme.exponents_at_0.clone();
    let w0 = rat_int(1) - matching_point;

    // D0[i][j], D1[i][j]: scaled derivative data of solution i at the two
    // local coordinates
    let mut d0 = [[(); 4]; 4].map(|r| r.map(|_| Rational::zero()));
    let mut d1 = d0.clone();
    for (i, rho) in exps.iter().enumerate() {
        let sol = frobenius_series(&op, SingularPoint::Zero, rho, n_terms)?;
        d0[i] = sol.scaled_derivatives_exact(matching_point);
        d1[i] = sol.scaled_derivatives_exact(&w0);
    }
    // middle diagonal: (-w/x)^j along derivative order j
    let ratio = -(&w0 / matching_point);
    let mut mid = Rational::one();
    let mut d0m = d0.clone();
    for j in 0..4 {
        for row in d0m.iter_mut() {
            row[j] *= &mid;
        }
        mid *= &ratio;
    }
    // exact core C = D0m * D1^{-1}  (D-matrices indexed [solution][order],
    // the matching equation reads D0m = C_core * D1 with rows as solutions)
    let d1_inv = mat_inv4_exact(&d1)?;
    let mut core = [[0.0f64; 4]; 4];
    for i in 0..4 {
        for l in 0..4 {
            let mut acc = Rational::zero();
            for j in 0..4 {
                acc += &d0m[i][j] * &d1_inv[j][l];
            }
            core[i][l] = rat_to_f64(&acc);
        }
    }
    // dress with x^{rho_i} w^{-rho_l}
    let mut n_raw = [[0.0f64; 4]; 4];
    let wf = rat_to_f64(&w0);
    for i in 0..4 {
        for l in 0..4 {
            let ri = rat_to_f64(&exps[i]);
            let rl = rat_to_f64(&exps[l]);
            n_raw[i][l] = x0f.powf(ri) * core[i][l] * wf.powf(-rl);
        }
    }

    let reference = reference_connection_matrix_f64(m);

    // comparison: raw, then fitted gauge, for both exponent assignments
    let perm_for = |assign: ExponentAssignment| -> [usize; 4] {
        match assign {
            ExponentAssignment::Direct => [0, 1, 2, 3],
            ExponentAssignment::PairSwapped => [1, 0, 3, 2],
        }
    };
    let mut best: Option<ConnectionResult> = None;
    for assign in [ExponentAssignment::Direct, ExponentAssignment::PairSwapped] {
        let p = perm_for(assign);
        let mut n_perm = [[0.0f64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                n_perm[i][j] = n_raw[p[i]][p[j]];
            }
        }
        for gauge_raw in [true, false] {
            let (adjusted, gauge, fit_res) = if gauge_raw {
                (n_perm, GaugeChoice::Raw, 0.0)
            } else {
                let (res, t) = fit_gauge(&n_perm, &reference);
                let Some(t_inv) = mat_inv4_f64(&t) else {
                    continue;
                };
                let adj = mat_mul4(&t, &mat_mul4(&n_perm, &t_inv));
                (
                    adj,
                    GaugeChoice::Fitted {
                        t1: t[2][0] / t[2][2],
                        t2: t[3][1] / t[3][3],
                    },
                    res,
                )
            };
            let cr = cross_ratio_residual(&adjusted, &reference);
            let zp = zero_pattern_ok(&adjusted, &reference, tolerance);
            let mut ew = 0.0f64;
            let scale = reference
                .iter()
                .flatten()
                .fold(0.0f64, |a, &b| a.max(b.abs()));
            for i in 0..4 {
                for j in 0..4 {
                    ew = ew.max((adjusted[i][j] - reference[i][j]).abs() / scale);
                }
            }
            let cand = ConnectionResult {
                m,
                numeric_matrix: n_raw,
                adjusted_matrix: adjusted,
                reference_matrix: reference,
                cross_ratio_residual: cr,
                zero_pattern_ok: zp,
                entrywise_residual: ew,
                assignment: assign,
                gauge,
                gauge_fit_residual: fit_res,
            };
            let passes = cr < tolerance && zp;
            let better = match &best {
                None => true,
                Some(b) => {
                    let b_passes = b.cross_ratio_residual < tolerance && b.zero_pattern_ok;
                    if passes && !b_passes {
                        true
                    } else if passes == b_passes {
                        cr < b.cross_ratio_residual
                    } else {
                        false
                    }
                }
            };
            if better {
                best = Some(cand);
            }
            if passes {
                return Ok(best.unwrap());
            }
        }
    }
    Ok(best.unwrap())
}
