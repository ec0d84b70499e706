//! Integer-offset hyperplane tests and the trigonometric prefactors of the
//! cycle pairing.

use super::regions::DfParams;
use num::complex::Complex64;
use std::f64::consts::PI;

/// `e(x) = 1 - exp(2 pi i x)`.
pub fn e_factor(x: Complex64) -> Complex64 {
    Complex64::new(1.0, 0.0) - (Complex64::new(0.0, 2.0 * PI) * x).exp()
}

/// The six `c^{+/-}_{i,j}(a, b, gamma)` products of the unit-interval
/// geometry.
pub fn c_prefactor(
    sign: char,
    i: u8,
    j: u8,
    a: [Complex64; 2],
    b: [Complex64; 2],
    g: Complex64,
) -> Complex64 {
    let tg = 2.0 * g;
    match (sign, i, j) {
        ('+', 1, 1) => {
            e_factor(b[0])
                * e_factor(b[1])
                * e_factor(b[0] + b[1] - tg)
                * e_factor(a[0] + b[0] - tg)
                * e_factor(a[1] + b[1] - tg)
                * e_factor(a[0] + a[1] + b[0] + b[1] - tg)
        }
        ('-', 1, 1) => c_prefactor('+', 1, 1, b, a, g),
        (_, 0, 0) => {
            e_factor(a[0])
                * e_factor(a[1])
                * e_factor(b[0])
                * e_factor(b[1])
                * e_factor(a[0] + a[1] - tg)
                * e_factor(b[0] + b[1] - tg)
        }
        ('+', 0, 1) => {
            e_factor(a[0])
                * e_factor(b[0])
                * e_factor(b[1])
                * e_factor(b[0] + b[1] - tg)
                * e_factor(a[1] + b[1] - tg)
        }
        ('+', 1, 0) => {
            e_factor(a[1])
                * e_factor(b[0])
                * e_factor(b[1])
                * e_factor(b[0] + b[1] - tg)
                * e_factor(a[0] + b[0] - tg)
        }
        ('-', 0, 1) => c_prefactor('+', 0, 1, b, a, g),
        ('-', 1, 0) => c_prefactor('+', 1, 0, b, a, g),
        _ => panic!("bad prefactor label ({sign}, {i}, {j})"),
    }
}

/// The four mixed-region `d^{+/-}_{i,j}(a, b, c, gamma)` products.
#[allow(clippy::many_single_char_names)]
pub fn d_prefactor(
    sign: char,
    i: u8,
    j: u8,
    a: [Complex64; 2],
    b: [Complex64; 2],
    c: [Complex64; 2],
    g: Complex64,
) -> Complex64 {
    let tg = 2.0 * g;
    match (sign, i, j) {
        ('+', 0, 1) => {
            e_factor(a[0]) * e_factor(b[0]) * e_factor(c[1]) * e_factor(a[1] + b[1] + c[1] - tg)
        }
        ('+', 1, 0) => {
            e_factor(a[1]) * e_factor(b[1]) * e_factor(c[0]) * e_factor(a[0] + b[0] + c[0] - tg)
        }
        ('-', 0, 1) => {
            e_factor(b[0]) * e_factor(c[0]) * e_factor(a[1]) * e_factor(a[1] + b[1] + c[1] - tg)
        }
        ('-', 1, 0) => {
            e_factor(b[1]) * e_factor(c[1]) * e_factor(a[0]) * e_factor(a[0] + b[0] + c[0] - tg)
        }
        _ => panic!("bad prefactor label ({sign}, {i}, {j})"),
    }
}

/// The nine hyperplane families of one pair combination `(x, y)`.
fn pair_families(
    x: [Complex64; 2],
    y: [Complex64; 2],
    g: Complex64,
) -> [(&'static str, Complex64); 9] {
    [
        ("x1", x[0]),
        ("x2", x[1]),
        ("x1+x2-2g", x[0] + x[1] - 2.0 * g),
        ("y1", y[0]),
        ("y2", y[1]),
        ("y1+y2-2g", y[0] + y[1] - 2.0 * g),
        ("x1+y1", x[0] + y[0]),
        ("x2+y2", x[1] + y[1]),
        ("x1+x2+y1+y2-2g", x[0] + x[1] + y[0] + y[1] - 2.0 * g),
    ]
}

/// Five-parameter test against the `(a, b, gamma)` hyperplane family alone
/// (the two-point geometry).
pub fn on_singular_locus_j(
    a: [Complex64; 2],
    b: [Complex64; 2],
    g: Complex64,
    tolerance: f64,
) -> (bool, Vec<String>) {
    let mut hits = Vec::new();
    for (fname, v) in pair_families(a, b, g) {
        if dist_to_integers(v) < tolerance {
            hits.push(format!("H[a,b]: {fname} = {:.6}+{:.6}i in Z", v.re, v.im));
        }
    }
    (!hits.is_empty(), hits)
}

fn dist_to_integers(v: Complex64) -> f64 {
    (v - Complex64::new(v.re.round(), 0.0)).norm()
}

/// Tests the parameter tuple against every integer-offset hyperplane family
/// of the seven-parameter union; returns whether any family is hit within
/// `tolerance`, together with the violated combinations.
pub fn on_singular_locus(params: &DfParams, tolerance: f64) -> (bool, Vec<String>) {
    let g = params.gamma;
    let pair_sum = |x: [Complex64; 2], y: [Complex64; 2]| [x[0] + y[0], x[1] + y[1]];
    let combos: [(&str, [Complex64; 2], [Complex64; 2]); 6] = [
        ("a,b", params.a, params.b),
        ("b,c", params.b, params.c),
        ("a,c", params.a, params.c),
        ("a+b,c", pair_sum(params.a, params.b), params.c),
        ("b+c,a", pair_sum(params.b, params.c), params.a),
        ("a+c,b", pair_sum(params.a, params.c), params.b),
    ];
    let mut hits = Vec::new();
    for (name, x, y) in combos {
        for (fname, v) in pair_families(x, y, g) {
            if dist_to_integers(v) < tolerance {
                hits.push(format!(
                    "H[{name}]: {fname} = {:.6}+{:.6}i in Z",
                    v.re, v.im
                ));
            }
        }
    }
    hits.sort();
    hits.dedup();
    (!hits.is_empty(), hits)
}
