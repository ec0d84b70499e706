//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured margins (run with `--nocapture` to see them).

use num::complex::Complex64;
use num::{BigInt, One, Signed, Zero};
use sw_core::dfint::{
    beta_degeneration_check, contour_identity_check, df_generator, forrester_closed_form,
    is_df_symmetric_c, j00_gamma_one, series_expansion_check, transformation_check, DfParams,
    QuadratureConfig, Sign,
};
use sw_core::exactalg::{rat, rat_int, rat_to_f64, LaurentPoly2};
use sw_core::fuchsian::{
    build_operator, connection_matrix, exchange_matrix_is_involution, frobenius_series,
    indicial_exponents, reduced_subspace_check, reference_matrix_is_involution, SingularPoint,
};
use sw_core::fusion::{
    class_polynomial, from_reduced, fuse, fuse_direct_x2, fuse_labels, grothendieck,
    grothendieck_reduce, hom_to_unit_dim, k_product, reduce_p, socle_series, FusionElement,
};
use sw_core::repdata::{
    block_of, central_charge, conformal_weight, min_weight, ns_decomposition, riemann_exponents,
    zhu_dimension, LabelKind, ModuleLabel,
};

fn cpx(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn criterion_01_fusion_oracle() {
    for m in 1..=6 {
        let x2 = ModuleLabel::simple(2, m).unwrap();
        for label in ModuleLabel::basis(m) {
            let via_ring = fuse_labels(&x2, &label).unwrap();
            let via_table = fuse_direct_x2(&label);
            assert_eq!(
                via_ring,
                via_table,
                "m={m}, X2 x {}: {} vs {}",
                label.name(),
                via_ring.display(),
                via_table.display()
            );
        }
    }
    println!("criterion 01 (fusion oracle, m=1..6): PASS");
}

#[test]
fn criterion_02_ring_axioms() {
    for m in 1..=4 {
        let basis = ModuleLabel::basis(m);
        let elems: Vec<FusionElement> = basis.iter().map(FusionElement::basis).collect();
        let unit = &elems[0];
        // unit and nonnegativity and commutativity
        for (i, a) in elems.iter().enumerate() {
            assert_eq!(&fuse(unit, a).unwrap(), a, "unit at m={m}");
            for b in elems.iter().skip(i) {
                let ab = fuse(a, b).unwrap();
                let ba = fuse(b, a).unwrap();
                assert_eq!(ab, ba, "commutativity at m={m}");
                assert!(ab.is_nonnegative(), "nonnegativity at m={m}");
            }
        }
        // associativity over all basis triples
        let products: Vec<Vec<FusionElement>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| fuse(a, b).unwrap()).collect())
            .collect();
        for (i, a) in elems.iter().enumerate() {
            for (j, _b) in elems.iter().enumerate() {
                for (k, c) in elems.iter().enumerate() {
                    let left = fuse(&products[i][j], c).unwrap();
                    let right = fuse(a, &products[j][k]).unwrap();
                    assert_eq!(left, right, "associativity at m={m} ({i},{j},{k})");
                }
            }
        }
        // rank 4m+1: the reduced representatives of the basis classes are
        // linearly independent over Z (their matrix is a basis bijection)
        let mut seen = vec![false; 4 * m + 1];
        for label in &basis {
            let poly = reduce_p(&class_polynomial(label), m);
            let e = from_reduced(&poly, m);
            assert_eq!(&e, &FusionElement::basis(label), "round trip at m={m}");
            let idx = match label.kind {
                LabelKind::Simple => label.index - 1,
                LabelKind::Projective => 2 * m + label.index,
            };
            assert!(!seen[idx]);
            seen[idx] = true;
        }
        assert!(seen.iter().all(|&s| s), "P-ring rank 4m+1 at m={m}");
        // K-ring rank 2m+1: U_0..U_{2m} reduce to themselves
        for k in 0..=2 * m {
            let u = sw_core::exactalg::chebyshev_u(k);
            assert_eq!(grothendieck_reduce(&u, m), u, "K-rank at m={m}");
        }
        // self-duality: dim Hom(L x L, X_1) = 1 for every simple L
        for s in 1..=2 * m + 1 {
            let l = ModuleLabel::simple(s, m).unwrap();
            let sq = fuse_labels(&l, &l).unwrap();
            assert_eq!(
                hom_to_unit_dim(&sq),
                BigInt::one(),
                "self-duality of X{s} at m={m}"
            );
        }
    }
    println!("criterion 02 (ring axioms + ranks, m=1..4): PASS");
}

#[test]
fn criterion_03_grothendieck_homomorphism() {
    for m in 1..=4 {
        let basis = ModuleLabel::basis(m);
        for a in &basis {
            for b in &basis {
                let lhs = grothendieck(&fuse_labels(a, b).unwrap());
                let rhs = k_product(
                    &grothendieck(&FusionElement::basis(a)),
                    &grothendieck(&FusionElement::basis(b)),
                )
                .unwrap();
                assert_eq!(lhs, rhs, "m={m}, {} x {}", a.name(), b.name());
            }
        }
    }
    println!("criterion 03 (Grothendieck ring homomorphism, m=1..4): PASS");
}

#[test]
fn criterion_04_riemann_scheme() {
    for m in 1..=10 {
        let op = build_operator(m).unwrap();
        let scheme = riemann_exponents(m).unwrap();
        assert_eq!(
            indicial_exponents(&op, SingularPoint::Zero).unwrap(),
            scheme.exponents_at_0
        );
        assert_eq!(
            indicial_exponents(&op, SingularPoint::One).unwrap(),
            scheme.exponents_at_1
        );
        assert_eq!(
            indicial_exponents(&op, SingularPoint::Infinity).unwrap(),
            scheme.exponents_at_infinity
        );
        assert_eq!(scheme.sum(), rat_int(6), "Fuchs relation at m={m}");
        let d1 = &scheme.exponents_at_0[0] - &scheme.exponents_at_0[2];
        let d2 = &scheme.exponents_at_0[1] - &scheme.exponents_at_0[3];
        assert_eq!(d1, rat_int(2 * m as i64 - 1));
        assert_eq!(d2, rat_int(2 * m as i64 + 1));
    }
    println!("criterion 04 (Riemann scheme exact, m=1..10): PASS");
}

#[test]
fn criterion_05_no_logarithms() {
    let mut checked = 0;
    for m in 1..=5 {
        let op = build_operator(m).unwrap();
        let scheme = riemann_exponents(m).unwrap();
        for point in [SingularPoint::Zero, SingularPoint::One] {
            for rho in scheme.exponents_at_0.iter() {
                let sol = frobenius_series(&op, point, rho, 2 * m + 3)
                    .unwrap_or_else(|e| panic!("m={m} rho={rho}: {e}"));
                assert!(sol.log_residual.is_zero());
                if sol.resonant_order.is_some() {
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 2 * 2 * 5, "two resonant exponents per point per m");
    println!("criterion 05 (log-free resonances, m=1..5, both points): PASS");
}

#[test]
fn criterion_06_connection_matrix() {
    for m in 1..=10 {
        assert!(reference_matrix_is_involution(m), "M^2 = I at m={m}");
        assert!(reduced_subspace_check(m), "reduced 2x2 at m={m}");
    }
    assert!(exchange_matrix_is_involution());
    let mut worst_cr = 0.0f64;
    let mut worst_ew = 0.0f64;
    for m in 1..=3 {
        let n_terms = 80 + 20 * m;
        let r = connection_matrix(m, n_terms, &rat(1, 2), 1e-6).unwrap();
        assert!(
            r.zero_pattern_ok,
            "zero pattern at m={m} (assignment {:?})",
            r.assignment
        );
        assert!(
            r.cross_ratio_residual < 1e-6,
            "cross-ratio residual {} at m={m}",
            r.cross_ratio_residual
        );
        worst_cr = worst_cr.max(r.cross_ratio_residual);
        worst_ew = worst_ew.max(r.entrywise_residual);
    }
    println!(
        "criterion 06 (connection matrix: involution m=1..10, numeric m=1..3): PASS \
         (worst cross-ratio {worst_cr:.2e}, worst entrywise {worst_ew:.2e})"
    );
}

#[test]
fn criterion_07_forrester_formula() {
    let cfg = QuadratureConfig::default();
    let points = [
        (-0.3, -0.45, 0.4),
        (-0.2, -0.35, 0.3),
        (-0.25, -0.3, 0.5),
        (-0.15, -0.2, 0.45),
        (-0.35, -0.25, 0.35),
    ];
    let mut worst = 0.0f64;
    for (a, b, rho) in points {
        let rp = 1.0 / rho;
        let (ap, bp) = (-a * rp, -b * rp);
        let (j, _, _) = j00_gamma_one(cpx(a), cpx(b), cpx(ap), cpx(bp), None, &cfg).unwrap();
        let f = forrester_closed_form(cpx(a), cpx(b), cpx(rho)).unwrap();
        let rel = (j.norm() / f.norm() - 1.0).abs();
        assert!(rel < 1e-6, "(a,b,rho)=({a},{b},{rho}): rel {rel}");
        worst = worst.max(rel);
    }
    println!("criterion 07 (closed Gamma-product form at 5 points): PASS (worst rel {worst:.2e})");
}

#[test]
fn criterion_08_transformation_formulas() {
    let cfg = QuadratureConfig::default();
    let mut worst = 0.0f64;
    // window with negative exponents: all six ratios for F = 1 (the two
    // doubly-infinite boxes through the product factorization), plus the
    // u-side ratios for the nonconstant diagonal-compatible multiplier
    for (a, b, rho) in [
        (-0.15, -0.2, 0.4),
        (-0.12, -0.22, 0.35),
        (-0.2, -0.12, 0.45),
    ] {
        let report = transformation_check(cpx(a), cpx(b), cpx(rho), None, &cfg).unwrap();
        for e in &report.entries {
            let res = e
                .residual
                .unwrap_or_else(|| panic!("({a},{b},{rho}) {}: {:?}", e.region, e.skipped));
            assert!(res < 1e-5, "({a},{b},{rho}) {}: residual {res}", e.region);
            worst = worst.max(res);
        }
        let f = LaurentPoly2::one(0).add(&df_generator(0, 1, cpx(rho)));
        assert!(is_df_symmetric_c(&f, cpx(rho), 1e-12));
        let report = transformation_check(cpx(a), cpx(b), cpx(rho), Some(&f), &cfg).unwrap();
        let measured: Vec<_> = report
            .entries
            .iter()
            .filter(|e| e.residual.is_some() && !e.composite)
            .collect();
        assert!(measured.len() >= 2, "u-side ratios measured with F != 1");
        for e in measured {
            let res = e.residual.unwrap();
            assert!(res < 1e-5, "F!=1 ({a},{b},{rho}) {}: {res}", e.region);
            worst = worst.max(res);
        }
    }
    // mirrored window: positive exponents verify the v-side ratios with the
    // nonconstant multiplier
    for (a, b, rho) in [(0.3, 0.45, 2.5), (0.25, 0.3, 3.0)] {
        let f = LaurentPoly2::one(0).add(&df_generator(0, 1, cpx(rho)));
        let report = transformation_check(cpx(a), cpx(b), cpx(rho), Some(&f), &cfg).unwrap();
        let measured: Vec<_> = report
            .entries
            .iter()
            .filter(|e| e.residual.is_some() && !e.composite)
            .collect();
        assert!(measured.len() >= 2, "v-side ratios measured with F != 1");
        for e in measured {
            let res = e.residual.unwrap();
            assert!(res < 1e-5, "F!=1 ({a},{b},{rho}) {}: {res}", e.region);
            worst = worst.max(res);
        }
    }
    println!(
        "criterion 08 (six transformation ratios, F=1 and nonconstant F): PASS \
         (worst residual {worst:.2e})"
    );
}

#[test]
fn criterion_09_beta_degenerations() {
    use rand::{Rng, SeedableRng};
    let cfg = QuadratureConfig::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for trial in 0..10 {
        // finite-axis exponents in (-1/2, -1/10); infinite-axis pairs with
        // decay exponent below -1
        let a1 = rng.gen_range(-0.5..-0.1);
        let b1 = rng.gen_range(-0.5..-0.1);
        let a2 = rng.gen_range(-0.45..-0.2);
        let b2 = rng.gen_range(-0.95..(-1.05 - a2));
        let a = [cpx(a1), cpx(a2)];
        let b = [cpx(b1), cpx(b2)];
        for sign in [Sign::Plus, Sign::Minus] {
            let (mv, pv, rel) = beta_degeneration_check(sign, (0, 1), a, b, &cfg).unwrap();
            assert!(rel < 1e-8, "trial {trial} {sign:?} (0,1): {mv} vs {pv}");
            worst = worst.max(rel);
            // mirrored orientation
            let am = [a[1], a[0]];
            let bm = [b[1], b[0]];
            let (mv, pv, rel) = beta_degeneration_check(sign, (1, 0), am, bm, &cfg).unwrap();
            assert!(rel < 1e-8, "trial {trial} {sign:?} (1,0): {mv} vs {pv}");
            worst = worst.max(rel);
        }
    }
    println!(
        "criterion 09 (Gamma-product degenerations at gamma=0, 10 random points): PASS \
         (worst rel {worst:.2e})"
    );
}

#[test]
fn criterion_10_series_expansion() {
    let cfg = QuadratureConfig::default().with_levels(6);
    let params = DfParams {
        a: [cpx(-0.3), cpx(-0.25)],
        b: [cpx(-0.2), cpx(-0.15)],
        c: [cpx(-0.35), cpx(-0.3)],
        gamma: cpx(0.2),
    };
    let mut worst = 0.0f64;
    for z in [0.05, 0.1] {
        let (lhs, rhs, rel) = series_expansion_check(&params, z, 8, &cfg).unwrap();
        assert!(rel < 1e-6, "z={z}: {lhs} vs {rhs} rel {rel}");
        worst = worst.max(rel);
    }
    println!("criterion 10 (series expansion at z=0.05, 0.1): PASS (worst rel {worst:.2e})");
}

#[test]
fn criterion_11_contour_identities() {
    assert!(
        exchange_matrix_is_involution(),
        "symbolic involution in (c, c')"
    );
    let cfg = QuadratureConfig::default().with_levels(6);
    let mut worst = 0.0f64;
    for (a, ap, g, z) in [
        (-0.4, -0.45, 0.1, 0.5),
        (-0.45, -0.4, 0.06, 0.4),
        (-0.42, -0.38, 0.0, 0.6),
    ] {
        let rho = cpx(-a / ap); // a' = -a/rho
        let r = contour_identity_check(cpx(a), rho, cpx(g), z, &cfg).unwrap();
        for (name, res) in [
            ("main", r.main_residual),
            ("companion1", r.companion1_residual),
            ("companion2", r.companion2_residual),
        ] {
            assert!(res < 1e-4, "(a,a',g,z)=({a},{ap},{g},{z}) {name}: {res}");
            worst = worst.max(res);
        }
    }
    println!(
        "criterion 11 (contour identities at 3 points + symbolic involution): PASS \
         (worst residual {worst:.2e})"
    );
}

#[test]
fn criterion_12_structural_data() {
    for m in 1..=6 {
        assert_eq!(zhu_dimension(m).unwrap(), 6 * m + 1);
        // blocks
        assert_eq!(block_of(&ModuleLabel::simple(2 * m + 1, m).unwrap()), m + 1);
        for i in 0..m {
            assert_eq!(block_of(&ModuleLabel::simple(2 * i + 1, m).unwrap()), i + 1);
            assert_eq!(
                block_of(&ModuleLabel::simple(2 * (m - i), m).unwrap()),
                i + 1
            );
            assert_eq!(
                block_of(&ModuleLabel::projective(2 * i + 1, m).unwrap()),
                i + 1
            );
        }
        for i in 1..=m {
            assert_eq!(
                block_of(&ModuleLabel::projective(2 * i, m).unwrap()),
                m - i + 1
            );
        }
        // socle layers: three layers, outer = inner repetition structure
        for s in 1..=2 * m {
            let p = ModuleLabel::projective(s, m).unwrap();
            let soc = socle_series(&p).unwrap();
            assert_eq!(soc.layers[0], soc.layers[2]);
            assert_eq!(soc.layers[1].len(), 2);
            assert_eq!(soc.layers[1][0], soc.layers[1][1]);
            let expected_outer = if s % 2 == 0 {
                ModuleLabel::simple(2 * (m - s / 2) + 1, m).unwrap()
            } else {
                ModuleLabel::simple(2 * (m - (s - 1) / 2), m).unwrap()
            };
            assert_eq!(soc.layers[0][0], expected_outer);
            let inner = soc.layers[1][0];
            assert_eq!(inner.index, s);
        }
        // decomposition multiplicity patterns and weights
        for s in 1..=2 * m + 1 {
            let l = ModuleLabel::simple(s, m).unwrap();
            let dec = ns_decomposition(&l, 4).unwrap();
            if s % 2 == 1 {
                for (n, (mult, w)) in dec.iter().enumerate() {
                    assert_eq!(*mult, 2 * n + 1, "odd multiplicities at X{s}, m={m}");
                    assert_eq!(*w, conformal_weight(1, s as i64, -2 * n as i64, m));
                }
                assert_eq!(dec[0].1, min_weight(&l).unwrap());
            } else {
                for (idx, (mult, w)) in dec.iter().enumerate() {
                    let n = idx + 1;
                    assert_eq!(*mult, 2 * n, "even multiplicities at X{s}, m={m}");
                    assert_eq!(*w, conformal_weight(1, s as i64, -2 * n as i64 + 1, m));
                }
                assert_eq!(dec[0].1, min_weight(&l).unwrap());
            }
        }
        // weights stay exact rationals
        assert!(central_charge(m).unwrap().denom() > &BigInt::zero());
        assert!(rat_to_f64(&central_charge(m).unwrap()) < 0.0);
        assert!(!riemann_exponents(m).unwrap().exponents_at_0[0].is_negative());
    }
    println!("criterion 12 (structural data, m=1..6): PASS");
}
