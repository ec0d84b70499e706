use crate::render::{complex_value, emit, fmt17, rational_value, report};
use crate::{
    Cli, Command, ConnectionArgs, DfArgs, FusionArgs, OdeArgs, RingArgs, VerifyArgs, WeightsArgs,
};
use num::complex::Complex64;
use num::Zero;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use sw_core::dfint::{
    beta_degeneration_check, contour_identity_check, df_generator, df_i, df_j,
    forrester_closed_form, is_df_symmetric_c, j00_gamma_one, on_singular_locus,
    series_expansion_check, transformation_check, DfParams, QuadratureConfig, RegionKind,
    RegionSpec, Sign,
};
use sw_core::exactalg::{rat, rat_int, Rational};
use sw_core::fuchsian::{
    build_operator, connection_matrix, frobenius_series, indicial_exponents,
    reduced_subspace_check, reference_matrix_is_involution, SingularPoint,
};
use sw_core::fusion::{
    class_polynomial, fuse_direct_x2, fuse_labels, grothendieck, k_product, socle_series,
    FusionElement,
};
use sw_core::repdata::{
    block_of, central_charge, min_weight, ns_decomposition, riemann_exponents, zhu_dimension,
    LabelKind, ModuleLabel,
};

pub fn dispatch(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Fusion(a) => cmd_fusion(cli, a),
        Command::Ring(a) => cmd_ring(cli, a),
        Command::Weights(a) => cmd_weights(cli, a),
        Command::Ode(a) => cmd_ode(cli, a),
        Command::Connection(a) => cmd_connection(cli, a),
        Command::Df(a) => cmd_df(cli, a),
        Command::Verify(a) => cmd_verify(cli, a),
    }
}

fn quad_config(cli: &Cli) -> QuadratureConfig {
    let mut cfg = QuadratureConfig::default();
    cfg.precision = cli.precision;
    if let Some(t) = cli.terms {
        // map a series-length style knob onto the refinement depth
        cfg.levels = (t.ilog2() as usize).clamp(4, 9);
    }
    cfg
}

fn parse_label(s: &str, m: usize) -> Result<ModuleLabel, String> {
    let (kind, idx) = s.split_at(1);
    let index: usize = idx.parse().map_err(|_| format!("bad label '{s}'"))?;
    match kind {
        "X" | "x" => ModuleLabel::simple(index, m).map_err(|e| e.to_string()),
        "P" | "p" => ModuleLabel::projective(index, m).map_err(|e| e.to_string()),
        _ => Err(format!("bad label '{s}' (use X<k> or P<k>)")),
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n
            .trim()
            .parse()
            .map_err(|_| format!("bad rational '{s}'"))?;
        let d: i64 = d
            .trim()
            .parse()
            .map_err(|_| format!("bad rational '{s}'"))?;
        if d == 0 {
            return Err("zero denominator".into());
        }
        Ok(rat(n, d))
    } else {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| format!("bad rational '{s}'"))?;
        Ok(rat_int(n))
    }
}

fn parse_params(s: &str) -> Result<BTreeMap<String, f64>, String> {
    let mut out = BTreeMap::new();
    for part in s.split(',') {
        if part.trim().is_empty() {
            continue;
        }
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("bad parameter '{part}' (use key=value)"))?;
        let val: f64 = v
            .trim()
            .parse()
            .map_err(|_| format!("bad numeric value in '{part}'"))?;
        out.insert(k.trim().to_string(), val);
    }
    Ok(out)
}

fn get(p: &BTreeMap<String, f64>, k: &str) -> Result<f64, String> {
    p.get(k)
        .copied()
        .ok_or_else(|| format!("missing parameter '{k}'"))
}

fn cpx(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn cmd_fusion(cli: &Cli, a: &FusionArgs) -> Result<i32, String> {
    if a.m < 1 {
        return Err("m must be >= 1".into());
    }
    let mut results = Map::new();
    if a.table || (a.left.is_none() && a.right.is_none()) {
        let basis = ModuleLabel::basis(a.m);
        let names: Vec<Value> = basis.iter().map(|l| json!(l.name())).collect();
        let mut rows = Vec::new();
        for x in &basis {
            let mut row = Vec::new();
            for y in &basis {
                row.push(json!(fuse_labels(x, y)
                    .map_err(|e| e.to_string())?
                    .display()));
            }
            rows.push(Value::Array(row));
        }
        results.insert("basis".into(), Value::Array(names));
        results.insert("table".into(), Value::Array(rows));
    }
    if let (Some(l), Some(r)) = (&a.left, &a.right) {
        let x = parse_label(l, a.m)?;
        let y = parse_label(r, a.m)?;
        let product = fuse_labels(&x, &y).map_err(|e| e.to_string())?;
        results.insert(
            "product".into(),
            json!({
                "left": x.name(),
                "right": y.name(),
                "value": product.display(),
                "composition_factors": grothendieck(&product).display(),
            }),
        );
    }
    let rep = report(
        json!({ "subcommand": "fusion", "m": a.m, "table": a.table,
                "left": a.left, "right": a.right }),
        Value::Object(results),
        "ok",
    );
    emit(&rep, cli.format);
    Ok(0)
}

fn cmd_ring(cli: &Cli, a: &RingArgs) -> Result<i32, String> {
    if a.m < 1 {
        return Err("m must be >= 1".into());
    }
    let m = a.m;
    let mut results = Map::new();
    match a.kind.as_str() {
        "P" | "p" => {
            results.insert(
                "presentation".into(),
                json!(format!("Z[X]/(U_{} - 2*U_{})", 4 * m + 1, 2 * m)),
            );
            results.insert("rank".into(), json!(4 * m + 1));
            let basis: Vec<Value> = ModuleLabel::basis(m)
                .iter()
                .map(|l| json!({ "label": l.name(), "class": class_polynomial(l).to_string() }))
                .collect();
            results.insert("basis_classes".into(), Value::Array(basis));
        }
        "K" | "k" => {
            results.insert(
                "presentation".into(),
                json!(format!("Z[X]/(U_{} - U_{} - 2)", 2 * m + 1, 2 * m - 1)),
            );
            results.insert("rank".into(), json!(2 * m + 1));
            let basis: Vec<Value> = (1..=2 * m + 1)
                .map(|s| json!({ "label": format!("X{s}"), "class": format!("U_{}", s - 1) }))
                .collect();
            results.insert("basis_classes".into(), Value::Array(basis));
            let projs: Vec<Value> = (1..=2 * m)
                .map(|s| {
                    let p = ModuleLabel::projective(s, m).unwrap();
                    json!({
                        "label": p.name(),
                        "composition_factors":
                            grothendieck(&FusionElement::basis(&p)).display()
                    })
                })
                .collect();
            results.insert("projective_images".into(), Value::Array(projs));
        }
        other => return Err(format!("unknown ring kind '{other}' (use P or K)")),
    }
    let rep = report(
        json!({ "subcommand": "ring", "m": m, "kind": a.kind }),
        Value::Object(results),
        "ok",
    );
    emit(&rep, cli.format);
    Ok(0)
}

fn cmd_weights(cli: &Cli, a: &WeightsArgs) -> Result<i32, String> {
    let m = a.m;
    let c = central_charge(m).map_err(|e| e.to_string())?;
    let mut labels = Vec::new();
    for l in ModuleLabel::basis(m) {
        let mut entry = Map::new();
        entry.insert("label".into(), json!(l.name()));
        entry.insert("block".into(), json!(block_of(&l)));
        match l.kind {
            LabelKind::Simple => {
                entry.insert(
                    "min_weight".into(),
                    rational_value(&min_weight(&l).map_err(|e| e.to_string())?),
                );
                let dec: Vec<Value> = ns_decomposition(&l, a.n_max)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .map(|(mult, w)| json!({ "multiplicity": mult, "weight": rational_value(&w) }))
                    .collect();
                entry.insert("decomposition".into(), Value::Array(dec));
            }
            LabelKind::Projective => {
                let soc = socle_series(&l).map_err(|e| e.to_string())?;
                let layers: Vec<Value> = soc
                    .layers
                    .iter()
                    .map(|layer| Value::Array(layer.iter().map(|x| json!(x.name())).collect()))
                    .collect();
                entry.insert("socle_layers".into(), Value::Array(layers));
            }
        }
        labels.push(Value::Object(entry));
    }
    let scheme = riemann_exponents(m).map_err(|e| e.to_string())?;
    let rep = report(
        json!({ "subcommand": "weights", "m": m, "n_max": a.n_max }),
        json!({
            "central_charge": rational_value(&c),
            "zhu_dimension": zhu_dimension(m).map_err(|e| e.to_string())?,
            "labels": labels,
            "riemann_scheme": {
                "at_0": scheme.exponents_at_0.iter().map(rational_value).collect::<Vec<_>>(),
                "at_1": scheme.exponents_at_1.iter().map(rational_value).collect::<Vec<_>>(),
                "at_infinity": scheme.exponents_at_infinity.iter().map(rational_value).collect::<Vec<_>>(),
            },
        }),
        "ok",
    );
    emit(&rep, cli.format);
    Ok(0)
}

fn cmd_ode(cli: &Cli, a: &OdeArgs) -> Result<i32, String> {
    let m = a.m;
    let op = build_operator(m).map_err(|e| e.to_string())?;
    let poly_json =
        |p: &[Rational]| -> Value { Value::Array(p.iter().map(rational_value).collect()) };
    let scheme = riemann_exponents(m).map_err(|e| e.to_string())?;
    for (point, expect) in [
        (SingularPoint::Zero, &scheme.exponents_at_0),
        (SingularPoint::One, &scheme.exponents_at_1),
        (SingularPoint::Infinity, &scheme.exponents_at_infinity),
    ] {
        let got = indicial_exponents(&op, point).map_err(|e| e.to_string())?;
        if &got != expect {
            return Err(format!("indicial mismatch at {point:?}"));
        }
    }
    let n_terms = cli.terms.unwrap_or(2 * m + 8);
    let mut resonances = Vec::new();
    for rho in scheme.exponents_at_0.iter() {
        let sol =
            frobenius_series(&op, SingularPoint::Zero, rho, n_terms).map_err(|e| e.to_string())?;
        resonances.push(json!({
            "exponent": rational_value(rho),
            "resonant_order": sol.resonant_order,
            "log_residual": rational_value(&sol.log_residual),
            "leading_coefficients": sol.coefficients.iter().take(5)
                .map(rational_value).collect::<Vec<_>>(),
        }));
    }
    let rep = report(
        json!({ "subcommand": "ode", "m": m, "terms": n_terms }),
        json!({
            "numerators": {
                "p0": poly_json(&op.p[0]),
                "p1": poly_json(&op.p[1]),
                "p2": poly_json(&op.p[2]),
                "p3": poly_json(&op.p[3]),
            },
            "indicial_exponents_match_scheme": true,
            "solutions_at_0": resonances,
        }),
        "pass",
    );
    emit(&rep, cli.format);
    Ok(0)
}

fn cmd_connection(cli: &Cli, a: &ConnectionArgs) -> Result<i32, String> {
    let m = a.m;
    let tol = cli.tol.unwrap_or(1e-6);
    let n_terms = cli.terms.unwrap_or(80 + 20 * m.min(6));
    let x0 = parse_rational(&a.matching_point)?;
    let r = connection_matrix(m, n_terms, &x0, tol).map_err(|e| e.to_string())?;
    let mat = |x: &[[f64; 4]; 4]| -> Value {
        Value::Array(
            x.iter()
                .map(|row| Value::Array(row.iter().map(|v| fmt17(*v)).collect()))
                .collect(),
        )
    };
    let pass = r.cross_ratio_residual < tol && r.zero_pattern_ok;
    let rep = report(
        json!({ "subcommand": "connection", "m": m, "terms": n_terms,
                "matching_point": a.matching_point, "tol": tol }),
        json!({
            "reference_matrix_involution": reference_matrix_is_involution(m),
            "reduced_subspace_check": reduced_subspace_check(m),
            "numeric_matrix": mat(&r.numeric_matrix),
            "adjusted_matrix": mat(&r.adjusted_matrix),
            "reference_matrix": mat(&r.reference_matrix),
            "exponent_assignment": format!("{:?}", r.assignment),
            "gauge": format!("{:?}", r.gauge),
            "cross_ratio_residual": fmt17(r.cross_ratio_residual),
            "entrywise_residual": fmt17(r.entrywise_residual),
            "zero_pattern_ok": r.zero_pattern_ok,
        }),
        if pass { "pass" } else { "fail" },
    );
    emit(&rep, cli.format);
    Ok(if pass { 0 } else { 1 })
}

fn cmd_df(cli: &Cli, a: &DfArgs) -> Result<i32, String> {
    let cfg = quad_config(cli);
    let p = parse_params(&a.params)?;
    let tol = cli.tol;
    let command = json!({
        "subcommand": "df", "mode": a.mode, "region": a.region, "kind": a.kind,
        "params": a.params, "z1": a.z1, "z2": a.z2,
    });
    match a.mode.as_str() {
        "region" => {
            let region = a.region.as_deref().ok_or("region mode needs --region")?;
            let kind = match a.kind.as_str() {
                "J" | "j" => RegionKind::J,
                "I" | "i" => RegionKind::I,
                other => return Err(format!("unknown kind '{other}'")),
            };
            let spec = RegionSpec::parse(kind, region).map_err(|e| e.to_string())?;
            let gamma = cpx(get(&p, "gamma")?);
            let v = match kind {
                RegionKind::J => df_j(
                    &spec,
                    None,
                    cpx(get(&p, "a1")?),
                    cpx(get(&p, "a2")?),
                    cpx(get(&p, "b1")?),
                    cpx(get(&p, "b2")?),
                    gamma,
                    &cfg,
                ),
                RegionKind::I => {
                    let params = DfParams {
                        a: [cpx(get(&p, "a1")?), cpx(get(&p, "a2")?)],
                        b: [cpx(get(&p, "b1")?), cpx(get(&p, "b2")?)],
                        c: [cpx(get(&p, "c1")?), cpx(get(&p, "c2")?)],
                        gamma,
                    };
                    df_i(&spec, None, &params, a.z1, a.z2, &cfg)
                }
            }
            .map_err(|e| e.to_string())?;
            let rep = report(
                command,
                json!({
                    "value": complex_value(v.value),
                    "error_estimate": fmt17(v.error_estimate),
                }),
                "ok",
            );
            emit(&rep, cli.format);
            Ok(0)
        }
        "forrester" => {
            let (av, bv, rho) = (get(&p, "a")?, get(&p, "b")?, get(&p, "rho")?);
            let closed = forrester_closed_form(cpx(av), cpx(bv), cpx(rho))
                .map_err(|e| e.to_string())?;
            let rp = 1.0 / rho;
            let (j, est, side) = j00_gamma_one(
                cpx(av),
                cpx(bv),
                cpx(-av * rp),
                cpx(-bv * rp),
                None,
                &cfg,
            )
            .map_err(|e| e.to_string())?;
            let rel = (j.norm() / closed.norm() - 1.0).abs();
            let pass = rel < tol.unwrap_or(1e-6);
            let rep = report(
                command,
                json!({
                    "closed_form": complex_value(closed),
                    "quadrature": complex_value(j),
                    "quadrature_error_estimate": fmt17(est),
                    "ibp_side": format!("{side:?}"),
                    "modulus_relative_residual": fmt17(rel),
                }),
                if pass { "pass" } else { "fail" },
            );
            emit(&rep, cli.format);
            Ok(if pass { 0 } else { 1 })
        }
        "transform" => {
            let (av, bv, rho) = (get(&p, "a")?, get(&p, "b")?, get(&p, "rho")?);
            let with_f = p.get("with_f").copied().unwrap_or(0.0) != 0.0;
            let f = if with_f {
                Some(sw_core::exactalg::LaurentPoly2::one(0).add(&df_generator(0, 1, cpx(rho))))
            } else {
                None
            };
            let rep_data = transformation_check(cpx(av), cpx(bv), cpx(rho), f.as_ref(), &cfg)
                .map_err(|e| e.to_string())?;
            let t = tol.unwrap_or(1e-5);
            let entries: Vec<Value> = rep_data
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "region": e.region,
                        "predicted": fmt17(e.predicted),
                        "measured": e.measured.map(fmt17),
                        "residual": e.residual.map(fmt17),
                        "composite": e.composite,
                        "skipped": e.skipped,
                    })
                })
                .collect();
            let pass = rep_data.max_residual < t
                && rep_data.entries.iter().any(|e| e.residual.is_some());
            let rep = report(
                command,
                json!({
                    "j00": complex_value(rep_data.j00),
                    "entries": entries,
                    "max_residual": fmt17(rep_data.max_residual),
                }),
                if pass { "pass" } else { "fail" },
            );
            emit(&rep, cli.format);
            Ok(if pass { 0 } else { 1 })
        }
        "contour" => {
            let (av, rho, g, z) = (
                get(&p, "a")?,
                get(&p, "rho")?,
                get(&p, "gamma")?,
                get(&p, "z")?,
            );
            let r = contour_identity_check(cpx(av), cpx(rho), cpx(g), z, &cfg)
                .map_err(|e| e.to_string())?;
            let t = tol.unwrap_or(1e-4);
            let worst = r
                .main_residual
                .max(r.companion1_residual)
                .max(r.companion2_residual);
            let rep = report(
                command,
                json!({
                    "main_residual": fmt17(r.main_residual),
                    "companion1_residual": fmt17(r.companion1_residual),
                    "companion2_residual": fmt17(r.companion2_residual),
                    "scale": fmt17(r.scale),
                }),
                if worst < t { "pass" } else { "fail" },
            );
            emit(&rep, cli.format);
            Ok(if worst < t { 0 } else { 1 })
        }
        "series" => {
            let params = DfParams {
                a: [cpx(get(&p, "a1")?), cpx(get(&p, "a2")?)],
                b: [cpx(get(&p, "b1")?), cpx(get(&p, "b2")?)],
                c: [cpx(get(&p, "c1")?), cpx(get(&p, "c2")?)],
                gamma: cpx(get(&p, "gamma")?),
            };
            let z = get(&p, "z")?;
            let kmax = p.get("k").copied().unwrap_or(8.0) as usize;
            let (lhs, rhs, rel) =
                series_expansion_check(&params, z, kmax, &cfg).map_err(|e| e.to_string())?;
            let t = tol.unwrap_or(1e-6);
            let rep = report(
                command,
                json!({
                    "integral": complex_value(lhs),
                    "series": complex_value(rhs),
                    "relative_residual": fmt17(rel),
                    "truncation_order": kmax,
                }),
                if rel < t { "pass" } else { "fail" },
            );
            emit(&rep, cli.format);
            Ok(if rel < t { 0 } else { 1 })
        }
        "locus" => {
            let a_pair = [cpx(get(&p, "a1")?), cpx(get(&p, "a2")?)];
            let b_pair = [cpx(get(&p, "b1")?), cpx(get(&p, "b2")?)];
            let gamma = cpx(get(&p, "gamma")?);
            let t = tol.unwrap_or(1e-9);
            // the c-pair selects the full seven-parameter union; without it
            // only the two-point hyperplane family applies
            let (hit, families) = match (p.get("c1"), p.get("c2")) {
                (Some(&c1), Some(&c2)) => {
                    let params = DfParams {
                        a: a_pair,
                        b: b_pair,
                        c: [cpx(c1), cpx(c2)],
                        gamma,
                    };
                    on_singular_locus(&params, t)
                }
                _ => sw_core::dfint::on_singular_locus_j(a_pair, b_pair, gamma, t),
            };
            let rep = report(
                command,
                json!({ "on_locus": hit, "violated_hyperplanes": families, "tolerance": fmt17(t) }),
                "ok",
            );
            emit(&rep, cli.format);
            Ok(0)
        }
        "symmetry" => {
            let rho = cpx(get(&p, "rho")?);
            let n = p.get("n").copied().unwrap_or(1.0) as i64;
            let center = p.get("center").copied().unwrap_or(0.0) as i64;
            let f = df_generator(center, n, rho);
            let ok = is_df_symmetric_c(&f, rho, 1e-12);
            let rep = report(
                command,
                json!({
                    "generator": format!("(u-{center})^{n} + (-1/rho)(v-{center})^{n}"),
                    "diagonal_compatible": ok,
                }),
                if ok { "pass" } else { "fail" },
            );
            emit(&rep, cli.format);
            Ok(if ok { 0 } else { 1 })
        }
        other => Err(format!(
            "unknown df mode '{other}' (region, forrester, transform, contour, series, locus, symmetry)"
        )),
    }
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs) -> Result<i32, String> {
    let m = a.m;
    if m < 1 {
        return Err("m must be >= 1".into());
    }
    let mut checks: Vec<Value> = Vec::new();
    let mut all_pass = true;
    let mut push = |name: &str, pass: bool, detail: String, all: &mut bool| {
        *all &= pass;
        checks.push(json!({ "check": name, "pass": pass, "detail": detail }));
    };

    // fusion oracle
    {
        let x2 = ModuleLabel::simple(2, m).unwrap();
        let bad = ModuleLabel::basis(m)
            .iter()
            .filter(|l| fuse_labels(&x2, l).unwrap() != fuse_direct_x2(l))
            .count();
        push(
            "fusion_oracle",
            bad == 0,
            format!("{bad} mismatches over {} labels", 4 * m + 1),
            &mut all_pass,
        );
    }
    // ring axioms on pairs (triples when small)
    {
        let basis = ModuleLabel::basis(m);
        let elems: Vec<FusionElement> = basis.iter().map(FusionElement::basis).collect();
        let mut ok = true;
        for (i, x) in elems.iter().enumerate() {
            if sw_core::fusion::fuse(&elems[0], x).unwrap() != *x {
                ok = false;
            }
            for y in elems.iter().skip(i) {
                let xy = sw_core::fusion::fuse(x, y).unwrap();
                ok &= xy == sw_core::fusion::fuse(y, x).unwrap();
                ok &= xy.is_nonnegative();
            }
        }
        if m <= 3 {
            for x in &elems {
                for y in &elems {
                    let xy = sw_core::fusion::fuse(x, y).unwrap();
                    for z in &elems {
                        let yz = sw_core::fusion::fuse(y, z).unwrap();
                        ok &= sw_core::fusion::fuse(&xy, z).unwrap()
                            == sw_core::fusion::fuse(x, &yz).unwrap();
                    }
                }
            }
        }
        push(
            "ring_axioms",
            ok,
            format!("rank {}", 4 * m + 1),
            &mut all_pass,
        );
    }
    // Grothendieck homomorphism
    {
        let basis = ModuleLabel::basis(m);
        let mut ok = true;
        for x in &basis {
            for y in &basis {
                let lhs = grothendieck(&fuse_labels(x, y).unwrap());
                let rhs = k_product(
                    &grothendieck(&FusionElement::basis(x)),
                    &grothendieck(&FusionElement::basis(y)),
                )
                .unwrap();
                ok &= lhs == rhs;
            }
        }
        push(
            "grothendieck_homomorphism",
            ok,
            "all basis pairs".into(),
            &mut all_pass,
        );
    }
    // Riemann scheme + Fuchs relation
    {
        let op = build_operator(m).map_err(|e| e.to_string())?;
        let scheme = riemann_exponents(m).map_err(|e| e.to_string())?;
        let ok = indicial_exponents(&op, SingularPoint::Zero)
            .map(|e| e == scheme.exponents_at_0)
            .unwrap_or(false)
            && indicial_exponents(&op, SingularPoint::Infinity)
                .map(|e| e == scheme.exponents_at_infinity)
                .unwrap_or(false)
            && scheme.sum() == rat_int(6);
        push(
            "riemann_scheme",
            ok,
            "exact match at 0, 1, infinity".into(),
            &mut all_pass,
        );
    }
    // log-free resonances
    {
        let op = build_operator(m).map_err(|e| e.to_string())?;
        let scheme = riemann_exponents(m).map_err(|e| e.to_string())?;
        let mut ok = true;
        let mut resonances = 0;
        for rho in scheme.exponents_at_0.iter() {
            match frobenius_series(&op, SingularPoint::Zero, rho, 2 * m + 3) {
                Ok(sol) => {
                    ok &= sol.log_residual.is_zero();
                    if sol.resonant_order.is_some() {
                        resonances += 1;
                    }
                }
                Err(_) => ok = false,
            }
        }
        ok &= resonances == 2;
        push(
            "no_logarithms",
            ok,
            format!("{resonances} resonant exponents"),
            &mut all_pass,
        );
    }
    // connection data
    {
        let ok_sym = reference_matrix_is_involution(m) && reduced_subspace_check(m);
        push(
            "connection_involution",
            ok_sym,
            "M*M = I symbolically".into(),
            &mut all_pass,
        );
        if m <= 3 {
            let r = connection_matrix(m, 80 + 20 * m, &rat(1, 2), cli.tol.unwrap_or(1e-6))
                .map_err(|e| e.to_string())?;
            let ok = r.zero_pattern_ok && r.cross_ratio_residual < cli.tol.unwrap_or(1e-6);
            push(
                "connection_numeric",
                ok,
                format!(
                    "cross-ratio {:.2e}, assignment {:?}",
                    r.cross_ratio_residual, r.assignment
                ),
                &mut all_pass,
            );
        }
    }
    // structural data
    {
        let ok = zhu_dimension(m).map(|d| d == 6 * m + 1).unwrap_or(false)
            && block_of(&ModuleLabel::simple(2 * m + 1, m).unwrap()) == m + 1
            && (1..=2 * m).all(|s| {
                socle_series(&ModuleLabel::projective(s, m).unwrap())
                    .map(|soc| soc.layers[0] == soc.layers[2] && soc.layers[1].len() == 2)
                    .unwrap_or(false)
            });
        push(
            "structural_data",
            ok,
            format!("Zhu dimension {}", 6 * m + 1),
            &mut all_pass,
        );
    }
    if !a.quick {
        let cfg = quad_config(cli);
        // closed-form comparison at two points
        {
            let mut worst = 0.0f64;
            let mut ok = true;
            for (av, bv, rho) in [(-0.3, -0.45, 0.4), (-0.2, -0.35, 0.3)] {
                let rp = 1.0 / rho;
                match (
                    j00_gamma_one(cpx(av), cpx(bv), cpx(-av * rp), cpx(-bv * rp), None, &cfg),
                    forrester_closed_form(cpx(av), cpx(bv), cpx(rho)),
                ) {
                    (Ok((j, _, _)), Ok(f)) => {
                        let rel = (j.norm() / f.norm() - 1.0).abs();
                        worst = worst.max(rel);
                        ok &= rel < 1e-6;
                    }
                    _ => ok = false,
                }
            }
            push(
                "forrester",
                ok,
                format!("worst rel {worst:.2e}"),
                &mut all_pass,
            );
        }
        // one transformation point
        {
            let r = transformation_check(cpx(-0.15), cpx(-0.2), cpx(0.4), None, &cfg)
                .map_err(|e| e.to_string())?;
            let ok = r.max_residual < 1e-5;
            push(
                "transformation",
                ok,
                format!("max residual {:.2e}", r.max_residual),
                &mut all_pass,
            );
        }
        // gamma = 0 degenerations at a seeded random point
        {
            let mut state = cli.seed.wrapping_add(0x9e3779b97f4a7c15);
            let mut unit = || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                ((state >> 11) as f64) / ((1u64 << 53) as f64)
            };
            let a1 = -0.45 + 0.3 * unit();
            let b1 = -0.45 + 0.3 * unit();
            let a2 = -0.45 + 0.2 * unit();
            let b2 = -1.15 - a2 + 0.1 * unit();
            let (mv, pv, rel) = beta_degeneration_check(
                Sign::Plus,
                (0, 1),
                [cpx(a1), cpx(a2)],
                [cpx(b1), cpx(b2)],
                &cfg,
            )
            .map_err(|e| e.to_string())?;
            let _ = (mv, pv);
            push(
                "beta_degeneration",
                rel < 1e-8,
                format!("rel {rel:.2e} (seeded point)"),
                &mut all_pass,
            );
        }
        // contour identities at one point
        {
            let r = contour_identity_check(cpx(-0.4), cpx(-0.4 / 0.45), cpx(0.06), 0.5, &cfg)
                .map_err(|e| e.to_string())?;
            let worst = r
                .main_residual
                .max(r.companion1_residual)
                .max(r.companion2_residual);
            push(
                "contour_identities",
                worst < 1e-4,
                format!("worst {worst:.2e}"),
                &mut all_pass,
            );
        }
        // series expansion at one point
        {
            let params = DfParams {
                a: [cpx(-0.3), cpx(-0.25)],
                b: [cpx(-0.2), cpx(-0.15)],
                c: [cpx(-0.35), cpx(-0.3)],
                gamma: cpx(0.2),
            };
            let cfg6 = {
                let mut c = cfg;
                c.levels = 6;
                c
            };
            let (_, _, rel) =
                series_expansion_check(&params, 0.1, 6, &cfg6).map_err(|e| e.to_string())?;
            push(
                "series_expansion",
                rel < 1e-6,
                format!("rel {rel:.2e}"),
                &mut all_pass,
            );
        }
    }
    let rep = report(
        json!({ "subcommand": "verify", "m": m, "quick": a.quick }),
        json!({ "checks": checks }),
        if all_pass { "pass" } else { "fail" },
    );
    emit(&rep, cli.format);
    Ok(if all_pass { 0 } else { 1 })
}
