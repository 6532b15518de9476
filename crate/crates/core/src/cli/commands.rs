//! Subcommand implementations. Each returns a [`Report`]: human-readable
//! text, a JSON value and an exit code.

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::manifest::Manifest;
use crate::cohomology::{beta_coefficients, build_face_ring, pontryagin_p1, spinc_c1, CohomologyClass};
use crate::exactalg::{fmt_rational, int, Rational};
use crate::genus::{
    elliptic_genus, equivariant_index, euler_characteristic, index, line_class, signature, witten_genus,
    BundleSpec,
};
use crate::polytope::QuasitoricManifold;
use crate::theorems::{
    alpha, alpha_groups, check_theorem34_hypotheses, find_circle, finiteness_census, index_I, simple_group,
    synthetic_projective_ring, EquivariantDegree4Class, Lemma52Bundles,
};
use crate::{Error, Result};

/// Success, property violation (a bug), invalid input, unmet precondition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Violation = 1,
    Invalid = 2,
    Precondition = 3,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub status: Status,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(status: Status, text: String, mut json: Value) -> Self {
        let label = match status {
            Status::Pass => "pass",
            Status::Violation => "fail",
            Status::Invalid => "invalid",
            Status::Precondition => "hypothesis",
        };
        json["status"] = json!(label);
        Self { status, text, json }
    }

    pub fn from_error(e: &Error) -> Self {
        let (status, kind) = match e {
            Error::Parse { .. } | Error::Argument(_) | Error::InvalidSpinc { .. } => (Status::Invalid, "input"),
            Error::InvalidLambda(_) => (Status::Invalid, "lambda"),
            Error::DegenerateCircle { .. } => (Status::Invalid, "circle"),
            Error::Precondition(_) | Error::Shape(_) => (Status::Precondition, "precondition"),
            Error::Hypothesis { .. } => (Status::Precondition, "hypothesis"),
            _ => (Status::Violation, "internal"),
        };
        let mut json = json!({ "error": kind, "message": e.to_string() });
        match e {
            Error::InvalidLambda(v) => json["vertices"] = json!(v),
            Error::Hypothesis { kernel: Some(k), .. } => json["kernel"] = json!(k),
            Error::Parse { line, .. } => json["line"] = json!(line),
            _ => {}
        }
        Self::new(status, format!("error: {e}\n"), json)
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn rationals(items: &[Rational]) -> Vec<String> {
    items.iter().map(fmt_rational).collect()
}

pub fn describe(manifest: &Manifest) -> Result<Report> {
    let m = manifest.manifold()?;
    let ring = build_face_ring(&m)?;
    let (n, facets, vertices) = (m.dim(), m.facet_count(), m.fixed_points().len());
    let chi = euler_characteristic(&m)?;
    if chi != int(vertices as i64) {
        return Err(Error::Internal(format!("χ = {chi} from the index, but {vertices} fixed points")));
    }
    let betti: Vec<usize> = (0..=2 * n).map(|i| if i % 2 == 0 { ring.dim(i / 2) } else { 0 }).collect();
    let p1 = pontryagin_p1(&ring).to_string();
    let spin = m.is_spin();
    let sigma = if n % 2 == 0 { Some(signature(&m)?) } else { None };
    let mut text = format!(
        "n={n} m={facets} χ={chi} b₂={} p₁={p1} spin={}\n",
        m.b2(),
        if spin { "yes" } else { "no" }
    );
    text += &format!("vertices: {vertices}\nbetti: {}\n", strings(&betti).join(" "));
    text += &format!("spin^c: γ = ({}), c = {}\n", strings(m.gamma()).join(", "), spinc_c1(&ring));
    if let Some(s) = &sigma {
        text += &format!("signature: {s}\n");
    }
    let json = json!({
        "command": "describe",
        "n": n,
        "m": facets,
        "vertices": vertices,
        "euler": fmt_rational(&chi),
        "b2": m.b2(),
        "betti": betti,
        "p1": p1,
        "spin": spin,
        "gamma": m.gamma(),
        "spinc_c1": spinc_c1(&ring).to_string(),
        "signature": sigma.as_ref().map(fmt_rational),
    });
    Ok(Report::new(Status::Pass, text, json))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Twist {
    /// `V = W = 0` with the manifest's Spin^c structure.
    None,
    /// `W = TM` on the spin structure.
    Elliptic,
    /// `V = W = 0` on the spin structure.
    Witten,
    /// The manifest's `[bundles]`.
    Custom,
}

fn spin(m: &QuasitoricManifold, twist: Twist) -> Result<QuasitoricManifold> {
    if !m.is_spin() {
        return Err(Error::Precondition(format!(
            "the {} twist needs a spin manifold, but w₂ = Σ vᵢ mod 2 is not in the span of the rows of λ",
            format!("{twist:?}").to_lowercase()
        )));
    }
    m.with_gamma(vec![0; m.facet_count()])
}

pub fn parse_circle(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Argument(format!("bad circle entry `{t}`"))))
        .collect()
}

pub fn genus(manifest: &Manifest, twist: Twist, q_order: usize, equivariant: Option<&[i64]>) -> Result<Report> {
    let m = manifest.manifold()?;
    let name = format!("{twist:?}").to_lowercase();
    let Some(xi) = equivariant else {
        let series = match twist {
            Twist::None => index(&m, &BundleSpec::none(), q_order)?,
            Twist::Custom => index(&m, &manifest.bundles, q_order)?,
            Twist::Witten => {
                spin(&m, twist)?;
                witten_genus(&m, q_order)?
            }
            Twist::Elliptic => {
                spin(&m, twist)?;
                elliptic_genus(&m, q_order)?
            }
        };
        let coeffs = series.to_strings();
        let json = json!({ "command": "genus", "twist": name, "q_order": q_order, "coefficients": coeffs });
        return Ok(Report::new(Status::Pass, coeffs.join(", ") + "\n", json));
    };
    let (target, bundles) = match twist {
        Twist::None => (m, BundleSpec::none()),
        Twist::Custom => (m, manifest.bundles.clone()),
        Twist::Witten => (spin(&m, twist)?, BundleSpec::none()),
        Twist::Elliptic => {
            let s = spin(&m, twist)?;
            let b = BundleSpec::tangent_w(&s);
            (s, b)
        }
    };
    let eq = equivariant_index(&target, xi, &bundles, q_order)?;
    let coeffs = strings(eq.series.coeffs());
    let text: String = coeffs.iter().enumerate().map(|(d, c)| format!("q^{d}: {c}\n")).collect();
    let json = json!({
        "command": "genus",
        "twist": name,
        "q_order": q_order,
        "xi": xi,
        "coefficients": coeffs,
        "identically_zero": eq.is_identically_zero(),
    });
    Ok(Report::new(Status::Pass, text, json))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Theorem {
    Circle,
    #[value(name = "index-I")]
    IndexI,
    Thm34,
    Lemma52,
    Table1,
}

fn need(manifest: Option<&Manifest>, what: &str) -> Result<Manifest> {
    manifest.cloned().ok_or_else(|| Error::Argument(format!("--theorem {what} needs a manifest")))
}

fn pass_or(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Violation
    }
}

fn verdict(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Violation => "FAIL",
        _ => "HYPOTHESIS NOT MET",
    }
}

/// `lemma_n` is the dimension of the synthetic ring used when no manifest
/// is given to the `lemma52` check.
pub fn verify(manifest: Option<&Manifest>, theorem: Theorem, q_order: usize, lemma_n: usize) -> Result<Report> {
    match theorem {
        Theorem::Table1 => Ok(verify_table1()),
        Theorem::Circle => verify_circle(&need(manifest, "circle")?),
        Theorem::IndexI => verify_index_i(&need(manifest, "index-I")?, q_order),
        Theorem::Thm34 => verify_thm34(&need(manifest, "thm34")?),
        Theorem::Lemma52 => match manifest {
            Some(m) => verify_lemma52_manifold(m),
            None => verify_lemma52_synthetic(lemma_n, q_order),
        },
    }
}

fn verify_table1() -> Report {
    let groups: Vec<(u64, u64)> = (1..=30)
        .flat_map(|l| ["A", "B", "C", "D", "E", "F", "G"].map(|k| simple_group(&format!("{k}{l}"))))
        .flatten()
        .collect();
    let mut rows = Vec::new();
    let mut matches = 0;
    for l in 1..=30u64 {
        let best = groups.iter().filter(|g| g.0 <= l).map(|g| g.1 / g.0).max().unwrap_or(0);
        let a = alpha(l as i64).expect("l ≥ 1");
        matches += (a == best) as usize;
        rows.push(json!({ "l": l, "alpha": a, "best_ratio": best, "groups": alpha_groups(l) }));
    }
    let status = pass_or(matches == 30);
    Report::new(
        status,
        format!("table1: {matches}/30 match {}\n", verdict(status)),
        json!({ "command": "verify", "theorem": "table1", "matches": matches, "rows": rows }),
    )
}

fn verify_circle(manifest: &Manifest) -> Result<Report> {
    let m = manifest.manifold()?;
    let a = EquivariantDegree4Class::pontryagin_defect(&m, &manifest.bundles)?;
    let xi = find_circle(&a)?;
    let big: Vec<_> = xi.iter().map(|&x| x.into()).collect();
    let primitive = xi.iter().fold(0, |g, &x| crate::exactalg::linalg::gcd_i64(g, x)) == 1;
    let kernel = a.mixed_part_along(&big).iter().all(Zero::is_zero);
    let status = pass_or(primitive && kernel);
    let i = if m.check_generic(&xi).is_ok() { index_I(&m, &xi, &manifest.bundles).ok() } else { None };
    let mut text = format!("circle: ξ = ({})", strings(&xi).join(", "));
    if let Some(i) = i {
        text += &format!(", I = {i}");
    }
    text += &format!(" {}\n", verdict(status));
    let a22: Vec<Vec<String>> = a.a22.iter().map(|r| rationals(r)).collect();
    let json = json!({
        "command": "verify",
        "theorem": "circle",
        "xi": xi,
        "a22": a22,
        "primitive": primitive,
        "in_kernel": kernel,
        "index_I": i,
    });
    Ok(Report::new(status, text, json))
}

fn verify_index_i(manifest: &Manifest, q_order: usize) -> Result<Report> {
    let m = manifest.manifold()?;
    let xi = manifest.circle.clone().unwrap_or_else(|| m.generic_circle(&[]));
    let i = index_I(&m, &xi, &manifest.bundles)?;
    let mut json = json!({ "command": "verify", "theorem": "index-I", "xi": xi, "I": i, "q_order": q_order });
    if i >= 0 {
        let text = format!("index-I: I={i}, no vanishing claim for I ≥ 0 PASS\n");
        return Ok(Report::new(Status::Pass, text, json));
    }
    let eq = equivariant_index(&m, &xi, &manifest.bundles, q_order)?;
    let zero = eq.is_identically_zero();
    json["identically_zero"] = json!(zero);
    json["coefficients"] = json!(strings(eq.series.coeffs()));
    let status = pass_or(zero);
    let shown = if zero { "≡ 0".to_string() } else { "≢ 0".to_string() };
    Ok(Report::new(status, format!("index-I: I={i}, equivariant index {shown}, {}\n", verdict(status)), json))
}

fn verify_thm34(manifest: &Manifest) -> Result<Report> {
    let m = manifest.manifold()?;
    let ring = build_face_ring(&m)?;
    let x: Vec<CohomologyClass> = manifest.bundles.v.iter().map(|c| line_class(&ring, c)).collect();
    let r = check_theorem34_hypotheses(&ring, &x)?;
    let status = if r.all_hold() { Status::Pass } else { Status::Precondition };
    let yes = |b: bool| if b { "yes" } else { "no" };
    let text = format!(
        "thm34: Σx = c₁ {}, Σx² = p₁ {}, ⟨∏x⟩ = {} {}\n",
        yes(r.sum_is_c1),
        yes(r.squares_are_p1),
        fmt_rational(&r.pairing),
        verdict(status)
    );
    let json = json!({
        "command": "verify",
        "theorem": "thm34",
        "sum_is_c1": r.sum_is_c1,
        "squares_are_p1": r.squares_are_p1,
        "pairing": fmt_rational(&r.pairing),
        "pairing_nonzero": r.pairing_nonzero(),
    });
    Ok(Report::new(status, text, json))
}

fn verify_lemma52_manifold(manifest: &Manifest) -> Result<Report> {
    let m = manifest.manifold()?;
    let ring = build_face_ring(&m)?;
    let n = ring.top_degree() as i64;
    let beta = beta_coefficients(&ring)?;
    let bounded = beta.iter().all(|b| b.is_positive() && *b <= int(n + 1));
    let mut constructed = Vec::new();
    for i0 in 0..beta.len() {
        match Lemma52Bundles::construct(&ring, i0) {
            Err(Error::Hypothesis { .. }) => {}
            Ok(_) => constructed.push(i0 + 1),
            Err(e) => return Err(e),
        }
    }
    let status = pass_or(bounded && constructed.is_empty());
    let text = format!(
        "lemma52: β = ({}), bound β ≤ {} {}\n",
        rationals(&beta).join(", "),
        n + 1,
        verdict(status)
    );
    let json = json!({
        "command": "verify",
        "theorem": "lemma52",
        "beta": rationals(&beta),
        "bound": n + 1,
        "within_bound": bounded,
        "contradiction_bundles_at": constructed,
    });
    Ok(Report::new(status, text, json))
}

fn verify_lemma52_synthetic(n: usize, q_order: usize) -> Result<Report> {
    if n < 3 {
        return Err(Error::Precondition(format!("the synthetic check needs n ≥ 3, got {n}")));
    }
    let ring = synthetic_projective_ring(n)?;
    let b = Lemma52Bundles::construct(&ring, 0)?;
    let r = b.verify(q_order)?;
    let pairing_ok = r.euler_pairing.abs() == int(2) && r.index_q0 == b.expected_q0(&r.euler_pairing);
    let status = pass_or(r.all_hold() && pairing_ok);
    let text = format!(
        "lemma52 (synthetic n={n}, β={}): case {}, c₁ {}, p₁ {}, W spin {}, ⟨e(V)⟩ = {}, index q⁰ = {} {}\n",
        b.beta[0],
        b.case,
        r.c1_matches,
        r.p1_matches,
        r.w_spin,
        fmt_rational(&r.euler_pairing),
        fmt_rational(&r.index_q0),
        verdict(status)
    );
    let json = json!({
        "command": "verify",
        "theorem": "lemma52",
        "synthetic_n": n,
        "beta": b.beta,
        "case": b.case,
        "v": b.v,
        "w": b.w,
        "c1_matches": r.c1_matches,
        "p1_matches": r.p1_matches,
        "w_spin": r.w_spin,
        "euler_pairing": fmt_rational(&r.euler_pairing),
        "index_q0": fmt_rational(&r.index_q0),
    });
    Ok(Report::new(status, text, json))
}

pub fn census(n: usize, k: usize, bound: i64) -> Result<Report> {
    let r = finiteness_census(n, k, bound)?;
    let status = pass_or(r.passed());
    let betas: Vec<Vec<String>> = r.betas.iter().map(|b| rationals(b)).collect();
    let shown: Vec<String> = betas.iter().map(|b| format!("({})", b.join(", "))).collect();
    let text = format!(
        "census n={n} k={k} bound={bound}: {} matrices, {} of connected-sum type, β ∈ {{{}}}, all in (0,{}] {}\n",
        r.total,
        r.matched,
        shown.join(", "),
        n + 1,
        verdict(status)
    );
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|(rows, beta)| json!({ "lambda": rows, "beta": rationals(beta) }))
        .collect();
    let json = json!({
        "command": "census",
        "n": n,
        "k": k,
        "bound": bound,
        "total": r.total,
        "matched": r.matched,
        "betas": betas,
        "violations": violations,
    });
    Ok(Report::new(status, text, json))
}
