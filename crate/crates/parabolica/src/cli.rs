//! Command implementations behind the `parabolica` binary: each command
//! parses a contraction descriptor, runs the corresponding computation and
//! renders a human-readable text report or a machine-readable JSON
//! certificate. Identical inputs and seeds produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, MIN_BUDGET};
use crate::classical::{
    bullet_commutes, counterexample_sp8, d6_suite, flags_nonpolynomial_pattern, type_a_family,
    type_c_family, type_c_truncation_data, Projection, SuiteReport,
};
use crate::contraction::{
    compositions, is_symmetric_cpss, parse_descriptor, Flavor, ParabolicContraction,
};
use crate::invariants::{
    deg_nminus_f, factor_components, fmt_rat, f_m, independence_certificate,
    weight_formula, FactorizationCertificate, FactorizationJson,
};
use crate::pathways::{separating_q_gl, v_sequence, verify_hypothesis_i};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Per-invocation configuration shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub budget: u64,
    pub seed: u64,
    pub format: OutputFormat,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: crate::budget::DEFAULT_BUDGET,
            seed: 0,
            format: OutputFormat::Text,
            jobs: 1,
        }
    }
}

impl RunConfig {
    pub fn budget(&self) -> Budget {
        Budget::new(self.budget.max(MIN_BUDGET))
    }
}

/// Command outcome: the rendered output plus the process exit code.
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

fn usage(msg: impl Into<String>) -> Outcome {
    Outcome {
        output: format!("error: {}\n", msg.into()),
        exit_code: 2,
    }
}

fn failed(msg: impl Into<String>) -> Outcome {
    Outcome {
        output: format!("check failed: {}\n", msg.into()),
        exit_code: 1,
    }
}

fn budget_exceeded(msg: impl Into<String>) -> Outcome {
    Outcome {
        output: format!("budget exceeded: {}\n", msg.into()),
        exit_code: 3,
    }
}

fn classify(e: &dyn std::fmt::Display) -> Outcome {
    let text = e.to_string();
    if text.contains("budget") {
        budget_exceeded(text)
    } else {
        failed(text)
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DescribeReport {
    pub descriptor: String,
    pub n: usize,
    pub blocks: Vec<usize>,
    pub intervals: Vec<(usize, usize, usize)>,
    pub sizes: Vec<usize>,
    pub m_table: Vec<MRow>,
    pub m1: Vec<usize>,
    pub m2: Vec<usize>,
    pub r_table: Vec<(usize, usize)>,
    pub dim_q: usize,
    pub ind_q: usize,
    pub dim_q_lambda: usize,
    pub ind_q_lambda: usize,
    pub symmetric: bool,
    pub nonpolynomial_pattern: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MRow {
    pub i: usize,
    pub rho: usize,
    pub m: usize,
    pub kappa: Vec<usize>,
}

pub fn describe_report(desc: &str) -> Result<DescribeReport, String> {
    let (_, c) = parse_descriptor(desc).map_err(|e| e.to_string())?;
    let s = c.s();
    let p = c.class_count();
    Ok(DescribeReport {
        descriptor: desc.to_string(),
        n: c.n,
        blocks: c.blocks.clone(),
        intervals: (1..=s)
            .map(|k| (k, c.iota[k - 1] + 1, c.iota[k]))
            .collect(),
        sizes: c.sizes.clone(),
        m_table: (1..=c.i_max)
            .map(|i| MRow {
                i,
                rho: c.rho[i],
                m: c.m[i],
                kappa: c.kappa[i].clone(),
            })
            .collect(),
        m1: c.m_sets[1].clone(),
        m2: c.m_sets[2].clone(),
        r_table: (1..=c.n).map(|m| (m, c.r(m))).collect(),
        dim_q: c.n * c.n,
        ind_q: c.n,
        dim_q_lambda: c.n * c.n - (s - p),
        ind_q_lambda: c.n + (s - p),
        symmetric: is_symmetric_cpss(&c),
        nonpolynomial_pattern: flags_nonpolynomial_pattern(&c),
    })
}

fn render_describe(r: &DescribeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "contraction {} (n = {}, s = {} blocks, p = {} classes)\n",
        r.descriptor,
        r.n,
        r.blocks.len(),
        r.sizes.len()
    ));
    for (k, lo, hi) in &r.intervals {
        out.push_str(&format!("  I_{k} = [{lo},{hi}]\n"));
    }
    out.push_str("  i : rho_i  m_i  kappa_i\n");
    for row in &r.m_table {
        out.push_str(&format!(
            "  {} : {}      {}    {:?}\n",
            row.i, row.rho, row.m, row.kappa
        ));
    }
    out.push_str(&format!("  I = {:?}\n", r.sizes));
    out.push_str(&format!("  M1 = {:?}\n  M2 = {:?}\n", r.m1, r.m2));
    let rs: Vec<String> = r
        .r_table
        .iter()
        .filter(|(_, rm)| *rm > 1)
        .map(|(m, rm)| format!("r_{m} = {rm}"))
        .collect();
    out.push_str(&format!(
        "  nontrivial factor counts: {}\n",
        if rs.is_empty() {
            "none".to_string()
        } else {
            rs.join(", ")
        }
    ));
    out.push_str(&format!(
        "  dim q = {}, ind q = {}; dim q_L = {}, ind q_L = {}\n",
        r.dim_q, r.ind_q, r.dim_q_lambda, r.ind_q_lambda
    ));
    if r.symmetric {
        out.push_str("  symmetric block sequence (sits above a type C contraction)\n");
    }
    if r.nonpolynomial_pattern {
        out.push_str("  flagged: odd m in M2 with 2m-2 in M2 (counterexample pattern)\n");
    }
    out
}

pub fn cmd_describe(desc: &str, cfg: &RunConfig) -> Outcome {
    match describe_report(desc) {
        Ok(r) => Outcome {
            output: match cfg.format {
                OutputFormat::Text => render_describe(&r),
                OutputFormat::Json => serde_json::to_string_pretty(&r).unwrap() + "\n",
            },
            exit_code: 0,
        },
        Err(e) => usage(e),
    }
}

pub fn cmd_factor(desc: &str, m: usize, cfg: &RunConfig) -> Outcome {
    let (flavor, c) = match parse_descriptor(desc) {
        Ok(x) => x,
        Err(e) => return usage(e.to_string()),
    };
    if m < 1 || m > c.n {
        return usage(format!("m must lie in 1..={}", c.n));
    }
    let budget = cfg.budget();
    match flavor {
        Flavor::Gl => match factor_components(&c, m, &budget) {
            Ok(cert) => render_factor(&c, &cert, cfg),
            Err(e) => classify(&e),
        },
        Flavor::Sl => match factor_components(&c, m, &budget) {
            Ok(cert) => {
                let pr = Projection::special_linear(c.n);
                let mut projected = cert.clone();
                for f in &mut projected.factors {
                    f.poly = pr.project(&f.poly);
                }
                projected.factors.retain(|f| !f.poly.is_zero());
                render_factor(&c, &projected, cfg)
            }
            Err(e) => classify(&e),
        },
        Flavor::Sp => {
            if !m.is_multiple_of(2) {
                return usage("sp factors exist for even m only (pr(F_m) = 0 otherwise)");
            }
            match type_c_family(&c, &budget) {
                Ok(fam) => {
                    let entry = fam.entries.iter().find(|e| e.m_prime == m / 2).unwrap();
                    let json = serde_json::json!({
                        "m_prime": entry.m_prime,
                        "c_prime": fmt_rat(&entry.c_prime),
                        "factors": entry.factors.iter().map(|(t, p, w)| serde_json::json!({
                            "t": t,
                            "poly": p.to_string(),
                            "weight": w.coords.iter().map(fmt_rat).collect::<Vec<_>>(),
                            "multiplicity": entry.multiplicities[t - 1],
                        })).collect::<Vec<_>>(),
                        "decomposition_verified": fam.decomposition_verified,
                    });
                    Outcome {
                        output: match cfg.format {
                            OutputFormat::Json => {
                                serde_json::to_string_pretty(&json).unwrap() + "\n"
                            }
                            OutputFormat::Text => {
                                let mut out = format!(
                                    "f_{} = c' * (prod of squared factors below r') * f_r' * f_r'+1, c' = {}\n",
                                    entry.m_prime,
                                    fmt_rat(&entry.c_prime)
                                );
                                for (t, p, w) in &entry.factors {
                                    out.push_str(&format!(
                                        "  f_{{{},{}}} (weight {}): {}\n",
                                        entry.m_prime,
                                        t,
                                        w,
                                        clip(&p.to_string())
                                    ));
                                }
                                out
                            }
                        },
                        exit_code: if fam.decomposition_verified { 0 } else { 1 },
                    }
                }
                Err(e) => classify(&e),
            }
        }
    }
}

fn clip(s: &str) -> String {
    if s.len() > 400 {
        format!("{} ... ({} chars)", &s[..400], s.len())
    } else {
        s.to_string()
    }
}

fn render_factor(c: &ParabolicContraction, cert: &FactorizationCertificate, cfg: &RunConfig) -> Outcome {
    let json: FactorizationJson = cert.to_json(c);
    let output = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(&json).unwrap() + "\n",
        OutputFormat::Text => {
            let mut out = format!(
                "F_{}^bullet = c * prod(F_{{{},t}}), c = {} (eta sign {}), verified: {}\n",
                cert.m, cert.m, fmt_rat(&cert.c_m), cert.eta_sign, cert.verified
            );
            for f in &cert.factors {
                out.push_str(&format!(
                    "  F_{{{},{}}} (weight {}, n-minus-only: {}): {}\n",
                    f.label.0,
                    f.label.1,
                    f.weight,
                    f.n_minus_only(c),
                    clip(&f.poly.to_string())
                ));
            }
            out
        }
    };
    Outcome {
        output,
        exit_code: if cert.verified { 0 } else { 1 },
    }
}

pub fn cmd_weights(desc: &str, cfg: &RunConfig) -> Outcome {
    let (_, c) = match parse_descriptor(desc) {
        Ok(x) => x,
        Err(e) => return usage(e.to_string()),
    };
    let budget = cfg.budget();
    let mut rows = Vec::new();
    for m in 1..=c.n {
        let cert = match factor_components(&c, m, &budget) {
            Ok(x) => x,
            Err(e) => return classify(&e),
        };
        for f in &cert.factors {
            let formula = weight_formula(&c, m, f.label.1);
            rows.push(serde_json::json!({
                "m": m,
                "t": f.label.1,
                "weight": f.weight.coords.iter().map(fmt_rat).collect::<Vec<_>>(),
                "matches_formula": f.weight == formula,
            }));
        }
    }
    let all_match = rows
        .iter()
        .all(|r| r["matches_formula"].as_bool().unwrap_or(false));
    let output = match cfg.format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "descriptor": desc,
                "weights": rows,
                "all_match": all_match,
            }))
            .unwrap()
                + "\n"
        }
        OutputFormat::Text => {
            let mut out = format!("factor weights for {desc} (diagonal coordinates)\n");
            for r in &rows {
                out.push_str(&format!(
                    "  lambda_{{{},{}}} = ({}) formula-match: {}\n",
                    r["m"],
                    r["t"],
                    r["weight"]
                        .as_array()
                        .unwrap()
                        .iter()
                        .map(|v| v.as_str().unwrap().to_string())
                        .collect::<Vec<_>>()
                        .join(", "),
                    r["matches_formula"]
                ));
            }
            out
        }
    };
    Outcome {
        output,
        exit_code: if all_match { 0 } else { 1 },
    }
}

pub fn cmd_kw(desc: &str, xi: usize, cfg: &RunConfig) -> Outcome {
    let (_, c) = match parse_descriptor(desc) {
        Ok(x) => x,
        Err(e) => return usage(e.to_string()),
    };
    if xi < 1 || xi > c.s() {
        return usage(format!("xi must lie in 1..={}", c.s()));
    }
    let budget = cfg.budget();
    match verify_hypothesis_i(&c, xi, &budget) {
        Ok(cert) => {
            let output = match cfg.format {
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&serde_json::json!({
                        "descriptor": desc,
                        "xi": cert.xi,
                        "v_sequence": cert.v,
                        "lines": cert.lines.iter().map(|l| serde_json::json!({
                            "m": l.m,
                            "constant": fmt_rat(&l.constant),
                            "degree_matches": l.nminus_degree_matches,
                        })).collect::<Vec<_>>(),
                        "certified": cert.certified,
                        "failures": cert.failures,
                    }))
                    .unwrap()
                        + "\n"
                }
                OutputFormat::Text => {
                    let mut out = format!(
                        "Kostant-Weierstrass section for {desc}, xi = {}\n  v = {:?}\n",
                        cert.xi, cert.v
                    );
                    for l in &cert.lines {
                        out.push_str(&format!(
                            "  F_{}^bullet(q) = {} * X{}\n",
                            l.m,
                            fmt_rat(&l.constant),
                            l.m
                        ));
                    }
                    out.push_str(&format!("  certified: {}\n", cert.certified));
                    for f in &cert.failures {
                        out.push_str(&format!("  failure: {f}\n"));
                    }
                    out
                }
            };
            Outcome {
                output,
                exit_code: if cert.certified { 0 } else { 1 },
            }
        }
        Err(e) => classify(&e),
    }
}

pub fn cmd_separate(desc: &str, m: usize, t: usize, cfg: &RunConfig) -> Outcome {
    let (_, c) = match parse_descriptor(desc) {
        Ok(x) => x,
        Err(e) => return usage(e.to_string()),
    };
    if !c.m_sets[2].contains(&m) {
        return usage(format!("m must be in M2 = {:?}", c.m_sets[2]));
    }
    if t < 1 || t > c.r(m) {
        return usage(format!("t must lie in 1..={}", c.r(m)));
    }
    let budget = cfg.budget();
    let certs: Result<Vec<_>, _> = (1..=c.n).map(|mu| factor_components(&c, mu, &budget)).collect();
    let certs = match certs {
        Ok(x) => x,
        Err(e) => return classify(&e),
    };
    match separating_q_gl(&c, m, t, &certs) {
        Ok(form) => {
            let entries: Vec<_> = form
                .q
                .entries()
                .map(|(g, p)| {
                    let (r, q) = g.as_entry().unwrap();
                    serde_json::json!({"row": r, "col": q, "image": p.to_string()})
                })
                .collect();
            let output = match cfg.format {
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&serde_json::json!({
                        "descriptor": desc,
                        "m": m, "t": t, "xi": form.xi,
                        "q": entries,
                        "isolated_value": form.isolated_value.to_string(),
                        "other_values": form.other_values.iter().map(|(mu, tau, v)| {
                            serde_json::json!({"m": mu, "t": tau, "value": fmt_rat(v)})
                        }).collect::<Vec<_>>(),
                    }))
                    .unwrap()
                        + "\n"
                }
                OutputFormat::Text => {
                    let mut out = format!(
                        "separating form for F_{{{m},{t}}} (xi = {})\n",
                        form.xi
                    );
                    for e in &entries {
                        out.push_str(&format!(
                            "  q(e[{},{}]) = {}\n",
                            e["row"], e["col"], e["image"].as_str().unwrap()
                        ));
                    }
                    out.push_str(&format!(
                        "  F_{{{m},{t}}}(q) = {}\n  all other factors evaluate to nonzero constants\n",
                        form.isolated_value
                    ));
                    out
                }
            };
            Outcome {
                output,
                exit_code: 0,
            }
        }
        Err(e) => classify(&e),
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IndexReport {
    pub descriptor: String,
    pub dim_q: usize,
    pub ind_q_estimate: usize,
    pub ind_q_formula: usize,
    pub dim_q_lambda: usize,
    pub dim_q_lambda_formula: usize,
    pub ind_q_lambda_estimate: usize,
    pub ind_q_lambda_formula: usize,
    pub ovdb_balanced: bool,
    pub retried: bool,
}

/// Runs the seeded index estimates for `q` and `q_Λ` and checks the balance
/// `dim q + ind q = dim q_Λ + ind q_Λ`. A non-generic first run (estimate
/// above the closed form) is retried once with the next seed.
pub fn index_report(desc: &str, trials: usize, seed: u64) -> Result<IndexReport, String> {
    let (_, c) = parse_descriptor(desc).map_err(|e| e.to_string())?;
    let s = c.s();
    let p = c.class_count();
    let mut retried = false;
    let run = |seed: u64| -> Result<(usize, usize), String> {
        let ind_q = c
            .index_estimate(&c.q_basis(), trials, seed)
            .map_err(|e| e.to_string())?;
        let ind_ql = c
            .index_estimate(&c.q_lambda_basis(), trials, seed)
            .map_err(|e| e.to_string())?;
        Ok((ind_q, ind_ql))
    };
    let (mut ind_q, mut ind_ql) = run(seed)?;
    if ind_q != c.n || ind_ql != c.n + (s - p) {
        // all trials hit non-generic functionals; retry once with a fresh seed
        retried = true;
        let again = run(seed.wrapping_add(1))?;
        ind_q = ind_q.min(again.0);
        ind_ql = ind_ql.min(again.1);
    }
    let basis_len = c.q_lambda_basis().len();
    Ok(IndexReport {
        descriptor: desc.to_string(),
        dim_q: c.n * c.n,
        ind_q_estimate: ind_q,
        ind_q_formula: c.n,
        dim_q_lambda: basis_len,
        dim_q_lambda_formula: c.n * c.n - (s - p),
        ind_q_lambda_estimate: ind_ql,
        ind_q_lambda_formula: c.n + (s - p),
        ovdb_balanced: c.n * c.n + ind_q == basis_len + ind_ql,
        retried,
    })
}

pub fn cmd_index(desc: &str, cfg: &RunConfig) -> Outcome {
    match index_report(desc, 5, cfg.seed) {
        Ok(r) => {
            let ok = r.ind_q_estimate == r.ind_q_formula
                && r.ind_q_lambda_estimate == r.ind_q_lambda_formula
                && r.dim_q_lambda == r.dim_q_lambda_formula
                && r.ovdb_balanced;
            let output = match cfg.format {
                OutputFormat::Json => serde_json::to_string_pretty(&r).unwrap() + "\n",
                OutputFormat::Text => format!(
                    "index data for {}\n  dim q = {}, ind q = {} (formula {})\n  dim q_L = {} (formula {}), ind q_L = {} (formula {})\n  dim+ind balance: {}{}\n",
                    r.descriptor,
                    r.dim_q,
                    r.ind_q_estimate,
                    r.ind_q_formula,
                    r.dim_q_lambda,
                    r.dim_q_lambda_formula,
                    r.ind_q_lambda_estimate,
                    r.ind_q_lambda_formula,
                    r.ovdb_balanced,
                    if r.retried { " (retried once)" } else { "" }
                ),
            };
            Outcome {
                output,
                exit_code: if ok { 0 } else { 1 },
            }
        }
        Err(e) => usage(e),
    }
}

fn render_suite(report: &SuiteReport, cfg: &RunConfig) -> Outcome {
    let ok = report.all_hold();
    let output = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(report).unwrap() + "\n",
        OutputFormat::Text => {
            let mut out = format!("suite {}\n", report.suite);
            for id in &report.identities {
                out.push_str(&format!(
                    "  [{}] {}\n",
                    if id.equal { "ok" } else { "FAIL" },
                    id.name
                ));
            }
            for c in &report.certificates {
                out.push_str(&format!("  certificate: {c}\n"));
            }
            out
        }
    };
    Outcome {
        output,
        exit_code: if ok { 0 } else { 1 },
    }
}

pub fn cmd_counterexample(cfg: &RunConfig) -> Outcome {
    match counterexample_sp8(&cfg.budget()) {
        Ok(report) => render_suite(&report, cfg),
        Err(e) => classify(&e),
    }
}

pub fn cmd_d6(cfg: &RunConfig) -> Outcome {
    match d6_suite(&cfg.budget()) {
        Ok(report) => render_suite(&report, cfg),
        Err(e) => classify(&e),
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteLine {
    pub instance: String,
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifySummary {
    pub lines: Vec<SuiteLine>,
    pub passed: usize,
    pub failed: usize,
}

fn line(instance: &str, check: &str, pass: bool, detail: impl Into<String>) -> SuiteLine {
    SuiteLine {
        instance: instance.to_string(),
        check: check.to_string(),
        pass,
        detail: detail.into(),
    }
}

/// Every identity class on one contraction. Budget failures surface as
/// failed lines rather than aborting the suite.
pub fn verify_instance(blocks: &[usize], cfg: &RunConfig) -> Vec<SuiteLine> {
    let name = format!(
        "gl:{}",
        blocks
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let c = ParabolicContraction::new(blocks.to_vec()).unwrap();
    let budget = cfg.budget();
    let mut lines = Vec::new();

    // 1. factorization certificates, weights, independence
    let mut certs: Vec<FactorizationCertificate> = Vec::new();
    let mut cert_ok = true;
    for m in 1..=c.n {
        match factor_components(&c, m, &budget) {
            Ok(cert) => {
                cert_ok &= cert.verified;
                certs.push(cert);
            }
            Err(e) => {
                lines.push(line(&name, "factorization", false, e.to_string()));
                return lines;
            }
        }
    }
    lines.push(line(&name, "factorization", cert_ok, ""));
    let fam: Vec<_> = certs
        .iter()
        .map(|cert| {
            (
                cert.m,
                cert.factors
                    .iter()
                    .map(|f| (f.weight.clone(), 1u32))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let indep = independence_certificate(&fam);
    lines.push(line(
        &name,
        "independence",
        indep.is_certified(),
        format!("{indep:?}"),
    ));

    // 2. degree law against the full expansion
    let mut deg_ok = true;
    for m in 1..=c.n {
        match f_m(&c, m, &budget) {
            Ok(full) => {
                let brute = full.partial_degree(c.nminus_gens()).unwrap_or(0) as usize;
                deg_ok &= brute == deg_nminus_f(&c, m);
            }
            Err(e) => {
                lines.push(line(&name, "degree-law", false, e.to_string()));
                return lines;
            }
        }
    }
    lines.push(line(&name, "degree-law", deg_ok, ""));

    // 3. index and dimension balance
    match index_report(&name, 5, cfg.seed) {
        Ok(r) => {
            let ok = r.ind_q_estimate == r.ind_q_formula
                && r.ind_q_lambda_estimate == r.ind_q_lambda_formula
                && r.dim_q_lambda == r.dim_q_lambda_formula
                && r.ovdb_balanced;
            lines.push(line(&name, "index-balance", ok, format!("{r:?}")));
        }
        Err(e) => lines.push(line(&name, "index-balance", false, e)),
    }

    // 4. Kostant-Weierstrass sections for every starting block
    let mut kw_ok = true;
    let mut kw_detail = String::new();
    for xi in 1..=c.s() {
        match verify_hypothesis_i(&c, xi, &budget) {
            Ok(cert) if cert.certified => {}
            Ok(cert) => {
                kw_ok = false;
                kw_detail = format!("xi={xi}: {:?}", cert.failures);
            }
            Err(e) => {
                kw_ok = false;
                kw_detail = format!("xi={xi}: {e}");
            }
        }
    }
    lines.push(line(&name, "kostant-weierstrass", kw_ok, kw_detail));

    // 5. witnesses and separating forms for every nontrivial factor
    let mut sep_ok = true;
    let mut sep_detail = String::new();
    for cert in &certs {
        if !c.m_sets[2].contains(&cert.m) {
            continue;
        }
        for f in &cert.factors {
            if crate::pathways::hypothesis_ii_witness(&f.poly).is_none() {
                sep_ok = false;
                sep_detail = format!("no witness for F_{:?}", f.label);
            }
            match separating_q_gl(&c, cert.m, f.label.1, &certs) {
                Ok(_) => {}
                Err(e) => {
                    sep_ok = false;
                    sep_detail = format!("F_{:?}: {e}", f.label);
                }
            }
        }
    }
    lines.push(line(&name, "separating-forms", sep_ok, sep_detail));

    // 6. type A projection
    let pr_a = Projection::special_linear(c.n);
    let mut a_ok = true;
    for m in 1..=c.n {
        match bullet_commutes(&pr_a, &c, m, &budget) {
            Ok(cert) => a_ok &= cert.is_certified(),
            Err(e) => {
                lines.push(line(&name, "type-a", false, e.to_string()));
                return lines;
            }
        }
    }
    match type_a_family(&c, &budget) {
        Ok(fam_a) => a_ok &= fam_a.independence.is_certified(),
        Err(e) => {
            lines.push(line(&name, "type-a", false, e.to_string()));
            return lines;
        }
    }
    lines.push(line(&name, "type-a", a_ok, ""));

    // 7. type C where the shape allows it
    if is_symmetric_cpss(&c) && c.s().is_multiple_of(2) {
        let pr_c = Projection::symplectic(c.n).unwrap();
        let mut c_ok = true;
        let mut detail = String::new();
        for m in 1..=c.n {
            match bullet_commutes(&pr_c, &c, m, &budget) {
                Ok(cert) => c_ok &= cert.is_certified(),
                Err(e) => {
                    c_ok = false;
                    detail = e.to_string();
                }
            }
        }
        match type_c_family(&c, &budget) {
            Ok(fam_c) => {
                c_ok &= fam_c.decomposition_verified
                    && fam_c.pairing_verified
                    && fam_c.independence.is_certified()
                    && fam_c.family_size == c.n / 2 + c.s() / 2;
                match type_c_truncation_data(&c, 5, cfg.seed) {
                    Ok((dim, index)) => {
                        let np = c.n / 2;
                        let sp = c.s() / 2;
                        c_ok &= dim == np * (2 * np + 1) - sp && index == np + sp;
                    }
                    Err(e) => {
                        c_ok = false;
                        detail = e.to_string();
                    }
                }
            }
            Err(e) => {
                c_ok = false;
                detail = e.to_string();
            }
        }
        lines.push(line(&name, "type-c", c_ok, detail));
    }

    lines
}

/// Runs every acceptance identity class at the default scale: all proper
/// block compositions of `n <= max_n` plus the named instances.
pub fn cmd_verify_suite(cfg: &RunConfig, max_n: usize) -> Outcome {
    let mut instances: Vec<Vec<usize>> = Vec::new();
    for n in 2..=max_n {
        instances.extend(compositions(n));
    }
    let run_all = || -> Vec<SuiteLine> {
        use rayon::prelude::*;
        let mut lines: Vec<SuiteLine> = instances
            .par_iter()
            .flat_map(|blocks| verify_instance(blocks, cfg))
            .collect();
        // named instances
        let budget = cfg.budget();
        let run = ParabolicContraction::new(vec![4, 1, 4, 2, 1]).unwrap();
        let (v, _) = v_sequence(&run, 4);
        lines.push(line(
            "gl:4,1,4,2,1",
            "v-sequence",
            v == vec![10, 12, 1, 5, 6, 11, 2, 7, 3, 8, 4, 9],
            format!("{v:?}"),
        ));
        match verify_hypothesis_i(&run, 4, &budget) {
            Ok(cert) => lines.push(line(
                "gl:4,1,4,2,1",
                "kostant-weierstrass",
                cert.certified,
                format!("{:?}", cert.failures),
            )),
            Err(e) => lines.push(line("gl:4,1,4,2,1", "kostant-weierstrass", false, e.to_string())),
        }
        match counterexample_sp8(&budget) {
            Ok(r) => lines.push(line(
                "sp:1,2,2,2,1",
                "counterexample",
                r.all_hold(),
                "",
            )),
            Err(e) => lines.push(line("sp:1,2,2,2,1", "counterexample", false, e.to_string())),
        }
        match d6_suite(&budget) {
            Ok(r) => lines.push(line("so12:1,1,4,4,1,1", "d6-probe", r.all_hold(), "")),
            Err(e) => lines.push(line("so12:1,1,4,4,1,1", "d6-probe", false, e.to_string())),
        }
        lines
    };
    let lines = if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .unwrap();
        pool.install(run_all)
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        pool.install(run_all)
    };
    let passed = lines.iter().filter(|l| l.pass).count();
    let failed = lines.len() - passed;
    let summary = VerifySummary {
        lines,
        passed,
        failed,
    };
    let output = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(&summary).unwrap() + "\n",
        OutputFormat::Text => {
            let mut out = String::new();
            for l in &summary.lines {
                out.push_str(&format!(
                    "[{}] {} :: {}{}\n",
                    if l.pass { "ok" } else { "FAIL" },
                    l.instance,
                    l.check,
                    if l.pass || l.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", l.detail)
                    }
                ));
            }
            out.push_str(&format!(
                "{} passed, {} failed\n",
                summary.passed, summary.failed
            ));
            out
        }
    };
    Outcome {
        output,
        exit_code: if failed == 0 { 0 } else { 1 },
    }
}
