//! Command-line front end: every library operation as a subcommand, with
//! text or JSON output and reproducibility flags. Exit codes: 0 success,
//! 2 precondition violation (including parse errors), 3 refused by a
//! cutoff or size guard, 4 internal invariant violation.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use iterdep_core::bivar::{
    mason_check, parse_bivariate_pair, shift_bound_report, shift_search, verify_shift,
    BivariatePolynomial, ShiftBoundReport,
};
use iterdep_core::error::{Category, Error};
use iterdep_core::factor::factor;
use iterdep_core::field::FieldSpec;
use iterdep_core::highorder::{
    conjecture_scan, construct, verify_order, ConstructOutcome, HighOrderCertificate,
};
use iterdep_core::iterinv::{
    classify_exceptional, lowest_term_profile, orbit_invariants, psi_lower_bound,
    InvariantValue,
};
use iterdep_core::mdep::{gcdfree_basis, is_mult_dependent, psi_search, DependenceResult};
use iterdep_core::poly::parse_polynomial;
use iterdep_core::ratfunc::parse_rational_function;

#[derive(Parser)]
#[command(name = "iterdep", version, about = "Exact arithmetic for iterated rational functions: orbit invariants, multiplicative independence, high-order elements, dependent shifts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Field descriptor: Q, Fq:&lt;p&gt;, or Fq:&lt;p&gt;^&lt;k&gt;\[:&lt;modulus poly in X&gt;\]
    #[arg(long, default_value = "Q")]
    field: String,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit invariants, exceptional classification, and lowest-term profile
    Analyze {
        #[command(flatten)]
        common: CommonArgs,
        /// Rational function, e.g. "(X^2+1)/X^2"
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Orbit-walk cutoff over Q (finite fields are always exact)
        #[arg(long, default_value_t = 64)]
        cutoff: u64,
        /// How many (S_k, T_k) pairs to report
        #[arg(long, default_value_t = 4)]
        kmax: u64,
    },
    /// Iterate-degree lower bound d^(n−j), optionally cross-checked by search
    Psi {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 64)]
        cutoff: u64,
        /// Also run the brute-force search with this exponent bound
        #[arg(long)]
        search_k: Option<i64>,
    },
    /// Exact multiplicative dependence of a family of rational functions
    DepTest {
        #[command(flatten)]
        common: CommonArgs,
        /// File with one function per line (# comments allowed)
        #[arg(long)]
        functions: Option<String>,
        /// Inline function (repeatable)
        #[arg(long = "f", allow_hyphen_values = true)]
        inline: Vec<String>,
        /// Substitute Y := u(X) first (inputs are then bivariate G/H over Q)
        #[arg(long, allow_hyphen_values = true)]
        subst: Option<String>,
    },
    /// Construct a high-order element certificate in F_{q^n}
    HighOrder {
        #[arg(long)]
        q: u128,
        #[arg(long)]
        n: u64,
        /// Verify the exact multiplicative order of the root
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 1_000_000)]
        pair_limit: u64,
        #[arg(long)]
        json: bool,
    },
    /// Empirical scan of the degree-n-factor conjecture over a range of n
    Scan {
        #[arg(long)]
        q: u128,
        #[arg(long)]
        n_from: u64,
        #[arg(long)]
        n_to: u64,
        /// Sample this many admissible pairs per n (exhaustive if omitted
        /// or if the pair space is smaller)
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        coprime_samples: u64,
        #[arg(long)]
        json: bool,
    },
    /// Resultant-product degree and count bounds for dependent shifts
    ShiftBound {
        #[command(flatten)]
        common: CommonArgs,
        /// File of bivariate functions "G/H" in X and Y, one per line
        #[arg(long)]
        functions: String,
    },
    /// Enumerate monic u with dependent substitutions over a coefficient box
    ShiftSearch {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        functions: String,
        #[arg(long)]
        max_deg: u64,
        /// Coefficient box: "a..b" integer range or comma-separated rationals
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Polynomial abc inequality check for coprime A + B + C = 0
    Mason {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Factor a polynomial over a finite field
    Factor {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e.category() {
                Category::Precondition => ExitCode::from(2),
                Category::Refused => ExitCode::from(3),
                Category::Internal => ExitCode::from(4),
            }
        }
    }
}

fn parse_field_descriptor(s: &str) -> Result<FieldSpec, Error> {
    if s == "Q" {
        return Ok(FieldSpec::rationals());
    }
    let rest = s
        .strip_prefix("Fq:")
        .ok_or_else(|| Error::parse(0, format!("bad field descriptor `{s}`: expected Q or Fq:...")))?;
    let (p_str, tail) = match rest.split_once('^') {
        Some((p, t)) => (p, Some(t)),
        None => (rest, None),
    };
    let p: u64 = p_str
        .parse()
        .map_err(|_| Error::parse(0, format!("bad characteristic `{p_str}`")))?;
    match tail {
        None => FieldSpec::prime(p),
        Some(t) => {
            let (k_str, modulus) = match t.split_once(':') {
                Some((k, m)) => (k, Some(m)),
                None => (t, None),
            };
            let k: u32 = k_str
                .parse()
                .map_err(|_| Error::parse(0, format!("bad extension degree `{k_str}`")))?;
            match modulus {
                None => FieldSpec::extension_default(p, k),
                Some(m) => {
                    let base = FieldSpec::prime(p)?;
                    let poly = parse_polynomial(&base, m)?;
                    let coeffs: Vec<u64> = poly
                        .coeffs()
                        .iter()
                        .map(|c| c.as_residue().unwrap())
                        .collect();
                    FieldSpec::extension(p, k, &coeffs)
                }
            }
        }
    }
}

fn read_function_lines(path: &str) -> Result<Vec<String>, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {path}: {e}")))?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
        .filter(|l| !l.is_empty())
        .collect())
}

fn invariant_json(v: &InvariantValue) -> Value {
    match v {
        InvariantValue::Finite(k) => json!(k),
        InvariantValue::ProvenInfinite => json!("inf"),
        InvariantValue::UnknownAtCutoff(_) => json!("unknown"),
    }
}

fn run(cmd: Command) -> Result<String, Error> {
    match cmd {
        Command::Analyze { common, f, cutoff, kmax } => {
            let field = parse_field_descriptor(&common.field)?;
            let func = parse_rational_function(&field, &f)?;
            let profile = orbit_invariants(&func, cutoff)?;
            let status = classify_exceptional(&func)?;
            let st = if kmax > 0 {
                Some(lowest_term_profile(&func, kmax)?)
            } else {
                None
            };
            if common.json {
                let mut obj = json!({
                    "e": invariant_json(&profile.e),
                    "epsilon": invariant_json(&profile.epsilon),
                    "mu": invariant_json(&profile.mu),
                    "nu": invariant_json(&profile.nu),
                    "delta": profile.delta,
                    "T": profile.t_val,
                    "exceptional": status.shape.tag(),
                    "separable": status.separable,
                });
                if let Some(st) = st {
                    obj["lowest_terms"] = json!(st);
                }
                Ok(obj.to_string())
            } else {
                let mut out = format!(
                    "f = {func} over {field}: d = {}\n e = {}, epsilon = {}, mu = {}, nu = {}\n delta = {}, T = {}\n exceptional: {} (separable: {})",
                    profile.d,
                    profile.e,
                    profile.epsilon,
                    profile.mu,
                    profile.nu,
                    profile.delta.map_or("-".into(), |v| v.to_string()),
                    profile.t_val.map_or("-".into(), |v| v.to_string()),
                    status.shape.tag(),
                    status.separable,
                );
                if let Some(st) = st {
                    out.push_str("\n (S_k, T_k):");
                    for (k, (s, t)) in st.iter().enumerate() {
                        out.push_str(&format!(" k={}: ({s}, {t})", k + 1));
                    }
                }
                Ok(out)
            }
        }
        Command::Psi { common, f, n, cutoff, search_k } => {
            let field = parse_field_descriptor(&common.field)?;
            let func = parse_rational_function(&field, &f)?;
            let profile = orbit_invariants(&func, cutoff)?;
            let bound = psi_lower_bound(&func, n, &profile)?;
            let search = match search_k {
                Some(k) => Some(psi_search(&func, n, k)?),
                None => None,
            };
            if common.json {
                let mut obj = json!({
                    "n": bound.n,
                    "branch": bound.branch,
                    "j": bound.j,
                    "bound": bound.bound.to_string(),
                });
                if let Some(s) = search {
                    obj["search_min"] = json!(s);
                }
                Ok(obj.to_string())
            } else {
                let mut out = format!(
                    "Psi({n}) >= {} (branch \"{}\", j = {})",
                    bound.bound, bound.branch, bound.j
                );
                if let Some(s) = search {
                    out.push_str(&format!("\n bounded search minimum: {s}"));
                }
                Ok(out)
            }
        }
        Command::DepTest { common, functions, inline, subst } => {
            let field = parse_field_descriptor(&common.field)?;
            let mut lines = Vec::new();
            if let Some(path) = &functions {
                lines.extend(read_function_lines(path)?);
            }
            lines.extend(inline);
            if lines.is_empty() {
                return Err(Error::Domain("no functions given".into()));
            }
            let (result, basis_degrees) = if let Some(u_str) = subst {
                let fam = lines
                    .iter()
                    .map(|l| parse_bivariate_pair(&field, l))
                    .collect::<Result<Vec<_>, _>>()?;
                let u = parse_polynomial(&field, &u_str)?;
                let res = verify_shift(&fam, &u)?;
                let subs = fam
                    .iter()
                    .map(|(g, h)| {
                        iterdep_core::ratfunc::RationalFunction::reduce(
                            g.substitute_y(&u),
                            h.substitute_y(&u),
                        )
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let degs = gcdfree_basis(&subs)?
                    .basis
                    .iter()
                    .map(|p| p.degree().unwrap())
                    .collect::<Vec<_>>();
                (res, degs)
            } else {
                let funcs = lines
                    .iter()
                    .map(|l| parse_rational_function(&field, l))
                    .collect::<Result<Vec<_>, _>>()?;
                let degs = gcdfree_basis(&funcs)?
                    .basis
                    .iter()
                    .map(|p| p.degree().unwrap())
                    .collect::<Vec<_>>();
                (is_mult_dependent(&funcs)?, degs)
            };
            match result {
                DependenceResult::Dependent(w) => {
                    if common.json {
                        Ok(json!({
                            "dependent": true,
                            "witness": w.k,
                            "basis_degrees": basis_degrees,
                        })
                        .to_string())
                    } else {
                        Ok(format!("dependent: witness k = {:?} (certified)", w.k))
                    }
                }
                DependenceResult::Independent { rank } => {
                    if common.json {
                        Ok(json!({
                            "dependent": false,
                            "witness": Value::Null,
                            "basis_degrees": basis_degrees,
                        })
                        .to_string())
                    } else {
                        Ok(format!("independent (constraint rank {rank})"))
                    }
                }
            }
        }
        Command::HighOrder { q, n, verify, pair_limit, json: json_mode } => {
            match construct(q, n, pair_limit)? {
                ConstructOutcome::Certificate(mut cert) => {
                    if verify {
                        cert.verified_order = Some(verify_order(&cert)?);
                    }
                    Ok(certificate_output(&cert, json_mode))
                }
                ConstructOutcome::Exhausted { pairs_tried } => {
                    if json_mode {
                        Ok(json!({
                            "exhausted": true,
                            "pairs_tried": pairs_tried,
                            "q": q.to_string(),
                            "n": n,
                        })
                        .to_string())
                    } else {
                        Ok(format!(
                            "exhausted: no admissible pair among {pairs_tried} produced a degree-{n} factor (evidence against the conjecture at q={q})"
                        ))
                    }
                }
            }
        }
        Command::Scan { q, n_from, n_to, sample, seed, coprime_samples, json: json_mode } => {
            let report = conjecture_scan(q, n_from, n_to, sample, coprime_samples, seed)?;
            if json_mode {
                let rows: Vec<Value> = report
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "n": r.n,
                            "d": r.d,
                            "m": r.m.to_string(),
                            "pairs_examined": r.pairs_examined,
                            "exhaustive": r.exhaustive,
                            "successes": r.successes,
                            "success_fraction": r.success_fraction().to_string(),
                            "one_over_n": format!("1/{}", r.n),
                            "t_lower_bound": r.t_lower_bound.to_string(),
                            "first_pair": r.first_success.as_ref().map(|(g, h)| {
                                json!({"g": g.to_string(), "h": h.to_string()})
                            }),
                            "coprime_hits": r.coprime_hits,
                            "coprime_samples": r.coprime_samples,
                        })
                    })
                    .collect();
                Ok(json!({
                    "q": report.q.to_string(),
                    "seed": report.seed,
                    "sample": report.sample_size,
                    "rows": rows,
                })
                .to_string())
            } else {
                let mut out = format!("scan q={q} seed={seed}\n");
                for r in &report.rows {
                    out.push_str(&format!(
                        "n={:>3} d={} m={} pairs={}{} successes={} fraction={} (1/n) coprime={}/{}\n",
                        r.n,
                        r.d,
                        r.m,
                        r.pairs_examined,
                        if r.exhaustive { " (exhaustive)" } else { "" },
                        r.successes,
                        r.success_fraction(),
                        r.coprime_hits,
                        r.coprime_samples,
                    ));
                }
                Ok(out.trim_end().to_string())
            }
        }
        Command::ShiftBound { common, functions } => {
            let field = parse_field_descriptor(&common.field)?;
            let fam = read_bivariate_family(&field, &functions)?;
            let report = shift_bound_report(&fam)?;
            Ok(shift_bound_output(&report, common.json))
        }
        Command::ShiftSearch { common, functions, max_deg, coeffs } => {
            let field = parse_field_descriptor(&common.field)?;
            let fam = read_bivariate_family(&field, &functions)?;
            let coeff_set = parse_coeff_set(&coeffs)?;
            let result = shift_search(&fam, max_deg, &coeff_set)?;
            if common.json {
                let found: Vec<Value> = result
                    .found
                    .iter()
                    .map(|(u, w)| json!({"u": u.to_string(), "witness": w.k}))
                    .collect();
                Ok(json!({
                    "found": found,
                    "clipped": result.clipped,
                    "skipped": result.skipped,
                    "report": shift_bound_json(&result.report),
                })
                .to_string())
            } else {
                let mut out = shift_bound_output(&result.report, false);
                if result.clipped {
                    out.push_str("\n (requested degree clipped to the theorem bound)");
                }
                out.push_str(&format!("\n dependent shifts found: {}", result.found.len()));
                for (u, w) in &result.found {
                    out.push_str(&format!("\n  u = {u}, witness {:?}", w.k));
                }
                Ok(out)
            }
        }
        Command::Mason { common, a, b, c } => {
            let field = parse_field_descriptor(&common.field)?;
            let pa = parse_polynomial(&field, &a)?;
            let pb = parse_polynomial(&field, &b)?;
            let pc = parse_polynomial(&field, &c)?;
            let report = mason_check(&pa, &pb, &pc)?;
            if !report.holds {
                return Err(Error::Internal(format!(
                    "abc inequality failed: max degree {} vs rad degree {}",
                    report.max_degree, report.rad_degree
                )));
            }
            if common.json {
                Ok(json!({
                    "max_degree": report.max_degree,
                    "rad_degree": report.rad_degree,
                    "holds": report.holds,
                })
                .to_string())
            } else {
                Ok(format!(
                    "max deg = {} <= deg rad(ABC) - 1 = {}: holds",
                    report.max_degree,
                    report.rad_degree - 1
                ))
            }
        }
        Command::Factor { common, f, seed } => {
            let field = parse_field_descriptor(&common.field)?;
            let poly = parse_polynomial(&field, &f)?;
            let fac = factor(&poly, seed)?;
            if common.json {
                let factors: Vec<Value> = fac
                    .factors
                    .iter()
                    .map(|(p, m)| json!({"poly": p.to_string(), "multiplicity": m}))
                    .collect();
                Ok(json!({
                    "unit": fac.unit.to_string(),
                    "factors": factors,
                })
                .to_string())
            } else {
                let mut out = format!("unit: {}", fac.unit);
                for (p, m) in &fac.factors {
                    out.push_str(&format!("\n ({p})^{m}"));
                }
                Ok(out)
            }
        }
    }
}

fn read_bivariate_family(
    field: &FieldSpec,
    path: &str,
) -> Result<Vec<(BivariatePolynomial, BivariatePolynomial)>, Error> {
    let lines = read_function_lines(path)?;
    if lines.is_empty() {
        return Err(Error::Domain(format!("{path} contains no functions")));
    }
    lines
        .iter()
        .map(|l| parse_bivariate_pair(field, l))
        .collect()
}

fn parse_coeff_set(s: &str) -> Result<Vec<num_rational::BigRational>, Error> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad range start `{lo}`")))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad range end `{hi}`")))?;
        if lo > hi {
            return Err(Error::Domain("empty coefficient range".into()));
        }
        return Ok((lo..=hi)
            .map(|v| num_rational::BigRational::from_integer(v.into()))
            .collect());
    }
    let q = FieldSpec::rationals();
    s.split(',')
        .map(|part| {
            let e = q.parse_element(part.trim())?;
            Ok(e.as_rational().unwrap().clone())
        })
        .collect()
}

fn shift_bound_json(r: &ShiftBoundReport) -> Value {
    json!({
        "r_degrees": r.r_degrees.iter().map(|((i, j), d)| json!([i, j, d])).collect::<Vec<_>>(),
        "E": r.e_sum,
        "alpha": r.alpha,
        "d_n": r.d_n,
        "e_n": r.e_n,
        "degree_bound": r.degree_bound,
        "count_bound": r.count_bound.as_ref().map(|b| b.to_string()),
        "degenerate_pairs": r.degenerate_pairs,
    })
}

fn shift_bound_output(r: &ShiftBoundReport, json_mode: bool) -> String {
    if json_mode {
        return shift_bound_json(r).to_string();
    }
    let mut out = format!(
        "E = {}, alpha = {}, d_n = {}, e_n = {}\n degree bound: {}\n count bound: {}",
        r.e_sum,
        r.alpha,
        r.d_n,
        r.e_n,
        r.degree_bound,
        r.count_bound
            .as_ref()
            .map_or("withheld (degenerate pairs)".to_string(), |b| b.to_string()),
    );
    if !r.degenerate_pairs.is_empty() {
        out.push_str(&format!("\n degenerate pairs: {:?}", r.degenerate_pairs));
    }
    out
}

fn certificate_output(cert: &HighOrderCertificate, json_mode: bool) -> String {
    let p = &cert.params;
    if json_mode {
        json!({
            "q": p.q.to_string(),
            "n": p.n,
            "d": p.d,
            "m": p.m.to_string(),
            "t": p.t,
            "g": cert.g.to_string(),
            "h": cert.h.to_string(),
            "factor": cert.factor.to_string(),
            "order_bound": cert.order_bound.to_string(),
            "verified_order": cert.verified_order.map(|o| o.to_string()),
            "frobenius_ok": cert.frobenius_ok,
        })
        .to_string()
    } else {
        format!(
            "q = {}, n = {}: d = {}, m = {}, t = {}\n g = {}\n h = {}\n factor (degree {}): {}\n order bound: {} (exact lower bound: {})\n verified order: {}\n frobenius identities: {}",
            p.q,
            p.n,
            p.d,
            p.m,
            p.t,
            cert.g,
            cert.h,
            cert.factor.degree().unwrap(),
            cert.factor,
            cert.order_bound,
            p.lambe_bound,
            cert.verified_order.map_or("not requested".to_string(), |o| o.to_string()),
            if cert.frobenius_ok { "pass" } else { "FAIL" },
        )
    }
}
