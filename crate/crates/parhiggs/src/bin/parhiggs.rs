//! Command-line surface: exact computations printed as schema-versioned
//! JSON run reports.
//!
//! Wire format: every scalar is an exact string ("a/b" for rationals,
//! "a/b+c/d*i" for Gaussian rationals); polynomials are coefficient arrays
//! (low to high); rational functions are {num, den} pairs of those. JSON
//! objects use sorted keys, so a report is byte-identical across runs for
//! identical inputs. Wall-clock time goes to stderr; the report's timing
//! section carries deterministic work counters only.
//!
//! Exit codes: 0 success, 1 domain error (e.g. a weight vector on a wall),
//! 2 usage error.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use parhiggs::cone_geometry::{cone_angles, hyperbolic_area, squared_line_bundle, ConeError};
use parhiggs::cstar_limit::{
    iterate_to_semistable, hn_limit, GriffithsFiltration, HnLimit, HodgeSystem,
};
use parhiggs::exact_algebra::{rat_int, Gaussian, Poly, Rat, Rf};
use parhiggs::fixed_points::{
    chamber_census, chamber_of, enumerate_fixed_components, CentralSphere,
};
use parhiggs::higgs_lambda::{LambdaConnection, max_destabilizing_line};
use parhiggs::hitchin_sections::{basis_b_mu, hitchin_section, parabolic_oper_check};
use parhiggs::parabolic_core::{
    Flag, LineSubbundle, MarkedDivisor, ParabolicRank2Bundle, WeightVector,
};
use parhiggs::rng::Lcg;
use parhiggs::weight_mass_tables::{
    cl_family_transform, cl_transform, lambda_transform, nah_transform, TransformedPair,
    WeightMassPair,
};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "parhiggs", version, about = "Exact computations for rank-2 parabolic Higgs bundles and lambda-connections on the 4-punctured sphere")]
struct Cli {
    /// Seed for pseudorandom sampling of omitted inputs. The generator is a
    /// linear congruential generator with multiplier 6364136223846793005 and
    /// increment 1442695040888963407 (mod 2^64), emitting the high 32 bits.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum TableRule {
    /// Nonabelian Hodge: beta = alpha - 2 Re(conj(mu)).
    Nah,
    /// Lambda-connection: beta = alpha - 2 Re(lambda conj(mu)).
    Lambda,
    /// Conformal-limit family in (hbar, R).
    Family,
    /// Conformal limit: beta = alpha, nu = hbar alpha + mu.
    Cl,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a (weights, complex masses) pair by one of the four tables.
    Tables {
        #[arg(long, value_enum)]
        rule: TableRule,
        /// Four rational weights "a1,a2,a3,a4" in (0,1/2).
        #[arg(long)]
        alpha: String,
        /// Four Gaussian-rational masses "m1,m2,m3,m4".
        #[arg(long)]
        mu: String,
        /// Gaussian-rational hbar (rules family, cl).
        #[arg(long)]
        hbar: Option<String>,
        /// Gaussian-rational lambda (rule lambda).
        #[arg(long)]
        lambda: Option<String>,
        /// Rational radius R (rule family).
        #[arg(long)]
        radius: Option<String>,
    },
    /// Census of weight chambers on the grid (k1..k4)/n, walls excluded.
    Chambers {
        #[arg(long)]
        grid: i64,
    },
    /// Enumerate the five fixed components for a generic weight vector.
    FixedPoints {
        #[arg(long)]
        alpha: String,
    },
    /// Evaluate the Hitchin section over a fixed component.
    HitchinSection {
        #[arg(long)]
        alpha: String,
        /// Marked-point indices of the subdivisor, e.g. "2,3" (may be empty "").
        #[arg(long, default_value = "")]
        subset: String,
        /// Four Gaussian-rational residues of sqrt(q); sampled when omitted.
        #[arg(long)]
        mu: Option<String>,
        /// Affine coordinate t on the base line q0 + t/Pi; sampled when omitted.
        #[arg(long)]
        t: Option<String>,
    },
    /// Slope stability of a parabolic bundle (zero Higgs field).
    Stability {
        #[arg(long)]
        alpha: String,
        /// Split type "d1,d2" with d1 + d2 = -4.
        #[arg(long)]
        split: String,
        /// Four flags "a:b;a:b;a:b;a:b" over the standard divisor.
        #[arg(long)]
        flags: String,
    },
    /// C*-limit of a Hitchin-section Higgs bundle: HN shortcut and iteration.
    Climit {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value = "")]
        subset: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        t: Option<String>,
    },
    /// Cone angles and Gauss-Bonnet area for (alpha, subdivisor).
    Cone {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// Check whether the split-off line makes the section a parabolic oper.
    OperCheck {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value = "")]
        subset: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        t: Option<String>,
    },
}

enum AppError {
    /// Malformed input values: exit 2.
    Usage(String),
    /// Well-formed input outside the mathematical domain: exit 1.
    Domain(String),
}

impl<E: std::error::Error> From<E> for AppError {
    fn from(e: E) -> Self {
        AppError::Domain(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

// ---------------------------------------------------------------- parsing

fn parse_rat(s: &str) -> Result<Rat, AppError> {
    Rat::from_str(s.trim()).map_err(|_| usage(format!("invalid rational: {s:?}")))
}

fn parse_gaussian(s: &str) -> Result<Gaussian, AppError> {
    Gaussian::from_str(s).map_err(|_| usage(format!("invalid Gaussian rational: {s:?}")))
}

fn parse_list<T>(
    s: &str,
    n: usize,
    f: impl Fn(&str) -> Result<T, AppError>,
) -> Result<Vec<T>, AppError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(usage(format!("expected {n} comma-separated values, got {s:?}")));
    }
    parts.into_iter().map(f).collect()
}

fn parse_alpha(s: &str) -> Result<WeightVector, AppError> {
    let v = parse_list(s, 4, parse_rat)?;
    WeightVector::new(std::array::from_fn(|i| v[i].clone()))
        .map_err(|e| usage(e.to_string()))
}

fn parse_mu(s: &str) -> Result<[Gaussian; 4], AppError> {
    let v = parse_list(s, 4, parse_gaussian)?;
    Ok(std::array::from_fn(|i| v[i].clone()))
}

fn parse_subset(s: &str) -> Result<Vec<usize>, AppError> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| usage(format!("invalid subset index: {part:?}")))?;
        if i >= 4 {
            return Err(usage("subset indices must lie in 0..4"));
        }
        out.push(i);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn parse_flag(s: &str) -> Result<Flag, AppError> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| usage(format!("flag must be \"a:b\", got {s:?}")))?;
    let (a, b) = (parse_gaussian(a)?, parse_gaussian(b)?);
    if a.is_zero() && b.is_zero() {
        return Err(usage("flag direction must be nonzero"));
    }
    Ok(Flag::new(a, b))
}

// ---------------------------------------------------------- serialization

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

fn gauss_str(g: &Gaussian) -> String {
    g.to_string()
}

fn poly_json(p: &Poly) -> Value {
    let n = p.degree().map_or(0, |d| d + 1);
    Value::Array((0..n).map(|j| Value::String(gauss_str(&p.coeff(j)))).collect())
}

fn rf_json(f: &Rf) -> Value {
    json!({ "num": poly_json(f.num()), "den": poly_json(f.den()) })
}

fn rat4_json(r: &[Rat; 4]) -> Value {
    Value::Array(r.iter().map(|x| Value::String(rat_str(x))).collect())
}

fn gauss4_json(g: &[Gaussian; 4]) -> Value {
    Value::Array(g.iter().map(|x| Value::String(gauss_str(x))).collect())
}

fn flag_json(f: &Flag) -> Value {
    Value::String(format!("{}:{}", f.a, f.b))
}

fn line_json(line: &LineSubbundle) -> Value {
    json!({ "u": poly_json(&line.u), "v": poly_json(&line.v), "degree": line.degree })
}

fn subset_json(subset: &[usize]) -> Value {
    Value::Array(subset.iter().map(|&i| Value::Number(i.into())).collect())
}

// ------------------------------------------------------------- reporting

struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    outputs: Map<String, Value>,
    verification: Map<String, Value>,
    work_items: u64,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            outputs: Map::new(),
            verification: Map::new(),
            work_items: 0,
        }
    }

    fn input(&mut self, key: &str, value: Value) {
        self.inputs.insert(key.to_string(), value);
    }

    fn output(&mut self, key: &str, value: Value) {
        self.outputs.insert(key.to_string(), value);
    }

    fn verify(&mut self, key: &str, ok: bool) {
        self.verification.insert(key.to_string(), Value::Bool(ok));
    }

    fn render(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "verification": self.verification,
            "timing": { "work_items": self.work_items },
        })
    }
}

// ----------------------------------------------------------- subcommands

fn run_tables(
    report: &mut Report,
    rule: TableRule,
    alpha: &str,
    mu: &str,
    hbar: Option<&str>,
    lambda: Option<&str>,
    radius: Option<&str>,
) -> Result<(), AppError> {
    let alpha = parse_alpha(alpha)?;
    let mu = parse_mu(mu)?;
    report.input("alpha", rat4_json(&alpha.alpha));
    report.input("mu", gauss4_json(&mu));
    let pair = WeightMassPair { alpha: alpha.alpha.clone(), mu };
    let need = |flag: Option<&str>, name: &str| {
        flag.map(parse_gaussian)
            .transpose()?
            .ok_or_else(|| usage(format!("this rule requires --{name}")))
    };
    let out: TransformedPair = match rule {
        TableRule::Nah => {
            report.input("rule", json!("nah"));
            nah_transform(&pair)
        }
        TableRule::Lambda => {
            let l = need(lambda, "lambda")?;
            report.input("rule", json!("lambda"));
            report.input("lambda", json!(gauss_str(&l)));
            lambda_transform(&pair, &l)
        }
        TableRule::Family => {
            let h = need(hbar, "hbar")?;
            let r = radius
                .map(parse_rat)
                .transpose()?
                .ok_or_else(|| usage("rule family requires --radius"))?;
            report.input("rule", json!("family"));
            report.input("hbar", json!(gauss_str(&h)));
            report.input("radius", json!(rat_str(&r)));
            cl_family_transform(&pair, &h, &r)
        }
        TableRule::Cl => {
            let h = need(hbar, "hbar")?;
            report.input("rule", json!("cl"));
            report.input("hbar", json!(gauss_str(&h)));
            cl_transform(&pair, &h)
        }
    };
    report.output("beta", rat4_json(&out.pair.alpha));
    report.output("nu", gauss4_json(&out.pair.mu));
    report.output(
        "carry",
        Value::Array(out.carry.iter().map(|&c| json!(c)).collect()),
    );
    report.verify(
        "beta_in_unit_interval",
        out.pair
            .alpha
            .iter()
            .all(|b| !b.is_negative() && b < &rat_int(1)),
    );
    report.work_items = 4;
    Ok(())
}

fn run_chambers(report: &mut Report, grid: i64) -> Result<(), AppError> {
    if grid < 4 {
        return Err(usage("--grid must be at least 4"));
    }
    report.input("grid", json!(grid));
    let census = chamber_census(grid);
    let mut items = Vec::new();
    let mut samples: u64 = 0;
    let mut off_wall = true;
    for (chamber, count) in &census {
        off_wall &= chamber.signs.iter().all(|&s| s != 0);
        samples += count;
        items.push(json!({
            "signs": chamber.signs.iter().map(|&s| i64::from(s)).collect::<Vec<_>>(),
            "count": count,
        }));
    }
    report.output("distinct", json!(census.len()));
    report.output("chambers", Value::Array(items));
    report.output("grid_points_sampled", json!(samples));
    report.verify("all_samples_off_walls", off_wall);
    report.work_items = samples;

    if let Ok(dir) = std::env::var("PARHIGGS_GOLDEN_DIR") {
        let path = std::path::Path::new(&dir).join(format!("chambers-grid-{grid}.json"));
        let body = serde_json::to_string_pretty(&report.render()).expect("serializable");
        std::fs::write(&path, body + "\n")
            .map_err(|e| AppError::Domain(format!("cannot write golden file: {e}")))?;
        eprintln!("golden census written to {}", path.display());
    }
    Ok(())
}

fn run_fixed_points(report: &mut Report, alpha: &str) -> Result<(), AppError> {
    let alpha = parse_alpha(alpha)?;
    report.input("alpha", rat4_json(&alpha.alpha));
    let divisor = MarkedDivisor::standard();
    let chamber = chamber_of(&alpha)?;
    let components = enumerate_fixed_components(&alpha, &divisor)?;
    report.output(
        "chamber_signs",
        json!(chamber.signs.iter().map(|&s| i64::from(s)).collect::<Vec<_>>()),
    );
    let mut exteriors = Vec::new();
    let mut all_stable = true;
    for datum in &components.exteriors {
        let higgs = datum.to_higgs();
        let stability = higgs.is_stable()?;
        all_stable &= stability.stable;
        exteriors.push(json!({
            "subset": subset_json(&datum.subset),
            "split": [datum.split.0, datum.split.1],
            "phi0_numerator": poly_json(&datum.numerator),
            "l1_par_degree": rat_str(&datum.l1.par_degree()),
            "l2_par_degree": rat_str(&datum.l2.par_degree()),
        }));
    }
    let central = match components.central {
        CentralSphere::StableBundle => json!({ "type": "stable-bundle" }),
        CentralSphere::Degree1 { k } => json!({ "type": "degree-1", "k": k }),
        CentralSphere::Degree3 { k } => json!({ "type": "degree-3", "k": k }),
    };
    report.output("component_count", json!(components.exteriors.len() + 1));
    report.output("exteriors", Value::Array(exteriors));
    report.output("central", central);
    report.verify("exteriors_stable", all_stable);
    report.verify("exterior_count_is_four", components.exteriors.len() == 4);
    report.work_items = components.exteriors.len() as u64 + 1;
    Ok(())
}

/// Shared input handling for the section-based subcommands: parse or sample
/// (mu, t), then build the Hitchin-section connection over (alpha, subset).
#[allow(clippy::type_complexity)]
fn build_section(
    report: &mut Report,
    seed: u64,
    alpha: &str,
    subset: &str,
    mu: Option<&str>,
    t: Option<&str>,
) -> Result<(LambdaConnection, Vec<usize>, Rf), AppError> {
    let alpha = parse_alpha(alpha)?;
    let subset = parse_subset(subset)?;
    let divisor = MarkedDivisor::standard();
    let mut rng = Lcg::new(seed);
    let mu = match mu {
        Some(s) => parse_mu(s)?,
        None => std::array::from_fn(|_| rng.gaussian(6, 3)),
    };
    let t = match t {
        Some(s) => parse_gaussian(s)?,
        None => rng.gaussian(6, 3),
    };
    let q = basis_b_mu(&mu, &divisor).at(&t);
    report.input("alpha", rat4_json(&alpha.alpha));
    report.input("subset", subset_json(&subset));
    report.input("mu", gauss4_json(&mu));
    report.input("t", json!(gauss_str(&t)));
    let conn = hitchin_section(&alpha, &divisor, &subset, &mu, &q)?;
    // Round-trip checks common to all section consumers.
    report.verify("determinant_matches_base_point", conn.hitchin_det()? == q);
    report.verify("masses_match", conn.complex_masses()? == mu);
    report.verify("stable", conn.is_stable()?.stable);
    Ok((conn, subset, q))
}

fn run_hitchin_section(
    report: &mut Report,
    seed: u64,
    alpha: &str,
    subset: &str,
    mu: Option<&str>,
    t: Option<&str>,
) -> Result<(), AppError> {
    let (conn, _, q) = build_section(report, seed, alpha, subset, mu, t)?;
    report.output("split", json!([conn.bundle.split.0, conn.bundle.split.1]));
    report.output(
        "matrix",
        Value::Array(
            conn.matrix
                .iter()
                .map(|row| Value::Array(row.iter().map(rf_json).collect()))
                .collect(),
        ),
    );
    report.output(
        "flags",
        Value::Array(conn.bundle.flags.iter().map(flag_json).collect()),
    );
    report.output("base_point", rf_json(&q));
    report.work_items = 1;
    Ok(())
}

fn run_stability(
    report: &mut Report,
    alpha: &str,
    split: &str,
    flags: &str,
) -> Result<(), AppError> {
    let alpha = parse_alpha(alpha)?;
    let split_parts = parse_list(split, 2, |s| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| usage(format!("invalid split degree: {s:?}")))
    })?;
    let (d1, d2) = (split_parts[0], split_parts[1]);
    if d1 + d2 != -4 {
        return Err(usage("split degrees must sum to -4"));
    }
    let flag_parts: Vec<&str> = flags.split(';').collect();
    if flag_parts.len() != 4 {
        return Err(usage("expected four flags separated by ';'"));
    }
    let mut parsed = Vec::new();
    for part in flag_parts {
        parsed.push(parse_flag(part)?);
    }
    report.input("alpha", rat4_json(&alpha.alpha));
    report.input("split", json!([d1, d2]));
    report.input(
        "flags",
        Value::Array(parsed.iter().map(flag_json).collect()),
    );
    let bundle = ParabolicRank2Bundle::new(
        (d1, d2),
        MarkedDivisor::standard(),
        std::array::from_fn(|i| parsed[i].clone()),
        alpha,
    );
    let (line, par) = max_destabilizing_line(&bundle);
    let stable = par < Rat::zero();
    report.output("stable", json!(stable));
    report.output("max_destabilizing_line", line_json(&line));
    report.output("max_line_par_degree", json!(rat_str(&par)));
    report.verify(
        "certificate_consistent",
        line.par_degree(&bundle) == par,
    );
    report.work_items = 1;
    Ok(())
}

fn run_climit(
    report: &mut Report,
    seed: u64,
    alpha: &str,
    subset: &str,
    mu: Option<&str>,
    t: Option<&str>,
) -> Result<(), AppError> {
    let (conn, _, _) = build_section(report, seed, alpha, subset, mu, t)?;
    let hn = hn_limit(&conn);
    let hn_json = match &hn {
        HnLimit::Bundle(bundle) => json!({
            "type": "stable-bundle",
            "split": [bundle.split.0, bundle.split.1],
        }),
        HnLimit::Fixed { system, subset } => {
            let HodgeSystem::Pair { sub, quot, .. } = system else {
                unreachable!("fixed limits are two-step Hodge systems")
            };
            json!({
                "type": "fixed-point",
                "subset": subset_json(subset),
                "sub_par_degree": rat_str(&sub.par_degree()),
                "quot_par_degree": rat_str(&quot.par_degree()),
            })
        }
    };
    let (filtration, graded, trace) = iterate_to_semistable(&conn, GriffithsFiltration::Trivial)?;
    let trace_json: Vec<Value> = trace
        .iter()
        .map(|(zeta, eta)| json!([rat_str(zeta), eta]))
        .collect();
    let final_json = match &graded {
        HodgeSystem::Single { .. } => json!({ "type": "single" }),
        HodgeSystem::Pair { sub, quot, line, .. } => {
            let fixed_subset: Vec<usize> = (0..4)
                .filter(|&i| !line.passes_through_flag(&conn.bundle, i))
                .collect();
            json!({
                "type": "pair",
                "subset": subset_json(&fixed_subset),
                "sub_par_degree": rat_str(&sub.par_degree()),
                "quot_par_degree": rat_str(&quot.par_degree()),
            })
        }
    };
    let matches = match (&hn, &graded) {
        (HnLimit::Bundle(_), HodgeSystem::Single { .. }) => true,
        (HnLimit::Fixed { system, .. }, HodgeSystem::Pair { line, .. }) => {
            let HodgeSystem::Pair { line: hn_line, .. } = system else {
                unreachable!()
            };
            hn_line == line
        }
        _ => false,
    };
    report.output("hn_limit", hn_json);
    report.output("iteration_steps", json!(trace.len()));
    report.output("iteration_trace", Value::Array(trace_json));
    report.output("iteration_limit", final_json);
    report.verify("iteration_matches_hn_limit", matches);
    report.verify(
        "final_filtration_transverse",
        parhiggs::cstar_limit::is_griffiths_transverse(&filtration, &conn),
    );
    report.work_items = trace.len() as u64 + 1;
    Ok(())
}

fn run_cone(report: &mut Report, alpha: &str, subset: &str) -> Result<(), AppError> {
    let alpha = parse_alpha(alpha)?;
    let subset = parse_subset(subset)?;
    report.input("alpha", rat4_json(&alpha.alpha));
    report.input("subset", subset_json(&subset));
    let profile = cone_angles(&alpha, &subset);
    report.output(
        "angles_over_pi",
        Value::Array(
            profile
                .angles_over_pi
                .iter()
                .map(|t| Value::String(rat_str(t)))
                .collect(),
        ),
    );
    let pd = squared_line_bundle(&alpha, &subset).par_degree();
    report.output("squared_bundle_par_degree", json!(rat_str(&pd)));
    match hyperbolic_area(&profile) {
        Ok(area) => {
            report.output("area_over_pi", json!(rat_str(&area)));
            report.verify("gauss_bonnet_matches_degree", area == pd / rat_int(2));
            report.work_items = 1;
            Ok(())
        }
        Err(ConeError::NegativeArea(msg)) => Err(AppError::Domain(msg)),
    }
}

fn run_oper_check(
    report: &mut Report,
    seed: u64,
    alpha: &str,
    subset: &str,
    mu: Option<&str>,
    t: Option<&str>,
) -> Result<(), AppError> {
    let (conn, subset, _) = build_section(report, seed, alpha, subset, mu, t)?;
    let line = LineSubbundle::first_summand(conn.bundle.split);
    let is_oper = parabolic_oper_check(&conn, &line, &subset);
    report.output("line", line_json(&line));
    report.output("oper", json!(is_oper));
    report.work_items = 1;
    Ok(())
}

// ------------------------------------------------------------------ main

fn run(cli: &Cli, report: &mut Report) -> Result<(), AppError> {
    match &cli.command {
        Command::Tables { rule, alpha, mu, hbar, lambda, radius } => run_tables(
            report,
            *rule,
            alpha,
            mu,
            hbar.as_deref(),
            lambda.as_deref(),
            radius.as_deref(),
        ),
        Command::Chambers { grid } => run_chambers(report, *grid),
        Command::FixedPoints { alpha } => run_fixed_points(report, alpha),
        Command::HitchinSection { alpha, subset, mu, t } => {
            run_hitchin_section(report, cli.seed, alpha, subset, mu.as_deref(), t.as_deref())
        }
        Command::Stability { alpha, split, flags } => {
            run_stability(report, alpha, split, flags)
        }
        Command::Climit { alpha, subset, mu, t } => {
            run_climit(report, cli.seed, alpha, subset, mu.as_deref(), t.as_deref())
        }
        Command::Cone { alpha, subset } => run_cone(report, alpha, subset),
        Command::OperCheck { alpha, subset, mu, t } => {
            run_oper_check(report, cli.seed, alpha, subset, mu.as_deref(), t.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match &cli.command {
        Command::Tables { .. } => "tables",
        Command::Chambers { .. } => "chambers",
        Command::FixedPoints { .. } => "fixed-points",
        Command::HitchinSection { .. } => "hitchin-section",
        Command::Stability { .. } => "stability",
        Command::Climit { .. } => "climit",
        Command::Cone { .. } => "cone",
        Command::OperCheck { .. } => "oper-check",
    };
    let started = std::time::Instant::now();
    let mut report = Report::new(name);
    let code = match run(&cli, &mut report) {
        Ok(()) => {
            let body =
                serde_json::to_string_pretty(&report.render()).expect("report is serializable");
            println!("{body}");
            ExitCode::SUCCESS
        }
        Err(AppError::Domain(msg)) => {
            let body = serde_json::to_string_pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "error": msg,
            }))
            .expect("error report is serializable");
            println!("{body}");
            ExitCode::from(1)
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    };
    eprintln!("elapsed_ms={}", started.elapsed().as_millis());
    code
}
