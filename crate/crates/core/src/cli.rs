//! Command-line front end. Results go to standard output, diagnostics to
//! standard error. Exit codes: 0 success, 1 a checked conclusion failed,
//! 2 usage or input error.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::angles::{
    cos_dixmier_exact, cos_dixmier_iterative, cos_dixmier_oracle, friedrichs_reduction, AngleResult,
};
use crate::cone::{ConeSpec, PolyhedralCone};
use crate::error::{Error, Result};
use crate::linalg::{Vector, DEFAULT_TOL};
use crate::projection::project;
use crate::theorems::{self, gen_random_cone, trial_rng, RandomConeParams, TheoremReport, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cone-angles",
    version,
    about = "Angles between polyhedral convex cones"
)]
pub struct Cli {
    /// Tolerance used when building cones from files.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tolerance: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Dixmier,
    Friedrichs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Iterative,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Basic,
    Nested,
    Hundal,
    Difference,
    Complement,
    Solmon,
    SubspaceSolmon,
    OrthogonalSum,
    FiniteDim,
}

const SINGLE_SUITES: [Suite; 9] = [
    Suite::Basic,
    Suite::Nested,
    Suite::Hundal,
    Suite::Difference,
    Suite::Complement,
    Suite::Solmon,
    Suite::SubspaceSolmon,
    Suite::OrthogonalSum,
    Suite::FiniteDim,
];

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cosine and angle between two cones.
    Angle {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = Kind::Dixmier)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
        method: MethodArg,
        /// Sphere grid size for the oracle.
        #[arg(long, default_value_t = 200_000)]
        samples: usize,
        /// Iteration cap for the iterative method.
        #[arg(long, default_value_t = 1000)]
        max_iter: usize,
    },
    /// Polar cone.
    Polar {
        #[arg(long)]
        a: String,
        /// Print only the cone file of the result.
        #[arg(long)]
        emit: bool,
    },
    /// Dual cone.
    Dual {
        #[arg(long)]
        a: String,
        #[arg(long)]
        emit: bool,
    },
    /// Projection of a point and its Moreau decomposition.
    Project {
        #[arg(long)]
        a: String,
        /// Point as `1,2,3` or `[1,2,3]`.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Run theorem checks on a given pair or on random pairs.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, requires = "b")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample count for the inner-product bound.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Random search for nonlinear pairs meeting every hypothesis of the
    /// conical Solmon inequality.
    Explore {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Text printed on success and the exit code.
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

/// Reads and validates a cone file.
pub fn parse_cone_file(path: impl AsRef<Path>) -> Result<ConeSpec> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let spec: ConeSpec = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    spec.validate()?;
    Ok(spec)
}

fn load_cone(path: &str, tol: f64) -> Result<PolyhedralCone> {
    PolyhedralCone::from_spec(&parse_cone_file(path)?, tol)
}

fn parse_point(s: &str) -> Result<Vector> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let coords = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Error::InvalidParams(format!("point entry {t:?} is not a number")))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(Vector::from_vec(coords))
}

fn vec_json(v: &Vector) -> Value {
    json!(v.iter().copied().collect::<Vec<f64>>())
}

fn vecs_json(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(vec_json).collect())
}

fn fmt_vec(v: &Vector) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
    s.push('\n');
    s
}

fn angle_json(r: &AngleResult, kind: Kind, tol: f64) -> Value {
    let certificates = r.certificate.as_ref().map(|c| {
        json!({
            "x_star": vec_json(&c.x),
            "y_star": vec_json(&c.y),
        })
    });
    json!({
        "kind": match kind { Kind::Dixmier => "dixmier", Kind::Friedrichs => "friedrichs" },
        "cosine": r.cosine,
        "angle_radians": r.angle,
        "method": r.method.to_string(),
        "attained": r.attained,
        "flagged": r.flagged,
        "certificates": certificates,
        "tolerance": tol,
    })
}

fn angle_text(r: &AngleResult, kind: Kind) -> String {
    let mut s = String::new();
    let kind = match kind {
        Kind::Dixmier => "dixmier",
        Kind::Friedrichs => "friedrichs",
    };
    let _ = writeln!(s, "kind: {kind}");
    let _ = writeln!(s, "cosine: {}", r.cosine);
    let _ = writeln!(s, "angle_radians: {}", r.angle);
    let _ = writeln!(s, "method: {}", r.method);
    let _ = writeln!(s, "attained: {}", r.attained);
    if r.flagged {
        let _ = writeln!(s, "flagged: true");
    }
    match &r.certificate {
        Some(c) => {
            let _ = writeln!(s, "x_star: {}", fmt_vec(&c.x));
            let _ = writeln!(s, "y_star: {}", fmt_vec(&c.y));
        }
        None => {
            let _ = writeln!(s, "certificates: none");
        }
    }
    s
}

fn cone_json(k: &PolyhedralCone) -> Value {
    json!({
        "dim": k.dim(),
        "generators": vecs_json(k.generators()),
        "halfspaces": vecs_json(k.halfspaces()),
        "extreme_rays": vecs_json(k.extreme_rays()),
        "lineality_basis": vecs_json(k.lineality_space()),
    })
}

fn cone_text(k: &PolyhedralCone) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "dim: {}", k.dim());
    let _ = writeln!(s, "lineality dimension: {}", k.lineality_space().len());
    let _ = writeln!(s, "generators:");
    for g in k.generators() {
        let _ = writeln!(s, "  {}", fmt_vec(g));
    }
    let _ = writeln!(s, "halfspaces (<a, x> <= 0):");
    for a in k.halfspaces() {
        let _ = writeln!(s, "  {}", fmt_vec(a));
    }
    s
}

fn emit_cone(k: &PolyhedralCone, emit: bool, format: Format) -> String {
    if emit {
        let spec = serde_json::to_value(k.to_spec()).unwrap_or(Value::Null);
        return pretty(&spec);
    }
    match format {
        Format::Json => pretty(&cone_json(k)),
        Format::Text => cone_text(k),
    }
}

fn run_angle(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    kind: Kind,
    method: MethodArg,
    samples: usize,
    max_iter: usize,
) -> Result<AngleResult> {
    let (a, b) = match kind {
        Kind::Dixmier => (k1.clone(), k2.clone()),
        Kind::Friedrichs => friedrichs_reduction(k1, k2)?,
    };
    match method {
        MethodArg::Exact => cos_dixmier_exact(&a, &b),
        MethodArg::Iterative => Ok(cos_dixmier_iterative(&a, &b, &[], max_iter, 1e-15)?.0),
        MethodArg::Oracle => cos_dixmier_oracle(&a, &b, samples),
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Basic => "basic",
        Suite::Nested => "nested",
        Suite::Hundal => "hundal",
        Suite::Difference => "difference",
        Suite::Complement => "complement",
        Suite::Solmon => "solmon",
        Suite::SubspaceSolmon => "subspace-solmon",
        Suite::OrthogonalSum => "orthogonal-sum",
        Suite::FiniteDim => "finite-dim",
    }
}

fn run_suite(
    suite: Suite,
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    samples: usize,
) -> Result<Vec<TheoremReport>> {
    Ok(match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in SINGLE_SUITES {
                out.extend(run_suite(s, k1, k2, samples)?);
            }
            out
        }
        Suite::Basic => theorems::check_basic_facts(k1, k2, samples)?,
        Suite::Nested => vec![theorems::check_nested(k1, k2)?],
        Suite::Hundal => {
            let full = PolyhedralCone::full(k1.dim())?;
            vec![
                theorems::check_hundal_extension(k1, k2, None)?,
                theorems::check_hundal_extension(k1, k2, Some(&full))?,
            ]
        }
        Suite::Difference => vec![theorems::check_difference_lemma(k1, k2)?],
        Suite::Complement => vec![theorems::check_kkm_conical(k1, k2)?],
        Suite::Solmon => vec![theorems::check_solmon_conical(k1, k2)?],
        Suite::SubspaceSolmon => vec![theorems::check_subspace_solmon(k1, k2)?],
        Suite::OrthogonalSum => vec![theorems::check_orthogonal_sum_polar(k1, k2)?],
        Suite::FiniteDim => vec![theorems::check_finite_dim_equalities(k1, k2)?],
    })
}

fn random_params(rng: &mut ChaCha8Rng, dim: usize) -> RandomConeParams {
    RandomConeParams::new(dim, rng.random_range(1..=dim + 1), rng.random())
}

/// A random pair suited to `suite`, so that its hypotheses hold reasonably
/// often.
fn random_pair(
    suite: Suite,
    dim: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(PolyhedralCone, PolyhedralCone)> {
    let general = |rng: &mut ChaCha8Rng| gen_random_cone(&random_params(rng, dim));
    let subspace =
        |rng: &mut ChaCha8Rng| gen_random_cone(&RandomConeParams::subspace(dim, rng.random()));
    let pointed = |rng: &mut ChaCha8Rng| {
        let count = rng.random_range(1..=dim + 1);
        gen_random_cone(&RandomConeParams::pointed(dim, count, rng.random()))
    };
    Ok(match suite {
        Suite::Nested => {
            let outer = general(rng)?;
            let inner: Vec<Vector> = outer
                .generators()
                .iter()
                .filter(|_| rng.random_bool(0.5))
                .cloned()
                .collect();
            (
                PolyhedralCone::from_generators(dim, &inner, DEFAULT_TOL)?,
                outer,
            )
        }
        Suite::Hundal => (pointed(rng)?, pointed(rng)?),
        Suite::Complement | Suite::SubspaceSolmon | Suite::FiniteDim => {
            (subspace(rng)?, subspace(rng)?)
        }
        Suite::OrthogonalSum => {
            let b = if rng.random_bool(0.5) {
                subspace(rng)?
            } else {
                general(rng)?
            };
            let a = general(rng)?.intersect(&b.orthogonal_complement()?)?;
            (a, b)
        }
        Suite::Solmon => {
            if rng.random_bool(0.5) {
                (subspace(rng)?, subspace(rng)?)
            } else {
                theorems::gen_structured_pair(dim, rng)?
            }
        }
        _ => (general(rng)?, general(rng)?),
    })
}

struct Tagged {
    trial: Option<u64>,
    suite: Suite,
    report: TheoremReport,
}

fn verify_random(
    suite: Suite,
    dim: usize,
    trials: u64,
    seed: u64,
    samples: usize,
) -> Result<Vec<Tagged>> {
    if !(2..=8).contains(&dim) {
        return Err(Error::InvalidParams(format!(
            "dim must be in [2, 8], got {dim}"
        )));
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => SINGLE_SUITES.to_vec(),
        s => vec![s],
    };
    let per_trial: Vec<Vec<Tagged>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut out = Vec::new();
            for (i, &s) in suites.iter().enumerate() {
                let mut rng = trial_rng(seed, t * SINGLE_SUITES.len() as u64 + i as u64);
                let (k1, k2) = random_pair(s, dim, &mut rng)?;
                for report in run_suite(s, &k1, &k2, samples)? {
                    out.push(Tagged {
                        trial: Some(t),
                        suite: s,
                        report,
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_trial.into_iter().flatten().collect())
}

fn verify_output(reports: &[Tagged], format: Format, tol: f64) -> Output {
    let count = |v: Verdict| reports.iter().filter(|r| r.report.conclusion == v).count();
    let (holds, fails, na) = (
        count(Verdict::Holds),
        count(Verdict::Fails),
        count(Verdict::NotApplicable),
    );
    let stdout = match format {
        Format::Json => {
            let items: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(&r.report).unwrap_or(Value::Null);
                    if let Value::Object(m) = &mut v {
                        m.insert("suite".into(), suite_name(r.suite).into());
                        if let Some(t) = r.trial {
                            m.insert("trial".into(), t.into());
                        }
                    }
                    v
                })
                .collect();
            pretty(&json!({
                "reports": items,
                "summary": {
                    "total": reports.len(),
                    "holds": holds,
                    "fails": fails,
                    "not_applicable": na,
                    "passed": fails == 0,
                },
                "tolerance": tol,
            }))
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let verdict = match r.report.conclusion {
                    Verdict::Holds => "holds",
                    Verdict::Fails => "FAILS",
                    Verdict::NotApplicable => "n/a",
                };
                let trial = r.trial.map(|t| format!(" trial {t}")).unwrap_or_default();
                let _ = writeln!(s, "{verdict:<6} {}{trial}", r.report.theorem_id);
            }
            let _ = writeln!(
                s,
                "summary: total {}, holds {holds}, fails {fails}, not_applicable {na}",
                reports.len()
            );
            s
        }
    };
    Output {
        stdout,
        code: if fails == 0 {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
    }
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Result<Output> {
    let tol = cli.tolerance;
    crate::linalg::check_tol(tol)?;
    match &cli.command {
        Command::Angle {
            a,
            b,
            kind,
            method,
            samples,
            max_iter,
        } => {
            let k1 = load_cone(a, tol)?;
            let k2 = load_cone(b, tol)?;
            let r = run_angle(&k1, &k2, *kind, *method, *samples, *max_iter)?;
            Ok(Output::ok(match cli.format {
                Format::Json => pretty(&angle_json(&r, *kind, tol)),
                Format::Text => angle_text(&r, *kind),
            }))
        }
        Command::Polar { a, emit } => {
            let k = load_cone(a, tol)?.polar()?;
            Ok(Output::ok(emit_cone(&k, *emit, cli.format)))
        }
        Command::Dual { a, emit } => {
            let k = load_cone(a, tol)?.dual()?;
            Ok(Output::ok(emit_cone(&k, *emit, cli.format)))
        }
        Command::Project { a, x } => {
            let k = load_cone(a, tol)?;
            let x = parse_point(x)?;
            let r = project(&k, &x)?;
            Ok(Output::ok(match cli.format {
                Format::Json => pretty(&json!({
                    "point": vec_json(&r.point),
                    "polar_part": vec_json(&r.residual),
                    "inner": r.inner,
                })),
                Format::Text => format!(
                    "point: {}\npolar_part: {}\ninner: {}\n",
                    fmt_vec(&r.point),
                    fmt_vec(&r.residual),
                    r.inner
                ),
            }))
        }
        Command::Verify {
            suite,
            a,
            b,
            dim,
            trials,
            seed,
            samples,
        } => {
            let reports = match (a, b) {
                (Some(a), Some(b)) => {
                    let k1 = load_cone(a, tol)?;
                    let k2 = load_cone(b, tol)?;
                    let suites: Vec<Suite> = match suite {
                        Suite::All => SINGLE_SUITES.to_vec(),
                        s => vec![*s],
                    };
                    let mut out = Vec::new();
                    for s in suites {
                        for report in run_suite(s, &k1, &k2, *samples)? {
                            out.push(Tagged {
                                trial: None,
                                suite: s,
                                report,
                            });
                        }
                    }
                    out
                }
                _ => verify_random(*suite, *dim, *trials, *seed, *samples)?,
            };
            Ok(verify_output(&reports, cli.format, tol))
        }
        Command::Explore { dim, trials, seed } => {
            let s = theorems::explore_open_question(*dim, *trials, *seed)?;
            Ok(Output::ok(match cli.format {
                Format::Json => pretty(&serde_json::to_value(&s).unwrap_or(Value::Null)),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "hits: {}", s.hits);
                    let _ = writeln!(out, "dim: {}", s.dim);
                    let _ = writeln!(out, "trials: {}", s.trials);
                    let _ = writeln!(out, "seed: {}", s.seed);
                    for (name, n) in &s.first_failed_hypothesis {
                        let _ = writeln!(out, "stopped at {name}: {n}");
                    }
                    for h in &s.sample_hits {
                        let _ =
                            writeln!(out, "hit: {}", serde_json::to_string(h).unwrap_or_default());
                    }
                    let _ = writeln!(out, "note: {}", s.note);
                    out
                }
            }))
        }
    }
}

/// Parses `args`, runs the command, prints, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
