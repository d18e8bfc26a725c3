use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use ssm_core::a2pp::{phi_class, ssm_sigma_sieve, ssm_sigma_tssm, PhiMethod};
use ssm_core::cellgeom::{enumerate_orbits, set_of_lambda, ColumnSet};
use ssm_core::genfun::{scan_lambda, tssm};
use ssm_core::ringcore::{MultiPoly, Var};
use ssm_core::schurbasis::{partitions_of, Partition, SchurSeries};
use ssm_core::suites::{run_suite, Suite};
use ssm_core::weightfn::{
    csm_cell, csm_cell_beta0, ssm_cell, ssm_cell_beta0, verify_interpolation_axioms, weight_function, CsmClass,
};
use ssm_core::{Error, DEFAULT_CAP};

#[derive(Parser, Debug)]
#[command(name = "ssm-kit", version, about = "Exact CSM/SSM classes of matrix Schubert cells and A2 quiver orbits")]
struct Cli {
    /// Degree cap for truncated series [default: 10; suite defaults for cross-check].
    #[arg(long, global = true, env = "SSM_KIT_CAP")]
    cap: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The weight function W_I.
    Weight(CellArgs),
    /// The CSM class of a matrix Schubert cell.
    CsmCell(CellArgs),
    /// The SSM class of a matrix Schubert cell, truncated at --cap.
    SsmCell(CellArgs),
    /// The stable series tssm_lambda.
    Tssm {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
    },
    /// The SSM class of the rank locus Sigma^r_{k,n}.
    Sigma {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = SigmaMethod::Tssm)]
        method: SigmaMethod,
        /// Print the Schur series before rho^{k,n} (tssm method only).
        #[arg(long)]
        schur: bool,
    },
    /// The class Phi^s_{k,n}.
    Phi {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_method, default_value = "sss")]
        method: PhiMethod,
        /// Print the Schur series before rho^{k,n} (sss and det methods).
        #[arg(long)]
        schur: bool,
    },
    /// Checks the interpolation conditions for the weight functions.
    VerifyAxioms {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Scans the tssm_lambda for sign alternation, one line per lambda.
    ScanAlternating {
        #[arg(long)]
        max_weight: u32,
        #[arg(long, default_value_t = 0)]
        from_weight: u32,
    },
    /// Runs cross-check suites.
    CrossCheck {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SigmaMethod {
    Tssm,
    Sieve,
}

#[derive(Args, Debug)]
struct CellArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Column set, e.g. `1,3`; an empty string is the empty set.
    #[arg(long, value_parser = parse_list, conflicts_with = "lambda", required_unless_present = "lambda")]
    set: Option<List>,
    /// Partition, e.g. `3,1`.
    #[arg(long, value_parser = parse_list)]
    lambda: Option<List>,
    /// Specialize beta = 0.
    #[arg(long)]
    beta_zero: bool,
    /// Print the expansion in rho^{k,0}(Sc_mu); implies --beta-zero.
    #[arg(long)]
    schur: bool,
}

/// A comma-separated list of non-negative integers.
#[derive(Clone, Debug)]
struct List(Vec<u32>);

fn parse_list(s: &str) -> Result<List, String> {
    split_list(s).map(List)
}

fn split_list(s: &str) -> Result<Vec<u32>, String> {
    let t = s.trim().trim_start_matches(['{', '(']).trim_end_matches(['}', ')']);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|x| x.trim().parse::<u32>().map_err(|e| format!("`{x}`: {e}"))).collect()
}

fn parse_lambda(s: &str) -> Result<Partition, String> {
    Partition::new(split_list(s)?).map_err(|e| e.to_string())
}

fn parse_method(s: &str) -> Result<PhiMethod, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with the exit code it maps to.
enum Failure {
    Usage(String),
    Verification(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Argument(_) | Error::Configuration(_) => Failure::Usage(e.to_string()),
            Error::InternalConsistency(_) => Failure::Verification(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<bool, Failure>;

fn usage(flag: &str, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {msg}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs: must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    if cli.cap == Some(0) {
        eprintln!("error: --cap: must be at least 1");
        return ExitCode::from(2);
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failure: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: write: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let (cap, fmt) = (cli.cap.unwrap_or(DEFAULT_CAP), cli.format);
    match &cli.command {
        Command::Weight(a) | Command::CsmCell(a) => {
            let set = cell_set(a)?;
            let c = if a.beta_zero || a.schur { csm_cell_beta0(&set)? } else { csm_cell(&set)? };
            emit_class(out, fmt, &c, a.schur, cap)?;
        }
        Command::SsmCell(a) => {
            let set = cell_set(a)?;
            if (cap as usize) < set.codim() {
                return Err(usage("--cap", format!("{cap} is below the codimension {} of {set}", set.codim())));
            }
            let c = if a.beta_zero || a.schur { ssm_cell_beta0(&set, cap)? } else { ssm_cell(&set, cap)? };
            emit_class(out, fmt, &c, a.schur, cap)?;
        }
        Command::Tssm { lambda } => {
            let t = tssm(lambda, cap)?;
            emit_schur(out, fmt, &t.series)?;
        }
        Command::Sigma { k, n, r, method, schur } => {
            check_kn(*k, *n)?;
            if r > k {
                return Err(usage("--r", format!("r = {r} exceeds k = {k}")));
            }
            match method {
                SigmaMethod::Tssm => {
                    let c = ssm_sigma_tssm(*k, *n, *r, cap)?;
                    if *schur {
                        emit_schur(out, fmt, &c.schur)?;
                    } else {
                        emit_poly(out, fmt, c.value.poly(), *k, *n)?;
                    }
                }
                SigmaMethod::Sieve => {
                    if *schur {
                        return Err(usage("--schur", "only available with --method tssm"));
                    }
                    let v = ssm_sigma_sieve(*k, *n, *r, cap, PhiMethod::Localization)?;
                    emit_poly(out, fmt, v.poly(), *k, *n)?;
                }
            }
        }
        Command::Phi { s, k, n, method, schur } => {
            check_kn(*k, *n)?;
            if s > k {
                return Err(usage("--s", format!("s = {s} exceeds k = {k}")));
            }
            let c = phi_class(*s, *k, *n, cap, *method)?;
            if *schur {
                match &c.schur {
                    Some(sc) => emit_schur(out, fmt, sc)?,
                    None => return Err(usage("--schur", "not available with --method loc")),
                }
            } else {
                emit_poly(out, fmt, c.value.poly(), *k, *n)?;
            }
        }
        Command::VerifyAxioms { k, n } => {
            check_kn(*k, *n)?;
            return verify_axioms(out, fmt, *k, *n);
        }
        Command::ScanAlternating { max_weight, from_weight } => {
            return scan(out, fmt, *from_weight, *max_weight, cap);
        }
        Command::CrossCheck { suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(|e: Error| usage("--suite", e))?]
            };
            return cross_check(out, fmt, &suites, cli.cap);
        }
    }
    Ok(true)
}

fn check_kn(k: usize, n: usize) -> Result<(), Failure> {
    if k > n {
        return Err(usage("--k", format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

fn cell_set(a: &CellArgs) -> Result<ColumnSet, Failure> {
    check_kn(a.k, a.n)?;
    match (&a.set, &a.lambda) {
        (Some(s), None) => {
            ColumnSet::new(a.k, a.n, s.0.iter().map(|&x| x as usize).collect::<Vec<_>>()).map_err(|e| usage("--set", e))
        }
        (None, Some(l)) => set_of_lambda(&l.0, a.k, a.n).map_err(|e| usage("--lambda", e)),
        _ => Err(usage("--set", "exactly one of --set and --lambda is required")),
    }
}

fn emit_class(out: &mut impl Write, fmt: Format, c: &CsmClass, schur: bool, cap: u32) -> Result<(), Failure> {
    if schur {
        emit_schur(out, fmt, &c.schur_expansion(cap)?)
    } else {
        emit_poly(out, fmt, c.poly(), c.k, if c.beta_zero { 0 } else { c.n })
    }
}

fn schur_json(s: &SchurSeries) -> Value {
    let mut terms: Vec<(&Partition, _)> = s.terms().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| b.0.parts().cmp(a.0.parts())));
    json!({
        "basis": "schur",
        "cap": s.cap(),
        "terms": terms
            .iter()
            .map(|(l, c)| json!({ "lambda": l.parts(), "coeff": c.to_string() }))
            .collect::<Vec<_>>(),
    })
}

fn emit_schur(out: &mut impl Write, fmt: Format, s: &SchurSeries) -> Result<(), Failure> {
    match fmt {
        Format::Text => writeln!(out, "{s}")?,
        Format::Json => writeln!(out, "{}", schur_json(s))?,
    }
    Ok(())
}

fn poly_json(p: &MultiPoly, k: usize, n: usize) -> Result<Value, Failure> {
    let vars: Vec<Var> = (1..=k).map(|u| Var::Alpha(u as u16)).chain((1..=n).map(|v| Var::Beta(v as u16))).collect();
    if let Some(v) = p.variables().into_iter().find(|v| !vars.contains(v)) {
        return Err(Failure::Verification(format!("unexpected variable {v} in output")));
    }
    let mut terms: Vec<(Vec<u32>, String)> =
        p.terms().map(|(m, c)| (m.dense(&vars), c.to_string())).collect();
    terms.sort_by(|a, b| {
        let (da, db): (u32, u32) = (a.0.iter().sum(), b.0.iter().sum());
        da.cmp(&db).then_with(|| b.0.cmp(&a.0))
    });
    Ok(json!({
        "vars": vars.iter().map(|v| v.name()).collect::<Vec<_>>(),
        "terms": terms.iter().map(|(e, c)| json!({ "exp": e, "coeff": c })).collect::<Vec<_>>(),
    }))
}

fn emit_poly(out: &mut impl Write, fmt: Format, p: &MultiPoly, k: usize, n: usize) -> Result<(), Failure> {
    match fmt {
        Format::Text => writeln!(out, "{p}")?,
        Format::Json => writeln!(out, "{}", poly_json(p, k, n)?)?,
    }
    Ok(())
}

fn verify_axioms(out: &mut impl Write, fmt: Format, k: usize, n: usize) -> Outcome {
    let classes = enumerate_orbits(k, n)?
        .into_iter()
        .map(|s| {
            let w = weight_function(&s)?;
            Ok((s, w))
        })
        .collect::<Result<_, Error>>()?;
    let report = verify_interpolation_axioms(&classes, k, n)?;
    let failures: Vec<_> = report.failures().collect();
    match fmt {
        Format::Text => {
            for f in &failures {
                writeln!(out, "[FAIL] axiom {} omega={} theta={}: {}", f.axiom, f.omega, f.theta, f.detail)?;
            }
            writeln!(
                out,
                "k={k} n={n}: {} conditions checked, {} failed",
                report.checks.len(),
                failures.len()
            )?;
        }
        Format::Json => {
            let v = json!({
                "k": k,
                "n": n,
                "checked": report.checks.len(),
                "passed": failures.is_empty(),
                "failures": failures
                    .iter()
                    .map(|f| json!({
                        "axiom": f.axiom.to_string(),
                        "omega": f.omega.to_string(),
                        "theta": f.theta.to_string(),
                        "detail": f.detail,
                    }))
                    .collect::<Vec<_>>(),
            });
            writeln!(out, "{v}")?;
        }
    }
    Ok(failures.is_empty())
}

fn scan(out: &mut impl Write, fmt: Format, from: u32, to: u32, cap: u32) -> Outcome {
    use rayon::prelude::*;
    if from > to {
        return Err(usage("--from-weight", format!("{from} exceeds --max-weight {to}")));
    }
    let mut clean = true;
    for w in from..=to {
        let mut lambdas = partitions_of(w);
        lambdas.sort();
        let scans = lambdas.par_iter().map(|l| scan_lambda(l, cap)).collect::<Result<Vec<_>, Error>>()?;
        for s in scans {
            clean &= s.violations.is_empty();
            match fmt {
                Format::Text => {
                    let tail = match s.violations.first() {
                        Some(v) => format!(" first=({} at Sc{})", v.coeff, v.mu.label()),
                        None => String::new(),
                    };
                    writeln!(
                        out,
                        "tssm_{} cap={cap} terms={} violations={}{tail}",
                        s.lambda.label(),
                        s.terms_checked,
                        s.violations.len()
                    )?;
                }
                Format::Json => {
                    let v = json!({
                        "lambda": s.lambda.parts(),
                        "cap": cap,
                        "terms": s.terms_checked,
                        "violations": s
                            .violations
                            .iter()
                            .map(|v| json!({ "mu": v.mu.parts(), "coeff": v.coeff.to_string() }))
                            .collect::<Vec<_>>(),
                    });
                    writeln!(out, "{v}")?;
                }
            }
            out.flush()?;
        }
    }
    Ok(clean)
}

fn cross_check(out: &mut impl Write, fmt: Format, suites: &[Suite], cap: Option<u32>) -> Outcome {
    let mut all = true;
    let mut reports = Vec::new();
    for &s in suites {
        let r = run_suite(s, cap)?;
        all &= r.passed();
        if fmt == Format::Text {
            for line in &r.lines {
                writeln!(out, "{}: {line}", r.suite)?;
            }
            let failed = r.failures().count();
            let cap_text = r.cap.map_or_else(|| "exact".to_string(), |c| format!("cap {c}"));
            writeln!(out, "suite {} ({cap_text}): {} checks, {failed} failed", r.suite, r.lines.len())?;
            out.flush()?;
        }
        reports.push(r);
    }
    if fmt == Format::Json {
        let v = json!({
            "passed": all,
            "suites": reports
                .iter()
                .map(|r| json!({
                    "name": r.suite.name(),
                    "cap": r.cap,
                    "passed": r.passed(),
                    "checks": r
                        .lines
                        .iter()
                        .map(|l| json!({ "label": l.label, "passed": l.passed, "detail": l.detail }))
                        .collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>(),
        });
        writeln!(out, "{v}")?;
    }
    Ok(all)
}
