//! Command-line front end. Reports go to stdout as NDJSON, diagnostics to
//! stderr. Exit codes: 0 all checks pass, 1 some check failed, 2 usage or
//! input error. `BEPOLY_THREADS` sets the worker count.

use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bepoly::integrals::{self, ProductIntegral};
use bepoly::laplace::{self, LaplaceCase};
use bepoly::rat::{self, Rat};
use bepoly::reciprocity::{self, ReciprocityCase};
use bepoly::special::{self, Family};
use bepoly::suites::{self, SuiteConfig};
use bepoly::sums::{self, SumParams};
use bepoly::{Error, VerificationReport};

const THREADS_VAR: &str = "BEPOLY_THREADS";

#[derive(Parser)]
#[command(name = "bepoly", version, about = "Exact higher-order Bernoulli and Euler polynomials and identity checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print F_m^(alpha)(x) in descending powers, or its value at a point.
    Poly {
        family: Family,
        m: usize,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        /// Evaluate at this rational point instead.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Print coefficients as a JSON array of rational strings, constant term first.
        #[arg(long)]
        json: bool,
    },
    /// Print B_m or the Euler number E_m; with --order, F_m^(alpha)(0).
    Number {
        family: Family,
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        order: Option<String>,
    },
    /// Evaluate a product integral given as JSON (inline, a file path, or "-" / omitted for stdin).
    Integral(IntegralArgs),
    /// Run a verification suite by id, or "all"; `list` prints the ids.
    #[command(visible_alias = "identity")]
    Verify(VerifyArgs),
    /// Generalized Dedekind sum T_r(c,d) and its reciprocity check.
    Dedekind(SumArgs),
    /// Hardy-Berndt sums s_{3,r}, s_{4,r} and their reciprocity check.
    Hardy(SumArgs),
    /// Reciprocity checks for one parameter tuple.
    Reciprocity(RecipArgs),
    /// Laplace transform of the periodic Euler function, numeric vs closed.
    Laplace(LaplaceArgs),
}

#[derive(Args)]
struct IntegralArgs {
    spec: Option<String>,
    /// Closed form (default): Euler-only or Bernoulli factors followed by Euler factors.
    #[arg(long, conflicts_with_all = ["oracle", "mu"])]
    closed: bool,
    /// Direct expansion and exact antiderivative.
    #[arg(long, conflicts_with = "mu")]
    oracle: bool,
    /// Truncated by-parts sum of order k plus its remainder.
    #[arg(long)]
    mu: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = suites::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct SumArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, allow_hyphen_values = true)]
    c: i64,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
}

#[derive(Args)]
struct RecipArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    beta: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    gamma: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    b1: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    b2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    y1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    y2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    x: String,
}

#[derive(Args)]
struct LaplaceArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    s: f64,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Derivative order in s.
    #[arg(long, default_value_t = 0)]
    m: usize,
}

/// Failure that maps to exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

enum Outcome {
    Text(String),
    Reports { reports: Vec<VerificationReport>, summary: bool },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(Usage(msg)) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(cli.cmd) {
        Ok(Outcome::Text(t)) => {
            println!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Reports { reports, summary }) => emit(&reports, summary),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), Usage> {
    let Ok(v) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| Usage(format!("{THREADS_VAR}={v:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Usage(e.to_string()))
}

fn emit(reports: &[VerificationReport], summary: bool) -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for r in reports {
        if writeln!(out, "{}", r.to_json_line()).is_err() {
            break;
        }
    }
    let _ = out.flush();
    let failures = reports.iter().filter(|r| !r.pass).count();
    if summary {
        eprintln!("{} checks, {} failures", reports.len(), failures);
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn q(text: &str) -> Result<Rat, Usage> {
    Ok(rat::parse(text)?)
}

fn reports(reports: Vec<VerificationReport>) -> Outcome {
    Outcome::Reports { reports, summary: false }
}

fn run(cmd: Cmd) -> Result<Outcome, Usage> {
    match cmd {
        Cmd::Poly { family, m, alpha, at, json } => {
            let alpha = q(&alpha)?;
            if let Some(x) = at {
                return Ok(Outcome::Text(rat::format(&special::value(family, m, &alpha, &q(&x)?))));
            }
            let p = special::poly(family, m, &alpha);
            Ok(Outcome::Text(if json { p.to_json() } else { p.to_string() }))
        }
        Cmd::Number { family, m, order } => {
            let v = match (order, family) {
                (Some(a), f) => special::norlund_number(f, m, &q(&a)?),
                (None, Family::Bernoulli) => special::bernoulli_number(m),
                (None, Family::Euler) => special::euler_number(m),
            };
            Ok(Outcome::Text(rat::format(&v)))
        }
        Cmd::Integral(a) => integral(a),
        Cmd::Verify(a) => verify(a),
        Cmd::Dedekind(a) => {
            let p = SumParams::new(a.r, a.c, a.d);
            let t = sums::dedekind_t(p)?;
            let mut rep = sums::check_dedekind_reciprocity(p)?;
            rep.params.insert("t".into(), rat::format(&t));
            Ok(reports(vec![rep]))
        }
        Cmd::Hardy(a) => {
            let p = SumParams::new(a.r, a.c, a.d);
            let (s3, s4) = (sums::hardy_s3(p)?, sums::hardy_s4(p)?);
            let mut rep = sums::check_hardy_reciprocity(p)?;
            rep.params.insert("s3".into(), rat::format(&s3));
            rep.params.insert("s4".into(), rat::format(&s4));
            Ok(reports(vec![rep]))
        }
        Cmd::Reciprocity(a) => {
            let case = ReciprocityCase {
                m: a.m,
                n: a.n,
                beta: q(&a.beta)?,
                gamma: q(&a.gamma)?,
                b1: q(&a.b1)?,
                b2: q(&a.b2)?,
                y1: q(&a.y1)?,
                y2: q(&a.y2)?,
                x: q(&a.x)?,
            };
            Ok(reports(vec![
                reciprocity::check_eq45(&case)?,
                reciprocity::check_shift_invariance(&case)?,
                reciprocity::check_t1(&case)?,
            ]))
        }
        Cmd::Laplace(a) => {
            let case = LaplaceCase::new(a.n, a.s, a.t, a.tol);
            Ok(reports(vec![laplace::laplace_moment_check(a.m, &case)?]))
        }
    }
}

fn read_spec(spec: Option<String>) -> Result<String, Usage> {
    match spec.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Usage(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(s) if s.trim_start().starts_with('{') => Ok(s.to_string()),
        Some(path) => std::fs::read_to_string(path).map_err(|e| Usage(format!("reading {path}: {e}"))),
    }
}

fn integral(a: IntegralArgs) -> Result<Outcome, Usage> {
    let text = read_spec(a.spec)?;
    let pi: ProductIntegral = serde_json::from_str(&text).map_err(|e| Usage(format!("invalid integral spec: {e}")))?;
    let v = if a.oracle {
        integrals::product_integral_oracle(&pi)
    } else if let Some(mu) = a.mu {
        if mu > pi.max_mu() {
            return Err(Usage(format!("--mu {mu} exceeds the maximum {}", pi.max_mu())));
        }
        integrals::euler_product_integral(&pi, mu)?
    } else if pi.factors.iter().all(|f| f.family == Family::Euler) {
        integrals::euler_product_integral_closed(&pi)?
    } else {
        integrals::mixed_product_integral_closed(&pi)?
    };
    Ok(Outcome::Text(rat::format(&v)))
}

fn verify(a: VerifyArgs) -> Result<Outcome, Usage> {
    if a.suite == "list" {
        let lines: Vec<String> = suites::SUITES.iter().map(|(id, desc, _)| format!("{id}\t{desc}")).collect();
        return Ok(Outcome::Text(lines.join("\n")));
    }
    let cfg = SuiteConfig { seed: a.seed, m: a.m, n: a.n, r: a.r, c: a.c, d: a.d };
    let reports = if a.suite == "all" { suites::run_all(&cfg)? } else { suites::run(&a.suite, &cfg)? };
    Ok(Outcome::Reports { reports, summary: true })
}
