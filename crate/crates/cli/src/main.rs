//! `horagf` — exact generating functions for k-th powers of Horadam
//! sequences.
//!
//! Subcommands: `gf` (the rational function), `series` (Taylor
//! coefficients, with an optional oracle cross-check), `eval` (exact value
//! at a rational point), `verify` (the full audit of the bundled reference
//! tables). Exit codes: 0 success / no FAIL, 1 usage or runtime error,
//! 2 verification failure.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use horadam_gf::exactnum::rat_parse;
use horadam_gf::gfengine::{horadam_gf, series_coeffs, GfResult};
use horadam_gf::horadam::{power_series_oracle, preset, HoradamParams, Scalar, PRESET_NAMES};
use horadam_gf::polyring::{RatPoly, Var};
use horadam_gf::verify::{run_all, run_group, Group, Status, VerifyReport, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "horagf", version, about = "Exact generating functions of k-th powers of Horadam sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print H_k(x) = det(delta_hat_k)/det(delta_k) as exact polynomials
    Gf(GfArgs),
    /// Print the first N series coefficients of H_k(x)
    Series(SeriesArgs),
    /// Evaluate H_k at a rational point x0
    Eval(EvalArgs),
    /// Audit the bundled reference tables and closed forms
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ParamArgs {
    /// Named parameter set: fibonacci, lucas, pell, chebyshev-u
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
    /// Seed w_0 as an exact rational (with --b, --p, --q)
    #[arg(long, value_name = "RAT", allow_hyphen_values = true)]
    a: Option<String>,
    /// Seed w_1
    #[arg(long, value_name = "RAT", allow_hyphen_values = true)]
    b: Option<String>,
    /// Recurrence coefficient of w_{n+1}
    #[arg(long, value_name = "RAT", allow_hyphen_values = true)]
    p: Option<String>,
    /// Recurrence coefficient of w_n
    #[arg(long, value_name = "RAT", allow_hyphen_values = true)]
    q: Option<String>,
    /// Keep a, b, p, q as symbols
    #[arg(long)]
    symbolic: bool,
}

impl ParamArgs {
    fn resolve(&self) -> Result<HoradamParams, String> {
        let explicit = [&self.a, &self.b, &self.p, &self.q];
        let any_explicit = explicit.iter().any(|v| v.is_some());
        let sources = usize::from(self.preset.is_some())
            + usize::from(any_explicit)
            + usize::from(self.symbolic);
        if sources != 1 {
            return Err(format!(
                "choose exactly one parameter source: --preset NAME (one of {}), \
                 --a/--b/--p/--q, or --symbolic",
                PRESET_NAMES.join(", ")
            ));
        }
        if let Some(name) = &self.preset {
            return preset(name).map_err(|e| e.to_string());
        }
        if self.symbolic {
            return Ok(HoradamParams::symbolic());
        }
        let parse_one = |field: &Option<String>, name: &str| -> Result<Scalar, String> {
            let text = field
                .as_ref()
                .ok_or_else(|| format!("explicit parameters need all of --a/--b/--p/--q (missing --{name})"))?;
            rat_parse(text)
                .map(Scalar::Rational)
                .map_err(|e| format!("--{name}: {e}"))
        };
        Ok(HoradamParams {
            a: parse_one(&self.a, "a")?,
            b: parse_one(&self.b, "b")?,
            p: parse_one(&self.p, "p")?,
            q: parse_one(&self.q, "q")?,
        })
    }
}

#[derive(Args)]
struct GfArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Power of the sequence terms
    #[arg(long, short)]
    k: u32,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, short)]
    k: u32,
    /// Number of coefficients
    #[arg(long, short, default_value_t = 64)]
    n: usize,
    /// Also compute the brute-force oracle column and compare
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, short)]
    k: u32,
    /// Evaluation point, an exact rational such as 1/100
    #[arg(long, value_name = "RAT", allow_hyphen_values = true)]
    x: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single group: series, points, printed, corollary, linear-system
    #[arg(long, value_name = "GROUP")]
    only: Option<String>,
    /// Seed for the reproducible random confirmations
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gf(args) => cmd_gf(args),
        Command::Series(args) => cmd_series(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn compute_gf(params: &ParamArgs, k: u32) -> Result<GfResult, String> {
    let params = params.resolve()?;
    horadam_gf(k, &params).map_err(|e| e.to_string())
}

fn cmd_gf(args: GfArgs) -> Result<ExitCode, String> {
    let gf = compute_gf(&args.params, args.k)?;
    if args.json {
        println!("{}", gf.to_json());
    } else {
        println!("numerator: {}", gf.numerator);
        println!("denominator: {}", gf.denominator);
        println!("reduced: {}", gf.reduced);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_series(args: SeriesArgs) -> Result<ExitCode, String> {
    if args.n < 1 {
        return Err("--n must be at least 1".to_string());
    }
    let params = args.params.resolve()?;
    let gf = horadam_gf(args.k, &params).map_err(|e| e.to_string())?;
    let coeffs = series_coeffs(&gf.reduced, args.n).map_err(|e| e.to_string())?;
    let oracle = args
        .oracle
        .then(|| power_series_oracle(&params, args.k, args.n));
    let matches = oracle.as_ref().map(|o| o == &coeffs);

    if args.json {
        let mut out = serde_json::json!({
            "k": args.k,
            "params": params.to_json(),
            "n": args.n,
            "coeffs": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        });
        if let (Some(oracle), Some(matches)) = (&oracle, matches) {
            out["oracle"] = oracle.iter().map(|c| c.to_string()).collect::<Vec<_>>().into();
            out["match"] = matches.into();
        }
        println!("{out}");
    } else {
        // Text mode prints constants and polynomials in t; anything still
        // containing a/b/p/q has no flat text rendering here.
        let symbolic_beyond_t = coeffs
            .iter()
            .flat_map(|c| c.poly().vars_used())
            .any(|v| v != Var::T);
        if symbolic_beyond_t {
            return Err(
                "series coefficients involve the symbols a/b/p/q; use --json for symbolic output"
                    .to_string(),
            );
        }
        let line = |cs: &[RatPoly]| {
            cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
        };
        match &oracle {
            None => {
                if coeffs.iter().all(|c| c.poly().vars_used().is_empty()) {
                    println!("{}", line(&coeffs));
                } else {
                    for (i, c) in coeffs.iter().enumerate() {
                        println!("x^{i}: {c}");
                    }
                }
            }
            Some(o) => {
                let numeric = coeffs
                    .iter()
                    .chain(o.iter())
                    .all(|c| c.poly().vars_used().is_empty());
                if numeric {
                    println!("engine: {}", line(&coeffs));
                    println!("oracle: {}", line(o));
                } else {
                    for (i, (c, oc)) in coeffs.iter().zip(o).enumerate() {
                        println!("x^{i}: {c} | {oc}");
                    }
                }
                println!("match: {}", matches.unwrap());
            }
        }
    }
    Ok(match matches {
        Some(false) => ExitCode::from(2),
        _ => ExitCode::SUCCESS,
    })
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode, String> {
    let x0 = rat_parse(&args.x).map_err(|e| e.to_string())?;
    let gf = compute_gf(&args.params, args.k)?;
    let value = gf.reduced.eval_at(&x0).map_err(|e| e.to_string())?;
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "k": args.k,
                "params": gf.params.to_json(),
                "x": x0.to_string(),
                "value": value.to_string(),
            })
        );
    } else {
        println!("{value}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let reports: Vec<VerifyReport> = match &args.only {
        Some(name) => {
            let group = Group::from_name(name).ok_or_else(|| {
                format!(
                    "unknown group `{name}` (expected one of {})",
                    Group::ALL.map(Group::name).join(", ")
                )
            })?;
            run_group(group, args.seed)
        }
        None => run_all(args.seed),
    };
    let count = |status: Status| reports.iter().filter(|r| r.status == status).count();
    let (passes, errata, fails) = (count(Status::Pass), count(Status::Erratum), count(Status::Fail));
    if args.json {
        println!("{}", serde_json::to_string(&reports).map_err(|e| e.to_string())?);
    } else {
        for report in &reports {
            println!("{report}");
        }
        println!("summary: {passes} pass, {errata} erratum, {fails} fail");
    }
    Ok(if fails > 0 { ExitCode::from(2) } else { ExitCode::SUCCESS })
}
