//! Command-line front end for the universal-symbol laboratory.
//!
//! Exit codes: 0 = accept / verification succeeded, 1 = usage or I/O error,
//! 2 = reject, 3 = inconclusive.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use usym::harness::{
    calculus_consistency, default_suite, quadratic_threshold, report_csv, report_emit,
    report_jsonl, run_universality, witness_scan, OverallVerdict, RunConfig, SuiteEntry,
};
use usym::pd_engine::GramCertificate;
use usym::symbols::parse_symbol;
use usym::{Scalar, Symbol};

#[derive(Parser)]
#[command(name = "usym", about = "Universality laboratory for symbols of Hermitian elements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run all three evidence tracks on a symbol expression.
    Check {
        /// Symbol expression, e.g. "x^2+1" or "-1*x^2+2i*x+1.99".
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Comma-separated window half-widths, e.g. 2,4,8,16.
        #[arg(long)]
        window_schedule: Option<String>,
        /// Comma-separated grid step counts, one per window.
        #[arg(long)]
        grid_schedule: Option<String>,
        /// Equality-track tolerance.
        #[arg(long)]
        tol: Option<Scalar>,
        /// "default" or a path to a JSON suite file.
        #[arg(long)]
        suite: Option<String>,
        /// Seed for the randomized suite elements.
        #[arg(long)]
        seed: Option<u64>,
        /// JSONL report path (a .csv summary is written alongside).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stop after the first rejecting track.
        #[arg(long)]
        fail_fast: bool,
        /// Flat key=value file mirroring the flags; explicit flags win.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Print the sharp constant for the family -x^2 + 2ix + t.
    Threshold,
    /// Compare the two functional-calculus routes for the linear symbol.
    Calculus {
        #[arg(long, default_value_t = 6)]
        dim: usize,
        #[arg(long = "L", default_value_t = 2.0)]
        l: Scalar,
        #[arg(long = "K", default_value_t = 999)]
        k: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Scan F(s * D_N) for a positive norm/spectral-radius margin.
    Witness {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long = "N", default_value_t = 64)]
        n: usize,
        /// start:end:step, e.g. 0.1:3.0:0.05.
        #[arg(long, default_value = "0.1:3.0:0.05")]
        scales: String,
    },
    /// Replay a stored rejection certificate against a symbol.
    VerifyCert {
        cert: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn parse_expr(text: &str) -> Result<Symbol, String> {
    parse_symbol(text).map_err(|e| format!("cannot parse symbol {text:?}: {e}"))
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    text.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|e| format!("bad {what} entry {s:?}: {e}")))
        .collect()
}

fn parse_scales(text: &str) -> Result<Vec<Scalar>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("scales must be start:end:step, got {text:?}"));
    }
    let nums: Vec<Scalar> = parts
        .iter()
        .map(|s| s.parse::<Scalar>().map_err(|e| format!("bad scale {s:?}: {e}")))
        .collect::<Result<_, String>>()?;
    let (start, end, step) = (nums[0], nums[1], nums[2]);
    if step <= 0.0 || end < start {
        return Err("scales need step > 0 and end >= start".into());
    }
    let mut out = Vec::new();
    let mut k = 0u32;
    loop {
        let s = start + step * k as Scalar;
        if s > end + step * 1e-9 {
            break;
        }
        out.push(s);
        k += 1;
    }
    Ok(out)
}

fn read_config_file(path: &Path) -> Result<HashMap<String, String>, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or(format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn load_suite(spec: &str, seed: u64) -> Result<Vec<SuiteEntry<Scalar>>, String> {
    if spec == "default" {
        return Ok(default_suite(seed));
    }
    let text =
        std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("{spec}: {e}"))
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    expr: &str,
    window_schedule: Option<String>,
    grid_schedule: Option<String>,
    tol: Option<Scalar>,
    suite: Option<String>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    fail_fast: bool,
    config_path: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let file = match config_path {
        Some(p) => read_config_file(&p)?,
        None => HashMap::new(),
    };
    let pick = |flag: Option<String>, key: &str| flag.or_else(|| file.get(key).cloned());

    let windows = pick(window_schedule, "window-schedule");
    let grids = pick(grid_schedule, "grid-schedule");
    let mut config = RunConfig::<Scalar>::default();
    match (windows, grids) {
        (Some(w), Some(g)) => {
            let w: Vec<Scalar> = parse_list(&w, "window")?;
            let g: Vec<usize> = parse_list(&g, "grid")?;
            if w.len() != g.len() {
                return Err("window and grid schedules must have equal length".into());
            }
            config.schedule = w.into_iter().zip(g).collect();
        }
        (None, None) => {}
        _ => return Err("--window-schedule and --grid-schedule must be given together".into()),
    }
    if let Some(t) = tol.or_else(|| file.get("tol").and_then(|v| v.parse().ok())) {
        config.eq_tol = t;
    }
    if let Some(s) = seed.or_else(|| file.get("seed").and_then(|v| v.parse().ok())) {
        config.seed = s;
    }
    config.fail_fast =
        fail_fast || file.get("fail-fast").map(|v| v == "true" || v == "1").unwrap_or(false);

    let suite_spec = pick(suite, "suite").unwrap_or_else(|| "default".into());
    let suite = load_suite(&suite_spec, config.seed)?;
    let f = parse_expr(expr)?;

    let report = run_universality(&f, &suite, &config);
    let lines = report_jsonl(&report);
    for line in &lines {
        println!("{line}");
    }
    let out = out.or_else(|| file.get("out").map(PathBuf::from));
    if let Some(path) = out {
        let csv = report_csv(&report);
        let csv_path = path.with_extension("csv");
        report_emit(&lines, Some(&path), Some((&csv, &csv_path)))?;
        eprintln!("wrote {} and {}", path.display(), csv_path.display());
    }
    match &report.overall {
        OverallVerdict::Reject { track, reason, .. } => {
            eprintln!("reject ({track}): {reason}");
        }
        OverallVerdict::Inconclusive { reason } => eprintln!("inconclusive: {reason}"),
        OverallVerdict::AcceptUpTo { w_max, n_max } => {
            eprintln!("accept up to window {w_max}, resolution {n_max}");
        }
    }
    Ok(ExitCode::from(report.overall.exit_code() as u8))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            expr,
            window_schedule,
            grid_schedule,
            tol,
            suite,
            seed,
            out,
            fail_fast,
            config,
        } => match run_check(
            &expr,
            window_schedule,
            grid_schedule,
            tol,
            suite,
            seed,
            out,
            fail_fast,
            config,
        ) {
            Ok(code) => code,
            Err(msg) => fail(&msg),
        },
        Command::Threshold => {
            let r = quadratic_threshold::<Scalar>();
            println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
            ExitCode::SUCCESS
        }
        Command::Calculus { dim, l, k, seed, count } => {
            match calculus_consistency::<Scalar>(dim, l, k, seed, count) {
                Ok(report) => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
                    if report.all_passed {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(2)
                    }
                }
                Err(msg) => fail(&msg),
            }
        }
        Command::Witness { expr, n, scales } => {
            let f = match parse_expr(&expr) {
                Ok(f) => f,
                Err(msg) => return fail(&msg),
            };
            if n < 4 {
                return fail("--N must be at least 4");
            }
            let scales = match parse_scales(&scales) {
                Ok(s) => s,
                Err(msg) => return fail(&msg),
            };
            let scan = witness_scan(&f, n, &scales);
            println!("{}", serde_json::to_string_pretty(&scan).expect("serializable"));
            if scan.best_margin > usym::tol::eq_tol::<Scalar>() {
                eprintln!(
                    "positive margin {} at scale {}: norm exceeds spectral radius",
                    scan.best_margin, scan.best_scale
                );
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::VerifyCert { cert, expr } => {
            let f = match parse_expr(&expr) {
                Ok(f) => f,
                Err(msg) => return fail(&msg),
            };
            let text = match std::fs::read_to_string(&cert) {
                Ok(t) => t,
                Err(e) => return fail(&format!("{}: {e}", cert.display())),
            };
            let certificate: GramCertificate<Scalar> = match serde_json::from_str(&text) {
                Ok(c) => c,
                Err(e) => return fail(&format!("{}: {e}", cert.display())),
            };
            let replayed = certificate.replay(&f);
            let stored = certificate.form_value;
            let rel = (replayed - stored).abs() / stored.abs().max(1e-300);
            println!(
                "{}",
                serde_json::json!({
                    "stored_form": stored,
                    "replayed_form": replayed,
                    "relative_deviation": rel,
                    "negative": replayed < 0.0,
                })
            );
            if replayed < 0.0 && rel <= 1e-10 {
                eprintln!("certificate verified: quadratic form is negative under fresh evaluation");
                ExitCode::SUCCESS
            } else {
                eprintln!("certificate did NOT verify against this symbol");
                ExitCode::from(2)
            }
        }
    }
}
