//! Command-line entry point: single-point slope queries, parameter-grid
//! tables in CSV or JSON, and the verification suites.
//!
//! Exit codes: 0 on success, 1 when a mandatory verification check fails,
//! 2 on usage or parameter errors.

mod families;
mod record;
mod verify;

use clap::{Parser, Subcommand};
use families::Family;
use rayon::prelude::*;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use verify::{GridSize, Status};

#[derive(Parser)]
#[command(name = "mgslope", version, about = "Exact divisor-class slopes on moduli of curves")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one divisor family at one parameter point.
    Slope {
        /// One of: koszul, khosla, gp, lin, mrc, nfold, syz, wahl.
        family: String,
        #[arg(long)]
        s: Option<i64>,
        #[arg(long)]
        i: Option<i64>,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        g: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        j: Option<i64>,
        #[arg(long)]
        t: Option<i64>,
    },
    /// Sweep a family over parameter ranges, one record per point.
    Table {
        family: String,
        /// Repeatable: `--range s=2..4`. Every required parameter of the
        /// family needs a range.
        #[arg(long = "range")]
        ranges: Vec<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for the sweep; output order is independent of it.
        #[arg(long)]
        jobs: Option<usize>,
        /// Suppress the leading version comment in CSV output.
        #[arg(long)]
        no_banner: bool,
    },
    /// Run a verification suite and report one line per check.
    Verify {
        /// One of: all, schubert, vandermonde, koszul, gp, lin, mrc,
        /// identities.
        suite: String,
        #[arg(long, default_value = "default")]
        grid: String,
        /// Also write the machine-readable summary to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Slope { family, s, i, r, g, n, j, t } => {
            let fam = match Family::parse(&family) {
                Some(f) => f,
                None => return usage_error(&format!("unknown family {family:?}")),
            };
            let mut params = Vec::new();
            for (name, v) in
                [("s", s), ("i", i), ("r", r), ("g", g), ("n", n), ("j", j), ("t", t)]
            {
                if let Some(v) = v {
                    params.push((name.to_string(), v));
                }
            }
            for required in fam.required_params() {
                if !params.iter().any(|(k, _)| k == required) {
                    return usage_error(&format!(
                        "family {} needs --{required}",
                        fam.name()
                    ));
                }
            }
            match families::evaluate(fam, &params) {
                Ok(Some(rec)) => {
                    let params_line = rec
                        .params
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join(" ");
                    println!("family {}  {}", fam.name(), params_line);
                    for v in &rec.values {
                        if v.status == "exact" {
                            println!("  {} = {} ({})", v.name, v.exact, v.float);
                        } else {
                            println!("  {} = [{}] {}", v.name, v.status, v.exact);
                        }
                    }
                    for (k, v) in &rec.flags {
                        println!("  {k} = {v}");
                    }
                    ExitCode::SUCCESS
                }
                Ok(None) => usage_error("parameters are outside the family's domain"),
                Err(msg) => usage_error(&msg),
            }
        }
        Cmd::Table { family, ranges, format, out, jobs, no_banner } => {
            let fam = match Family::parse(&family) {
                Some(f) => f,
                None => return usage_error(&format!("unknown family {family:?}")),
            };
            if format != "csv" && format != "json" {
                return usage_error(&format!("unknown format {format:?}"));
            }
            let mut parsed = Vec::new();
            for spec in &ranges {
                match parse_range(spec) {
                    Some(r) => parsed.push(r),
                    None => return usage_error(&format!("cannot parse range {spec:?}")),
                }
            }
            let mut grid_axes = Vec::new();
            for required in fam.required_params() {
                match parsed.iter().find(|(k, _, _)| k == required) {
                    Some((k, lo, hi)) => grid_axes.push((k.clone(), *lo, *hi)),
                    None => {
                        return usage_error(&format!(
                            "family {} needs --range {required}=a..b",
                            fam.name()
                        ))
                    }
                }
            }
            for (k, _, _) in &parsed {
                if !fam.required_params().contains(&k.as_str()) {
                    return usage_error(&format!(
                        "family {} takes no parameter {k:?}",
                        fam.name()
                    ));
                }
            }

            let mut points = vec![Vec::new()];
            for (key, lo, hi) in &grid_axes {
                let mut next = Vec::new();
                for p in &points {
                    for v in *lo..=*hi {
                        let mut p2 = p.clone();
                        p2.push((key.clone(), v));
                        next.push(p2);
                    }
                }
                points = next;
            }

            let run = || {
                points
                    .par_iter()
                    .map(|p| families::evaluate(fam, p).map(|r| (p.clone(), r)))
                    .collect::<Result<Vec<_>, String>>()
            };
            let evaluated = if let Some(k) = jobs {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build();
                match pool {
                    Ok(pool) => pool.install(run),
                    Err(e) => return usage_error(&format!("cannot build thread pool: {e}")),
                }
            } else {
                run()
            };
            let mut evaluated = match evaluated {
                Ok(v) => v,
                Err(msg) => return usage_error(&msg),
            };
            // lexicographic order in the grid parameters, independent of
            // the execution schedule
            evaluated.sort_by(|(a, _), (b, _)| {
                a.iter().map(|(_, v)| *v).collect::<Vec<_>>().cmp(
                    &b.iter().map(|(_, v)| *v).collect::<Vec<_>>(),
                )
            });
            let records: Vec<record::OutputRecord> =
                evaluated.into_iter().filter_map(|(_, r)| r).collect();

            let text = if format == "json" {
                record::to_json(fam.name(), &records) + "\n"
            } else {
                let mut s = String::new();
                if !no_banner {
                    s.push_str(&format!("# mgslope v{}\n", env!("CARGO_PKG_VERSION")));
                }
                s.push_str(&record::csv_header(fam.param_columns(), &records));
                s.push('\n');
                for rec in &records {
                    s.push_str(&record::csv_row(fam.param_columns(), rec));
                    s.push('\n');
                }
                s
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        return usage_error(&format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => {
                    print!("{text}");
                }
            }
            ExitCode::SUCCESS
        }
        Cmd::Verify { suite, grid, json } => {
            let grid_size = match GridSize::parse(&grid) {
                Some(g) => g,
                None => return usage_error(&format!("unknown grid {grid:?}")),
            };
            let checks = match verify::run_suite(&suite, grid_size) {
                Some(c) => c,
                None => return usage_error(&format!("unknown suite {suite:?}")),
            };
            let mut passed = 0;
            let mut failed = 0;
            let mut informational = 0;
            for c in &checks {
                let tag = match c.status {
                    Status::Pass => {
                        passed += 1;
                        "PASS"
                    }
                    Status::Fail => {
                        failed += 1;
                        "FAIL"
                    }
                    Status::Info => {
                        informational += 1;
                        "INFO"
                    }
                };
                if c.detail.is_empty() {
                    println!("[{tag}] {}", c.name);
                } else {
                    println!("[{tag}] {}: {}", c.name, c.detail);
                }
            }
            println!(
                "{suite}: {passed} passed, {failed} failed, {informational} informational"
            );
            if let Some(path) = json {
                let summary = verify::Summary {
                    version: env!("CARGO_PKG_VERSION"),
                    suite: &suite,
                    grid: grid.clone(),
                    passed,
                    failed,
                    informational,
                    checks: &checks,
                };
                let text = serde_json::to_string_pretty(&summary).expect("serialisable");
                if let Err(e) = std::fs::write(&path, text) {
                    return usage_error(&format!("cannot write {}: {e}", path.display()));
                }
            }
            let _ = std::io::stdout().flush();
            if failed > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

/// Parses `key=a..b`; a single value `key=v` means `v..v`.
fn parse_range(spec: &str) -> Option<(String, i64, i64)> {
    let (key, rest) = spec.split_once('=')?;
    if key.is_empty() {
        return None;
    }
    match rest.split_once("..") {
        Some((a, b)) => {
            let lo = a.trim().parse().ok()?;
            let hi = b.trim().parse().ok()?;
            Some((key.trim().to_string(), lo, hi))
        }
        None => {
            let v = rest.trim().parse().ok()?;
            Some((key.trim().to_string(), v, v))
        }
    }
}
