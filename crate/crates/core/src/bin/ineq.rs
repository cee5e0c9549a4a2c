//! Command-line front end: catalog inspection, verification runs, gap
//! tables, monotonicity checks and the mutation suite.
//!
//! Exit codes: 0 when every requested check passed, 1 when at least one
//! outcome was Refuted/Inconclusive (for `mutate`: when some mutant was
//! *not* refuted), 2 for usage errors and unknown ids.

use clap::{Parser, Subcommand};
use ineq_core::catalog;
use ineq_core::error::Error;
use ineq_core::functions;
use ineq_core::prover::{self, Certificate, ProofOutcome, ProverConfig, VerifyRun};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ineq", version, about = "Certified bounds for the catalog of trigonometric and hyperbolic inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump the inequality catalog.
    List {
        /// Emit JSON instead of the tab-separated text listing.
        #[arg(long)]
        json: bool,
    },
    /// Run the prover and print (and optionally persist) certificates.
    Verify {
        /// Verify a single record.
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        /// Verify the whole catalog.
        #[arg(long)]
        all: bool,
        /// Absolute endpoint shrink.
        #[arg(long, default_value_t = 1e-2)]
        delta: f64,
        /// Series order.
        #[arg(long, default_value_t = 24)]
        order: u32,
        /// Bisection depth budget.
        #[arg(long, default_value_t = 40)]
        max_depth: u32,
        /// Write certificates (JSON) to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Oracle gap table over a uniform grid.
    Gaps {
        #[arg(long)]
        id: String,
        #[arg(long)]
        points: usize,
        /// Write the table as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Grid-based monotonicity report for one family.
    Mono {
        #[arg(long)]
        family: String,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        #[arg(long)]
        steps: usize,
    },
    /// Verify that reversed inequalities are refuted.
    Mutate {
        /// Reverse every catalog record instead of the built-in five.
        #[arg(long)]
        all: bool,
    },
    /// Print the exact n-th Bernoulli number.
    Bernoulli {
        #[arg(long)]
        n: u32,
    },
}

/// The canonical mutants: one per structural family of the catalog.
const CANONICAL_MUTANTS: [&str; 5] = [
    "rem_sandwich_hi",
    "thm21_lo",
    "lem33_i",
    "thm36_hi",
    "scale_sin",
];

fn configure_threads() {
    if let Ok(v) = std::env::var("INEQ_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("run with --help for usage");
    ExitCode::from(2)
}

fn print_run(run: &VerifyRun, cfg: &ProverConfig) {
    let min_gap = match &run.outcome {
        ProofOutcome::Proven {
            min_gap_lower_bound,
            ..
        } if cfg.min_gap_report => format!("{min_gap_lower_bound:.6e}"),
        _ => "-".into(),
    };
    println!(
        "{}\t{}\t{}\t{}",
        run.id,
        run.outcome.label(),
        min_gap,
        run.elapsed_ms
    );
}

fn cmd_list(json: bool) -> ExitCode {
    if json {
        #[derive(serde::Serialize)]
        struct Entry {
            id: &'static str,
            relation: &'static str,
            lhs: String,
            rhs: String,
            domain: BTreeMap<&'static str, [String; 2]>,
            citation: &'static str,
        }
        let entries: Vec<Entry> = catalog::entries()
            .iter()
            .map(|r| Entry {
                id: r.id,
                relation: r.relation.symbol(),
                lhs: r.lhs.to_sexpr(),
                rhs: r.rhs.to_sexpr(),
                domain: r
                    .domains
                    .iter()
                    .map(|d| (d.var.name(), [d.lo.to_sexpr(), d.hi.to_sexpr()]))
                    .collect(),
                citation: r.citation,
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&entries).expect("serializable"));
    } else {
        for r in catalog::entries() {
            let domain: Vec<String> = r
                .domains
                .iter()
                .map(|d| format!("{} in ({}, {})", d.var, d.lo.to_sexpr(), d.hi.to_sexpr()))
                .collect();
            println!(
                "{}\t{}\t{}\t{}",
                r.id,
                r.relation.symbol(),
                domain.join(", "),
                r.citation
            );
        }
        for f in catalog::families() {
            println!(
                "{}\t{:?}\t t in ({}, inf), {} in ({}, {})\t{}",
                f.id,
                f.direction,
                f.t_lo,
                f.x_domain.var,
                f.x_domain.lo.to_sexpr(),
                f.x_domain.hi.to_sexpr(),
                f.citation
            );
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    id: Option<String>,
    all: bool,
    cfg: ProverConfig,
    json: Option<PathBuf>,
) -> ExitCode {
    let runs: Vec<VerifyRun> = if all {
        prover::verify_all(&cfg)
    } else if let Some(id) = id {
        match prover::verify(&id, &cfg) {
            Ok(run) => vec![run],
            Err(Error::UnknownId(id)) => return usage_error(&format!("unknown id '{id}'")),
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        return usage_error("verify needs --id ID or --all");
    };

    for run in &runs {
        print_run(run, &cfg);
    }
    if let Some(path) = json {
        let certs: Vec<Certificate> = runs.iter().map(|r| Certificate::from_run(r, &cfg)).collect();
        let payload = if all {
            serde_json::to_string_pretty(&certs)
        } else {
            serde_json::to_string_pretty(&certs[0])
        }
        .expect("serializable");
        if let Err(e) = std::fs::write(&path, payload) {
            return usage_error(&format!("cannot write {}: {e}", path.display()));
        }
    }
    if runs.iter().all(|r| r.outcome.is_proven()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_gaps(id: &str, points: usize, csv: Option<PathBuf>) -> ExitCode {
    let cfg = ProverConfig::default();
    match prover::gap_table(id, points, &cfg) {
        Ok(report) => {
            println!(
                "{}\tpoints={}\tmin={:.6e}\tmax={:.6e}\tmean={:.6e}",
                report.id,
                report.points.len(),
                report.min_gap,
                report.max_gap,
                report.mean_gap
            );
            if let Some(path) = csv {
                if let Err(e) = std::fs::write(&path, report.to_csv()) {
                    return usage_error(&format!("cannot write {}: {e}", path.display()));
                }
            } else {
                print!("{}", report.to_csv());
            }
            ExitCode::SUCCESS
        }
        Err(Error::UnknownId(id)) => usage_error(&format!("unknown id '{id}'")),
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_mono(family: &str, x: f64, t_min: f64, t_max: f64, steps: usize) -> ExitCode {
    let fam = match catalog::lookup_family(family) {
        Ok(f) => f,
        Err(_) => return usage_error(&format!("unknown family '{family}'")),
    };
    if steps < 1 || t_max <= t_min {
        return usage_error("need steps >= 1 and t-max > t-min");
    }
    let grid: Vec<f64> = (0..steps)
        .map(|i| {
            if steps == 1 {
                t_min
            } else {
                t_min + (t_max - t_min) * i as f64 / (steps - 1) as f64
            }
        })
        .collect();
    match prover::monotone_check(fam, x, &grid) {
        Ok(rep) => {
            println!(
                "{}\tx={}\t{:?}\t{}",
                rep.family,
                rep.x,
                rep.direction,
                if rep.monotone { "monotone" } else { "VIOLATED" }
            );
            for (t, v) in rep.t_grid.iter().zip(&rep.values) {
                println!("{t:.6}\t{v:.12}");
            }
            if rep.monotone {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_mutate(all: bool) -> ExitCode {
    let cfg = ProverConfig::default();
    let ids: Vec<&str> = if all {
        catalog::entries().iter().map(|r| r.id).collect()
    } else {
        CANONICAL_MUTANTS.to_vec()
    };
    let mut ok = true;
    for id in ids {
        match prover::verify_reversed(id, &cfg) {
            Ok(run) => {
                let refuted = run.outcome.is_refuted();
                ok &= refuted;
                let margin = match &run.outcome {
                    ProofOutcome::Refuted { oracle_margin, .. } => format!("{oracle_margin:.6e}"),
                    _ => "-".into(),
                };
                println!("{}\t{}\t{}\t{}", run.id, run.outcome.label(), margin, run.elapsed_ms);
            }
            Err(e) => return usage_error(&e.to_string()),
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_bernoulli(n: u32) -> ExitCode {
    match functions::bernoulli(n) {
        Ok(b) => {
            println!("{b}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn main() -> ExitCode {
    // behave like a normal line-oriented tool under `head`-style pipelines
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    configure_threads();
    let cli = Cli::parse();
    match cli.command {
        Command::List { json } => cmd_list(json),
        Command::Verify {
            id,
            all,
            delta,
            order,
            max_depth,
            json,
        } => cmd_verify(
            id,
            all,
            ProverConfig {
                delta,
                order,
                max_depth,
                min_gap_report: true,
            },
            json,
        ),
        Command::Gaps { id, points, csv } => cmd_gaps(&id, points, csv),
        Command::Mono {
            family,
            x,
            t_min,
            t_max,
            steps,
        } => cmd_mono(&family, x, t_min, t_max, steps),
        Command::Mutate { all } => cmd_mutate(all),
        Command::Bernoulli { n } => cmd_bernoulli(n),
    }
}
