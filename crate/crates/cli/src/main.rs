//! `braidsieve`: enumerate Perron polynomials, lift strata, sieve and
//! reproduce the per-n tables.
//!
//! Exit status: 0 success, 1 internal failure, 2 usage or validation error.

mod config;

use braidsieve_core::enumerate::{brute_force_oracle, load_or_compute, EnumerationQuery};
use braidsieve_core::pipeline::{
    certify_minimum, render_csv, render_json, render_markdown, stratum_report, RunOptions,
};
use braidsieve_core::polynomial::{perron_root, render_decimal};
use braidsieve_core::strata::{lift_to_double_cover, parse_stratum, SphereStratum, Stratum};
use braidsieve_core::{Error, IntPolynomial, Result};
use clap::{Args, Parser, Subcommand};
use config::{Format, RunConfig, CACHE_ENV};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "braidsieve", version, about = "Lefschetz sieve for minimal braid dilatations")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// key = value file merged under explicit flags
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Enumeration cache directory (else $BRAIDSIEVE_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output format: text, md, csv or json
    #[arg(long, global = true)]
    format: Option<String>,
    /// Decimal places for Perron roots
    #[arg(long, global = true)]
    precision: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List reciprocal Perron polynomials of a degree below a bound
    Enumerate {
        #[arg(long)]
        degree: usize,
        #[arg(long, allow_hyphen_values = true)]
        bound: String,
        /// Use the coefficient-box scan instead of the pruned search
        #[arg(long)]
        oracle: bool,
    },
    /// Lift a sphere stratum to the orientation double cover
    Lift {
        #[arg(long, allow_hyphen_values = true)]
        stratum: String,
    },
    /// Sieve the polynomials below a bound against one stratum
    Sieve {
        #[arg(long, allow_hyphen_values = true)]
        stratum: String,
        #[arg(long, allow_hyphen_values = true)]
        bound: String,
        #[arg(long)]
        mode: Option<String>,
        /// Horizon M (iterates checked)
        #[arg(long)]
        iters: Option<usize>,
    },
    /// Tables and certificate for the n-punctured disc
    Reproduce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        iters: Option<usize>,
    },
}

fn build_config(g: &GlobalArgs, mode: Option<&str>, iters: Option<usize>) -> Result<RunConfig> {
    let mut c = RunConfig::default();
    if let Some(path) = &g.config {
        c.merge_file(path)?;
    }
    if let Some(d) = &g.cache_dir {
        c.cache_dir = Some(d.clone());
    }
    c.merge_env(std::env::var(CACHE_ENV).ok());
    if let Some(w) = g.workers {
        c.workers = Some(w);
    }
    if let Some(f) = &g.format {
        c.format = Some(f.parse()?);
    }
    if let Some(p) = g.precision {
        c.precision = p;
    }
    if let Some(m) = mode {
        c.mode = m.parse()?;
    }
    if let Some(m) = iters {
        c.horizon = Some(m);
    }
    if c.horizon == Some(0) {
        return Err(Error::Invalid("horizon must be at least 1".into()));
    }
    if c.workers == Some(0) {
        return Err(Error::Invalid("workers must be at least 1".into()));
    }
    Ok(c)
}

fn options(c: &RunConfig) -> RunOptions {
    RunOptions { horizon: c.horizon, cache_dir: c.cache_dir.clone() }
}

fn root_text(p: &IntPolynomial, precision: usize) -> Result<String> {
    Ok(match perron_root(p)? {
        Some(d) => render_decimal(p, &d, precision),
        None => "-".into(),
    })
}

fn to_json(v: &serde_json::Value) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Internal(e.to_string()))
}

fn to_csv(header: &[&str], records: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let err = |e: csv::Error| Error::Internal(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(err)?;
    for r in records {
        w.write_record(&r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn run_enumerate(c: &RunConfig, degree: usize, bound: &str, oracle: bool) -> Result<String> {
    let bound: IntPolynomial = bound.parse()?;
    let list = if oracle {
        brute_force_oracle(degree, &bound)?
    } else {
        load_or_compute(c.cache_dir.as_deref(), &EnumerationQuery::new(degree, bound.clone()))?
    };
    let mut rows = Vec::with_capacity(list.entries.len());
    for p in &list.entries {
        rows.push((p, root_text(p, c.precision)?));
    }
    Ok(match c.format.unwrap_or(Format::Text) {
        Format::Json => {
            to_json(&json!({
                "schema_version": 1,
                "degree": degree,
                "bound": bound.to_string(),
                "mode": if oracle { "brute-force-oracle" } else { "pruned" },
                "count": list.count,
                "entries": rows.iter().map(|(p, r)| json!({
                    "polynomial": p.to_string(),
                    "coefficients": p,
                    "perron_root": r,
                })).collect::<Vec<_>>(),
            }))? + "\n"
        }
        Format::Csv => {
            to_csv(&["polynomial", "perron_root"], rows.iter().map(|(p, r)| vec![p.to_string(), r.clone()]))?
        }
        Format::Text | Format::Md => rows.iter().map(|(p, r)| format!("{p} {r}\n")).collect(),
    })
}

fn run_lift(c: &RunConfig, text: &str) -> Result<String> {
    let s: SphereStratum = match parse_stratum(text)? {
        Stratum::Sphere(s) => s,
        Stratum::Surface(_) => return Err(Error::Invalid("lift expects a sphere stratum such as (-1;-1^3)".into())),
    };
    let lifted = lift_to_double_cover(&s);
    Ok(match c.format.unwrap_or(Format::Text) {
        Format::Json => {
            to_json(&json!({
                "stratum": s.to_string(),
                "lifted": lifted.to_string(),
                "genus": lifted.genus,
                "groups": lifted.groups,
            }))? + "\n"
        }
        Format::Csv => to_csv(
            &["stratum", "lifted", "genus"],
            [vec![s.to_string(), lifted.to_string(), lifted.genus.to_string()]],
        )?,
        Format::Text | Format::Md => format!("{lifted} genus={}\n", lifted.genus),
    })
}

fn run_sieve(c: &RunConfig, stratum: &str, bound: &str) -> Result<String> {
    let s = SphereStratum::parse(stratum)?;
    let bound: IntPolynomial = bound.parse()?;
    let report = stratum_report(&s, &bound, c.mode, &options(c))?;
    let row = &report.row;
    Ok(match c.format.unwrap_or(Format::Text) {
        Format::Json => serde_json::to_string_pretty(&report).map_err(|e| Error::Internal(e.to_string()))? + "\n",
        Format::Csv => render_csv(std::slice::from_ref(row))?,
        Format::Md => render_markdown(std::slice::from_ref(row), None),
        Format::Text => {
            let mut out = format!(
                "{} {} genus={} mode={} horizon={} polynomials={} compatible={}\n",
                row.stratum, row.lifted, row.genus, c.mode, row.horizon, row.polynomial_count, row.compatible_count
            );
            for v in &report.verdicts {
                let p: IntPolynomial = v.polynomial.parse()?;
                let status = match &v.verdict.obstruction {
                    None => "compatible".to_string(),
                    Some(o) => format!("incompatible at m={}: {}", o.iterate, o.detail),
                };
                out.push_str(&format!("{} {} {}\n", v.polynomial, root_text(&p, c.precision)?, status));
            }
            out
        }
    })
}

fn run_reproduce(c: &RunConfig, n: usize) -> Result<String> {
    let cert = certify_minimum(n, c.mode, &options(c))?;
    Ok(match c.format.unwrap_or(Format::Md) {
        Format::Json => render_json(&cert.rows, Some(&cert))? + "\n",
        Format::Csv => render_csv(&cert.rows)?,
        Format::Md | Format::Text => render_markdown(&cert.rows, Some(&cert)),
    })
}

fn run(cli: Cli) -> Result<String> {
    let (mode, iters) = match &cli.command {
        Command::Sieve { mode, iters, .. } | Command::Reproduce { mode, iters, .. } => (mode.as_deref(), *iters),
        _ => (None, None),
    };
    let c = build_config(&cli.global, mode, iters)?;
    let work = || match &cli.command {
        Command::Enumerate { degree, bound, oracle } => run_enumerate(&c, *degree, bound, *oracle),
        Command::Lift { stratum } => run_lift(&c, stratum),
        Command::Sieve { stratum, bound, .. } => run_sieve(&c, stratum, bound),
        Command::Reproduce { n, .. } => run_reproduce(&c, *n),
    };
    match c.workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Internal(format!("worker pool: {e}")))?
            .install(work),
        None => work(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 2 } else { 1 })
        }
    }
}
