//! Command-line front end: code generation, search, certificate
//! verification, parameter sweeps and bound tables.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, BoundReport, BOUND_REPORT_CSV_HEADER};
use crate::certificate::{self, Certificate};
use crate::code::{sample_code, CodeParams, RowPolicy};
use crate::encoder::code_dimension;
use crate::search::{search_min_weight_parallel, SearchConfig};
use crate::{alist, Result};

/// Exit code used when a search exhausts its budget without a collision.
pub const EXIT_NO_RESULT: i32 = 2;

#[derive(Parser)]
#[command(name = "ldpc-forge", about = "Structured LDPC codes: generation, encoding and certified low-weight codeword search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RowPolicyArg {
    Any,
    NearRegular,
}

impl From<RowPolicyArg> for RowPolicy {
    fn from(p: RowPolicyArg) -> RowPolicy {
        match p {
            RowPolicyArg::Any => RowPolicy::AnyNonZero,
            RowPolicyArg::NearRegular => RowPolicy::NearRegular,
        }
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Sample a structured code and write it as an alist file.
    Gen(GenArgs),
    /// Search a code for a certified low-weight codeword.
    Search(SearchArgs),
    /// Re-verify a certificate against an alist file.
    Verify(VerifyArgs),
    /// Sweep a geometric blocklength grid and emit a CSV of found weights.
    Sweep(SweepArgs),
    /// Emit bound reports for a grid of parity-check counts.
    Bounds(BoundsArgs),
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = RowPolicyArg::NearRegular)]
    pub row_policy: RowPolicyArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub alist: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Tolerance; 0 selects the packing-bound value automatically.
    #[arg(long, default_value_t = 0)]
    pub t: usize,
    #[arg(long, default_value_t = 100_000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to LDPC_FORGE_THREADS or 1.
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub cert_out: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub alist: PathBuf,
    #[arg(long)]
    pub cert: PathBuf,
}

#[derive(Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Comma-separated chain length parameters.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub k_list: Vec<usize>,
    /// Comma-separated blocklengths (use a geometric grid).
    #[arg(long, value_delimiter = ',')]
    pub n_grid: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub seeds_per_point: usize,
    #[arg(long, default_value_t = 100_000)]
    pub budget: usize,
    /// m = ceil(n * rate).
    #[arg(long, default_value_t = 0.5)]
    pub rate: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct BoundsArgs {
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Comma-separated parity-check counts (may be empty).
    #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
    pub m_grid: Vec<String>,
    /// n = ceil(m / rate) in the reports.
    #[arg(long, default_value_t = 0.5)]
    pub rate: f64,
}

fn default_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("LDPC_FORGE_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

pub fn cmd_gen(args: &GenArgs) -> Result<i32> {
    let params = CodeParams::validate(args.n, args.m, args.r)?;
    let code = sample_code(params, args.row_policy.into(), args.seed)?;
    alist::write_alist(&code, &args.out)?;
    println!(
        "wrote {} ({} x {}, r = {})",
        args.out.display(),
        params.m,
        params.n,
        params.r
    );
    // The exact dimension is only tractable for small codes.
    if args.n - args.m <= 24 {
        println!("dimension {}", code_dimension(&code));
    }
    Ok(0)
}

pub fn cmd_search(args: &SearchArgs) -> Result<i32> {
    let code = alist::read_alist(&args.alist)?;
    let config = SearchConfig::new(args.k, args.t, args.budget, args.seed)?;
    let threads = default_threads(args.threads);
    let start = Instant::now();
    let outcome = search_min_weight_parallel(&code, &config, threads);
    let seconds = start.elapsed().as_secs_f64();
    let bound = bounds::weight_bound(outcome.t, args.k, code.params.r);
    if args.t == 0 {
        println!("t auto: {}", outcome.t);
    }
    match outcome.best {
        Some(result) => {
            println!(
                "{} {} {} {} {} {} {} {} {:.3}",
                code.params.n,
                code.params.m,
                code.params.r,
                args.k,
                outcome.t,
                result.weight,
                bound,
                outcome.chains_used,
                seconds
            );
            if let Some(path) = &args.cert_out {
                Certificate::from_result(&code, &result).write(path)?;
                println!("certificate written to {}", path.display());
            }
            Ok(0)
        }
        None => {
            eprintln!(
                "no collision within {} chains (t = {})",
                outcome.chains_used, outcome.t
            );
            Ok(EXIT_NO_RESULT)
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let code = alist::read_alist(&args.alist)?;
    let cert = Certificate::read(&args.cert)?;
    match certificate::verify(&code, &cert) {
        Ok(()) => {
            println!("certificate valid: weight {}", cert.weight);
            Ok(0)
        }
        Err(check) => {
            eprintln!("certificate invalid: {check}");
            Ok(1)
        }
    }
}

fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return None;
    }
    Some((n * sxy - sx * sy) / denom)
}

fn median(values: &mut Vec<usize>) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_unstable();
    let mid = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[mid] as f64
    } else {
        (values[mid - 1] + values[mid]) as f64 / 2.0
    })
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<i32> {
    let threads = default_threads(args.threads);
    let mut out = std::io::BufWriter::new(std::fs::File::create(&args.out)?);
    writeln!(out, "n,m,r,k,t,seed,found_weight,bound,chains_used,seconds")?;
    let mut failures = 0usize;
    // (k, n) -> found weights, for the slope fits.
    let mut found: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for &k in &args.k_list {
        for &n in &args.n_grid {
            let m = ((n as f64) * args.rate).ceil() as usize;
            let params = CodeParams::validate(n, m, args.r)?;
            let mut weights = Vec::new();
            for s in 0..args.seeds_per_point {
                let seed = args
                    .seed
                    .wrapping_add(s as u64)
                    .wrapping_add((k as u64) << 32)
                    .wrapping_add((n as u64) << 40);
                let code = sample_code(params, RowPolicy::NearRegular, seed)?;
                let config = SearchConfig::new(k, 0, args.budget, seed)?;
                let start = Instant::now();
                let outcome = search_min_weight_parallel(&code, &config, threads);
                let seconds = start.elapsed().as_secs_f64();
                let bound = bounds::weight_bound(outcome.t, k, args.r);
                let weight_field = match &outcome.best {
                    Some(res) => {
                        weights.push(res.weight);
                        res.weight.to_string()
                    }
                    None => {
                        failures += 1;
                        String::new()
                    }
                };
                writeln!(
                    out,
                    "{n},{m},{},{k},{},{seed},{weight_field},{bound},{},{seconds:.3}",
                    args.r, outcome.t, outcome.chains_used
                )?;
                out.flush()?; // rows stay self-contained on interruption
            }
            found.push((k, n, weights));
        }
    }
    drop(out);
    println!("sweep complete: {} rows, {failures} failures excluded from fits", args.k_list.len() * args.n_grid.len() * args.seeds_per_point);
    for &k in &args.k_list {
        let found_pts: Vec<(f64, f64)> = found
            .iter()
            .filter(|(fk, _, _)| *fk == k)
            .filter_map(|(_, n, ws)| {
                median(&mut ws.clone()).map(|med| ((*n as f64).ln(), med.ln()))
            })
            .collect();
        let bound_pts: Vec<(f64, f64)> = args
            .n_grid
            .iter()
            .map(|&n| {
                let m = ((n as f64) * args.rate).ceil() as usize;
                let t = bounds::choose_t(m, args.r, k);
                (
                    (n as f64).ln(),
                    (bounds::weight_bound(t, k, args.r) as f64).ln(),
                )
            })
            .collect();
        let eps = bounds::epsilon(args.r, k);
        let target = (args.r as f64 - 2.0) / (args.r as f64 - 1.0)
            + *eps.numer() as f64 / *eps.denom() as f64;
        match least_squares_slope(&found_pts) {
            Some(s) => println!("k={k} found-weight slope {s:.4} (target {target:.4})"),
            None => println!("k={k} found-weight slope: not enough successful points"),
        }
        if let Some(s) = least_squares_slope(&bound_pts) {
            println!("k={k} bound slope {s:.4} (target {target:.4})");
        }
    }
    Ok(0)
}

pub fn cmd_bounds(args: &BoundsArgs) -> Result<i32> {
    println!("{BOUND_REPORT_CSV_HEADER}");
    for field in &args.m_grid {
        if field.is_empty() {
            continue;
        }
        let m: usize = field.parse().map_err(|_| {
            crate::Error::InvalidParams(format!("bad m value {field:?}"))
        })?;
        let n = ((m as f64) / args.rate).ceil() as usize;
        println!("{}", BoundReport::evaluate(args.r, args.k, m, n).csv_row());
    }
    Ok(0)
}

pub fn run(cli: Cli) -> Result<i32> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Search(args) => cmd_search(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Bounds(args) => cmd_bounds(args),
    }
}
