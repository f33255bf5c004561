// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use petersen_cli::render::{self, Format};
use petersen_cli::sweep::check_against_bfs;
use petersen_cli::{exit, run_sweep, run_verify, Config};
use petersen_core::epsilon::{bfs_diameters, conjecture_scan};
use petersen_core::oracle::diameter_over_sources;
use petersen_core::{build_gpg, gpg_diameter, normalize_s, Params};

/// Distances and diameters of generalized Petersen graphs GPG(n, s) and
/// circulants C_n(1, s).
#[derive(Debug, Parser)]
#[command(name = "petersen", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// TOML file with default sweep bounds, format and output directory.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Diameter of a single GPG(n, s).
    Diameter {
        /// Ring size, at least 5.
        n: u64,
        /// Skip, 2 <= s <= n - 2 and 2s != n; reduced to min(s, n - s).
        s: u64,
        /// Confirm against breadth-first search.
        #[arg(long)]
        verify: bool,
    },
    /// One row per (n, s) with n_min <= n <= n_max.
    Sweep {
        /// Smallest ring size (default 5, or the config file).
        n_min: Option<u64>,
        /// Largest ring size (or the config file).
        n_max: Option<u64>,
        /// Check each row against breadth-first search.
        #[arg(long)]
        verify: bool,
        /// Output format (default csv).
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check every formula against breadth-first search for 5 <= n <= n_max.
    Verify { n_max: u64 },
    /// Compare observed gaps with the conjectured (4p, 2p - 1) family.
    Conjecture {
        n_max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Failure modes mapped to exit codes.
enum Outcome {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::USAGE as u8
            } else {
                exit::OK as u8
            });
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::from(exit::OK as u8),
        Ok(Outcome::Mismatch) => ExitCode::from(exit::MISMATCH as u8),
        Err(e) if is_broken_pipe(&e) => ExitCode::from(exit::OK as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::USAGE as u8)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn run(cli: Cli) -> Result<Outcome> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(jobs) = cli.jobs.or(config.jobs) {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("starting worker pool")?;
    }
    match cli.command {
        Command::Diameter { n, s, verify } => cmd_diameter(n, s, verify),
        Command::Sweep {
            n_min,
            n_max,
            verify,
            format,
            output,
        } => {
            let n_min = n_min.or(config.sweep.n_min).unwrap_or(5);
            let Some(n_max) = n_max.or(config.sweep.n_max) else {
                bail!("sweep needs N_MAX on the command line or in the config file");
            };
            let format = format.or(config.sweep.format).unwrap_or(Format::Csv);
            let output = output.or_else(|| {
                config
                    .sweep
                    .output_dir
                    .map(|d| d.join(format!("sweep_{n_min}_{n_max}.{}", format.extension())))
            });
            cmd_sweep(n_min, n_max, verify, format, output.as_deref())
        }
        Command::Verify { n_max } => cmd_verify(n_max),
        Command::Conjecture {
            n_max,
            format,
            output,
        } => {
            let output = output.or_else(|| {
                config
                    .sweep
                    .output_dir
                    .map(|d| d.join(format!("conjecture_{n_max}.{}", format.extension())))
            });
            cmd_conjecture(n_max, format, output.as_deref())
        }
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)
                    .with_context(|| format!("creating {}", dir.display()))?;
            }
            let f = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn gpg_label(v: usize, n: usize) -> String {
    if v < n {
        format!("u{v}")
    } else {
        format!("v{}", v - n)
    }
}

fn cmd_diameter(n: u64, s: u64, verify: bool) -> Result<Outcome> {
    let p = Params::new(n, s)?;
    if normalize_s(n, s)? != s {
        eprintln!("note: s = {s} normalized to {} (same graph)", p.s());
    }
    let r = gpg_diameter(p);
    let mut out = io::stdout().lock();
    render::diameter_text(&mut out, &r)?;
    if !verify {
        return Ok(Outcome::Ok);
    }
    let (bfs_circ, bfs_gpg) = bfs_diameters(p);
    let nu = p.n() as usize;
    let w = diameter_over_sources(&build_gpg(p), [0, nu])?;
    let mismatches = check_against_bfs(&r, bfs_circ, bfs_gpg);
    writeln!(out, "bfs_circulant={bfs_circ}")?;
    writeln!(out, "bfs_gpg={bfs_gpg}")?;
    writeln!(
        out,
        "gpg_witness={},{}",
        gpg_label(w.endpoints.0, nu),
        gpg_label(w.endpoints.1, nu)
    )?;
    writeln!(out, "verified={}", mismatches.is_empty())?;
    out.flush()?;
    for m in &mismatches {
        eprintln!("{m}");
    }
    Ok(if mismatches.is_empty() {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}

fn cmd_sweep(
    n_min: u64,
    n_max: u64,
    verify: bool,
    format: Format,
    output: Option<&Path>,
) -> Result<Outcome> {
    if n_min < 5 || n_min > n_max {
        bail!("sweep needs 5 <= n_min <= n_max, got {n_min}..{n_max}");
    }
    let outcomes = run_sweep(n_min, n_max, verify);
    let rows: Vec<_> = outcomes.iter().map(|o| o.row.clone()).collect();
    let mut out = open_output(output)?;
    match format {
        Format::Csv => render::sweep_csv(&mut out, &rows)?,
        Format::Jsonl => render::sweep_jsonl(&mut out, &rows)?,
        Format::Text => render::sweep_text(&mut out, &rows)?,
    }
    out.flush()?;
    let mut mismatched = 0;
    for o in &outcomes {
        for m in &o.mismatches {
            eprintln!("{m}");
        }
        mismatched += usize::from(!o.mismatches.is_empty());
    }
    if mismatched > 0 {
        eprintln!(
            "{mismatched} of {} rows disagree with breadth-first search",
            rows.len()
        );
        return Ok(Outcome::Mismatch);
    }
    Ok(Outcome::Ok)
}

fn cmd_verify(n_max: u64) -> Result<Outcome> {
    if n_max < 8 {
        bail!("verify needs n_max >= 8, got {n_max}");
    }
    let summary = run_verify(n_max);
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "verify: 5 <= n <= {n_max}, {} instances",
        summary.instances
    )?;
    for s in &summary.suites {
        writeln!(
            out,
            "{:<26} {:>7} checked {:>7} passed {:>5} failed",
            s.name,
            s.checked(),
            s.passed,
            s.failures.len()
        )?;
    }
    out.flush()?;
    for s in &summary.suites {
        for f in &s.failures {
            eprintln!("FAIL {}: {f}", s.name);
        }
    }
    Ok(if summary.ok() {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}

fn cmd_conjecture(n_max: u64, format: Format, output: Option<&Path>) -> Result<Outcome> {
    let report = conjecture_scan(n_max)?;
    let mut out = open_output(output)?;
    match format {
        Format::Text => render::conjecture_text(&mut out, &report)?,
        Format::Csv => render::conjecture_csv(&mut out, &report)?,
        Format::Jsonl => render::conjecture_jsonl(&mut out, &report)?,
    }
    out.flush()?;
    Ok(Outcome::Ok)
}
