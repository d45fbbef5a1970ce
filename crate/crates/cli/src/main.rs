//! `positroid`: conversions, h*-polynomials, triangulations, tree positroids,
//! atlases and cross-method verification from the command line.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use positroid_core::combinatorics::Permutation;
use positroid_core::input::{parse_permutation, parse_positroid, parse_subdivision};
use positroid_core::pipeline::{
    atlas_necklaces, compute_hstar, convert_report, ehrhart_report, triangulation_report, tree_report,
    HstarOptions, HstarReport, Method,
};
use positroid_core::Error;
use rayon::prelude::*;
use serde::Serialize;

mod verify;

#[derive(Parser)]
#[command(name = "positroid", version, about = "Ehrhart h*-polynomials of positroid polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (csv is only available for atlas)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the output to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads for atlas and verify
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Add wall-clock timing to reports (makes output run-dependent)
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args)]
struct Input {
    /// Inline value, a file path, or `-` for stdin
    #[arg(value_name = "INPUT", required_unless_present = "input")]
    positional: Option<String>,

    #[arg(long, value_name = "INPUT", conflicts_with = "positional")]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Show a positroid as necklace, decorated permutation and bases
    Convert(Input),
    /// Compute the h*-polynomial
    Hstar {
        #[command(flatten)]
        input: Input,
        /// shelling, descents, inclusion-exclusion, oracle or all
        #[arg(long, default_value = "shelling", value_parser = parse_method)]
        method: Method,
        /// Base label for the BFS shelling
        #[arg(long, value_name = "PERMUTATION")]
        w0: Option<String>,
        /// Use the half-open polytope (upper facets removed)
        #[arg(long)]
        half_open: bool,
    },
    /// Count lattice points in dilates and report the Ehrhart polynomial
    Ehrhart {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        tmax: u32,
    },
    /// List labels, the dual graph, BFS covers and affine windows
    Triangulate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "PERMUTATION")]
        w0: Option<String>,
    },
    /// Chains, arcs and circular extensions of a bicolored subdivision
    Tree {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "PERMUTATION")]
        w0: Option<String>,
    },
    /// Every positroid of rank R on [N], one report per line
    Atlas {
        rank: usize,
        n: usize,
        /// Also emit disconnected positroids (oracle only)
        #[arg(long)]
        include_disconnected: bool,
    },
    /// Run the cross-method verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::PaperExamples)]
        scope: Scope,
        /// Largest n for the exhaustive scope
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Random subdivisions checked in the exhaustive scope
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// JSON list of {"necklace", "hstar"} expectations to recheck
        #[arg(long, value_name = "PATH")]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Scope {
    PaperExamples,
    Exhaustive,
    Fixtures,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// An error with the process exit code it maps to.
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) | Error::Validation { .. } => 2,
            Error::Disconnected { .. } => 3,
            Error::Internal(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

pub(crate) fn max_n() -> Result<usize, Failure> {
    match std::env::var("POSITROID_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("POSITROID_MAX_N must be an integer, got {v:?}"))),
        Err(_) => Ok(7),
    }
}

fn read_input(i: &Input) -> Result<String, Failure> {
    let raw = i.positional.as_deref().or(i.input.as_deref()).unwrap_or("-");
    if raw == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    let path = std::path::Path::new(raw);
    if path.is_file() {
        return fs::read_to_string(path).map_err(|e| Failure::usage(format!("{raw}: {e}")));
    }
    Ok(raw.to_string())
}

fn w0_arg(w0: &Option<String>) -> Result<Option<Permutation>, Failure> {
    Ok(w0.as_deref().map(parse_permutation).transpose()?)
}

pub(crate) struct Output {
    format: Format,
    timing: Option<Instant>,
    buf: Vec<u8>,
}

impl Output {
    /// Appends one JSON document (pretty-printed) with optional timing.
    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let mut v = serde_json::to_value(value).map_err(|e| Failure::usage(e.to_string()))?;
        if let (Some(t), Some(obj)) = (self.timing, v.as_object_mut()) {
            obj.insert("timingMs".into(), (t.elapsed().as_millis() as u64).into());
        }
        serde_json::to_writer_pretty(&mut self.buf, &v).map_err(|e| Failure::usage(e.to_string()))?;
        self.buf.push(b'\n');
        Ok(())
    }

    pub fn line(&mut self, s: &str) {
        self.buf.extend_from_slice(s.as_bytes());
        self.buf.push(b'\n');
    }

    pub fn format(&self) -> Format {
        self.format
    }
}

fn no_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::usage("csv output is only available for atlas"));
    }
    Ok(())
}

fn run(cli: Cli, out: &mut Output) -> Result<(), Failure> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| Failure::usage(e.to_string()))?;
    }
    match cli.command {
        Command::Convert(i) => {
            no_csv(out.format)?;
            let (j, kind) = parse_positroid(&read_input(&i)?)?;
            let r = convert_report(&j, kind);
            match out.format {
                Format::Text => out.line(&render::convert(&r)),
                _ => out.json(&r)?,
            }
        }
        Command::Hstar {
            input,
            method,
            w0,
            half_open,
        } => {
            no_csv(out.format)?;
            let (j, _) = parse_positroid(&read_input(&input)?)?;
            let opts = HstarOptions {
                w0: w0_arg(&w0)?,
                half_open,
            };
            let r = compute_hstar(&j, method, &opts)?;
            match out.format {
                Format::Text => out.line(&render::hstar(&r)),
                _ => out.json(&r)?,
            }
        }
        Command::Ehrhart { input, tmax } => {
            no_csv(out.format)?;
            let (j, _) = parse_positroid(&read_input(&input)?)?;
            let r = ehrhart_report(&j, tmax)?;
            match out.format {
                Format::Text => out.line(&render::ehrhart(&r)),
                _ => out.json(&r)?,
            }
        }
        Command::Triangulate { input, w0 } => {
            no_csv(out.format)?;
            let (j, _) = parse_positroid(&read_input(&input)?)?;
            let r = triangulation_report(&j, w0_arg(&w0)?.as_ref())?;
            match out.format {
                Format::Text => out.line(&render::triangulation(&r)),
                _ => out.json(&r)?,
            }
        }
        Command::Tree { input, w0 } => {
            no_csv(out.format)?;
            let tau = parse_subdivision(&read_input(&input)?)?;
            let r = tree_report(&tau, w0_arg(&w0)?.as_ref())?;
            match out.format {
                Format::Text => out.line(&render::tree(&r)),
                _ => out.json(&r)?,
            }
        }
        Command::Atlas {
            rank,
            n,
            include_disconnected,
        } => atlas(rank, n, !include_disconnected, out)?,
        Command::Verify {
            scope,
            max_n,
            samples,
            fixtures,
        } => verify::run(scope, max_n, samples, fixtures.as_deref(), out)?,
    }
    Ok(())
}

fn atlas(rank: usize, n: usize, connected_only: bool, out: &mut Output) -> Result<(), Failure> {
    let cap = max_n()?;
    if n > cap {
        return Err(Failure::usage(format!(
            "n = {n} exceeds the size cap {cap}; raise POSITROID_MAX_N to allow it"
        )));
    }
    if n == 0 || rank > n {
        return Err(Failure::usage(format!("no positroids of rank {rank} on [{n}]")));
    }
    let necklaces = atlas_necklaces(rank, n, connected_only);
    let reports: Vec<Result<HstarReport, Error>> = necklaces
        .par_iter()
        .map(|j| compute_hstar(j, Method::All, &HstarOptions::default()))
        .collect();
    let reports: Vec<HstarReport> = reports.into_iter().collect::<Result<_, _>>()?;
    match out.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "rank", "necklace", "decorated", "connected", "labels", "hstar", "verdict"])
                .map_err(|e| Failure::usage(e.to_string()))?;
            for r in &reports {
                let h = r.hstar.values().next().cloned().unwrap_or_default();
                w.write_record([
                    r.positroid.n.to_string(),
                    r.positroid.rank.to_string(),
                    r.positroid.necklace.clone(),
                    r.positroid.decorated.clone(),
                    r.positroid.connected.to_string(),
                    r.labels.map(|l| l.to_string()).unwrap_or_default(),
                    serde_json::to_string(&h).unwrap_or_default(),
                    serde_json::to_string(&r.verdict).unwrap_or_default().trim_matches('"').to_string(),
                ])
                .map_err(|e| Failure::usage(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
            out.buf.extend_from_slice(&bytes);
        }
        Format::Text => {
            for r in &reports {
                out.line(&render::atlas_row(r));
            }
        }
        Format::Json => {
            for r in &reports {
                let line = serde_json::to_string(r).map_err(|e| Failure::usage(e.to_string()))?;
                out.line(&line);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    let mut out = Output {
        format: cli.format,
        timing: cli.timing.then(Instant::now),
        buf: Vec::new(),
    };
    let result = run(cli, &mut out);
    // whatever was produced is still written, e.g. the verify table on failure
    let written = match &out_path {
        Some(p) => fs::write(p, &out.buf),
        None => io::stdout().write_all(&out.buf),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
