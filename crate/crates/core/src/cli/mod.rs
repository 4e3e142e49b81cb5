//! Command-line driver: input ingestion, generators, output formats, and the
//! differential-check and benchmark modes. The binary only parses flags into
//! a [`RunConfig`] and calls [`run`].

mod generate;
mod input;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

pub use generate::GenSpec;
pub use input::parse_points;

use crate::enumerate::{
    enumerate, enumerate_parallel_with, CollinearSet, EnumerationResult, Stats, Strategy,
};
use crate::error::Error;
use crate::geometry::{PointSet, SigmaOrder};
use crate::layers::peel;
use crate::oracle::{brute_force, DEFAULT_ORACLE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: coordinate ({x}, {y}) exceeds |c| <= 2^30")]
    Range { line: usize, x: i64, y: i64 },

    #[error(
        "duplicate point on line {first_line} and line {second_line} (indices {first} and {second})"
    )]
    Duplicate {
        first_line: usize,
        second_line: usize,
        first: usize,
        second: usize,
    },

    #[error("generator {0}")]
    Generator(String),

    #[error("{0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error(transparent)]
    Lib(#[from] Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    File(PathBuf),
    /// Inline file contents.
    Text(String),
    Generator(GenSpec),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub input: InputSource,
    pub algo: Strategy,
    pub workers: usize,
    pub min_size: usize,
    pub format: OutputFormat,
    pub seed: Option<u64>,
    pub check: bool,
    pub bench: bool,
    pub sigma_shuffle: bool,
}

impl RunConfig {
    pub fn new(input: InputSource) -> Self {
        Self {
            input,
            algo: Strategy::Layered,
            workers: 1,
            min_size: crate::enumerate::DEFAULT_MIN_SIZE,
            format: OutputFormat::Text,
            seed: None,
            check: false,
            bench: false,
            sigma_shuffle: false,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.workers == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        if self.min_size < 3 {
            return Err(CliError::Usage("--min-size must be at least 3".into()));
        }
        if matches!(self.input, InputSource::Generator(_)) && self.seed.is_none() {
            return Err(CliError::Usage("--gen requires --seed".into()));
        }
        Ok(())
    }
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Usage = 1,
    Mismatch = 2,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

pub fn load(input: &InputSource, seed: Option<u64>) -> Result<PointSet, CliError> {
    match input {
        InputSource::File(path) => parse_points(&std::fs::read_to_string(path)?),
        InputSource::Text(text) => parse_points(text),
        InputSource::Generator(spec) => spec.generate(seed.unwrap_or(0)),
    }
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    points: Vec<[i64; 2]>,
    sets: &'a [CollinearSet],
    stats: &'a Stats,
}

/// Runs one configuration. Results go to `out`; check and warning messages
/// go to `diag`. Errors map to [`Status::Usage`].
pub fn run(
    config: &RunConfig,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<Status, CliError> {
    config.validate()?;
    let ps = load(&config.input, config.seed)?;
    let sigma = if config.sigma_shuffle {
        SigmaOrder::shuffled(ps.len(), config.seed.unwrap_or(0))
    } else {
        SigmaOrder::identity(ps.len())
    };

    if config.bench {
        return bench(&ps, &sigma, config.min_size, out);
    }

    let mut result = enumerate(&ps, &sigma, config.algo, config.min_size, config.workers)?;
    if result.stats.m.is_none() {
        result.stats.m = Some(peel(&ps).depth());
    }
    write_result(&ps, &result, config.format, out)?;

    if config.check {
        return check(&ps, &result, config.min_size, diag);
    }
    Ok(Status::Success)
}

pub fn write_result(
    ps: &PointSet,
    result: &EnumerationResult,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Text => {
            for set in &result.sets {
                writeln!(out, "{}", join(&set.members))?;
            }
            let s = &result.stats;
            writeln!(
                out,
                "n={} m={} sets={} algo={} ms={:.3}",
                s.n,
                s.m.map_or_else(|| "-".to_string(), |m| m.to_string()),
                result.sets.len(),
                s.strategy,
                s.elapsed.as_secs_f64() * 1e3
            )?;
        }
        OutputFormat::Json => {
            let doc = JsonOutput {
                points: ps.points().iter().map(|p| [p.x, p.y]).collect(),
                sets: &result.sets,
                stats: &result.stats,
            };
            serde_json::to_writer(&mut *out, &doc).map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn join(members: &[usize]) -> String {
    members
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compares `result` with the brute-force oracle and prints the symmetric
/// difference on mismatch.
fn check(
    ps: &PointSet,
    result: &EnumerationResult,
    min_size: usize,
    diag: &mut dyn Write,
) -> Result<Status, CliError> {
    if ps.len() > DEFAULT_ORACLE_CAP {
        writeln!(
            diag,
            "check skipped: n={} exceeds the oracle cap of {DEFAULT_ORACLE_CAP}",
            ps.len()
        )?;
        return Ok(Status::Success);
    }
    let truth = brute_force(ps, min_size)?;
    let got: BTreeSet<&CollinearSet> = result.sets.iter().collect();
    let want: BTreeSet<&CollinearSet> = truth.sets.iter().collect();
    if got == want {
        writeln!(diag, "check: ok ({} sets match the oracle)", want.len())?;
        return Ok(Status::Success);
    }
    for extra in got.difference(&want) {
        writeln!(diag, "check: unexpected {}", join(&extra.members))?;
    }
    for missing in want.difference(&got) {
        writeln!(diag, "check: missing {}", join(&missing.members))?;
    }
    Ok(Status::Mismatch)
}

fn bench(
    ps: &PointSet,
    sigma: &SigmaOrder,
    min_size: usize,
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    writeln!(
        out,
        "{:<10} {:>7} {:>12} {:>8}",
        "algo", "workers", "ms", "sets"
    )?;
    let mut rows: Vec<(Strategy, usize, EnumerationResult)> = Vec::new();
    for algo in [Strategy::Baseline, Strategy::Layered] {
        rows.push((algo, 1, enumerate(ps, sigma, algo, min_size, 1)?));
    }
    let layers_start = Instant::now();
    let layers = peel(ps);
    let peel_time = layers_start.elapsed();
    for workers in [1, 2, 4, 8] {
        let mut r = enumerate_parallel_with(ps, sigma, min_size, workers, &layers)?;
        r.stats.elapsed += peel_time;
        rows.push((Strategy::Parallel, workers, r));
    }
    let reference = &rows[0].2.sets;
    let mut status = Status::Success;
    for (algo, workers, r) in &rows {
        writeln!(
            out,
            "{:<10} {:>7} {:>12.3} {:>8}",
            algo.as_str(),
            workers,
            r.stats.elapsed.as_secs_f64() * 1e3,
            r.sets.len()
        )?;
        if &r.sets != reference {
            status = Status::Mismatch;
        }
    }
    writeln!(out, "n={} m={}", ps.len(), layers.depth())?;
    Ok(status)
}
