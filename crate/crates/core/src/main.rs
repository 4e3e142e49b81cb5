use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use collinear::cli::{run, GenSpec, InputSource, OutputFormat, RunConfig, Status};
use collinear::Strategy;

/// Enumerate maximal collinear subsets of a point set.
#[derive(Parser, Debug)]
#[command(name = "collinear", version)]
struct Args {
    /// Point file: one "x y" per line, '#' comments.
    #[arg(required_unless_present = "gen", conflicts_with = "gen")]
    input: Option<PathBuf>,

    /// Generator: grid:WxH | random:N,box=B | planted:lines=L,per_line=K,noise=R[,box=B]
    #[arg(long, requires = "seed")]
    gen: Option<GenSpec>,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long, default_value = "layered")]
    algo: Strategy,

    #[arg(long, default_value_t = 1)]
    workers: usize,

    #[arg(long = "min-size", default_value_t = 3)]
    min_size: usize,

    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,

    /// Compare against the brute-force oracle; exit 2 on mismatch.
    #[arg(long)]
    check: bool,

    /// Time every strategy and print a table.
    #[arg(long)]
    bench: bool,

    /// Permute the processing order with the seed.
    #[arg(long = "sigma-shuffle")]
    sigma_shuffle: bool,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let input = match (args.input, args.gen) {
        (_, Some(spec)) => InputSource::Generator(spec),
        (Some(path), None) => InputSource::File(path),
        (None, None) => unreachable!("clap enforces an input"),
    };
    let config = RunConfig {
        input,
        algo: args.algo,
        workers: args.workers,
        min_size: args.min_size,
        format: if args.format == "json" {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
        seed: args.seed,
        check: args.check,
        bench: args.bench,
        sigma_shuffle: args.sigma_shuffle,
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(&config, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::Usage.code() as u8)
        }
    }
}
