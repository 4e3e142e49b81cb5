//! The parallel strategy over a worker pool: identical output for every
//! worker count, per-worker scratch of O(m) words.
//!
//! cargo run --release --example parallel_workers -- 3000

use std::time::Instant;

use collinear::cli::GenSpec;
use collinear::{enumerate_parallel_with, peel, SigmaOrder};

fn main() {
    let n = std::env::args().nth(1).map_or(3000, |s| s.parse().unwrap());
    let ps = GenSpec::Planted {
        lines: 6,
        per_line: n / 10,
        noise: n - 6 * (n / 10),
        bound: (n as i64).max(100),
    }
    .generate(2)
    .unwrap();
    let sigma = SigmaOrder::shuffled(ps.len(), 9);
    let layers = peel(&ps);
    let cpus = std::thread::available_parallelism().map_or(1, |c| c.get());
    println!("n={} m={} cpus={cpus}", ps.len(), layers.depth());

    let mut reference = None;
    for workers in [1, 2, 4, 8] {
        let start = Instant::now();
        let r = enumerate_parallel_with(&ps, &sigma, 3, workers, &layers).unwrap();
        println!(
            "workers={workers}: {} sets in {:.1} ms, scratch {} words (one worker per point: {})",
            r.sets.len(),
            start.elapsed().as_secs_f64() * 1e3,
            r.stats.space_words,
            r.stats.per_point_space_words
        );
        match &reference {
            None => reference = Some(r.sets),
            Some(sets) => assert_eq!(sets, &r.sets),
        }
    }
}
