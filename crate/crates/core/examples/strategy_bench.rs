//! Wall-clock comparison of the strategies on a lattice and a planted
//! instance. Pass a grid side to change the size.
//!
//! cargo run --release --example strategy_bench -- 50

use std::time::Instant;

use collinear::cli::GenSpec;
use collinear::{enumerate, PointSet, SigmaOrder, Strategy};

fn time(ps: &PointSet, algo: Strategy, workers: usize) -> (f64, usize) {
    let sigma = SigmaOrder::identity(ps.len());
    let start = Instant::now();
    let r = enumerate(ps, &sigma, algo, 3, workers).unwrap();
    (start.elapsed().as_secs_f64() * 1e3, r.sets.len())
}

fn main() {
    let side: i64 = std::env::args().nth(1).map_or(40, |s| s.parse().unwrap());
    let n = (side * side) as usize;
    let inputs = [
        (
            format!("grid:{side}x{side}"),
            GenSpec::Grid { w: side, h: side },
        ),
        (
            format!("planted n={n}"),
            GenSpec::Planted {
                lines: 5,
                per_line: n / 6,
                noise: n - 5 * (n / 6),
                bound: 2 * side * side,
            },
        ),
    ];
    for (name, spec) in inputs {
        let ps = spec.generate(1).unwrap();
        println!("{name}");
        for (algo, workers) in [
            (Strategy::Baseline, 1),
            (Strategy::Layered, 1),
            (Strategy::Parallel, 1),
            (Strategy::Parallel, 4),
        ] {
            let (ms, sets) = time(&ps, algo, workers);
            println!(
                "  {:<9} x{workers}  {ms:>9.1} ms  {sets} sets",
                algo.as_str()
            );
        }
    }
}
