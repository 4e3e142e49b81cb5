//! Differential testing against the brute-force oracle on seeded random and
//! planted instances.
//!
//! cargo run --release --example oracle_check -- 200

use collinear::cli::GenSpec;
use collinear::oracle::{brute_force, brute_force_line_keys};
use collinear::{enumerate, SigmaOrder, Strategy};

fn main() {
    let count: u64 = std::env::args().nth(1).map_or(200, |s| s.parse().unwrap());
    let mut sets = 0;
    for seed in 0..count {
        let spec = if seed.is_multiple_of(2) {
            GenSpec::Random { n: 50, bound: 15 }
        } else {
            GenSpec::Planted {
                lines: 3,
                per_line: 7,
                noise: 25,
                bound: 15,
            }
        };
        let ps = spec.generate(seed).unwrap();
        let truth = brute_force(&ps, 3).unwrap();
        let keyed = brute_force_line_keys(&ps, 3).unwrap();
        assert!(truth.sets.iter().map(|s| &s.members).eq(keyed.iter()));
        let sigma = SigmaOrder::shuffled(ps.len(), seed);
        for (algo, workers) in [
            (Strategy::Baseline, 1),
            (Strategy::Layered, 1),
            (Strategy::Parallel, 3),
        ] {
            let got = enumerate(&ps, &sigma, algo, 3, workers).unwrap();
            assert_eq!(got.sets, truth.sets, "seed {seed} {algo}");
        }
        sets += truth.sets.len();
    }
    println!("{count} instances, {sets} sets, all strategies agree with both oracles");
}
