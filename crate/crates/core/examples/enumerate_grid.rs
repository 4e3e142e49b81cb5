//! Every maximal collinear subset of a small lattice, with each strategy.
//!
//! cargo run --example enumerate_grid -- 4 3

use collinear::cli::GenSpec;
use collinear::{enumerate, SigmaOrder, Strategy};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<i64>().expect("integer side"));
    let w = args.next().unwrap_or(3);
    let h = args.next().unwrap_or(w);
    let ps = GenSpec::Grid { w, h }.generate(0).unwrap();
    let sigma = SigmaOrder::identity(ps.len());

    let layered = enumerate(&ps, &sigma, Strategy::Layered, 3, 1).unwrap();
    println!(
        "{w}x{h} grid: {} points, {} layers",
        ps.len(),
        layered.stats.m.unwrap()
    );
    for set in &layered.sets {
        let coords: Vec<String> = set
            .members
            .iter()
            .map(|&i| format!("({},{})", ps[i].x, ps[i].y))
            .collect();
        println!("  {}", coords.join(" "));
    }

    for algo in [Strategy::Baseline, Strategy::Parallel, Strategy::Oracle] {
        let other = enumerate(&ps, &sigma, algo, 3, 2).unwrap();
        assert_eq!(other.sets, layered.sets);
        println!("{algo}: same {} sets", other.sets.len());
    }
}
