//! Streaming run detection with processing-order filtering: a run is
//! reported only by its first member in the processing order.
//!
//! cargo run --example streaming_scanner

use collinear::cyclic::{build_merged, RunScanner};
use collinear::{PointSet, SigmaOrder};

fn main() {
    let ps =
        PointSet::from_coords([(0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (1, 1), (2, 2)]).unwrap();
    for sigma in [
        SigmaOrder::identity(ps.len()),
        SigmaOrder::reversed(ps.len()),
    ] {
        println!("order {:?}", sigma.order());
        for &pivot in sigma.order() {
            let mut scanner = RunScanner::new(pivot, 3, Some(&sigma));
            let mut found = Vec::new();
            for entry in build_merged(pivot, &ps).entries {
                found.extend(scanner.push(entry.index, &entry.key.dir));
            }
            found.extend(scanner.finish());
            for run in found {
                println!("  pivot {pivot} reports {:?}", run.to_set());
            }
        }
    }
}
