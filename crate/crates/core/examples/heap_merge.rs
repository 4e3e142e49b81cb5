//! The k-way merge of layer pieces reproduces a full angular sort around a
//! pivot, with a heap no larger than the number of pieces.
//!
//! cargo run --release --example heap_merge

use collinear::cli::GenSpec;
use collinear::cyclic::build_merged;
use collinear::layers::heap_merge;
use collinear::peel;

fn main() {
    let ps = GenSpec::Random {
        n: 2000,
        bound: 300,
    }
    .generate(11)
    .unwrap();
    let layers = peel(&ps);
    let mut pieces = Vec::new();
    let mut worst_heap = 0;
    for pivot in 0..ps.len() {
        pieces.clear();
        layers.split_all(pivot, &ps, &mut pieces);
        let mut merge = heap_merge(pivot, &pieces, &layers, &ps);
        let merged: Vec<usize> = merge.by_ref().map(|(i, _)| i).collect();
        worst_heap = worst_heap.max(merge.peak_len());
        let sorted: Vec<usize> = build_merged(pivot, &ps).indices().collect();
        assert_eq!(merged, sorted, "pivot {pivot}");
    }
    println!(
        "n={} m={}: merge matched the full sort for every pivot; largest heap {}",
        ps.len(),
        layers.depth(),
        worst_heap
    );
}
