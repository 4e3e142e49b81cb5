//! Peels a point set into convex layers and shows how one pivot sees each
//! layer: its tangent class and the sorted pieces the layer splits into.
//!
//! cargo run --example convex_layers -- 5

use collinear::cli::GenSpec;
use collinear::layers::{tangents, validate_pieces};
use collinear::peel;

fn main() {
    let seed = std::env::args().nth(1).map_or(5, |s| s.parse().unwrap());
    let ps = GenSpec::Random { n: 30, bound: 12 }.generate(seed).unwrap();
    let layers = peel(&ps);
    println!("{} points, {} layers", ps.len(), layers.depth());
    for (d, layer) in layers.layers().iter().enumerate() {
        let tag = if layer.degenerate {
            " (degenerate)"
        } else {
            ""
        };
        println!("  layer {d}: {:?}{tag}", layer.vertices);
    }

    let pivot = layers.layers()[layers.depth() / 2].vertices[0];
    println!("\npivot {pivot} at ({}, {})", ps[pivot].x, ps[pivot].y);
    for (d, layer) in layers.layers().iter().enumerate() {
        println!("  layer {d}: {:?}", tangents(pivot, layer, &ps));
    }

    let mut pieces = Vec::new();
    layers.split_all(pivot, &ps, &mut pieces);
    validate_pieces(pivot, &pieces, &layers, &ps).unwrap();
    println!(
        "\n{} pieces (bound 4m = {}):",
        pieces.len(),
        4 * layers.depth()
    );
    for piece in &pieces {
        let members: Vec<usize> = (0..piece.len).map(|t| layers.vertex(piece, t)).collect();
        println!("  layer {} {:?}", piece.layer, members);
    }
}
