//! Orientation and folded-angle keys stay exact at the coordinate bound.
//!
//! cargo run --example exact_predicates

use std::cmp::Ordering;

use collinear::geometry::{cmp_folded, fold_direction, orient, FoldedKey, Point, COORD_BOUND};

fn main() {
    let b = COORD_BOUND;
    let (a, c) = (Point::new(-b, -b), Point::new(b, b));
    let near_miss = Point::new(b - 1, b);
    println!(
        "orient(corner, corner, center)  = {:?}",
        orient(a, c, Point::new(0, 0))
    );
    println!(
        "orient(corner, corner, off-by-1) = {:?}",
        orient(a, c, near_miss)
    );

    // Slopes 1 - 1/b and 1 - 1/(b - 1) differ by about 2^-60, below f64
    // resolution; the integer cross product still separates them.
    let pivot = Point::new(0, 0);
    let (u, v) = (Point::new(b, b - 1), Point::new(b - 1, b - 2));
    let slope = |q: Point| (q.y - pivot.y) as f64 / (q.x - pivot.x) as f64;
    println!("f64 slopes equal: {}", slope(u) == slope(v));
    let (ku, kv) = (FoldedKey::new(pivot, u), FoldedKey::new(pivot, v));
    println!("cmp_folded: {:?}", cmp_folded(&ku, &kv));
    assert_ne!(cmp_folded(&ku, &kv), Ordering::Equal);

    // Opposite directions fold onto the same line; the flag keeps them apart.
    let up = fold_direction(Point::new(0, 0), Point::new(3, 1)).unwrap();
    let down = fold_direction(Point::new(0, 0), Point::new(-6, -2)).unwrap();
    println!("folded (3,1): {up:?}");
    println!("folded (-6,-2): {down:?}");
    assert!(up.same_line(&down));
}
