mod common;

use std::cmp::Ordering;

use collinear::cyclic::build_merged;
use collinear::geometry::{
    cmp_folded, fold_direction, orient, squared_distance, FoldedKey, Orientation, Point,
    COORD_BOUND,
};
use collinear::layers::{heap_merge, validate_pieces};
use collinear::oracle::{brute_force, brute_force_line_keys};
use collinear::{
    enumerate_baseline, enumerate_layered, enumerate_parallel, peel, PointSet, SigmaOrder,
};
use num_bigint::BigInt;
use proptest::prelude::*;

use common::{any_point_set, members};

const B: i64 = COORD_BOUND;

fn coord() -> impl Strategy<Value = i64> {
    prop_oneof![
        -B..=B,
        Just(B),
        Just(-B),
        (B - 3)..=B,
        (-B)..=(-B + 3),
        -3i64..=3,
    ]
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

fn big_orient(a: Point, b: Point, c: Point) -> i32 {
    let big = |v: i64| BigInt::from(v);
    let d = (big(b.x) - big(a.x)) * (big(c.y) - big(a.y))
        - (big(b.y) - big(a.y)) * (big(c.x) - big(a.x));
    match d.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

fn big_dist2(a: Point, b: Point) -> BigInt {
    let dx = BigInt::from(a.x) - BigInt::from(b.x);
    let dy = BigInt::from(a.y) - BigInt::from(b.y);
    &dx * &dx + &dy * &dy
}

/// Angle in `[0, pi)` of the direction, reference version on rationals:
/// compares two directions folded into the upper half-plane.
fn reference_folded_cmp(p: Point, q: Point, r: Point) -> Ordering {
    let fold = |v: Point| {
        let (dx, dy) = (
            BigInt::from(v.x) - BigInt::from(p.x),
            BigInt::from(v.y) - BigInt::from(p.y),
        );
        let lower = dy < BigInt::from(0) || (dy == BigInt::from(0) && dx < BigInt::from(0));
        if lower {
            (-dx, -dy, lower)
        } else {
            (dx, dy, lower)
        }
    };
    let (ux, uy, ul) = fold(q);
    let (vx, vy, vl) = fold(r);
    let cross = &ux * &vy - &uy * &vx;
    // Positive cross: u comes first.
    let by_angle = BigInt::from(0).cmp(&cross);
    by_angle
        .then(ul.cmp(&vl))
        .then(big_dist2(p, q).cmp(&big_dist2(p, r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn orient_matches_bigint_at_extremes(a in point(), b in point(), c in point()) {
        prop_assert_eq!(orient(a, b, c).signum(), big_orient(a, b, c));
    }

    #[test]
    fn orient_antisymmetric(a in point(), b in point(), c in point()) {
        prop_assert_eq!(orient(a, b, c).signum(), -orient(b, a, c).signum());
        prop_assert_eq!(orient(a, b, c), orient(b, c, a));
    }

    #[test]
    fn squared_distance_exact(a in point(), b in point()) {
        prop_assert_eq!(BigInt::from(squared_distance(a, b)), big_dist2(a, b));
    }

    #[test]
    fn folded_cross_zero_iff_collinear(p in point(), q in point(), r in point()) {
        prop_assume!(p != q && p != r);
        let u = fold_direction(p, q).unwrap();
        let v = fold_direction(p, r).unwrap();
        prop_assert_eq!(u.same_line(&v), orient(p, q, r) == Orientation::Collinear);
    }

    #[test]
    fn cmp_folded_matches_reference(p in point(), q in point(), r in point()) {
        prop_assume!(p != q && p != r);
        let (u, v) = (FoldedKey::new(p, q), FoldedKey::new(p, r));
        prop_assert_eq!(cmp_folded(&u, &v), reference_folded_cmp(p, q, r));
        prop_assert_eq!(cmp_folded(&u, &v) == Ordering::Equal, q == r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cmp_folded_is_a_total_order(
        p in point(),
        qs in prop::collection::vec(point(), 3..12),
    ) {
        let keys: Vec<FoldedKey> = qs.iter().filter(|&&q| q != p).map(|&q| FoldedKey::new(p, q)).collect();
        for a in &keys {
            for b in &keys {
                prop_assert_eq!(cmp_folded(a, b), cmp_folded(b, a).reverse());
                for c in &keys {
                    if cmp_folded(a, b) != Ordering::Greater && cmp_folded(b, c) != Ordering::Greater {
                        prop_assert_ne!(cmp_folded(a, c), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn hull_layers_partition_and_are_convex(ps in any_point_set()) {
        let layers = peel(&ps);
        let mut covered = vec![0usize; ps.len()];
        for (depth, layer) in layers.layers().iter().enumerate() {
            let inner: Vec<usize> = layers.layers()[depth + 1..]
                .iter()
                .flat_map(|l| l.vertices.iter().copied())
                .collect();
            for &v in &layer.vertices {
                covered[v] += 1;
            }
            if layer.degenerate {
                prop_assert!(inner.is_empty(), "only the innermost layer can be degenerate");
                continue;
            }
            let k = layer.vertices.len();
            for t in 0..k {
                let (a, b) = (ps.get(layer.vertices[t]), ps.get(layer.vertices[(t + 1) % k]));
                // Everything on this layer and deeper lies on the closed left side.
                for &w in layer.vertices.iter().chain(inner.iter()) {
                    prop_assert_ne!(orient(a, b, ps.get(w)), Orientation::Clockwise);
                }
                // Deeper layers are strictly inside.
                for &w in &inner {
                    prop_assert_eq!(orient(a, b, ps.get(w)), Orientation::CounterClockwise);
                }
            }
        }
        prop_assert!(covered.iter().all(|&c| c == 1));
    }

    #[test]
    fn heap_merge_equals_full_sort(ps in any_point_set()) {
        let layers = peel(&ps);
        let mut pieces = Vec::new();
        for pivot in 0..ps.len() {
            pieces.clear();
            layers.split_all(pivot, &ps, &mut pieces);
            prop_assert!(validate_pieces(pivot, &pieces, &layers, &ps).is_ok());
            prop_assert!(pieces.len() <= 4 * layers.depth());
            let merged: Vec<usize> = heap_merge(pivot, &pieces, &layers, &ps).map(|(i, _)| i).collect();
            let sorted: Vec<usize> = build_merged(pivot, &ps).indices().collect();
            prop_assert_eq!(merged, sorted);
        }
    }

    #[test]
    fn strategies_match_oracle(ps in any_point_set(), workers in 1usize..5) {
        let sigma = SigmaOrder::identity(ps.len());
        let truth = members(&brute_force(&ps, 3).unwrap().sets);
        prop_assert_eq!(&truth, &brute_force_line_keys(&ps, 3).unwrap());
        prop_assert_eq!(&members(&enumerate_baseline(&ps, &sigma, 3).unwrap().sets), &truth);
        prop_assert_eq!(&members(&enumerate_layered(&ps, &sigma, 3).unwrap().sets), &truth);
        prop_assert_eq!(&members(&enumerate_parallel(&ps, &sigma, 3, workers).unwrap().sets), &truth);
    }

    #[test]
    fn min_size_filters_oracle(ps in any_point_set(), min_size in 3usize..6) {
        let sigma = SigmaOrder::identity(ps.len());
        let truth = members(&brute_force(&ps, min_size).unwrap().sets);
        prop_assert_eq!(members(&enumerate_layered(&ps, &sigma, min_size).unwrap().sets), truth.clone());
        prop_assert_eq!(members(&enumerate_parallel(&ps, &sigma, min_size, 3).unwrap().sets), truth);
    }

    #[test]
    fn output_independent_of_sigma(ps in any_point_set(), seed in any::<u64>()) {
        let id = SigmaOrder::identity(ps.len());
        let shuffled = SigmaOrder::shuffled(ps.len(), seed);
        let reversed = SigmaOrder::reversed(ps.len());
        let reference = enumerate_layered(&ps, &id, 3).unwrap().sets;
        prop_assert_eq!(&enumerate_layered(&ps, &shuffled, 3).unwrap().sets, &reference);
        prop_assert_eq!(&enumerate_baseline(&ps, &reversed, 3).unwrap().sets, &reference);
        prop_assert_eq!(&enumerate_parallel(&ps, &shuffled, 3, 2).unwrap().sets, &reference);
    }

    #[test]
    fn translation_invariance(ps in any_point_set(), dx in -1000i64..1000, dy in -1000i64..1000) {
        let moved = PointSet::new(ps.points().iter().map(|p| Point::new(p.x + dx, p.y + dy)).collect()).unwrap();
        let sigma = SigmaOrder::identity(ps.len());
        prop_assert_eq!(
            enumerate_layered(&ps, &sigma, 3).unwrap().sets,
            enumerate_layered(&moved, &sigma, 3).unwrap().sets
        );
    }

    #[test]
    fn extreme_coordinates(
        base in prop::collection::hash_set((-4i64..=4, -4i64..=4), 3..20),
        sx in prop_oneof![Just(1i64), Just(-1)],
    ) {
        // Scale a small set out to the coordinate bound; collinearity is preserved.
        let scale = B / 4;
        let small: Vec<(i64, i64)> = base.iter().copied().collect();
        let big = PointSet::from_coords(small.iter().map(|&(x, y)| (sx * x * scale, y * scale))).unwrap();
        let small = PointSet::from_coords(small).unwrap();
        let sigma = SigmaOrder::identity(small.len());
        let want = enumerate_baseline(&small, &sigma, 3).unwrap().sets;
        prop_assert_eq!(&enumerate_layered(&big, &sigma, 3).unwrap().sets, &want);
        prop_assert_eq!(&enumerate_parallel(&big, &sigma, 3, 2).unwrap().sets, &want);
        prop_assert_eq!(&brute_force(&big, 3).unwrap().sets, &want);
    }
}
