#![allow(dead_code)]

use collinear::cli::GenSpec;
use collinear::PointSet;
use proptest::prelude::*;

pub fn grid(w: i64, h: i64) -> PointSet {
    GenSpec::Grid { w, h }.generate(0).unwrap()
}

pub fn members(sets: &[collinear::CollinearSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.members.clone()).collect()
}

/// Distinct points in `[-bound, bound]^2`, small enough for the oracle.
pub fn point_set(max_n: usize, bound: i64) -> impl Strategy<Value = PointSet> {
    prop::collection::hash_set((-bound..=bound, -bound..=bound), 1..=max_n).prop_map(|s| {
        let mut v: Vec<_> = s.into_iter().collect();
        v.sort();
        PointSet::from_coords(v).unwrap()
    })
}

/// Point sets with several points forced onto a few lines.
pub fn lined_point_set() -> impl Strategy<Value = PointSet> {
    (1u64..u64::MAX, 1usize..4, 3usize..8, 0usize..15).prop_map(|(seed, lines, per_line, noise)| {
        GenSpec::Planted {
            lines,
            per_line,
            noise,
            bound: 12,
        }
        .generate(seed)
        .unwrap()
    })
}

pub fn any_point_set() -> impl Strategy<Value = PointSet> {
    prop_oneof![point_set(40, 6), point_set(30, 20), lined_point_set()]
}
