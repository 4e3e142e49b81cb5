//! Exact integer predicates.
//!
//! Coordinates are bounded by `|c| <= 2^30`. Coordinate differences then fit
//! in 31 bits plus sign, each product of two differences in 62 bits, and a
//! cross product or squared length in 63 bits. All intermediates are computed
//! in `i128`, which leaves more than 60 bits of headroom, so no predicate in
//! this module can overflow on a validated [`PointSet`].
//!
//! Angles are never evaluated. The counterclockwise angle of `q` around `p`
//! is represented by the pair (`from_lower_half`, folded direction), and all
//! comparisons reduce to signs of cross products.

use std::cmp::Ordering;
use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted absolute coordinate value.
pub const COORD_BOUND: i64 = 1 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn in_bounds(&self) -> bool {
        self.x.abs() <= COORD_BOUND && self.y.abs() <= COORD_BOUND
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

/// A validated, indexed set of distinct points. The position of a point in
/// the set is its identity everywhere else in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Validates bounds and distinctness. Rejects empty input.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen: HashMap<Point, usize> = HashMap::with_capacity(points.len());
        for (index, &pt) in points.iter().enumerate() {
            if !pt.in_bounds() {
                return Err(Error::CoordinateOutOfRange {
                    index,
                    x: pt.x,
                    y: pt.y,
                });
            }
            if let Some(&first) = seen.get(&pt) {
                return Err(Error::DuplicatePoint {
                    first,
                    second: index,
                    x: pt.x,
                    y: pt.y,
                });
            }
            seen.insert(pt, index);
        }
        Ok(Self { points })
    }

    pub fn from_coords<I>(coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::new(coords.into_iter().map(Point::from).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false for a constructed set; present for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn get(&self, index: usize) -> Point {
        self.points[index]
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;

    fn index(&self, index: usize) -> &Point {
        &self.points[index]
    }
}

/// The processing order of pivots. A collinear set is reported only by its
/// member that comes first in this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaOrder {
    rank: Vec<usize>,
    order: Vec<usize>,
}

impl SigmaOrder {
    /// Input order: point `i` has rank `i`.
    pub fn identity(n: usize) -> Self {
        let order: Vec<usize> = (0..n).collect();
        Self {
            rank: order.clone(),
            order,
        }
    }

    /// Builds the order from the sequence of point indices in processing order.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &idx) in order.iter().enumerate() {
            if idx >= n || rank[idx] != usize::MAX {
                return Err(Error::InvalidSigma { n });
            }
            rank[idx] = pos;
        }
        Ok(Self { rank, order })
    }

    /// A deterministic pseudo-random permutation.
    pub fn shuffled(n: usize, seed: u64) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self::from_order(order).expect("shuffle yields a permutation")
    }

    pub fn reversed(n: usize) -> Self {
        Self::from_order((0..n).rev().collect()).expect("reversal is a permutation")
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn rank(&self, index: usize) -> usize {
        self.rank[index]
    }

    /// Point indices in processing order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn signum(self) -> i32 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }

    fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Greater => Orientation::CounterClockwise,
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
        }
    }
}

#[inline]
fn cross(ax: i128, ay: i128, bx: i128, by: i128) -> i128 {
    ax * by - ay * bx
}

/// Sign of `(b - a) x (c - a)`: counterclockwise when `a, b, c` turn left.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> Orientation {
    let v = cross(
        (b.x - a.x) as i128,
        (b.y - a.y) as i128,
        (c.x - a.x) as i128,
        (c.y - a.y) as i128,
    );
    Orientation::from_ordering(v.cmp(&0))
}

#[inline]
pub fn squared_distance(a: Point, b: Point) -> i128 {
    let dx = (b.x - a.x) as i128;
    let dy = (b.y - a.y) as i128;
    dx * dx + dy * dy
}

/// Direction from a pivot folded into the closed upper half-plane, minus the
/// negative x-axis. `from_lower_half` is set when the unfolded angle lies in
/// `[pi, 2 pi)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FoldedDirection {
    pub dx: i64,
    pub dy: i64,
    pub from_lower_half: bool,
}

impl FoldedDirection {
    /// Cross product of the two folded vectors. Positive when `other` is at a
    /// strictly larger folded angle.
    #[inline]
    pub fn cross(&self, other: &FoldedDirection) -> i128 {
        cross(
            self.dx as i128,
            self.dy as i128,
            other.dx as i128,
            other.dy as i128,
        )
    }

    #[inline]
    pub fn same_line(&self, other: &FoldedDirection) -> bool {
        self.cross(other) == 0
    }
}

/// Folds the direction `q - p`. Returns `None` when `p == q`.
#[inline]
pub fn fold_direction(p: Point, q: Point) -> Option<FoldedDirection> {
    let dx = q.x - p.x;
    let dy = q.y - p.y;
    if dy > 0 || (dy == 0 && dx > 0) {
        Some(FoldedDirection {
            dx,
            dy,
            from_lower_half: false,
        })
    } else if dx == 0 && dy == 0 {
        None
    } else {
        Some(FoldedDirection {
            dx: -dx,
            dy: -dy,
            from_lower_half: true,
        })
    }
}

/// Sort key of a point around a pivot: folded direction plus squared distance.
/// For coordinates within the bound the squared distance is below 2^63.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FoldedKey {
    pub dir: FoldedDirection,
    pub dist2: u64,
}

impl FoldedKey {
    /// Panics if `p == q`.
    #[inline]
    pub fn new(p: Point, q: Point) -> Self {
        debug_assert!(p.in_bounds() && q.in_bounds());
        Self {
            dir: fold_direction(p, q).expect("pivot and target must be distinct"),
            dist2: squared_distance(p, q) as u64,
        }
    }
}

/// Folded-angle order: folded angle, then upper half before lower half, then
/// nearer before farther. Strict total order over distinct points around one
/// pivot.
#[inline]
pub fn cmp_folded(u: &FoldedKey, v: &FoldedKey) -> Ordering {
    // Both vectors sit in the half-open upper half-plane, so the cross
    // product sign is an exact angular comparison.
    match v.dir.cross(&u.dir).cmp(&0) {
        Ordering::Equal => u
            .dir
            .from_lower_half
            .cmp(&v.dir.from_lower_half)
            .then(u.dist2.cmp(&v.dist2)),
        ord => ord,
    }
}

/// Unfolded counterclockwise-angle order in `[0, 2 pi)`, nearer first on ties.
#[inline]
pub fn cmp_full_angle(u: &FoldedKey, v: &FoldedKey) -> Ordering {
    u.dir
        .from_lower_half
        .cmp(&v.dir.from_lower_half)
        .then_with(|| v.dir.cross(&u.dir).cmp(&0))
        .then(u.dist2.cmp(&v.dist2))
}
