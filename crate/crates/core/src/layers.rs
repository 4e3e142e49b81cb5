//! Convex layers and the per-pivot merge built on them.
//!
//! Every convex layer, seen from a pivot, splits into at most two chains that
//! are already angularly sorted. Each chain is cut where it crosses the
//! horizontal through the pivot, which leaves at most four pieces per layer
//! that are monotone under the folded order. A k-way heap merge of those
//! pieces reproduces the fully sorted sequence around the pivot without
//! sorting.

use std::cmp::Ordering;
use std::collections::binary_heap::PeekMut;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::geometry::{
    cmp_folded, cmp_full_angle, orient, squared_distance, FoldedKey, Orientation, Point, PointSet,
};

/// One convex layer.
///
/// A proper polygon stores its boundary counterclockwise, points on edges
/// included, starting from the lexicographically least vertex. A degenerate
/// layer (at most two points, or all points on one line) stores its points in
/// lexicographic order as an open chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexLayer {
    pub vertices: Vec<usize>,
    pub degenerate: bool,
}

impl ConvexLayer {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Convex hull of `subset`, keeping every point that lies on the boundary.
pub fn convex_hull_with_collinear(subset: &[usize], ps: &PointSet) -> ConvexLayer {
    let mut pts: Vec<usize> = subset.to_vec();
    pts.sort_unstable_by_key(|&i| ps.get(i));
    pts.dedup();

    let k = pts.len();
    if k <= 2 {
        return ConvexLayer {
            vertices: pts,
            degenerate: true,
        };
    }
    let (first, last) = (ps.get(pts[0]), ps.get(pts[k - 1]));
    if pts
        .iter()
        .all(|&i| orient(first, last, ps.get(i)) == Orientation::Collinear)
    {
        return ConvexLayer {
            vertices: pts,
            degenerate: true,
        };
    }

    // Monotone chain. Only strict right turns are popped, so points on hull
    // edges survive.
    let mut hull: Vec<usize> = Vec::with_capacity(k + 1);
    for &i in &pts {
        while hull.len() >= 2
            && orient(
                ps.get(hull[hull.len() - 2]),
                ps.get(hull[hull.len() - 1]),
                ps.get(i),
            ) == Orientation::Clockwise
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower_len = hull.len();
    for &i in pts.iter().rev().skip(1) {
        while hull.len() > lower_len
            && orient(
                ps.get(hull[hull.len() - 2]),
                ps.get(hull[hull.len() - 1]),
                ps.get(i),
            ) == Orientation::Clockwise
        {
            hull.pop();
        }
        hull.push(i);
    }
    // The first point was appended again at the end.
    hull.pop();
    ConvexLayer {
        vertices: hull,
        degenerate: false,
    }
}

/// Onion decomposition of a point set, outermost layer first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    layers: Vec<ConvexLayer>,
    /// `(layer, position)` of every point.
    location: Vec<(usize, usize)>,
}

impl LayerDecomposition {
    /// Accepts any decomposition into convex layers, as long as it partitions
    /// `0..n`. Convexity is not checked here; [`validate_pieces`] catches a
    /// bad layer at merge time.
    pub fn from_layers(layers: Vec<ConvexLayer>, n: usize) -> Result<Self> {
        let mut location = vec![(usize::MAX, usize::MAX); n];
        for (l, layer) in layers.iter().enumerate() {
            for (pos, &v) in layer.vertices.iter().enumerate() {
                if v >= n || location[v].0 != usize::MAX {
                    return Err(Error::MalformedPieces(format!(
                        "layer {l} repeats or misplaces point {v}"
                    )));
                }
                location[v] = (l, pos);
            }
        }
        if let Some(missing) = location.iter().position(|loc| loc.0 == usize::MAX) {
            return Err(Error::MalformedPieces(format!(
                "point {missing} is in no layer"
            )));
        }
        Ok(Self { layers, location })
    }

    pub fn layers(&self) -> &[ConvexLayer] {
        &self.layers
    }

    /// Number of layers.
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn location(&self, index: usize) -> (usize, usize) {
        self.location[index]
    }

    /// Point index referenced by element `t` of `piece`.
    #[inline]
    pub fn vertex(&self, piece: &SortedSubsequence, t: usize) -> usize {
        let layer = &self.layers[piece.layer];
        layer.vertices[piece.position(t, layer.len())]
    }

    /// Splits every layer around `pivot`, appending the pieces to `out`.
    pub fn split_all(&self, pivot: usize, ps: &PointSet, out: &mut Vec<SortedSubsequence>) {
        for (id, layer) in self.layers.iter().enumerate() {
            let on_layer = match self.location[pivot] {
                (l, pos) if l == id => Some(pos),
                _ => None,
            };
            split_layer_at(pivot, id, layer, on_layer, ps, out);
        }
    }
}

/// Peels convex hulls off the remaining points until none are left.
pub fn peel(ps: &PointSet) -> LayerDecomposition {
    let mut remaining: Vec<usize> = (0..ps.len()).collect();
    let mut layers = Vec::new();
    let mut taken = vec![false; ps.len()];
    while !remaining.is_empty() {
        let layer = convex_hull_with_collinear(&remaining, ps);
        for &v in &layer.vertices {
            taken[v] = true;
        }
        remaining.retain(|&i| !taken[i]);
        layers.push(layer);
    }
    LayerDecomposition::from_layers(layers, ps.len()).expect("peeling partitions the input")
}

/// How a pivot sees a proper (non-degenerate) layer. Positions index into
/// the layer's vertex list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangentClass {
    /// Strictly inside, or on an edge without being a vertex. The boundary
    /// cycle is one angularly sorted sequence.
    Inside,
    /// Outside. `right` is the tangent point with every vertex counterclockwise
    /// of or on the ray towards it, `left` the one with every vertex clockwise
    /// of or on it. On a tangent line carrying several vertices the one
    /// nearest the pivot is chosen.
    Outside { right: usize, left: usize },
    /// The pivot is the vertex at `position`; the other vertices, in boundary
    /// order, form one chain.
    PivotOnLayer { position: usize },
}

/// Classifies `pivot` against `layer` with a linear scan. Returns `None` for
/// degenerate layers, which are split directly.
pub fn tangents(pivot: usize, layer: &ConvexLayer, ps: &PointSet) -> Option<TangentClass> {
    if layer.degenerate || layer.len() < 3 {
        return None;
    }
    if let Some(position) = layer.vertices.iter().position(|&v| v == pivot) {
        return Some(TangentClass::PivotOnLayer { position });
    }
    let p = ps.get(pivot);
    let k = layer.len();
    let at = |pos: usize| ps.get(layer.vertices[pos]);
    let outside = (0..k).any(|t| orient(at(t), at((t + 1) % k), p) == Orientation::Clockwise);
    if !outside {
        return Some(TangentClass::Inside);
    }

    // Seen from an outside pivot the layer spans less than a half-turn, so
    // orient() is a valid angular comparison between any two vertices.
    let (mut right, mut left) = (0, 0);
    for t in 1..k {
        let q = at(t);
        match orient(p, at(right), q) {
            Orientation::Clockwise => right = t,
            Orientation::Collinear if squared_distance(p, q) < squared_distance(p, at(right)) => {
                right = t
            }
            _ => {}
        }
        match orient(p, at(left), q) {
            Orientation::CounterClockwise => left = t,
            Orientation::Collinear if squared_distance(p, q) < squared_distance(p, at(left)) => {
                left = t
            }
            _ => {}
        }
    }
    Some(TangentClass::Outside { right, left })
}

/// A run of consecutive layer vertices, stored as bounds only. Traversed in
/// the stated direction, the referenced points are strictly increasing under
/// the folded order around the pivot it was built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SortedSubsequence {
    pub layer: usize,
    pub start: usize,
    pub len: usize,
    pub backward: bool,
}

impl SortedSubsequence {
    /// Position in a layer of `k` vertices of element `t`, wrapping.
    #[inline]
    pub fn position(&self, t: usize, k: usize) -> usize {
        debug_assert!(t < self.len);
        if self.backward {
            (self.start + k - t % k) % k
        } else {
            (self.start + t) % k
        }
    }
}

/// Splits `layer` into folded-monotone pieces around `pivot` and appends
/// them to `out`. At most four pieces are produced for a layer obtained by
/// peeling.
pub fn split_layer(
    pivot: usize,
    layer_id: usize,
    layer: &ConvexLayer,
    ps: &PointSet,
    out: &mut Vec<SortedSubsequence>,
) {
    let on_layer = layer.vertices.iter().position(|&v| v == pivot);
    split_layer_at(pivot, layer_id, layer, on_layer, ps, out);
}

#[derive(Clone, Copy, Debug)]
struct Chain {
    start: usize,
    len: usize,
    backward: bool,
}

fn split_layer_at(
    pivot: usize,
    layer_id: usize,
    layer: &ConvexLayer,
    on_layer: Option<usize>,
    ps: &PointSet,
    out: &mut Vec<SortedSubsequence>,
) {
    let k = layer.len();
    let p = ps.get(pivot);
    let key_at = |pos: usize| FoldedKey::new(p, ps.get(layer.vertices[pos]));
    let mut chains: [Option<Chain>; 2] = [None, None];

    let class = if layer.degenerate || k < 3 {
        None
    } else {
        match on_layer {
            Some(position) => Some(TangentClass::PivotOnLayer { position }),
            None => tangents(pivot, layer, ps),
        }
    };

    match class {
        None => match on_layer {
            // An open chain along one line: the points on either side of the
            // pivot are each ordered by distance.
            Some(pos) => {
                chains[0] = Some(Chain {
                    start: 0,
                    len: pos,
                    backward: false,
                });
                chains[1] = Some(Chain {
                    start: pos + 1,
                    len: k - pos - 1,
                    backward: false,
                });
            }
            None => {
                chains[0] = Some(Chain {
                    start: 0,
                    len: k,
                    backward: false,
                })
            }
        },
        Some(TangentClass::Inside) => {
            let (start, _) = (1..k).fold((0, key_at(0)), |(best, best_key), t| {
                let key = key_at(t);
                if cmp_full_angle(&key, &best_key) == Ordering::Less {
                    (t, key)
                } else {
                    (best, best_key)
                }
            });
            chains[0] = Some(Chain {
                start,
                len: k,
                backward: false,
            });
        }
        Some(TangentClass::Outside { right, left }) => {
            // Both arcs from the right tangent climb to the farthest vertex
            // on the left tangent line; vertices nearer than it on that line
            // belong to the descending arc.
            let (lp, pl) = (ps.get(layer.vertices[left]), p);
            let apex = (0..k)
                .filter(|&t| orient(pl, lp, ps.get(layer.vertices[t])) == Orientation::Collinear)
                .max_by_key(|&t| squared_distance(p, ps.get(layer.vertices[t])))
                .unwrap_or(left);
            let up = (apex + k - right) % k + 1;
            chains[0] = Some(Chain {
                start: right,
                len: up,
                backward: false,
            });
            chains[1] = Some(Chain {
                start: (right + k - 1) % k,
                len: k - up,
                backward: true,
            });
        }
        Some(TangentClass::PivotOnLayer { position }) => {
            // Boundary order after the pivot is angular order, except that
            // vertices on the incoming edge's ray come far to near. Peel
            // that tail off as its own chain.
            let last = (position + k - 1) % k;
            let ray = ps.get(layer.vertices[last]);
            let mut tail = 1;
            while tail < k - 1 {
                let q = ps.get(layer.vertices[(position + k - 1 - tail) % k]);
                let same_ray = orient(p, ray, q) == Orientation::Collinear
                    && (q.x - p.x) as i128 * (ray.x - p.x) as i128
                        + (q.y - p.y) as i128 * (ray.y - p.y) as i128
                        > 0;
                if !same_ray {
                    break;
                }
                tail += 1;
            }
            chains[0] = Some(Chain {
                start: (position + 1) % k,
                len: k - 1 - tail,
                backward: false,
            });
            chains[1] = Some(Chain {
                start: last,
                len: tail,
                backward: true,
            });
        }
    }

    for chain in chains.into_iter().flatten() {
        cut_monotone(chain, layer_id, k, &key_at, out);
    }
}

/// Greedy partition of a chain into maximal strictly monotone runs. A
/// descending run is emitted reversed.
fn cut_monotone(
    chain: Chain,
    layer_id: usize,
    k: usize,
    key_at: &impl Fn(usize) -> FoldedKey,
    out: &mut Vec<SortedSubsequence>,
) {
    let pos = |t: usize| {
        if chain.backward {
            (chain.start + k - t % k) % k
        } else {
            (chain.start + t) % k
        }
    };
    let mut t = 0;
    while t < chain.len {
        let mut end = t;
        let mut ascending = true;
        if t + 1 < chain.len {
            let mut prev = key_at(pos(t));
            let mut next = key_at(pos(t + 1));
            ascending = cmp_folded(&prev, &next) == Ordering::Less;
            end = t + 1;
            while end + 1 < chain.len {
                prev = next;
                next = key_at(pos(end + 1));
                if (cmp_folded(&prev, &next) == Ordering::Less) != ascending {
                    break;
                }
                end += 1;
            }
        }
        let (start, backward) = if ascending {
            (pos(t), chain.backward)
        } else {
            (pos(end), !chain.backward)
        };
        out.push(SortedSubsequence {
            layer: layer_id,
            start,
            len: end - t + 1,
            backward,
        });
        t = end + 1;
    }
}

/// Checks that `pieces` cover every point but the pivot exactly once and
/// that each piece is strictly increasing under the folded order.
pub fn validate_pieces(
    pivot: usize,
    pieces: &[SortedSubsequence],
    layers: &LayerDecomposition,
    ps: &PointSet,
) -> Result<()> {
    let p = ps.get(pivot);
    let mut seen = vec![false; ps.len()];
    seen[pivot] = true;
    for (n, piece) in pieces.iter().enumerate() {
        if piece.layer >= layers.depth() || piece.len > layers.layers[piece.layer].len() {
            return Err(Error::MalformedPieces(format!("piece {n} is out of range")));
        }
        let mut prev: Option<FoldedKey> = None;
        for t in 0..piece.len {
            let v = layers.vertex(piece, t);
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::MalformedPieces(format!(
                    "point {v} covered twice (piece {n})"
                )));
            }
            let key = FoldedKey::new(p, ps.get(v));
            if let Some(prev) = prev {
                if cmp_folded(&prev, &key) != Ordering::Less {
                    return Err(Error::MalformedPieces(format!(
                        "piece {n} is not increasing at element {t}"
                    )));
                }
            }
            prev = Some(key);
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::MalformedPieces(format!(
            "point {missing} is in no piece"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
struct HeapItem {
    key: FoldedKey,
    index: usize,
    piece: u32,
    offset: u32,
}

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapItem {}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Reversed: BinaryHeap is a max-heap.
impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_folded(&other.key, &self.key)
    }
}

/// K-way merge of sorted pieces by the folded order. Yields every point
/// except the pivot, with its key. The heap never holds more than one entry
/// per piece.
pub struct HeapMerge<'a> {
    origin: Point,
    ps: &'a PointSet,
    layers: &'a LayerDecomposition,
    pieces: &'a [SortedSubsequence],
    heap: BinaryHeap<HeapItem>,
    peak: usize,
    #[cfg(debug_assertions)]
    last: Option<FoldedKey>,
}

impl<'a> HeapMerge<'a> {
    pub fn new(
        pivot: usize,
        pieces: &'a [SortedSubsequence],
        layers: &'a LayerDecomposition,
        ps: &'a PointSet,
    ) -> Self {
        let origin = ps.get(pivot);
        let mut heap = BinaryHeap::with_capacity(pieces.len());
        for (n, piece) in pieces.iter().enumerate() {
            if piece.len > 0 {
                let index = layers.vertex(piece, 0);
                heap.push(HeapItem {
                    key: FoldedKey::new(origin, ps.get(index)),
                    index,
                    piece: n as u32,
                    offset: 0,
                });
            }
        }
        let peak = heap.len();
        Self {
            origin,
            ps,
            layers,
            pieces,
            heap,
            peak,
            #[cfg(debug_assertions)]
            last: None,
        }
    }

    /// Largest heap occupancy observed so far.
    pub fn peak_len(&self) -> usize {
        self.peak
    }
}

impl Iterator for HeapMerge<'_> {
    type Item = (usize, FoldedKey);

    fn next(&mut self) -> Option<Self::Item> {
        let mut top = self.heap.peek_mut()?;
        let (index, key) = (top.index, top.key);
        let piece = &self.pieces[top.piece as usize];
        let offset = top.offset as usize + 1;
        if offset < piece.len {
            // Replace the head in place: one sift-down instead of pop + push.
            let next = self.layers.vertex(piece, offset);
            top.key = FoldedKey::new(self.origin, self.ps.get(next));
            top.index = next;
            top.offset = offset as u32;
            drop(top);
        } else {
            PeekMut::pop(top);
        }
        #[cfg(debug_assertions)]
        {
            if let Some(last) = self.last {
                debug_assert_eq!(
                    cmp_folded(&last, &key),
                    Ordering::Less,
                    "merge input pieces are not sorted"
                );
            }
            self.last = Some(key);
        }
        Some((index, key))
    }
}

/// Merges the pieces into the folded sequence around `pivot`.
pub fn heap_merge<'a>(
    pivot: usize,
    pieces: &'a [SortedSubsequence],
    layers: &'a LayerDecomposition,
    ps: &'a PointSet,
) -> HeapMerge<'a> {
    HeapMerge::new(pivot, pieces, layers, ps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::build_merged;

    fn ps(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(coords.iter().copied()).unwrap()
    }

    fn coords(layer: &ConvexLayer, set: &PointSet) -> Vec<(i64, i64)> {
        layer
            .vertices
            .iter()
            .map(|&i| (set[i].x, set[i].y))
            .collect()
    }

    fn grid(w: i64, h: i64) -> PointSet {
        PointSet::from_coords((0..w).flat_map(|x| (0..h).map(move |y| (x, y)))).unwrap()
    }

    #[test]
    fn hull_keeps_edge_midpoint() {
        let set = ps(&[(0, 0), (2, 0), (1, 0), (1, 1)]);
        let hull = convex_hull_with_collinear(&[0, 1, 2, 3], &set);
        assert!(!hull.degenerate);
        assert_eq!(coords(&hull, &set), vec![(0, 0), (1, 0), (2, 0), (1, 1)]);
    }

    #[test]
    fn hull_degenerate_cases() {
        let set = ps(&[(0, 0)]);
        let hull = convex_hull_with_collinear(&[0], &set);
        assert!(hull.degenerate);
        assert_eq!(hull.vertices, vec![0]);

        let set = ps(&[(2, 2), (0, 0), (1, 1)]);
        let hull = convex_hull_with_collinear(&[0, 1, 2], &set);
        assert!(hull.degenerate);
        assert_eq!(coords(&hull, &set), vec![(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn hull_vertical_edges() {
        let set = ps(&[(0, 0), (0, 1), (0, 2), (1, 1)]);
        let hull = convex_hull_with_collinear(&[0, 1, 2, 3], &set);
        assert_eq!(coords(&hull, &set), vec![(0, 0), (1, 1), (0, 2), (0, 1)]);
    }

    #[test]
    fn peel_grid_3x3() {
        let set = grid(3, 3);
        let layers = peel(&set);
        assert_eq!(layers.depth(), 2);
        assert_eq!(layers.layers()[0].len(), 8);
        assert_eq!(coords(&layers.layers()[1], &set), vec![(1, 1)]);
    }

    #[test]
    fn peel_convex_and_collinear() {
        let set = ps(&[(0, 0), (4, 0), (5, 3), (2, 6), (-1, 3)]);
        assert_eq!(peel(&set).depth(), 1);
        let set = ps(&[(0, 0), (3, 3), (1, 1), (2, 2), (-5, -5)]);
        let layers = peel(&set);
        assert_eq!(layers.depth(), 1);
        assert!(layers.layers()[0].degenerate);
    }

    #[test]
    fn tangents_outside_square() {
        let set = ps(&[(0, 0), (1, 0), (1, 1), (0, 1), (10, 0)]);
        let layer = convex_hull_with_collinear(&[0, 1, 2, 3], &set);
        let Some(TangentClass::Outside { right, left }) = tangents(4, &layer, &set) else {
            panic!("expected outside");
        };
        let right = layer.vertices[right];
        let left = layer.vertices[left];
        // Lower tangent line y = 0 carries (0,0) and (1,0); (1,0) is nearer.
        assert_eq!((set[right].x, set[right].y), (1, 1));
        assert_eq!((set[left].x, set[left].y), (1, 0));
    }

    #[test]
    fn tangents_inside_and_on_layer() {
        let set = ps(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]);
        let layer = convex_hull_with_collinear(&[0, 1, 2, 3], &set);
        assert_eq!(tangents(4, &layer, &set), Some(TangentClass::Inside));
        assert!(matches!(
            tangents(2, &layer, &set),
            Some(TangentClass::PivotOnLayer { .. })
        ));
        let set = ps(&[(0, 0), (1, 1), (3, 3)]);
        let layer = convex_hull_with_collinear(&[0, 1], &set);
        assert_eq!(tangents(2, &layer, &set), None);
    }

    fn pieces_for(pivot: usize, layer: &ConvexLayer, set: &PointSet) -> Vec<SortedSubsequence> {
        let mut out = Vec::new();
        split_layer(pivot, 0, layer, set, &mut out);
        out
    }

    fn check_pieces(
        pivot: usize,
        layer: &ConvexLayer,
        set: &PointSet,
        pieces: &[SortedSubsequence],
    ) {
        let p = set.get(pivot);
        let mut covered: Vec<usize> = Vec::new();
        for piece in pieces {
            let mut prev: Option<FoldedKey> = None;
            for t in 0..piece.len {
                let v = layer.vertices[piece.position(t, layer.len())];
                let key = FoldedKey::new(p, set.get(v));
                if let Some(prev) = prev {
                    assert_eq!(cmp_folded(&prev, &key), Ordering::Less);
                }
                prev = Some(key);
                covered.push(v);
            }
        }
        covered.sort_unstable();
        let mut expect: Vec<usize> = layer
            .vertices
            .iter()
            .copied()
            .filter(|&v| v != pivot)
            .collect();
        expect.sort_unstable();
        assert_eq!(covered, expect);
        assert!(pieces.len() <= 4, "{} pieces", pieces.len());
    }

    #[test]
    fn split_outside_triangle() {
        let set = ps(&[(0, 0), (4, 0), (2, 3), (-3, 1)]);
        let layer = convex_hull_with_collinear(&[0, 1, 2], &set);
        let pieces = pieces_for(3, &layer, &set);
        check_pieces(3, &layer, &set, &pieces);
    }

    #[test]
    fn split_inside_square() {
        let set = ps(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]);
        let layer = convex_hull_with_collinear(&[0, 1, 2, 3], &set);
        let pieces = pieces_for(4, &layer, &set);
        check_pieces(4, &layer, &set, &pieces);
        assert!(pieces.len() <= 2);
    }

    #[test]
    fn split_collinear_chain() {
        let set = ps(&[(0, 0), (1, 1), (2, 2), (3, 3)]);
        let layer = convex_hull_with_collinear(&[1, 2, 3], &set);
        let pieces = pieces_for(0, &layer, &set);
        assert_eq!(pieces.len(), 1);
        check_pieces(0, &layer, &set, &pieces);
    }

    #[test]
    fn split_with_tangent_edge_through_pivot() {
        // The bottom edge lies on the lower tangent ray from the pivot.
        let set = ps(&[(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (20, 0)]);
        let layer = convex_hull_with_collinear(&[0, 1, 2, 3, 4], &set);
        let pieces = pieces_for(5, &layer, &set);
        check_pieces(5, &layer, &set, &pieces);
    }

    #[test]
    fn split_pivot_on_boundary_edge() {
        // Pivot in the middle of an edge but not a vertex of this layer.
        let set = ps(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 0), (1, 0), (3, 0)]);
        let layer = convex_hull_with_collinear(&[0, 1, 2, 3, 5, 6], &set);
        assert_eq!(tangents(4, &layer, &set), Some(TangentClass::Inside));
        let pieces = pieces_for(4, &layer, &set);
        check_pieces(4, &layer, &set, &pieces);
    }

    #[test]
    fn split_pivot_is_collinear_vertex() {
        let set = ps(&[(0, 0), (1, 0), (2, 0), (3, 0), (3, 3), (0, 3)]);
        let layer = convex_hull_with_collinear(&[0, 1, 2, 3, 4, 5], &set);
        for pivot in 0..set.len() {
            let pieces = pieces_for(pivot, &layer, &set);
            check_pieces(pivot, &layer, &set, &pieces);
        }
    }

    #[test]
    fn heap_merge_single_piece_is_identity() {
        let set = ps(&[(0, 0), (1, 1), (2, 2), (3, 3)]);
        let layers = LayerDecomposition::from_layers(
            vec![
                ConvexLayer {
                    vertices: vec![0],
                    degenerate: true,
                },
                convex_hull_with_collinear(&[1, 2, 3], &set),
            ],
            4,
        )
        .unwrap();
        let mut pieces = Vec::new();
        layers.split_all(0, &set, &mut pieces);
        assert_eq!(pieces.len(), 1);
        let merged: Vec<usize> = heap_merge(0, &pieces, &layers, &set)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(merged, vec![1, 2, 3]);
    }

    #[test]
    fn heap_merge_grid_corner_lines_adjacent() {
        let set = grid(3, 3);
        let layers = peel(&set);
        let corner = set
            .points()
            .iter()
            .position(|q| *q == Point::new(0, 0))
            .unwrap();
        let mut pieces = Vec::new();
        layers.split_all(corner, &set, &mut pieces);
        validate_pieces(corner, &pieces, &layers, &set).unwrap();
        let stream: Vec<Point> = heap_merge(corner, &pieces, &layers, &set)
            .map(|(i, _)| set.get(i))
            .collect();
        let adjacent = |a: Point, b: Point| {
            stream
                .windows(2)
                .any(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))
        };
        assert!(adjacent(Point::new(1, 1), Point::new(2, 2)));
        assert!(adjacent(Point::new(1, 0), Point::new(2, 0)));
        assert!(adjacent(Point::new(0, 1), Point::new(0, 2)));
        let expected: Vec<Point> = build_merged(corner, &set)
            .indices()
            .map(|i| set.get(i))
            .collect();
        assert_eq!(stream, expected);
    }

    #[test]
    fn validate_rejects_bad_pieces() {
        let set = grid(3, 3);
        let layers = peel(&set);
        let mut pieces = Vec::new();
        layers.split_all(4, &set, &mut pieces);
        assert!(validate_pieces(4, &pieces, &layers, &set).is_ok());
        let mut dup = pieces.clone();
        dup.push(pieces[0]);
        assert!(validate_pieces(4, &dup, &layers, &set).is_err());
        assert!(validate_pieces(4, &pieces[1..], &layers, &set).is_err());
        let mut flipped = pieces.clone();
        if let Some(long) = flipped.iter_mut().find(|p| p.len >= 2) {
            long.start = long.position(long.len - 1, layers.layers()[long.layer].len());
            long.backward = !long.backward;
        }
        assert!(validate_pieces(4, &flipped, &layers, &set).is_err());
    }

    #[test]
    fn from_layers_rejects_non_partition() {
        let one = ConvexLayer {
            vertices: vec![0, 1],
            degenerate: true,
        };
        assert!(LayerDecomposition::from_layers(vec![one.clone()], 3).is_err());
        assert!(LayerDecomposition::from_layers(vec![one.clone(), one], 2).is_err());
    }
}
