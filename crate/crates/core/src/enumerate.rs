//! End-to-end strategies.
//!
//! * baseline: sort every point around each pivot, `O(n^2 log n)`.
//! * layered: peel once, then per pivot merge at most `4m` sorted pieces of
//!   the layers with a heap, `O(n^2 log m)`.
//! * parallel: the layered strategy with pivots spread over a worker pool.
//!   Each worker keeps only the piece bounds and the heap, and detects runs
//!   directly on the merge stream.
//!
//! All three report through [`canonicalize`], so their outputs compare with
//! plain equality.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cyclic::{
    build_merged, detect_runs, filter_first_in_sigma, CollinearRun, MergedEntry, MergedSequence,
    RunScanner,
};
use crate::error::{Error, Result};
use crate::geometry::{PointSet, SigmaOrder};
use crate::layers::{heap_merge, peel, LayerDecomposition, SortedSubsequence};

/// Default minimum reported set size.
pub const DEFAULT_MIN_SIZE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Baseline,
    Layered,
    Parallel,
    Oracle,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Baseline => "baseline",
            Strategy::Layered => "layered",
            Strategy::Parallel => "parallel",
            Strategy::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "baseline" => Ok(Strategy::Baseline),
            "layered" => Ok(Strategy::Layered),
            "parallel" => Ok(Strategy::Parallel),
            "oracle" => Ok(Strategy::Oracle),
            other => Err(format!("unknown algorithm '{other}'")),
        }
    }
}

/// A maximal collinear subset; members ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CollinearSet {
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub n: usize,
    /// Peeling depth, when the strategy computed one.
    pub m: Option<usize>,
    pub strategy: Strategy,
    pub workers: usize,
    #[serde(rename = "ms")]
    #[serde(serialize_with = "ser_ms")]
    pub elapsed: Duration,
    /// Most pieces produced for a single pivot.
    pub max_pieces: usize,
    /// Largest heap occupancy seen during any merge.
    pub max_heap: usize,
    /// Per-worker scratch in words summed over the pool plus the shared
    /// input: `n + workers * m`.
    pub space_words: usize,
    /// The same figure with one worker per point: `n * m`.
    pub per_point_space_words: usize,
}

fn ser_ms<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl Stats {
    fn new(n: usize, strategy: Strategy) -> Self {
        Self {
            n,
            m: None,
            strategy,
            workers: 1,
            elapsed: Duration::ZERO,
            max_pieces: 0,
            max_heap: 0,
            space_words: n,
            per_point_space_words: n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationResult {
    pub sets: Vec<CollinearSet>,
    pub stats: Stats,
}

impl EnumerationResult {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Sorts members and sets. A set seen twice means some pivot reported a set
/// it did not own, which is a consistency failure.
pub fn canonicalize(raw: Vec<Vec<usize>>) -> Result<Vec<CollinearSet>> {
    let mut sets: Vec<CollinearSet> = raw
        .into_iter()
        .map(|mut members| {
            members.sort_unstable();
            CollinearSet { members }
        })
        .collect();
    sets.sort_unstable();
    if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateSet(w[0].members.clone()));
    }
    Ok(sets)
}

fn check_inputs(ps: &PointSet, sigma: &SigmaOrder, min_size: usize) -> Result<()> {
    if min_size < DEFAULT_MIN_SIZE {
        return Err(Error::InvalidMinSize(min_size));
    }
    if sigma.len() != ps.len() {
        return Err(Error::InvalidSigma { n: ps.len() });
    }
    Ok(())
}

pub fn enumerate_baseline(
    ps: &PointSet,
    sigma: &SigmaOrder,
    min_size: usize,
) -> Result<EnumerationResult> {
    check_inputs(ps, sigma, min_size)?;
    let start = Instant::now();
    let mut stats = Stats::new(ps.len(), Strategy::Baseline);
    let mut raw = Vec::new();
    if ps.len() >= min_size {
        for &p in sigma.order() {
            let merged = build_merged(p, ps);
            raw.extend(
                detect_runs(&merged, min_size)
                    .into_iter()
                    .filter(|run| filter_first_in_sigma(run, sigma))
                    .map(|run| run.to_set()),
            );
        }
    }
    let sets = canonicalize(raw)?;
    stats.elapsed = start.elapsed();
    Ok(EnumerationResult { sets, stats })
}

/// Layered strategy; peels the input first.
pub fn enumerate_layered(
    ps: &PointSet,
    sigma: &SigmaOrder,
    min_size: usize,
) -> Result<EnumerationResult> {
    let start = Instant::now();
    let layers = peel(ps);
    let mut result = enumerate_layered_with(ps, sigma, min_size, &layers)?;
    result.stats.elapsed = start.elapsed();
    Ok(result)
}

/// Layered strategy over a caller-supplied decomposition.
pub fn enumerate_layered_with(
    ps: &PointSet,
    sigma: &SigmaOrder,
    min_size: usize,
    layers: &LayerDecomposition,
) -> Result<EnumerationResult> {
    check_inputs(ps, sigma, min_size)?;
    let start = Instant::now();
    let mut stats = Stats::new(ps.len(), Strategy::Layered);
    let m = layers.depth();
    stats.m = Some(m);
    stats.space_words = ps.len() + m;
    stats.per_point_space_words = ps.len() * m;
    let mut raw = Vec::new();
    if ps.len() >= min_size {
        let mut pieces: Vec<SortedSubsequence> = Vec::with_capacity(4 * m);
        for &p in sigma.order() {
            pieces.clear();
            layers.split_all(p, ps, &mut pieces);
            stats.max_pieces = stats.max_pieces.max(pieces.len());
            let mut stream = heap_merge(p, &pieces, layers, ps);
            let entries: Vec<MergedEntry> = stream
                .by_ref()
                .map(|(index, key)| MergedEntry { index, key })
                .collect();
            stats.max_heap = stats.max_heap.max(stream.peak_len());
            let merged = MergedSequence { pivot: p, entries };
            raw.extend(
                detect_runs(&merged, min_size)
                    .into_iter()
                    .filter(|run| filter_first_in_sigma(run, sigma))
                    .map(|run| run.to_set()),
            );
        }
    }
    let sets = canonicalize(raw)?;
    stats.elapsed = start.elapsed();
    Ok(EnumerationResult { sets, stats })
}

/// Parallel strategy; peels the input first.
pub fn enumerate_parallel(
    ps: &PointSet,
    sigma: &SigmaOrder,
    min_size: usize,
    workers: usize,
) -> Result<EnumerationResult> {
    let start = Instant::now();
    let layers = peel(ps);
    let mut result = enumerate_parallel_with(ps, sigma, min_size, workers, &layers)?;
    result.stats.elapsed = start.elapsed();
    Ok(result)
}

#[derive(Default)]
struct WorkerOutput {
    sets: Vec<Vec<usize>>,
    max_pieces: usize,
    max_heap: usize,
}

/// Pivots handed out per grab from the shared counter.
const CHUNK: usize = 8;

pub fn enumerate_parallel_with(
    ps: &PointSet,
    sigma: &SigmaOrder,
    min_size: usize,
    workers: usize,
    layers: &LayerDecomposition,
) -> Result<EnumerationResult> {
    if workers == 0 {
        return Err(Error::ZeroWorkers);
    }
    check_inputs(ps, sigma, min_size)?;
    let start = Instant::now();
    let n = ps.len();
    let m = layers.depth();
    let mut stats = Stats::new(n, Strategy::Parallel);
    stats.m = Some(m);
    stats.workers = workers;
    stats.space_words = n + workers * m;
    stats.per_point_space_words = n * m;

    let outputs: Vec<WorkerOutput> = if n < min_size {
        Vec::new()
    } else {
        let next = AtomicUsize::new(0);
        let order = sigma.order();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    let next = &next;
                    scope.spawn(move || {
                        let mut out = WorkerOutput::default();
                        let mut pieces: Vec<SortedSubsequence> = Vec::with_capacity(4 * m);
                        loop {
                            let from = next.fetch_add(CHUNK, Ordering::Relaxed);
                            if from >= order.len() {
                                break;
                            }
                            for &p in &order[from..(from + CHUNK).min(order.len())] {
                                stream_pivot(p, ps, sigma, min_size, layers, &mut pieces, &mut out);
                            }
                        }
                        out
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };

    let mut raw = Vec::new();
    for out in outputs {
        stats.max_pieces = stats.max_pieces.max(out.max_pieces);
        stats.max_heap = stats.max_heap.max(out.max_heap);
        raw.extend(out.sets);
    }
    let sets = canonicalize(raw)?;
    stats.elapsed = start.elapsed();
    Ok(EnumerationResult { sets, stats })
}

/// One pivot without materializing the merged sequence: runs are detected
/// and filtered as points leave the heap.
fn stream_pivot(
    p: usize,
    ps: &PointSet,
    sigma: &SigmaOrder,
    min_size: usize,
    layers: &LayerDecomposition,
    pieces: &mut Vec<SortedSubsequence>,
    out: &mut WorkerOutput,
) {
    pieces.clear();
    layers.split_all(p, ps, pieces);
    out.max_pieces = out.max_pieces.max(pieces.len());
    let mut scanner = RunScanner::new(p, min_size, Some(sigma));
    let mut emit = |run: CollinearRun| out.sets.push(run.to_set());
    let mut stream = heap_merge(p, pieces, layers, ps);
    for (index, key) in stream.by_ref() {
        if let Some(run) = scanner.push(index, &key.dir) {
            emit(run);
        }
    }
    if let Some(run) = scanner.finish() {
        emit(run);
    }
    out.max_heap = out.max_heap.max(stream.peak_len());
}

/// Runs the named strategy with input-order sigma. `Oracle` dispatches to
/// [`crate::oracle::brute_force`].
pub fn enumerate(
    ps: &PointSet,
    sigma: &SigmaOrder,
    strategy: Strategy,
    min_size: usize,
    workers: usize,
) -> Result<EnumerationResult> {
    match strategy {
        Strategy::Baseline => enumerate_baseline(ps, sigma, min_size),
        Strategy::Layered => enumerate_layered(ps, sigma, min_size),
        Strategy::Parallel => enumerate_parallel(ps, sigma, min_size, workers),
        Strategy::Oracle => crate::oracle::brute_force(ps, min_size),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(w: i64, h: i64) -> PointSet {
        PointSet::from_coords((0..w).flat_map(|x| (0..h).map(move |y| (x, y)))).unwrap()
    }

    fn members(r: &EnumerationResult) -> Vec<Vec<usize>> {
        r.sets.iter().map(|s| s.members.clone()).collect()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            canonicalize(vec![vec![2, 0, 1]]).unwrap(),
            vec![CollinearSet {
                members: vec![0, 1, 2]
            }]
        );
        let out = canonicalize(vec![vec![3, 4, 5], vec![0, 1, 2]]).unwrap();
        assert_eq!(out[0].members, vec![0, 1, 2]);
        assert_eq!(out[1].members, vec![3, 4, 5]);
        assert_eq!(
            canonicalize(vec![vec![0, 1, 2], vec![2, 1, 0]]),
            Err(Error::DuplicateSet(vec![0, 1, 2]))
        );
    }

    #[test]
    fn baseline_examples() {
        let ps = PointSet::from_coords([(0, 0), (1, 1), (2, 2)]).unwrap();
        let sigma = SigmaOrder::identity(3);
        assert_eq!(
            members(&enumerate_baseline(&ps, &sigma, 3).unwrap()),
            vec![vec![0, 1, 2]]
        );
        let ps = PointSet::from_coords([(0, 0), (1, 0), (0, 1)]).unwrap();
        assert!(enumerate_baseline(&ps, &sigma, 3).unwrap().is_empty());
    }

    #[test]
    fn all_strategies_on_grid() {
        let ps = grid(3, 3);
        let sigma = SigmaOrder::identity(9);
        let base = enumerate_baseline(&ps, &sigma, 3).unwrap();
        assert_eq!(base.len(), 8);
        let layered = enumerate_layered(&ps, &sigma, 3).unwrap();
        assert_eq!(layered.sets, base.sets);
        assert_eq!(layered.stats.m, Some(2));
        for workers in [1, 2, 4] {
            let par = enumerate_parallel(&ps, &sigma, 3, workers).unwrap();
            assert_eq!(par.sets, base.sets);
        }
    }

    #[test]
    fn small_inputs_and_errors() {
        let ps = PointSet::from_coords([(0, 0), (1, 1)]).unwrap();
        let sigma = SigmaOrder::identity(2);
        assert!(enumerate_layered(&ps, &sigma, 3).unwrap().is_empty());
        assert!(enumerate_parallel(&ps, &sigma, 3, 2).unwrap().is_empty());
        assert_eq!(
            enumerate_parallel(&ps, &sigma, 3, 0),
            Err(Error::ZeroWorkers)
        );
        assert_eq!(
            enumerate_baseline(&ps, &sigma, 2),
            Err(Error::InvalidMinSize(2))
        );
        assert!(matches!(
            enumerate_baseline(&ps, &SigmaOrder::identity(3), 3),
            Err(Error::InvalidSigma { .. })
        ));
    }

    #[test]
    fn strategy_parse_roundtrip() {
        for s in [
            Strategy::Baseline,
            Strategy::Layered,
            Strategy::Parallel,
            Strategy::Oracle,
        ] {
            assert_eq!(s.as_str().parse::<Strategy>(), Ok(s));
        }
        assert!("quick".parse::<Strategy>().is_err());
    }
}
