//! Per-pivot cyclic ordering: build the folded sequence around a pivot,
//! find maximal runs of points sharing a line through it, and keep only the
//! runs whose pivot is the first member in sigma order.

use crate::geometry::{cmp_folded, FoldedDirection, FoldedKey, PointSet, SigmaOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MergedEntry {
    pub index: usize,
    pub key: FoldedKey,
}

/// Every point except the pivot, sorted by folded angle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedSequence {
    pub pivot: usize,
    pub entries: Vec<MergedEntry>,
}

impl MergedSequence {
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.index)
    }
}

/// Points that lie on one line through `pivot`, not including the pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearRun {
    pub pivot: usize,
    pub members: Vec<usize>,
}

impl CollinearRun {
    /// Members plus the pivot, ascending.
    pub fn to_set(&self) -> Vec<usize> {
        let mut set = Vec::with_capacity(self.members.len() + 1);
        set.push(self.pivot);
        set.extend_from_slice(&self.members);
        set.sort_unstable();
        set
    }
}

/// Sorts all points around `pivot` directly by the folded comparator.
///
/// Splitting the unfolded cyclic order into upper and lower halves and then
/// merging by folded angle produces the same sequence, because each half is
/// sorted under both angles. The layered strategy performs that merge
/// literally.
pub fn build_merged(pivot: usize, ps: &PointSet) -> MergedSequence {
    let origin = ps.get(pivot);
    let mut entries: Vec<MergedEntry> = ps
        .points()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pivot)
        .map(|(index, &q)| MergedEntry {
            index,
            key: FoldedKey::new(origin, q),
        })
        .collect();
    entries.sort_unstable_by(|a, b| cmp_folded(&a.key, &b.key));
    MergedSequence { pivot, entries }
}

/// Linear scan for maximal blocks with a common folded direction. Blocks with
/// fewer than `min_size - 1` members are dropped.
pub fn detect_runs(merged: &MergedSequence, min_size: usize) -> Vec<CollinearRun> {
    let mut scanner = RunScanner::new(merged.pivot, min_size, None);
    let mut runs = Vec::new();
    for e in &merged.entries {
        if let Some(run) = scanner.push(e.index, &e.key.dir) {
            runs.push(run);
        }
    }
    runs.extend(scanner.finish());
    runs
}

/// True iff the pivot precedes every member in sigma.
pub fn filter_first_in_sigma(run: &CollinearRun, sigma: &SigmaOrder) -> bool {
    let r = sigma.rank(run.pivot);
    run.members.iter().all(|&q| sigma.rank(q) > r)
}

/// Incremental run detector over a stream sorted by folded angle.
///
/// Only the previous direction is kept: around a fixed pivot, "same folded
/// direction" is transitive, so comparing neighbours suffices. With a sigma
/// order attached, a run is abandoned as soon as a member preceding the pivot
/// shows up, and its members are no longer buffered.
#[derive(Debug)]
pub struct RunScanner<'a> {
    pivot: usize,
    min_members: usize,
    sigma: Option<&'a SigmaOrder>,
    pivot_rank: usize,
    dir: Option<FoldedDirection>,
    members: Vec<usize>,
    len: usize,
    rejected: bool,
}

impl<'a> RunScanner<'a> {
    pub fn new(pivot: usize, min_size: usize, sigma: Option<&'a SigmaOrder>) -> Self {
        Self {
            pivot,
            min_members: min_size.saturating_sub(1).max(1),
            sigma,
            pivot_rank: sigma.map_or(0, |s| s.rank(pivot)),
            dir: None,
            members: Vec::new(),
            len: 0,
            rejected: false,
        }
    }

    /// Feeds the next point. Returns the run that just closed, if it
    /// qualifies.
    pub fn push(&mut self, index: usize, dir: &FoldedDirection) -> Option<CollinearRun> {
        let closed = match &self.dir {
            Some(prev) if prev.same_line(dir) => None,
            Some(_) => self.close(),
            None => None,
        };
        if self.len == 0 {
            self.dir = Some(*dir);
        }
        self.len += 1;
        if !self.rejected {
            if self.sigma.is_some_and(|s| s.rank(index) < self.pivot_rank) {
                self.rejected = true;
                self.members.clear();
            } else {
                self.members.push(index);
            }
        }
        closed
    }

    pub fn finish(&mut self) -> Option<CollinearRun> {
        self.close()
    }

    /// Number of members currently buffered.
    pub fn buffered(&self) -> usize {
        self.members.len()
    }

    fn close(&mut self) -> Option<CollinearRun> {
        let out = if !self.rejected && self.len >= self.min_members && self.len >= 2 {
            Some(CollinearRun {
                pivot: self.pivot,
                members: std::mem::take(&mut self.members),
            })
        } else {
            self.members.clear();
            None
        };
        self.dir = None;
        self.len = 0;
        self.rejected = false;
        out
    }
}
