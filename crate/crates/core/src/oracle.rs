//! Brute-force ground truth. Shares no code with the sorting strategies:
//! only the orientation predicate and the final canonical form.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use crate::enumerate::{canonicalize, EnumerationResult, Stats, Strategy, DEFAULT_MIN_SIZE};
use crate::error::{Error, Result};
use crate::geometry::{orient, Orientation, PointSet};

/// Largest input the oracle accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 500;

/// Pair expansion with the default size cap.
pub fn brute_force(ps: &PointSet, min_size: usize) -> Result<EnumerationResult> {
    brute_force_with_cap(ps, min_size, DEFAULT_ORACLE_CAP)
}

/// For every pair `(i, j)`, collects every `k` on line `ij`. The pair is
/// only expanded when `i` and `j` are the two smallest indices on that line,
/// so each line is produced once.
pub fn brute_force_with_cap(
    ps: &PointSet,
    min_size: usize,
    cap: usize,
) -> Result<EnumerationResult> {
    let n = ps.len();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    if min_size < DEFAULT_MIN_SIZE {
        return Err(Error::InvalidMinSize(min_size));
    }
    let start = Instant::now();
    let mut raw = Vec::new();
    for i in 0..n {
        'pair: for j in i + 1..n {
            let (a, b) = (ps.get(i), ps.get(j));
            let mut line = vec![i, j];
            for k in 0..n {
                if k == i || k == j || orient(a, b, ps.get(k)) != Orientation::Collinear {
                    continue;
                }
                if k < j {
                    // (i, j) is not the canonical pair for this line.
                    continue 'pair;
                }
                line.push(k);
            }
            if line.len() >= min_size {
                raw.push(line);
            }
        }
    }
    let sets = canonicalize(raw)?;
    let stats = Stats {
        n,
        m: None,
        strategy: Strategy::Oracle,
        workers: 1,
        elapsed: start.elapsed(),
        max_pieces: 0,
        max_heap: 0,
        space_words: n,
        per_point_space_words: n,
    };
    Ok(EnumerationResult { sets, stats })
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact key of the line through two distinct points: `A x + B y + C = 0`
/// reduced by the gcd, first nonzero of `(A, B)` positive.
pub fn line_key(x1: i64, y1: i64, x2: i64, y2: i64) -> (i128, i128, i128) {
    let a = (y2 - y1) as i128;
    let b = (x1 - x2) as i128;
    let c = -(a * x1 as i128 + b * y1 as i128);
    let g = gcd(gcd(a, b), c);
    let (mut a, mut b, mut c) = (a / g, b / g, c / g);
    if a < 0 || (a == 0 && b < 0) {
        (a, b, c) = (-a, -b, -c);
    }
    (a, b, c)
}

/// Second, independent brute force: group every pair by its exact line key.
/// Returns canonical member lists.
pub fn brute_force_line_keys(ps: &PointSet, min_size: usize) -> Result<Vec<Vec<usize>>> {
    let n = ps.len();
    let mut lines: HashMap<(i128, i128, i128), BTreeSet<usize>> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (ps.get(i), ps.get(j));
            let entry = lines.entry(line_key(a.x, a.y, b.x, b.y)).or_default();
            entry.insert(i);
            entry.insert(j);
        }
    }
    let raw = lines
        .into_values()
        .filter(|s| s.len() >= min_size)
        .map(|s| s.into_iter().collect())
        .collect();
    Ok(canonicalize(raw)?.into_iter().map(|s| s.members).collect())
}
