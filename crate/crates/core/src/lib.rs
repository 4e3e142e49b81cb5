//! Enumeration of maximal collinear subsets of a planar integer point set.
//!
//! Three interchangeable strategies produce identical, canonically ordered
//! output:
//!
//! * [`enumerate_baseline`] sorts all points around every pivot.
//! * [`enumerate_layered`] peels the input into convex layers once and, per
//!   pivot, merges at most four sorted pieces per layer with a heap.
//! * [`enumerate_parallel`] runs the layered scheme over a worker pool with
//!   streaming run detection and per-worker scratch proportional to the
//!   number of layers.
//!
//! [`oracle::brute_force`] is an independent exhaustive reference.
//!
//! ```
//! use collinear::{enumerate_layered, PointSet, SigmaOrder};
//!
//! let ps = PointSet::from_coords([(0, 0), (1, 1), (2, 2), (3, 0)]).unwrap();
//! let sigma = SigmaOrder::identity(ps.len());
//! let result = enumerate_layered(&ps, &sigma, 3).unwrap();
//! assert_eq!(result.sets[0].members, vec![0, 1, 2]);
//! ```
//!
//! Runnable examples live in `examples/`; run one with
//! `cargo run --release --example <name>`.

pub mod cli;
pub mod cyclic;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod layers;
pub mod oracle;

pub use enumerate::{
    canonicalize, enumerate, enumerate_baseline, enumerate_layered, enumerate_layered_with,
    enumerate_parallel, enumerate_parallel_with, CollinearSet, EnumerationResult, Stats, Strategy,
    DEFAULT_MIN_SIZE,
};
pub use error::{Error, Result};
pub use geometry::{Point, PointSet, SigmaOrder};
pub use layers::{peel, LayerDecomposition};
