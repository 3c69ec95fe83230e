//! Greedy maximal independent set (MIS) and maximal matching (MM) with
//! deterministic parallel execution.
//!
//! The sequential greedy MIS algorithm walks the vertices in some order π and
//! keeps a vertex iff none of its earlier neighbors was kept. Its output — the
//! lexicographically-first MIS for (G, π) — is a pure function of the graph
//! and the ordering, so a parallel execution that respects the dependence
//! structure can return the *identical* set while running vertices out of
//! order. The same applies to greedy maximal matching over an edge ordering.
//!
//! This crate implements, for both problems:
//!
//! * the sequential greedy baseline,
//! * a linear-work parallel algorithm that maintains the root set of the
//!   priority DAG explicitly (amortized `misCheck`/`mmCheck` probes),
//! * a prefix-based variant that processes the earliest δ-fraction of the
//!   remaining items per round, trading work for parallelism,
//! * Luby's classic randomized MIS as a non-deterministic baseline,
//!
//! plus analytics for the priority DAG (dependence length, longest path,
//! prefix sparsity) and brute-force verification oracles. For a fixed ordering
//! every deterministic algorithm here returns bit-identical results regardless
//! of worker count or schedule.

pub mod graph;
pub mod matching;
pub mod mis;
pub mod par;
pub mod priority;
pub mod stats;
pub mod verify;

mod rng;

pub use graph::{Graph, GraphError, GraphSpec};
pub use par::ExecPolicy;
pub use priority::{DagStats, PrefixSchedule, Priority};
pub use stats::{RoundStats, RunStats};
