//! Work and round counters shared by all algorithms.

/// Per-run instrumentation. Counter semantics:
///
/// * `rounds` — outer-loop iterations. For the root-set algorithms this is
///   the number of frontier steps (the dependence length); for prefix-based
///   runs it is the number of prefixes taken; for the sequential algorithms
///   it is the number of items that were still undecided when visited.
/// * `steps_total` — frontier steps summed over all rounds.
/// * `edge_touches` — adjacency/incidence array entries examined.
/// * `vertex_touches` — vertex-granularity events: status decisions, check
///   invocations and frontier insertions.
/// * `cursor_advances` — total monotone cursor movement across all
///   `misCheck`/`mmCheck` probes (bounded by the number of parent half-edges).
///
/// All counters are exact and schedule-independent: for a fixed input and
/// ordering they do not vary with worker count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    pub rounds: u64,
    pub steps_total: u64,
    pub edge_touches: u64,
    pub vertex_touches: u64,
    pub cursor_advances: u64,
    /// One entry per prefix round; empty for non-prefix algorithms.
    pub per_round: Vec<RoundStats>,
}

/// Prefix-round breakdown.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RoundStats {
    /// Items in this round's prefix.
    pub prefix_size: u64,
    /// Frontier steps the inner root-set run took.
    pub steps: u64,
    /// Edges (MIS) or adjacent-edge pairs (MM) internal to the prefix.
    pub internal_edges: u64,
}
