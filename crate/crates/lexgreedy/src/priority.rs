//! Total orders over vertices or edges, prefix schedules, and priority-DAG
//! analytics.
//!
//! A priority π orients every edge of the graph from its higher-priority
//! (lower rank) endpoint to its lower-priority endpoint; the resulting
//! priority DAG drives all greedy algorithms in this crate. The analytics
//! here are measurement tools and run single-threaded.

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use thiserror::Error;

use crate::graph::Graph;
use crate::rng::bounded;

/// A total order (permutation) over `count` items. `rank` maps item id to
/// its position in the order, `inverse` maps position back to item id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Priority {
    rank: Vec<u32>,
    inverse: Vec<u32>,
}

impl Priority {
    /// Uniformly random permutation via Fisher–Yates over a ChaCha8 stream;
    /// identical output for a fixed seed on every platform.
    pub fn random(count: usize, seed: u64) -> Priority {
        assert!(count <= u32::MAX as usize);
        let mut inverse: Vec<u32> = (0..count as u32).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..count).rev() {
            let j = bounded(&mut rng, i as u64 + 1) as usize;
            inverse.swap(i, j);
        }
        Self::from_inverse(inverse)
    }

    /// The identity order: item `i` has rank `i`.
    pub fn identity(count: usize) -> Priority {
        assert!(count <= u32::MAX as usize);
        let inverse: Vec<u32> = (0..count as u32).collect();
        Priority {
            rank: inverse.clone(),
            inverse,
        }
    }

    /// Builds from an explicit order: `inverse[r]` is the item with rank `r`.
    /// Panics if `inverse` is not a permutation of `0..len`.
    pub fn from_inverse(inverse: Vec<u32>) -> Priority {
        let mut rank = vec![u32::MAX; inverse.len()];
        for (r, &item) in inverse.iter().enumerate() {
            assert!(
                (item as usize) < inverse.len() && rank[item as usize] == u32::MAX,
                "not a permutation"
            );
            rank[item as usize] = r as u32;
        }
        Priority { rank, inverse }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank_of(&self, item: u32) -> u32 {
        self.rank[item as usize]
    }

    pub fn item_at_rank(&self, r: u32) -> u32 {
        self.inverse[r as usize]
    }

    /// `rank` as a slice, indexed by item id.
    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// Items sorted by ascending rank (the inverse permutation).
    pub fn by_rank(&self) -> &[u32] {
        &self.inverse
    }
}

#[derive(Debug, Error)]
#[error("invalid schedule: {0}")]
pub struct InvalidSchedule(pub String);

/// How large a prefix of the remaining items each round takes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PrefixSchedule {
    /// A fixed fraction δ ∈ (0, 1] of the remaining items.
    FixedFraction(f64),
    /// A fixed number of items per round (the sequential algorithm at 1).
    FixedCount(u64),
    /// Degree-aware growth: fraction `min(1, c · 2^round · ln(n₀) / Δ)`
    /// where `Δ` is the a-priori maximum degree and `n₀` the original item
    /// count. Doubles the prefix every round so that remaining degrees halve.
    DegreeAware { c: f64, max_degree: u32 },
}

impl PrefixSchedule {
    pub fn validate(&self) -> Result<(), InvalidSchedule> {
        match *self {
            PrefixSchedule::FixedFraction(d) if d > 0.0 && d <= 1.0 => Ok(()),
            PrefixSchedule::FixedFraction(d) => {
                Err(InvalidSchedule(format!("fraction {d} outside (0, 1]")))
            }
            PrefixSchedule::FixedCount(s) if s >= 1 => Ok(()),
            PrefixSchedule::FixedCount(_) => Err(InvalidSchedule("count must be >= 1".into())),
            PrefixSchedule::DegreeAware { c, max_degree } if c > 0.0 && max_degree >= 1 => Ok(()),
            PrefixSchedule::DegreeAware { .. } => {
                Err(InvalidSchedule("degree-aware needs c > 0 and max degree >= 1".into()))
            }
        }
    }

    /// Number of items the next prefix takes: `⌈f · remaining⌉` for the
    /// round's fraction `f`, floored at one item so progress is guaranteed,
    /// and never more than `remaining`. `original_count` is the item count
    /// before the first round (the `n` whose logarithm stays constant across
    /// the run).
    pub fn prefix_len(&self, remaining: usize, round_index: u32, original_count: usize) -> usize {
        if remaining == 0 {
            return 0;
        }
        let f = match *self {
            PrefixSchedule::FixedFraction(d) => d,
            PrefixSchedule::FixedCount(s) => {
                return (s.min(remaining as u64) as usize).max(1);
            }
            PrefixSchedule::DegreeAware { c, max_degree } => {
                let growth = 2f64.powi(round_index.min(1024) as i32);
                (c * growth * (original_count as f64).ln() / max_degree as f64).min(1.0)
            }
        };
        ((f * remaining as f64).ceil() as usize).clamp(1, remaining)
    }
}

impl std::fmt::Display for PrefixSchedule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PrefixSchedule::FixedFraction(d) => write!(f, "frac:{d}"),
            PrefixSchedule::FixedCount(s) => write!(f, "count:{s}"),
            PrefixSchedule::DegreeAware { c, .. } => write!(f, "degree:{c}"),
        }
    }
}

/// The earliest-by-π items of `remaining`, as many as the schedule grants
/// this round. `remaining` need not be sorted.
pub fn prefix(
    priority: &Priority,
    remaining: &[u32],
    schedule: &PrefixSchedule,
    round_index: u32,
    original_count: usize,
) -> Vec<u32> {
    let k = schedule.prefix_len(remaining.len(), round_index, original_count);
    if k == 0 {
        return Vec::new();
    }
    let mut items = remaining.to_vec();
    if k < items.len() {
        items.select_nth_unstable_by_key(k - 1, |&v| priority.rank_of(v));
        items.truncate(k);
    }
    items
}

/// Measurements of the priority DAG for one (graph, ordering) pair.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DagStats {
    /// Steps of the peel-the-roots process until no vertices remain; equals
    /// the step count of the fully parallel greedy algorithm.
    pub dependence_length: u64,
    /// Longest directed path in the full priority DAG, counted in edges.
    /// An upper bound on `dependence_length + 1` does not hold; the true
    /// relation is `dependence_length <= longest_path + 1`.
    pub longest_path: u64,
    /// Edges with both endpoints in the measured prefix (the whole vertex
    /// set for [`dependence_length`], so simply `m` there).
    pub internal_edges: u64,
    /// Prefix vertices incident to at least one internal edge.
    pub touched_vertices: u64,
}

/// Simulates the root-peeling process (add all current roots, remove them
/// and their neighbors, repeat) and measures the longest path of the full
/// priority DAG by dynamic programming in rank order.
pub fn dependence_length(graph: &Graph, priority: &Priority) -> DagStats {
    let n = graph.n();
    assert_eq!(priority.len(), n, "priority must cover all vertices");
    let rank = priority.ranks();

    const UNDECIDED: u8 = 0;
    const IN_SET: u8 = 1;
    const REMOVED: u8 = 2;
    let mut status = vec![UNDECIDED; n];
    let mut live_parents = vec![0u32; n];
    for v in 0..n as u32 {
        live_parents[v as usize] = graph
            .neighbors(v)
            .iter()
            .filter(|&&u| rank[u as usize] < rank[v as usize])
            .count() as u32;
    }
    let mut frontier: Vec<u32> = (0..n as u32).filter(|&v| live_parents[v as usize] == 0).collect();
    let mut steps = 0u64;
    let mut removed: Vec<u32> = Vec::new();
    while !frontier.is_empty() {
        steps += 1;
        removed.clear();
        for &r in &frontier {
            status[r as usize] = IN_SET;
        }
        for &r in &frontier {
            for &u in graph.neighbors(r) {
                if status[u as usize] == UNDECIDED {
                    status[u as usize] = REMOVED;
                    removed.push(u);
                }
            }
        }
        let mut next = Vec::new();
        for &w in &removed {
            for &x in graph.neighbors(w) {
                if rank[x as usize] > rank[w as usize] && status[x as usize] == UNDECIDED {
                    live_parents[x as usize] -= 1;
                    if live_parents[x as usize] == 0 {
                        next.push(x);
                    }
                }
            }
        }
        frontier = next;
    }

    DagStats {
        dependence_length: steps,
        longest_path: longest_path_in_prefix(graph, priority, n),
        internal_edges: graph.m() as u64,
        touched_vertices: (0..n as u32).filter(|&v| graph.degree(v) > 0).count() as u64,
    }
}

/// Longest directed path (in edges) of the priority DAG induced by the
/// `prefix_len` earliest-ranked vertices.
pub fn longest_path_in_prefix(graph: &Graph, priority: &Priority, prefix_len: usize) -> u64 {
    let rank = priority.ranks();
    let plen = prefix_len.min(priority.len()) as u32;
    // dist[r] = longest path ending at the vertex of rank r.
    let mut dist = vec![0u64; plen as usize];
    let mut best = 0u64;
    for r in 0..plen {
        let v = priority.item_at_rank(r);
        let mut d = 0u64;
        for &u in graph.neighbors(v) {
            let ru = rank[u as usize];
            if ru < r {
                d = d.max(dist[ru as usize] + 1);
            }
        }
        dist[r as usize] = d;
        best = best.max(d);
    }
    best
}

/// Counts edges with both endpoints in the δ-prefix of the whole vertex set,
/// and the prefix vertices incident to at least one such edge.
pub fn prefix_sparsity(graph: &Graph, priority: &Priority, delta: f64) -> (u64, u64) {
    let n = graph.n();
    assert_eq!(priority.len(), n);
    if n == 0 {
        return (0, 0);
    }
    let plen = PrefixSchedule::FixedFraction(delta).prefix_len(n, 0, n) as u32;
    let rank = priority.ranks();
    let mut internal = 0u64;
    let mut touched = vec![false; plen as usize];
    for &(u, v) in graph.edges() {
        let (ru, rv) = (rank[u as usize], rank[v as usize]);
        if ru < plen && rv < plen {
            internal += 1;
            touched[ru as usize] = true;
            touched[rv as usize] = true;
        }
    }
    (internal, touched.iter().filter(|&&t| t).count() as u64)
}

/// Simulates the prefix-based greedy rounds under `schedule` and reports the
/// maximum degree among still-live vertices (not decided, no earlier
/// in-set neighbor) after each round. Vertex degrees count live neighbors
/// only, so the sequence is nonincreasing and ends at zero.
pub fn degree_decay(graph: &Graph, priority: &Priority, schedule: &PrefixSchedule) -> Vec<u32> {
    let n = graph.n();
    assert_eq!(priority.len(), n);
    const UNDECIDED: u8 = 0;
    const IN_SET: u8 = 1;
    const REMOVED: u8 = 2;
    let mut status = vec![UNDECIDED; n];
    let order = priority.by_rank();
    let mut start = 0usize;
    let mut round = 0u32;
    let mut decay = Vec::new();
    while start < n {
        let k = schedule.prefix_len(n - start, round, n);
        // Sequential greedy over the prefix respects earlier decisions.
        for &v in &order[start..start + k] {
            if status[v as usize] != UNDECIDED {
                continue;
            }
            status[v as usize] = IN_SET;
            for &u in graph.neighbors(v) {
                if status[u as usize] == UNDECIDED {
                    status[u as usize] = REMOVED;
                }
            }
        }
        let max_live = order[start + k..]
            .iter()
            .filter(|&&v| status[v as usize] == UNDECIDED)
            .map(|&v| {
                graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| status[u as usize] == UNDECIDED)
                    .count() as u32
            })
            .max()
            .unwrap_or(0);
        decay.push(max_live);
        start += k;
        round += 1;
    }
    decay
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_graph(n: u32) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(&edges, n).unwrap()
    }

    fn path_graph(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(&edges, n).unwrap()
    }

    #[test]
    fn random_priority_degenerate_cases() {
        assert_eq!(Priority::random(0, 5).len(), 0);
        let one = Priority::random(1, 5);
        assert_eq!(one.rank_of(0), 0);
        assert_eq!(one.item_at_rank(0), 0);
    }

    #[test]
    fn random_priority_is_a_bijection() {
        let p = Priority::random(10_000, 123);
        for item in 0..10_000u32 {
            assert_eq!(p.item_at_rank(p.rank_of(item)), item);
        }
        for r in 0..10_000u32 {
            assert_eq!(p.rank_of(p.item_at_rank(r)), r);
        }
    }

    #[test]
    fn random_priority_reproducible_and_seed_sensitive() {
        let a = Priority::random(500, 7);
        let b = Priority::random(500, 7);
        let c = Priority::random(500, 8);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn prefix_whole_set_at_fraction_one() {
        let p = Priority::random(20, 3);
        let remaining: Vec<u32> = (0..20).collect();
        let got = prefix(&p, &remaining, &PrefixSchedule::FixedFraction(1.0), 0, 20);
        assert_eq!(got.len(), 20);
    }

    #[test]
    fn prefix_count_one_is_earliest() {
        let p = Priority::random(20, 3);
        let remaining: Vec<u32> = (5..20).collect();
        let got = prefix(&p, &remaining, &PrefixSchedule::FixedCount(1), 4, 20);
        let earliest = *remaining.iter().min_by_key(|&&v| p.rank_of(v)).unwrap();
        assert_eq!(got, vec![earliest]);
    }

    #[test]
    fn degree_aware_prefix_len_formula() {
        // c = 1, Δ = n₀, round 0 → ⌈remaining · ln(n₀) / n₀⌉
        let n0 = 1000usize;
        let sched = PrefixSchedule::DegreeAware { c: 1.0, max_degree: n0 as u32 };
        for remaining in [1000usize, 400, 37, 1] {
            let expect = ((remaining as f64 * (n0 as f64).ln() / n0 as f64).ceil() as usize)
                .clamp(1, remaining);
            assert_eq!(sched.prefix_len(remaining, 0, n0), expect);
        }
    }

    #[test]
    fn prefix_len_always_progresses() {
        let sched = PrefixSchedule::FixedFraction(1e-9);
        assert_eq!(sched.prefix_len(10, 0, 10), 1);
        assert_eq!(PrefixSchedule::FixedCount(5).prefix_len(3, 0, 10), 3);
    }

    #[test]
    fn schedule_validation() {
        assert!(PrefixSchedule::FixedFraction(0.0).validate().is_err());
        assert!(PrefixSchedule::FixedFraction(1.0).validate().is_ok());
        assert!(PrefixSchedule::FixedCount(0).validate().is_err());
        assert!(PrefixSchedule::DegreeAware { c: 2.0, max_degree: 0 }.validate().is_err());
    }

    #[test]
    fn dependence_length_complete_graph_is_one() {
        let g = complete_graph(16);
        for seed in 0..5 {
            let p = Priority::random(16, seed);
            let stats = dependence_length(&g, &p);
            assert_eq!(stats.dependence_length, 1);
            // Longest path in the DAG of a complete graph is a Hamiltonian
            // chain in rank order.
            assert_eq!(stats.longest_path, 15);
        }
    }

    #[test]
    fn dependence_length_path_identity() {
        let g = path_graph(4);
        let p = Priority::identity(4);
        let stats = dependence_length(&g, &p);
        assert_eq!(stats.dependence_length, 2);
        assert_eq!(stats.longest_path, 3);
    }

    #[test]
    fn dependence_length_empty_graph() {
        let g = Graph::from_edges(&[], 7).unwrap();
        let p = Priority::identity(7);
        let stats = dependence_length(&g, &p);
        assert_eq!(stats.dependence_length, 1);
        assert_eq!(stats.longest_path, 0);
        assert_eq!(stats.touched_vertices, 0);
    }

    #[test]
    fn dependence_length_no_vertices() {
        let g = Graph::from_edges(&[], 0).unwrap();
        let p = Priority::identity(0);
        assert_eq!(dependence_length(&g, &p).dependence_length, 0);
    }

    #[test]
    fn sparsity_prefix_of_one_vertex() {
        let g = complete_graph(4);
        let p = Priority::identity(4);
        // δ small enough that the prefix is a single vertex
        assert_eq!(prefix_sparsity(&g, &p, 0.1), (0, 0));
    }

    #[test]
    fn sparsity_whole_graph() {
        let g = path_graph(5);
        let p = Priority::random(5, 2);
        assert_eq!(prefix_sparsity(&g, &p, 1.0), (4, 5));
    }

    #[test]
    fn sparsity_k4_two_vertex_prefix() {
        let g = complete_graph(4);
        let p = Priority::random(4, 9);
        assert_eq!(prefix_sparsity(&g, &p, 0.5), (1, 2));
    }

    #[test]
    fn degree_decay_reaches_zero_and_never_grows() {
        let g = Graph::generate_gnm(1 << 10, 10 << 10, 5).unwrap();
        let p = Priority::random(1 << 10, 6);
        let sched = PrefixSchedule::DegreeAware { c: 2.0, max_degree: g.max_degree() as u32 };
        let decay = degree_decay(&g, &p, &sched);
        assert!(!decay.is_empty());
        assert_eq!(*decay.last().unwrap(), 0);
        assert!(decay.windows(2).all(|w| w[0] >= w[1]));
    }
}
