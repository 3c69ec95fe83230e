//! Maximal independent set, four ways: the sequential greedy baseline, a
//! linear-work parallel root-set algorithm, a prefix-based variant, and
//! Luby's randomized algorithm.
//!
//! For a fixed ordering π the first three return the identical
//! lexicographically-first MIS no matter the worker count or schedule; only
//! Luby's algorithm (which redraws priorities every round) returns a
//! different, still valid, set.
//!
//! The parallel algorithms never decrement degree counters. Instead each
//! vertex keeps a monotone cursor over its parents (higher-priority
//! neighbors): a `misCheck` probe advances the cursor past parents that are
//! no longer undecided and answers whether any live parent remains. Every
//! parent entry is consumed at most once across the whole run, which is what
//! makes the total work linear.

use std::sync::atomic::{AtomicU32, AtomicU64, AtomicU8, Ordering::Relaxed};

use crate::graph::Graph;
use crate::par::{self, ExecPolicy};
use crate::priority::{PrefixSchedule, Priority};
use crate::stats::{RoundStats, RunStats};

const UNDECIDED: u8 = 0;
const IN_MIS: u8 = 1;
const REMOVED: u8 = 2;

/// Per-vertex decision state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Undecided,
    InMis,
    Removed,
}

impl Status {
    fn from_raw(raw: u8) -> Status {
        match raw {
            IN_MIS => Status::InMis,
            REMOVED => Status::Removed,
            _ => Status::Undecided,
        }
    }

    fn raw(self) -> u8 {
        match self {
            Status::Undecided => UNDECIDED,
            Status::InMis => IN_MIS,
            Status::Removed => REMOVED,
        }
    }
}

/// The result set plus instrumentation.
#[derive(Debug, Clone)]
pub struct MisResult {
    /// `in_mis[v]` iff vertex `v` is in the independent set.
    pub in_mis: Vec<bool>,
    pub stats: RunStats,
}

/// Shared mutable state of the parallel MIS algorithms. Status transitions
/// are monotone (`Undecided → InMis` or `Undecided → Removed`, never back),
/// conflicting writers either agree on the value or exactly one wins a
/// claim, and all probes are pure predicates of status — which is why the
/// result cannot depend on scheduling.
pub struct MisState<'g> {
    graph: &'g Graph,
    priority: &'g Priority,
    status: Vec<AtomicU8>,
    /// Adjacency re-partitioned per vertex into parents (earlier in π) then
    /// children, in one flat array mirroring the graph's offsets.
    adj_off: Vec<usize>,
    adj_split: Vec<u32>,
    parent_count: Vec<u32>,
    /// First parent not yet confirmed dead, relative to the vertex's slice.
    cursor: Vec<AtomicU32>,
    /// Last claim epoch per vertex; deduplicates frontier candidates.
    claim: Vec<AtomicU32>,
    edge_touches: AtomicU64,
    vertex_touches: AtomicU64,
    cursor_advances: AtomicU64,
}

impl<'g> MisState<'g> {
    /// Partitions every adjacency list into parents and children up front,
    /// in one O(n + m) pass.
    pub fn new(graph: &'g Graph, priority: &'g Priority) -> Self {
        let n = graph.n();
        assert_eq!(priority.len(), n, "priority must cover all vertices");
        let rank = priority.ranks();
        let mut adj_off = vec![0usize; n + 1];
        for v in 0..n {
            adj_off[v + 1] = adj_off[v] + graph.degree(v as u32);
        }
        let mut adj_split = vec![0u32; adj_off[n]];
        let mut parent_count = vec![0u32; n];
        for v in 0..n {
            let rv = rank[v];
            let mut front = adj_off[v];
            let mut back = adj_off[v + 1];
            for &u in graph.neighbors(v as u32) {
                if rank[u as usize] < rv {
                    adj_split[front] = u;
                    front += 1;
                } else {
                    back -= 1;
                    adj_split[back] = u;
                }
            }
            parent_count[v] = (front - adj_off[v]) as u32;
        }
        MisState {
            graph,
            priority,
            status: (0..n).map(|_| AtomicU8::new(UNDECIDED)).collect(),
            adj_off,
            adj_split,
            parent_count,
            cursor: (0..n).map(|_| AtomicU32::new(0)).collect(),
            claim: (0..n).map(|_| AtomicU32::new(0)).collect(),
            edge_touches: AtomicU64::new(0),
            vertex_touches: AtomicU64::new(0),
            cursor_advances: AtomicU64::new(0),
        }
    }

    pub fn status(&self, v: u32) -> Status {
        Status::from_raw(self.status[v as usize].load(Relaxed))
    }

    pub fn set_status(&self, v: u32, s: Status) {
        self.status[v as usize].store(s.raw(), Relaxed);
    }

    /// The parents of `v` (neighbors earlier in π).
    pub fn parents(&self, v: u32) -> &[u32] {
        let off = self.adj_off[v as usize];
        &self.adj_split[off..off + self.parent_count[v as usize] as usize]
    }

    /// The children of `v` (neighbors later in π).
    pub fn children(&self, v: u32) -> &[u32] {
        let off = self.adj_off[v as usize];
        &self.adj_split[off + self.parent_count[v as usize] as usize..self.adj_off[v as usize + 1]]
    }

    pub fn parent_cursor(&self, v: u32) -> usize {
        self.cursor[v as usize].load(Relaxed) as usize
    }

    /// True iff no parent of `v` is still undecided. Advances the cursor
    /// past dead parents; the cursor never moves past a live one, so total
    /// movement over a run is at most the number of parent entries.
    ///
    /// `v` must be undecided and, in parallel runs, owned by the caller via
    /// a claim — the cursor write is unsynchronized otherwise.
    pub fn mis_check(&self, v: u32) -> bool {
        let (root, touched, advanced) = self.check_inner(v);
        self.edge_touches.fetch_add(touched, Relaxed);
        self.cursor_advances.fetch_add(advanced, Relaxed);
        self.vertex_touches.fetch_add(1, Relaxed);
        root
    }

    fn check_inner(&self, v: u32) -> (bool, u64, u64) {
        let parents = self.parents(v);
        let start = self.cursor[v as usize].load(Relaxed) as usize;
        let mut cur = start;
        let mut root = true;
        for &p in &parents[start..] {
            if self.status[p as usize].load(Relaxed) == UNDECIDED {
                root = false;
                break;
            }
            cur += 1;
        }
        if cur > start {
            self.cursor[v as usize].store(cur as u32, Relaxed);
        }
        let advanced = (cur - start) as u64;
        (root, advanced + u64::from(!root), advanced)
    }

    fn claim(&self, v: u32, epoch: u32) -> bool {
        let c = &self.claim[v as usize];
        c.load(Relaxed) != epoch && c.swap(epoch, Relaxed) != epoch
    }

    fn counters(&self) -> (u64, u64, u64) {
        (
            self.edge_touches.load(Relaxed),
            self.vertex_touches.load(Relaxed),
            self.cursor_advances.load(Relaxed),
        )
    }
}

/// One pass over the vertices in π order; the defining implementation of the
/// lexicographically-first MIS. O(n + m) work.
pub fn sequential_greedy(graph: &Graph, priority: &Priority) -> MisResult {
    let n = graph.n();
    assert_eq!(priority.len(), n);
    let mut status = vec![UNDECIDED; n];
    let mut stats = RunStats::default();
    for &v in priority.by_rank() {
        if status[v as usize] != UNDECIDED {
            continue;
        }
        status[v as usize] = IN_MIS;
        stats.rounds += 1;
        stats.edge_touches += graph.degree(v) as u64;
        for &u in graph.neighbors(v) {
            if status[u as usize] == UNDECIDED {
                status[u as usize] = REMOVED;
            }
        }
    }
    stats.steps_total = stats.rounds;
    stats.vertex_touches = n as u64;
    MisResult {
        in_mis: status.iter().map(|&s| s == IN_MIS).collect(),
        stats,
    }
}

/// The fully parallel algorithm with an explicitly maintained root set:
/// every step marks the current priority-DAG roots, removes their neighbors,
/// and probes the children of removed vertices to assemble the next root
/// set. Work is O(n + m); the step count equals the dependence length of
/// (G, π). Returns exactly the sequential result.
pub fn parallel_rootset(
    graph: &Graph,
    priority: &Priority,
    exec: impl Into<ExecPolicy>,
) -> MisResult {
    mis_engine(graph, priority, None, exec.into())
}

/// Prefix-based variant: each round takes the earliest still-unprocessed
/// items under π (as many as `schedule` grants), screens them against
/// already-accepted higher-priority neighbors, and runs the root-set
/// algorithm on the prefix-induced subgraph. Returns exactly the sequential
/// result for any schedule.
pub fn prefix_greedy(
    graph: &Graph,
    priority: &Priority,
    schedule: &PrefixSchedule,
    exec: impl Into<ExecPolicy>,
) -> MisResult {
    mis_engine(graph, priority, Some(schedule), exec.into())
}

fn mis_engine(
    graph: &Graph,
    priority: &Priority,
    schedule: Option<&PrefixSchedule>,
    exec: ExecPolicy,
) -> MisResult {
    if let Some(s) = schedule {
        s.validate().expect("invalid prefix schedule");
    }
    let n = graph.n();
    let state = MisState::new(graph, priority);
    let mut stats = RunStats::default();
    let mut epoch = 0u32;

    match schedule {
        None => {
            // Initial roots are exactly the vertices with no parents.
            let frontier = concat(par::map_ranges(exec, n, |r| {
                r.filter(|&v| state.parent_count[v] == 0)
                    .map(|v| v as u32)
                    .collect::<Vec<u32>>()
            }));
            let steps = run_steps(&state, frontier, u32::MAX, exec, &mut epoch);
            stats.rounds = steps;
            stats.steps_total = steps;
        }
        Some(schedule) => {
            let order = priority.by_rank();
            let mut start = 0usize;
            let mut round = 0u32;
            while start < n {
                let k = schedule.prefix_len(n - start, round, n);
                let hi = (start + k - 1) as u32;
                let prefix = &order[start..start + k];
                // Screen the prefix against accepted earlier-round vertices.
                // Parents inside the prefix are counted as internal edges;
                // parents before it are decided, and an accepted one kills v.
                // Each vertex is screened exactly once over the whole run.
                let internal: u64 = par::map_chunks(exec, prefix, |chunk| {
                    let mut internal = 0u64;
                    let mut touched = 0u64;
                    for &v in chunk {
                        debug_assert_eq!(state.status(v), Status::Undecided);
                        let parents = state.parents(v);
                        touched += parents.len() as u64;
                        let mut dead = false;
                        for &p in parents {
                            if priority.rank_of(p) as usize >= start {
                                internal += 1;
                            } else if state.status[p as usize].load(Relaxed) == IN_MIS {
                                dead = true;
                            }
                        }
                        if dead {
                            state.status[v as usize].store(REMOVED, Relaxed);
                        }
                    }
                    state.edge_touches.fetch_add(touched, Relaxed);
                    state.vertex_touches.fetch_add(chunk.len() as u64, Relaxed);
                    internal
                })
                .into_iter()
                .sum();
                // Entry probe: survivors whose parents are all dead are the
                // roots of the prefix-induced DAG.
                let frontier = concat(par::map_chunks(exec, prefix, |chunk| {
                    let mut local = Vec::new();
                    let (mut touched, mut advanced, mut checks) = (0u64, 0u64, 0u64);
                    for &v in chunk {
                        if state.status[v as usize].load(Relaxed) != UNDECIDED {
                            continue;
                        }
                        let (root, t, a) = state.check_inner(v);
                        touched += t;
                        advanced += a;
                        checks += 1;
                        if root {
                            local.push(v);
                        }
                    }
                    state.edge_touches.fetch_add(touched, Relaxed);
                    state.cursor_advances.fetch_add(advanced, Relaxed);
                    state.vertex_touches.fetch_add(checks, Relaxed);
                    local
                }));
                let steps = run_steps(&state, frontier, hi, exec, &mut epoch);
                stats.per_round.push(RoundStats {
                    prefix_size: k as u64,
                    steps,
                    internal_edges: internal,
                });
                stats.steps_total += steps;
                round += 1;
                start += k;
            }
            stats.rounds = round as u64;
        }
    }

    let in_mis = (0..n)
        .map(|v| state.status[v].load(Relaxed) == IN_MIS)
        .collect();
    let (e, v, c) = state.counters();
    stats.edge_touches += e;
    stats.vertex_touches += v;
    stats.cursor_advances = c;
    MisResult { in_mis, stats }
}

/// Runs root-set steps until the frontier inside the rank range `..=hi` is
/// exhausted. Returns the step count.
fn run_steps(
    state: &MisState<'_>,
    mut frontier: Vec<u32>,
    hi: u32,
    exec: ExecPolicy,
    epoch: &mut u32,
) -> u64 {
    let rank = state.priority.ranks();
    let mut steps = 0u64;
    while !frontier.is_empty() {
        steps += 1;
        *epoch += 1;
        let e = *epoch;

        // Accept the roots and remove their in-range neighbors. A root's
        // parents are dead by definition, so only children are scanned;
        // roots are pairwise non-adjacent, so the InMis stores and the
        // Removed CAS targets never overlap.
        let removed = concat(par::map_chunks(exec, &frontier, |chunk| {
            let mut local = Vec::new();
            let mut touched = 0u64;
            for &r in chunk {
                state.status[r as usize].store(IN_MIS, Relaxed);
                let children = state.children(r);
                touched += children.len() as u64;
                for &u in children {
                    if (hi == u32::MAX || rank[u as usize] <= hi)
                        && state.status[u as usize].load(Relaxed) == UNDECIDED
                        && state.status[u as usize]
                            .compare_exchange(UNDECIDED, REMOVED, Relaxed, Relaxed)
                            .is_ok()
                    {
                        local.push(u);
                    }
                }
            }
            state.edge_touches.fetch_add(touched, Relaxed);
            state
                .vertex_touches
                .fetch_add((chunk.len() + local.len()) as u64, Relaxed);
            local
        }));

        // A vertex can become a root only if one of its parents just died;
        // claim each undecided in-range child of a removed vertex once.
        let candidates = concat(par::map_chunks(exec, &removed, |chunk| {
            let mut local = Vec::new();
            let mut touched = 0u64;
            for &w in chunk {
                let children = state.children(w);
                touched += children.len() as u64;
                for &x in children {
                    if (hi == u32::MAX || rank[x as usize] <= hi)
                        && state.status[x as usize].load(Relaxed) == UNDECIDED
                        && state.claim(x, e)
                    {
                        local.push(x);
                    }
                }
            }
            state.edge_touches.fetch_add(touched, Relaxed);
            state.vertex_touches.fetch_add(local.len() as u64, Relaxed);
            local
        }));

        frontier = concat(par::map_chunks(exec, &candidates, |chunk| {
            let mut local = Vec::new();
            let (mut touched, mut advanced) = (0u64, 0u64);
            for &x in chunk {
                let (root, t, a) = state.check_inner(x);
                touched += t;
                advanced += a;
                if root {
                    local.push(x);
                }
            }
            state.edge_touches.fetch_add(touched, Relaxed);
            state.cursor_advances.fetch_add(advanced, Relaxed);
            state.vertex_touches.fetch_add(chunk.len() as u64, Relaxed);
            local
        }));
    }
    steps
}

/// Luby's algorithm: every round draws fresh per-vertex priorities and
/// accepts the vertices that are local minima among their undecided
/// neighbors. Valid MIS, but not the lexicographically-first one. Ties are
/// broken by vertex id; results depend only on the seed.
pub fn luby(graph: &Graph, seed: u64, exec: impl Into<ExecPolicy>) -> MisResult {
    let exec = exec.into();
    let n = graph.n();
    let ids = Priority::identity(n);
    let state = MisState::new(graph, &ids);
    let mut live: Vec<u32> = (0..n as u32).collect();
    let mut stats = RunStats::default();
    let val = |round: u64, v: u32| crate::rng::splitmix64(seed ^ (round << 32 | v as u64));

    while !live.is_empty() {
        stats.rounds += 1;
        let round = stats.rounds;
        // Local minima under this round's draw. Statuses are frozen while
        // we look, so the winner set is a pure function of (seed, round).
        let winners = concat(par::map_chunks(exec, &live, |chunk| {
            let mut local = Vec::new();
            let mut touched = 0u64;
            for &v in chunk {
                let key = (val(round, v), v);
                touched += graph.degree(v) as u64;
                let is_min = graph.neighbors(v).iter().all(|&u| {
                    state.status[u as usize].load(Relaxed) != UNDECIDED
                        || (val(round, u), u) > key
                });
                if is_min {
                    local.push(v);
                }
            }
            state.edge_touches.fetch_add(touched, Relaxed);
            state.vertex_touches.fetch_add(chunk.len() as u64, Relaxed);
            local
        }));
        par::map_chunks(exec, &winners, |chunk| {
            let mut touched = 0u64;
            for &w in chunk {
                state.status[w as usize].store(IN_MIS, Relaxed);
                touched += graph.degree(w) as u64;
                for &u in graph.neighbors(w) {
                    if state.status[u as usize].load(Relaxed) == UNDECIDED {
                        state.status[u as usize].store(REMOVED, Relaxed);
                    }
                }
            }
            state.edge_touches.fetch_add(touched, Relaxed);
        });
        live = concat(par::map_chunks(exec, &live, |chunk| {
            chunk
                .iter()
                .copied()
                .filter(|&v| state.status[v as usize].load(Relaxed) == UNDECIDED)
                .collect::<Vec<u32>>()
        }));
    }
    stats.steps_total = stats.rounds;
    let in_mis = (0..n as u32).map(|v| state.status(v) == Status::InMis).collect();
    let (e, v, _) = state.counters();
    stats.edge_touches = e;
    stats.vertex_touches = v;
    MisResult { in_mis, stats }
}

fn concat<T>(parts: Vec<Vec<T>>) -> Vec<T> {
    let mut out = Vec::with_capacity(parts.iter().map(Vec::len).sum());
    for p in parts {
        out.extend(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::priority::dependence_length;

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
    fn sequential_empty_graph() {
        let g = Graph::from_edges(&[], 0).unwrap();
        let res = sequential_greedy(&g, &Priority::identity(0));
        assert!(res.in_mis.is_empty());
        assert_eq!(res.stats.rounds, 0);
    }

    #[test]
    fn sequential_triangle_takes_first() {
        let g = Graph::from_edges(&[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        let res = sequential_greedy(&g, &Priority::identity(3));
        assert_eq!(res.in_mis, vec![true, false, false]);
    }

    #[test]
    fn sequential_path_identity() {
        let g = path_graph(4);
        let res = sequential_greedy(&g, &Priority::identity(4));
        assert_eq!(res.in_mis, vec![true, false, true, false]);
    }

    #[test]
    fn rootset_complete_graph_single_round() {
        for seed in 0..4 {
            let g = complete_graph(9);
            let p = Priority::random(9, seed);
            let res = parallel_rootset(&g, &p, 2);
            let first = p.item_at_rank(0);
            let expect: Vec<bool> = (0..9).map(|v| v == first).collect();
            assert_eq!(res.in_mis, expect);
            assert_eq!(res.stats.rounds, 1);
        }
    }

    #[test]
    fn rootset_path_identity() {
        let g = path_graph(4);
        let res = parallel_rootset(&g, &Priority::identity(4), 1);
        assert_eq!(res.in_mis, vec![true, false, true, false]);
        assert_eq!(res.stats.rounds, 2);
    }

    #[test]
    fn rootset_matches_sequential_exhaustively_small() {
        // All orderings of one fixed 6-vertex graph.
        let g = Graph::from_edges(&[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5), (1, 4)], 6)
            .unwrap();
        let mut order: Vec<u32> = (0..6).collect();
        permute_all(&mut order, 0, &mut |perm| {
            let p = Priority::from_inverse(perm.to_vec());
            let seq = sequential_greedy(&g, &p);
            let par = parallel_rootset(&g, &p, 3);
            assert_eq!(seq.in_mis, par.in_mis, "ordering {perm:?}");
        });
    }

    fn permute_all(items: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute_all(items, k + 1, f);
            items.swap(k, i);
        }
    }

    #[test]
    fn parents_children_partition() {
        let g = path_graph(4);
        let p = Priority::from_inverse(vec![2, 0, 3, 1]);
        let state = MisState::new(&g, &p);
        // rank: v0=1, v1=3, v2=0, v3=2
        assert_eq!(state.parents(0), &[] as &[u32]);
        assert_eq!(state.children(0), &[1]);
        assert_eq!(state.parents(1), &[0, 2]);
        assert_eq!(state.children(1), &[] as &[u32]);
        assert_eq!(state.parents(3), &[2]);
    }

    #[test]
    fn mischeck_zero_parents_is_root() {
        let g = path_graph(2);
        let p = Priority::identity(2);
        let state = MisState::new(&g, &p);
        assert!(state.mis_check(0));
        assert_eq!(state.parent_cursor(0), 0);
    }

    #[test]
    fn mischeck_live_first_parent_blocks_without_moving() {
        let g = path_graph(2);
        let p = Priority::identity(2);
        let state = MisState::new(&g, &p);
        assert!(!state.mis_check(1));
        assert_eq!(state.parent_cursor(1), 0);
    }

    #[test]
    fn mischeck_advances_past_dead_parents_only() {
        // Star: center 6 has parents 0..=5 (identity ranks); kill the first
        // five, leave the sixth alive.
        let edges: Vec<(u32, u32)> = (0..6).map(|i| (i, 6)).collect();
        let g = Graph::from_edges(&edges, 7).unwrap();
        let p = Priority::identity(7);
        let state = MisState::new(&g, &p);
        assert_eq!(state.parents(6), &[0, 1, 2, 3, 4, 5]);
        for v in 0..5 {
            state.set_status(v, Status::Removed);
        }
        assert!(!state.mis_check(6));
        assert_eq!(state.parent_cursor(6), 5);
        // A second probe does not rescan the dead prefix.
        let before = state.counters().2;
        assert!(!state.mis_check(6));
        assert_eq!(state.counters().2, before);
    }

    #[test]
    fn prefix_count_one_equals_sequential() {
        for seed in 0..5 {
            let g = Graph::generate_gnm(64, 200, seed).unwrap();
            let p = Priority::random(64, seed + 100);
            let seq = sequential_greedy(&g, &p);
            let pre = prefix_greedy(&g, &p, &PrefixSchedule::FixedCount(1), 2);
            assert_eq!(seq.in_mis, pre.in_mis);
            assert_eq!(pre.stats.rounds, 64);
        }
    }

    #[test]
    fn prefix_whole_graph_single_round_steps_equal_dependence_length() {
        for seed in 0..5 {
            let g = Graph::generate_gnm(128, 512, seed).unwrap();
            let p = Priority::random(128, seed + 7);
            let res = prefix_greedy(&g, &p, &PrefixSchedule::FixedFraction(1.0), 2);
            assert_eq!(res.stats.rounds, 1);
            let dag = dependence_length(&g, &p);
            assert_eq!(res.stats.steps_total, dag.dependence_length);
            assert_eq!(res.in_mis, sequential_greedy(&g, &p).in_mis);
        }
    }

    #[test]
    fn prefix_schedules_all_agree() {
        let g = Graph::generate_gnm(300, 1200, 5).unwrap();
        let p = Priority::random(300, 17);
        let seq = sequential_greedy(&g, &p);
        let schedules = [
            PrefixSchedule::FixedFraction(0.05),
            PrefixSchedule::FixedFraction(0.5),
            PrefixSchedule::FixedCount(7),
            PrefixSchedule::DegreeAware { c: 2.0, max_degree: g.max_degree() as u32 },
        ];
        for sched in &schedules {
            for workers in [1, 4] {
                let res = prefix_greedy(&g, &p, sched, workers);
                assert_eq!(res.in_mis, seq.in_mis, "{sched} workers={workers}");
            }
        }
    }

    #[test]
    fn work_counters_are_linear_and_deterministic() {
        let g = Graph::generate_gnm(1 << 10, 5 << 10, 3).unwrap();
        let p = Priority::random(1 << 10, 4);
        let a = parallel_rootset(&g, &p, 1);
        let b = parallel_rootset(&g, &p, 4);
        assert_eq!(a.stats, b.stats);
        let bound = 4 * (g.n() as u64 + g.m() as u64);
        assert!(a.stats.edge_touches <= bound, "{} > {bound}", a.stats.edge_touches);
        assert!(a.stats.cursor_advances <= g.m() as u64);
    }

    #[test]
    fn luby_empty_and_complete() {
        let g0 = Graph::from_edges(&[], 0).unwrap();
        assert!(luby(&g0, 1, 1).in_mis.is_empty());
        let g = complete_graph(12);
        let res = luby(&g, 42, 2);
        assert_eq!(res.in_mis.iter().filter(|&&b| b).count(), 1);
        assert_eq!(res.stats.rounds, 1);
    }

    #[test]
    fn luby_star_is_center_or_all_leaves() {
        let edges: Vec<(u32, u32)> = (1..10).map(|leaf| (0, leaf)).collect();
        let g = Graph::from_edges(&edges, 10).unwrap();
        let mut saw_center = false;
        let mut saw_leaves = false;
        for seed in 0..40 {
            let res = luby(&g, seed, 1);
            let count = res.in_mis.iter().filter(|&&b| b).count();
            if res.in_mis[0] {
                assert_eq!(count, 1);
                saw_center = true;
            } else {
                assert_eq!(count, 9);
                saw_leaves = true;
            }
        }
        assert!(saw_center && saw_leaves, "40 seeds never produced both shapes");
    }

    #[test]
    fn luby_deterministic_per_seed_across_workers() {
        let g = Graph::generate_gnm(200, 600, 2).unwrap();
        let a = luby(&g, 9, 1);
        let b = luby(&g, 9, 4);
        assert_eq!(a.in_mis, b.in_mis);
        assert_eq!(a.stats, b.stats);
    }
}
