//! Greedy maximal matching over an edge ordering π: sequential baseline,
//! linear-work parallel root-set algorithm, and the prefix-based variant.
//! All three return the lexicographically-first matching for (G, π).
//!
//! An edge is *ready* when it is the highest-priority undecided edge at both
//! of its endpoints; ready edges are exactly the roots of the derived
//! priority DAG over edges. Each vertex keeps its incident edges sorted by
//! ascending rank plus a monotone cursor to the first edge not yet confirmed
//! dead, so an `mmCheck` finds a vertex's candidate ready edge without
//! rescanning confirmed-dead entries. Total cursor movement is bounded by
//! the 2m incidence entries.

use std::sync::atomic::{AtomicU32, AtomicU64, AtomicU8, Ordering::Relaxed};

use crate::graph::Graph;
use crate::par::{self, ExecPolicy};
use crate::priority::{PrefixSchedule, Priority};
use crate::stats::{RoundStats, RunStats};

const UNDECIDED: u8 = 0;
const IN_MATCHING: u8 = 1;
const REMOVED: u8 = 2;

const NO_MATE: u32 = u32::MAX;

/// Per-edge decision state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStatus {
    Undecided,
    InMatching,
    Removed,
}

impl EdgeStatus {
    fn from_raw(raw: u8) -> EdgeStatus {
        match raw {
            IN_MATCHING => EdgeStatus::InMatching,
            REMOVED => EdgeStatus::Removed,
            _ => EdgeStatus::Undecided,
        }
    }

    fn raw(self) -> u8 {
        match self {
            EdgeStatus::Undecided => UNDECIDED,
            EdgeStatus::InMatching => IN_MATCHING,
            EdgeStatus::Removed => REMOVED,
        }
    }
}

/// The matching plus instrumentation.
#[derive(Debug, Clone)]
pub struct MatchResult {
    /// `matched[e]` iff edge `e` is in the matching.
    pub matched: Vec<bool>,
    /// Partner of each vertex, if matched.
    pub mate: Vec<Option<u32>>,
    pub stats: RunStats,
}

/// Per-vertex incidence lists sorted by ascending edge rank, built with a
/// single counting pass over the ranks (O(n + m), no comparison sort).
/// Returns `(offsets, incidence)` with `offsets.len() == n + 1`.
pub fn sort_incidence(graph: &Graph, edge_priority: &Priority) -> (Vec<usize>, Vec<u32>) {
    let n = graph.n();
    assert_eq!(edge_priority.len(), graph.m(), "priority must cover all edges");
    let mut off = vec![0usize; n + 1];
    for v in 0..n as u32 {
        off[v as usize + 1] = off[v as usize] + graph.degree(v);
    }
    let mut inc = vec![0u32; 2 * graph.m()];
    let mut next = off.clone();
    for r in 0..graph.m() as u32 {
        let e = edge_priority.item_at_rank(r);
        let (u, v) = graph.endpoints(e);
        inc[next[u as usize]] = e;
        next[u as usize] += 1;
        inc[next[v as usize]] = e;
        next[v as usize] += 1;
    }
    (off, inc)
}

/// Shared mutable state of the parallel matching algorithms. The same
/// monotone-transition and single-winner-claim contract as the MIS state.
pub struct MatchState<'g> {
    graph: &'g Graph,
    priority: &'g Priority,
    edge_status: Vec<AtomicU8>,
    inc_off: Vec<usize>,
    inc: Vec<u32>,
    /// First incidence entry not yet confirmed dead, per vertex.
    cursor: Vec<AtomicU32>,
    mate: Vec<AtomicU32>,
    vertex_claim: Vec<AtomicU32>,
    edge_claim: Vec<AtomicU32>,
    edge_touches: AtomicU64,
    vertex_touches: AtomicU64,
    cursor_advances: AtomicU64,
}

impl<'g> MatchState<'g> {
    pub fn new(graph: &'g Graph, edge_priority: &'g Priority) -> Self {
        let (inc_off, inc) = sort_incidence(graph, edge_priority);
        let n = graph.n();
        let m = graph.m();
        MatchState {
            graph,
            priority: edge_priority,
            edge_status: (0..m).map(|_| AtomicU8::new(UNDECIDED)).collect(),
            inc_off,
            inc,
            cursor: (0..n).map(|_| AtomicU32::new(0)).collect(),
            mate: (0..n).map(|_| AtomicU32::new(NO_MATE)).collect(),
            vertex_claim: (0..n).map(|_| AtomicU32::new(0)).collect(),
            edge_claim: (0..m).map(|_| AtomicU32::new(0)).collect(),
            edge_touches: AtomicU64::new(0),
            vertex_touches: AtomicU64::new(0),
            cursor_advances: AtomicU64::new(0),
        }
    }

    /// Incident edges of `v`, ascending by rank.
    pub fn incidence(&self, v: u32) -> &[u32] {
        &self.inc[self.inc_off[v as usize]..self.inc_off[v as usize + 1]]
    }

    pub fn edge_status(&self, e: u32) -> EdgeStatus {
        EdgeStatus::from_raw(self.edge_status[e as usize].load(Relaxed))
    }

    pub fn set_edge_status(&self, e: u32, s: EdgeStatus) {
        self.edge_status[e as usize].store(s.raw(), Relaxed);
    }

    pub fn cursor(&self, v: u32) -> usize {
        self.cursor[v as usize].load(Relaxed) as usize
    }

    fn other_endpoint(&self, e: u32, v: u32) -> u32 {
        let (a, b) = self.graph.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Phase one of `mmCheck`: advance `v`'s cursor past dead edges and
    /// return its highest-priority live incident edge, if any. The caller
    /// must own `v` (via a claim) in parallel runs.
    fn advance_cursor(&self, v: u32) -> Option<u32> {
        let (top, touched, advanced) = self.advance_inner(v);
        self.edge_touches.fetch_add(touched, Relaxed);
        self.cursor_advances.fetch_add(advanced, Relaxed);
        self.vertex_touches.fetch_add(1, Relaxed);
        top
    }

    fn advance_inner(&self, v: u32) -> (Option<u32>, u64, u64) {
        let base = self.inc_off[v as usize];
        let end = self.inc_off[v as usize + 1];
        let start = base + self.cursor[v as usize].load(Relaxed) as usize;
        let mut cur = start;
        let mut top = None;
        while cur < end {
            let e = self.inc[cur];
            if self.edge_status[e as usize].load(Relaxed) == UNDECIDED {
                top = Some(e);
                break;
            }
            cur += 1;
        }
        if cur > start {
            self.cursor[v as usize].store((cur - base) as u32, Relaxed);
        }
        let advanced = (cur - start) as u64;
        (top, advanced + u64::from(top.is_some()), advanced)
    }

    /// The live edge the cursor currently points at, without moving it.
    fn cursor_top_inner(&self, v: u32) -> Option<u32> {
        let base = self.inc_off[v as usize];
        let end = self.inc_off[v as usize + 1];
        let cur = base + self.cursor[v as usize].load(Relaxed) as usize;
        if cur < end {
            let e = self.inc[cur];
            if self.edge_status[e as usize].load(Relaxed) == UNDECIDED {
                return Some(e);
            }
        }
        None
    }

    /// Returns `v`'s ready incident edge, if it has one: the edge that is
    /// the highest-priority live edge at both of its endpoints. At most one
    /// such edge exists per vertex. Must not run concurrently with edge
    /// deletion.
    pub fn mm_check(&self, v: u32) -> Option<u32> {
        let e = self.advance_cursor(v)?;
        let other = self.other_endpoint(e, v);
        if self.advance_cursor(other) == Some(e) {
            Some(e)
        } else {
            None
        }
    }

    fn claim_vertex(&self, v: u32, epoch: u32) -> bool {
        let c = &self.vertex_claim[v as usize];
        c.load(Relaxed) != epoch && c.swap(epoch, Relaxed) != epoch
    }

    fn claim_edge(&self, e: u32, epoch: u32) -> bool {
        let c = &self.edge_claim[e as usize];
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

/// One pass over the edges in π order; the defining implementation of the
/// lexicographically-first maximal matching. O(n + m) work.
pub fn sequential_greedy(graph: &Graph, edge_priority: &Priority) -> MatchResult {
    let m = graph.m();
    assert_eq!(edge_priority.len(), m);
    let mut mate = vec![NO_MATE; graph.n()];
    let mut matched = vec![false; m];
    let mut stats = RunStats::default();
    for &e in edge_priority.by_rank() {
        let (u, v) = graph.endpoints(e);
        stats.edge_touches += 1;
        if mate[u as usize] == NO_MATE && mate[v as usize] == NO_MATE {
            matched[e as usize] = true;
            mate[u as usize] = v;
            mate[v as usize] = u;
            stats.rounds += 1;
        }
    }
    stats.steps_total = stats.rounds;
    stats.vertex_touches = 2 * m as u64;
    MatchResult {
        matched,
        mate: mate.iter().map(|&w| (w != NO_MATE).then_some(w)).collect(),
        stats,
    }
}

/// Fully parallel matching with an explicit ready-edge frontier. Each step
/// accepts the frontier, lazily deletes the edges incident to the new mates,
/// and re-checks the far endpoints of deleted edges to build the next
/// frontier. O(n + m) work; returns exactly the sequential result.
pub fn parallel_rootset(
    graph: &Graph,
    edge_priority: &Priority,
    exec: impl Into<ExecPolicy>,
) -> MatchResult {
    mm_engine(graph, edge_priority, None, exec.into())
}

/// Prefix-based matching over edge ranks; same tradeoff and guarantees as
/// the MIS version.
pub fn prefix_greedy(
    graph: &Graph,
    edge_priority: &Priority,
    schedule: &PrefixSchedule,
    exec: impl Into<ExecPolicy>,
) -> MatchResult {
    mm_engine(graph, edge_priority, Some(schedule), exec.into())
}

fn mm_engine(
    graph: &Graph,
    edge_priority: &Priority,
    schedule: Option<&PrefixSchedule>,
    exec: ExecPolicy,
) -> MatchResult {
    if let Some(s) = schedule {
        s.validate().expect("invalid prefix schedule");
    }
    let m = graph.m();
    let n = graph.n();
    let state = MatchState::new(graph, edge_priority);
    let mut stats = RunStats::default();
    let mut epoch = 0u32;

    match schedule {
        None => {
            // Ready edges of the full graph: top of the incidence list at
            // both endpoints. Both endpoints discover the same edge, so a
            // claim keeps the frontier duplicate-free.
            epoch += 1;
            let e0 = epoch;
            let frontier = concat(par::map_ranges(exec, n, |range| {
                let mut local = Vec::new();
                let mut touched = 0u64;
                for v in range {
                    let incid = state.incidence(v as u32);
                    if incid.is_empty() {
                        continue;
                    }
                    let e = incid[0];
                    let other = state.other_endpoint(e, v as u32);
                    touched += 2;
                    if state.incidence(other)[0] == e && state.claim_edge(e, e0) {
                        local.push(e);
                    }
                }
                state.edge_touches.fetch_add(touched, Relaxed);
                local
            }));
            let steps = run_mm_steps(&state, frontier, u32::MAX, exec, &mut epoch);
            stats.rounds = steps;
            stats.steps_total = steps;
        }
        Some(schedule) => {
            let order = edge_priority.by_rank();
            // Scratch for counting adjacent pairs inside a prefix.
            let mut endpoint_count = vec![0u32; n];
            let mut touched_vertices: Vec<u32> = Vec::new();
            let mut start = 0usize;
            let mut round = 0u32;
            while start < m {
                let k = schedule.prefix_len(m - start, round, m);
                let hi = (start + k - 1) as u32;
                let prefix = &order[start..start + k];
                // Deletions inside a round only cover edges of that round's
                // rank range, so an edge whose endpoint was matched in an
                // earlier round is settled lazily here, on prefix entry.
                par::map_chunks(exec, prefix, |chunk| {
                    for &e in chunk {
                        if state.edge_status[e as usize].load(Relaxed) == UNDECIDED {
                            let (u, v) = graph.endpoints(e);
                            if state.mate[u as usize].load(Relaxed) != NO_MATE
                                || state.mate[v as usize].load(Relaxed) != NO_MATE
                            {
                                state.edge_status[e as usize].store(REMOVED, Relaxed);
                            }
                        }
                    }
                    state.vertex_touches.fetch_add(2 * chunk.len() as u64, Relaxed);
                });
                // Adjacent live pairs inside the prefix (the internal edges
                // of the derived DAG over edges).
                let mut internal = 0u64;
                for &e in prefix {
                    if state.edge_status[e as usize].load(Relaxed) != UNDECIDED {
                        continue;
                    }
                    let (u, v) = graph.endpoints(e);
                    for w in [u, v] {
                        if endpoint_count[w as usize] == 0 {
                            touched_vertices.push(w);
                        }
                        endpoint_count[w as usize] += 1;
                    }
                }
                for &w in &touched_vertices {
                    let c = endpoint_count[w as usize] as u64;
                    internal += c * (c - 1) / 2;
                    endpoint_count[w as usize] = 0;
                }
                touched_vertices.clear();
                // Entry check: advance the cursor of every endpoint of a
                // live prefix edge once, then test readiness per edge.
                epoch += 1;
                let ve = epoch;
                let verts = concat(par::map_chunks(exec, prefix, |chunk| {
                    let mut local = Vec::new();
                    for &e in chunk {
                        if state.edge_status[e as usize].load(Relaxed) != UNDECIDED {
                            continue;
                        }
                        let (u, v) = graph.endpoints(e);
                        for w in [u, v] {
                            if state.claim_vertex(w, ve) {
                                local.push(w);
                            }
                        }
                    }
                    local
                }));
                par::map_chunks(exec, &verts, |chunk| {
                    let (mut touched, mut advanced) = (0u64, 0u64);
                    for &x in chunk {
                        let (_, t, a) = state.advance_inner(x);
                        touched += t;
                        advanced += a;
                    }
                    state.edge_touches.fetch_add(touched, Relaxed);
                    state.cursor_advances.fetch_add(advanced, Relaxed);
                    state.vertex_touches.fetch_add(chunk.len() as u64, Relaxed);
                });
                let frontier = concat(par::map_chunks(exec, prefix, |chunk| {
                    let mut local = Vec::new();
                    let mut touched = 0u64;
                    for &e in chunk {
                        if state.edge_status[e as usize].load(Relaxed) != UNDECIDED {
                            continue;
                        }
                        let (u, v) = graph.endpoints(e);
                        touched += 2;
                        if state.cursor_top_inner(u) == Some(e)
                            && state.cursor_top_inner(v) == Some(e)
                        {
                            local.push(e);
                        }
                    }
                    state.edge_touches.fetch_add(touched, Relaxed);
                    local
                }));
                let steps = run_mm_steps(&state, frontier, hi, exec, &mut epoch);
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

    let matched = concat(par::map_ranges(exec, m, |r| {
        r.map(|e| state.edge_status[e].load(Relaxed) == IN_MATCHING)
            .collect::<Vec<bool>>()
    }));
    let mate = (0..n)
        .map(|v| {
            let w = state.mate[v].load(Relaxed);
            (w != NO_MATE).then_some(w)
        })
        .collect();
    let (e, v, c) = state.counters();
    stats.edge_touches += e;
    stats.vertex_touches += v;
    stats.cursor_advances = c;
    MatchResult { matched, mate, stats }
}

/// Runs ready-edge steps until the frontier inside the rank range `..=hi`
/// is exhausted. Checks never overlap deletions: each step marks all
/// deletions first and only then probes the far endpoints.
fn run_mm_steps(
    state: &MatchState<'_>,
    mut frontier: Vec<u32>,
    hi: u32,
    exec: ExecPolicy,
    epoch: &mut u32,
) -> u64 {
    let graph = state.graph;
    let rank = state.priority.ranks();
    let mut steps = 0u64;
    while !frontier.is_empty() {
        steps += 1;

        // Accept. Ready edges never share endpoints, so the mate stores are
        // exclusive.
        par::map_chunks(exec, &frontier, |chunk| {
            for &e in chunk {
                state.edge_status[e as usize].store(IN_MATCHING, Relaxed);
                let (u, v) = graph.endpoints(e);
                state.mate[u as usize].store(v, Relaxed);
                state.mate[v as usize].store(u, Relaxed);
            }
            state.vertex_touches.fetch_add(2 * chunk.len() as u64, Relaxed);
        });

        // Delete the in-range edges incident to the new mates by consuming
        // their incidence lists from the cursor on. Incidence is sorted by
        // rank, so the range is a contiguous run and each entry is consumed
        // at most once over the whole run; edges beyond the range are left
        // for their own round's entry screen. The far endpoint of each
        // freshly deleted edge, if unmatched, is claimed for a re-check.
        *epoch += 1;
        let ve = *epoch;
        let candidates = concat(par::map_chunks(exec, &frontier, |chunk| {
            let mut local = Vec::new();
            let mut touched = 0u64;
            let mut moved = 0u64;
            for &e in chunk {
                let (u, v) = graph.endpoints(e);
                for side in [u, v] {
                    let base = state.inc_off[side as usize];
                    let end = state.inc_off[side as usize + 1];
                    let start = base + state.cursor[side as usize].load(Relaxed) as usize;
                    let mut cur = start;
                    while cur < end {
                        let f = state.inc[cur];
                        touched += 1;
                        if rank[f as usize] > hi {
                            break;
                        }
                        if state.edge_status[f as usize]
                            .compare_exchange(UNDECIDED, REMOVED, Relaxed, Relaxed)
                            .is_ok()
                        {
                            let far = state.other_endpoint(f, side);
                            if state.mate[far as usize].load(Relaxed) == NO_MATE
                                && state.claim_vertex(far, ve)
                            {
                                local.push(far);
                            }
                        }
                        cur += 1;
                    }
                    moved += (cur - start) as u64;
                    state.cursor[side as usize].store((cur - base) as u32, Relaxed);
                }
            }
            state.edge_touches.fetch_add(touched, Relaxed);
            state.cursor_advances.fetch_add(moved, Relaxed);
            state.vertex_touches.fetch_add(local.len() as u64, Relaxed);
            local
        }));

        // mmCheck phase one per claimed vertex: find its top live edge.
        let tops = concat(par::map_chunks(exec, &candidates, |chunk| {
            let mut local = Vec::new();
            let (mut touched, mut advanced) = (0u64, 0u64);
            for &x in chunk {
                let (top, t, a) = state.advance_inner(x);
                touched += t;
                advanced += a;
                if let Some(top) = top {
                    local.push((x, top));
                }
            }
            state.edge_touches.fetch_add(touched, Relaxed);
            state.cursor_advances.fetch_add(advanced, Relaxed);
            state.vertex_touches.fetch_add(chunk.len() as u64, Relaxed);
            local
        }));

        // Phase two: the edge is ready iff the far cursor agrees. Cursors
        // are current after phase one, so this is a single read. Edges
        // outside the prefix wait for their own round's entry check.
        *epoch += 1;
        let ee = *epoch;
        frontier = concat(par::map_chunks(exec, &tops, |chunk| {
            let mut local = Vec::new();
            let mut touched = 0u64;
            for &(x, e) in chunk {
                if rank[e as usize] > hi {
                    continue;
                }
                let other = state.other_endpoint(e, x);
                touched += 1;
                if state.cursor_top_inner(other) == Some(e) && state.claim_edge(e, ee) {
                    local.push(e);
                }
            }
            state.edge_touches.fetch_add(touched, Relaxed);
            local
        }));
    }
    steps
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

    fn edge_id(g: &Graph, u: u32, v: u32) -> u32 {
        let (a, b) = (u.min(v), u.max(v));
        g.edges().iter().position(|&e| e == (a, b)).unwrap() as u32
    }

    #[test]
    fn sequential_empty() {
        let g = Graph::from_edges(&[], 4).unwrap();
        let res = sequential_greedy(&g, &Priority::identity(0));
        assert!(res.matched.is_empty());
        assert!(res.mate.iter().all(Option::is_none));
    }

    #[test]
    fn sequential_triangle() {
        let g = Graph::from_edges(&[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        // ranks: e01 < e12 < e02
        let inv = vec![edge_id(&g, 0, 1), edge_id(&g, 1, 2), edge_id(&g, 0, 2)];
        let res = sequential_greedy(&g, &Priority::from_inverse(inv));
        let mut expect = vec![false; 3];
        expect[edge_id(&g, 0, 1) as usize] = true;
        assert_eq!(res.matched, expect);
        assert_eq!(res.mate[0], Some(1));
        assert_eq!(res.mate[2], None);
    }

    #[test]
    fn sequential_four_cycle() {
        let g = Graph::from_edges(&[(0, 1), (1, 2), (2, 3), (0, 3)], 4).unwrap();
        // ranks: e01 < e23 < e12 < e03
        let inv = vec![
            edge_id(&g, 0, 1),
            edge_id(&g, 2, 3),
            edge_id(&g, 1, 2),
            edge_id(&g, 0, 3),
        ];
        let res = sequential_greedy(&g, &Priority::from_inverse(inv));
        let mut expect = vec![false; 4];
        expect[edge_id(&g, 0, 1) as usize] = true;
        expect[edge_id(&g, 2, 3) as usize] = true;
        assert_eq!(res.matched, expect);
    }

    #[test]
    fn sort_incidence_shapes() {
        let g = Graph::from_edges(&[(0, 1)], 3).unwrap();
        let p = Priority::identity(1);
        let (off, inc) = sort_incidence(&g, &p);
        assert_eq!(off, vec![0, 1, 2, 2]);
        assert_eq!(inc, vec![0, 0]);
        // vertex 2 is isolated
        assert!(inc[off[2]..off[3]].is_empty());
    }

    #[test]
    fn sort_incidence_k4_is_rank_sorted() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(&edges, 4).unwrap();
        let p = Priority::random(6, 31);
        let (off, inc) = sort_incidence(&g, &p);
        for v in 0..4usize {
            let list = &inc[off[v]..off[v + 1]];
            assert_eq!(list.len(), 3);
            assert!(list.windows(2).all(|w| p.rank_of(w[0]) < p.rank_of(w[1])));
        }
    }

    #[test]
    fn mmcheck_isolated_vertex() {
        let g = Graph::from_edges(&[(0, 1)], 3).unwrap();
        let p = Priority::identity(1);
        let state = MatchState::new(&g, &p);
        assert_eq!(state.mm_check(2), None);
    }

    #[test]
    fn mmcheck_far_endpoint_has_better_edge() {
        // Path 0-1-2-3 with identity edge ranks: top edge at vertex 2 is
        // e12, but vertex 1 prefers e01, so 2 has no ready edge.
        let g = Graph::from_edges(&[(0, 1), (1, 2), (2, 3)], 4).unwrap();
        let p = Priority::identity(3);
        let state = MatchState::new(&g, &p);
        assert_eq!(state.mm_check(2), None);
    }

    #[test]
    fn mmcheck_agreeing_endpoints() {
        let g = Graph::from_edges(&[(0, 1)], 2).unwrap();
        let p = Priority::identity(1);
        let state = MatchState::new(&g, &p);
        assert_eq!(state.mm_check(0), Some(0));
        assert_eq!(state.mm_check(1), Some(0));
    }

    #[test]
    fn rootset_star_takes_best_edge_in_one_round() {
        let edges: Vec<(u32, u32)> = (1..=8).map(|leaf| (0, leaf)).collect();
        let g = Graph::from_edges(&edges, 9).unwrap();
        for seed in 0..5 {
            let p = Priority::random(8, seed);
            let res = parallel_rootset(&g, &p, 2);
            let best = p.item_at_rank(0);
            assert_eq!(res.matched.iter().filter(|&&b| b).count(), 1);
            assert!(res.matched[best as usize]);
            assert_eq!(res.stats.rounds, 1);
        }
    }

    #[test]
    fn rootset_disjoint_edges_all_matched_one_round() {
        let edges: Vec<(u32, u32)> = (0..8).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = Graph::from_edges(&edges, 16).unwrap();
        let p = Priority::random(8, 3);
        let res = parallel_rootset(&g, &p, 4);
        assert!(res.matched.iter().all(|&b| b));
        assert_eq!(res.stats.rounds, 1);
        for v in 0..16u32 {
            let w = res.mate[v as usize].unwrap();
            assert_eq!(res.mate[w as usize], Some(v));
        }
    }

    #[test]
    fn rootset_matches_sequential_exhaustively_small() {
        // All 6! = 720 edge orderings of a fixed graph with 6 edges.
        let g = Graph::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)], 5).unwrap();
        let mut order: Vec<u32> = (0..6).collect();
        permute_all(&mut order, 0, &mut |perm| {
            let p = Priority::from_inverse(perm.to_vec());
            let seq = sequential_greedy(&g, &p);
            let par = parallel_rootset(&g, &p, 3);
            assert_eq!(seq.matched, par.matched, "ordering {perm:?}");
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
    fn prefix_count_one_equals_sequential() {
        for seed in 0..5 {
            let g = Graph::generate_gnm(48, 140, seed).unwrap();
            let p = Priority::random(g.m(), seed + 50);
            let seq = sequential_greedy(&g, &p);
            let pre = prefix_greedy(&g, &p, &PrefixSchedule::FixedCount(1), 2);
            assert_eq!(seq.matched, pre.matched);
            assert_eq!(pre.stats.rounds, g.m() as u64);
        }
    }

    #[test]
    fn prefix_whole_graph_is_one_rootset_round() {
        for seed in 0..5 {
            let g = Graph::generate_gnm(64, 256, seed).unwrap();
            let p = Priority::random(g.m(), seed + 9);
            let pre = prefix_greedy(&g, &p, &PrefixSchedule::FixedFraction(1.0), 2);
            let root = parallel_rootset(&g, &p, 2);
            assert_eq!(pre.stats.rounds, 1);
            assert_eq!(pre.stats.steps_total, root.stats.steps_total);
            assert_eq!(pre.matched, root.matched);
        }
    }

    #[test]
    fn prefix_schedules_all_agree() {
        let g = Graph::generate_gnm(200, 800, 6).unwrap();
        let p = Priority::random(g.m(), 13);
        let seq = sequential_greedy(&g, &p);
        let schedules = [
            PrefixSchedule::FixedFraction(0.03),
            PrefixSchedule::FixedFraction(0.5),
            PrefixSchedule::FixedCount(11),
        ];
        for sched in &schedules {
            for workers in [1, 4] {
                let res = prefix_greedy(&g, &p, sched, workers);
                assert_eq!(res.matched, seq.matched, "{sched} workers={workers}");
                for v in 0..g.n() {
                    assert_eq!(res.mate[v], seq.mate[v]);
                }
            }
        }
    }

    #[test]
    fn work_counters_linear_and_worker_independent() {
        let g = Graph::generate_gnm(1 << 10, 5 << 10, 8).unwrap();
        let p = Priority::random(g.m(), 21);
        let a = parallel_rootset(&g, &p, 1);
        let b = parallel_rootset(&g, &p, 4);
        assert_eq!(a.stats, b.stats);
        let bound = 4 * (g.n() as u64 + g.m() as u64);
        assert!(a.stats.edge_touches <= bound, "{} > {bound}", a.stats.edge_touches);
        assert!(a.stats.cursor_advances <= 2 * g.m() as u64);
    }
}
