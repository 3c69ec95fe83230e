//! Brute-force validity checkers and independent reference implementations,
//! used by the test suites and by the CLI's `--verify` flag.
//!
//! The oracles here are deliberately naive and written straight against the
//! adjacency structure, sharing no helper code with the production
//! algorithms, so they can serve as independent witnesses.

use crate::graph::Graph;
use crate::priority::Priority;

/// A constraint violation found by one of the checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Both endpoints of this edge are in the independent set.
    NotIndependent { u: u32, v: u32 },
    /// This vertex is neither in the set nor adjacent to it.
    NotMaximalVertex { v: u32 },
    /// Two matched edges share this vertex.
    SharedEndpoint { v: u32, e1: u32, e2: u32 },
    /// This unmatched edge has no matched neighbor.
    NotMaximalEdge { e: u32 },
}

/// Outcome of a validity check; `valid` iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>) -> Verdict {
        Verdict {
            valid: violations.is_empty(),
            violations,
        }
    }
}

/// Checks independence (no edge inside the set) and maximality (every
/// outside vertex has a neighbor inside).
pub fn check_mis(graph: &Graph, in_mis: &[bool]) -> Verdict {
    assert_eq!(in_mis.len(), graph.n());
    let mut violations = Vec::new();
    for &(u, v) in graph.edges() {
        if in_mis[u as usize] && in_mis[v as usize] {
            violations.push(Violation::NotIndependent { u, v });
        }
    }
    for v in 0..graph.n() as u32 {
        if !in_mis[v as usize] && !graph.neighbors(v).iter().any(|&u| in_mis[u as usize]) {
            violations.push(Violation::NotMaximalVertex { v });
        }
    }
    Verdict::from_violations(violations)
}

/// Checks that matched edges are pairwise disjoint and that every unmatched
/// edge touches a matched one.
pub fn check_mm(graph: &Graph, matched: &[bool]) -> Verdict {
    assert_eq!(matched.len(), graph.m());
    let mut violations = Vec::new();
    let mut owner: Vec<Option<u32>> = vec![None; graph.n()];
    for e in 0..graph.m() as u32 {
        if !matched[e as usize] {
            continue;
        }
        let (u, v) = graph.endpoints(e);
        for w in [u, v] {
            match owner[w as usize] {
                Some(prev) => violations.push(Violation::SharedEndpoint { v: w, e1: prev, e2: e }),
                None => owner[w as usize] = Some(e),
            }
        }
    }
    for e in 0..graph.m() as u32 {
        if matched[e as usize] {
            continue;
        }
        let (u, v) = graph.endpoints(e);
        if owner[u as usize].is_none() && owner[v as usize].is_none() {
            violations.push(Violation::NotMaximalEdge { e });
        }
    }
    Verdict::from_violations(violations)
}

/// Reference lexicographically-first MIS: walk the vertices in rank order,
/// keep anything not yet killed, kill its neighbors.
pub fn lex_first_oracle(graph: &Graph, priority: &Priority) -> Vec<bool> {
    assert_eq!(priority.len(), graph.n());
    let mut killed = vec![false; graph.n()];
    let mut in_mis = vec![false; graph.n()];
    for r in 0..graph.n() as u32 {
        let v = priority.item_at_rank(r);
        if killed[v as usize] {
            continue;
        }
        in_mis[v as usize] = true;
        killed[v as usize] = true;
        for &u in graph.neighbors(v) {
            killed[u as usize] = true;
        }
    }
    in_mis
}

/// Reference lexicographically-first maximal matching: walk the edges in
/// rank order, keep anything whose endpoints are both still free.
pub fn lex_first_mm_oracle(graph: &Graph, edge_priority: &Priority) -> Vec<bool> {
    assert_eq!(edge_priority.len(), graph.m());
    let mut used = vec![false; graph.n()];
    let mut matched = vec![false; graph.m()];
    for r in 0..graph.m() as u32 {
        let e = edge_priority.item_at_rank(r);
        let (u, v) = graph.endpoints(e);
        if !used[u as usize] && !used[v as usize] {
            matched[e as usize] = true;
            used[u as usize] = true;
            used[v as usize] = true;
        }
    }
    matched
}
