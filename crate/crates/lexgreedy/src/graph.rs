//! Immutable undirected graphs in compressed adjacency form, plus the G(n,m)
//! and R-MAT generators and edge-list file I/O.
//!
//! A [`Graph`] is frozen at construction and safe to share across any number
//! of reader threads. Adjacency lists are stored sorted by neighbor id and
//! undirected edge ids are assigned in lexicographic `(u, v)` order, which
//! makes stored files canonical. The generators are single-threaded on
//! purpose: determinism for a fixed seed matters more than generation speed.

use std::collections::HashSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::rng::bounded;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex id {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: u64, n: u64 },
    #[error("requested {requested} edges but a simple graph on {n} vertices holds at most {max}")]
    TooManyEdges { requested: u64, n: u64, max: u64 },
    #[error("invalid rmat parameters: {0}")]
    InvalidRmat(String),
    #[error("{path}: parse error at line {line}: {reason}")]
    Parse {
        path: String,
        line: usize,
        reason: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invalid graph spec `{0}` (expected file:PATH, gnm:N,M or rmat:SCALE,M[,A,B,C])")]
    BadSpec(String),
}

/// Immutable undirected graph. `n` vertices with dense 0-based ids, `m`
/// undirected edges each counted once and assigned an id in `[0, m)`.
#[derive(Clone)]
pub struct Graph {
    n: u32,
    /// Per-vertex start into `neighbors`/`edge_ids`; length `n + 1`, last
    /// entry equals `2m`.
    offsets: Vec<usize>,
    /// Flat neighbor lists, each undirected edge present in both directions,
    /// sorted by neighbor id within a vertex.
    neighbors: Vec<u32>,
    /// Undirected edge id of each half-edge, parallel to `neighbors`.
    edge_ids: Vec<u32>,
    /// Canonical endpoints `(u, v)` with `u < v`, indexed by edge id.
    /// Lexicographically sorted by construction.
    edges: Vec<(u32, u32)>,
}

/// Result of [`Graph::build`]: the graph plus how much input was discarded.
pub struct BuildOutcome {
    pub graph: Graph,
    pub self_loops_dropped: u64,
    pub duplicates_dropped: u64,
}

/// Result of [`Graph::generate_rmat`]. `hit_retry_cap` is set when the
/// generator gave up resampling duplicates before reaching the requested
/// edge count; the graph then has fewer edges than asked for.
pub struct RmatOutcome {
    pub graph: Graph,
    pub hit_retry_cap: bool,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Self-loops and duplicate
    /// edges (in either orientation) are dropped and counted.
    pub fn build(edge_list: &[(u32, u32)], n: u32) -> Result<BuildOutcome, GraphError> {
        for &(u, v) in edge_list {
            let bad = if u >= n { Some(u) } else if v >= n { Some(v) } else { None };
            if let Some(vertex) = bad {
                return Err(GraphError::VertexOutOfRange {
                    vertex: vertex as u64,
                    n: n as u64,
                });
            }
        }
        let mut self_loops_dropped = 0u64;
        let mut canonical: Vec<(u32, u32)> = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == v {
                self_loops_dropped += 1;
            } else {
                canonical.push((u.min(v), u.max(v)));
            }
        }
        canonical.sort_unstable();
        let before = canonical.len();
        canonical.dedup();
        let duplicates_dropped = (before - canonical.len()) as u64;
        Ok(BuildOutcome {
            graph: Self::from_canonical(canonical, n),
            self_loops_dropped,
            duplicates_dropped,
        })
    }

    /// [`Graph::build`] without the drop counts.
    pub fn from_edges(edge_list: &[(u32, u32)], n: u32) -> Result<Graph, GraphError> {
        Ok(Self::build(edge_list, n)?.graph)
    }

    /// `edges` must be sorted, deduplicated, loop-free and in `(min, max)`
    /// orientation.
    fn from_canonical(edges: Vec<(u32, u32)>, n: u32) -> Graph {
        assert!(
            edges.len() <= u32::MAX as usize,
            "edge count exceeds 32-bit edge ids"
        );
        let mut degrees = vec![0usize; n as usize];
        for &(u, v) in &edges {
            degrees[u as usize] += 1;
            degrees[v as usize] += 1;
        }
        let mut offsets = vec![0usize; n as usize + 1];
        for v in 0..n as usize {
            offsets[v + 1] = offsets[v] + degrees[v];
        }
        let mut neighbors = vec![0u32; 2 * edges.len()];
        let mut edge_ids = vec![0u32; 2 * edges.len()];
        let mut next = offsets.clone();
        // Edges arrive in lexicographic order, so each vertex sees first its
        // lower neighbors ascending, then its higher neighbors ascending:
        // adjacency lists come out sorted without a second pass.
        for (id, &(u, v)) in edges.iter().enumerate() {
            let iu = next[u as usize];
            neighbors[iu] = v;
            edge_ids[iu] = id as u32;
            next[u as usize] += 1;
            let iv = next[v as usize];
            neighbors[iv] = u;
            edge_ids[iv] = id as u32;
            next[v as usize] += 1;
        }
        Graph {
            n,
            offsets,
            neighbors,
            edge_ids,
            edges,
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbor ids of `v`, sorted ascending.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Undirected edge ids incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, v: u32) -> &[u32] {
        &self.edge_ids[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Canonical endpoints of edge `e`, with the smaller id first.
    pub fn endpoints(&self, e: u32) -> (u32, u32) {
        self.edges[e as usize]
    }

    /// All edges in id (= lexicographic) order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// G(n, m): exactly `m` distinct uniformly sampled undirected edges.
    /// Rejection-samples duplicates, so it is intended for sparse graphs;
    /// deterministic for a fixed seed.
    pub fn generate_gnm(n: u32, m: u64, seed: u64) -> Result<Graph, GraphError> {
        let max = n as u128 * (n.saturating_sub(1)) as u128 / 2;
        if m as u128 > max {
            return Err(GraphError::TooManyEdges {
                requested: m,
                n: n as u64,
                max: max.min(u64::MAX as u128) as u64,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen: HashSet<(u32, u32)> = HashSet::with_capacity(m as usize);
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m as usize);
        while (edges.len() as u64) < m {
            let u = bounded(&mut rng, n as u64) as u32;
            let v = bounded(&mut rng, n as u64) as u32;
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if seen.insert(e) {
                edges.push(e);
            }
        }
        edges.sort_unstable();
        Ok(Self::from_canonical(edges, n))
    }

    /// R-MAT on `2^scale` vertices: each edge picks one of four quadrants per
    /// bit level with probabilities `(a, b, c, 1-a-b-c)`, no per-level noise.
    /// Self-loops and duplicates are resampled so the edge count is exact,
    /// up to a cap of `16 m` total attempts.
    pub fn generate_rmat(
        scale: u32,
        m: u64,
        a: f64,
        b: f64,
        c: f64,
        seed: u64,
    ) -> Result<RmatOutcome, GraphError> {
        if scale > 30 {
            return Err(GraphError::InvalidRmat(format!("scale {scale} > 30")));
        }
        if !(a >= 0.0 && b >= 0.0 && c >= 0.0 && a + b + c <= 1.0 + 1e-12) {
            return Err(GraphError::InvalidRmat(format!(
                "quadrant probabilities a={a} b={b} c={c} must be nonnegative with a+b+c <= 1"
            )));
        }
        let n: u32 = 1 << scale;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen: HashSet<(u32, u32)> = HashSet::with_capacity(m as usize);
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m as usize);
        let cap = 16u64.saturating_mul(m);
        let mut attempts = 0u64;
        while (edges.len() as u64) < m && attempts < cap {
            attempts += 1;
            let mut u = 0u32;
            let mut v = 0u32;
            for _ in 0..scale {
                let r = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                let (ub, vb) = if r < a {
                    (0, 0)
                } else if r < a + b {
                    (0, 1)
                } else if r < a + b + c {
                    (1, 0)
                } else {
                    (1, 1)
                };
                u = (u << 1) | ub;
                v = (v << 1) | vb;
            }
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if seen.insert(e) {
                edges.push(e);
            }
        }
        let hit_retry_cap = (edges.len() as u64) < m;
        edges.sort_unstable();
        Ok(RmatOutcome {
            graph: Self::from_canonical(edges, n),
            hit_retry_cap,
        })
    }

    /// Reads the edge-list text format: first line `n m`, then exactly `m`
    /// lines `u v` with `0 <= u < v < n`, no duplicates, newline-terminated.
    pub fn load(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
        let path = path.as_ref();
        let file = File::open(path)?;
        Self::read_from(BufReader::new(file), &path.display().to_string())
    }

    /// [`Graph::load`] over any reader; `name` is used in error messages.
    pub fn read_from(reader: impl Read, name: &str) -> Result<Graph, GraphError> {
        let parse_err = |line: usize, reason: String| GraphError::Parse {
            path: name.to_string(),
            line,
            reason,
        };
        let mut lines = BufReader::new(reader).lines();
        let header = lines
            .next()
            .ok_or_else(|| parse_err(1, "empty file, expected `n m`".into()))?
            .map_err(GraphError::Io)?;
        let (n, m) = {
            let (ns, ms) = header
                .split_once(' ')
                .ok_or_else(|| parse_err(1, format!("expected `n m`, got `{header}`")))?;
            let n: u32 = ns
                .parse()
                .map_err(|_| parse_err(1, format!("bad vertex count `{ns}`")))?;
            let m: u64 = ms
                .parse()
                .map_err(|_| parse_err(1, format!("bad edge count `{ms}`")))?;
            (n, m)
        };
        let mut seen: HashSet<(u32, u32)> = HashSet::with_capacity(m as usize);
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m as usize);
        for i in 0..m {
            let lineno = i as usize + 2;
            let line = lines
                .next()
                .ok_or_else(|| parse_err(lineno, "unexpected end of file".into()))?
                .map_err(GraphError::Io)?;
            let (us, vs) = line
                .split_once(' ')
                .ok_or_else(|| parse_err(lineno, format!("expected `u v`, got `{line}`")))?;
            let u: u32 = us
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad vertex id `{us}`")))?;
            let v: u32 = vs
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad vertex id `{vs}`")))?;
            if u >= v {
                return Err(parse_err(lineno, format!("expected u < v, got {u} {v}")));
            }
            if v >= n {
                return Err(parse_err(lineno, format!("vertex id {v} out of range for n = {n}")));
            }
            if !seen.insert((u, v)) {
                return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
            }
            edges.push((u, v));
        }
        if let Some(extra) = lines.next() {
            let extra = extra.map_err(GraphError::Io)?;
            if !extra.is_empty() {
                return Err(parse_err(
                    m as usize + 2,
                    format!("expected end of file, got `{extra}`"),
                ));
            }
        }
        edges.sort_unstable();
        Ok(Self::from_canonical(edges, n))
    }

    /// Writes the canonical edge-list format (edges sorted lexicographically).
    pub fn store(&self, path: impl AsRef<Path>) -> Result<(), GraphError> {
        let file = File::create(path)?;
        let mut w = BufWriter::new(file);
        self.write_to(&mut w)?;
        w.flush()?;
        Ok(())
    }

    pub fn write_to(&self, w: &mut impl Write) -> Result<(), GraphError> {
        writeln!(w, "{} {}", self.n, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

/// How to obtain a graph: from a file or from one of the generators.
/// Parsed from `file:PATH`, `gnm:N,M` or `rmat:SCALE,M[,A,B,C]`; the
/// generator seed is supplied separately.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    File { path: String },
    Gnm { n: u32, m: u64 },
    Rmat { scale: u32, m: u64, a: f64, b: f64, c: f64 },
}

/// Default R-MAT quadrant skew; produces the usual power-law degree tail.
pub const RMAT_DEFAULTS: (f64, f64, f64) = (0.5, 0.1, 0.1);

impl GraphSpec {
    /// Materializes the spec. The boolean is the R-MAT retry-cap warning
    /// (always false for the other kinds).
    pub fn build(&self, seed: u64) -> Result<(Graph, bool), GraphError> {
        match self {
            GraphSpec::File { path } => Ok((Graph::load(path)?, false)),
            GraphSpec::Gnm { n, m } => Ok((Graph::generate_gnm(*n, *m, seed)?, false)),
            GraphSpec::Rmat { scale, m, a, b, c } => {
                let out = Graph::generate_rmat(*scale, *m, *a, *b, *c, seed)?;
                Ok((out.graph, out.hit_retry_cap))
            }
        }
    }
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadSpec(s.to_string());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "file" => Ok(GraphSpec::File { path: rest.to_string() }),
            "gnm" => {
                let (ns, ms) = rest.split_once(',').ok_or_else(bad)?;
                Ok(GraphSpec::Gnm {
                    n: ns.trim().parse().map_err(|_| bad())?,
                    m: ms.trim().parse().map_err(|_| bad())?,
                })
            }
            "rmat" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 2 && parts.len() != 5 {
                    return Err(bad());
                }
                let scale: u32 = parts[0].trim().parse().map_err(|_| bad())?;
                let m: u64 = parts[1].trim().parse().map_err(|_| bad())?;
                let (a, b, c) = if parts.len() == 5 {
                    (
                        parts[2].trim().parse().map_err(|_| bad())?,
                        parts[3].trim().parse().map_err(|_| bad())?,
                        parts[4].trim().parse().map_err(|_| bad())?,
                    )
                } else {
                    RMAT_DEFAULTS
                };
                Ok(GraphSpec::Rmat { scale, m, a, b, c })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::File { path } => write!(f, "file:{path}"),
            GraphSpec::Gnm { n, m } => write!(f, "gnm:{n},{m}"),
            GraphSpec::Rmat { scale, m, a, b, c } => {
                if (*a, *b, *c) == RMAT_DEFAULTS {
                    write!(f, "rmat:{scale},{m}")
                } else {
                    write!(f, "rmat:{scale},{m},{a},{b},{c}")
                }
            }
        }
    }
}
