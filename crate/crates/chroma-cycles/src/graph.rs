//! Dense small-graph representation (n ≤ 64, one adjacency word per vertex),
//! digraphs derived from it, and constructors for the named graphs used
//! throughout the test corpus.

use serde::Serialize;
use thiserror::Error;

/// Hard cap on vertex count: one `u64` adjacency row per vertex.
pub const MAX_VERTICES: usize = 64;

/// Bitset with the low `n` bits set.
pub fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loops are not allowed (vertex {v})")]
    SelfLoop { v: usize },
    #[error("edge {u}-{v} is not present in the graph")]
    MissingEdge { u: usize, v: usize },
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("named graph `{name}` expects {expected} parameter(s), got {got}")]
    BadParamCount {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("invalid parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },
}

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Panics if `a == b`; endpoints are stored in sorted order.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// The two endpoints as `(u, v)` with `u < v`.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`, adjacency kept as bitset rows.
///
/// Values are immutable once built; every operation takes `&self` and returns
/// a fresh graph where it changes anything.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts an edge; idempotent on duplicates.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All edges with `u < v`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    /// The same graph with one edge removed.
    pub fn edge_deleted(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge { u: e.u, v: e.v });
        }
        let mut g = self.clone();
        g.adj[e.u] &= !(1 << e.v);
        g.adj[e.v] &= !(1 << e.u);
        Ok(g)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    /// Connectivity check, isolated vertices count as their own component.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full_mask(self.n)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n, self.edge_count())?;
        f.debug_list()
            .entries(self.edges().iter().map(|e| (e.u, e.v)))
            .finish()?;
        write!(f, ")")
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Directed graph on `0..n`; arc rows are out-neighbor bitsets.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Digraph {
            n,
            out: vec![0; n],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.out[u] |= 1 << v;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] & (1 << v) != 0
    }

    pub fn out_bits(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.out[v])
    }

    pub fn in_bits(&self, v: usize) -> u64 {
        let mut bits = 0u64;
        for u in 0..self.n {
            if self.out[u] & (1 << v) != 0 {
                bits |= 1 << u;
            }
        }
        bits
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in BitIter(self.out[u]) {
                out.push((u, v));
            }
        }
        out
    }

    /// Bitset of vertices reachable from `x`, including `x` itself.
    pub fn reach_from(&self, x: usize) -> u64 {
        let mut seen = 1u64 << x;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.out[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Arc-reversed copy.
    pub fn reversed(&self) -> Digraph {
        let mut rev = Digraph::new(self.n);
        for u in 0..self.n {
            for v in BitIter(self.out[u]) {
                rev.out[v] |= 1 << u;
            }
        }
        rev
    }

    /// True when every edge of `g` appears as exactly one arc and nothing else does.
    pub fn orients(&self, g: &Graph) -> bool {
        if self.n != g.n() {
            return false;
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                let fw = self.has_arc(u, v);
                let bw = self.has_arc(v, u);
                if g.has_edge(u, v) {
                    if fw == bw {
                        return false;
                    }
                } else if fw || bw {
                    return false;
                }
            }
        }
        true
    }

    /// Lexicographically smallest shortest directed path from `s` to `t`,
    /// as a vertex sequence starting at `s` and ending at `t`.
    pub fn lex_shortest_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        assert!(s != t);
        // Distance-to-target via reverse BFS, then greedy descent.
        let rev = self.reversed();
        let mut dist = vec![usize::MAX; self.n];
        dist[t] = 0;
        let mut queue = std::collections::VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            for u in rev.out_neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        if dist[s] == usize::MAX {
            return None;
        }
        let mut path = vec![s];
        let mut cur = s;
        while cur != t {
            let next = self
                .out_neighbors(cur)
                .find(|&w| dist[w] != usize::MAX && dist[w] + 1 == dist[cur])
                .expect("BFS distances admit a descending step");
            path.push(next);
            cur = next;
        }
        Some(path)
    }

    /// A deterministic directed cycle, if one exists: the shortest cycle
    /// through the smallest vertex lying on any cycle, lex-smallest among
    /// those. Returned as a vertex sequence without repeating the start.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        for root in 0..self.n {
            // Shortest path from any out-neighbor of root back to root.
            let mut best: Option<Vec<usize>> = None;
            for w in self.out_neighbors(root) {
                if w == root {
                    continue;
                }
                let cand = self.lex_shortest_path(w, root).map(|mut p| {
                    p.pop(); // drop root, re-added in front
                    let mut c = vec![root];
                    c.append(&mut p);
                    c
                });
                best = match (best, cand) {
                    (None, c) => c,
                    (b, None) => b,
                    (Some(b), Some(c)) => {
                        if (c.len(), &c) < (b.len(), &b) {
                            Some(c)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            if best.is_some() {
                return best;
            }
        }
        None
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs=", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

pub fn complete(k: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(k)?;
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParams {
            name: "cycle".into(),
            reason: format!("need n >= 3, got {n}"),
        });
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParams {
            name: "path".into(),
            reason: "need n >= 1".into(),
        });
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n.saturating_sub(1) {
        g.add_edge(v, v + 1)?;
    }
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `C_n` on `0..n` plus a dominating hub `n`.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    let mut g = cycle(n).map_err(|_| GraphError::BadParams {
        name: "wheel".into(),
        reason: format!("rim needs n >= 3, got {n}"),
    })?;
    let mut w = Graph::empty(n + 1)?;
    for e in g.edges() {
        w.add_edge(e.u(), e.v())?;
    }
    for v in 0..n {
        w.add_edge(v, n)?;
    }
    g = w;
    Ok(g)
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap(); // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap(); // inner pentagram
        g.add_edge(i, 5 + i).unwrap(); // spokes
    }
    g
}

/// Vertex set `Z_k`, with `i ~ j` iff `d <= (j - i) mod k <= k - d`.
pub fn circular_clique(k: usize, d: usize) -> Result<Graph, GraphError> {
    if d == 0 || k < 2 * d {
        return Err(GraphError::BadParams {
            name: "circular_clique".into(),
            reason: format!("need k >= 2d and d >= 1, got k={k}, d={d}"),
        });
    }
    let mut g = Graph::empty(k)?;
    for i in 0..k {
        for j in i + 1..k {
            let diff = (j - i) % k;
            if diff >= d && diff <= k - d {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// The Mycielskian of `C_5`: cycle `0..5`, shadows `5..10`, apex `10`.
pub fn grotzsch() -> Graph {
    let mut g = Graph::empty(11).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        // shadow of vertex i sees i's cycle neighbors
        g.add_edge(5 + i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, (i + 4) % 5).unwrap();
        g.add_edge(5 + i, 10).unwrap();
    }
    g
}

/// `K_{5,5}` on parts `{0..5}` and `{5..10}`, plus two 5-cycles on `{10..15}`
/// and `{15..20}`, matched to the parts by `i <-> i + 10`.
pub fn toft() -> Graph {
    let mut g = Graph::empty(20).unwrap();
    for u in 0..5 {
        for v in 5..10 {
            g.add_edge(u, v).unwrap();
        }
    }
    for i in 0..5 {
        g.add_edge(10 + i, 10 + (i + 1) % 5).unwrap();
        g.add_edge(15 + i, 15 + (i + 1) % 5).unwrap();
        g.add_edge(i, i + 10).unwrap();
        g.add_edge(5 + i, 15 + i).unwrap();
    }
    g
}

/// Builds a graph from an identifier plus integer parameters.
///
/// Accepted names: `complete k`, `cycle n`, `path n`, `complete_bipartite a b`,
/// `wheel n`, `petersen`, `circular_clique k d`, `grotzsch`, `toft`.
/// Hyphens and underscores in the name are interchangeable.
pub fn make_named(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let key = name.replace('-', "_");
    let want = |expected: usize| -> Result<(), GraphError> {
        if params.len() == expected {
            Ok(())
        } else {
            Err(GraphError::BadParamCount {
                name: name.to_string(),
                expected,
                got: params.len(),
            })
        }
    };
    match key.as_str() {
        "complete" => {
            want(1)?;
            complete(params[0])
        }
        "cycle" => {
            want(1)?;
            cycle(params[0])
        }
        "path" => {
            want(1)?;
            path(params[0])
        }
        "complete_bipartite" => {
            want(2)?;
            complete_bipartite(params[0], params[1])
        }
        "wheel" => {
            want(1)?;
            wheel(params[0])
        }
        "petersen" => {
            want(0)?;
            Ok(petersen())
        }
        "circular_clique" => {
            want(2)?;
            circular_clique(params[0], params[1])
        }
        "grotzsch" => {
            want(0)?;
            Ok(grotzsch())
        }
        "toft" => {
            want(0)?;
            Ok(toft())
        }
        _ => Err(GraphError::UnknownName(name.to_string())),
    }
}
