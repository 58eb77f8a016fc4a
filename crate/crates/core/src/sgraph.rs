//! Signed graph data model, the edge-list text format, and degree/triangle
//! statistics.
//!
//! Vertices are 0-based internally. The text format is 1-based; the parser
//! and serializer are the only places that translate between the two.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Sign of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Neg
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "+" | "+1" => Ok(Sign::Pos),
            "-" | "-1" => Ok(Sign::Neg),
            _ => Err(()),
        }
    }
}

/// An undirected signed edge with `u < v` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {}", .0 + 1)]
    SelfLoop(usize),
    #[error("duplicate edge {}-{}", .0 + 1, .1 + 1)]
    DuplicateEdge(usize, usize),
    #[error("vertex {} out of range 1..{n}", .index + 1)]
    OutOfRange { index: usize, n: usize },
}

/// What went wrong on a line of edge-list input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("missing sign token")]
    MissingSign,
    #[error("invalid sign token {0:?}")]
    InvalidSign(String),
    /// 1-based index outside `1..=n` (or zero when no header was given).
    #[error("vertex index {index} out of range")]
    IndexOutOfRange { index: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// A simple signed graph: vertex count plus signed undirected edges.
///
/// Immutable after construction. Edges are kept sorted by `(u, v)` and each
/// vertex's adjacency list is sorted by neighbor index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, Sign)>>,
}

impl SignedGraph {
    /// Builds a graph from 0-based `(u, v, sign)` triples in any orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            list.push(normalize_edge(n, a, b, sign)?);
        }
        list.sort();
        if let Some(w) = list.windows(2).find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v)) {
            return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SignedGraph { n, edges, adj }
    }

    /// Same underlying graph with every edge sign replaced by `f(edge)`.
    pub fn resign<F>(&self, mut f: F) -> SignedGraph
    where
        F: FnMut(&Edge) -> Sign,
    {
        let edges = self.edges.iter().map(|e| Edge { sign: f(e), ..*e }).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Keeps the vertex set and only the edges for which `keep` holds.
    pub fn filter_edges<F>(&self, mut keep: F) -> SignedGraph
    where
        F: FnMut(&Edge) -> bool,
    {
        let edges = self.edges.iter().filter(|e| keep(e)).copied().collect();
        Self::from_sorted(self.n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` with the sign of the connecting edge, sorted by index.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn sign_of(&self, u: usize, v: usize) -> Option<Sign> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    /// True when both graphs have the same vertex count and edge set, ignoring signs.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.edges.iter().zip(&other.edges).all(|(a, b)| (a.u, a.v) == (b.u, b.v))
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }
}

fn normalize_edge(n: usize, a: usize, b: usize, sign: Sign) -> Result<Edge, GraphError> {
    for index in [a, b] {
        if index >= n {
            return Err(GraphError::OutOfRange { index, n });
        }
    }
    if a == b {
        return Err(GraphError::SelfLoop(a));
    }
    let (u, v) = if a < b { (a, b) } else { (b, a) };
    Ok(Edge { u, v, sign })
}

/// Parses the edge-list format.
///
/// ```text
/// # comment
/// n 3
/// 1 2 +
/// 2 3 -1
/// ```
///
/// The `n <count>` header is optional and must precede every edge line; without
/// it the vertex count is the largest index seen. Signs are `+`, `-`, `+1` or
/// `-1`. Line numbers in errors are 1-based.
pub fn parse_signed_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let err = |line: usize, kind: ParseErrorKind| ParseError { line, kind };
    let mut declared: Option<usize> = None;
    let mut seen_edge = false;
    let mut max_index = 0usize;
    let mut edges: Vec<(usize, Edge)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "n" {
            if declared.is_some() || seen_edge || tokens.len() != 2 {
                return Err(err(line_no, ParseErrorKind::Malformed(content.to_string())));
            }
            let count: usize =
                tokens[1].parse().map_err(|_| err(line_no, ParseErrorKind::Malformed(content.to_string())))?;
            if count == 0 {
                return Err(err(line_no, GraphError::NoVertices.into()));
            }
            declared = Some(count);
            continue;
        }

        seen_edge = true;
        if tokens.len() > 3 {
            return Err(err(line_no, ParseErrorKind::Malformed(content.to_string())));
        }
        let mut endpoints = [0usize; 2];
        for (slot, tok) in endpoints.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| err(line_no, ParseErrorKind::Malformed(content.to_string())))?;
        }
        if tokens.len() < 2 {
            return Err(err(line_no, ParseErrorKind::Malformed(content.to_string())));
        }
        let sign_tok = tokens.get(2).ok_or_else(|| err(line_no, ParseErrorKind::MissingSign))?;
        let sign: Sign =
            sign_tok.parse().map_err(|_| err(line_no, ParseErrorKind::InvalidSign(sign_tok.to_string())))?;

        let [a, b] = endpoints;
        let limit = declared.unwrap_or(usize::MAX);
        for index in [a, b] {
            if index == 0 || index > limit {
                return Err(err(line_no, ParseErrorKind::IndexOutOfRange { index }));
            }
        }
        if a == b {
            return Err(err(line_no, GraphError::SelfLoop(a - 1).into()));
        }
        max_index = max_index.max(a).max(b);
        let (u, v) = if a < b { (a - 1, b - 1) } else { (b - 1, a - 1) };
        edges.push((line_no, Edge { u, v, sign }));
    }

    let n = declared.unwrap_or(max_index);
    if n == 0 {
        return Err(err(text.lines().count().max(1), GraphError::NoVertices.into()));
    }

    // Report the later occurrence of a duplicated pair.
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&i| (edges[i].1.u, edges[i].1.v, edges[i].0));
    for w in order.windows(2) {
        let (first, second) = (&edges[w[0]].1, &edges[w[1]]);
        if (first.u, first.v) == (second.1.u, second.1.v) {
            return Err(err(second.0, GraphError::DuplicateEdge(first.u, first.v).into()));
        }
    }

    let mut list: Vec<Edge> = edges.into_iter().map(|(_, e)| e).collect();
    list.sort();
    Ok(SignedGraph::from_sorted(n, list))
}

/// Writes the graph in the edge-list format: header line, then one
/// `i j s` line per edge in sorted order, LF-terminated.
pub fn serialize_signed_graph(g: &SignedGraph) -> String {
    let mut out = format!("n {}\n", g.order());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u + 1, e.v + 1, e.sign));
    }
    out
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_signed_graph(self))
    }
}

impl FromStr for SignedGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_signed_graph(s)
    }
}

/// Per-vertex degree statistics and their aggregates.
///
/// Everything is exact integer data except the average degree and the
/// average 2-degree, which are derived on demand.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeProfile {
    pub degree: Vec<usize>,
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    /// Positive minus negative incident edges.
    pub net: Vec<i64>,
    /// Sum of the neighbors' degrees, i.e. `d_j * m_j`.
    pub neighbor_degree_sum: Vec<u64>,
    pub s1: u64,
    pub s2: u64,
    pub s3: u64,
    pub max_degree: usize,
    /// Smallest `d_i + d_j - 2` over edges; `None` for an edgeless graph.
    pub edge_degree_min: Option<usize>,
    /// Largest `d_i + d_j - 2` over edges; `None` for an edgeless graph.
    pub edge_degree_max: Option<usize>,
}

impl DegreeProfile {
    pub fn order(&self) -> usize {
        self.degree.len()
    }

    /// Average 2-degree `m_j`: mean degree of the neighbors of `v`.
    /// Undefined (`None`) for an isolated vertex.
    pub fn avg2(&self, v: usize) -> Option<f64> {
        match self.degree[v] {
            0 => None,
            d => Some(self.neighbor_degree_sum[v] as f64 / d as f64),
        }
    }

    pub fn avg_degree(&self) -> f64 {
        self.s1 as f64 / self.order() as f64
    }

    pub fn edge_count(&self) -> u64 {
        self.s1 / 2
    }
}

pub fn degree_profile(g: &SignedGraph) -> DegreeProfile {
    let n = g.order();
    let mut positive = vec![0usize; n];
    let mut negative = vec![0usize; n];
    for e in g.edges() {
        let counts = if e.sign.is_negative() { &mut negative } else { &mut positive };
        counts[e.u] += 1;
        counts[e.v] += 1;
    }
    let degree: Vec<usize> = positive.iter().zip(&negative).map(|(p, q)| p + q).collect();
    let net = positive.iter().zip(&negative).map(|(&p, &q)| p as i64 - q as i64).collect();
    let neighbor_degree_sum = (0..n).map(|v| g.neighbors(v).iter().map(|&(w, _)| degree[w] as u64).sum()).collect();
    let power_sum = |p: u32| degree.iter().map(|&d| (d as u64).pow(p)).sum::<u64>();
    let edge_degrees = g.edges().iter().map(|e| degree[e.u] + degree[e.v] - 2);

    DegreeProfile {
        s1: power_sum(1),
        s2: power_sum(2),
        s3: power_sum(3),
        max_degree: degree.iter().copied().max().unwrap_or(0),
        edge_degree_min: edge_degrees.clone().min(),
        edge_degree_max: edge_degrees.max(),
        degree,
        positive,
        negative,
        net,
        neighbor_degree_sum,
    }
}

/// Triangle counts split by triangle sign.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TriangleStats {
    pub positive: u64,
    pub negative: u64,
}

impl TriangleStats {
    pub fn total(&self) -> u64 {
        self.positive + self.negative
    }

    /// Positive minus negative triangles.
    pub fn net(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Counts triangles by intersecting sorted neighbor lists along each edge.
/// Each triangle `u < v < w` is found once, from its edge `(u, v)`.
pub fn triangle_stats(g: &SignedGraph) -> TriangleStats {
    let mut stats = TriangleStats::default();
    for e in g.edges() {
        let (a, b) = (g.neighbors(e.u), g.neighbors(e.v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (x, sx) = a[i];
            let (y, sy) = b[j];
            if x < y {
                i += 1;
            } else if y < x {
                j += 1;
            } else {
                if x > e.v {
                    match e.sign * sx * sy {
                        Sign::Pos => stats.positive += 1,
                        Sign::Neg => stats.negative += 1,
                    }
                }
                i += 1;
                j += 1;
            }
        }
    }
    stats
}
