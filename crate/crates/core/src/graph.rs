//! Finite simple graphs with labeled vertices: induced subgraphs,
//! connectivity, and separator enumeration (cut vertices, cut cliques,
//! inclusion-minimal separators).
//!
//! Vertex order is declaration order. That order is load-bearing: it fixes
//! the canonical order used by word normal forms, so two graphs with the
//! same edges but different declaration orders are different values.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Adjacency is stored in `u64` bitmasks, so vertex count is capped.
pub const MAX_VERTICES: usize = 64;

/// Default bound for exhaustive subset enumeration (minimal separators).
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex label `{0}` (allowed: letters, digits, `_`, `.`)")]
    InvalidLabel(String),
    #[error("loop edges are not allowed (vertex `{0}`)")]
    Loop(String),
    #[error("too many vertices: {0} (limit {MAX_VERTICES})")]
    TooManyVertices(usize),
    #[error("vertex `{0}` lies inside the separating set")]
    InsideSeparator(String),
    #[error("{0} vertices exceed the enumeration bound {1}")]
    EnumerationBound(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A subset of a graph's vertex labels, kept sorted for reproducible output.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    labels: BTreeSet<String>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self { labels: labels.into_iter().map(Into::into).collect() }
    }

    pub fn contains(&self, label: &str) -> bool {
        self.labels.contains(label)
    }

    pub fn insert(&mut self, label: impl Into<String>) {
        self.labels.insert(label.into());
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.labels.is_subset(&other.labels)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        Self { labels: self.labels.union(&other.labels).cloned().collect() }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self { labels: self.labels.intersection(&other.labels).cloned().collect() }
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.labels.iter().cloned().collect()
    }
}

impl FromIterator<String> for VertexSet {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        Self { labels: iter.into_iter().collect() }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Serializable description of a graph, used inside JSON files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// A finite simple graph. No loops, no multi-edges, undirected.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<u64>,
    edges: BTreeSet<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({:?}; {:?})", self.labels, self.edge_labels())
    }
}

fn valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

impl Graph {
    pub fn new<'a, V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = &'a str>,
        E: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut labels = Vec::new();
        let mut index = BTreeMap::new();
        for v in vertices {
            if !valid_label(v) {
                return Err(GraphError::InvalidLabel(v.to_string()));
            }
            if index.insert(v.to_string(), labels.len()).is_some() {
                return Err(GraphError::DuplicateVertex(v.to_string()));
            }
            labels.push(v.to_string());
        }
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        let mut g = Graph { labels, index, adj: Vec::new(), edges: BTreeSet::new() };
        g.adj = vec![0u64; g.labels.len()];
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        let i = self.index_of(u)?;
        let j = self.index_of(v)?;
        if i == j {
            return Err(GraphError::Loop(u.to_string()));
        }
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        self.edges.insert((i.min(j), i.max(j)));
        Ok(())
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<Self, GraphError> {
        Graph::new(
            spec.vertices.iter().map(String::as_str),
            spec.edges.iter().map(|(u, v)| (u.as_str(), v.as_str())),
        )
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec { vertices: self.labels.clone(), edges: self.edge_labels() }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, GraphError> {
        self.index.get(label).copied().ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn adjacent(&self, u: &str, v: &str) -> Result<bool, GraphError> {
        let i = self.index_of(u)?;
        let j = self.index_of(v)?;
        Ok(self.adjacent_idx(i, j))
    }

    pub(crate) fn adjacent_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1 << j) != 0
    }

    pub(crate) fn adj_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as label pairs, ordered by vertex indices.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|&(i, j)| (self.labels[i].clone(), self.labels[j].clone())).collect()
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.labels.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.labels.len())
        }
    }

    pub(crate) fn mask_of(&self, s: &VertexSet) -> Result<u64, GraphError> {
        let mut m = 0u64;
        for l in s.iter() {
            m |= 1 << self.index_of(l)?;
        }
        Ok(m)
    }

    pub(crate) fn set_from_mask(&self, mut m: u64) -> VertexSet {
        let mut out = VertexSet::new();
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            out.insert(self.labels[i].clone());
        }
        out
    }

    /// Subgraph on `s` with every edge of `self` whose endpoints lie in `s`.
    /// Keeps the ambient declaration order on the surviving vertices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        let mask = self.mask_of(s)?;
        let vertices: Vec<&str> =
            (0..self.labels.len()).filter(|i| mask & (1 << i) != 0).map(|i| self.label(i)).collect();
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .filter(|&&(i, j)| mask & (1 << i) != 0 && mask & (1 << j) != 0)
            .map(|&(i, j)| (self.label(i), self.label(j)))
            .collect();
        Graph::new(vertices, edges)
    }

    /// Connected components of the subgraph induced on `mask`,
    /// ordered by lowest vertex index.
    pub(crate) fn mask_components(&self, mask: u64) -> Vec<u64> {
        let mut rem = mask;
        let mut out = Vec::new();
        while rem != 0 {
            let mut comp = rem & rem.wrapping_neg();
            loop {
                let mut grown = comp;
                let mut bits = comp;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    grown |= self.adj[i] & mask;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            rem &= !comp;
        }
        out
    }

    /// Partition into maximal connected vertex sets, ordered by least label.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut parts: Vec<VertexSet> =
            self.mask_components(self.full_mask()).into_iter().map(|m| self.set_from_mask(m)).collect();
        parts.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.mask_components(self.full_mask()).len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.labels.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    fn mask_is_separating(&self, mask: u64) -> bool {
        self.mask_components(self.full_mask() & !mask).len() >= 2
    }

    /// True iff removing `s` leaves a disconnected graph. The full vertex set
    /// is never separating (its complement is empty); the empty set is
    /// separating exactly when the graph is disconnected.
    pub fn is_separating(&self, s: &VertexSet) -> Result<bool, GraphError> {
        Ok(self.mask_is_separating(self.mask_of(s)?))
    }

    /// True iff `u` and `v` lie in distinct components after removing `s`.
    pub fn separates(&self, s: &VertexSet, u: &str, v: &str) -> Result<bool, GraphError> {
        let mask = self.mask_of(s)?;
        let iu = self.index_of(u)?;
        let iv = self.index_of(v)?;
        if mask & (1 << iu) != 0 {
            return Err(GraphError::InsideSeparator(u.to_string()));
        }
        if mask & (1 << iv) != 0 {
            return Err(GraphError::InsideSeparator(v.to_string()));
        }
        let comps = self.mask_components(self.full_mask() & !mask);
        let cu = comps.iter().find(|c| *c & (1 << iu) != 0);
        let cv = comps.iter().find(|c| *c & (1 << iv) != 0);
        Ok(cu != cv)
    }

    /// All vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> VertexSet {
        let mut out = VertexSet::new();
        for i in 0..self.labels.len() {
            if self.mask_is_separating(1 << i) {
                out.insert(self.labels[i].clone());
            }
        }
        out
    }

    /// Every complete subset, the empty set included.
    fn clique_masks(&self) -> Vec<u64> {
        fn extend(g: &Graph, base: u64, cand: u64, out: &mut Vec<u64>) {
            let mut c = cand;
            while c != 0 {
                let i = c.trailing_zeros() as usize;
                c &= c - 1;
                let next = base | (1 << i);
                out.push(next);
                extend(g, next, c & g.adj[i], out);
            }
        }
        let mut out = vec![0u64];
        extend(self, 0, self.full_mask(), &mut out);
        out
    }

    /// All separating vertex sets that induce a complete subgraph, sorted by
    /// size then lexicographically. Starts with the empty set when the graph
    /// is disconnected.
    pub fn cut_cliques(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .clique_masks()
            .into_iter()
            .filter(|&m| self.mask_is_separating(m))
            .map(|m| self.set_from_mask(m))
            .collect();
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    /// All inclusion-minimal separating vertex sets, by exhaustive subset
    /// scan. Brute force on purpose: desk scale, correctness first.
    pub fn minimal_separators(&self) -> Result<Vec<VertexSet>, GraphError> {
        self.minimal_separators_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn minimal_separators_bounded(&self, bound: usize) -> Result<Vec<VertexSet>, GraphError> {
        let n = self.labels.len();
        if n > bound {
            return Err(GraphError::EnumerationBound(n, bound));
        }
        let mut seps: Vec<u64> = (0..(1u64 << n)).filter(|&m| self.mask_is_separating(m)).collect();
        seps.sort_by_key(|m| m.count_ones());
        let mut minimal: Vec<u64> = Vec::new();
        for m in seps {
            if !minimal.iter().any(|&p| p & !m == 0) {
                minimal.push(m);
            }
        }
        let mut out: Vec<VertexSet> = minimal.into_iter().map(|m| self.set_from_mask(m)).collect();
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        Ok(out)
    }

    /// Parse a graph from text. Two formats are accepted:
    ///
    /// * plain: first content line lists the vertex labels, each following
    ///   non-empty line is `u v` declaring an edge; `#` starts a comment;
    /// * a DOT subset: `graph [name] { a -- b; c; }` with edge chains,
    ///   statements separated by `;` or line breaks, no attributes.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let looks_like_dot = text
            .lines()
            .map(|l| strip_comment(l).trim())
            .find(|l| !l.is_empty())
            .map(|l| l.starts_with("graph") || l.starts_with("strict") || l.starts_with("digraph"))
            .unwrap_or(false);
        if looks_like_dot {
            Self::parse_dot(text)
        } else {
            Self::parse_plain(text)
        }
    }

    fn parse_plain(text: &str) -> Result<Self, GraphError> {
        let mut vertices: Option<Vec<&str>> = None;
        let mut edges: Vec<(&str, &str)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if vertices.is_none() {
                vertices = Some(toks);
            } else if toks.len() == 2 {
                edges.push((toks[0], toks[1]));
            } else {
                return Err(GraphError::Parse {
                    line: no + 1,
                    msg: format!("expected `u v`, found {} token(s)", toks.len()),
                });
            }
        }
        let vertices = vertices.ok_or(GraphError::Parse { line: 1, msg: "empty graph file".into() })?;
        Graph::new(vertices, edges)
    }

    fn parse_dot(text: &str) -> Result<Self, GraphError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        let mut seen = BTreeSet::new();
        let mut register = |id: &str| {
            if seen.insert(id.to_string()) {
                vertices.push(id.to_string());
            }
        };
        let mut in_body = false;
        let mut closed = false;
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let mut rest = strip_comment(raw).trim();
            if rest.is_empty() {
                continue;
            }
            if closed {
                return Err(GraphError::Parse { line, msg: "content after closing `}`".into() });
            }
            if !in_body {
                let Some(brace) = rest.find('{') else {
                    let head = rest.split_whitespace().next().unwrap_or("");
                    if head == "digraph" {
                        return Err(GraphError::Parse { line, msg: "directed graphs are not supported".into() });
                    }
                    return Err(GraphError::Parse { line, msg: "expected `graph ... {`".into() });
                };
                let header: Vec<&str> = rest[..brace].split_whitespace().collect();
                let header = if header.first() == Some(&"strict") { &header[1..] } else { &header[..] };
                match header.first() {
                    Some(&"graph") => {}
                    Some(&"digraph") => {
                        return Err(GraphError::Parse { line, msg: "directed graphs are not supported".into() })
                    }
                    _ => return Err(GraphError::Parse { line, msg: "expected `graph ... {`".into() }),
                }
                in_body = true;
                rest = rest[brace + 1..].trim();
                if rest.is_empty() {
                    continue;
                }
            }
            let mut body = rest;
            if let Some(brace) = body.find('}') {
                if !body[brace + 1..].trim().is_empty() {
                    return Err(GraphError::Parse { line, msg: "content after closing `}`".into() });
                }
                body = body[..brace].trim_end();
                closed = true;
            }
            for stmt in body.split(';') {
                let stmt = stmt.trim();
                if stmt.is_empty() {
                    continue;
                }
                if stmt.contains('[') || stmt.contains('=') {
                    return Err(GraphError::Parse { line, msg: "attributes are not supported".into() });
                }
                let spaced = stmt.replace("--", " -- ");
                let toks: Vec<&str> = spaced.split_whitespace().collect();
                if matches!(toks[0], "node" | "edge" | "graph" | "subgraph") {
                    return Err(GraphError::Parse { line, msg: format!("`{}` statements are not supported", toks[0]) });
                }
                if toks.len() == 1 {
                    register(toks[0]);
                    continue;
                }
                if toks.len() % 2 == 0 || toks.iter().skip(1).step_by(2).any(|t| *t != "--") {
                    return Err(GraphError::Parse { line, msg: format!("malformed statement `{stmt}`") });
                }
                for t in toks.iter().step_by(2) {
                    register(t);
                }
                for pair in toks.chunks(2).collect::<Vec<_>>().windows(2) {
                    edges.push((pair[0][0].to_string(), pair[1][0].to_string()));
                }
            }
        }
        if !in_body || !closed {
            return Err(GraphError::Parse { line: text.lines().count().max(1), msg: "unterminated graph block".into() });
        }
        Graph::new(
            vertices.iter().map(String::as_str),
            edges.iter().map(|(u, v)| (u.as_str(), v.as_str())),
        )
    }
}

fn strip_comment(line: &str) -> &str {
    let cut = line.find('#').into_iter().chain(line.find("//")).min();
    match cut {
        Some(i) => &line[..i],
        None => line,
    }
}
