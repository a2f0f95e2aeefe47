//! Immutable undirected graphs with packed adjacency rows, plus the three
//! on-disk formats (edge list, DOT, graph document).

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connection::ConnectionKind;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tuple::KTuple;

/// How a graph was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Arrangement { n: usize, k: usize, r: usize },
    Cayley { n: usize, kind: ConnectionKind },
    Generic,
}

/// Per-vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Labels {
    None,
    Tuples(Vec<KTuple>),
    Perms(Vec<Permutation>),
}

impl Labels {
    fn len(&self) -> Option<usize> {
        match self {
            Labels::None => None,
            Labels::Tuples(t) => Some(t.len()),
            Labels::Perms(p) => Some(p.len()),
        }
    }

    pub fn render(&self, v: usize) -> String {
        match self {
            Labels::None => v.to_string(),
            Labels::Tuples(t) => t[v].to_string(),
            Labels::Perms(p) => p[v].to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    words: usize,
    adjacency: Vec<u64>,
    neighbors: Vec<Vec<u32>>,
    labels: Labels,
    family: Family,
}

/// Number of `u64` words in one adjacency row.
#[inline]
pub(crate) fn row_words(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// Builds a graph from an undirected edge list. Duplicate edges are
    /// merged; self-loops and out-of-range endpoints are errors.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_edges(vertex_count, edges, Labels::None, Family::Generic)
    }

    pub(crate) fn with_edges(
        vertex_count: usize,
        edges: &[(usize, usize)],
        labels: Labels,
        family: Family,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidParameters(
                "graph needs at least one vertex".into(),
            ));
        }
        if let Some(len) = labels.len() {
            if len != vertex_count {
                return Err(Error::InvalidParameters(format!(
                    "{len} labels for {vertex_count} vertices"
                )));
            }
        }
        let words = row_words(vertex_count);
        let mut adjacency = vec![0u64; words * vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("self-loop at {u}")));
            }
            adjacency[u * words + v / 64] |= 1 << (v % 64);
            adjacency[v * words + u / 64] |= 1 << (u % 64);
        }
        Ok(Self::from_adjacency(
            vertex_count,
            adjacency,
            labels,
            family,
        ))
    }

    pub(crate) fn from_adjacency(
        vertex_count: usize,
        adjacency: Vec<u64>,
        labels: Labels,
        family: Family,
    ) -> Self {
        let words = row_words(vertex_count);
        let neighbors = (0..vertex_count)
            .map(|u| {
                bits(&adjacency[u * words..(u + 1) * words])
                    .map(|v| v as u32)
                    .collect()
            })
            .collect();
        Graph {
            vertex_count,
            words,
            adjacency,
            neighbors,
            labels,
            family,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adjacency[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.vertex_count)
            .all(|v| self.degree(v) == d)
            .then_some(d)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count)
            .flat_map(|u| {
                self.neighbors[u]
                    .iter()
                    .filter(move |&&v| (v as usize) > u)
                    .map(move |&v| (u, v as usize))
            })
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count;
        let mut adjacency = vec![0u64; self.words * n];
        for u in 0..n {
            for (w, word) in adjacency[u * self.words..(u + 1) * self.words]
                .iter_mut()
                .enumerate()
            {
                *word = !self.adjacency[u * self.words + w];
            }
            adjacency[u * self.words + u / 64] &= !(1 << (u % 64));
            if !n.is_multiple_of(64) {
                adjacency[(u + 1) * self.words - 1] &= (1u64 << (n % 64)) - 1;
            }
        }
        Graph::from_adjacency(n, adjacency, Labels::None, Family::Generic)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.neighbors[u] {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v as usize);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The copy in which vertex `v` becomes `f(v)`. Labels travel with their
    /// vertices; the family tag is dropped since vertex order no longer
    /// follows the construction.
    pub fn relabeled(&self, f: &Permutation) -> Result<Graph> {
        if f.degree() != self.vertex_count {
            return Err(Error::DegreeMismatch {
                left: self.vertex_count,
                right: f.degree(),
            });
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (f.apply(u), f.apply(v)))
            .collect();
        let inv = f.inverse();
        let labels = match &self.labels {
            Labels::None => Labels::None,
            Labels::Tuples(t) => {
                Labels::Tuples((0..t.len()).map(|v| t[inv.apply(v)].clone()).collect())
            }
            Labels::Perms(p) => {
                Labels::Perms((0..p.len()).map(|v| p[inv.apply(v)].clone()).collect())
            }
        };
        Graph::with_edges(self.vertex_count, &edges, labels, Family::Generic)
    }

    /// A relabeling by a uniformly random permutation drawn from `seed`.
    pub fn shuffled(&self, seed: u64) -> (Graph, Permutation) {
        let f = random_permutation(self.vertex_count, seed);
        (self.relabeled(&f).expect("degree matches"), f)
    }

    /// One `u v` pair per line, 0-based, preceded by a `# vertices N`
    /// comment so isolated vertices survive a round trip.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# vertices {}\n", self.vertex_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.vertex_count {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", self.labels.render(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_graphdoc(&self) -> String {
        let (family, n, k, r, kind) = match self.family {
            Family::Arrangement { n, k, r } => ("arrangement", Some(n), Some(k), Some(r), None),
            Family::Cayley { n, kind } => ("cayley", Some(n), None, None, Some(kind)),
            Family::Generic => ("generic", None, None, None, None),
        };
        let labels = match &self.labels {
            Labels::None => None,
            Labels::Tuples(t) => Some(t.iter().map(KTuple::one_based).collect()),
            Labels::Perms(p) => Some(p.iter().map(Permutation::one_based).collect()),
        };
        let doc = GraphDoc {
            family: family.to_string(),
            n,
            k,
            r,
            kind,
            vertex_count: self.vertex_count,
            label_kind: match &self.labels {
                Labels::None => None,
                Labels::Tuples(_) => Some("tuple".into()),
                Labels::Perms(_) => Some("permutation".into()),
            },
            labels,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        };
        let mut s = serde_json::to_string(&doc).expect("graph document serializes");
        s.push('\n');
        s
    }

    pub fn from_graphdoc(text: &str) -> Result<Graph> {
        let doc: GraphDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph document: {e}")))?;
        let missing = |field: &str| Error::Parse(format!("graph document lacks {field:?}"));
        let family = match doc.family.as_str() {
            "arrangement" => Family::Arrangement {
                n: doc.n.ok_or_else(|| missing("n"))?,
                k: doc.k.ok_or_else(|| missing("k"))?,
                r: doc.r.ok_or_else(|| missing("r"))?,
            },
            "cayley" => Family::Cayley {
                n: doc.n.ok_or_else(|| missing("n"))?,
                kind: doc.kind.ok_or_else(|| missing("kind"))?,
            },
            "generic" => Family::Generic,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        let labels = match (doc.label_kind.as_deref(), doc.labels) {
            (_, None) => Labels::None,
            (Some("tuple"), Some(rows)) => {
                let n = match family {
                    Family::Arrangement { n, .. } => n,
                    _ => rows.iter().flatten().copied().max().unwrap_or(0),
                };
                Labels::Tuples(
                    rows.iter()
                        .map(|row| KTuple::from_one_based(n, row))
                        .collect::<Result<_>>()?,
                )
            }
            (Some("permutation"), Some(rows)) => Labels::Perms(
                rows.iter()
                    .map(|row| Permutation::from_one_based(row))
                    .collect::<Result<_>>()?,
            ),
            (other, Some(_)) => {
                return Err(Error::Parse(format!("unknown label kind {other:?}")));
            }
        };
        if let Labels::Tuples(t) = &labels {
            let mut sorted: Vec<_> = t.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != t.len() {
                return Err(Error::Parse("duplicate vertex labels".into()));
            }
        }
        if let Labels::Perms(p) = &labels {
            let mut sorted: Vec<_> = p.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != p.len() {
                return Err(Error::Parse("duplicate vertex labels".into()));
            }
        }
        let edges: Vec<_> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::with_edges(doc.vertex_count, &edges, labels, family)
    }

    /// Parses a 0-based edge list. The vertex count comes from a
    /// `# vertices N` comment when present, else from the largest endpoint.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut declared = None;
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(n) = comment.trim().strip_prefix("vertices") {
                    declared = Some(n.trim().parse::<usize>().map_err(|e| {
                        Error::Parse(format!("line {}: bad vertex count: {e}", lineno + 1))
                    })?);
                }
                continue;
            }
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected `u v`, got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let n = declared.unwrap_or(inferred);
        if n < inferred {
            return Err(Error::Parse(format!(
                "edge endpoint {} exceeds declared vertex count {n}",
                inferred - 1
            )));
        }
        Graph::from_edges(n, &edges)
    }

    /// Graph document if the text is JSON, edge list otherwise.
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Self::from_graphdoc(text)
        } else {
            Self::from_edge_list(text)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<ConnectionKind>,
    vertex_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label_kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Vec<usize>>>,
    edges: Vec<[usize; 2]>,
}

/// Indexes of set bits, ascending.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

/// A uniformly random permutation of `0..n`, reproducible from `seed`.
pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(&mut rng);
    Permutation::from_images(images).expect("shuffle is a bijection")
}
