//! Individualization-refinement search.
//!
//! One depth-first pass over the search tree produces both a generating set
//! of the automorphism group and a canonical form. Leaves are ordered by
//! their sequence of refinement traces and then by the relabeled adjacency
//! matrix; the canonical leaf is the greatest one. Three kinds of pruning
//! are used:
//!
//! * a node whose trace sequence is smaller than the best leaf's and which
//!   has left the first path's trace cannot lead to the canonical leaf or
//!   to an automorphism with the first leaf;
//! * children in the same orbit of the discovered generators that fix the
//!   current prefix pointwise have isomorphic subtrees, so only the least
//!   one is explored;
//! * when a leaf matches the first or best leaf, the search returns to the
//!   common ancestor of the two leaves.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::perm::Permutation;
use crate::schreier::StabilizerChain;

use super::partition::OrderedPartition;

/// Default cap on search-tree nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// The automorphism group and canonical form of a graph.
#[derive(Debug, Clone)]
pub struct AutResult {
    pub generators: Vec<Permutation>,
    pub order: u128,
    /// Vertex count (u32 little-endian) followed by the canonically
    /// relabeled adjacency matrix, row-major, eight bits per byte.
    pub certificate: Vec<u8>,
    /// Position `i` of the canonical order holds vertex `canonical_labeling[i]`.
    pub canonical_labeling: Vec<usize>,
    pub chain: StabilizerChain,
    pub nodes: u64,
}

impl AutResult {
    pub fn certificate_hex(&self) -> String {
        to_hex(&self.certificate)
    }
}

pub fn to_hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

struct Leaf {
    lab: Vec<u32>,
    canon: Vec<u64>,
}

struct Search<'g> {
    graph: &'g Graph,
    budget: u64,
    nodes: u64,
    gens: Vec<Permutation>,
    first: Option<Leaf>,
    first_traces: Vec<u64>,
    first_path: Vec<u32>,
    best: Option<Leaf>,
    best_traces: Vec<u64>,
    best_path: Vec<u32>,
    /// Individualized vertices from the root to the current node.
    path: Vec<u32>,
    /// Refinement traces from the root to the current node, inclusive.
    traces: Vec<u64>,
}

/// Union-find with the least element as representative.
struct Orbits {
    parent: Vec<u32>,
}

impl Orbits {
    fn new(n: usize, gens: &[&Permutation]) -> Self {
        let mut o = Orbits {
            parent: (0..n as u32).collect(),
        };
        for g in gens {
            for v in 0..n {
                o.union(v, g.apply(v));
            }
        }
        o
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }
}

fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph, budget: u64) -> Self {
        Search {
            graph,
            budget,
            nodes: 0,
            gens: Vec::new(),
            first: None,
            first_traces: Vec::new(),
            first_path: Vec::new(),
            best: None,
            best_traces: Vec::new(),
            best_path: Vec::new(),
            path: Vec::new(),
            traces: Vec::new(),
        }
    }

    fn run(&mut self) -> Result<()> {
        let n = self.graph.vertex_count();
        let mut root = OrderedPartition::unit(n);
        let trace = root.refine_from(self.graph, &[0]);
        self.traces.push(trace);
        self.visit(&root, true)?;
        Ok(())
    }

    fn compare_with_best(&self) -> Ordering {
        for (i, t) in self.traces.iter().enumerate() {
            match self.best_traces.get(i) {
                None => return Ordering::Greater,
                Some(b) => match t.cmp(b) {
                    Ordering::Equal => {}
                    other => return other,
                },
            }
        }
        Ordering::Equal
    }

    /// Returns `Some(level)` to abandon everything below the node at
    /// `level` on the current path and resume with its next child.
    fn visit(&mut self, part: &OrderedPartition, eq_first: bool) -> Result<Option<usize>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let level = self.path.len();
        let trace = self.traces[level];
        let on_first_path = self.first.is_none();
        let (eq_first, cmp) = if on_first_path {
            self.first_traces.push(trace);
            (true, Ordering::Equal)
        } else {
            (
                eq_first && self.first_traces.get(level) == Some(&trace),
                self.compare_with_best(),
            )
        };
        if !on_first_path && !eq_first && cmp == Ordering::Less {
            return Ok(None);
        }
        if part.is_discrete() {
            return Ok(self.leaf(part, eq_first, cmp));
        }

        let (_, cell) = part.target_cell().expect("non-discrete partition");
        let mut children: Vec<u32> = cell.to_vec();
        children.sort_unstable();

        let mut orbits: Option<Orbits> = None;
        let mut orbit_gens = usize::MAX;
        for w in children {
            if self.gens.len() != orbit_gens {
                let fixing: Vec<&Permutation> = self
                    .gens
                    .iter()
                    .filter(|g| self.path.iter().all(|&p| g.apply(p as usize) == p as usize))
                    .collect();
                orbits = Some(Orbits::new(self.graph.vertex_count(), &fixing));
                orbit_gens = self.gens.len();
            }
            if let Some(o) = orbits.as_mut() {
                if o.find(w as usize) != w as usize {
                    continue;
                }
            }
            let mut child = part.clone();
            let s = child.individualize(w as usize);
            let t = child.refine_from(self.graph, &[s]);
            self.path.push(w);
            self.traces.push(t);
            let result = self.visit(&child, eq_first);
            self.path.pop();
            self.traces.pop();
            if let Some(l) = result? {
                if l < level {
                    return Ok(Some(l));
                }
            }
        }
        Ok(None)
    }

    fn leaf(&mut self, part: &OrderedPartition, eq_first: bool, cmp: Ordering) -> Option<usize> {
        let lab = part.lab().to_vec();
        let canon = relabeled_rows(self.graph, &lab);
        let leaf = Leaf { lab, canon };

        if self.first.is_none() {
            self.first_path = self.path.clone();
            self.best_path = self.path.clone();
            self.best_traces = self.traces.clone();
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                canon: leaf.canon.clone(),
            });
            self.first = Some(leaf);
            return None;
        }

        let first = self.first.as_ref().expect("set above");
        if eq_first && leaf.canon == first.canon {
            let gamma = map_between(&first.lab, &leaf.lab);
            self.record(gamma);
            return Some(common_prefix(&self.path, &self.first_path));
        }
        let best = self.best.as_ref().expect("set with first");
        match cmp {
            Ordering::Equal if leaf.canon == best.canon => {
                let gamma = map_between(&best.lab, &leaf.lab);
                self.record(gamma);
                Some(common_prefix(&self.path, &self.best_path))
            }
            Ordering::Greater => {
                self.set_best(leaf);
                None
            }
            Ordering::Equal if leaf.canon > best.canon => {
                self.set_best(leaf);
                None
            }
            _ => None,
        }
    }

    fn set_best(&mut self, leaf: Leaf) {
        self.best = Some(leaf);
        self.best_traces = self.traces.clone();
        self.best_path = self.path.clone();
    }

    fn record(&mut self, gamma: Permutation) {
        debug_assert!(crate::arrangement::is_automorphism(self.graph, &gamma).unwrap_or(false));
        if !gamma.is_identity() && !self.gens.contains(&gamma) {
            self.gens.push(gamma);
        }
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn map_between(from: &[u32], to: &[u32]) -> Permutation {
    let mut images = vec![0u32; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        images[a as usize] = b;
    }
    Permutation::from_raw(images)
}

/// Adjacency rows of the graph relabeled so that `lab[i]` becomes `i`.
fn relabeled_rows(graph: &Graph, lab: &[u32]) -> Vec<u64> {
    let n = lab.len();
    let words = graph.words();
    let mut pos = vec![0usize; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut rows = vec![0u64; words * n];
    for (i, &v) in lab.iter().enumerate() {
        for &u in graph.neighbors(v as usize) {
            let j = pos[u as usize];
            rows[i * words + j / 64] |= 1 << (j % 64);
        }
    }
    rows
}

fn certificate_bytes(n: usize, words: usize, rows: &[u64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(8));
    out.extend_from_slice(&(n as u32).to_le_bytes());
    let mut byte = 0u8;
    let mut filled = 0;
    for i in 0..n {
        let row = &rows[i * words..(i + 1) * words];
        for j in 0..n {
            byte = (byte << 1) | ((row[j / 64] >> (j % 64)) & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    out
}

/// Full automorphism group (generators, exact order) and canonical
/// certificate of `graph`.
pub fn automorphism_group(graph: &Graph, node_budget: u64) -> Result<AutResult> {
    let mut search = Search::new(graph, node_budget);
    search.run()?;
    let best = search.best.expect("search reaches at least one leaf");
    let chain = StabilizerChain::new(graph.vertex_count(), &search.gens)?;
    let order = chain.order()?;
    Ok(AutResult {
        certificate: certificate_bytes(graph.vertex_count(), graph.words(), &best.canon),
        canonical_labeling: best.lab.iter().map(|&v| v as usize).collect(),
        generators: search.gens,
        order,
        chain,
        nodes: search.nodes,
    })
}

pub fn canonical_certificate(graph: &Graph, node_budget: u64) -> Result<Vec<u8>> {
    Ok(automorphism_group(graph, node_budget)?.certificate)
}

/// `Some(witness)` with `witness(u) ~ witness(v)` in `b` exactly when
/// `u ~ v` in `a`, or `None` if the graphs are not isomorphic.
pub fn are_isomorphic(a: &Graph, b: &Graph, node_budget: u64) -> Result<Option<Permutation>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let ra = automorphism_group(a, node_budget)?;
    let rb = automorphism_group(b, node_budget)?;
    if ra.certificate != rb.certificate {
        return Ok(None);
    }
    let mut images = vec![0usize; a.vertex_count()];
    for (&u, &v) in ra.canonical_labeling.iter().zip(&rb.canonical_labeling) {
        images[u] = v;
    }
    let witness = Permutation::from_images(images)?;
    let preserves = (0..a.vertex_count()).all(|u| {
        a.neighbors(u)
            .iter()
            .all(|&v| b.has_edge(witness.apply(u), witness.apply(v as usize)))
    });
    if !preserves {
        return Err(Error::UnverifiedCandidate(
            "isomorphism witness does not preserve edges".into(),
        ));
    }
    Ok(Some(witness))
}

/// Vertices adjacent to every member of `set`; all vertices when `set` is
/// empty.
pub fn common_neighborhood(graph: &Graph, set: &[usize]) -> Vec<usize> {
    let n = graph.vertex_count();
    let words = graph.words();
    let mut acc = vec![!0u64; words];
    if !n.is_multiple_of(64) {
        acc[words - 1] = (1u64 << (n % 64)) - 1;
    }
    for &v in set {
        for (a, r) in acc.iter_mut().zip(graph.row(v)) {
            *a &= r;
        }
    }
    bits(&acc).collect()
}
