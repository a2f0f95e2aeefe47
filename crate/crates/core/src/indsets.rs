//! The families `Delta_ij` and exact maximum independent sets.
//!
//! Independent sets of a graph are cliques of its complement. The
//! independence number comes from a branch-and-bound clique search with a
//! greedy-colouring bound; enumeration of all maximum sets runs
//! Bron–Kerbosch with pivoting on the complement and discards branches that
//! cannot reach the maximum size.

use serde::Serialize;

use crate::arrangement::{build_arrangement_graph, validate_arrangement};
use crate::error::{Error, Result};
use crate::graph::{row_words, Graph};
use crate::tuple::{all_tuples, tuple_count};

/// Default cap on vertex count for `enumerate_all`.
pub const DEFAULT_ENUMERATE_GUARD: usize = 60;

/// `Delta_ij` for 1-based `i` in `[n]`, `j` in `[k]`: tuples with entry
/// `j` equal to `i` and no other entry equal to `i`. Sorted vertex indexes
/// of `A(n,k,·)`.
pub fn delta_set(n: usize, k: usize, i: usize, j: usize) -> Result<Vec<usize>> {
    if k == 0 || k > n || !(1..=n).contains(&i) || !(1..=k).contains(&j) {
        return Err(Error::InvalidParameters(format!(
            "Delta_{i}{j} needs 1 <= i <= n = {n}, 1 <= j <= k = {k}"
        )));
    }
    let value = (i - 1) as u32;
    // Tuples are distinct-valued, so entry j == i already excludes i elsewhere.
    Ok(all_tuples(n, k)?
        .iter()
        .enumerate()
        .filter(|(_, t)| t.entries()[j - 1] == value)
        .map(|(v, _)| v)
        .collect())
}

/// All `Delta_ij` in `(i, j)` lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaFamily {
    pub n: usize,
    pub k: usize,
    sets: Vec<Vec<usize>>,
}

impl DeltaFamily {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        validate_arrangement(n, k, k)?;
        let mut sets = Vec::with_capacity(n * k);
        for i in 1..=n {
            for j in 1..=k {
                sets.push(delta_set(n, k, i, j)?);
            }
        }
        Ok(DeltaFamily { n, k, sets })
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Family index of `Delta_ij` (1-based `i`, `j`).
    pub fn index(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.k + (j - 1)
    }

    /// `(i, j)` of a family index, 1-based.
    pub fn pair(&self, index: usize) -> (usize, usize) {
        (index / self.k + 1, index % self.k + 1)
    }

    pub fn label(&self, index: usize) -> String {
        let (i, j) = self.pair(index);
        format!("D_{i}_{j}")
    }

    /// Rows `Omega_i = {Delta_i1, .., Delta_ik}` as family indexes.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.n)
            .map(|i| (1..=self.k).map(|j| self.index(i, j)).collect())
            .collect()
    }

    /// Columns `Omega^j = {Delta_1j, .., Delta_nj}` as family indexes.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (1..=self.k)
            .map(|j| (1..=self.n).map(|i| self.index(i, j)).collect())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MisMode {
    SizeOnly,
    EnumerateAll,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisResult {
    pub size: usize,
    /// Sorted list of sorted sets, present in `EnumerateAll` mode.
    pub sets: Option<Vec<Vec<usize>>>,
}

/// Packed bitset over at most `words * 64` vertices.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(words: usize) -> Self {
        Bits(vec![0; words])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits(vec![!0; row_words(n)]);
        if !n.is_multiple_of(64) {
            *b.0.last_mut().expect("n > 0") = (1u64 << (n % 64)) - 1;
        }
        b
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn and(&self, other: &[u64]) -> Bits {
        Bits(self.0.iter().zip(other).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &[u64]) -> Bits {
        Bits(self.0.iter().zip(other).map(|(a, b)| a & !b).collect())
    }

    fn and_count(&self, other: &[u64]) -> usize {
        self.0
            .iter()
            .zip(other)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * 64 + self.0[i].trailing_zeros() as usize)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        crate::graph::bits(&self.0)
    }
}

/// Clique search on the complement, through adjacency rows of `comp`.
struct CliqueSearch<'a> {
    comp: &'a Graph,
    best: usize,
}

impl CliqueSearch<'_> {
    /// Greedy sequential colouring of `cand`; returns vertices in colour
    /// order with their colour numbers (1-based, nondecreasing).
    fn colour(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncoloured.remove(v);
                q = q.and_not(self.comp.row(v));
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, size: usize, mut cand: Bits) {
        let order = self.colour(&cand);
        for &(v, colour) in order.iter().rev() {
            if size + colour <= self.best {
                return;
            }
            let next = cand.and(self.comp.row(v));
            if next.is_empty() {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(size + 1, next);
            }
            cand.remove(v);
        }
    }
}

/// Bron–Kerbosch with pivoting, keeping cliques of size `target`.
fn enumerate_cliques(
    comp: &Graph,
    target: usize,
    r: &mut Vec<usize>,
    mut p: Bits,
    mut x: Bits,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && r.len() == target {
            let mut set = r.clone();
            set.sort_unstable();
            out.push(set);
        }
        return;
    }
    if r.len() + p.count() < target {
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.and_count(comp.row(u)))
        .expect("p is nonempty");
    let branch: Vec<usize> = p.and_not(comp.row(pivot)).iter().collect();
    for v in branch {
        r.push(v);
        enumerate_cliques(comp, target, r, p.and(comp.row(v)), x.and(comp.row(v)), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Independence number of `graph`, plus every maximum independent set in
/// `EnumerateAll` mode (refused above `enumerate_guard` vertices).
pub fn max_independent_sets(
    graph: &Graph,
    mode: MisMode,
    enumerate_guard: usize,
) -> Result<MisResult> {
    let n = graph.vertex_count();
    if mode == MisMode::EnumerateAll && n > enumerate_guard {
        return Err(Error::LimitExceeded {
            what: "graph for full independent-set enumeration",
            count: n as u128,
            limit: enumerate_guard as u128,
        });
    }
    let comp = graph.complement();
    let mut search = CliqueSearch {
        comp: &comp,
        best: 0,
    };
    search.expand(0, Bits::full(n));
    let size = search.best;
    let sets = match mode {
        MisMode::SizeOnly => None,
        MisMode::EnumerateAll => {
            let mut out = Vec::new();
            enumerate_cliques(
                &comp,
                size,
                &mut Vec::new(),
                Bits::full(n),
                Bits::empty(row_words(n)),
                &mut out,
            );
            out.sort();
            out.dedup();
            for s in &out {
                debug_assert!(is_independent(graph, s) && is_maximal_independent(graph, s));
            }
            Some(out)
        }
    };
    Ok(MisResult { size, sets })
}

pub fn is_independent(graph: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| !graph.has_edge(u, v)))
}

/// Independent, and no vertex outside can be added.
pub fn is_maximal_independent(graph: &Graph, set: &[usize]) -> bool {
    if !is_independent(graph, set) {
        return false;
    }
    let mut inside = Bits::empty(graph.words());
    for &v in set {
        inside.insert(v);
    }
    (0..graph.vertex_count())
        .filter(|&w| !inside.contains(w))
        .all(|w| set.iter().any(|&v| graph.has_edge(v, w)))
}

/// Outcome of checking that the maximum independent sets of `A(n,k,k)` are
/// exactly the `Delta_ij`.
#[derive(Debug, Clone, Serialize)]
pub struct MisReport {
    pub n: usize,
    pub k: usize,
    pub vertex_count: usize,
    pub independence_number: usize,
    pub expected_independence_number: u128,
    pub enumerated: bool,
    pub set_count: Option<usize>,
    pub expected_set_count: usize,
    /// Enumerated mode: search output equals the Delta family setwise.
    pub sets_equal_family: Option<bool>,
    /// Every Delta_ij is independent, maximal, and of maximum size.
    pub family_sets_maximum: bool,
    pub pass: bool,
}

/// Runs the check on `A(n,k,k)` for `n > 2`. Full enumeration is used up to
/// `enumerate_guard` vertices; beyond that only the independence number and
/// the maximality of each `Delta_ij` are checked.
pub fn verify_mis_characterization(
    n: usize,
    k: usize,
    vertex_guard: usize,
    enumerate_guard: usize,
) -> Result<MisReport> {
    if n <= 2 {
        return Err(Error::InvalidParameters(format!(
            "the characterization requires n > 2, got n = {n}"
        )));
    }
    validate_arrangement(n, k, k)?;
    let graph = build_arrangement_graph(n, k, k, vertex_guard)?;
    let family = DeltaFamily::new(n, k)?;
    let expected_size = tuple_count(n - 1, k - 1)?;
    let expected_count = n * k;
    let enumerate = graph.vertex_count() <= enumerate_guard;
    let mode = if enumerate {
        MisMode::EnumerateAll
    } else {
        MisMode::SizeOnly
    };
    let result = max_independent_sets(&graph, mode, enumerate_guard)?;
    let family_sets_maximum = family
        .sets()
        .iter()
        .all(|s| s.len() == result.size && is_maximal_independent(&graph, s));
    let (set_count, sets_equal_family) = match &result.sets {
        Some(found) => {
            let mut expected: Vec<Vec<usize>> = family.sets().to_vec();
            expected.sort();
            (Some(found.len()), Some(*found == expected))
        }
        None => (None, None),
    };
    let pass = result.size as u128 == expected_size
        && family_sets_maximum
        && set_count.is_none_or(|c| c == expected_count)
        && sets_equal_family.unwrap_or(true);
    Ok(MisReport {
        n,
        k,
        vertex_count: graph.vertex_count(),
        independence_number: result.size,
        expected_independence_number: expected_size,
        enumerated: enumerate,
        set_count,
        expected_set_count: expected_count,
        sets_equal_family,
        family_sets_maximum,
        pass,
    })
}
