//! Ordered partitions and equitable refinement.
//!
//! Cells are contiguous runs of `lab`. A cell is identified by its start
//! position, which never changes when the cell is split, so the splitting
//! queue can hold positions. Everything observable (cell positions, sizes,
//! trace) depends only on positions and neighbor counts, never on vertex
//! names, which is what makes the refinement label-invariant.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    /// Vertices in cell order.
    lab: Vec<u32>,
    /// Position of each vertex in `lab`.
    pos: Vec<u32>,
    /// For each position, the start of its cell.
    start_of: Vec<u32>,
    /// For each cell start, the cell length (garbage elsewhere).
    len_at: Vec<u32>,
    cells: usize,
}

impl OrderedPartition {
    /// One cell holding every vertex.
    pub fn unit(n: usize) -> Self {
        let mut len_at = vec![0; n];
        if n > 0 {
            len_at[0] = n as u32;
        }
        OrderedPartition {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            start_of: vec![0; n],
            len_at,
            cells: usize::from(n > 0),
        }
    }

    /// Builds a partition from explicit cells; `None` unless they partition
    /// `0..n`.
    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Option<Self> {
        let mut seen = vec![false; n];
        let mut lab = Vec::with_capacity(n);
        let mut start_of = vec![0; n];
        let mut len_at = vec![0; n];
        for cell in cells {
            if cell.is_empty() {
                return None;
            }
            let start = lab.len();
            for &v in cell {
                if v >= n || seen[v] {
                    return None;
                }
                seen[v] = true;
                start_of[lab.len()] = start as u32;
                lab.push(v as u32);
            }
            len_at[start] = cell.len() as u32;
        }
        if lab.len() != n {
            return None;
        }
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        Some(OrderedPartition {
            lab,
            pos,
            start_of,
            len_at,
            cells: cells.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.lab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lab.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// Vertex at each position.
    pub fn lab(&self) -> &[u32] {
        &self.lab
    }

    /// Cells in order, vertices sorted within each cell.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_starts()
            .map(|s| {
                let mut c: Vec<usize> = self.cell_at(s).iter().map(|&v| v as usize).collect();
                c.sort_unstable();
                c
            })
            .collect()
    }

    fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            if s >= self.lab.len() {
                return None;
            }
            let start = s;
            s += self.len_at[s] as usize;
            Some(start)
        })
    }

    fn cell_at(&self, start: usize) -> &[u32] {
        &self.lab[start..start + self.len_at[start] as usize]
    }

    /// First non-singleton cell of smallest size, as (start, vertices).
    pub(crate) fn target_cell(&self) -> Option<(usize, &[u32])> {
        let mut best: Option<usize> = None;
        for s in self.cell_starts() {
            let len = self.len_at[s];
            if len > 1 && best.is_none_or(|b| len < self.len_at[b]) {
                best = Some(s);
            }
        }
        best.map(|s| (s, self.cell_at(s)))
    }

    /// Splits `v` off the front of its cell. Returns the start of the new
    /// singleton cell.
    pub(crate) fn individualize(&mut self, v: usize) -> usize {
        let p = self.pos[v] as usize;
        let s = self.start_of[p] as usize;
        let len = self.len_at[s] as usize;
        debug_assert!(len > 1);
        let front = self.lab[s];
        self.lab.swap(s, p);
        self.pos[v] = s as u32;
        self.pos[front as usize] = p as u32;
        self.len_at[s] = 1;
        self.len_at[s + 1] = (len - 1) as u32;
        for i in s + 1..s + len {
            self.start_of[i] = (s + 1) as u32;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition below `self`, using the
    /// cells starting at `splitters` (plus everything they split into) as
    /// the initial splitting queue. Returns a label-invariant trace hash.
    pub(crate) fn refine_from(&mut self, graph: &Graph, splitters: &[usize]) -> u64 {
        let n = self.lab.len();
        let mut trace = Trace::new();
        let mut queued = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in splitters {
            if !queued[s] {
                queued[s] = true;
                queue.push_back(s);
            }
        }
        let mut count = vec![0u32; n];
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut cell_touched = vec![false; n];
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            let wlen = self.len_at[w] as usize;
            // Neighbor counts into the splitter.
            touched_cells.clear();
            for i in w..w + wlen {
                let u = self.lab[i] as usize;
                for &v in graph.neighbors(u) {
                    let v = v as usize;
                    count[v] += 1;
                    let s = self.start_of[self.pos[v] as usize] as usize;
                    if !cell_touched[s] {
                        cell_touched[s] = true;
                        touched_cells.push(s);
                    }
                }
            }
            trace.push(w as u64);
            touched_cells.sort_unstable();
            for &s in &touched_cells {
                cell_touched[s] = false;
                let len = self.len_at[s] as usize;
                let cell = &mut self.lab[s..s + len];
                trace.push(s as u64);
                if len == 1 {
                    trace.push(count[cell[0] as usize] as u64);
                    continue;
                }
                let first = count[cell[0] as usize];
                if cell.iter().all(|&v| count[v as usize] == first) {
                    trace.push(first as u64);
                    continue;
                }
                cell.sort_unstable_by_key(|&v| (count[v as usize], v));
                // Fragment boundaries.
                let mut fragments: Vec<(usize, usize)> = Vec::new();
                let mut i = 0;
                while i < len {
                    let c = count[cell[i] as usize];
                    let mut j = i + 1;
                    while j < len && count[cell[j] as usize] == c {
                        j += 1;
                    }
                    fragments.push((s + i, j - i));
                    trace.push(c as u64);
                    trace.push((j - i) as u64);
                    i = j;
                }
                for (i, &v) in self.lab[s..s + len].iter().enumerate() {
                    self.pos[v as usize] = (s + i) as u32;
                }
                for &(fs, flen) in &fragments {
                    self.len_at[fs] = flen as u32;
                    for p in fs..fs + flen {
                        self.start_of[p] = fs as u32;
                    }
                }
                self.cells += fragments.len() - 1;
                if queued[s] {
                    for &(fs, _) in &fragments[1..] {
                        queued[fs] = true;
                        queue.push_back(fs);
                    }
                } else {
                    // All fragments but the first largest.
                    let largest = fragments
                        .iter()
                        .enumerate()
                        .max_by_key(|&(i, &(_, flen))| (flen, std::cmp::Reverse(i)))
                        .map(|(i, _)| i)
                        .unwrap_or(0);
                    for (i, &(fs, _)) in fragments.iter().enumerate() {
                        if i != largest {
                            queued[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
            // Splitting `w` only permutes vertices inside `w..w + wlen`.
            for i in w..w + wlen {
                for &v in graph.neighbors(self.lab[i] as usize) {
                    count[v as usize] = 0;
                }
            }
        }
        trace.push(self.cells as u64);
        trace.finish()
    }

    /// Whether every vertex of a cell has the same number of neighbors in
    /// every cell.
    pub fn is_equitable(&self, graph: &Graph) -> bool {
        let n = self.lab.len();
        let starts: Vec<usize> = self.cell_starts().collect();
        let mut count = vec![0u32; n];
        for &w in &starts {
            count.iter_mut().for_each(|c| *c = 0);
            for &u in self.cell_at(w) {
                for &v in graph.neighbors(u as usize) {
                    count[v as usize] += 1;
                }
            }
            for &s in &starts {
                let cell = self.cell_at(s);
                let c0 = count[cell[0] as usize];
                if cell.iter().any(|&v| count[v as usize] != c0) {
                    return false;
                }
            }
        }
        true
    }
}

/// Coarsest equitable refinement of `partition`.
pub fn equitable_refinement(graph: &Graph, partition: &OrderedPartition) -> OrderedPartition {
    let mut p = partition.clone();
    let starts: Vec<usize> = p.cell_starts().collect();
    p.refine_from(graph, &starts);
    p
}

/// Order-sensitive 64-bit mixing hash over refinement events.
struct Trace(u64);

impl Trace {
    fn new() -> Self {
        Trace(0x243f_6a88_85a3_08d3)
    }

    fn push(&mut self, x: u64) {
        let mut z = self.0 ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        self.0 = z ^ (z >> 31);
    }

    fn finish(self) -> u64 {
        self.0
    }
}
