//! Deterministic Schreier–Sims.
//!
//! The base is the fixed point sequence `0, 1, .., n-1`; levels whose basic
//! orbit is trivial carry no data and cost one comparison when sifting.
//! Transversals are stored explicitly together with their inverses.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of elements [`StabilizerChain::elements`] will
/// produce.
pub const DEFAULT_ENUMERATION_THRESHOLD: u128 = 1_000_000;

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Permutation>,
    /// Basic orbit of `point`, starting with `point` itself.
    orbit: Vec<u32>,
    /// `slot[x]` is the index of `x` in `orbit`, or `u32::MAX`. Empty when
    /// the level is trivial.
    slot: Vec<u32>,
    /// `transversal[i]` maps `point` to `orbit[i]`.
    transversal: Vec<Permutation>,
    inverse: Vec<Permutation>,
}

impl Level {
    fn trivial(point: usize) -> Self {
        Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            slot: Vec::new(),
            transversal: Vec::new(),
            inverse: Vec::new(),
        }
    }

    fn is_trivial(&self) -> bool {
        self.orbit.len() <= 1
    }

    fn orbit_len(&self) -> usize {
        self.orbit.len().max(1)
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal.clear();
        self.inverse.clear();
        if self.gens.is_empty() {
            self.slot.clear();
            return;
        }
        self.slot = vec![u32::MAX; degree];
        self.slot[self.point] = 0;
        self.orbit.push(self.point as u32);
        let id = Permutation::identity(degree);
        self.inverse.push(id.clone());
        self.transversal.push(id);
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head] as usize;
            for x in &self.gens {
                let c = x.apply(b);
                if self.slot[c] == u32::MAX {
                    self.slot[c] = self.orbit.len() as u32;
                    self.orbit.push(c as u32);
                    let u = self.transversal[head].then(x);
                    self.inverse.push(u.inverse());
                    self.transversal.push(u);
                }
            }
            head += 1;
        }
    }

    /// Index of `x` in the basic orbit.
    fn find(&self, x: usize) -> Option<usize> {
        if x == self.point {
            return Some(0);
        }
        match self.slot.get(x) {
            Some(&s) if s != u32::MAX => Some(s as usize),
            _ => None,
        }
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds the chain of `<generators>` on `degree` points. An empty
    /// generator list gives the trivial group.
    pub fn new(degree: usize, generators: &[Permutation]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameters("degree must be at least 1".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut chain = StabilizerChain {
            degree,
            generators: generators.to_vec(),
            levels: (0..degree).map(Level::trivial).collect(),
        };
        let mut deepest = None;
        for g in generators {
            if let Some(m) = g.first_moved_point() {
                for level in &mut chain.levels[..=m] {
                    level.gens.push(g.clone());
                }
                deepest = deepest.max(Some(m));
            }
        }
        let Some(deepest) = deepest else {
            return Ok(chain);
        };
        for level in &mut chain.levels[..=deepest] {
            level.rebuild_orbit(degree);
        }
        chain.complete(deepest);
        Ok(chain)
    }

    /// Incremental Schreier–Sims: make every level from `start` down to 0
    /// closed under Schreier generators.
    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let level = i as usize;
            let orbit_len = self.levels[level].orbit.len();
            for oi in 0..orbit_len {
                for gi in 0..self.levels[level].gens.len() {
                    let lvl = &self.levels[level];
                    let x = &lvl.gens[gi];
                    let b = lvl.orbit[oi] as usize;
                    let bx = x.apply(b);
                    let target = lvl.find(bx).expect("orbit is closed");
                    let schreier = lvl.transversal[oi].then(x).then(&lvl.inverse[target]);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, fail) = self.strip(schreier, level + 1);
                    if !residue.is_identity() {
                        for l in level + 1..=fail {
                            self.levels[l].gens.push(residue.clone());
                            self.levels[l].rebuild_orbit(self.degree);
                        }
                        i = fail as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`degree` when it went all the way through).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.degree {
            let level = &self.levels[l];
            let image = g.apply(level.point);
            if image == level.point {
                continue;
            }
            match level.find(image) {
                Some(idx) => g = g.then(&level.inverse[idx]),
                None => return (g, l),
            }
        }
        (g, self.degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The base points whose basic orbits are nontrivial.
    pub fn base(&self) -> Vec<usize> {
        self.levels
            .iter()
            .filter(|l| !l.is_trivial())
            .map(|l| l.point)
            .collect()
    }

    /// Basic orbit sizes along [`Self::base`].
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels
            .iter()
            .filter(|l| !l.is_trivial())
            .map(|l| l.orbit.len())
            .collect()
    }

    /// Strong generators at each nontrivial level.
    pub fn strong_generators(&self) -> Vec<&[Permutation]> {
        self.levels
            .iter()
            .filter(|l| !l.is_trivial())
            .map(|l| l.gens.as_slice())
            .collect()
    }

    /// Exact group order.
    pub fn order(&self) -> Result<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit_len() as u128)
                .ok_or(Error::OrderOverflow)
        })
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.strip(p.clone(), 0).0.is_identity()
    }

    /// Every group element exactly once, as products of transversal
    /// elements. Refuses groups larger than `threshold`.
    pub fn elements(&self, threshold: u128) -> Result<Elements<'_>> {
        let order = self.order()?;
        if order > threshold {
            return Err(Error::LimitExceeded {
                what: "group",
                count: order,
                limit: threshold,
            });
        }
        let levels: Vec<&Level> = self.levels.iter().filter(|l| !l.is_trivial()).collect();
        Ok(Elements {
            degree: self.degree,
            counter: vec![0; levels.len()],
            levels,
            done: false,
        })
    }
}

/// Iterator returned by [`StabilizerChain::elements`].
pub struct Elements<'a> {
    degree: usize,
    levels: Vec<&'a Level>,
    counter: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        // Deepest level acts first: g = u_last ... u_1 u_0.
        let mut g = Permutation::identity(self.degree);
        for (level, &c) in self.levels.iter().zip(&self.counter).rev() {
            g = g.then(&level.transversal[c]);
        }
        // Mixed-radix increment.
        let mut i = 0;
        loop {
            if i == self.counter.len() {
                self.done = true;
                break;
            }
            self.counter[i] += 1;
            if self.counter[i] < self.levels[i].orbit.len() {
                break;
            }
            self.counter[i] = 0;
            i += 1;
        }
        Some(g)
    }
}
