//! Ordered k-tuples of distinct values from `[n]` and their lexicographic
//! ranking.

use std::fmt;

use crate::error::{Error, Result};

/// `n! / (n-k)!`, the number of k-tuples of distinct values from `[n]`.
pub fn tuple_count(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    (n - k + 1..=n).try_fold(1u128, |acc, x| {
        acc.checked_mul(x as u128).ok_or(Error::OrderOverflow)
    })
}

/// A vertex of an arrangement graph: `k` distinct values from `[n]`.
///
/// Values are stored 0-based; `Display` and the `*_one_based` helpers use
/// the 1-based convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KTuple {
    n: usize,
    entries: Vec<u32>,
}

impl KTuple {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        let k = entries.len();
        if k == 0 || k > n {
            return Err(Error::InvalidTuple(format!(
                "need 1 <= k <= n, got k = {k}, n = {n}"
            )));
        }
        let mut seen = vec![false; n];
        for &x in &entries {
            if x >= n || seen[x] {
                return Err(Error::InvalidTuple(format!(
                    "entries {entries:?} are not distinct values below {n}"
                )));
            }
            seen[x] = true;
        }
        Ok(KTuple {
            n,
            entries: entries.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn from_one_based(n: usize, entries: &[usize]) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidTuple(format!("{entries:?} contains 0")));
        }
        Self::new(n, entries.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_raw(n: usize, entries: Vec<u32>) -> Self {
        KTuple { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, position: usize) -> usize {
        self.entries[position] as usize
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.entries.iter().map(|&x| x as usize + 1).collect()
    }

    /// Number of positions where `self` and `other` differ.
    pub fn differing_coordinates(&self, other: &KTuple) -> Result<usize> {
        if self.n != other.n || self.k() != other.k() {
            return Err(Error::InvalidParameters(format!(
                "tuples from ({}, {}) and ({}, {}) are not comparable",
                self.n,
                self.k(),
                other.n,
                other.k()
            )));
        }
        Ok(self.distance(other))
    }

    #[inline]
    pub(crate) fn distance(&self, other: &KTuple) -> usize {
        self.entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Lexicographic rank among all tuples of the same `(n, k)`.
    pub fn rank(&self) -> usize {
        let (n, k) = (self.n, self.k());
        let mut used = vec![false; n];
        let mut rank = 0usize;
        for (j, &x) in self.entries.iter().enumerate() {
            let smaller_free = (0..x as usize).filter(|&y| !used[y]).count();
            // Completions of the remaining k-j-1 positions from n-j-1 values.
            let block: usize = (n - k + 1..n - j).product();
            rank += smaller_free * block;
            used[x as usize] = true;
        }
        rank
    }

    /// Inverse of [`Self::rank`].
    pub fn unrank(index: usize, n: usize, k: usize) -> Result<Self> {
        let count = tuple_count(n, k)?;
        if k == 0 || index as u128 >= count {
            return Err(Error::InvalidParameters(format!(
                "index {index} out of range for (n, k) = ({n}, {k})"
            )));
        }
        let mut free: Vec<u32> = (0..n as u32).collect();
        let mut rest = index;
        let mut entries = Vec::with_capacity(k);
        for j in 0..k {
            let block: usize = (n - k + 1..n - j).product();
            let pick = rest / block;
            rest %= block;
            entries.push(free.remove(pick));
        }
        Ok(KTuple { n, entries })
    }
}

impl fmt::Display for KTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for KTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All tuples of `[n]^(k)` in rank order.
pub fn all_tuples(n: usize, k: usize) -> Result<Vec<KTuple>> {
    let count = tuple_count(n, k)?;
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut current: Vec<u32> = Vec::with_capacity(k);
    let mut used = vec![false; n];
    fn rec(n: usize, k: usize, current: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<KTuple>) {
        if current.len() == k {
            out.push(KTuple::from_raw(n, current.clone()));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x as u32);
                rec(n, k, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(n, k, &mut current, &mut used, &mut out);
    Ok(out)
}
