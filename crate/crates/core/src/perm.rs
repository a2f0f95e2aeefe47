//! Permutations of `{0, .., n-1}` stored in one-line form.
//!
//! Composition is left to right: `p.compose(&q)` applies `p` first and then
//! `q`, so `i` maps to `q(p(i))`. This matches the exponent notation
//! `i^{pq} = (i^p)^q` used for group actions throughout the crate.
//!
//! Points are 0-based in memory. Anything rendered for humans or written to
//! disk is 1-based (`[2,3,1]` is the 3-cycle 1->2->3->1).

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from 1-based images such as `[2,3,1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!(
                "{images:?} contains 0 in a 1-based image list"
            )));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.iter().map(|&x| x as usize).collect()).is_ok());
        Permutation { images }
    }

    /// The transposition swapping 0-based points `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        if a >= degree || b >= degree || a == b {
            return Err(Error::InvalidPermutation(format!(
                "cannot swap {a} and {b} on {degree} points"
            )));
        }
        let mut p = Self::identity(degree);
        p.images.swap(a, b);
        Ok(p)
    }

    /// The cycle `points[0] -> points[1] -> ... -> points[0]` (0-based).
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &p) in points.iter().enumerate() {
            if p >= degree {
                return Err(Error::InvalidPermutation(format!("point {p} out of range")));
            }
            images[p] = points[(i + 1) % points.len()];
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition for internal hot paths.
    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count()
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .position(|(i, &x)| i as u32 != x)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions.is_multiple_of(2)
    }

    /// `g^{-1} self g`, i.e. conjugation in exponent notation.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        g.inverse().compose(self)?.compose(g)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_based(&images).map_err(serde::de::Error::custom)
    }
}

/// The two standard generators `(1 2)` and `(1 2 ... m)` of the symmetric
/// group on `m` points. Empty for `m < 2`.
pub fn symmetric_generators(m: usize) -> Vec<Permutation> {
    if m < 2 {
        return Vec::new();
    }
    let all: Vec<usize> = (0..m).collect();
    vec![
        Permutation::transposition(m, 0, 1).expect("m >= 2"),
        Permutation::cycle(m, &all).expect("in range"),
    ]
}

/// All permutations of degree `n` in lexicographic order of their one-line
/// form.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        next: if n == 0 {
            None
        } else {
            Some((0..n as u32).collect())
        },
    }
}

pub struct AllPermutations {
    next: Option<Vec<u32>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

/// Advances `v` to its lexicographic successor; false at the last one.
pub(crate) fn next_lexicographic(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    #[test]
    fn compose_applies_left_first() {
        assert_eq!(
            p(&[2, 1, 3]).compose(&p(&[1, 3, 2])).unwrap(),
            p(&[3, 1, 2])
        );
        let q = p(&[3, 1, 4, 2]);
        assert_eq!(q.compose(&Permutation::identity(4)).unwrap(), q);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = p(&[1, 2]).compose(&p(&[1, 2, 3])).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        let t = Permutation::transposition(5, 1, 3).unwrap();
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn fixed_points() {
        assert_eq!(Permutation::identity(4).fixed_point_count(), 4);
        assert_eq!(p(&[2, 1, 3, 4]).fixed_point_count(), 2);
        assert_eq!(p(&[2, 3, 1, 4]).fixed_point_count(), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_based(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn display_and_serde_are_one_based() {
        let q = p(&[2, 3, 1]);
        assert_eq!(q.to_string(), "[2,3,1]");
        assert_eq!(serde_json::to_string(&q).unwrap(), "[2,3,1]");
        let back: Permutation = serde_json::from_str("[2,3,1]").unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Permutation>("[2,2,1]").is_err());
    }

    #[test]
    fn all_permutations_is_lexicographic() {
        let perms: Vec<_> = all_permutations(4).collect();
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert!(perms[0].is_identity());
        assert_eq!(all_permutations(1).count(), 1);
    }

    #[test]
    fn parity() {
        assert!(Permutation::identity(3).is_even());
        assert!(!p(&[2, 1, 3]).is_even());
        assert!(p(&[2, 3, 1]).is_even());
        assert!(!p(&[2, 3, 4, 1]).is_even());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn composition_is_associative(
            (a, b, c) in (1usize..12).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), perm_strategy(n)))
        ) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_is_an_involution(a in (1usize..12).prop_flat_map(perm_strategy)) {
            prop_assert_eq!(a.inverse().inverse(), a.clone());
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        }
    }
}
