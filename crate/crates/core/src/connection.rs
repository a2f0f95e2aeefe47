//! Connection sets of Cayley graphs on the symmetric group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};

/// Which permutations of `S_n` make up a connection set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum ConnectionKind {
    /// All transpositions, i.e. exactly `n - 2` fixed points.
    Transpositions,
    /// All fixed-point-free permutations.
    Derangements,
    /// Permutations with exactly `k` fixed points.
    Fixed(usize),
}

impl ConnectionKind {
    /// Number of fixed points this kind selects on `S_n`.
    pub fn fixed_points(self, n: usize) -> usize {
        match self {
            ConnectionKind::Transpositions => n.saturating_sub(2),
            ConnectionKind::Derangements => 0,
            ConnectionKind::Fixed(k) => k,
        }
    }
}

impl fmt::Display for ConnectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectionKind::Transpositions => write!(f, "transpositions"),
            ConnectionKind::Derangements => write!(f, "derangements"),
            ConnectionKind::Fixed(k) => write!(f, "fixed:{k}"),
        }
    }
}

impl FromStr for ConnectionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "transpositions" => Ok(ConnectionKind::Transpositions),
            "derangements" => Ok(ConnectionKind::Derangements),
            _ => {
                let k = s
                    .strip_prefix("fixed:")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| {
                        Error::Parse(format!(
                            "unknown connection set {s:?}; expected transpositions, derangements or fixed:K"
                        ))
                    })?;
                Ok(ConnectionKind::Fixed(k))
            }
        }
    }
}

impl From<ConnectionKind> for String {
    fn from(kind: ConnectionKind) -> String {
        kind.to_string()
    }
}

impl TryFrom<String> for ConnectionKind {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// An inverse-closed subset of `S_n` without the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    degree: usize,
    kind: ConnectionKind,
    elements: Vec<Permutation>,
}

impl ConnectionSet {
    /// Every permutation of `S_n` of the requested kind, in lexicographic
    /// order. `fixed(k)` is accepted for `0 <= k <= n - 2` only.
    pub fn new(n: usize, kind: ConnectionKind) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters(format!(
                "connection sets need n >= 2, got {n}"
            )));
        }
        if let ConnectionKind::Fixed(k) = kind {
            if k > n - 2 {
                return Err(Error::InvalidParameters(format!(
                    "fixed:{k} requires 0 <= k <= n-2 = {}",
                    n - 2
                )));
            }
        }
        let want = kind.fixed_points(n);
        let elements = all_permutations(n)
            .filter(|p| p.fixed_point_count() == want)
            .collect();
        Ok(ConnectionSet {
            degree: n,
            kind,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> ConnectionKind {
        self.kind
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}
