//! Integer partitions and conjugacy-class bookkeeping.
//!
//! A [`Partition`] is a weakly decreasing list of positive integers. Partitions
//! double as shapes (Young diagrams) and as cycle types of symmetric-group
//! conjugacy classes, so this module also provides [`CycleType`] and
//! [`centralizer_order`].
//!
//! Every function that returns a list of partitions uses one fixed order,
//! produced by [`enumerate_partitions`]: reverse-lexicographic, largest part
//! first, so `(n)` comes first and `(1, ..., 1)` comes last. Character tables
//! and report rows index into this order; [`Partition::canonical_cmp`] exposes
//! the same order as a comparator.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Error returned when a part list is not weakly decreasing or contains an
/// interior zero.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid partition {parts:?}: parts must be positive and weakly decreasing")]
pub struct InvalidPartition {
    pub parts: Vec<usize>,
}

/// A partition of a non-negative integer: weakly decreasing positive parts.
///
/// The empty partition represents the (unique) partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// # Panics
    ///
    /// Panics if the parts are not weakly decreasing (after removing a
    /// trailing run of zeros). Use [`Partition::try_new`] to handle untrusted
    /// input.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("parts must be positive and weakly decreasing")
    }

    /// Fallible constructor: accepts weakly decreasing parts with an optional
    /// trailing run of zeros, which is stripped.
    pub fn try_new(mut parts: Vec<usize>) -> Result<Self, InvalidPartition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(InvalidPartition { parts });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned (sum of parts).
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 past the end. Treating missing rows as
    /// zero-length keeps shape arithmetic free of bounds checks.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Whether `inner`'s diagram fits inside this one row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.part(i))
    }

    /// The partition left after deleting the first (largest) part.
    pub fn without_first_part(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// A new partition with `part` prepended.
    ///
    /// # Panics
    ///
    /// Panics if `part` is smaller than the current largest part.
    pub fn with_part_prepended(&self, part: usize) -> Partition {
        assert!(
            part >= self.part(0) && part > 0,
            "prepended part must be positive and at least the largest part"
        );
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.parts);
        Partition { parts }
    }

    /// Comparator for the fixed enumeration order: reverse-lexicographic,
    /// largest part first. `(n)` sorts before everything else and
    /// `(1, ..., 1)` sorts last among partitions of the same `n`.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        other.parts.cmp(&self.parts)
    }

    /// Compact text form used by the command line and TSV headers:
    /// `"3,1"`, or `"empty"` for the empty partition.
    pub fn to_compact_string(&self) -> String {
        if self.is_empty() {
            "empty".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = InvalidPartition;

    /// Parses the compact comma-separated form; `"empty"` (or an empty
    /// string) denotes the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "empty" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|piece| piece.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| InvalidPartition { parts: Vec::new() })?;
        Partition::try_new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::try_new(parts).map_err(D::Error::custom)
    }
}

/// The multiset of part sizes of a partition, i.e. a conjugacy class of the
/// symmetric group described by how many cycles of each length it has.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    multiplicities: BTreeMap<usize, usize>,
}

impl CycleType {
    /// The cycle type of the class labelled by `eta`.
    pub fn of(eta: &Partition) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &p in eta.parts() {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        Self { multiplicities }
    }

    /// How many parts of size `part` there are.
    pub fn multiplicity(&self, part: usize) -> usize {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    /// Iterates `(part, multiplicity)` pairs in increasing part order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities.iter().map(|(&p, &m)| (p, m))
    }

    /// The size of the underlying partition.
    pub fn size(&self) -> usize {
        self.multiplicities.iter().map(|(p, m)| p * m).sum()
    }
}

/// All partitions of `n` in the fixed enumeration order: reverse-lexicographic
/// with the largest part first, so `(n)` leads and `(1, ..., 1)` trails.
///
/// `enumerate_partitions(0)` returns the single empty partition.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn fill(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            fill(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

/// The order of the centralizer of the class `eta` in the symmetric group on
/// `|eta|` letters: the product over part sizes `i` of `i^(m_i) * m_i!` where
/// `m_i` is the multiplicity of `i`.
pub fn centralizer_order(eta: &Partition) -> BigUint {
    let mut order = BigUint::one();
    for (part, mult) in CycleType::of(eta).iter() {
        order *= BigUint::from(part).pow(mult as u32);
        for j in 1..=mult {
            order *= BigUint::from(j);
        }
    }
    order
}
