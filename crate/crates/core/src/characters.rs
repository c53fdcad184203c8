//! Exact irreducible character values of symmetric groups.
//!
//! The central routine is [`mn_character`], the classical recursion that
//! evaluates a character by repeatedly peeling border strips: the value of
//! the character of shape `lambda` on a class `mu` is the signed sum, over
//! every strip of length `mu_1` that can be removed from `lambda`, of the
//! value of the smaller character on the class with that part deleted. Signs
//! come from strip heights, so everything here sits directly on top of
//! [`crate::strips`].
//!
//! Values are computed in `i64` with checked arithmetic and transparently
//! recomputed in big integers if a subterm overflows; a result that does not
//! fit `i64` is an error ([`CharacterError::ValueOverflow`]). Dimensions are
//! always returned as big integers since they outgrow `u64` quickly.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::partitions::{centralizer_order, enumerate_partitions, Partition};
use crate::strips::remove_strips;

/// Errors from character evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    /// The shape and the class partition different numbers.
    #[error("shape partitions {shape_size} but the class partitions {class_size}")]
    SizeMismatch { shape_size: usize, class_size: usize },

    /// The exact value exists but does not fit in `i64`.
    #[error("character value {value} does not fit in a 64-bit integer")]
    ValueOverflow { value: String },

    /// The brute-force reference evaluator refuses sizes it cannot handle.
    #[error("reference evaluator supports n <= {max}, got n = {n}")]
    ReferenceLimitExceeded { n: usize, max: usize },

    /// Parameters outside the two-parameter family of shapes
    /// `(r, 2, 1, ..., 1)` of size `n`.
    #[error("no shape (r, 2, 1^(n-2-r)) for n = {n}, r = {r}; need 2 <= r <= n - 2")]
    InvalidTwoRowedHook { n: usize, r: usize },
}

/// Memoization cache for [`mn_character_with`].
///
/// Keys are `(shape, remaining class parts)` pairs. A cache can be reused
/// across any number of evaluations, including different shapes and classes;
/// sharing one cache across a sweep is what makes table construction cheap.
#[derive(Debug, Default)]
pub struct CharCache {
    map: HashMap<(Partition, Vec<usize>), i64>,
}

impl CharCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized subproblems.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Drops all memoized entries.
    pub fn clear(&mut self) {
        self.map.clear();
    }
}

/// Marker for a checked-arithmetic overflow inside the `i64` recursion.
struct Overflowed;

fn mn_small(
    cache: &mut CharCache,
    shape: &Partition,
    rest: &[usize],
) -> Result<i64, Overflowed> {
    if rest.is_empty() {
        debug_assert!(shape.is_empty(), "shape and class sizes must stay in step");
        return Ok(1);
    }
    let key = (shape.clone(), rest.to_vec());
    if let Some(&hit) = cache.map.get(&key) {
        return Ok(hit);
    }
    let mut total: i64 = 0;
    for strip in remove_strips(shape, rest[0]) {
        let sub = mn_small(cache, strip.inner(), &rest[1..])?;
        let signed = if strip.height() % 2 == 1 {
            sub
        } else {
            sub.checked_neg().ok_or(Overflowed)?
        };
        total = total.checked_add(signed).ok_or(Overflowed)?;
    }
    cache.map.insert(key, total);
    Ok(total)
}

fn mn_big(
    cache: &mut HashMap<(Partition, Vec<usize>), BigInt>,
    shape: &Partition,
    rest: &[usize],
) -> BigInt {
    if rest.is_empty() {
        return BigInt::one();
    }
    let key = (shape.clone(), rest.to_vec());
    if let Some(hit) = cache.get(&key) {
        return hit.clone();
    }
    let mut total = BigInt::zero();
    for strip in remove_strips(shape, rest[0]) {
        let sub = mn_big(cache, strip.inner(), &rest[1..]);
        if strip.height() % 2 == 1 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    cache.insert(key, total.clone());
    total
}

fn check_sizes(shape: &Partition, class: &Partition) -> Result<(), CharacterError> {
    if shape.size() != class.size() {
        return Err(CharacterError::SizeMismatch {
            shape_size: shape.size(),
            class_size: class.size(),
        });
    }
    Ok(())
}

/// The character value of shape `shape` on the class `class`, using a caller
/// provided memoization cache.
///
/// Parts of `class` are consumed largest first (a [`Partition`] already keeps
/// them that way), so cache entries are shared across classes with common
/// prefixes. On `i64` overflow of an intermediate term the value is
/// recomputed exactly in big integers and returned if it fits.
pub fn mn_character_with(
    cache: &mut CharCache,
    shape: &Partition,
    class: &Partition,
) -> Result<i64, CharacterError> {
    check_sizes(shape, class)?;
    match mn_small(cache, shape, class.parts()) {
        Ok(value) => Ok(value),
        Err(Overflowed) => {
            let value = mn_big(&mut HashMap::new(), shape, class.parts());
            value
                .to_i64()
                .ok_or_else(|| CharacterError::ValueOverflow {
                    value: value.to_string(),
                })
        }
    }
}

/// The character value of shape `shape` on the class `class`.
pub fn mn_character(shape: &Partition, class: &Partition) -> Result<i64, CharacterError> {
    mn_character_with(&mut CharCache::new(), shape, class)
}

/// Memoization-free variant of [`mn_character`], used to check that caching
/// never changes a value.
pub fn mn_character_uncached(
    shape: &Partition,
    class: &Partition,
) -> Result<i64, CharacterError> {
    fn rec(shape: &Partition, rest: &[usize]) -> Result<i64, Overflowed> {
        if rest.is_empty() {
            return Ok(1);
        }
        let mut total: i64 = 0;
        for strip in remove_strips(shape, rest[0]) {
            let sub = rec(strip.inner(), &rest[1..])?;
            let signed = if strip.height() % 2 == 1 {
                sub
            } else {
                sub.checked_neg().ok_or(Overflowed)?
            };
            total = total.checked_add(signed).ok_or(Overflowed)?;
        }
        Ok(total)
    }

    check_sizes(shape, class)?;
    match rec(shape, class.parts()) {
        Ok(value) => Ok(value),
        Err(Overflowed) => {
            let value = mn_big(&mut HashMap::new(), shape, class.parts());
            value
                .to_i64()
                .ok_or_else(|| CharacterError::ValueOverflow {
                    value: value.to_string(),
                })
        }
    }
}

/// The character value in exact big-integer arithmetic, with no size limit
/// beyond memory.
pub fn mn_character_big(shape: &Partition, class: &Partition) -> Result<BigInt, CharacterError> {
    check_sizes(shape, class)?;
    Ok(mn_big(&mut HashMap::new(), shape, class.parts()))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// The dimension of the irreducible representation of shape `shape`, by the
/// hook length formula: `n!` divided by the product of all hook lengths.
pub fn dimension(shape: &Partition) -> BigUint {
    let conjugate = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conjugate.part(j) - i) - 1;
            hooks *= BigUint::from(hook);
        }
    }
    let n_factorial = factorial(shape.size());
    let quotient = &n_factorial / &hooks;
    debug_assert_eq!(&quotient * &hooks, n_factorial, "hook product must divide n!");
    quotient
}

/// The dimension of the shape `(r, 2, 1, ..., 1)` of size `n`, in the closed
/// product form `n! / ((r-2)! (n-2-r)! r (n-r) (n-1))`.
///
/// These shapes, together with the row and the column, are exactly the
/// stations of the walk around the single-cell shape.
pub fn two_rowed_hook_dimension(n: usize, r: usize) -> Result<BigUint, CharacterError> {
    if r < 2 || r + 2 > n {
        return Err(CharacterError::InvalidTwoRowedHook { n, r });
    }
    let denominator = factorial(r - 2)
        * factorial(n - 2 - r)
        * BigUint::from(r)
        * BigUint::from(n - r)
        * BigUint::from(n - 1);
    let n_factorial = factorial(n);
    let quotient = &n_factorial / &denominator;
    debug_assert_eq!(&quotient * &denominator, n_factorial);
    Ok(quotient)
}

/// The full character table of the symmetric group on `k` letters.
///
/// Rows are indexed by shapes and columns by classes, both in the fixed
/// enumeration order, so `entries[i][j]` is the character of the `i`-th shape
/// on the `j`-th class. The last column (class all-ones) holds dimensions.
/// Serialized as `{"k": ..., "order": ..., "table": ..., "centralizers": ...}`
/// with centralizer orders as decimal strings.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    k: usize,
    order: Vec<Partition>,
    entries: Vec<Vec<i64>>,
    centralizers: Vec<BigUint>,
}

impl CharacterTable {
    /// Computes the table for the symmetric group on `k` letters, sharing one
    /// cache across all entries.
    pub fn build(k: usize) -> Result<Self, CharacterError> {
        let order = enumerate_partitions(k);
        let mut cache = CharCache::new();
        let mut entries = Vec::with_capacity(order.len());
        for shape in &order {
            let mut row = Vec::with_capacity(order.len());
            for class in &order {
                row.push(mn_character_with(&mut cache, shape, class)?);
            }
            entries.push(row);
        }
        let centralizers = order.iter().map(centralizer_order).collect();
        Ok(Self {
            k,
            order,
            entries,
            centralizers,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Shapes-and-classes index order shared by rows and columns.
    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    /// `entries[i][j]`: character of shape `i` on class `j`.
    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Centralizer orders of the classes, in column order.
    pub fn centralizers(&self) -> &[BigUint] {
        &self.centralizers
    }

    /// Looks up the row/column index of a partition.
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.order.iter().position(|q| q == p)
    }

    /// The entry for a `(shape, class)` index pair.
    pub fn value(&self, shape: usize, class: usize) -> i64 {
        self.entries[shape][class]
    }

    /// Tab-separated rendering: a header row of class labels, then one row
    /// per shape.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("shape/class");
        for class in &self.order {
            out.push('\t');
            out.push_str(&class.to_compact_string());
        }
        out.push('\n');
        for (shape, row) in self.order.iter().zip(&self.entries) {
            out.push_str(&shape.to_compact_string());
            for value in row {
                out.push('\t');
                out.push_str(&value.to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for CharacterTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let centralizers: Vec<String> =
            self.centralizers.iter().map(|z| z.to_string()).collect();
        let mut s = serializer.serialize_struct("CharacterTable", 4)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("table", &self.entries)?;
        s.serialize_field("centralizers", &centralizers)?;
        s.end()
    }
}

/// Result of checking the column orthogonality of a character table: for
/// classes `a` and `b`, the dot product of their columns must be the
/// centralizer order of `a` when `a = b` and zero otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalityReport {
    pub k: usize,
    pub pairs_checked: usize,
    pub max_deviation: u64,
    pub offending: Option<(Partition, Partition)>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.max_deviation == 0
    }
}

/// Checks column orthogonality for the table on `k` letters.
pub fn verify_column_orthogonality(k: usize) -> Result<OrthogonalityReport, CharacterError> {
    let table = CharacterTable::build(k)?;
    let classes = table.order().len();
    let mut max_deviation: u64 = 0;
    let mut offending = None;
    let mut pairs_checked = 0;
    for a in 0..classes {
        for b in a..classes {
            pairs_checked += 1;
            let dot: i128 = (0..classes)
                .map(|shape| table.value(shape, a) as i128 * table.value(shape, b) as i128)
                .sum();
            let expected = if a == b {
                BigInt::from(table.centralizers()[a].clone())
            } else {
                BigInt::zero()
            };
            let deviation = (BigInt::from(dot) - expected).magnitude().clone();
            if deviation > BigUint::from(max_deviation) {
                max_deviation = deviation.to_u64().unwrap_or(u64::MAX);
                offending = Some((table.order()[a].clone(), table.order()[b].clone()));
            }
        }
    }
    Ok(OrthogonalityReport {
        k,
        pairs_checked,
        max_deviation,
        offending,
    })
}
