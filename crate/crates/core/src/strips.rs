//! Border strips (rim hooks) and the walk of a strip around a fixed shape.
//!
//! A border strip is a connected skew shape containing no 2x2 block of cells.
//! Given an inner shape `nu` and a strip length `s`, there is one way to glue
//! a strip of each feasible height onto `nu`; walking the strip from lying
//! flat in the first row to standing upright in the first column visits every
//! such gluing. [`going_around`] produces that walk, sorted by height, which
//! downstream modules turn into alternating sums of characters.
//!
//! All strip enumeration here runs directly on row coordinates: a strip
//! occupying rows `r1..=r2` of the outer shape is determined by those two
//! rows, so both [`add_strips`] and [`remove_strips`] are quadratic scans over
//! row pairs rather than searches over skew shapes.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::partitions::Partition;

/// Errors from strip construction and decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StripError {
    /// The inner shape does not fit inside the outer shape.
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { inner: Partition, outer: Partition },

    /// The skew shape is empty, so there is no strip (strips have length >= 1).
    #[error("skew shape {outer}/{inner} is empty; a border strip has at least one cell")]
    EmptyShape { inner: Partition, outer: Partition },

    /// The skew shape is a valid diagram but not a border strip.
    #[error("skew shape {outer}/{inner} is not a border strip: {reason}")]
    NotAStrip {
        inner: Partition,
        outer: Partition,
        reason: StripDefect,
    },

    /// A walk needs at least one cell: `n` must be at least `|nu| + 1`.
    #[error("cannot walk a strip of {n} - {} = {} cells around {nu}; n must be at least {}",
            nu.size(), n.saturating_sub(nu.size()), nu.size() + 1)]
    WalkTooSmall { nu: Partition, n: usize },

    /// Removing one strip from `outer` down to size `k` succeeded in more
    /// than one way, so there is no canonical decomposition.
    #[error("{outer} has {} distinct border-strip decompositions down to size {k}", inners.len())]
    AmbiguousDecomposition {
        outer: Partition,
        k: usize,
        inners: Vec<Partition>,
    },
}

/// Why a connected-looking skew shape fails to be a border strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripDefect {
    /// The occupied rows do not overlap in any column.
    Disconnected,
    /// Two adjacent rows overlap in two or more columns.
    ContainsTwoByTwoBlock,
}

impl std::fmt::Display for StripDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StripDefect::Disconnected => write!(f, "it is disconnected"),
            StripDefect::ContainsTwoByTwoBlock => write!(f, "it contains a 2x2 block"),
        }
    }
}

/// A border strip, stored as its inner and outer shapes plus the derived
/// height (rows spanned) and width (columns spanned).
///
/// The cell count is always `height + width - 1`, exposed as
/// [`BorderStrip::length`]. Serialized as
/// `{"inner": ..., "outer": ..., "height": ..., "length": ...}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderStrip {
    inner: Partition,
    outer: Partition,
    height: usize,
    width: usize,
}

impl BorderStrip {
    /// The shape the strip was glued onto.
    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// The shape with the strip included.
    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// Number of rows the strip touches.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of columns the strip touches.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of cells: always `height + width - 1`.
    pub fn length(&self) -> usize {
        self.height + self.width - 1
    }

    /// Whether the strip reaches into the first row of the outer shape.
    pub fn has_tail(&self) -> bool {
        self.outer.part(0) > self.inner.part(0)
    }

    /// The cells of the strip as 1-based `(row, column)` pairs, top row first
    /// and left to right within a row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.length());
        for i in 0..self.outer.len() {
            for j in self.inner.part(i)..self.outer.part(i) {
                cells.push((i + 1, j + 1));
            }
        }
        cells
    }
}

impl Serialize for BorderStrip {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BorderStrip", 4)?;
        s.serialize_field("inner", &self.inner)?;
        s.serialize_field("outer", &self.outer)?;
        s.serialize_field("height", &self.height)?;
        s.serialize_field("length", &self.length())?;
        s.end()
    }
}

/// Checks that `outer/inner` is a border strip and computes its dimensions.
pub fn strip_between(inner: &Partition, outer: &Partition) -> Result<BorderStrip, StripError> {
    if !outer.contains(inner) {
        return Err(StripError::NotContained {
            inner: inner.clone(),
            outer: outer.clone(),
        });
    }
    let occupied: Vec<usize> = (0..outer.len())
        .filter(|&i| outer.part(i) > inner.part(i))
        .collect();
    let (&first, &last) = match (occupied.first(), occupied.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => {
            return Err(StripError::EmptyShape {
                inner: inner.clone(),
                outer: outer.clone(),
            })
        }
    };
    let defect = |reason| StripError::NotAStrip {
        inner: inner.clone(),
        outer: outer.clone(),
        reason,
    };
    if occupied.len() != last - first + 1 {
        return Err(defect(StripDefect::Disconnected));
    }
    // Rows i and i+1 of a strip must overlap in exactly one column: row i+1
    // has to end (outer edge) exactly one past where row i begins (inner
    // edge). Ending earlier disconnects the rows; later makes a 2x2 block.
    for i in first..last {
        let joint = inner.part(i) + 1;
        if outer.part(i + 1) < joint {
            return Err(defect(StripDefect::Disconnected));
        }
        if outer.part(i + 1) > joint {
            return Err(defect(StripDefect::ContainsTwoByTwoBlock));
        }
    }
    let strip = BorderStrip {
        inner: inner.clone(),
        outer: outer.clone(),
        height: last - first + 1,
        width: outer.part(first) - inner.part(last),
    };
    debug_assert_eq!(strip.length(), outer.size() - inner.size());
    Ok(strip)
}

/// All ways to glue a border strip of `length` cells onto `inner`.
///
/// Returns an empty list when `length` is 0. The results come out grouped by
/// starting row; callers that need the height-sorted walk use
/// [`going_around`].
pub fn add_strips(inner: &Partition, length: usize) -> Vec<BorderStrip> {
    let mut out = Vec::new();
    if length == 0 {
        return out;
    }
    let rows = inner.len();
    // A glued strip occupies rows start..=end of the result. Every row below
    // the first contributes exactly one more cell than the inner row above it
    // allows, which forces the whole shape once (start, end) is chosen.
    for start in 0..=rows {
        for end in start..start + length {
            let first_row =
                length as i64 - (end - start) as i64 + inner.part(end) as i64;
            if first_row < inner.part(start) as i64 + 1 {
                continue;
            }
            if start > 0 && first_row > inner.part(start - 1) as i64 {
                continue;
            }
            let first_row = first_row as usize;
            let mut parts = Vec::with_capacity(rows.max(end + 1));
            parts.extend((0..start).map(|i| inner.part(i)));
            parts.push(first_row);
            parts.extend((start + 1..=end).map(|i| inner.part(i - 1) + 1));
            parts.extend((end + 1..rows).map(|i| inner.part(i)));
            out.push(BorderStrip {
                inner: inner.clone(),
                outer: Partition::new(parts),
                height: end - start + 1,
                width: first_row - inner.part(end),
            });
        }
    }
    out
}

/// All ways to remove a border strip of `length` cells from `outer`.
///
/// Returns an empty list when `length` is 0 or no strip of that length can
/// be peeled off.
pub fn remove_strips(outer: &Partition, length: usize) -> Vec<BorderStrip> {
    let mut out = Vec::new();
    if length == 0 {
        return out;
    }
    let rows = outer.len();
    // Mirror of `add_strips`: a removed strip occupying rows start..=end
    // forces each intermediate inner row to be one shorter than the outer row
    // below it, leaving only the bottom inner row free.
    for start in 0..rows {
        for end in start..rows.min(start + length) {
            let bottom = outer.part(start) as i64 + (end - start) as i64 - length as i64;
            if bottom < outer.part(end + 1) as i64 {
                continue;
            }
            let bottom = bottom as usize;
            if bottom >= outer.part(end) {
                continue;
            }
            let mut parts = Vec::with_capacity(rows);
            parts.extend((0..start).map(|i| outer.part(i)));
            parts.extend((start..end).map(|i| outer.part(i + 1) - 1));
            parts.push(bottom);
            parts.extend((end + 1..rows).map(|i| outer.part(i)));
            out.push(BorderStrip {
                inner: Partition::new(parts),
                outer: outer.clone(),
                height: end - start + 1,
                width: outer.part(start) - bottom,
            });
        }
    }
    out
}

/// The walk of a border strip of `n - |nu|` cells around the shape `nu`:
/// every way to glue such a strip onto `nu`, sorted by height and then by the
/// enumeration order of the outer shape.
///
/// In the clean regime `n >= 2|nu| + 2` the walk has exactly `n - |nu|`
/// stations with heights `1, 2, ..., n - |nu|`; below that regime two
/// stations can share a height, which is reported via
/// [`GoingAround::ambiguous`] rather than as an error.
#[derive(Debug, Clone)]
pub struct GoingAround {
    nu: Partition,
    n: usize,
    strips: Vec<BorderStrip>,
    ambiguous: bool,
}

impl GoingAround {
    /// The fixed inner shape.
    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    /// The size of the outer shapes (`|nu|` plus the strip length).
    pub fn n(&self) -> usize {
        self.n
    }

    /// The stations of the walk, sorted by strip height.
    pub fn strips(&self) -> &[BorderStrip] {
        &self.strips
    }

    /// The outer shapes along the walk, in walk order.
    pub fn shapes(&self) -> Vec<Partition> {
        self.strips.iter().map(|s| s.outer().clone()).collect()
    }

    /// True when two stations share a height, which can only happen below
    /// the clean regime `n >= 2|nu| + 2`. Height-indexed constructions are
    /// not well defined on an ambiguous walk.
    pub fn ambiguous(&self) -> bool {
        self.ambiguous
    }

    /// Whether `n >= 2|nu| + 2`, the regime with one station per height.
    pub fn in_clean_regime(&self) -> bool {
        self.n >= 2 * self.nu.size() + 2
    }
}

/// Walks a border strip of `n - |nu|` cells around `nu`. See [`GoingAround`].
pub fn going_around(nu: &Partition, n: usize) -> Result<GoingAround, StripError> {
    let k = nu.size();
    if n < k + 1 {
        return Err(StripError::WalkTooSmall { nu: nu.clone(), n });
    }
    let mut strips = add_strips(nu, n - k);
    strips.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| a.outer().canonical_cmp(b.outer()))
    });
    let ambiguous = strips.windows(2).any(|w| w[0].height() == w[1].height());
    Ok(GoingAround {
        nu: nu.clone(),
        n,
        strips,
        ambiguous,
    })
}

/// Strips `outer` down to a shape of size `k` by removing one border strip,
/// if that is possible in exactly one way.
///
/// Returns `Ok(None)` when no single strip removal reaches size `k`, and an
/// [`StripError::AmbiguousDecomposition`] when several do. In the clean
/// regime `|outer| >= 2k + 2` the decomposition is unique whenever it exists.
pub fn decompose_unique(
    outer: &Partition,
    k: usize,
) -> Result<Option<(Partition, BorderStrip)>, StripError> {
    let n = outer.size();
    if k >= n {
        return Ok(None);
    }
    let mut found = remove_strips(outer, n - k);
    match found.len() {
        0 => Ok(None),
        1 => {
            let strip = found.pop().expect("length checked");
            Ok(Some((strip.inner().clone(), strip)))
        }
        _ => Err(StripError::AmbiguousDecomposition {
            outer: outer.clone(),
            k,
            inners: found.into_iter().map(|s| s.inner().clone()).collect(),
        }),
    }
}
