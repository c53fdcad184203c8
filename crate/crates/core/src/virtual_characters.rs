//! Virtual characters built from the walk of a strip around a shape, and
//! exact verification sweeps for the identities they satisfy.
//!
//! Fix a shape `nu` of size `k` and a total size `n`. Gluing the walk's
//! stations together with alternating signs gives the virtual character
//!
//! ```text
//! sum over stations j of (-1)^(j+1) chi^(station j shape)
//! ```
//!
//! a formal integer combination of irreducible characters of the symmetric
//! group on `n` letters ([`VirtualCharacter`]). In the clean regime
//! `n >= 2k + 2` this combination evaluates, on every class `mu`, to
//!
//! ```text
//! chi^nu(mu minus its largest part) * (n - k)   if mu's largest part is n - k,
//! 0                                             otherwise,
//! ```
//!
//! the [`closed_form`]. The sweep functions in this module confirm that and
//! the identities downstream of it (column orthogonality contracted against
//! a glued class, the matrix reformulation over a full character table, and
//! the centralizer factorization) by exhaustive exact evaluation.
//!
//! Sweeps refuse to assert anything below the clean regime: they return
//! [`RangeChecked::OutOfRange`] instead of a report, because the walk can
//! repeat heights there and the closed form genuinely fails.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::characters::{
    mn_character_with, CharCache, CharacterError, CharacterTable,
};
use crate::partitions::{centralizer_order, enumerate_partitions, Partition};
use crate::strips::{going_around, StripError};

/// One signed irreducible constituent of a virtual character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    /// `1` or `-1`.
    pub sign: i8,
    /// The shape of the constituent, a partition of `n`.
    pub shape: Partition,
}

/// An alternating sum of irreducible characters indexed by the stations of a
/// strip walk. See the module documentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualCharacter {
    nu: Partition,
    n: usize,
    terms: Vec<Term>,
    ambiguous: bool,
}

impl VirtualCharacter {
    /// Builds the virtual character for the walk around `nu` at total size
    /// `n`: the stations in height order, with signs alternating from `+` on
    /// the flattest station.
    ///
    /// Works for any `n >= |nu| + 1`. Below the clean regime the result is
    /// still a well-defined alternating sum but is flagged
    /// [`VirtualCharacter::ambiguous`] when two stations share a height.
    pub fn build(nu: &Partition, n: usize) -> Result<Self, StripError> {
        let walk = going_around(nu, n)?;
        let terms = walk
            .strips()
            .iter()
            .enumerate()
            .map(|(j, strip)| Term {
                sign: if j % 2 == 0 { 1 } else { -1 },
                shape: strip.outer().clone(),
            })
            .collect();
        Ok(Self {
            nu: nu.clone(),
            n,
            terms,
            ambiguous: walk.ambiguous(),
        })
    }

    /// The walked-around shape.
    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    /// Size of the constituent shapes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the walked-around shape.
    pub fn k(&self) -> usize {
        self.nu.size()
    }

    /// The signed constituents, in walk order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// True when the underlying walk had two stations of equal height.
    pub fn ambiguous(&self) -> bool {
        self.ambiguous
    }

    /// Whether `n >= 2k + 2`, the regime where the closed form holds.
    pub fn in_clean_regime(&self) -> bool {
        self.n >= 2 * self.nu.size() + 2
    }

    /// Evaluates the virtual character on the class `mu` by evaluating each
    /// constituent and combining with signs.
    pub fn eval(&self, mu: &Partition) -> Result<i64, CharacterError> {
        self.eval_with(&mut CharCache::new(), mu)
    }

    /// Evaluation with a shared memoization cache; see
    /// [`mn_character_with`].
    pub fn eval_with(&self, cache: &mut CharCache, mu: &Partition) -> Result<i64, CharacterError> {
        if mu.size() != self.n {
            return Err(CharacterError::SizeMismatch {
                shape_size: self.n,
                class_size: mu.size(),
            });
        }
        let mut total: i128 = 0;
        for term in &self.terms {
            total += term.sign as i128 * mn_character_with(cache, &term.shape, mu)? as i128;
        }
        i64::try_from(total).map_err(|_| CharacterError::ValueOverflow {
            value: total.to_string(),
        })
    }
}

impl Serialize for VirtualCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VirtualCharacter", 5)?;
        s.serialize_field("nu", &self.nu)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("k", &self.nu.size())?;
        s.serialize_field("ambiguous", &self.ambiguous)?;
        s.serialize_field("terms", &self.terms)?;
        s.end()
    }
}

/// The predicted value of the virtual character of `nu` at size `n` on the
/// class `mu`: `chi^nu(mu without its largest part) * (n - k)` when `mu`'s
/// largest part is exactly `n - k`, and `0` otherwise.
pub fn closed_form(nu: &Partition, n: usize, mu: &Partition) -> Result<i64, CharacterError> {
    closed_form_with(&mut CharCache::new(), nu, n, mu)
}

/// [`closed_form`] with a shared memoization cache.
pub fn closed_form_with(
    cache: &mut CharCache,
    nu: &Partition,
    n: usize,
    mu: &Partition,
) -> Result<i64, CharacterError> {
    if mu.size() != n {
        return Err(CharacterError::SizeMismatch {
            shape_size: n,
            class_size: mu.size(),
        });
    }
    let k = nu.size();
    if n <= k {
        return Ok(0); // no positive part can equal n - k
    }
    let strip_length = n - k;
    if mu.part(0) != strip_length {
        return Ok(0);
    }
    let rest = mu.without_first_part();
    let product = mn_character_with(cache, nu, &rest)? as i128 * strip_length as i128;
    i64::try_from(product).map_err(|_| CharacterError::ValueOverflow {
        value: product.to_string(),
    })
}

/// Outcome of a sweep that only asserts inside the clean regime
/// `n >= 2k + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RangeChecked<T> {
    /// The requested `(k, n)` lies below the clean regime; nothing was
    /// checked because the claims do not hold there.
    OutOfRange { k: usize, n: usize, required: usize },
    /// The sweep ran; the payload holds its findings.
    Checked(T),
}

impl<T> RangeChecked<T> {
    /// The payload, if the sweep ran.
    pub fn into_checked(self) -> Option<T> {
        match self {
            RangeChecked::OutOfRange { .. } => None,
            RangeChecked::Checked(value) => Some(value),
        }
    }

    /// Borrowing variant of [`RangeChecked::into_checked`].
    pub fn as_checked(&self) -> Option<&T> {
        match self {
            RangeChecked::OutOfRange { .. } => None,
            RangeChecked::Checked(value) => Some(value),
        }
    }
}

/// One failed comparison in a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub nu: Partition,
    pub mu: Partition,
    pub lhs: i64,
    pub rhs: i64,
}

/// Result of an exhaustive verification sweep at one `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub k: usize,
    pub n: usize,
    /// Number of `(nu, mu)` pairs compared.
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Exhaustively compares every virtual character of inner size `k` against
/// its closed form on every class of `n`, in parallel over inner shapes.
pub fn verify_closed_form(
    k: usize,
    n: usize,
) -> Result<RangeChecked<VerificationReport>, CharacterError> {
    if n < 2 * k + 2 {
        return Ok(RangeChecked::OutOfRange {
            k,
            n,
            required: 2 * k + 2,
        });
    }
    let inner_shapes = enumerate_partitions(k);
    let classes = enumerate_partitions(n);
    let per_shape: Result<Vec<Vec<Mismatch>>, CharacterError> = inner_shapes
        .par_iter()
        .map(|nu| {
            let virtual_char =
                VirtualCharacter::build(nu, n).expect("clean regime leaves room for a strip");
            let mut cache = CharCache::new();
            let mut mismatches = Vec::new();
            for mu in &classes {
                let expanded = virtual_char.eval_with(&mut cache, mu)?;
                let predicted = closed_form_with(&mut cache, nu, n, mu)?;
                if expanded != predicted {
                    mismatches.push(Mismatch {
                        nu: nu.clone(),
                        mu: mu.clone(),
                        lhs: expanded,
                        rhs: predicted,
                    });
                }
            }
            Ok(mismatches)
        })
        .collect();
    let mismatches: Vec<Mismatch> = per_shape?.into_iter().flatten().collect();
    Ok(RangeChecked::Checked(VerificationReport {
        k,
        n,
        checked: inner_shapes.len() * classes.len(),
        mismatches,
    }))
}

/// Verifies the expansion of a glued-class column contraction three ways.
///
/// For each class `nu` of `k` and each class `mu` of `n`, the contraction
/// `sum over shapes lambda of n: chi^lambda(glued) * chi^lambda(mu)` -- where
/// `glued` is `nu` with the part `n - k` prepended -- must equal both the
/// expansion `sum over shapes rho of k: chi^rho(nu) * (virtual character of
/// rho)(mu)` and the delta closed form `centralizer(nu) * (n - k) *
/// [mu == glued]`. Each `(nu, mu)` pair contributes one check; a pair can
/// report up to two mismatches, one per failing comparison.
pub fn verify_decomposition(
    k: usize,
    n: usize,
) -> Result<RangeChecked<VerificationReport>, CharacterError> {
    if n < 2 * k + 2 {
        return Ok(RangeChecked::OutOfRange {
            k,
            n,
            required: 2 * k + 2,
        });
    }
    let table_n = CharacterTable::build(n)?;
    let table_k = CharacterTable::build(k)?;
    let inner_classes = table_k.order().to_vec();
    let classes = table_n.order().to_vec();
    let strip_length = n - k;

    // Values of every virtual character of k on every class of n.
    let mut cache = CharCache::new();
    let mut virtual_values: Vec<Vec<i64>> = Vec::with_capacity(inner_classes.len());
    for rho in &inner_classes {
        let virtual_char =
            VirtualCharacter::build(rho, n).expect("clean regime leaves room for a strip");
        let mut row = Vec::with_capacity(classes.len());
        for mu in &classes {
            row.push(virtual_char.eval_with(&mut cache, mu)?);
        }
        virtual_values.push(row);
    }

    let overflow = |value: i128| CharacterError::ValueOverflow {
        value: value.to_string(),
    };
    let mut mismatches = Vec::new();
    for (j, nu) in inner_classes.iter().enumerate() {
        let glued = nu.with_part_prepended(strip_length);
        let glued_col = table_n
            .index_of(&glued)
            .expect("gluing a part onto a class of k yields a class of n");
        let split: i128 = centralizer_order(nu)
            .to_i128()
            .expect("centralizer of a desk-scale class fits i128")
            * strip_length as i128;
        for (m, mu) in classes.iter().enumerate() {
            let contraction: i128 = (0..classes.len())
                .map(|row| {
                    table_n.value(row, glued_col) as i128 * table_n.value(row, m) as i128
                })
                .sum();
            let contraction = i64::try_from(contraction).map_err(|_| overflow(contraction))?;
            let expansion: i128 = (0..inner_classes.len())
                .map(|r| table_k.value(r, j) as i128 * virtual_values[r][m] as i128)
                .sum();
            let expansion = i64::try_from(expansion).map_err(|_| overflow(expansion))?;
            if contraction != expansion {
                mismatches.push(Mismatch {
                    nu: nu.clone(),
                    mu: mu.clone(),
                    lhs: contraction,
                    rhs: expansion,
                });
            }
            let delta: i128 = if *mu == glued { split } else { 0 };
            let delta = i64::try_from(delta).map_err(|_| overflow(delta))?;
            if contraction != delta {
                mismatches.push(Mismatch {
                    nu: nu.clone(),
                    mu: mu.clone(),
                    lhs: contraction,
                    rhs: delta,
                });
            }
        }
    }
    Ok(RangeChecked::Checked(VerificationReport {
        k,
        n,
        checked: inner_classes.len() * classes.len(),
        mismatches,
    }))
}

/// Verifies the matrix form of the closed form: evaluating the virtual
/// character of each shape `rho` of `k` on each glued class (`n - k`
/// prepended to a class of `k`) reproduces the character table of `k` scaled
/// by `n - k`.
pub fn verify_matrix_form(
    k: usize,
    n: usize,
) -> Result<RangeChecked<VerificationReport>, CharacterError> {
    if n < 2 * k + 2 {
        return Ok(RangeChecked::OutOfRange {
            k,
            n,
            required: 2 * k + 2,
        });
    }
    let table = CharacterTable::build(k)?;
    let strip_length = n - k;
    let mut cache = CharCache::new();
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for (r, rho) in table.order().iter().enumerate() {
        let virtual_char =
            VirtualCharacter::build(rho, n).expect("clean regime leaves room for a strip");
        for (j, nu) in table.order().iter().enumerate() {
            checked += 1;
            let glued = nu.with_part_prepended(strip_length);
            let evaluated = virtual_char.eval_with(&mut cache, &glued)?;
            let scaled = table
                .value(r, j)
                .checked_mul(strip_length as i64)
                .ok_or_else(|| CharacterError::ValueOverflow {
                    value: format!("{} * {}", table.value(r, j), strip_length),
                })?;
            if evaluated != scaled {
                mismatches.push(Mismatch {
                    nu: rho.clone(),
                    mu: glued,
                    lhs: evaluated,
                    rhs: scaled,
                });
            }
        }
    }
    Ok(RangeChecked::Checked(VerificationReport {
        k,
        n,
        checked,
        mismatches,
    }))
}

/// One failed centralizer comparison; orders are reported as decimal strings
/// because they outgrow fixed-width integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitMismatch {
    pub nu: Partition,
    pub glued: String,
    pub split: String,
}

/// Result of a centralizer factorization sweep at one `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerSplitReport {
    pub k: usize,
    pub n: usize,
    pub checked: usize,
    pub mismatches: Vec<SplitMismatch>,
}

impl CentralizerSplitReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Verifies that for every class `nu` of `k`, the centralizer order of the
/// glued class (`n - k` prepended to `nu`) factors as
/// `centralizer(nu) * (n - k)`. This needs `n - k` to exceed every part of
/// `nu`, which the clean regime guarantees.
pub fn verify_centralizer_split(k: usize, n: usize) -> RangeChecked<CentralizerSplitReport> {
    if n < 2 * k + 2 {
        return RangeChecked::OutOfRange {
            k,
            n,
            required: 2 * k + 2,
        };
    }
    let strip_length = n - k;
    let inner_classes = enumerate_partitions(k);
    let mut mismatches = Vec::new();
    for nu in &inner_classes {
        let glued_order = centralizer_order(&nu.with_part_prepended(strip_length));
        let split_order = centralizer_order(nu) * num_bigint::BigUint::from(strip_length);
        if glued_order != split_order {
            mismatches.push(SplitMismatch {
                nu: nu.clone(),
                glued: glued_order.to_string(),
                split: split_order.to_string(),
            });
        }
    }
    RangeChecked::Checked(CentralizerSplitReport {
        k,
        n,
        checked: inner_classes.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{dimension, mn_character};
    use crate::strips::decompose_unique;
    use num_traits::ToPrimitive;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn single_cell_walk_character_at_six() {
        let vc = VirtualCharacter::build(&p(&[1]), 6).unwrap();
        let signed: Vec<(i8, Vec<usize>)> = vc
            .terms()
            .iter()
            .map(|t| (t.sign, t.shape.parts().to_vec()))
            .collect();
        assert_eq!(
            signed,
            vec![
                (1, vec![6]),
                (-1, vec![4, 2]),
                (1, vec![3, 2, 1]),
                (-1, vec![2, 2, 1, 1]),
                (1, vec![1, 1, 1, 1, 1, 1]),
            ]
        );
        assert!(!vc.ambiguous());
        assert!(vc.in_clean_regime());
    }

    #[test]
    fn row_of_two_walk_character_at_eight() {
        let vc = VirtualCharacter::build(&p(&[2]), 8).unwrap();
        let signed: Vec<(i8, Vec<usize>)> = vc
            .terms()
            .iter()
            .map(|t| (t.sign, t.shape.parts().to_vec()))
            .collect();
        assert_eq!(
            signed,
            vec![
                (1, vec![8]),
                (-1, vec![5, 3]),
                (1, vec![4, 3, 1]),
                (-1, vec![3, 3, 1, 1]),
                (1, vec![2, 2, 1, 1, 1, 1]),
                (-1, vec![2, 1, 1, 1, 1, 1, 1]),
            ]
        );
    }

    #[test]
    fn at_the_regime_boundary_the_identity_class_vanishes() {
        // Around (2) at n = 6 the stations have dimensions 1, 5, 9, 5, so
        // the alternating sum on the identity class is 1 - 5 + 9 - 5 = 0,
        // matching the closed form (the largest part 1 is not 4).
        let vc = VirtualCharacter::build(&p(&[2]), 6).unwrap();
        let dims: Vec<u64> = vc
            .terms()
            .iter()
            .map(|t| dimension(&t.shape).to_u64().unwrap())
            .collect();
        assert_eq!(dims, vec![1, 5, 9, 5]);
        assert_eq!(vc.eval(&p(&[1, 1, 1, 1, 1, 1])).unwrap(), 0);
        assert_eq!(closed_form(&p(&[2]), 6, &p(&[1; 6])).unwrap(), 0);
    }

    #[test]
    fn closed_form_picks_out_glued_classes() {
        assert_eq!(closed_form(&p(&[2]), 8, &p(&[6, 2])).unwrap(), 6);
        assert_eq!(closed_form(&p(&[2]), 8, &p(&[6, 1, 1])).unwrap(), 6);
        assert_eq!(closed_form(&p(&[2]), 8, &p(&[4, 4])).unwrap(), 0);
        assert_eq!(closed_form(&p(&[2]), 8, &p(&[8])).unwrap(), 0);
        // chi^(2,1) on (2,1) is 0, so even a glued class can predict 0.
        assert_eq!(closed_form(&p(&[2, 1]), 8, &p(&[5, 2, 1])).unwrap(), 0);
    }

    #[test]
    fn eval_checks_class_size() {
        let vc = VirtualCharacter::build(&p(&[1]), 6).unwrap();
        assert!(matches!(
            vc.eval(&p(&[5])),
            Err(CharacterError::SizeMismatch { .. })
        ));
        assert!(matches!(
            closed_form(&p(&[1]), 6, &p(&[5])),
            Err(CharacterError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn eval_agrees_with_term_by_term_summation() {
        let vc = VirtualCharacter::build(&p(&[2, 1]), 9).unwrap();
        for mu in enumerate_partitions(9) {
            let by_hand: i64 = vc
                .terms()
                .iter()
                .map(|t| t.sign as i64 * mn_character(&t.shape, &mu).unwrap())
                .sum();
            assert_eq!(vc.eval(&mu).unwrap(), by_hand, "class {mu}");
        }
    }

    #[test]
    fn constituents_are_exactly_the_uniquely_decomposable_shapes() {
        for k in 0..=3 {
            for n in (2 * k + 2)..=(2 * k + 4) {
                let mut stations: Vec<Partition> = Vec::new();
                for nu in enumerate_partitions(k) {
                    let vc = VirtualCharacter::build(&nu, n).unwrap();
                    stations.extend(vc.terms().iter().map(|t| t.shape.clone()));
                }
                stations.sort();
                for lambda in enumerate_partitions(n) {
                    let decomposes = decompose_unique(&lambda, k).unwrap().is_some();
                    assert_eq!(
                        stations.binary_search(&lambda).is_ok(),
                        decomposes,
                        "shape {lambda} at k = {k}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_sweep_passes_at_small_sizes() {
        for k in 0..=2 {
            for n in (2 * k + 2)..=(2 * k + 4) {
                let report = verify_closed_form(k, n)
                    .unwrap()
                    .into_checked()
                    .expect("in range");
                assert!(report.passed(), "k = {k}, n = {n}: {:?}", report.mismatches);
                assert_eq!(
                    report.checked,
                    enumerate_partitions(k).len() * enumerate_partitions(n).len()
                );
            }
        }
    }

    #[test]
    fn sweeps_refuse_to_run_below_the_clean_regime() {
        assert_eq!(
            verify_closed_form(3, 7).unwrap(),
            RangeChecked::OutOfRange {
                k: 3,
                n: 7,
                required: 8
            }
        );
        assert!(matches!(
            verify_decomposition(2, 5).unwrap(),
            RangeChecked::OutOfRange { required: 6, .. }
        ));
        assert!(matches!(
            verify_matrix_form(1, 3).unwrap(),
            RangeChecked::OutOfRange { required: 4, .. }
        ));
        assert!(matches!(
            verify_centralizer_split(2, 5),
            RangeChecked::OutOfRange { required: 6, .. }
        ));
    }

    #[test]
    fn decomposition_sweep_passes_at_small_sizes() {
        for (k, n) in [(0, 2), (1, 4), (1, 5), (2, 6), (2, 7)] {
            let report = verify_decomposition(k, n)
                .unwrap()
                .into_checked()
                .expect("in range");
            assert!(report.passed(), "k = {k}, n = {n}: {:?}", report.mismatches);
        }
    }

    #[test]
    fn matrix_form_for_two_around_six() {
        // Table of 2 is [[1,1],[-1,1]]; gluing 4 onto the classes (2) and
        // (1,1) and evaluating the two virtual characters must give exactly
        // that table times 4.
        let table = CharacterTable::build(2).unwrap();
        let mut cache = CharCache::new();
        for (r, rho) in table.order().iter().enumerate() {
            let vc = VirtualCharacter::build(rho, 6).unwrap();
            for (j, nu) in table.order().iter().enumerate() {
                let glued = nu.with_part_prepended(4);
                assert_eq!(
                    vc.eval_with(&mut cache, &glued).unwrap(),
                    table.value(r, j) * 4
                );
            }
        }
        let report = verify_matrix_form(2, 6)
            .unwrap()
            .into_checked()
            .expect("in range");
        assert!(report.passed());
        assert_eq!(report.checked, 4);
    }

    #[test]
    fn centralizer_split_holds_in_clean_regime() {
        for k in 0..=6 {
            for n in (2 * k + 2)..=(2 * k + 6) {
                let report = verify_centralizer_split(k, n)
                    .into_checked()
                    .expect("in range");
                assert!(report.passed(), "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn centralizer_split_fails_outside_the_regime_as_expected() {
        // k = 2, n = 4 glues a part of size 2 onto (2): multiplicity jumps,
        // so the factorization must not hold; the sweep correctly refuses.
        assert!(matches!(
            verify_centralizer_split(2, 4),
            RangeChecked::OutOfRange { .. }
        ));
        // Demonstrate the actual failure the gate protects against.
        let glued = p(&[2, 2]);
        assert_ne!(
            centralizer_order(&glued),
            centralizer_order(&p(&[2])) * 2u32
        );
    }

    #[test]
    fn virtual_character_json_shape() {
        let vc = VirtualCharacter::build(&p(&[1]), 4).unwrap();
        assert_eq!(
            serde_json::to_string(&vc).unwrap(),
            r#"{"nu":[1],"n":4,"k":1,"ambiguous":false,"terms":[{"sign":1,"shape":[4]},{"sign":-1,"shape":[2,2]},{"sign":1,"shape":[1,1,1,1]}]}"#
        );
    }

    #[test]
    fn report_json_shape() {
        let report = VerificationReport {
            k: 1,
            n: 4,
            checked: 5,
            mismatches: vec![Mismatch {
                nu: p(&[1]),
                mu: p(&[3, 1]),
                lhs: 3,
                rhs: 0,
            }],
        };
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"k":1,"n":4,"checked":5,"mismatches":[{"nu":[1],"mu":[3,1],"lhs":3,"rhs":0}]}"#
        );
    }
}
