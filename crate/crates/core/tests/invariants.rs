//! Cross-module invariants: properties that tie two independent code paths
//! together, checked deterministically over small sweeps and randomly via
//! proptest.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::sample::select;

use rimwalk_core::{
    decompose_unique, dimension_poly_shifted, enumerate_partitions, going_around, mn_character,
    mn_character_with, reference_character_column, strip_between, verify_decomposition, CharCache,
    CharacterTable, IntPolynomial, Partition,
};

/// Removing the largest part of a glued class must step the character
/// recursion through exactly the walk station: for every shape of size `n`,
/// either it decomposes uniquely onto a size-`k` shape and its character on
/// any glued class is the signed character of that shape, or it does not
/// decompose and the character vanishes.
#[test]
fn single_strip_step_matches_unique_decomposition() {
    for k in 0..=4usize {
        for n in (2 * k + 2)..=(2 * k + 5) {
            let inner_classes = enumerate_partitions(k);
            let mut cache = CharCache::new();
            for lambda in enumerate_partitions(n) {
                let decomposition = decompose_unique(&lambda, k)
                    .expect("unique in the clean regime");
                for nu in &inner_classes {
                    let glued = nu.with_part_prepended(n - k);
                    let whole = mn_character_with(&mut cache, &lambda, &glued).unwrap();
                    match &decomposition {
                        Some((inner, strip)) => {
                            let sign = if strip.height() % 2 == 1 { 1 } else { -1 };
                            let step = mn_character_with(&mut cache, inner, nu).unwrap();
                            assert_eq!(
                                whole,
                                sign * step,
                                "shape {lambda}, glued {glued}, station {inner}"
                            );
                        }
                        None => {
                            assert_eq!(whole, 0, "shape {lambda} on glued class {glued}");
                        }
                    }
                }
            }
        }
    }
}

/// The shifted dimension polynomial of the empty walk is `(t + 1)^(n-1)`:
/// hook dimensions are binomial coefficients.
#[test]
fn empty_walk_polynomial_is_a_binomial_power() {
    for n in 2..=16usize {
        let poly = dimension_poly_shifted(&Partition::empty(), n).unwrap();
        let mut expected = IntPolynomial::new(vec![BigInt::one()]);
        for _ in 0..n - 1 {
            let shifted = expected.times_t();
            let coeffs: Vec<BigInt> = (0..shifted.coefficients().len())
                .map(|i| expected.coefficient(i) + shifted.coefficient(i))
                .collect();
            expected = IntPolynomial::new(coeffs);
        }
        assert_eq!(poly, expected, "n = {n}");
    }
}

/// The table built by the strip recursion must agree column-by-column with
/// the symmetric-polynomial reference evaluator.
#[test]
fn table_columns_match_reference_columns() {
    for n in 0..=5usize {
        let table = CharacterTable::build(n).unwrap();
        for (j, class) in table.order().iter().enumerate() {
            let reference = reference_character_column(class).unwrap();
            let recursion: Vec<i64> = (0..table.order().len())
                .map(|i| table.value(i, j))
                .collect();
            assert_eq!(recursion, reference, "class {class}");
        }
    }
}

/// The glued-class contraction identity holds exactly at desk scale.
#[test]
fn decomposition_sweep_small_sizes() {
    for k in 0..=2usize {
        for n in (2 * k + 2)..=8 {
            let report = verify_decomposition(k, n)
                .unwrap()
                .into_checked()
                .expect("in range");
            assert!(report.passed(), "k = {k}, n = {n}: {:?}", report.mismatches);
        }
    }
}

fn arbitrary_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size)
        .prop_flat_map(|n| select(enumerate_partitions(n)))
}

proptest! {
    /// JSON round trip preserves any partition.
    #[test]
    fn partition_json_round_trip(p in arbitrary_partition(12)) {
        let json = serde_json::to_string(&p).unwrap();
        let back: Partition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(p, back);
    }

    /// Conjugation is a size-preserving involution.
    #[test]
    fn conjugation_involution(p in arbitrary_partition(14)) {
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    /// Every strip produced by the walk validates against the standalone
    /// strip predicate and satisfies the length accounting.
    #[test]
    fn walk_strips_validate(nu in arbitrary_partition(5), extra in 1usize..=8) {
        let n = nu.size() + extra;
        let walk = going_around(&nu, n).unwrap();
        for strip in walk.strips() {
            let checked = strip_between(strip.inner(), strip.outer()).unwrap();
            prop_assert_eq!(checked.height(), strip.height());
            prop_assert_eq!(strip.length(), strip.height() + strip.width() - 1);
            prop_assert_eq!(strip.length(), extra);
            prop_assert_eq!(strip.outer().size(), n);
        }
    }

    /// In the clean regime the walk has one station per height, in order.
    #[test]
    fn walk_heights_are_a_ladder(nu in arbitrary_partition(5), slack in 0usize..=6) {
        let k = nu.size();
        let n = 2 * k + 2 + slack;
        let walk = going_around(&nu, n).unwrap();
        prop_assert!(!walk.ambiguous());
        let heights: Vec<usize> = walk.strips().iter().map(|s| s.height()).collect();
        let ladder: Vec<usize> = (1..=n - k).collect();
        prop_assert_eq!(heights, ladder);
    }

    /// The character of any shape on the class of a single full cycle is
    /// supported on hooks, where it is a sign.
    #[test]
    fn full_cycle_class_is_hook_supported(p in arbitrary_partition(9)) {
        prop_assume!(p.size() >= 1);
        let n = p.size();
        let value = mn_character(&p, &Partition::new(vec![n])).unwrap();
        let is_hook = p.len() == 1 || p.part(1) <= 1;
        if is_hook {
            let leg = p.len() - 1;
            let sign = if leg % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(value, sign);
        } else {
            prop_assert_eq!(value, 0);
        }
    }

    /// The alternating dimension sum along any clean-regime walk vanishes
    /// (random-instance counterpart of the deterministic sweeps).
    #[test]
    fn alternating_dimension_sums_vanish(nu in arbitrary_partition(4), slack in 0usize..=8) {
        let n = 2 * nu.size() + 2 + slack;
        let sum = rimwalk_core::alternating_dim_sum(&nu, n).unwrap();
        prop_assert!(sum.is_zero());
    }
}
