//! Brute-force reference evaluator for character values.
//!
//! [`reference_character`] computes the same numbers as
//! [`crate::characters::mn_character`] by a completely different route:
//! expand the power-sum product of the class as an explicit polynomial in
//! `n` variables, then repeatedly subtract Schur polynomials (built by
//! enumerating semistandard tableaux) to read off the coefficients of the
//! expansion. No border-strip code is involved, so agreement between the two
//! evaluators is strong evidence for both.
//!
//! The peeling works because the lexicographically leading monomial of the
//! Schur polynomial of shape `theta` is `x^theta`, and every monomial of that
//! polynomial is dominated by `theta`; scanning shapes in the fixed
//! enumeration order therefore reads each coefficient off the monomial
//! `x^shape` before any later shape could contribute to it.
//!
//! Everything is exponential in `n`, so sizes are capped at
//! [`REFERENCE_MAX_SIZE`].

use std::collections::HashMap;

use crate::characters::CharacterError;
use crate::partitions::{enumerate_partitions, Partition};

/// Largest `n` the reference evaluator accepts.
pub const REFERENCE_MAX_SIZE: usize = 7;

/// Exponent vector of one monomial in a fixed number of variables.
type Monomial = Vec<u8>;

/// A polynomial stored sparsely as exponent vectors with coefficients.
type Polynomial = HashMap<Monomial, i64>;

/// The product of power sums for the class `class`, expanded in `vars`
/// variables by direct polynomial multiplication.
fn power_sum_product(class: &Partition, vars: usize) -> Polynomial {
    let mut product: Polynomial = HashMap::new();
    product.insert(vec![0; vars], 1);
    for &part in class.parts() {
        let mut next: Polynomial = HashMap::new();
        for (mono, coeff) in &product {
            for v in 0..vars {
                let mut grown = mono.clone();
                grown[v] += part as u8;
                *next.entry(grown).or_insert(0) += coeff;
            }
        }
        product = next;
    }
    product
}

/// The Schur polynomial of `shape` in `vars` variables, by direct enumeration
/// of semistandard tableaux (rows weakly increase, columns strictly increase,
/// entries in `1..=vars`). The coefficient of a monomial is the number of
/// tableaux with that content.
fn schur_polynomial(shape: &Partition, vars: usize) -> Polynomial {
    let rows: Vec<usize> = shape.parts().to_vec();
    let mut out: Polynomial = HashMap::new();
    if rows.len() > vars {
        return out; // no column-strict filling exists
    }
    if rows.is_empty() {
        out.insert(vec![0; vars], 1);
        return out;
    }
    let mut grid: Vec<Vec<u8>> = rows.iter().map(|&r| vec![0; r]).collect();

    fn fill(
        rows: &[usize],
        vars: u8,
        grid: &mut Vec<Vec<u8>>,
        r: usize,
        c: usize,
        out: &mut Polynomial,
    ) {
        if r == rows.len() {
            let mut weight = vec![0u8; vars as usize];
            for row in grid.iter() {
                for &entry in row {
                    weight[(entry - 1) as usize] += 1;
                }
            }
            *out.entry(weight).or_insert(0) += 1;
            return;
        }
        let (next_r, next_c) = if c + 1 < rows[r] {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lower = {
            let left = if c > 0 { grid[r][c - 1] } else { 1 };
            let above = if r > 0 && grid[r - 1].len() > c {
                grid[r - 1][c] + 1
            } else {
                1
            };
            left.max(above)
        };
        for value in lower..=vars {
            grid[r][c] = value;
            fill(rows, vars, grid, next_r, next_c, out);
        }
        grid[r][c] = 0;
    }

    fill(&rows, vars as u8, &mut grid, 0, 0, &mut out);
    out
}

/// All character values on the class `class`, in the fixed enumeration order
/// of shapes: the coefficients of the Schur expansion of the power-sum
/// product of `class`.
pub fn reference_character_column(class: &Partition) -> Result<Vec<i64>, CharacterError> {
    let n = class.size();
    if n > REFERENCE_MAX_SIZE {
        return Err(CharacterError::ReferenceLimitExceeded {
            n,
            max: REFERENCE_MAX_SIZE,
        });
    }
    let vars = n.max(1);
    let mut remaining = power_sum_product(class, vars);
    let shapes = enumerate_partitions(n);
    let mut column = Vec::with_capacity(shapes.len());
    for shape in &shapes {
        let mut leading: Monomial = shape.parts().iter().map(|&p| p as u8).collect();
        leading.resize(vars, 0);
        let coeff = remaining.get(&leading).copied().unwrap_or(0);
        column.push(coeff);
        if coeff != 0 {
            for (mono, mult) in schur_polynomial(shape, vars) {
                *remaining.entry(mono).or_insert(0) -= coeff * mult;
            }
        }
    }
    debug_assert!(
        remaining.values().all(|&v| v == 0),
        "power-sum product must be exhausted by Schur peeling"
    );
    Ok(column)
}

/// The character value of `shape` on `class` by polynomial expansion.
pub fn reference_character(shape: &Partition, class: &Partition) -> Result<i64, CharacterError> {
    if shape.size() != class.size() {
        return Err(CharacterError::SizeMismatch {
            shape_size: shape.size(),
            class_size: class.size(),
        });
    }
    let column = reference_character_column(class)?;
    let index = enumerate_partitions(class.size())
        .iter()
        .position(|q| q == shape)
        .expect("every shape of size n appears in the enumeration");
    Ok(column[index])
}
