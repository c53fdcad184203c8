//! Dense univariate polynomials with exact big-integer coefficients.
//!
//! Just enough polynomial arithmetic for the dimension generating functions
//! in [`crate::identities`]: construction, evaluation, exact division by
//! `t + 1`, and shape predicates (positivity, unimodality, palindromicity)
//! used by the conjecture reports.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Errors from polynomial factor extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialError {
    /// The zero polynomial is divisible by everything; multiplicity is
    /// undefined.
    #[error("the zero polynomial has no root multiplicity")]
    ZeroPolynomial,
}

/// A polynomial in one variable `t` with `BigInt` coefficients, stored
/// densely by ascending power. The zero polynomial has no coefficients.
///
/// Serialized as `{"coefficients": [...]}` with decimal-string coefficients,
/// constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients by ascending power, trimming
    /// leading zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients by ascending power; empty for the zero polynomial.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `t^i` (zero past the degree).
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Evaluates at `t` by Horner's rule.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Multiplies by `t` (shifts coefficients up one power).
    pub fn times_t(&self) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `t` exactly, if the constant term is zero.
    pub fn divided_by_t(&self) -> Option<IntPolynomial> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Synthetic division by `t + 1`: returns `(quotient, remainder)` with
    /// `self = quotient * (t + 1) + remainder`, all exact.
    pub fn div_rem_t_plus_1(&self) -> (IntPolynomial, BigInt) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero());
        }
        let mut quotient = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let value = c + &carry;
            if i == 0 {
                return (Self::new(quotient), value);
            }
            carry = -&value;
            quotient[i - 1] = value;
        }
        unreachable!("loop returns at i = 0");
    }

    /// The multiplicity of the root `t = -1` together with the cofactor:
    /// writes `self = (t + 1)^multiplicity * cofactor` with
    /// `cofactor(-1) != 0`.
    pub fn root_multiplicity_at_minus_1(
        &self,
    ) -> Result<(usize, IntPolynomial), PolynomialError> {
        if self.is_zero() {
            return Err(PolynomialError::ZeroPolynomial);
        }
        let mut multiplicity = 0;
        let mut current = self.clone();
        loop {
            let (quotient, remainder) = current.div_rem_t_plus_1();
            if !remainder.is_zero() {
                return Ok((multiplicity, current));
            }
            multiplicity += 1;
            current = quotient;
        }
    }

    /// Whether every stored coefficient is strictly positive (true for the
    /// zero polynomial vacuously).
    pub fn all_coefficients_positive(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }

    /// Whether the coefficient sequence rises (weakly) to a peak and then
    /// falls (weakly).
    pub fn is_unimodal(&self) -> bool {
        let mut falling = false;
        for w in self.coeffs.windows(2) {
            if w[1] < w[0] {
                falling = true;
            } else if w[1] > w[0] && falling {
                return false;
            }
        }
        true
    }

    /// Whether the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = magnitude.is_one();
            match (power, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{magnitude}t")?,
                (_, true) => write!(f, "t^{power}")?,
                (_, false) => write!(f, "{magnitude}t^{power}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut s = serializer.serialize_struct("IntPolynomial", 1)?;
        s.serialize_field("coefficients", &coeffs)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn construction_trims_leading_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert_eq!(poly(&[0, 0]), IntPolynomial::zero());
        assert_eq!(poly(&[]).degree(), None);
        assert_eq!(poly(&[5]).degree(), Some(0));
        assert_eq!(poly(&[0, 1]).degree(), Some(1));
    }

    #[test]
    fn evaluation_by_horner() {
        let p = poly(&[1, 13, 22, 13, 1]); // 1 + 13t + 22t^2 + 13t^3 + t^4
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(1));
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(50));
        assert_eq!(p.eval(&BigInt::from(-1)), BigInt::from(-2));
        assert_eq!(IntPolynomial::zero().eval(&BigInt::from(7)), BigInt::zero());
    }

    #[test]
    fn division_by_t_plus_1() {
        // (t + 1)^2 = 1 + 2t + t^2
        let (q, r) = poly(&[1, 2, 1]).div_rem_t_plus_1();
        assert_eq!(q, poly(&[1, 1]));
        assert!(r.is_zero());

        let (q, r) = poly(&[5, 1]).div_rem_t_plus_1();
        assert_eq!(q, poly(&[1]));
        assert_eq!(r, BigInt::from(4));

        // Reconstruction: p = q * (t + 1) + r for assorted polynomials.
        for coeffs in [
            vec![3, -2, 7, 1],
            vec![0, 0, 4],
            vec![-1],
            vec![2, 2],
        ] {
            let p = IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect());
            let (q, r) = p.div_rem_t_plus_1();
            let mut rebuilt: Vec<BigInt> = vec![BigInt::zero(); p.coefficients().len().max(1)];
            for (i, c) in q.coefficients().iter().enumerate() {
                rebuilt[i] += c;
                rebuilt[i + 1] += c;
            }
            rebuilt[0] += &r;
            assert_eq!(IntPolynomial::new(rebuilt), p);
        }
    }

    #[test]
    fn root_multiplicity_at_minus_one() {
        // t (t+1)^2 (t+3) = 3t + 7t^2 + 5t^3 + t^4
        let p = poly(&[0, 3, 7, 5, 1]);
        let (mult, cofactor) = p.root_multiplicity_at_minus_1().unwrap();
        assert_eq!(mult, 2);
        assert_eq!(cofactor, poly(&[0, 3, 1]));
        assert!(!cofactor.eval(&BigInt::from(-1)).is_zero());

        let (mult, cofactor) = poly(&[7]).root_multiplicity_at_minus_1().unwrap();
        assert_eq!(mult, 0);
        assert_eq!(cofactor, poly(&[7]));

        assert!(matches!(
            IntPolynomial::zero().root_multiplicity_at_minus_1(),
            Err(PolynomialError::ZeroPolynomial)
        ));
    }

    #[test]
    fn shifting_by_t_round_trips() {
        let p = poly(&[1, 13, 22]);
        assert_eq!(p.times_t().divided_by_t().unwrap(), p);
        assert_eq!(p.times_t().coefficient(0), BigInt::zero());
        assert_eq!(p.divided_by_t(), None);
        assert_eq!(poly(&[0, 4, 5]).divided_by_t().unwrap(), poly(&[4, 5]));
    }

    #[test]
    fn shape_predicates() {
        assert!(poly(&[1, 13, 22, 13, 1]).all_coefficients_positive());
        assert!(poly(&[1, 13, 22, 13, 1]).is_unimodal());
        assert!(poly(&[1, 13, 22, 13, 1]).is_palindromic());
        assert!(!poly(&[1, -2, 1]).all_coefficients_positive());
        assert!(!poly(&[2, 1, 2]).is_unimodal());
        assert!(poly(&[1, 1, 1]).is_unimodal());
        assert!(poly(&[1, 2, 2, 1]).is_palindromic());
        assert!(!poly(&[1, 2, 3]).is_palindromic());
        assert!(poly(&[]).is_unimodal());
        assert!(poly(&[]).is_palindromic());
    }

    #[test]
    fn display_formats() {
        assert_eq!(poly(&[1, 13, 22, 13, 1]).to_string(), "t^4 + 13t^3 + 22t^2 + 13t + 1");
        assert_eq!(poly(&[0, -3, 1]).to_string(), "t^2 - 3t");
        assert_eq!(poly(&[-5]).to_string(), "-5");
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[0, 1]).to_string(), "t");
    }

    #[test]
    fn json_uses_decimal_strings() {
        assert_eq!(
            serde_json::to_string(&poly(&[0, 1, 5])).unwrap(),
            r#"{"coefficients":["0","1","5"]}"#
        );
    }
}
