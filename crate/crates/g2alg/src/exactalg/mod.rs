//! Exact scalar, polynomial, and linear algebra over the rationals.
//!
//! The scalar type is [`Rational`] (arbitrary-precision, always in lowest
//! terms with positive denominator). Polynomials are sparse maps from
//! exponent vectors to nonzero coefficients over an explicit, ordered
//! [`VarSet`]; variable sets are never inferred, so `t1` in one ring can
//! never silently alias `t1` in another. Torus weights live in
//! [`WeightVector`], tagged by the basis they are written in (simple roots
//! or the diagonal torus basis); operations refuse to mix bases.

pub mod matrix;
pub mod poly;
pub mod weight;

pub use matrix::RationalMatrix;
pub use poly::{to_chern, weight_of, MultiPoly, VarSet};
pub use weight::{Basis, WeightVector};

use num::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational number, kept in lowest terms with a
/// positive denominator by construction.
pub type Rational = BigRational;

/// Errors raised by exact-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactAlgError {
    /// Text did not parse as a rational or polynomial.
    #[error("parse error at byte {pos}: {message} (input: `{input}`)")]
    Parse {
        input: String,
        pos: usize,
        message: String,
    },
    /// A variable name is not part of the relevant variable set.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    /// Two polynomials (or a polynomial and a substitution target) live
    /// over incompatible variable sets.
    #[error("variable set mismatch: {0}")]
    VarSetMismatch(String),
    /// A weight-basis operation mixed the two bases.
    #[error("weight basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: Basis, found: Basis },
    /// `to_chern` was given a polynomial that is not symmetric.
    #[error("polynomial is not symmetric: swapping variables sends `{original}` to `{swapped}`")]
    NotSymmetric { original: String, swapped: String },
    /// `weight_of` was given a polynomial whose monomials carry different
    /// weights; the two offending monomials are named.
    #[error("inhomogeneous polynomial: monomial `{first}` has weight {first_weight} but `{second}` has weight {second_weight}")]
    Inhomogeneous {
        first: String,
        first_weight: String,
        second: String,
        second_weight: String,
    },
    /// An evaluation or substitution left a variable without an image.
    #[error("missing assignment for variable `{0}`")]
    MissingAssignment(String),
    /// A variable set declaration was malformed (empty or duplicate names,
    /// or a name that is not an identifier).
    #[error("invalid variable set: {0}")]
    InvalidVarSet(String),
}

/// Parses a rational from its canonical text form, e.g. `-3/2`, `7`, `0`.
///
/// The unicode minus sign is accepted as a synonym for ASCII `-` so that
/// values copied out of typeset text round-trip.
pub fn parse_rational(s: &str) -> Result<Rational, ExactAlgError> {
    let normalized: String = s.trim().replace('\u{2212}', "-");
    let err = |message: String| ExactAlgError::Parse {
        input: s.to_string(),
        pos: 0,
        message,
    };
    if let Some((n, d)) = normalized.split_once('/') {
        let numer: num::BigInt = n
            .trim()
            .parse()
            .map_err(|e| err(format!("bad numerator: {e}")))?;
        let denom: num::BigInt = d
            .trim()
            .parse()
            .map_err(|e| err(format!("bad denominator: {e}")))?;
        if denom == num::BigInt::from(0) {
            return Err(err("zero denominator".into()));
        }
        Ok(Rational::new(numer, denom))
    } else {
        let numer: num::BigInt = normalized
            .parse::<num::BigInt>()
            .map_err(|e| err(e.to_string()))?;
        Ok(Rational::from_integer(numer))
    }
}

/// Canonical text form of a rational: `numerator/denominator` in lowest
/// terms, or just the numerator when the denominator is 1.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Shorthand for a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for a rational fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_reduced_with_positive_denominator() {
        let r = ratio(4, -6);
        assert_eq!(r.numer().to_string(), "-2");
        assert_eq!(r.denom().to_string(), "3");
        assert_eq!(rational_to_string(&r), "-2/3");
    }

    #[test]
    fn parse_rational_accepts_canonical_forms() {
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational(" 0 ").unwrap(), rat(0));
        // unicode minus normalizes
        assert_eq!(parse_rational("\u{2212}3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
    }

    #[test]
    fn parse_rational_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("3.5").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn arithmetic_stays_exact() {
        let third = ratio(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, rat(1));
    }
}
