//! Torus weights for the rank-2 maximal torus, written in either of two
//! integral bases and tagged so they never mix silently.
//!
//! The two bases are the simple roots `alpha1, alpha2` (with `alpha2` the
//! long root) and the diagonal-torus characters `t1, t2`. The change of
//! basis is the exact integral pair
//!
//! ```text
//! alpha1 = t1 - t2          t1 = 2*alpha1 + alpha2
//! alpha2 = -t1 + 2*t2       t2 = alpha1 + alpha2
//! ```
//!
//! so conversion round-trips on the nose. As polynomials, alpha-basis
//! weights are written in the variables `a1, a2` and torus-basis weights
//! in `t1, t2`.

use std::fmt;

use super::poly::{MultiPoly, VarSet};
use super::{rat, ExactAlgError};

/// Which basis a weight's coordinates refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Simple-root coordinates `x*alpha1 + y*alpha2`.
    Alpha,
    /// Torus-character coordinates `x*t1 + y*t2`.
    T,
}

impl Basis {
    /// The variable names used when weights in this basis are rendered as
    /// linear polynomials.
    pub fn var_names(self) -> [&'static str; 2] {
        match self {
            Basis::Alpha => ["a1", "a2"],
            Basis::T => ["t1", "t2"],
        }
    }

    /// The polynomial ring for classes expressed in this basis.
    pub fn var_set(self) -> VarSet {
        let [x, y] = self.var_names();
        VarSet::new(&[x, y])
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Alpha => write!(f, "alpha"),
            Basis::T => write!(f, "t"),
        }
    }
}

/// An integral weight of the rank-2 torus, tagged with its basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightVector {
    basis: Basis,
    coords: [i64; 2],
}

impl WeightVector {
    pub fn new(basis: Basis, x: i64, y: i64) -> WeightVector {
        WeightVector { basis, coords: [x, y] }
    }

    /// Weight `x*alpha1 + y*alpha2`.
    pub fn alpha(x: i64, y: i64) -> WeightVector {
        Self::new(Basis::Alpha, x, y)
    }

    /// Weight `x*t1 + y*t2`.
    pub fn t(x: i64, y: i64) -> WeightVector {
        Self::new(Basis::T, x, y)
    }

    pub fn zero(basis: Basis) -> WeightVector {
        Self::new(basis, 0, 0)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> [i64; 2] {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0, 0]
    }

    /// Exact change of basis; converting to the current basis is the
    /// identity.
    pub fn to_basis(&self, basis: Basis) -> WeightVector {
        let [x, y] = self.coords;
        match (self.basis, basis) {
            (Basis::Alpha, Basis::Alpha) | (Basis::T, Basis::T) => *self,
            // x*alpha1 + y*alpha2 = x(t1 - t2) + y(-t1 + 2 t2)
            (Basis::Alpha, Basis::T) => WeightVector::t(x - y, -x + 2 * y),
            // x*t1 + y*t2 = x(2 alpha1 + alpha2) + y(alpha1 + alpha2)
            (Basis::T, Basis::Alpha) => WeightVector::alpha(2 * x + y, x + y),
        }
    }

    /// Sum of two weights in the same basis; mixing bases is refused.
    pub fn add(&self, other: &WeightVector) -> Result<WeightVector, ExactAlgError> {
        if self.basis != other.basis {
            return Err(ExactAlgError::BasisMismatch {
                expected: self.basis,
                found: other.basis,
            });
        }
        Ok(WeightVector::new(
            self.basis,
            self.coords[0] + other.coords[0],
            self.coords[1] + other.coords[1],
        ))
    }

    pub fn neg(&self) -> WeightVector {
        self.scaled(-1)
    }

    pub fn scaled(&self, k: i64) -> WeightVector {
        WeightVector::new(self.basis, self.coords[0] * k, self.coords[1] * k)
    }

    /// The weight as a linear polynomial in its basis variables
    /// (`a1, a2` or `t1, t2`).
    pub fn as_poly(&self) -> MultiPoly {
        let vars = self.basis.var_set();
        let mut p = MultiPoly::zero(&vars);
        for (i, &c) in self.coords.iter().enumerate() {
            if c != 0 {
                let mut exps = [0u32; 2];
                exps[i] = 1;
                p = p.add(&MultiPoly::term(&vars, rat(c), &exps));
            }
        }
        p
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}
