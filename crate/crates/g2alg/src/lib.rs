//! Exact-arithmetic toolkit for an octonion algebra built from a
//! two-dimensional space `E` as `C = E + End(E) + E*`, together with the
//! structures that hang off it:
//!
//! - [`exactalg`]: arbitrary-precision rationals, sparse multivariate
//!   polynomials over explicit variable sets, torus weights in two bases,
//!   and exact rational linear algebra. Everything downstream is symbolic;
//!   no floating point appears anywhere.
//! - [`octonion`]: the eight-dimensional algebra itself — multiplication,
//!   norm, the invariant bilinear form, conjugation, and the torus action.
//! - [`triality`]: the order-3 symmetry of the tangent space at the
//!   identity coset, its fixed locus, and the isotropic frames attached to
//!   triality-symmetric maps.
//! - [`weyl`]: the dihedral Weyl group of type G2 inside S7, rank
//!   functions, and subword-sum restrictions of Schubert classes at torus
//!   fixed points.
//! - [`orbits`]: the five-orbit classification of triality-symmetric maps
//!   via binary cubics, with two independent classifiers.
//! - [`multidegree`]: a small Groebner engine (Buchberger) plus multidegrees
//!   of weight-graded ideals — the oracle that re-derives every class
//!   formula from first principles.
//! - [`classes`]: the closed-form equivariant classes of the orbit closures
//!   and the degeneracy-locus polynomials they specialize to.
//! - [`verify`]: the machine-checkable identity suites behind the CLI's
//!   `verify` subcommand and the acceptance tests.
//!
//! Every identity is checked two ways: once against the hard-coded closed
//! forms and once against an independent computational route (symbolic
//! expansion, Groebner-based multidegrees, or exhaustive enumeration).

pub mod classes;
pub mod exactalg;
pub mod multidegree;
pub mod octonion;
pub mod orbits;
pub mod triality;
pub mod verify;
pub mod weyl;

pub use exactalg::{Basis, ExactAlgError, MultiPoly, Rational, RationalMatrix, VarSet, WeightVector};
pub use octonion::{OctonionElement, Scalar};
