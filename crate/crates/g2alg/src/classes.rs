//! Closed forms for the equivariant classes of the orbit closures, and
//! the degeneracy-locus classes they induce for rank-two bundles.
//!
//! The orbit-closure classes are polynomials in the torus weights; each
//! factors into linear forms built from the root system. The suites
//! cross-check every one of them against the independent computation in
//! [`crate::multidegree`]. Substituting the negated Chern roots of a
//! rank-two bundle turns the classes indexed by rank conditions into the
//! universal degeneracy-locus formulas, expressed in both the Chern
//! roots and the Chern classes `c1, c2`.

use crate::exactalg::{to_chern, Basis, MultiPoly, Rational, VarSet, WeightVector};
use crate::orbits::OrbitLabel;

/// The closed-form equivariant class of an orbit closure, in the chosen
/// basis of the weight lattice.
pub fn orbit_class(label: OrbitLabel, basis: Basis) -> MultiPoly {
    let vars = basis.var_set();
    let factor = |x: i64, y: i64| WeightVector::alpha(x, y).to_basis(basis).as_poly();
    match label {
        OrbitLabel::O0 => MultiPoly::one(&vars),
        // -(3 a1 + 2 a2)
        OrbitLabel::O1 => factor(-3, -2),
        // 2 (3 a1 + 2 a2)^2
        OrbitLabel::O2 => factor(3, 2).mul(&factor(3, 2)).scale(&Rational::from_integer(2.into())),
        // -3 (a1 + a2)(2 a1 + a2)(3 a1 + 2 a2)
        OrbitLabel::O3 => factor(1, 1)
            .mul(&factor(2, 1))
            .mul(&factor(3, 2))
            .scale(&Rational::from_integer((-3).into())),
        // -(a2)(a1 + a2)(2 a1 + a2)(3 a1 + a2)(3 a1 + 2 a2)
        OrbitLabel::O5 => factor(0, 1)
            .mul(&factor(1, 1))
            .mul(&factor(2, 1))
            .mul(&factor(3, 1))
            .mul(&factor(3, 2))
            .neg(),
    }
}

/// The orbit whose closure is the rank-`r` degeneracy locus: the generic
/// rank 2 is the dense orbit, rank 1 the codimension-3 closure, rank 0
/// the origin.
pub fn orbit_for_rank(rank: usize) -> OrbitLabel {
    match rank {
        2 => OrbitLabel::O0,
        1 => OrbitLabel::O3,
        0 => OrbitLabel::O5,
        other => panic!("rank must be 0, 1, or 2, got {other}"),
    }
}

/// Variables for the Chern roots of a rank-two bundle.
pub fn root_vars() -> VarSet {
    VarSet::new(&["x1", "x2"])
}

/// Variables for its Chern classes.
pub fn chern_vars() -> VarSet {
    VarSet::new(&["c1", "c2"])
}

/// A degeneracy-locus class in both presentations.
#[derive(Debug, Clone)]
pub struct LocusClass {
    pub rank: usize,
    /// Polynomial in the Chern roots `x1, x2`.
    pub in_roots: MultiPoly,
    /// The same class rewritten in the Chern classes `c1, c2`.
    pub in_chern: MultiPoly,
}

/// The closed-form class of the rank-`r` locus:
///
/// * rank 2: `1`;
/// * rank 1: `3 x1 x2 (x1 + x2) = 3 c2 c1`;
/// * rank 0: `x1 x2 (x1 + x2)(2 x1 - x2)(2 x2 - x1) = c2 c1 (9 c2 - 2 c1^2)`.
pub fn locus_class(rank: usize) -> LocusClass {
    let xv = root_vars();
    let x1 = MultiPoly::var(&xv, "x1").expect("declared variable");
    let x2 = MultiPoly::var(&xv, "x2").expect("declared variable");
    let in_roots = match rank {
        2 => MultiPoly::one(&xv),
        1 => x1
            .mul(&x2)
            .mul(&x1.add(&x2))
            .scale(&Rational::from_integer(3.into())),
        0 => {
            let two = Rational::from_integer(2.into());
            let f1 = x1.scale(&two).sub(&x2);
            let f2 = x2.scale(&two).sub(&x1);
            x1.mul(&x2).mul(&x1.add(&x2)).mul(&f1).mul(&f2)
        }
        other => panic!("rank must be 0, 1, or 2, got {other}"),
    };
    let in_chern = to_chern(&in_roots).expect("locus classes are symmetric");
    LocusClass {
        rank,
        in_roots,
        in_chern,
    }
}

/// Derives the rank-`r` locus class from the orbit-closure class by the
/// substitution `t_i -> -x_i` (the equivariant class of the bundle's
/// fiberwise cone, restricted along the classifying map).
pub fn locus_from_orbit(rank: usize) -> MultiPoly {
    let class_t = orbit_class(orbit_for_rank(rank), Basis::T);
    let xv = root_vars();
    let minus = |name: &str| {
        MultiPoly::var(&xv, name)
            .expect("declared variable")
            .neg()
    };
    let images = [("t1", minus("x1")), ("t2", minus("x2"))];
    class_t
        .substitute(&images, &xv)
        .expect("t1, t2 both have images")
}

/// Evaluates the rank-`r` locus class at numeric Chern classes.
pub fn evaluate_locus(rank: usize, c1: &Rational, c2: &Rational) -> Rational {
    locus_class(rank)
        .in_chern
        .eval_rational(&[("c1", c1.clone()), ("c2", c2.clone())])
        .expect("c1, c2 both assigned")
}
