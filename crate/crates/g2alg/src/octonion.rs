//! The eight-dimensional octonion algebra `C = E + End(E) + E*` built
//! from a two-dimensional space `E`, with its norm, invariant bilinear
//! form, conjugation, and two-parameter torus action.
//!
//! Fix a basis `v1, v2` of `E`. The algebra basis is
//!
//! ```text
//! v1, v2            in E
//! v3 = v2* ⊗ v1     v4 = v1* ⊗ v1     v5 = v2* ⊗ v2     v6 = v1* ⊗ v2
//! v7 = v2*          v8 = v1*
//! ```
//!
//! An element `u = x + xi + f` has coordinates `(a1..a8)`: `x = a1 v1 +
//! a2 v2`, endomorphism matrix `[[a4, a3], [a6, a5]]` (columns are the
//! images of `v1, v2`), and functional `f` with `f(v1) = a8, f(v2) = a7`.
//! The unit is `e = v4 + v5`. Multiplication of `(x + xi + f)` and
//! `(y + eta + g)` is
//!
//! ```text
//! (eta x + conj(xi) y)  +  (conj(g ⊗ x) + xi eta + f ⊗ y)  +  (g xi + f conj(eta))
//! ```
//!
//! where `conj(xi) = tr(xi) e - xi`. The norm is `N(u) = det(xi) - f(x)`
//! and the bilinear form is `<u, u'> = tr(xi) tr(xi') - tr(xi xi') -
//! f(x') - f'(x)`; both are reproduced-by-construction in the tests
//! against the Gram table and the multiplicativity identity.
//!
//! Everything is generic over a [`Scalar`] ring so the same code runs on
//! exact rationals and on polynomials (for fully symbolic identities).

use std::fmt;

use crate::exactalg::{MultiPoly, Rational, VarSet, WeightVector};
use num::{One, Zero};
use thiserror::Error;

/// Errors raised by octonion-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OctonionError {
    /// The torus action needs both parameters nonzero (their inverses
    /// appear among the characters).
    #[error("torus parameter {0} must be nonzero")]
    ZeroTorusParameter(&'static str),
}

/// A commutative ring of exact scalars: implemented by [`Rational`] and
/// by [`MultiPoly`] (symbolic coordinates).
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Embeds a rational constant.
    fn from_rational(r: &Rational) -> Self;
    /// Canonical text form, used at every serialization boundary.
    fn canonical_string(&self) -> String {
        format!("{self}")
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero(&VarSet::empty())
    }
    fn one() -> Self {
        MultiPoly::one(&VarSet::empty())
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(&VarSet::empty(), r.clone())
    }
}

/// The multiplicative character `z1^n1 * z2^n2` by which the torus scales
/// one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusCharacter {
    pub z1_exp: i64,
    pub z2_exp: i64,
}

impl TorusCharacter {
    /// The additive weight `n1*t1 + n2*t2` of this character.
    pub fn weight(&self) -> WeightVector {
        WeightVector::t(self.z1_exp, self.z2_exp)
    }

    /// Evaluates the character at nonzero rationals.
    pub fn eval(&self, z1: &Rational, z2: &Rational) -> Result<Rational, OctonionError> {
        fn ipow(z: &Rational, n: i64, name: &'static str) -> Result<Rational, OctonionError> {
            if n != 0 && Zero::is_zero(z) {
                return Err(OctonionError::ZeroTorusParameter(name));
            }
            let mut out = <Rational as One>::one();
            let base = if n >= 0 { z.clone() } else { z.recip() };
            for _ in 0..n.unsigned_abs() {
                out *= &base;
            }
            Ok(out)
        }
        Ok(ipow(z1, self.z1_exp, "z1")? * ipow(z2, self.z2_exp, "z2")?)
    }
}

/// The torus acts on the basis `v1..v8` by the diagonal characters
/// `(z1, z2, z1/z2, 1, 1, z2/z1, 1/z2, 1/z1)`, i.e. with weights
/// `(t1, t2, t1 - t2, 0, 0, -t1 + t2, -t2, -t1)`.
pub fn coordinate_character(i: usize) -> TorusCharacter {
    const CHARS: [(i64, i64); 8] = [
        (1, 0),
        (0, 1),
        (1, -1),
        (0, 0),
        (0, 0),
        (-1, 1),
        (0, -1),
        (-1, 0),
    ];
    assert!((1..=8).contains(&i), "basis index out of range: {i}");
    let (z1_exp, z2_exp) = CHARS[i - 1];
    TorusCharacter { z1_exp, z2_exp }
}

/// An element of the octonion algebra, as coordinates in the basis
/// `v1..v8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctonionElement<S: Scalar> {
    pub coords: [S; 8],
}

impl<S: Scalar> OctonionElement<S> {
    pub fn zero() -> Self {
        OctonionElement {
            coords: std::array::from_fn(|_| S::zero()),
        }
    }

    /// The unit element `e = v4 + v5` (the identity endomorphism).
    pub fn identity() -> Self {
        let mut e = Self::zero();
        e.coords[3] = S::one();
        e.coords[4] = S::one();
        e
    }

    /// The basis element `v_i`, `i` in `1..=8`.
    pub fn basis_element(i: usize) -> Self {
        assert!((1..=8).contains(&i), "basis index out of range: {i}");
        let mut v = Self::zero();
        v.coords[i - 1] = S::one();
        v
    }

    pub fn from_coords(coords: [S; 8]) -> Self {
        OctonionElement { coords }
    }

    fn a(&self, i: usize) -> &S {
        &self.coords[i - 1]
    }

    pub fn add(&self, other: &Self) -> Self {
        OctonionElement {
            coords: std::array::from_fn(|i| self.coords[i].add(&other.coords[i])),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        OctonionElement {
            coords: std::array::from_fn(|i| self.coords[i].sub(&other.coords[i])),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        OctonionElement {
            coords: std::array::from_fn(|i| self.coords[i].mul(k)),
        }
    }

    /// The octonion product, assembled part by part:
    /// E-part `eta x + conj(xi) y`, End-part `conj(g ⊗ x) + xi eta +
    /// f ⊗ y`, E*-part `g xi + f conj(eta)`.
    pub fn multiply(&self, other: &Self) -> Self {
        let (a, b) = (&self.coords, &other.coords);
        let (a1, a2, a3, a4, a5, a6, a7, a8) =
            (&a[0], &a[1], &a[2], &a[3], &a[4], &a[5], &a[6], &a[7]);
        let (b1, b2, b3, b4, b5, b6, b7, b8) =
            (&b[0], &b[1], &b[2], &b[3], &b[4], &b[5], &b[6], &b[7]);
        let sum = |xs: &[S]| -> S {
            xs.iter().fold(S::zero(), |acc, x| acc.add(x))
        };
        // E-part: eta x + conj(xi) y
        let c1 = sum(&[b4.mul(a1), b3.mul(a2), a5.mul(b1), a3.mul(b2).neg()]);
        let c2 = sum(&[b6.mul(a1), b5.mul(a2), a6.mul(b1).neg(), a4.mul(b2)]);
        // End-part: conj(g ⊗ x) + xi eta + f ⊗ y, as the matrix
        // [[m11, m12], [m21, m22]] = [[c4, c3], [c6, c5]]
        let m11 = sum(&[b7.mul(a2), a4.mul(b4), a3.mul(b6), a8.mul(b1)]);
        let m12 = sum(&[b7.mul(a1).neg(), a4.mul(b3), a3.mul(b5), a7.mul(b1)]);
        let m21 = sum(&[b8.mul(a2).neg(), a6.mul(b4), a5.mul(b6), a8.mul(b2)]);
        let m22 = sum(&[b8.mul(a1), a6.mul(b3), a5.mul(b5), a7.mul(b2)]);
        // E*-part: g xi + f conj(eta), as the functional h with
        // c8 = h(v1), c7 = h(v2)
        let c8 = sum(&[a4.mul(b8), a6.mul(b7), b5.mul(a8), b6.mul(a7).neg()]);
        let c7 = sum(&[a3.mul(b8), a5.mul(b7), b3.mul(a8).neg(), b4.mul(a7)]);
        OctonionElement {
            coords: [c1, c2, m12, m11, m22, m21, c7, c8],
        }
    }

    /// The norm `N(u) = det(xi) - f(x) = a4 a5 - a3 a6 - a7 a2 - a8 a1`.
    pub fn norm(&self) -> S {
        let det = self.a(4).mul(self.a(5)).sub(&self.a(3).mul(self.a(6)));
        let f_of_x = self.a(7).mul(self.a(2)).add(&self.a(8).mul(self.a(1)));
        det.sub(&f_of_x)
    }

    /// The invariant bilinear form
    /// `<u, u'> = tr(xi) tr(xi') - tr(xi xi') - f(x') - f'(x)`.
    pub fn bilinear(&self, other: &Self) -> S {
        let tr_self = self.a(4).add(self.a(5));
        let tr_other = other.a(4).add(other.a(5));
        // tr(xi xi') for matrices [[a4,a3],[a6,a5]] and [[b4,b3],[b6,b5]]
        let tr_prod = self
            .a(4)
            .mul(other.a(4))
            .add(&self.a(3).mul(other.a(6)))
            .add(&self.a(6).mul(other.a(3)))
            .add(&self.a(5).mul(other.a(5)));
        let f_of_y = self.a(7).mul(other.a(2)).add(&self.a(8).mul(other.a(1)));
        let g_of_x = other.a(7).mul(self.a(2)).add(&other.a(8).mul(self.a(1)));
        tr_self
            .mul(&tr_other)
            .sub(&tr_prod)
            .sub(&f_of_y)
            .sub(&g_of_x)
    }

    /// The trace of the endomorphism part, `T(u) = a4 + a5`.
    pub fn trace(&self) -> S {
        self.a(4).add(self.a(5))
    }

    /// Octonion conjugation `u -> T(u) e - u`: an involutive
    /// anti-automorphism with `u * conj(u) = conj(u) * u = N(u) e`.
    pub fn conjugate(&self) -> Self {
        Self::identity().scale(&self.trace()).sub(self)
    }

    /// Conjugation `xi -> tr(xi) e - xi` on the End-part, leaving the E-
    /// and E*-parts untouched: `(a3, a4, a5, a6) -> (-a3, a5, a4, -a6)`.
    pub fn conjugate_end(&self) -> Self {
        let mut out = self.clone();
        out.coords[2] = self.coords[2].neg();
        out.coords[3] = self.coords[4].clone();
        out.coords[4] = self.coords[3].clone();
        out.coords[5] = self.coords[5].neg();
        out
    }

    /// Whether the element lies in the seven-dimensional subspace `V`
    /// of trace-zero endomorphism part (`a4 + a5 = 0`).
    pub fn in_v(&self) -> bool {
        self.a(4).add(self.a(5)).is_zero()
    }

    /// Scales each coordinate by its torus character evaluated at
    /// `(z1, z2)`; both parameters must be nonzero.
    pub fn torus_act(&self, z1: &Rational, z2: &Rational) -> Result<Self, OctonionError> {
        let mut coords: Vec<S> = Vec::with_capacity(8);
        for i in 1..=8 {
            let factor = coordinate_character(i).eval(z1, z2)?;
            coords.push(self.coords[i - 1].mul(&S::from_rational(&factor)));
        }
        Ok(OctonionElement {
            coords: coords.try_into().expect("eight coordinates"),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Canonical serialization: the eight coordinate strings in basis
    /// order.
    pub fn to_canonical_strings(&self) -> [String; 8] {
        std::array::from_fn(|i| self.coords[i].canonical_string())
    }
}

/// Whether the pair spans a two-dimensional subspace of `V` on which the
/// multiplication vanishes identically: both elements lie in `V` and all
/// four pairwise products (including squares) are zero.
pub fn is_g2_isotropic<S: Scalar>(u: &OctonionElement<S>, v: &OctonionElement<S>) -> bool {
    u.in_v()
        && v.in_v()
        && u.multiply(u).is_zero()
        && u.multiply(v).is_zero()
        && v.multiply(u).is_zero()
        && v.multiply(v).is_zero()
}

/// A fully symbolic element whose coordinates are the variables
/// `{prefix}1 .. {prefix}8` of the given ring.
pub fn symbolic_element(vars: &VarSet, prefix: &str) -> OctonionElement<MultiPoly> {
    OctonionElement {
        coords: std::array::from_fn(|i| {
            MultiPoly::var(vars, &format!("{prefix}{}", i + 1))
                .expect("symbolic coordinate variable")
        }),
    }
}

/// The ring of two generic elements `u1..u8, v1..v8`, for two-variable
/// symbolic identities.
pub fn pair_ring() -> VarSet {
    let names: Vec<String> = (1..=8)
        .map(|i| format!("u{i}"))
        .chain((1..=8).map(|i| format!("v{i}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    VarSet::new(&refs)
}

/// The expected Gram matrix of the basis: `<v_p, v_{9-p}> = -1` for
/// `p` outside `{4, 5}`, `<v4, v5> = <v5, v4> = 1`, all other pairs 0.
pub fn expected_gram_entry(p: usize, q: usize) -> i64 {
    if (p, q) == (4, 5) || (p, q) == (5, 4) {
        1
    } else if q == 9 - p && p != 4 && p != 5 {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    type Oct = OctonionElement<Rational>;

    fn from_i64(coords: [i64; 8]) -> Oct {
        OctonionElement::from_coords(coords.map(rat))
    }

    #[test]
    fn unit_element_is_two_sided_identity_symbolically() {
        let ring = pair_ring();
        let u = symbolic_element(&ring, "u");
        let e = OctonionElement::<MultiPoly>::identity();
        assert_eq!(e.multiply(&u), u);
        assert_eq!(u.multiply(&e), u);
    }

    #[test]
    fn basis_products_match_known_values() {
        // v1 * v8 = v5 (the functional v1* picks out the v1-coefficient)
        let v1 = Oct::basis_element(1);
        let v8 = Oct::basis_element(8);
        assert_eq!(v1.multiply(&v8), Oct::basis_element(5));
        // v1 * v2 = 0: E annihilates E
        let v2 = Oct::basis_element(2);
        assert!(v1.multiply(&v2).is_zero());
    }

    #[test]
    fn norm_is_multiplicative_symbolically() {
        let ring = pair_ring();
        let u = symbolic_element(&ring, "u");
        let v = symbolic_element(&ring, "v");
        let lhs = u.multiply(&v).norm();
        let rhs = u.norm().mul(&v.norm());
        assert!(lhs.sub(&rhs).is_zero(), "N(uv) != N(u)N(v)");
    }

    #[test]
    fn gram_table_matches_the_pairing_rules() {
        for p in 1..=8 {
            for q in 1..=8 {
                let got = Oct::basis_element(p).bilinear(&Oct::basis_element(q));
                assert_eq!(
                    got,
                    rat(expected_gram_entry(p, q)),
                    "<v{p}, v{q}> mismatch"
                );
            }
        }
    }

    #[test]
    fn bilinear_polarizes_the_norm_symbolically() {
        let ring = pair_ring();
        let u = symbolic_element(&ring, "u");
        let two_norm = u.norm().scale(&rat(2));
        assert_eq!(u.bilinear(&u), two_norm);
    }

    #[test]
    fn torus_action_is_an_algebra_automorphism() {
        let ring = pair_ring();
        let u = symbolic_element(&ring, "u");
        let v = symbolic_element(&ring, "v");
        for (z1, z2) in [
            (rat(2), rat(3)),
            (ratio(1, 2), rat(-1)),
            (rat(-3), ratio(2, 5)),
        ] {
            let lhs = u
                .torus_act(&z1, &z2)
                .unwrap()
                .multiply(&v.torus_act(&z1, &z2).unwrap());
            let rhs = u.multiply(&v).torus_act(&z1, &z2).unwrap();
            assert_eq!(lhs, rhs, "torus point ({z1}, {z2})");
        }
    }

    #[test]
    fn torus_action_rejects_zero_parameters() {
        let u = Oct::basis_element(1);
        assert!(matches!(
            u.torus_act(&rat(0), &rat(1)),
            Err(OctonionError::ZeroTorusParameter("z1"))
        ));
        assert!(matches!(
            u.torus_act(&rat(1), &rat(0)),
            Err(OctonionError::ZeroTorusParameter("z2"))
        ));
    }

    #[test]
    fn coordinate_characters_have_the_stated_weights() {
        let expected: [(i64, i64); 8] = [
            (1, 0),
            (0, 1),
            (1, -1),
            (0, 0),
            (0, 0),
            (-1, 1),
            (0, -1),
            (-1, 0),
        ];
        for i in 1..=8 {
            assert_eq!(
                coordinate_character(i).weight(),
                WeightVector::t(expected[i - 1].0, expected[i - 1].1)
            );
        }
    }

    #[test]
    fn conjugation_is_an_involution_fixing_e() {
        let u = from_i64([0, 0, 3, -1, 4, 2, 0, 0]);
        assert_eq!(u.conjugate_end().conjugate_end(), u);
        assert_eq!(
            u.conjugate_end(),
            from_i64([0, 0, -3, 4, -1, -2, 0, 0])
        );
        let e = Oct::identity();
        assert_eq!(e.conjugate_end(), e);
    }

    #[test]
    fn full_conjugation_satisfies_the_rank_equation() {
        let ring = pair_ring();
        let u = symbolic_element(&ring, "u");
        let v = symbolic_element(&ring, "v");
        // involution and anti-automorphism
        assert_eq!(u.conjugate().conjugate(), u);
        assert_eq!(
            u.multiply(&v).conjugate(),
            v.conjugate().multiply(&u.conjugate())
        );
        // u * conj(u) = N(u) e, equivalently u^2 - T(u) u + N(u) e = 0
        let e = OctonionElement::<MultiPoly>::identity();
        assert_eq!(u.multiply(&u.conjugate()), e.scale(&u.norm()));
        assert_eq!(
            u.multiply(&u).add(&e.scale(&u.norm())),
            u.scale(&u.trace())
        );
    }

    #[test]
    fn multiplication_is_not_associative() {
        let mut witness = None;
        'outer: for i in 1..=8 {
            for j in 1..=8 {
                for k in 1..=8 {
                    let (u, v, w) = (
                        Oct::basis_element(i),
                        Oct::basis_element(j),
                        Oct::basis_element(k),
                    );
                    if u.multiply(&v).multiply(&w) != u.multiply(&v.multiply(&w)) {
                        witness = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        assert!(witness.is_some(), "no non-associative basis triple found");
    }

    #[test]
    fn norm_of_unit_and_in_v_check() {
        let e = Oct::identity();
        assert_eq!(e.norm(), rat(1));
        assert!(!e.in_v());
        let v3 = Oct::basis_element(3);
        assert!(v3.in_v());
    }
}
