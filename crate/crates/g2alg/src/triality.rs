//! The S3 triality action on tangent vectors and the isotropic frames
//! attached to triality-symmetric maps.
//!
//! A tangent vector is a map `E -> ker(f0)/E` recorded by nine
//! coordinates `(b1, a1, d1, c1, b2, a2, d2, c2, z)`, realized as the
//! 2x6 matrix
//!
//! ```text
//! A = [ b1  a1  d1  c1   z   0 ]
//!     [ b2  a2  d2  c2   0  -z ]
//! ```
//!
//! The two generators of S3 act coordinate-wise:
//!
//! ```text
//! tau:   rows become (-d2, -c2, -a1, c1, z, 0) and (b2, b1, -a2, d1, 0, -z)
//! sigma: rows become ( a2,  a1,  c2, c1, z, 0) and (b2, b1,  d2, d1, 0, -z)
//! ```
//!
//! satisfying `tau^3 = sigma^2 = id` and `sigma tau sigma = tau^2`. The
//! fixed locus of `tau` (equivalently of all of S3) is the image of the
//! five-parameter family of triality-symmetric maps
//!
//! ```text
//! A = [ a  -d   d  c   z   0 ]
//!     [ b   a  -a  d   0  -z ]
//! ```
//!
//! Such a map determines a two-row frame of octonion elements (its graph,
//! corrected by explicit E*-components) whose pairwise products vanish
//! exactly on the locus `a^2 + bd = ac + d^2 = ad - bc = 0`.

use crate::exactalg::{rat, Rational, RationalMatrix};
use crate::octonion::{OctonionElement, Scalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrialityError {
    /// A tangent vector was expected to be triality-symmetric but is not.
    #[error("tangent vector is not triality-symmetric: {0}")]
    NotSymmetric(String),
}

/// The nine coordinates of a tangent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentVector<S: Scalar> {
    pub b1: S,
    pub a1: S,
    pub d1: S,
    pub c1: S,
    pub b2: S,
    pub a2: S,
    pub d2: S,
    pub c2: S,
    pub z: S,
}

/// A generator of the symmetric group S3 acting on tangent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S3Generator {
    /// The order-3 generator.
    Tau,
    /// The order-2 generator.
    Sigma,
}

impl<S: Scalar> TangentVector<S> {
    pub fn zero() -> Self {
        TangentVector {
            b1: S::zero(),
            a1: S::zero(),
            d1: S::zero(),
            c1: S::zero(),
            b2: S::zero(),
            a2: S::zero(),
            d2: S::zero(),
            c2: S::zero(),
            z: S::zero(),
        }
    }

    /// The 2x6 matrix realization (rows of length six).
    pub fn matrix(&self) -> [[S; 6]; 2] {
        [
            [
                self.b1.clone(),
                self.a1.clone(),
                self.d1.clone(),
                self.c1.clone(),
                self.z.clone(),
                S::zero(),
            ],
            [
                self.b2.clone(),
                self.a2.clone(),
                self.d2.clone(),
                self.c2.clone(),
                S::zero(),
                self.z.neg(),
            ],
        ]
    }

    /// Coordinates in a fixed order, for linear-algebra work.
    pub fn coords(&self) -> [S; 9] {
        [
            self.b1.clone(),
            self.a1.clone(),
            self.d1.clone(),
            self.c1.clone(),
            self.b2.clone(),
            self.a2.clone(),
            self.d2.clone(),
            self.c2.clone(),
            self.z.clone(),
        ]
    }

    pub fn from_coords(c: [S; 9]) -> Self {
        let [b1, a1, d1, c1, b2, a2, d2, c2, z] = c;
        TangentVector {
            b1,
            a1,
            d1,
            c1,
            b2,
            a2,
            d2,
            c2,
            z,
        }
    }
}

impl TangentVector<Rational> {
    /// The rank of the 2x6 matrix realization, computed exactly.
    pub fn morphism_rank(&self) -> usize {
        let rows = self
            .matrix()
            .into_iter()
            .map(|row| row.to_vec())
            .collect::<Vec<_>>();
        RationalMatrix::from_rows(rows).rank()
    }
}

/// The order-3 triality generator.
pub fn tau<S: Scalar>(v: &TangentVector<S>) -> TangentVector<S> {
    TangentVector {
        b1: v.d2.neg(),
        a1: v.c2.neg(),
        d1: v.a1.neg(),
        c1: v.c1.clone(),
        b2: v.b2.clone(),
        a2: v.b1.clone(),
        d2: v.a2.neg(),
        c2: v.d1.clone(),
        z: v.z.clone(),
    }
}

/// The order-2 triality generator.
pub fn sigma<S: Scalar>(v: &TangentVector<S>) -> TangentVector<S> {
    TangentVector {
        b1: v.a2.clone(),
        a1: v.a1.clone(),
        d1: v.c2.clone(),
        c1: v.c1.clone(),
        b2: v.b2.clone(),
        a2: v.b1.clone(),
        d2: v.d2.clone(),
        c2: v.d1.clone(),
        z: v.z.clone(),
    }
}

/// Applies a word in the generators, rightmost letter first (so the word
/// `[Sigma, Tau]` means "first tau, then sigma").
pub fn s3_act<S: Scalar>(word: &[S3Generator], v: &TangentVector<S>) -> TangentVector<S> {
    let mut out = v.clone();
    for g in word.iter().rev() {
        out = match g {
            S3Generator::Tau => tau(&out),
            S3Generator::Sigma => sigma(&out),
        };
    }
    out
}

/// A triality-symmetric map: the five parameters cutting out the fixed
/// locus of the S3 action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialitySymmetricMap<S: Scalar> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
    pub z: S,
}

impl<S: Scalar> TrialitySymmetricMap<S> {
    pub fn zero() -> Self {
        TrialitySymmetricMap {
            a: S::zero(),
            b: S::zero(),
            c: S::zero(),
            d: S::zero(),
            z: S::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
            && self.b.is_zero()
            && self.c.is_zero()
            && self.d.is_zero()
            && self.z.is_zero()
    }
}

/// Embeds the five parameters as the triality-symmetric tangent vector
/// with matrix rows `(a, -d, d, c, z, 0)` and `(b, a, -a, d, 0, -z)`.
pub fn embed<S: Scalar>(m: &TrialitySymmetricMap<S>) -> TangentVector<S> {
    TangentVector {
        b1: m.a.clone(),
        a1: m.d.neg(),
        d1: m.d.clone(),
        c1: m.c.clone(),
        b2: m.b.clone(),
        a2: m.a.clone(),
        d2: m.a.neg(),
        c2: m.d.clone(),
        z: m.z.clone(),
    }
}

/// Recognizes a triality-symmetric tangent vector and recovers its five
/// parameters `(a, b, c, d, z) = (a2, b2, c1, d1, z)`. The defining
/// pattern is `b1 = a2`, `a1 = -d1`, `d2 = -a2`, `c2 = d1`.
pub fn is_triality_symmetric<S: Scalar>(
    v: &TangentVector<S>,
) -> Option<TrialitySymmetricMap<S>> {
    let pattern = v.b1 == v.a2 && v.a1 == v.d1.neg() && v.d2 == v.a2.neg() && v.c2 == v.d1;
    if !pattern {
        return None;
    }
    Some(TrialitySymmetricMap {
        a: v.a2.clone(),
        b: v.b2.clone(),
        c: v.c1.clone(),
        d: v.d1.clone(),
        z: v.z.clone(),
    })
}

/// The two-row octonion frame attached to a triality-symmetric map: the
/// graph of the map inside `V`, with E*-components completed by
///
/// ```text
/// X = -ac - d^2    Y = z + ad - bc    Z = -a^2 - bd
/// ```
///
/// Row 1 is `v1 + (a, -d, d, c)-endomorphism + z v7 - X v8` and row 2 is
/// `v2 + (b, a, -a, d)-endomorphism - Z v7 - Y v8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicFrame<S: Scalar> {
    pub rows: [OctonionElement<S>; 2],
    /// The completed component `X = -ac - d^2`.
    pub x: S,
    /// The completed component `Y = z + ad - bc`.
    pub y: S,
    /// The completed component `Z = -a^2 - bd`.
    pub z_comp: S,
    /// The map's own `z` coordinate, kept for the graph test.
    pub map_z: S,
}

/// Builds the frame of a triality-symmetric map.
pub fn graph_frame<S: Scalar>(m: &TrialitySymmetricMap<S>) -> IsotropicFrame<S> {
    let (a, b, c, d, z) = (&m.a, &m.b, &m.c, &m.d, &m.z);
    let x_comp = a.mul(c).add(&d.mul(d)).neg(); // X = -ac - d^2
    let y_comp = z.add(&a.mul(d)).sub(&b.mul(c)); // Y = z + ad - bc
    let z_comp = a.mul(a).add(&b.mul(d)).neg(); // Z = -a^2 - bd
    let row1 = OctonionElement::from_coords([
        S::one(),
        S::zero(),
        a.clone(),
        d.neg(),
        d.clone(),
        c.clone(),
        z.clone(),
        x_comp.neg(),
    ]);
    let row2 = OctonionElement::from_coords([
        S::zero(),
        S::one(),
        b.clone(),
        a.clone(),
        a.neg(),
        d.clone(),
        z_comp.neg(),
        y_comp.neg(),
    ]);
    IsotropicFrame {
        rows: [row1, row2],
        x: x_comp,
        y: y_comp,
        z_comp,
        map_z: z.clone(),
    }
}

impl<S: Scalar> IsotropicFrame<S> {
    /// Both rows lie in the trace-zero subspace `V` by construction;
    /// this re-checks it.
    pub fn rows_in_v(&self) -> bool {
        self.rows.iter().all(|r| r.in_v())
    }

    /// Whether the row span is the graph of the underlying map:
    /// `X = Z = 0` and `Y = z`.
    pub fn is_graph(&self) -> bool {
        self.x.is_zero() && self.z_comp.is_zero() && self.y == self.map_z
    }

    /// Whether the row span is a two-dimensional subspace of `V` killed
    /// by the multiplication (all four pairwise products vanish).
    pub fn is_g2_isotropic(&self) -> bool {
        crate::octonion::is_g2_isotropic(&self.rows[0], &self.rows[1])
    }

    /// The coordinate polynomials of all four pairwise products, in row
    /// order (r1 r1, r1 r2, r2 r1, r2 r2); the ideal these generate cuts
    /// out the isotropy locus.
    pub fn product_entries(&self) -> Vec<S> {
        let (r1, r2) = (&self.rows[0], &self.rows[1]);
        [r1.multiply(r1), r1.multiply(r2), r2.multiply(r1), r2.multiply(r2)]
            .into_iter()
            .flat_map(|p| p.coords.into_iter())
            .collect()
    }
}

/// The linear action of a word in the S3 generators as an exact 9x9
/// matrix on the coordinate order of [`TangentVector::coords`].
pub fn action_matrix(word: &[S3Generator]) -> RationalMatrix {
    let mut cols: Vec<[Rational; 9]> = Vec::with_capacity(9);
    for i in 0..9 {
        let mut unit: [Rational; 9] = std::array::from_fn(|_| rat(0));
        unit[i] = rat(1);
        let image = s3_act(word, &TangentVector::from_coords(unit));
        cols.push(image.coords());
    }
    // columns are images of basis vectors; transpose into a matrix
    let rows: Vec<Vec<Rational>> = (0..9)
        .map(|r| (0..9).map(|c| cols[c][r].clone()).collect())
        .collect();
    RationalMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, MultiPoly, VarSet};

    fn symbolic_tangent() -> (VarSet, TangentVector<MultiPoly>) {
        let vars = VarSet::new(&["b1", "a1", "d1", "c1", "b2", "a2", "d2", "c2", "z"]);
        let v = |n: &str| MultiPoly::var(&vars, n).unwrap();
        let t = TangentVector {
            b1: v("b1"),
            a1: v("a1"),
            d1: v("d1"),
            c1: v("c1"),
            b2: v("b2"),
            a2: v("a2"),
            d2: v("d2"),
            c2: v("c2"),
            z: v("z"),
        };
        (vars, t)
    }

    fn symbolic_map() -> (VarSet, TrialitySymmetricMap<MultiPoly>) {
        let vars = VarSet::new(&["a", "b", "c", "d", "z"]);
        let v = |n: &str| MultiPoly::var(&vars, n).unwrap();
        let m = TrialitySymmetricMap {
            a: v("a"),
            b: v("b"),
            c: v("c"),
            d: v("d"),
            z: v("z"),
        };
        (vars, m)
    }

    #[test]
    fn s3_relations_hold_symbolically() {
        use S3Generator::{Sigma, Tau};
        let (_, t) = symbolic_tangent();
        assert_eq!(s3_act(&[Tau, Tau, Tau], &t), t, "tau^3 != id");
        assert_eq!(s3_act(&[Sigma, Sigma], &t), t, "sigma^2 != id");
        assert_eq!(
            s3_act(&[Sigma, Tau, Sigma], &t),
            s3_act(&[Tau, Tau], &t),
            "sigma tau sigma != tau^2"
        );
    }

    #[test]
    fn embedded_maps_are_fixed_by_the_whole_action() {
        use S3Generator::{Sigma, Tau};
        let (_, m) = symbolic_map();
        let v = embed(&m);
        assert_eq!(tau(&v), v);
        assert_eq!(sigma(&v), v);
        assert_eq!(s3_act(&[Tau, Sigma, Tau], &v), v);
    }

    #[test]
    fn fixed_space_of_tau_is_exactly_the_embedding_image() {
        // kernel of (M_tau - I) as a 9x5-dimensional space, compared to
        // the column span of the embedding matrix
        let m_tau = action_matrix(&[S3Generator::Tau]);
        let id = RationalMatrix::identity(9);
        let mut diff_rows = Vec::new();
        for r in 0..9 {
            diff_rows.push(
                (0..9)
                    .map(|c| m_tau.get(r, c) - id.get(r, c))
                    .collect::<Vec<_>>(),
            );
        }
        let diff = RationalMatrix::from_rows(diff_rows);
        let kernel = diff.nullspace();
        assert_eq!(kernel.len(), 5, "Fix(tau) must be five-dimensional");
        let kernel_mat = {
            // columns = kernel basis vectors
            let rows: Vec<Vec<Rational>> = (0..9)
                .map(|r| kernel.iter().map(|v| v[r].clone()).collect())
                .collect();
            RationalMatrix::from_rows(rows)
        };
        // embedding matrix: images of the five unit parameter vectors
        let mut embed_cols = Vec::new();
        for i in 0..5 {
            let mut params = [rat(0), rat(0), rat(0), rat(0), rat(0)];
            params[i] = rat(1);
            let [a, b, c, d, z] = params;
            let v = embed(&TrialitySymmetricMap { a, b, c, d, z });
            embed_cols.push(v.coords().to_vec());
        }
        let embed_mat = {
            let rows: Vec<Vec<Rational>> = (0..9)
                .map(|r| embed_cols.iter().map(|v| v[r].clone()).collect())
                .collect();
            RationalMatrix::from_rows(rows)
        };
        assert!(
            kernel_mat.same_column_span(&embed_mat),
            "Fix(tau) differs from the embedding image"
        );
    }

    #[test]
    fn recovery_inverts_the_embedding() {
        let m = TrialitySymmetricMap {
            a: rat(2),
            b: rat(-3),
            c: rat(5),
            d: rat(7),
            z: rat(-1),
        };
        let recovered = is_triality_symmetric(&embed(&m)).expect("embedded map is symmetric");
        assert_eq!(recovered, m);
        // a non-symmetric vector is rejected
        let mut v = embed(&m);
        v.b1 = rat(99);
        assert!(is_triality_symmetric(&v).is_none());
    }

    #[test]
    fn frame_rows_stay_in_v_and_detect_graphs() {
        let (_, m) = symbolic_map();
        let frame = graph_frame(&m);
        assert!(frame.rows_in_v());
        // generic symbolic map: the graph conditions do not hold identically
        assert!(!frame.is_graph());
        // a rational point on the isotropy locus: a=d=0, b=c=0 (z free)
        let on_locus = TrialitySymmetricMap {
            a: rat(0),
            b: rat(0),
            c: rat(0),
            d: rat(0),
            z: rat(4),
        };
        let f = graph_frame(&on_locus);
        assert!(f.is_graph());
        assert!(f.is_g2_isotropic());
    }

    #[test]
    fn morphism_rank_of_examples() {
        // embed(a=1): rank 2
        let m1 = TrialitySymmetricMap {
            a: rat(1),
            b: rat(0),
            c: rat(0),
            d: rat(0),
            z: rat(0),
        };
        assert_eq!(embed(&m1).morphism_rank(), 2);
        // embed(c=-1, rest 0): rank 1
        let m2 = TrialitySymmetricMap {
            a: rat(0),
            b: rat(0),
            c: rat(-1),
            d: rat(0),
            z: rat(0),
        };
        assert_eq!(embed(&m2).morphism_rank(), 1);
        // zero map: rank 0; nonzero z forces rank 2
        assert_eq!(embed(&TrialitySymmetricMap::zero()).morphism_rank(), 0);
        let m3 = TrialitySymmetricMap {
            a: rat(0),
            b: rat(0),
            c: rat(0),
            d: rat(0),
            z: rat(5),
        };
        assert_eq!(embed(&m3).morphism_rank(), 2);
    }

    #[test]
    fn product_entries_generate_the_expected_quadrics() {
        // symbolically, the nonzero product entries are (up to sign and a
        // factor of 2) exactly a^2+bd, ac+d^2, ad-bc
        let (vars, m) = symbolic_map();
        let frame = graph_frame(&m);
        let targets = [
            MultiPoly::parse(&vars, "a^2 + b*d").unwrap(),
            MultiPoly::parse(&vars, "a*c + d^2").unwrap(),
            MultiPoly::parse(&vars, "a*d - b*c").unwrap(),
        ];
        let mut seen = std::collections::BTreeSet::new();
        for entry in frame.product_entries() {
            if entry.is_zero() {
                continue;
            }
            let matched = targets.iter().position(|t| {
                entry == t.scale(&rat(2))
                    || entry == t.scale(&rat(-2))
                    || entry == *t
                    || entry == t.neg()
            });
            let idx = matched.unwrap_or_else(|| {
                panic!("unexpected product entry {entry}")
            });
            seen.insert(idx);
        }
        assert_eq!(seen.len(), 3, "all three quadrics must appear");
    }
}
