//! Classification of symmetric compatible maps into five group orbits.
//!
//! A symmetric compatible map is coordinatized by `(a, b, c, d, z)`; the
//! first four coordinates assemble into the binary cubic form
//!
//! ```text
//! f(x, y) = -c x^3 - d x^2 y + a x y^2 + b y^3
//! ```
//!
//! and the orbit of a map is determined by `z` together with projective
//! invariants of `f`: its discriminant, the rank of its coefficient
//! minor matrix, and ultimately its root multiplicities. Two independent
//! classifiers are provided — one by invariant vanishing, one by root
//! multiplicities computed through univariate gcds — and the suites check
//! they always agree.

use crate::exactalg::{rat, MultiPoly, Rational, RationalMatrix, VarSet, WeightVector};
use crate::octonion::Scalar;
use crate::triality::TrialitySymmetricMap;

/// The five orbit labels, indexed by codimension (4 is skipped: no orbit
/// of that codimension exists).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitLabel {
    /// The open orbit: `z != 0`.
    O0,
    /// `z = 0`, cubic with three distinct roots.
    O1,
    /// `z = 0`, cubic with exactly one double root.
    O2,
    /// `z = 0`, cubic with a triple root.
    O3,
    /// The origin.
    O5,
}

impl OrbitLabel {
    pub fn all() -> [OrbitLabel; 5] {
        [
            OrbitLabel::O0,
            OrbitLabel::O1,
            OrbitLabel::O2,
            OrbitLabel::O3,
            OrbitLabel::O5,
        ]
    }

    /// Codimension of the orbit inside the five-dimensional cone.
    pub fn codim(self) -> usize {
        match self {
            OrbitLabel::O0 => 0,
            OrbitLabel::O1 => 1,
            OrbitLabel::O2 => 2,
            OrbitLabel::O3 => 3,
            OrbitLabel::O5 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrbitLabel::O0 => "O0",
            OrbitLabel::O1 => "O1",
            OrbitLabel::O2 => "O2",
            OrbitLabel::O3 => "O3",
            OrbitLabel::O5 => "O5",
        }
    }
}

impl std::fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A binary cubic `-c x^3 - d x^2 y + a x y^2 + b y^3` stored by its
/// map coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryCubic<S: Scalar> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> BinaryCubic<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        BinaryCubic { a, b, c, d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// `f(x, y)`.
    pub fn eval(&self, x: &S, y: &S) -> S {
        let x2 = x.mul(x);
        let x3 = x2.mul(x);
        let y2 = y.mul(y);
        let y3 = y2.mul(y);
        self.c
            .mul(&x3)
            .neg()
            .sub(&self.d.mul(&x2.mul(y)))
            .add(&self.a.mul(&x.mul(&y2)))
            .add(&self.b.mul(&y3))
    }

    /// The discriminant
    /// `a^2 d^2 + 4 a^3 c + 4 b d^3 - 27 b^2 c^2 + 18 a b c d`.
    pub fn discriminant(&self) -> S {
        let BinaryCubic { a, b, c, d } = self;
        let a2 = a.mul(a);
        let four = S::from_rational(&rat(4));
        let t1 = a2.mul(&d.mul(d));
        let t2 = four.mul(&a2.mul(&a.mul(c)));
        let t3 = four.mul(&b.mul(&d.mul(&d.mul(d))));
        let t4 = S::from_rational(&rat(27)).mul(&b.mul(b).mul(&c.mul(c)));
        let t5 = S::from_rational(&rat(18)).mul(&a.mul(b).mul(&c.mul(d)));
        t1.add(&t2).add(&t3).sub(&t4).add(&t5)
    }

    /// The 2x3 coefficient minor matrix
    ///
    /// ```text
    /// [ a  -d  c ]
    /// [ b   a  d ]
    /// ```
    ///
    /// whose 2x2 minors generate (up to sign) `a^2 + bd`, `ad - bc`, and
    /// `d^2 + ac`.
    pub fn minor_matrix(&self) -> [[S; 3]; 2] {
        [
            [self.a.clone(), self.d.neg(), self.c.clone()],
            [self.b.clone(), self.a.clone(), self.d.clone()],
        ]
    }

    /// The three 2x2 minors, normalized to `a^2 + bd`, `ad - bc`,
    /// `d^2 + ac`.
    pub fn minor_forms(&self) -> [S; 3] {
        let BinaryCubic { a, b, c, d } = self;
        [
            a.mul(a).add(&b.mul(d)),
            a.mul(d).sub(&b.mul(c)),
            d.mul(d).add(&a.mul(c)),
        ]
    }
}

impl BinaryCubic<Rational> {
    /// Rank of the [`BinaryCubic::minor_matrix`] over the rationals.
    pub fn minor_rank(&self) -> usize {
        let m = self.minor_matrix();
        let rows: Vec<Vec<Rational>> = m.iter().map(|r| r.to_vec()).collect();
        RationalMatrix::from_rows(rows).rank()
    }

    /// The cubic as a polynomial in `x, y`.
    pub fn as_poly(&self) -> MultiPoly {
        let vars = VarSet::new(&["x", "y"]);
        let term = |coeff: Rational, e: [u32; 2]| MultiPoly::term(&vars, coeff, &e);
        term(-&self.c, [3, 0])
            .add(&term(-&self.d, [2, 1]))
            .add(&term(self.a.clone(), [1, 2]))
            .add(&term(self.b.clone(), [0, 3]))
    }

    /// Root multiplicity profile of the projective zero locus, in
    /// descending order: `[1, 1, 1]`, `[2, 1]`, or `[3]`; `None` for the
    /// zero cubic. The root at infinity `[1 : 0]` contributes `3 - deg u`
    /// where `u(x) = f(x, 1)`; finite multiplicities come from
    /// `deg gcd(u, u')`.
    pub fn root_profile(&self) -> Option<Vec<u32>> {
        if self.is_zero() {
            return None;
        }
        // u(x) = f(x, 1), ascending coefficients
        let u = UniPoly::new(vec![
            self.b.clone(),
            self.a.clone(),
            -&self.d,
            -&self.c,
        ]);
        let deg_u = u.degree().expect("nonzero cubic has nonzero u");
        let g = match u.derivative().degree() {
            None => 0, // constant u: no finite roots at all
            Some(_) => UniPoly::gcd(&u, &u.derivative())
                .degree()
                .expect("gcd of nonzero polynomials is nonzero"),
        };
        Some(match (deg_u, g) {
            (3, 0) => vec![1, 1, 1],
            (3, 1) => vec![2, 1],
            (3, 2) => vec![3],
            (2, 0) => vec![1, 1, 1], // two finite roots + simple root at infinity
            (2, 1) => vec![2, 1],
            (1, 0) => vec![2, 1], // double root at infinity
            (0, 0) => vec![3],    // triple root at infinity
            other => unreachable!("impossible cubic gcd signature {other:?}"),
        })
    }
}

/// A univariate polynomial with ascending rational coefficients; just
/// enough arithmetic for gcd computations.
#[derive(Debug, Clone, PartialEq)]
struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(num::Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        UniPoly::new(coeffs)
    }

    fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => UniPoly::new(self.coeffs.iter().map(|c| c / lead).collect()),
        }
    }

    /// Remainder of `self` divided by nonzero `div`.
    fn rem(&self, div: &UniPoly) -> UniPoly {
        assert!(!div.is_zero());
        let mut r = self.coeffs.clone();
        let dd = div.degree().unwrap();
        let lead = div.coeffs.last().unwrap();
        while r.len() > dd {
            let q = r.last().unwrap() / lead;
            let shift = r.len() - 1 - dd;
            for (i, c) in div.coeffs.iter().enumerate() {
                let delta = &q * c;
                r[shift + i] -= delta;
            }
            while r.last().is_some_and(num::Zero::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Monic gcd by the Euclidean algorithm.
    fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }
}

/// The torus weights of the five coordinates, in the simple-root basis.
pub fn coordinate_weights() -> Vec<(&'static str, WeightVector)> {
    vec![
        ("a", WeightVector::alpha(-1, -1)),
        ("b", WeightVector::alpha(0, -1)),
        ("c", WeightVector::alpha(-3, -1)),
        ("d", WeightVector::alpha(-2, -1)),
        ("z", WeightVector::alpha(-3, -2)),
    ]
}

/// The discriminant as a polynomial in the coordinates `a, b, c, d`.
pub fn discriminant_poly() -> MultiPoly {
    let cubic = symbolic_cubic();
    cubic.discriminant()
}

/// The three minor forms `a^2 + bd`, `ad - bc`, `d^2 + ac` as
/// polynomials in `a, b, c, d`.
pub fn minor_ideal_generators() -> Vec<MultiPoly> {
    symbolic_cubic().minor_forms().to_vec()
}

/// The variable set `a, b, c, d` used by the symbolic cubic.
pub fn cubic_vars() -> VarSet {
    VarSet::new(&["a", "b", "c", "d"])
}

/// The generic cubic with polynomial coordinates.
pub fn symbolic_cubic() -> BinaryCubic<MultiPoly> {
    let vars = cubic_vars();
    let v = |name: &str| MultiPoly::var(&vars, name).expect("declared variable");
    BinaryCubic::new(v("a"), v("b"), v("c"), v("d"))
}

/// Classifies by invariant vanishing: `z != 0` is the open orbit;
/// otherwise a nonzero discriminant, a rank-2 minor matrix, a nonzero
/// cubic, and the zero map descend through the remaining orbits.
pub fn classify(cubic: &BinaryCubic<Rational>, z: &Rational) -> OrbitLabel {
    if !num::Zero::is_zero(z) {
        OrbitLabel::O0
    } else if !num::Zero::is_zero(&cubic.discriminant()) {
        OrbitLabel::O1
    } else if cubic.minor_rank() == 2 {
        OrbitLabel::O2
    } else if !cubic.is_zero() {
        OrbitLabel::O3
    } else {
        OrbitLabel::O5
    }
}

/// Classifies by root multiplicities: distinct roots, a double root, and
/// a triple root give the codimension 1, 2, 3 orbits.
pub fn classify_by_multiplicity(cubic: &BinaryCubic<Rational>, z: &Rational) -> OrbitLabel {
    if !num::Zero::is_zero(z) {
        return OrbitLabel::O0;
    }
    match cubic.root_profile().as_deref() {
        None => OrbitLabel::O5,
        Some([1, 1, 1]) => OrbitLabel::O1,
        Some([2, 1]) => OrbitLabel::O2,
        Some([3]) => OrbitLabel::O3,
        Some(other) => unreachable!("impossible root profile {other:?}"),
    }
}

/// Classifies a symmetric compatible map.
pub fn classify_map(map: &TrialitySymmetricMap<Rational>) -> OrbitLabel {
    classify(&cubic_of_map(map), &map.z)
}

/// The binary cubic attached to a map's first four coordinates.
pub fn cubic_of_map(map: &TrialitySymmetricMap<Rational>) -> BinaryCubic<Rational> {
    BinaryCubic::new(map.a.clone(), map.b.clone(), map.c.clone(), map.d.clone())
}

/// A canonical representative of each orbit.
pub fn orbit_representative(label: OrbitLabel) -> TrialitySymmetricMap<Rational> {
    let mut map = TrialitySymmetricMap::zero();
    match label {
        OrbitLabel::O0 => map.z = rat(1),
        OrbitLabel::O1 => {
            map.b = rat(1);
            map.c = rat(1);
        }
        OrbitLabel::O2 => map.a = rat(1),
        OrbitLabel::O3 => map.b = rat(1),
        OrbitLabel::O5 => {}
    }
    map
}

/// The full record produced by classifying a map: both classifiers'
/// verdicts plus the invariants they used.
#[derive(Debug, Clone)]
pub struct Classification {
    pub label: OrbitLabel,
    pub by_multiplicity: OrbitLabel,
    pub discriminant: Rational,
    pub minor_rank: usize,
    pub root_profile: Option<Vec<u32>>,
    pub cubic: BinaryCubic<Rational>,
    pub z: Rational,
}

impl Classification {
    pub fn agree(&self) -> bool {
        self.label == self.by_multiplicity
    }
}

/// Runs both classifiers and collects the invariants.
pub fn classify_full(map: &TrialitySymmetricMap<Rational>) -> Classification {
    let cubic = cubic_of_map(map);
    Classification {
        label: classify(&cubic, &map.z),
        by_multiplicity: classify_by_multiplicity(&cubic, &map.z),
        discriminant: cubic.discriminant(),
        minor_rank: cubic.minor_rank(),
        root_profile: cubic.root_profile(),
        cubic,
        z: map.z.clone(),
    }
}

/// Scales a map by the torus element `(m1, m2)`: each coordinate picks
/// up the value of its character, `m1^p m2^q` for the weight `(p, q)` in
/// the torus basis. Both parameters must be nonzero.
pub fn torus_scale(
    map: &TrialitySymmetricMap<Rational>,
    m1: &Rational,
    m2: &Rational,
) -> TrialitySymmetricMap<Rational> {
    assert!(!num::Zero::is_zero(m1) && !num::Zero::is_zero(m2));
    let character = |name: &str| -> Rational {
        let weight = coordinate_weights()
            .into_iter()
            .find(|(n, _)| *n == name)
            .expect("known coordinate")
            .1
            .to_basis(crate::exactalg::Basis::T);
        let [p, q] = weight.coords();
        let pow = |base: &Rational, e: i64| -> Rational {
            if e >= 0 {
                num::pow::pow(base.clone(), e as usize)
            } else {
                num::pow::pow(base.clone(), (-e) as usize).recip()
            }
        };
        pow(m1, p) * pow(m2, q)
    };
    TrialitySymmetricMap {
        a: character("a") * &map.a,
        b: character("b") * &map.b,
        c: character("c") * &map.c,
        d: character("d") * &map.d,
        z: character("z") * &map.z,
    }
}
