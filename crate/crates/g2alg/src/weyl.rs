//! The Weyl group of type G2 — a dihedral group of order 12 — realized
//! as permutations of seven indices, together with rank functions and
//! subword-sum restrictions of Schubert classes at torus fixed points.
//!
//! The two simple reflections embed into S7 in one-line notation as
//!
//! ```text
//! s = 2 1 5 4 3 7 6      (reflection in the short root alpha1)
//! t = 1 3 2 4 6 5 7      (reflection in the long root alpha2)
//! ```
//!
//! Words act right-to-left and permutations compose as
//! `(u v)(i) = u(v(i))`, so the word `tst` is the permutation
//! `3 6 1 4 7 2 5`. Each element carries its canonical reduced word —
//! the lexicographically least among its reduced words with `s < t`.
//!
//! Restrictions of Schubert classes to fixed points are computed by the
//! subword sum over a reduced word of the point: for a reduced word
//! `g1 g2 .. gl` of `v`, the inversion-root chain is `r(j) = g1 g2 ..
//! g(j-1) (alpha_{gj})`, and the restriction of the class of `w` is the
//! sum over those subwords forming reduced words of `w` of the products
//! of their chain roots. The result is reduced-word independent; the
//! suites check this by enumerating every reduced word.

use std::fmt;
use std::sync::LazyLock;

use crate::exactalg::{Basis, MultiPoly, WeightVector};

/// A simple reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen {
    /// Reflection in the short simple root `alpha1`.
    S,
    /// Reflection in the long simple root `alpha2`.
    T,
}

impl Gen {
    pub fn letter(self) -> char {
        match self {
            Gen::S => 's',
            Gen::T => 't',
        }
    }

    /// The simple root this generator reflects in (alpha basis).
    pub fn simple_root(self) -> WeightVector {
        match self {
            Gen::S => WeightVector::alpha(1, 0),
            Gen::T => WeightVector::alpha(0, 1),
        }
    }

    /// One-line notation of the embedded permutation on seven indices.
    fn permutation(self) -> [u8; 7] {
        match self {
            Gen::S => [2, 1, 5, 4, 3, 7, 6],
            Gen::T => [1, 3, 2, 4, 6, 5, 7],
        }
    }
}

/// Renders a word as a string of letters; the empty word is `e`.
pub fn word_to_string(word: &[Gen]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|g| g.letter()).collect()
    }
}

/// Parses a word: `e` or the empty string for the identity, otherwise a
/// string of `s` and `t` letters.
pub fn parse_word(text: &str) -> Result<Vec<Gen>, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "e" {
        return Ok(Vec::new());
    }
    trimmed
        .chars()
        .map(|c| match c {
            's' => Ok(Gen::S),
            't' => Ok(Gen::T),
            other => Err(format!("invalid generator `{other}` (expected `s` or `t`)")),
        })
        .collect()
}

/// Composition of one-line permutations: `(u v)(i) = u(v(i))`.
fn compose(u: &[u8; 7], v: &[u8; 7]) -> [u8; 7] {
    std::array::from_fn(|i| u[(v[i] - 1) as usize])
}

const IDENTITY_PERM: [u8; 7] = [1, 2, 3, 4, 5, 6, 7];

/// Evaluates a word (rightmost letter applied first) to a permutation.
pub fn word_to_permutation(word: &[Gen]) -> [u8; 7] {
    // (g1 g2 .. gk)(i) = g1(g2(..gk(i)..)); build by left-multiplying.
    let mut perm = IDENTITY_PERM;
    for g in word.iter().rev() {
        perm = compose(&g.permutation(), &perm);
    }
    perm
}

/// An element of the Weyl group: its permutation, its canonical reduced
/// word, and its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    perm: [u8; 7],
    word: Vec<Gen>,
}

impl WeylElement {
    /// One-line notation of the embedded permutation.
    pub fn permutation(&self) -> [u8; 7] {
        self.perm
    }

    /// The canonical (lexicographically least, `s < t`) reduced word.
    pub fn canonical_word(&self) -> &[Gen] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        assert!((1..=7).contains(&i));
        self.perm[i - 1] as usize
    }

    /// The rank function `r_w(q, p) = #{i <= q : w(8 - i) <= p}`, with
    /// `q, p` in `1..=7`.
    pub fn rank(&self, q: usize, p: usize) -> usize {
        assert!((1..=7).contains(&q) && (1..=7).contains(&p));
        (1..=q).filter(|&i| self.apply(8 - i) <= p).count()
    }

    /// The full 7x7 table `table[q-1][p-1] = r_w(q, p)`.
    pub fn rank_table(&self) -> [[usize; 7]; 7] {
        std::array::from_fn(|q| std::array::from_fn(|p| self.rank(q + 1, p + 1)))
    }

    /// The inversion-root chain of the canonical reduced word:
    /// `r(j) = g1 .. g(j-1) (alpha_{gj})` in the alpha basis. For a
    /// reduced word these are exactly the inversion roots, all positive.
    pub fn inversion_roots(&self) -> Vec<WeightVector> {
        root_chain(&self.word)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word_to_string(&self.word))
    }
}

/// The reflection action of a simple generator on a weight in the alpha
/// basis: `s` sends `(x, y) -> (3y - x, y)`, `t` sends `(x, y) -> (x, x - y)`.
pub fn reflect(g: Gen, w: &WeightVector) -> WeightVector {
    let v = w.to_basis(Basis::Alpha);
    let [x, y] = v.coords();
    let out = match g {
        Gen::S => WeightVector::alpha(3 * y - x, y),
        Gen::T => WeightVector::alpha(x, x - y),
    };
    out.to_basis(w.basis())
}

/// The inversion-root chain of a word: `r(j) = g1 .. g(j-1)(alpha_{gj})`.
pub fn root_chain(word: &[Gen]) -> Vec<WeightVector> {
    (0..word.len())
        .map(|j| {
            let mut root = word[j].simple_root();
            for g in word[..j].iter().rev() {
                root = reflect(*g, &root);
            }
            root
        })
        .collect()
}

/// The group: all twelve elements with canonical reduced words, indexed
/// for fast lookup.
#[derive(Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

static GROUP: LazyLock<WeylGroup> = LazyLock::new(WeylGroup::build);

impl WeylGroup {
    /// The shared instance, built once.
    pub fn get() -> &'static WeylGroup {
        &GROUP
    }

    fn build() -> WeylGroup {
        // Breadth-first over words in length-then-lex order (s < t); the
        // first word reaching a permutation is its canonical reduced word.
        let mut elements: Vec<WeylElement> = vec![WeylElement {
            perm: IDENTITY_PERM,
            word: Vec::new(),
        }];
        let mut frontier: Vec<Vec<Gen>> = vec![Vec::new()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for word in &frontier {
                for g in [Gen::S, Gen::T] {
                    let mut extended = word.clone();
                    extended.push(g);
                    let perm = word_to_permutation(&extended);
                    if !elements.iter().any(|e| e.perm == perm) {
                        elements.push(WeylElement {
                            perm,
                            word: extended.clone(),
                        });
                        next.push(extended);
                    }
                }
            }
            frontier = next;
        }
        // Deterministic order: by length, then lexicographically by word.
        elements.sort_by(|a, b| {
            a.word
                .len()
                .cmp(&b.word.len())
                .then_with(|| a.word.cmp(&b.word))
        });
        WeylGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The longest element (length 6).
    pub fn longest(&self) -> &WeylElement {
        self.elements
            .iter()
            .max_by_key(|e| e.length())
            .expect("nonempty group")
    }

    /// Looks an element up by any word for it.
    pub fn element_from_word(&self, word: &[Gen]) -> &WeylElement {
        let perm = word_to_permutation(word);
        self.elements
            .iter()
            .find(|e| e.perm == perm)
            .expect("every word lands in the group")
    }

    /// The product `x y` (apply `y` first).
    pub fn multiply(&self, x: &WeylElement, y: &WeylElement) -> &WeylElement {
        let perm = compose(&x.perm, &y.perm);
        self.elements
            .iter()
            .find(|e| e.perm == perm)
            .expect("closed under multiplication")
    }

    /// Every reduced word of `v`, by exhausting all words of length
    /// `l(v)` (any word of that length evaluating to `v` is reduced).
    pub fn all_reduced_words(&self, v: &WeylElement) -> Vec<Vec<Gen>> {
        let l = v.length();
        let mut out = Vec::new();
        for mask in 0..(1u32 << l) {
            let word: Vec<Gen> = (0..l)
                .map(|i| if mask >> i & 1 == 0 { Gen::S } else { Gen::T })
                .collect();
            if word_to_permutation(&word) == v.perm {
                out.push(word);
            }
        }
        out
    }

    /// The element indexing the rank-`r` degeneracy locus: rank 2 is the
    /// identity, rank 1 is `tst`, rank 0 is `tstst`.
    pub fn locus_element(&self, rank: usize) -> &WeylElement {
        let word = match rank {
            2 => Vec::new(),
            1 => vec![Gen::T, Gen::S, Gen::T],
            0 => vec![Gen::T, Gen::S, Gen::T, Gen::S, Gen::T],
            other => panic!("locus rank must be 0, 1, or 2, got {other}"),
        };
        self.element_from_word(&word)
    }
}

/// The six positive roots in the alpha basis, in height order.
pub fn positive_roots() -> Vec<WeightVector> {
    vec![
        WeightVector::alpha(1, 0),
        WeightVector::alpha(0, 1),
        WeightVector::alpha(1, 1),
        WeightVector::alpha(2, 1),
        WeightVector::alpha(3, 1),
        WeightVector::alpha(3, 2),
    ]
}

/// Restriction of the Schubert class of `w` to the fixed point `v`,
/// computed by the subword sum over the given reduced word of `v`, with
/// every chain root taken positively. The polynomial lives in the torus
/// variables `t1, t2`.
pub fn billey_restriction_with_word(w: &WeylElement, v_word: &[Gen]) -> MultiPoly {
    let tvars = Basis::T.var_set();
    let chain = root_chain(v_word);
    let chain_polys: Vec<MultiPoly> = chain
        .iter()
        .map(|r| r.to_basis(Basis::T).as_poly())
        .collect();
    let l = v_word.len();
    let k = w.length();
    let mut total = MultiPoly::zero(&tvars);
    // enumerate k-element subwords by bitmask
    for mask in 0u32..(1 << l) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let subword: Vec<Gen> = (0..l)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| v_word[i])
            .collect();
        if word_to_permutation(&subword) != w.perm {
            continue;
        }
        let mut product = MultiPoly::one(&tvars);
        for (i, chain_poly) in chain_polys.iter().enumerate() {
            if mask >> i & 1 == 1 {
                product = product.mul(chain_poly);
            }
        }
        total = total.add(&product);
    }
    total
}

/// Restriction at a fixed point using its canonical reduced word.
pub fn billey_restriction(w: &WeylElement, v: &WeylElement) -> MultiPoly {
    billey_restriction_with_word(w, v.canonical_word())
}

/// Global sign convention for matching restrictions to orbit classes:
/// either the chain roots themselves or their negatives (an overall
/// `(-1)^l(w)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    PositiveRoots,
    NegativeRoots,
}

impl SignConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            SignConvention::PositiveRoots => "positive-roots",
            SignConvention::NegativeRoots => "negative-roots",
        }
    }
}

/// A pinned localization convention: which fixed point and which sign
/// reproduce the orbit-closure classes.
#[derive(Debug, Clone)]
pub struct PinnedConvention {
    pub point: WeylElement,
    pub sign: SignConvention,
}

/// Restriction of `w` at `point` under `sign`.
pub fn restriction_with_convention(
    w: &WeylElement,
    point: &WeylElement,
    sign: SignConvention,
) -> MultiPoly {
    let raw = billey_restriction(w, point);
    match sign {
        SignConvention::PositiveRoots => raw,
        SignConvention::NegativeRoots => {
            if w.length().is_multiple_of(2) {
                raw
            } else {
                raw.neg()
            }
        }
    }
}

/// Evaluates all four candidate conventions (identity or longest element,
/// positive or negative roots) against the two reference classes and
/// reports which match. The pinning is legitimate only if exactly one
/// candidate matches; [`pinned_convention`] asserts that.
pub fn pin_candidates() -> Vec<(PinnedConvention, bool)> {
    let group = WeylGroup::get();
    let o3 = crate::classes::orbit_class(crate::orbits::OrbitLabel::O3, Basis::T);
    let o5 = crate::classes::orbit_class(crate::orbits::OrbitLabel::O5, Basis::T);
    let w_rank1 = group.locus_element(1);
    let w_rank0 = group.locus_element(0);
    let mut out = Vec::new();
    for point in [group.identity(), group.longest()] {
        for sign in [SignConvention::PositiveRoots, SignConvention::NegativeRoots] {
            let matches = restriction_with_convention(w_rank1, point, sign) == o3
                && restriction_with_convention(w_rank0, point, sign) == o5;
            out.push((
                PinnedConvention {
                    point: point.clone(),
                    sign,
                },
                matches,
            ));
        }
    }
    out
}

static PINNED: LazyLock<PinnedConvention> = LazyLock::new(|| {
    let matching: Vec<PinnedConvention> = pin_candidates()
        .into_iter()
        .filter_map(|(c, ok)| ok.then_some(c))
        .collect();
    assert_eq!(
        matching.len(),
        1,
        "exactly one localization convention must reproduce the orbit classes"
    );
    matching.into_iter().next().unwrap()
});

/// The unique convention under which restrictions reproduce the
/// orbit-closure classes (computed once, then cached).
pub fn pinned_convention() -> &'static PinnedConvention {
    &PINNED
}
