//! The machine-verification suite.
//!
//! Every structural identity behind the library — the composition
//! algebra, the `S3` symmetry and its fixed locus, the five-stratum
//! orbit classification, and the equivariant class formulas — is checked
//! here by exact arithmetic. Wherever a value has a closed form, an
//! independent computational route (Gröbner-basis multidegrees, Weyl-group
//! localization, randomized numeric sampling) recomputes it from first
//! principles and the two answers are compared.
//!
//! Checks are grouped into scopes so the command line can run a subset.
//! Symbolic checks are exact polynomial identities over the rationals;
//! sampled checks draw deterministic pseudo-random inputs from the
//! configured seed, so every run is reproducible.

pub mod sampling;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::classes;
use crate::exactalg::{
    rat, to_chern, weight_of, Basis, MultiPoly, Rational, RationalMatrix, VarSet, WeightVector,
};
use crate::multidegree::{orbit_class_oracle, GradedIdeal, TermOrder};
use crate::multidegree::{groebner_basis, ideal_equal};
use crate::octonion::{
    coordinate_character, expected_gram_entry, pair_ring, symbolic_element, OctonionElement,
    Scalar,
};
use crate::orbits::{
    classify_full, classify_map, coordinate_weights, cubic_of_map, cubic_vars,
    discriminant_poly, minor_ideal_generators, orbit_representative, torus_scale, OrbitLabel,
};
use crate::triality::{
    action_matrix, embed, graph_frame, is_triality_symmetric, s3_act, S3Generator, TangentVector,
    TrialitySymmetricMap,
};
use crate::weyl::{
    billey_restriction, billey_restriction_with_word, parse_word, pin_candidates,
    pinned_convention, positive_roots, reflect, restriction_with_convention, root_chain, Gen,
    SignConvention, WeylGroup,
};

/// Which group of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Octonion,
    Triality,
    Orbits,
    Classes,
    Weyl,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Octonion => "octonion",
            Scope::Triality => "triality",
            Scope::Orbits => "orbits",
            Scope::Classes => "classes",
            Scope::Weyl => "weyl",
        }
    }

    fn includes(self, section: Scope) -> bool {
        self == Scope::All || self == section
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(text: &str) -> Result<Scope, String> {
        match text.to_ascii_lowercase().as_str() {
            "all" => Ok(Scope::All),
            "octonion" => Ok(Scope::Octonion),
            "triality" => Ok(Scope::Triality),
            "orbits" => Ok(Scope::Orbits),
            "classes" => Ok(Scope::Classes),
            "weyl" => Ok(Scope::Weyl),
            other => Err(format!(
                "unknown scope '{other}' (expected all, octonion, triality, orbits, classes, or weyl)"
            )),
        }
    }
}

/// Configuration for one verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub scope: Scope,
    /// Number of pseudo-random inputs for each sampled check.
    pub samples: usize,
    /// Seed for the deterministic sample streams.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            scope: Scope::All,
            samples: 1000,
            seed: 0,
        }
    }
}

/// Outcome of a single named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    /// Stable kebab-case identifier.
    pub name: String,
    /// The mathematical statement being verified, in plain notation.
    pub identity: String,
    pub passed: bool,
    /// What was confirmed, or how the check failed.
    pub detail: String,
}

/// The result of a full verification run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub scope: String,
    pub samples: usize,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
    pub elapsed_ms: u128,
    pub checks: Vec<CheckResult>,
}

impl Report {
    /// Human-readable rendering, one line per check plus a summary.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let tag = if check.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{tag}] {} :: {}\n", check.name, check.identity));
            out.push_str(&format!("       {}\n", check.detail));
        }
        out.push_str(&format!(
            "{} checks: {} passed, {} failed (scope {}, {} samples, seed {}, {} ms)\n",
            self.checks.len(),
            self.passed,
            self.failed,
            self.scope,
            self.samples,
            self.seed,
            self.elapsed_ms
        ));
        out
    }
}

/// Runs the verification suite.
pub fn run(config: &VerifyConfig) -> Report {
    run_internal(config, false)
}

/// Runs the suite with a deliberate sign error injected into the
/// codimension-2 oracle comparison. Exists to demonstrate that the
/// cross-checks can actually fail; the report must come back red.
pub fn run_with_corruption(config: &VerifyConfig) -> Report {
    run_internal(config, true)
}

fn run_internal(config: &VerifyConfig, corrupt: bool) -> Report {
    let start = Instant::now();
    let mut runner = Runner { checks: Vec::new() };
    if config.scope.includes(Scope::Octonion) {
        octonion_checks(config, &mut runner);
    }
    if config.scope.includes(Scope::Triality) {
        triality_checks(&mut runner);
    }
    if config.scope.includes(Scope::Orbits) {
        orbit_checks(config, &mut runner);
    }
    if config.scope.includes(Scope::Classes) {
        class_checks(config, corrupt, &mut runner);
    }
    if config.scope.includes(Scope::Weyl) {
        weyl_checks(&mut runner);
    }
    let passed = runner.checks.iter().filter(|c| c.passed).count();
    let failed = runner.checks.len() - passed;
    Report {
        scope: config.scope.as_str().to_string(),
        samples: config.samples,
        seed: config.seed,
        passed,
        failed,
        all_passed: failed == 0,
        elapsed_ms: start.elapsed().as_millis(),
        checks: runner.checks,
    }
}

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn record(&mut self, name: &str, identity: &str, outcome: Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(detail) => (true, detail),
            Err(detail) => (false, detail),
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            identity: identity.to_string(),
            passed,
            detail,
        });
    }
}

fn ensure(cond: bool, ok: impl Into<String>, err: impl Into<String>) -> Result<String, String> {
    if cond {
        Ok(ok.into())
    } else {
        Err(err.into())
    }
}

fn s<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn pvar(vars: &VarSet, name: &str) -> MultiPoly {
    MultiPoly::var(vars, name).expect("declared variable")
}

// ---------------------------------------------------------------------------
// octonion scope
// ---------------------------------------------------------------------------

#[allow(clippy::redundant_closure_call)]
fn octonion_checks(config: &VerifyConfig, r: &mut Runner) {
    let ring = pair_ring();
    let u = symbolic_element(&ring, "u");
    let v = symbolic_element(&ring, "v");
    let e = OctonionElement::<MultiPoly>::identity();

    r.record(
        "octonion-unit-element",
        "e*u = u = u*e for a generic element u",
        ensure(
            e.multiply(&u) == u && u.multiply(&e) == u,
            "both symbolic products reproduce the generic element",
            "the distinguished idempotent is not a two-sided unit",
        ),
    );

    r.record(
        "octonion-norm-formula",
        "N(u) = u4*u5 - u3*u6 - u7*u2 - u8*u1",
        (|| {
            let expected =
                MultiPoly::parse(&ring, "u4*u5 - u3*u6 - u7*u2 - u8*u1").map_err(s)?;
            ensure(
                u.norm() == expected,
                format!("N(u) = {}", u.norm()),
                format!("norm came out as {}", u.norm()),
            )
        })(),
    );

    r.record(
        "octonion-norm-multiplicative",
        "N(u*v) = N(u)*N(v) for generic u, v",
        ensure(
            u.multiply(&v).norm() == u.norm().mul(&v.norm()),
            "exact polynomial identity in 16 coordinate variables",
            "the norm is not multiplicative",
        ),
    );

    r.record(
        "octonion-polarization",
        "<u,v> = N(u+v) - N(u) - N(v), and <u,u> = 2*N(u)",
        {
            let two = MultiPoly::constant(&VarSet::empty(), rat(2));
            let pol = u.add(&v).norm().sub(&u.norm()).sub(&v.norm());
            ensure(
                u.bilinear(&v) == pol && u.bilinear(&u) == u.norm().mul(&two),
                "bilinear form agrees with the polarization of the norm",
                "bilinear form disagrees with the polarization of the norm",
            )
        },
    );

    r.record(
        "octonion-gram-matrix",
        "<v_p, v_q> pairs dual basis vectors (-1 off the split pair, +1 on it) and is nondegenerate",
        (|| {
            let mut mismatches = Vec::new();
            let mut rows = Vec::new();
            for p in 1..=8usize {
                let mut row = Vec::new();
                let vp = OctonionElement::<Rational>::basis_element(p);
                for q in 1..=8usize {
                    let vq = OctonionElement::<Rational>::basis_element(q);
                    let got = vp.bilinear(&vq);
                    if got != rat(expected_gram_entry(p, q)) {
                        mismatches.push(format!("({p},{q})"));
                    }
                    row.push(got);
                }
                rows.push(row);
            }
            let rank = RationalMatrix::from_rows(rows).rank();
            ensure(
                mismatches.is_empty() && rank == 8,
                format!("all 64 pairings match and the Gram matrix has full rank {rank}"),
                format!("mismatched entries {mismatches:?}, Gram rank {rank}"),
            )
        })(),
    );

    r.record(
        "octonion-trace-pairing",
        "<u,v> = T(u)*T(v) - T(u*v)",
        ensure(
            u.bilinear(&v) == u.trace().mul(&v.trace()).sub(&u.multiply(&v).trace()),
            "the bilinear form is the trace form",
            "the bilinear form differs from the trace form",
        ),
    );

    r.record(
        "octonion-conjugation",
        "conj(u) = T(u)*e - u is an involutive anti-automorphism with u*conj(u) = conj(u)*u = N(u)*e",
        {
            let cu = u.conjugate();
            let ne = OctonionElement::<MultiPoly>::identity().scale(&u.norm());
            let involution = cu.conjugate() == u;
            let anti = u.multiply(&v).conjugate() == v.conjugate().multiply(&u.conjugate());
            let norms = u.multiply(&cu) == ne && cu.multiply(&u) == ne && cu.norm() == u.norm();
            ensure(
                involution && anti && norms,
                "involution, anti-automorphism, and norm identities all hold symbolically",
                format!(
                    "involution {involution}, anti-automorphism {anti}, norm identities {norms}"
                ),
            )
        },
    );

    r.record(
        "octonion-rank-equation",
        "u^2 - T(u)*u + N(u)*e = 0 for a generic element",
        {
            let lhs = u
                .multiply(&u)
                .sub(&u.scale(&u.trace()))
                .add(&OctonionElement::<MultiPoly>::identity().scale(&u.norm()));
            ensure(
                lhs.is_zero(),
                "every element satisfies its quadratic characteristic polynomial",
                "the quadratic characteristic identity fails",
            )
        },
    );

    r.record(
        "octonion-alternative-laws",
        "u*(u*v) = (u*u)*v and (u*v)*v = u*(v*v)",
        {
            let left = u.multiply(&u.multiply(&v)) == u.multiply(&u).multiply(&v);
            let right = u.multiply(&v).multiply(&v) == u.multiply(&v.multiply(&v));
            ensure(
                left && right,
                "both alternative laws hold symbolically",
                format!("left alternativity {left}, right alternativity {right}"),
            )
        },
    );

    r.record(
        "octonion-composition-pairing",
        "<u*w, v*w> = <u,v>*N(w) and <w*u, w*v> = <u,v>*N(w)",
        {
            let names: Vec<String> = ["u", "v", "w"]
                .iter()
                .flat_map(|p| (1..=8).map(move |i| format!("{p}{i}")))
                .collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let triple = VarSet::new(&refs);
            let u3 = symbolic_element(&triple, "u");
            let v3 = symbolic_element(&triple, "v");
            let w3 = symbolic_element(&triple, "w");
            let rhs = u3.bilinear(&v3).mul(&w3.norm());
            let right_mult = u3.multiply(&w3).bilinear(&v3.multiply(&w3)) == rhs;
            let left_mult = w3.multiply(&u3).bilinear(&w3.multiply(&v3)) == rhs;
            ensure(
                right_mult && left_mult,
                "exact identity in 24 coordinate variables, on both sides",
                format!("right translation {right_mult}, left translation {left_mult}"),
            )
        },
    );

    r.record(
        "octonion-nonassociative",
        "the algebra is not associative: some basis triple has (v_i*v_j)*v_k != v_i*(v_j*v_k)",
        (|| {
            for i in 1..=8usize {
                for j in 1..=8usize {
                    for k in 1..=8usize {
                        let vi = OctonionElement::<Rational>::basis_element(i);
                        let vj = OctonionElement::<Rational>::basis_element(j);
                        let vk = OctonionElement::<Rational>::basis_element(k);
                        if vi.multiply(&vj).multiply(&vk) != vi.multiply(&vj.multiply(&vk)) {
                            return Ok(format!(
                                "witness: (v{i}*v{j})*v{k} != v{i}*(v{j}*v{k})"
                            ));
                        }
                    }
                }
            }
            Err("all 512 basis triples associate".to_string())
        })(),
    );

    r.record(
        "octonion-torus-symbolic",
        "the coordinate characters define an algebra automorphism preserving N, for all torus parameters",
        (|| {
            // Clear denominators: with psi(u)_i = u_i * z1^(p_i+1) * z2^(q_i+1)
            // (all exponents nonnegative), the automorphism property of the
            // character action is equivalent to the polynomial identities
            //   psi(u)*psi(v) = (z1*z2) * psi(u*v)
            //   N(psi(u))     = (z1*z2)^2 * N(u)
            // checked here exactly in 18 variables.
            let mut names: Vec<String> = (1..=8)
                .map(|i| format!("u{i}"))
                .chain((1..=8).map(|i| format!("v{i}")))
                .collect();
            names.push("z1".to_string());
            names.push("z2".to_string());
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let ring = VarSet::new(&refs);
            let z1 = pvar(&ring, "z1");
            let z2 = pvar(&ring, "z2");
            let psi = |el: &OctonionElement<MultiPoly>| -> OctonionElement<MultiPoly> {
                OctonionElement::from_coords(std::array::from_fn(|i| {
                    let ch = coordinate_character(i + 1);
                    let mut c = el.coords[i].clone();
                    for _ in 0..(ch.z1_exp + 1) {
                        c = c.mul(&z1);
                    }
                    for _ in 0..(ch.z2_exp + 1) {
                        c = c.mul(&z2);
                    }
                    c
                }))
            };
            let us = symbolic_element(&ring, "u");
            let vs = symbolic_element(&ring, "v");
            let zz = z1.mul(&z2);
            let mult = psi(&us).multiply(&psi(&vs)) == psi(&us.multiply(&vs)).scale(&zz);
            let norm = psi(&us).norm() == us.norm().mul(&zz).mul(&zz);
            ensure(
                mult && norm,
                "cleared-denominator identities hold exactly, so every torus point acts by norm-preserving automorphisms",
                format!("multiplicativity {mult}, norm invariance {norm}"),
            )
        })(),
    );

    r.record(
        "octonion-sampled-identities",
        "random elements: N(u*v) = N(u)*N(v), polarization, and torus equivariance at random parameters",
        sampling::for_each_sample(config.samples, config.seed, |_i, rng| {
            let u = sampling::random_octonion(rng);
            let v = sampling::random_octonion(rng);
            if u.multiply(&v).norm() != u.norm() * v.norm() {
                return Err("norm fails to be multiplicative".to_string());
            }
            let pol = u.add(&v).norm() - u.norm() - v.norm();
            if u.bilinear(&v) != pol {
                return Err("polarization identity fails".to_string());
            }
            let z1 = sampling::random_nonzero_rational(rng);
            let z2 = sampling::random_nonzero_rational(rng);
            let act = |x: &OctonionElement<Rational>| x.torus_act(&z1, &z2).map_err(s);
            let pu = act(&u)?;
            let pv = act(&v)?;
            if pu.multiply(&pv) != act(&u.multiply(&v))? {
                return Err(format!("torus action at ({z1}, {z2}) is not multiplicative"));
            }
            if pu.norm() != u.norm() {
                return Err(format!("torus action at ({z1}, {z2}) changes the norm"));
            }
            Ok(())
        })
        .map(|()| format!("{} random pairs checked", config.samples)),
    );
}

// ---------------------------------------------------------------------------
// triality scope
// ---------------------------------------------------------------------------

fn tangent_ring() -> VarSet {
    let names: Vec<String> = (1..=9).map(|i| format!("w{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    VarSet::new(&refs)
}

fn symbolic_tangent(ring: &VarSet) -> TangentVector<MultiPoly> {
    TangentVector::from_coords(std::array::from_fn(|i| pvar(ring, &format!("w{}", i + 1))))
}

fn map_ring() -> VarSet {
    VarSet::new(&["a", "b", "c", "d", "z"])
}

fn symbolic_map(ring: &VarSet) -> TrialitySymmetricMap<MultiPoly> {
    TrialitySymmetricMap {
        a: pvar(ring, "a"),
        b: pvar(ring, "b"),
        c: pvar(ring, "c"),
        d: pvar(ring, "d"),
        z: pvar(ring, "z"),
    }
}

#[allow(clippy::redundant_closure_call)]
fn triality_checks(r: &mut Runner) {
    use S3Generator::{Sigma, Tau};

    let ring = tangent_ring();
    let w = symbolic_tangent(&ring);

    r.record(
        "triality-generator-relations",
        "tau^3 = id, sigma^2 = id, sigma*tau*sigma = tau^2 on the 9-dimensional piece",
        {
            let tau3 = s3_act(&[Tau, Tau, Tau], &w) == w;
            let sigma2 = s3_act(&[Sigma, Sigma], &w) == w;
            let braid = s3_act(&[Sigma, Tau, Sigma], &w) == s3_act(&[Tau, Tau], &w);
            let matrices = action_matrix(&[Tau, Tau, Tau]) == RationalMatrix::identity(9)
                && action_matrix(&[Sigma, Sigma]) == RationalMatrix::identity(9)
                && action_matrix(&[Sigma, Tau, Sigma]) == action_matrix(&[Tau, Tau]);
            ensure(
                tau3 && sigma2 && braid && matrices,
                "relations hold on a generic symbolic vector and as 9x9 matrices",
                format!("tau^3 {tau3}, sigma^2 {sigma2}, braid {braid}, matrices {matrices}"),
            )
        },
    );

    r.record(
        "triality-fixed-locus",
        "Fix(tau) is exactly the 5-parameter family of symmetric compatible maps",
        (|| {
            let m_tau = action_matrix(&[Tau]);
            let mut rows = Vec::new();
            for i in 0..9 {
                let mut row = Vec::new();
                for j in 0..9 {
                    let mut entry = m_tau.get(i, j).clone();
                    if i == j {
                        entry -= rat(1);
                    }
                    row.push(entry);
                }
                rows.push(row);
            }
            let null = RationalMatrix::from_rows(rows).nullspace();
            let dim = null.len();
            let embed_cols: Vec<[Rational; 9]> = (0..5)
                .map(|k| {
                    let mut vals = [rat(0), rat(0), rat(0), rat(0), rat(0)];
                    vals[k] = rat(1);
                    let [a, b, c, d, z] = vals;
                    embed(&TrialitySymmetricMap { a, b, c, d, z }).coords()
                })
                .collect();
            let embed_mat = RationalMatrix::from_rows(
                (0..9)
                    .map(|i| (0..5).map(|k| embed_cols[k][i].clone()).collect())
                    .collect(),
            );
            let null_mat = RationalMatrix::from_rows(
                (0..9)
                    .map(|i| (0..dim).map(|k| null[k][i].clone()).collect())
                    .collect(),
            );
            ensure(
                dim == 5 && null_mat.same_column_span(&embed_mat),
                "ker(M_tau - I) has dimension 5 and equals the embedded family",
                format!("fixed space has dimension {dim}"),
            )
        })(),
    );

    let mring = map_ring();
    let sym = symbolic_map(&mring);
    let emb = embed(&sym);

    r.record(
        "triality-symmetric-vectors-fixed",
        "embedded symmetric maps are fixed by the full S3 action",
        ensure(
            s3_act(&[Tau], &emb) == emb && s3_act(&[Sigma], &emb) == emb,
            "tau and sigma both fix a generic embedded map symbolically",
            "the embedded family is not S3-fixed",
        ),
    );

    r.record(
        "triality-embedding-recovery",
        "recovering (a,b,c,d,z) inverts the embedding; perturbed vectors are rejected",
        {
            let recovered = is_triality_symmetric(&emb);
            let round_trip = recovered.as_ref() == Some(&sym);
            let mut bad = emb.clone();
            bad.b1 = bad.b1.add(&MultiPoly::one(&mring));
            let rejected = is_triality_symmetric(&bad).is_none();
            ensure(
                round_trip && rejected,
                "generic round trip succeeds and a perturbed vector is rejected",
                format!("round trip {round_trip}, rejection {rejected}"),
            )
        },
    );

    r.record(
        "triality-frame-ideal",
        "the pairwise products of the frame rows generate the ideal <a^2 + b*d, a*c + d^2, a*d - b*c>",
        (|| {
            let frame = graph_frame(&sym);
            let entries: Vec<MultiPoly> = frame
                .product_entries()
                .into_iter()
                .filter(|p| !MultiPoly::is_zero(p))
                .collect();
            let quadrics = vec![
                MultiPoly::parse(&mring, "a^2 + b*d").map_err(s)?,
                MultiPoly::parse(&mring, "a*c + d^2").map_err(s)?,
                MultiPoly::parse(&mring, "a*d - b*c").map_err(s)?,
            ];
            let order = TermOrder::degrevlex(&mring, &["a", "b", "c", "d", "z"]).map_err(s)?;
            let equal = ideal_equal(&entries, &quadrics, &order);
            let gb_entries = groebner_basis(&entries, &order);
            let gb_quadrics = groebner_basis(&quadrics, &order);
            ensure(
                equal && gb_entries == gb_quadrics,
                format!(
                    "{} nonzero product entries reduce to the same {}-element reduced basis",
                    entries.len(),
                    gb_quadrics.len()
                ),
                "the frame-product ideal differs from the three quadrics",
            )
        })(),
    );

    r.record(
        "triality-frame-isotropy",
        "the frame lies in the null subalgebra exactly when the three quadrics vanish",
        (|| {
            let mut isotropic = Vec::new();
            for label in OrbitLabel::all() {
                let rep = orbit_representative(label);
                let frame = graph_frame(&rep);
                if !frame.rows_in_v() {
                    return Err(format!("{} frame leaves the ambient space", label.name()));
                }
                let quadrics_vanish = cubic_of_map(&rep)
                    .minor_forms()
                    .iter()
                    .all(Scalar::is_zero);
                if frame.is_g2_isotropic() != quadrics_vanish {
                    return Err(format!(
                        "{}: isotropy {} but quadric vanishing {}",
                        label.name(),
                        frame.is_g2_isotropic(),
                        quadrics_vanish
                    ));
                }
                if frame.is_graph() != quadrics_vanish {
                    return Err(format!(
                        "{}: graph condition {} but quadric vanishing {}",
                        label.name(),
                        frame.is_graph(),
                        quadrics_vanish
                    ));
                }
                if frame.is_g2_isotropic() {
                    isotropic.push(label.name());
                }
            }
            Ok(format!(
                "isotropic exactly on {} among the five stratum representatives",
                isotropic.join(", ")
            ))
        })(),
    );
}

// ---------------------------------------------------------------------------
// orbits scope
// ---------------------------------------------------------------------------

#[allow(clippy::redundant_closure_call)]
fn orbit_checks(config: &VerifyConfig, r: &mut Runner) {
    r.record(
        "orbits-representatives",
        "each stratum representative classifies to its own stratum under both classifiers",
        (|| {
            for label in OrbitLabel::all() {
                let rep = orbit_representative(label);
                let full = classify_full(&rep);
                if full.label != label {
                    return Err(format!(
                        "representative of {} classified as {}",
                        label.name(),
                        full.label.name()
                    ));
                }
                if !full.agree() {
                    return Err(format!(
                        "classifiers disagree on the representative of {}",
                        label.name()
                    ));
                }
            }
            Ok("all five representatives land in their own stratum".to_string())
        })(),
    );

    r.record(
        "orbits-branch-witnesses",
        "hand-picked maps hit every classifier branch with the expected invariants",
        (|| {
            // (a, b, c, d, z) -> (label, root profile of the associated cubic)
            type BranchCase = ([i64; 5], OrbitLabel, Option<&'static [u32]>);
            let cases: &[BranchCase] = &[
                ([0, 0, 0, 0, 1], OrbitLabel::O0, None),
                ([0, 1, 1, 0, 0], OrbitLabel::O1, Some(&[1, 1, 1])),
                ([0, 1, 0, 1, 0], OrbitLabel::O1, Some(&[1, 1, 1])),
                ([1, 0, 0, 0, 0], OrbitLabel::O2, Some(&[2, 1])),
                ([0, 1, 0, 0, 0], OrbitLabel::O3, Some(&[3])),
                ([0, 0, 1, 0, 0], OrbitLabel::O3, Some(&[3])),
                ([0, 0, 0, 0, 0], OrbitLabel::O5, None),
            ];
            for (coords, expected, profile) in cases {
                let [a, b, c, d, z] = coords.map(rat);
                let map = TrialitySymmetricMap { a, b, c, d, z };
                let full = classify_full(&map);
                if full.label != *expected || !full.agree() {
                    return Err(format!(
                        "map {coords:?} classified as {} (multiplicity route {}), expected {}",
                        full.label.name(),
                        full.by_multiplicity.name(),
                        expected.name()
                    ));
                }
                let got_profile = full.root_profile.as_deref();
                if got_profile != *profile {
                    return Err(format!(
                        "map {coords:?} has root profile {got_profile:?}, expected {profile:?}"
                    ));
                }
            }
            Ok(format!("{} witness maps hit the expected branches", cases.len()))
        })(),
    );

    r.record(
        "orbits-classifier-agreement",
        "on random maps, the rank/discriminant classifier and the root-multiplicity classifier agree",
        (|| {
            sampling::for_each_sample(config.samples, config.seed, |_i, rng| {
                let map = sampling::random_map(rng);
                let full = classify_full(&map);
                if full.agree() {
                    Ok(())
                } else {
                    Err(format!(
                        "classifiers disagree: {} vs {}",
                        full.label.name(),
                        full.by_multiplicity.name()
                    ))
                }
            })?;
            let labels = sampling::classify_batch(&sampling::random_maps(
                config.samples,
                config.seed,
            ));
            let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
            for label in &labels {
                *counts.entry(label.name()).or_insert(0) += 1;
            }
            if config.samples >= 100 {
                for label in OrbitLabel::all() {
                    if !counts.contains_key(label.name()) {
                        return Err(format!(
                            "sampling never produced a map in {}",
                            label.name()
                        ));
                    }
                }
            }
            Ok(format!("all samples agree; stratum counts {counts:?}"))
        })(),
    );

    r.record(
        "orbits-invariance",
        "classification is invariant under global scaling and the torus action",
        sampling::for_each_sample(config.samples, config.seed ^ 1, |_i, rng| {
            let map = sampling::random_map(rng);
            let base = classify_map(&map);
            let k = sampling::random_nonzero_rational(rng);
            let scaled = TrialitySymmetricMap {
                a: &map.a * &k,
                b: &map.b * &k,
                c: &map.c * &k,
                d: &map.d * &k,
                z: &map.z * &k,
            };
            if classify_map(&scaled) != base {
                return Err(format!(
                    "scaling by {k} moved a map out of {}",
                    base.name()
                ));
            }
            let m1 = sampling::random_nonzero_rational(rng);
            let m2 = sampling::random_nonzero_rational(rng);
            let twisted = torus_scale(&scaled, &m1, &m2);
            if classify_map(&twisted) != base {
                return Err(format!(
                    "torus twist by ({m1}, {m2}) moved a map out of {}",
                    base.name()
                ));
            }
            Ok(())
        })
        .map(|()| format!("{} random maps stayed in their stratum", config.samples)),
    );

    r.record(
        "orbits-weight-table",
        "coordinate weights, the discriminant weight, and the quadric weights are as stated",
        (|| {
            let weights = coordinate_weights();
            let expected_alpha: [(&str, [i64; 2]); 5] = [
                ("a", [-1, -1]),
                ("b", [0, -1]),
                ("c", [-3, -1]),
                ("d", [-2, -1]),
                ("z", [-3, -2]),
            ];
            let expected_t: [(&str, [i64; 2]); 5] = [
                ("a", [0, -1]),
                ("b", [1, -2]),
                ("c", [-2, 1]),
                ("d", [-1, 0]),
                ("z", [-1, -1]),
            ];
            for ((name, wv), (ename, ecoords)) in weights.iter().zip(expected_alpha) {
                if *name != ename || wv.to_basis(Basis::Alpha).coords() != ecoords {
                    return Err(format!(
                        "weight of {name} is {:?} in the simple-root basis, expected {ecoords:?}",
                        wv.to_basis(Basis::Alpha).coords()
                    ));
                }
            }
            for ((name, wv), (ename, ecoords)) in weights.iter().zip(expected_t) {
                if *name != ename || wv.to_basis(Basis::T).coords() != ecoords {
                    return Err(format!(
                        "weight of {name} is {:?} in the torus basis, expected {ecoords:?}",
                        wv.to_basis(Basis::T).coords()
                    ));
                }
            }
            let cubic_weights: Vec<(&str, WeightVector)> = weights
                .iter()
                .filter(|(n, _)| *n != "z")
                .map(|(n, w)| (*n, *w))
                .collect();
            let disc_weight = weight_of(&discriminant_poly(), &cubic_weights).map_err(s)?;
            if disc_weight.to_basis(Basis::Alpha).coords() != [-6, -4] {
                return Err(format!(
                    "discriminant weight {:?}, expected [-6, -4]",
                    disc_weight.to_basis(Basis::Alpha).coords()
                ));
            }
            let mut quadric_weights: Vec<[i64; 2]> = minor_ideal_generators()
                .iter()
                .map(|g| {
                    weight_of(g, &cubic_weights)
                        .map(|w| w.to_basis(Basis::Alpha).coords())
                        .map_err(s)
                })
                .collect::<Result<_, _>>()?;
            quadric_weights.sort();
            if quadric_weights != vec![[-4, -2], [-3, -2], [-2, -2]] {
                return Err(format!(
                    "quadric weights {quadric_weights:?}, expected [[-4,-2], [-3,-2], [-2,-2]]"
                ));
            }
            Ok("five coordinate weights, the degree-(−6,−4) discriminant, and all three quadrics check out in both bases".to_string())
        })(),
    );
}

// ---------------------------------------------------------------------------
// classes scope
// ---------------------------------------------------------------------------

#[allow(clippy::redundant_closure_call)]
fn class_checks(config: &VerifyConfig, corrupt: bool, r: &mut Runner) {
    r.record(
        "classes-closed-forms",
        "the five closed-form classes expand to their frozen polynomials in both bases",
        (|| {
            let frozen: [(OrbitLabel, &str, &str); 5] = [
                (OrbitLabel::O0, "1", "1"),
                (OrbitLabel::O1, "-3*a1 - 2*a2", "-t1 - t2"),
                (
                    OrbitLabel::O2,
                    "18*a1^2 + 24*a1*a2 + 8*a2^2",
                    "2*t1^2 + 4*t1*t2 + 2*t2^2",
                ),
                (
                    OrbitLabel::O3,
                    "-18*a1^3 - 39*a1^2*a2 - 27*a1*a2^2 - 6*a2^3",
                    "-3*t1^2*t2 - 3*t1*t2^2",
                ),
                (
                    OrbitLabel::O5,
                    "-18*a1^4*a2 - 45*a1^3*a2^2 - 40*a1^2*a2^3 - 15*a1*a2^4 - 2*a2^5",
                    "2*t1^4*t2 - 3*t1^3*t2^2 - 3*t1^2*t2^3 + 2*t1*t2^4",
                ),
            ];
            for (label, alpha_text, t_text) in frozen {
                let got_alpha = classes::orbit_class(label, Basis::Alpha).to_string();
                if got_alpha != alpha_text {
                    return Err(format!(
                        "{} in the simple-root basis is {got_alpha}, expected {alpha_text}",
                        label.name()
                    ));
                }
                let got_t = classes::orbit_class(label, Basis::T).to_string();
                if got_t != t_text {
                    return Err(format!(
                        "{} in the torus basis is {got_t}, expected {t_text}",
                        label.name()
                    ));
                }
            }
            Ok("ten frozen expansions match".to_string())
        })(),
    );

    r.record(
        "classes-degree-is-codim",
        "each class is homogeneous of degree equal to the stratum codimension",
        (|| {
            for label in OrbitLabel::all() {
                let class = classes::orbit_class(label, Basis::T);
                if class.total_degree() as usize != label.codim() {
                    return Err(format!(
                        "{} has degree {}, expected codimension {}",
                        label.name(),
                        class.total_degree(),
                        label.codim()
                    ));
                }
            }
            Ok("degrees 0, 1, 2, 3, 5 as expected".to_string())
        })(),
    );

    r.record(
        "classes-oracle-agreement",
        "every closed form equals the class recomputed from scratch (hyperplane, complete intersection, or Groebner multidegree route)",
        (|| {
            let mut routes = Vec::new();
            for label in OrbitLabel::all() {
                for basis in [Basis::Alpha, Basis::T] {
                    let closed = classes::orbit_class(label, basis);
                    let oracle = orbit_class_oracle(label, basis);
                    let mut oracle_class = oracle.class.clone();
                    if corrupt && label == OrbitLabel::O2 {
                        // Deliberate sign flip used to prove the comparison
                        // can fail; see run_with_corruption.
                        oracle_class = oracle_class.neg();
                    }
                    if closed != oracle_class {
                        return Err(format!(
                            "{}: closed form {} but independent route ({}) gives {}",
                            label.name(),
                            closed,
                            oracle.route,
                            oracle_class
                        ));
                    }
                    if basis == Basis::Alpha {
                        routes.push(format!("{}: {}", label.name(), oracle.route));
                    }
                }
            }
            Ok(routes.join("; "))
        })(),
    );

    r.record(
        "classes-order-independence",
        "the codim-3 multidegree is the same under four different term orders",
        (|| {
            let vars = cubic_vars();
            let weights: Vec<(&str, WeightVector)> = coordinate_weights()
                .into_iter()
                .filter(|(n, _)| *n != "z")
                .collect();
            let ideal = GradedIdeal::new(minor_ideal_generators(), &weights).map_err(s)?;
            let orders = [
                TermOrder::degrevlex(&vars, &["a", "b", "c", "d"]).map_err(s)?,
                TermOrder::degrevlex(&vars, &["d", "c", "b", "a"]).map_err(s)?,
                TermOrder::lex(&vars, &["a", "b", "c", "d"]).map_err(s)?,
                TermOrder::lex(&vars, &["d", "c", "b", "a"]).map_err(s)?,
            ];
            let mut first: Option<MultiPoly> = None;
            let mut gb_sizes = Vec::new();
            for order in &orders {
                let report = ideal.multidegree(order, Basis::Alpha).map_err(s)?;
                if report.codim != 2 {
                    return Err(format!(
                        "codim {} under {}, expected 2",
                        report.codim,
                        order.describe()
                    ));
                }
                gb_sizes.push(report.groebner_basis.len());
                match &first {
                    None => first = Some(report.multidegree.clone()),
                    Some(f) => {
                        if *f != report.multidegree {
                            return Err(format!(
                                "multidegree under {} differs from the first order",
                                order.describe()
                            ));
                        }
                    }
                }
            }
            if gb_sizes != vec![3, 3, 4, 4] {
                return Err(format!("reduced-basis sizes {gb_sizes:?}, expected [3, 3, 4, 4]"));
            }
            // The elimination order exposes the resultant-style generator.
            let lex_gb = groebner_basis(
                &minor_ideal_generators(),
                &TermOrder::lex(&vars, &["a", "b", "c", "d"]).map_err(s)?,
            );
            if !lex_gb.iter().any(|g| g.to_string() == "b*c^2 + d^3") {
                return Err("elimination order did not expose b*c^2 + d^3".to_string());
            }
            Ok(format!(
                "same multidegree under 4 orders; reduced-basis sizes {gb_sizes:?}; eliminant b*c^2 + d^3 found"
            ))
        })(),
    );

    r.record(
        "classes-locus-dictionary",
        "substituting t_i -> -x_i into the three relevant classes gives the degeneracy-locus polynomials",
        (|| {
            for rank in [2usize, 1, 0] {
                let from_orbit = classes::locus_from_orbit(rank);
                let direct = classes::locus_class(rank).in_roots;
                if from_orbit != direct {
                    return Err(format!(
                        "rank {rank}: substitution gives {from_orbit}, direct form is {direct}"
                    ));
                }
            }
            Ok("ranks 2, 1, 0 all agree".to_string())
        })(),
    );

    r.record(
        "classes-chern-expressions",
        "each locus polynomial is symmetric and its Chern form substitutes back to the root form",
        (|| {
            let chern = classes::chern_vars();
            let roots = classes::root_vars();
            let e1 = MultiPoly::parse(&roots, "x1 + x2").map_err(s)?;
            let e2 = MultiPoly::parse(&roots, "x1*x2").map_err(s)?;
            for rank in [2usize, 1, 0] {
                let locus = classes::locus_class(rank);
                let via_to_chern = to_chern(&locus.in_roots).map_err(s)?;
                if via_to_chern != locus.in_chern {
                    return Err(format!("rank {rank}: stored Chern form disagrees with to_chern"));
                }
                let back = locus
                    .in_chern
                    .substitute(&[("c1", e1.clone()), ("c2", e2.clone())], &roots)
                    .map_err(s)?;
                if back != locus.in_roots {
                    return Err(format!(
                        "rank {rank}: Chern form does not substitute back to the root form"
                    ));
                }
                let _ = chern; // both var sets pinned above
            }
            Ok("symmetric round trips hold for all three ranks".to_string())
        })(),
    );

    r.record(
        "classes-locus-numeric",
        "at random Chern roots, evaluating the root form and the Chern form agrees",
        sampling::for_each_sample(config.samples, config.seed ^ 2, |_i, rng| {
            let x1 = sampling::random_rational(rng);
            let x2 = sampling::random_rational(rng);
            let c1 = &x1 + &x2;
            let c2 = &x1 * &x2;
            for rank in [2usize, 1, 0] {
                let locus = classes::locus_class(rank);
                let via_roots = locus
                    .in_roots
                    .eval_rational(&[("x1", x1.clone()), ("x2", x2.clone())])
                    .map_err(s)?;
                let via_chern = classes::evaluate_locus(rank, &c1, &c2);
                if via_roots != via_chern {
                    return Err(format!(
                        "rank {rank} disagrees at x1 = {x1}, x2 = {x2}: {via_roots} vs {via_chern}"
                    ));
                }
            }
            Ok(())
        })
        .map(|()| format!("{} random evaluation points checked", config.samples)),
    );
}

// ---------------------------------------------------------------------------
// weyl scope
// ---------------------------------------------------------------------------

#[allow(clippy::redundant_closure_call)]
fn weyl_checks(r: &mut Runner) {
    let group = WeylGroup::get();
    let t_vars = Basis::T.var_set();

    r.record(
        "weyl-group-structure",
        "the reflection group has order 12, s^2 = t^2 = (s*t)^6 = e, and 1,2,2,2,2,2,1 elements by length",
        (|| {
            if group.order() != 12 {
                return Err(format!("group order {}", group.order()));
            }
            let e = group.identity();
            for word in ["ss", "tt", "stststststst"] {
                let w = group.element_from_word(&parse_word(word).map_err(s)?);
                if w != e {
                    return Err(format!("word {word} is not trivial"));
                }
            }
            let mut by_length = [0usize; 7];
            for w in group.elements() {
                by_length[w.length()] += 1;
            }
            if by_length != [1, 2, 2, 2, 2, 2, 1] {
                return Err(format!("length distribution {by_length:?}"));
            }
            let longest = group.longest();
            if longest.length() != 6 || longest.canonical_word().len() != 6 {
                return Err("longest element does not have length 6".to_string());
            }
            Ok("order 12, defining relations, and length distribution all confirmed".to_string())
        })(),
    );

    r.record(
        "weyl-rank-function",
        "the locus elements e, tst, tstst realize ranks 2, 1, 0, with r(2,2) = 0, 1, 2 respectively",
        (|| {
            let tst = group.element_from_word(&parse_word("tst").map_err(s)?);
            if tst.permutation() != [3, 6, 1, 4, 7, 2, 5] {
                return Err(format!("tst permutes the basis as {:?}", tst.permutation()));
            }
            let expected: [(usize, &str, usize, usize); 3] = [
                (2, "e", 0, 0),
                (1, "tst", 3, 1),
                (0, "tstst", 5, 2),
            ];
            for (rank, word, length, r22) in expected {
                let w = group.locus_element(rank);
                if crate::weyl::word_to_string(w.canonical_word()) != word {
                    return Err(format!(
                        "locus element for rank {rank} is {}",
                        crate::weyl::word_to_string(w.canonical_word())
                    ));
                }
                if w.length() != length {
                    return Err(format!("locus element {word} has length {}", w.length()));
                }
                if w.rank(2, 2) != r22 {
                    return Err(format!("r_{word}(2,2) = {}, expected {r22}", w.rank(2, 2)));
                }
                // The table accessor must agree with the defining count.
                let table = w.rank_table();
                for q in 1..=7usize {
                    for p in 1..=7usize {
                        if table[q - 1][p - 1] != w.rank(q, p) {
                            return Err(format!("rank table disagrees at ({q}, {p}) for {word}"));
                        }
                    }
                }
            }
            Ok("permutations, lengths, and rank values all match".to_string())
        })(),
    );

    r.record(
        "weyl-simple-reflections",
        "each simple reflection negates its own root and permutes the other five positive roots",
        (|| {
            let roots = positive_roots();
            if roots.len() != 6 {
                return Err(format!("{} positive roots", roots.len()));
            }
            for gen in [Gen::S, Gen::T] {
                let own = gen.simple_root();
                if reflect(gen, &own) != own.neg() {
                    return Err(format!("{} does not negate its own root", gen.letter()));
                }
                let mut others: Vec<[i64; 2]> = roots
                    .iter()
                    .filter(|r| **r != own)
                    .map(|r| reflect(gen, r).to_basis(Basis::Alpha).coords())
                    .collect();
                others.sort();
                let mut expected: Vec<[i64; 2]> = roots
                    .iter()
                    .filter(|r| **r != own)
                    .map(|r| r.to_basis(Basis::Alpha).coords())
                    .collect();
                expected.sort();
                if others != expected {
                    return Err(format!(
                        "{} does not permute the remaining positive roots",
                        gen.letter()
                    ));
                }
            }
            Ok("both simple reflections act as expected on the positive system".to_string())
        })(),
    );

    r.record(
        "weyl-longest-chain",
        "the reflection chain of the longest word runs through each positive root exactly once",
        (|| {
            let chain = root_chain(group.longest().canonical_word());
            let mut got: Vec<[i64; 2]> = chain
                .iter()
                .map(|r| r.to_basis(Basis::Alpha).coords())
                .collect();
            got.sort();
            let mut expected: Vec<[i64; 2]> = positive_roots()
                .iter()
                .map(|r| r.to_basis(Basis::Alpha).coords())
                .collect();
            expected.sort();
            ensure(
                got == expected,
                "the six chain roots are exactly the six positive roots",
                format!("chain roots {got:?}"),
            )
        })(),
    );

    r.record(
        "weyl-restriction-consistency",
        "restrictions are reduced-word independent, vanish above the point's length, are 1 at the bottom, and multiply out the inversion roots on the diagonal",
        (|| {
            let one = MultiPoly::one(&t_vars);
            let mut words_checked = 0usize;
            for v in group.elements() {
                if billey_restriction(group.identity(), v) != one {
                    return Err(format!(
                        "identity class restricts to {} at some point",
                        billey_restriction(group.identity(), v)
                    ));
                }
                let v_words = group.all_reduced_words(v);
                for w in group.elements() {
                    let value = billey_restriction(w, v);
                    if w.length() > v.length() && !value.is_zero() {
                        return Err(format!(
                            "a class of length {} fails to vanish at a point of length {}",
                            w.length(),
                            v.length()
                        ));
                    }
                    for word in &v_words {
                        if billey_restriction_with_word(w, word) != value {
                            return Err("restriction depends on the reduced word".to_string());
                        }
                        words_checked += 1;
                    }
                }
                let mut diagonal = MultiPoly::one(&t_vars);
                for root in v.inversion_roots() {
                    diagonal = diagonal.mul(&root.to_basis(Basis::T).as_poly());
                }
                if billey_restriction(v, v) != diagonal {
                    return Err("diagonal restriction differs from the inversion-root product".to_string());
                }
            }
            Ok(format!(
                "all 144 pairs consistent across {words_checked} reduced-word evaluations"
            ))
        })(),
    );

    r.record(
        "weyl-pinning-unique",
        "exactly one of the four localization conventions reproduces the two reference classes",
        (|| {
            let candidates = pin_candidates();
            let matches: Vec<String> = candidates
                .iter()
                .filter(|(_, ok)| *ok)
                .map(|(c, _)| {
                    format!(
                        "point of length {} with {} signs",
                        c.point.length(),
                        c.sign.as_str()
                    )
                })
                .collect();
            if matches.len() != 1 {
                return Err(format!("{} conventions match: {matches:?}", matches.len()));
            }
            let pinned = pinned_convention();
            ensure(
                pinned.point.length() == 6 && pinned.sign == SignConvention::NegativeRoots,
                format!("unique convention: {}", matches[0]),
                format!(
                    "pinned convention is length {} with {} signs",
                    pinned.point.length(),
                    pinned.sign.as_str()
                ),
            )
        })(),
    );

    r.record(
        "weyl-restrictions-match-classes",
        "under the pinned convention, the three locus elements restrict to the three locus classes",
        (|| {
            let pinned = pinned_convention();
            let raw = billey_restriction(
                group.element_from_word(&parse_word("tst").map_err(s)?),
                group.longest(),
            );
            if raw.to_string() != "3*t1^2*t2 + 3*t1*t2^2" {
                return Err(format!("raw restriction of tst at the top point is {raw}"));
            }
            for rank in [2usize, 1, 0] {
                let w = group.locus_element(rank);
                let got = restriction_with_convention(w, &pinned.point, pinned.sign);
                let expected = classes::orbit_class(classes::orbit_for_rank(rank), Basis::T);
                if got != expected {
                    return Err(format!(
                        "rank {rank}: localization gives {got}, class formula gives {expected}"
                    ));
                }
            }
            Ok("raw value frozen and all three pinned restrictions equal the classes".to_string())
        })(),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config() -> VerifyConfig {
        VerifyConfig {
            scope: Scope::All,
            samples: 25,
            seed: 0,
        }
    }

    #[test]
    fn full_suite_passes_on_a_quick_run() {
        let report = run(&quick_config());
        let failures: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        assert!(report.all_passed, "failed checks: {failures:?}");
        assert_eq!(report.passed, report.checks.len());
        assert!(report.checks.len() >= 25, "expected a full suite");
    }

    #[test]
    fn scopes_partition_the_suite() {
        let full = run(&quick_config());
        let mut total = 0;
        for scope in [
            Scope::Octonion,
            Scope::Triality,
            Scope::Orbits,
            Scope::Classes,
            Scope::Weyl,
        ] {
            let config = VerifyConfig {
                scope,
                ..quick_config()
            };
            let partial = run(&config);
            assert!(partial.all_passed, "scope {scope} failed");
            assert!(!partial.checks.is_empty(), "scope {scope} is empty");
            total += partial.checks.len();
        }
        assert_eq!(total, full.checks.len());
    }

    #[test]
    fn corruption_is_detected() {
        let report = run_with_corruption(&quick_config());
        assert!(!report.all_passed);
        assert_eq!(report.failed, 1);
        let bad = report.checks.iter().find(|c| !c.passed).unwrap();
        assert_eq!(bad.name, "classes-oracle-agreement");
        assert!(bad.detail.contains("independent route"));
    }

    #[test]
    fn report_serializes_and_renders() {
        let config = VerifyConfig {
            scope: Scope::Weyl,
            samples: 5,
            seed: 7,
        };
        let report = run(&config);
        let json = serde_json::to_string(&report).expect("report serializes");
        assert!(json.contains("\"scope\":\"weyl\""));
        assert!(json.contains("weyl-pinning-unique"));
        let text = report.render_text();
        assert!(text.contains("[PASS] weyl-group-structure"));
        assert!(text.contains("seed 7"));
    }

    #[test]
    fn scope_parsing_round_trips() {
        for scope in [
            Scope::All,
            Scope::Octonion,
            Scope::Triality,
            Scope::Orbits,
            Scope::Classes,
            Scope::Weyl,
        ] {
            assert_eq!(scope.as_str().parse::<Scope>().unwrap(), scope);
        }
        assert!("nonsense".parse::<Scope>().is_err());
    }
}
