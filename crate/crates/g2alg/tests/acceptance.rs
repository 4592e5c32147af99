//! End-to-end acceptance gate: ten independent criteria, one test per
//! criterion. Each test checks a headline fact of the library with
//! exact arithmetic and, wherever one exists, against an independent
//! computational route. On success every test prints a single `[PASS]`
//! line (visible with `--nocapture`); any assertion failure marks that
//! criterion failed without affecting the others.

use std::collections::BTreeMap;
use std::time::Instant;

use g2alg::classes::{chern_vars, locus_class, locus_from_orbit, orbit_class, orbit_for_rank};
use g2alg::exactalg::{rat, weight_of, Basis, MultiPoly, Rational, RationalMatrix, VarSet};
use g2alg::multidegree::{groebner_basis, ideal_equal, orbit_class_oracle, GradedIdeal, TermOrder};
use g2alg::octonion::{expected_gram_entry, pair_ring, symbolic_element, OctonionElement};
use g2alg::orbits::{
    classify_full, coordinate_weights, cubic_vars, discriminant_poly, minor_ideal_generators,
    orbit_representative, torus_scale, OrbitLabel,
};
use g2alg::triality::{action_matrix, embed, graph_frame, S3Generator, TrialitySymmetricMap};
use g2alg::verify::sampling::{random_map, random_nonzero_rational, sample_rng};
use g2alg::weyl::{
    billey_restriction, parse_word, pin_candidates, pinned_convention, restriction_with_convention,
    Gen, SignConvention, WeylGroup,
};

fn pass(name: &str, statement: &str) {
    println!("[PASS] {name} :: {statement}");
}

#[test]
fn criterion_01_norm_is_multiplicative_for_symbolic_elements() {
    let clock = Instant::now();
    let ring = pair_ring();
    let u = symbolic_element(&ring, "u");
    let v = symbolic_element(&ring, "v");
    let difference = u.multiply(&v).norm().sub(&u.norm().mul(&v.norm()));
    assert!(
        difference.is_zero(),
        "N(uv) - N(u)N(v) has {} surviving terms",
        difference.num_terms()
    );
    let elapsed = clock.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "norm identity took {elapsed:?}, budget is 5 s"
    );
    pass(
        "norm-multiplicative",
        "N(uv) = N(u)N(v) as a 16-variable polynomial identity",
    );
}

#[test]
fn criterion_02_bilinear_form_matches_the_stated_table() {
    for p in 1..=8usize {
        for q in 1..=8usize {
            let vp = OctonionElement::<Rational>::basis_element(p);
            let vq = OctonionElement::<Rational>::basis_element(q);
            assert_eq!(
                vp.bilinear(&vq),
                rat(expected_gram_entry(p, q)),
                "<v{p}, v{q}> is off the dual-pairing table"
            );
        }
    }
    let ring = pair_ring();
    let u = symbolic_element(&ring, "u");
    assert_eq!(
        u.bilinear(&u),
        u.norm().scale(&rat(2)),
        "<u, u> must equal 2 N(u) symbolically"
    );
    pass(
        "bilinear-table",
        "all 64 basis pairings match the dual-pairing table and <u, u> = 2 N(u)",
    );
}

#[test]
fn criterion_03_torus_rescaling_is_an_algebra_automorphism() {
    let ring = pair_ring();
    let u = symbolic_element(&ring, "u");
    let v = symbolic_element(&ring, "v");
    let uv = u.multiply(&v);
    let mut rng = sample_rng(0xA3, 0);
    for sample in 0..5 {
        let z1 = random_nonzero_rational(&mut rng);
        let z2 = random_nonzero_rational(&mut rng);
        let act = |e: &OctonionElement<MultiPoly>| {
            e.torus_act(&z1, &z2).expect("nonzero torus point")
        };
        assert!(
            act(&u).multiply(&act(&v)).sub(&act(&uv)).is_zero(),
            "sample {sample}: (t.u)(t.v) != t.(uv) at z1 = {z1}, z2 = {z2}"
        );
    }
    pass(
        "torus-automorphism",
        "five random torus points act as algebra automorphisms on fully symbolic u, v",
    );
}

#[test]
fn criterion_04_symmetry_relations_and_fixed_locus() {
    use S3Generator::{Sigma, Tau};
    let id = RationalMatrix::identity(9);
    assert_eq!(action_matrix(&[Tau, Tau, Tau]), id, "tau^3 = id fails");
    assert_eq!(action_matrix(&[Sigma, Sigma]), id, "sigma^2 = id fails");
    assert_eq!(
        action_matrix(&[Sigma, Tau, Sigma]),
        action_matrix(&[Tau, Tau]),
        "sigma tau sigma = tau^2 fails"
    );

    let tau_fixed = fixed_space(&[vec![Tau]]);
    let pair_fixed = fixed_space(&[vec![Tau], vec![Sigma]]);
    assert_eq!(tau_fixed.len(), 5, "Fix(tau) must have dimension 5");
    assert_eq!(pair_fixed.len(), 5, "Fix(sigma, tau) must have dimension 5");
    let family = embedded_family_columns();
    assert!(
        columns(&tau_fixed).same_column_span(&family),
        "Fix(tau) differs from the embedded symmetric family"
    );
    assert!(
        columns(&pair_fixed).same_column_span(&family),
        "Fix(sigma, tau) differs from the embedded symmetric family"
    );
    pass(
        "symmetry-structure",
        "tau^3 = sigma^2 = id, sigma tau sigma = tau^2, and Fix(tau) = Fix(sigma, tau) = the embedded family",
    );
}

#[test]
fn criterion_05_frame_products_generate_the_minor_ideal() {
    let clock = Instant::now();
    let ring = VarSet::new(&["a", "b", "c", "d", "z"]);
    let var = |name: &str| MultiPoly::var(&ring, name).expect("declared variable");
    let map = TrialitySymmetricMap {
        a: var("a"),
        b: var("b"),
        c: var("c"),
        d: var("d"),
        z: var("z"),
    };
    let frame = graph_frame(&map);
    let entries: Vec<MultiPoly> = frame
        .product_entries()
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    assert!(
        !entries.is_empty(),
        "frame products must produce nonzero vanishing conditions"
    );
    let quadrics = vec![
        MultiPoly::parse(&ring, "a^2 + b*d").expect("parses"),
        MultiPoly::parse(&ring, "a*c + d^2").expect("parses"),
        MultiPoly::parse(&ring, "a*d - b*c").expect("parses"),
    ];
    let order = TermOrder::degrevlex(&ring, &["a", "b", "c", "d", "z"]).expect("term order");
    assert!(
        ideal_equal(&entries, &quadrics, &order),
        "two-sided membership between the frame conditions and the three quadrics fails"
    );
    assert_eq!(
        groebner_basis(&entries, &order),
        groebner_basis(&quadrics, &order),
        "reduced bases of the two ideals differ"
    );
    let elapsed = clock.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "frame-ideal comparison took {elapsed:?}, budget is 5 s"
    );
    pass(
        "frame-ideal",
        "the frame-product conditions generate exactly <a^2 + b*d, a*c + d^2, a*d - b*c>",
    );
}

#[test]
fn criterion_06_reflection_group_data() {
    let group = WeylGroup::get();
    assert_eq!(group.order(), 12, "the group must have exactly 12 elements");
    let e = group.identity();
    let s = group.element_from_word(&[Gen::S]);
    let t = group.element_from_word(&[Gen::T]);
    assert_eq!(group.multiply(s, s), e, "s^2 = id fails");
    assert_eq!(group.multiply(t, t), e, "t^2 = id fails");
    let st = group.multiply(s, t).clone();
    let mut power = e.clone();
    for k in 1..=6usize {
        power = group.multiply(&power, &st).clone();
        if k < 6 {
            assert_ne!(&power, e, "(st)^{k} must not be the identity");
        }
    }
    assert_eq!(&power, e, "(st)^6 = id fails");

    let tst = group.element_from_word(&parse_word("tst").expect("parses"));
    assert_eq!(
        tst.permutation(),
        [3, 6, 1, 4, 7, 2, 5],
        "tst acts by the wrong basis permutation"
    );
    assert_eq!(tst.rank(2, 2), 1, "r(2,2) at tst must be 1");
    assert_eq!(e.length(), 0, "identity length");
    assert_eq!(tst.length(), 3, "length of tst");
    let tstst = group.element_from_word(&parse_word("tstst").expect("parses"));
    assert_eq!(tstst.length(), 5, "length of tstst");
    pass(
        "reflection-group",
        "order 12, the defining relations, the stated permutation for tst, r(2,2) = 1, and lengths 0/3/5",
    );
}

#[test]
fn criterion_07_closed_class_forms_match_the_multidegree_oracle() {
    let clock = Instant::now();
    for label in OrbitLabel::all() {
        for basis in [Basis::Alpha, Basis::T] {
            let closed = orbit_class(label, basis);
            let oracle = orbit_class_oracle(label, basis);
            assert_eq!(
                closed,
                oracle.class,
                "{} disagrees with the oracle route `{}`",
                label.name(),
                oracle.route
            );
        }
    }

    let cubic_weights: Vec<_> = coordinate_weights()
        .into_iter()
        .filter(|(name, _)| *name != "z")
        .collect();
    let disc_weight = weight_of(&discriminant_poly(), &cubic_weights)
        .expect("homogeneous discriminant")
        .to_basis(Basis::Alpha)
        .coords();
    assert_eq!(
        disc_weight,
        [-6, -4],
        "discriminant weight in the simple-root basis"
    );

    let vars = cubic_vars();
    let ideal =
        GradedIdeal::new(minor_ideal_generators(), &cubic_weights).expect("homogeneous generators");
    let orders = [
        TermOrder::degrevlex(&vars, &["a", "b", "c", "d"]).expect("term order"),
        TermOrder::lex(&vars, &["a", "b", "c", "d"]).expect("term order"),
        TermOrder::lex(&vars, &["d", "c", "b", "a"]).expect("term order"),
    ];
    let mut reference: Option<MultiPoly> = None;
    for order in &orders {
        let report = ideal.multidegree(order, Basis::Alpha).expect("multidegree");
        assert_eq!(
            report.codim,
            2,
            "minor-ideal codim under {}",
            order.describe()
        );
        match &reference {
            None => reference = Some(report.multidegree.clone()),
            Some(first) => assert_eq!(
                first,
                &report.multidegree,
                "multidegree changed under {}",
                order.describe()
            ),
        }
    }

    let elapsed = clock.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "class comparison took {elapsed:?}, budget is 30 s"
    );
    pass(
        "class-oracle",
        "all five closed forms equal the multidegree oracle in both bases; the discriminant weight and term-order independence hold",
    );
}

#[test]
fn criterion_08_locus_classes_match_both_presentations() {
    let chern = chern_vars();
    let expected_chern = [(2usize, "1"), (1, "3*c1*c2"), (0, "c1*c2*(9*c2 - 2*c1^2)")];
    for (rank, text) in expected_chern {
        let class = locus_class(rank);
        assert_eq!(
            locus_from_orbit(rank),
            class.in_roots,
            "rank-{rank} substitution route differs from the closed form in the roots"
        );
        let want = MultiPoly::parse(&chern, text).expect("parses");
        assert_eq!(
            class.in_chern, want,
            "rank-{rank} class in the Chern-class variables"
        );
    }
    pass(
        "locus-dictionary",
        "cone classes specialize to the stated degeneracy-locus formulas in roots and in c1, c2",
    );
}

#[test]
fn criterion_09_rank_one_locus_is_exactly_the_codim_three_orbit() {
    let mut counts: BTreeMap<&'static str, u32> = BTreeMap::new();
    for index in 0..1000u64 {
        let mut rng = sample_rng(0x59, index);
        let mut map = random_map(&mut rng);
        map.z = rat(0);
        check_rank_against_classifier(&map, &mut counts, &format!("random sample {index}"));
    }

    // Forced degenerate inputs: every orbit representative with the cone
    // coordinate dropped, plus a torus-twisted copy of each.
    for label in OrbitLabel::all() {
        let mut rep = orbit_representative(label);
        rep.z = rat(0);
        check_rank_against_classifier(
            &rep,
            &mut counts,
            &format!("{} representative", label.name()),
        );
        let mut twisted = torus_scale(&rep, &rat(2), &rat(-3));
        twisted.z = rat(0);
        check_rank_against_classifier(
            &twisted,
            &mut counts,
            &format!("twisted {} representative", label.name()),
        );
    }

    for needed in ["O1", "O2", "O3", "O5"] {
        assert!(
            counts.contains_key(needed),
            "the sample set never produced {needed}: {counts:?}"
        );
    }
    pass(
        "rank-one-orbit",
        "on 1000 seeded samples plus forced degenerate maps, matrix rank 1 holds exactly on the codim-3 orbit and both classifiers agree",
    );
}

#[test]
fn criterion_10_point_restrictions_pin_the_localization_oracle() {
    let group = WeylGroup::get();
    let t_ring = Basis::T.var_set();
    let one = MultiPoly::one(&t_ring);
    for v in group.elements() {
        assert_eq!(
            billey_restriction(group.identity(), v),
            one,
            "the identity class must restrict to 1 everywhere"
        );
        for w in group.elements() {
            if w.length() > v.length() {
                assert!(
                    billey_restriction(w, v).is_zero(),
                    "a class of length {} must restrict to 0 at a point of length {}",
                    w.length(),
                    v.length()
                );
            }
        }
        let mut diagonal = MultiPoly::one(&t_ring);
        for root in v.inversion_roots() {
            diagonal = diagonal.mul(&root.to_basis(Basis::T).as_poly());
        }
        assert_eq!(
            billey_restriction(v, v),
            diagonal,
            "diagonal restriction must be the product of the inversion roots"
        );
    }

    let candidates = pin_candidates();
    assert_eq!(candidates.len(), 4, "four candidate conventions");
    assert_eq!(
        candidates.iter().filter(|(_, matches)| *matches).count(),
        1,
        "exactly one convention may reproduce the reference classes"
    );
    let pinned = pinned_convention();
    assert_eq!(
        pinned.point.length(),
        6,
        "the pinned point is the longest element"
    );
    assert_eq!(
        pinned.sign,
        SignConvention::NegativeRoots,
        "the pinned sign convention"
    );

    for rank in [2usize, 1, 0] {
        let w = group.locus_element(rank);
        let got = restriction_with_convention(w, &pinned.point, pinned.sign);
        let want = orbit_class(orbit_for_rank(rank), Basis::T);
        assert_eq!(got, want, "pinned restriction for the rank-{rank} locus");
    }
    pass(
        "localization-pinned",
        "restrictions obey the support and diagonal laws, and the unique pinned convention reproduces all three locus classes",
    );
}

/// Both classifier routes must agree on `map`, and the embedded vector's
/// matrix rank must be 1 exactly when the verdict is the codim-3 orbit.
fn check_rank_against_classifier(
    map: &TrialitySymmetricMap<Rational>,
    counts: &mut BTreeMap<&'static str, u32>,
    context: &str,
) {
    let full = classify_full(map);
    assert!(
        full.agree(),
        "{context}: the two classifier routes disagree ({} vs {})",
        full.label.name(),
        full.by_multiplicity.name()
    );
    let rank = embed(map).morphism_rank();
    assert_eq!(
        rank == 1,
        full.label == OrbitLabel::O3,
        "{context}: morphism rank {rank} is inconsistent with orbit {}",
        full.label.name()
    );
    *counts.entry(full.label.name()).or_insert(0) += 1;
}

/// Stacks `M(word) - I` for every word and returns a basis of the common
/// kernel, i.e. the subspace fixed by all the listed group elements.
fn fixed_space(words: &[Vec<S3Generator>]) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for word in words {
        let m = action_matrix(word);
        for i in 0..9 {
            let mut row = Vec::with_capacity(9);
            for j in 0..9 {
                let mut entry = m.get(i, j).clone();
                if i == j {
                    entry -= rat(1);
                }
                row.push(entry);
            }
            rows.push(row);
        }
    }
    RationalMatrix::from_rows(rows).nullspace()
}

/// A 9 x k matrix whose columns are the given coordinate vectors.
fn columns(vectors: &[Vec<Rational>]) -> RationalMatrix {
    RationalMatrix::from_rows(
        (0..9)
            .map(|i| vectors.iter().map(|v| v[i].clone()).collect())
            .collect(),
    )
}

/// Columns spanning the image of the five-parameter symmetric family
/// inside the nine-dimensional coordinate space.
fn embedded_family_columns() -> RationalMatrix {
    let cols: Vec<Vec<Rational>> = (0..5)
        .map(|k| {
            let mut vals = [rat(0), rat(0), rat(0), rat(0), rat(0)];
            vals[k] = rat(1);
            let [a, b, c, d, z] = vals;
            embed(&TrialitySymmetricMap { a, b, c, d, z })
                .coords()
                .to_vec()
        })
        .collect();
    columns(&cols)
}
