//! Randomized property tests: algebraic laws that must hold for every
//! input, exercised over generated rationals, polynomials, and maps.

use proptest::prelude::*;

use g2alg::classes::root_vars;
use g2alg::exactalg::{rat, to_chern, Basis, MultiPoly, Rational, VarSet, WeightVector};
use g2alg::multidegree::{groebner_basis, normal_form, TermOrder};
use g2alg::octonion::OctonionElement;
use g2alg::orbits::{
    classify_full, classify_map, cubic_vars, minor_ideal_generators, torus_scale,
};
use g2alg::triality::TrialitySymmetricMap;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=12, any::<bool>()).prop_map(|(n, d, neg)| {
        let value = Rational::new(n.into(), d.into());
        if neg {
            -value
        } else {
            value
        }
    })
}

/// A coordinate that is often exactly zero, so degenerate shapes are hit.
fn arb_sparse_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![Just(rat(0)), arb_rational()]
}

fn poly_vars() -> VarSet {
    VarSet::new(&["x", "y", "z"])
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), arb_rational()), 0..6).prop_map(
        |terms| {
            let vars = poly_vars();
            terms
                .into_iter()
                .fold(MultiPoly::zero(&vars), |acc, (exps, coeff)| {
                    acc.add(&MultiPoly::term(&vars, coeff, &exps))
                })
        },
    )
}

fn arb_cubic_space_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 4), arb_rational()), 0..4).prop_map(
        |terms| {
            let vars = cubic_vars();
            terms
                .into_iter()
                .fold(MultiPoly::zero(&vars), |acc, (exps, coeff)| {
                    acc.add(&MultiPoly::term(&vars, coeff, &exps))
                })
        },
    )
}

fn arb_octonion() -> impl Strategy<Value = OctonionElement<Rational>> {
    prop::collection::vec(arb_rational(), 8)
        .prop_map(|c| OctonionElement::from_coords(std::array::from_fn(|i| c[i].clone())))
}

fn arb_map() -> impl Strategy<Value = TrialitySymmetricMap<Rational>> {
    (
        arb_sparse_rational(),
        arb_sparse_rational(),
        arb_sparse_rational(),
        arb_sparse_rational(),
        arb_sparse_rational(),
    )
        .prop_map(|(a, b, c, d, z)| TrialitySymmetricMap { a, b, c, d, z })
}

proptest! {
    #[test]
    fn polynomial_addition_commutes(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
    }

    #[test]
    fn polynomial_multiplication_commutes_and_associates(
        p in arb_poly(),
        q in arb_poly(),
        r in arb_poly(),
    ) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn multiplication_distributes_over_addition(
        p in arb_poly(),
        q in arb_poly(),
        r in arb_poly(),
    ) {
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn canonical_text_parses_back_to_the_same_polynomial(p in arb_poly()) {
        let text = p.to_string();
        let back = MultiPoly::parse(p.vars(), &text);
        prop_assert_eq!(back.expect("canonical text parses"), p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in arb_poly(),
        q in arb_poly(),
        x in arb_rational(),
        y in arb_rational(),
        z in arb_rational(),
    ) {
        let point = [("x", x), ("y", y), ("z", z)];
        let ev = |f: &MultiPoly| f.eval_rational(&point).expect("all variables bound");
        prop_assert_eq!(ev(&p.add(&q)), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&p.mul(&q)), ev(&p) * ev(&q));
    }

    #[test]
    fn weight_basis_conversion_round_trips(a in -30i64..=30, b in -30i64..=30) {
        let alpha = WeightVector::alpha(a, b);
        prop_assert_eq!(alpha.to_basis(Basis::T).to_basis(Basis::Alpha).coords(), [a, b]);
        let torus = WeightVector::t(a, b);
        prop_assert_eq!(torus.to_basis(Basis::Alpha).to_basis(Basis::T).coords(), [a, b]);
    }

    #[test]
    fn symmetric_polynomials_round_trip_through_chern_classes(
        terms in prop::collection::vec(((0u32..3, 0u32..3), arb_rational()), 0..4),
    ) {
        let xv = root_vars();
        let x1 = MultiPoly::var(&xv, "x1").expect("declared variable");
        let x2 = MultiPoly::var(&xv, "x2").expect("declared variable");
        let e1 = x1.add(&x2);
        let e2 = x1.mul(&x2);
        let f = terms
            .into_iter()
            .fold(MultiPoly::zero(&xv), |acc, ((i, j), coeff)| {
                acc.add(&e1.pow(i).mul(&e2.pow(j)).scale(&coeff))
            });
        let in_chern = to_chern(&f).expect("symmetric polynomials rewrite");
        let back = in_chern
            .substitute(&[("c1", e1.clone()), ("c2", e2.clone())], &xv)
            .expect("substitution into the root ring");
        prop_assert_eq!(back, f);
    }

    #[test]
    fn octonion_norm_and_pairing_laws(u in arb_octonion(), v in arb_octonion()) {
        // The pairing is symmetric and polarizes the norm.
        prop_assert_eq!(u.bilinear(&v), v.bilinear(&u));
        let polarized = u.add(&v).norm() - u.norm() - v.norm();
        prop_assert_eq!(u.bilinear(&v), polarized);
        prop_assert_eq!(u.bilinear(&u), u.norm() * rat(2));
        // Conjugation is an involutive isometry, and the norm is
        // multiplicative on concrete elements.
        prop_assert_eq!(u.conjugate().conjugate(), u.clone());
        prop_assert_eq!(u.conjugate().norm(), u.norm());
        prop_assert_eq!(u.multiply(&v).norm(), u.norm() * v.norm());
    }

    #[test]
    fn classification_is_invariant_under_scaling_and_the_torus(
        map in arb_map(),
        scale in arb_nonzero_rational(),
        m1 in arb_nonzero_rational(),
        m2 in arb_nonzero_rational(),
    ) {
        let label = classify_map(&map);
        prop_assert!(classify_full(&map).agree());
        let scaled = TrialitySymmetricMap {
            a: &map.a * &scale,
            b: &map.b * &scale,
            c: &map.c * &scale,
            d: &map.d * &scale,
            z: &map.z * &scale,
        };
        prop_assert_eq!(classify_map(&scaled), label);
        let twisted = torus_scale(&map, &m1, &m2);
        prop_assert_eq!(classify_map(&twisted), label);
    }

    #[test]
    fn generator_combinations_reduce_to_zero(
        f1 in arb_cubic_space_poly(),
        f2 in arb_cubic_space_poly(),
        f3 in arb_cubic_space_poly(),
    ) {
        let vars = cubic_vars();
        let gens = minor_ideal_generators();
        let order = TermOrder::degrevlex(&vars, &["a", "b", "c", "d"]).expect("term order");
        let basis = groebner_basis(&gens, &order);
        let combination = f1
            .mul(&gens[0])
            .add(&f2.mul(&gens[1]))
            .add(&f3.mul(&gens[2]));
        prop_assert!(normal_form(&combination, &basis, &order).is_zero());
    }
}
