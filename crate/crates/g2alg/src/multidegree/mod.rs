//! Multidegrees of torus-stable ideals, and an independent route to the
//! equivariant classes of the orbit closures.
//!
//! For an ideal homogeneous with respect to a weighting of the variables,
//! the multidegree is computed through a Gröbner degeneration: the class
//! of the initial monomial ideal is the sum, over its minimal primes of
//! maximal dimension, of the localization multiplicity times the product
//! of the weights of the prime's variables. The result is independent of
//! the chosen term order — the suites recompute it under several orders
//! and compare.
//!
//! [`orbit_class_oracle`] assembles the five orbit-closure classes from
//! first principles: complete-intersection factors contribute their
//! weights directly, and the codimension-3 closure goes through the
//! multidegree of its cubic's coefficient ideal. These values are the
//! independent cross-check for the closed forms in [`crate::classes`].

pub mod groebner;

pub use groebner::{
    contains, groebner_basis, ideal_equal, initial_ideal, leading_term, monomial_string,
    normal_form, OrderKind, TermOrder,
};

use crate::exactalg::{weight_of, Basis, ExactAlgError, MultiPoly, Rational, VarSet, WeightVector};
use crate::orbits::{self, OrbitLabel};

/// An ideal together with a torus weighting of its variables, checked to
/// be homogeneous generator by generator.
#[derive(Debug, Clone)]
pub struct GradedIdeal {
    gens: Vec<MultiPoly>,
    vars: VarSet,
    weights: Vec<(String, WeightVector)>,
}

impl GradedIdeal {
    /// Builds the graded ideal, verifying every generator is homogeneous
    /// for the weighting.
    pub fn new(
        gens: Vec<MultiPoly>,
        weights: &[(&str, WeightVector)],
    ) -> Result<GradedIdeal, ExactAlgError> {
        let vars = gens
            .first()
            .map(|g| g.vars().clone())
            .ok_or_else(|| ExactAlgError::InvalidVarSet("empty generating set".into()))?;
        for g in &gens {
            weight_of(g, weights)?;
        }
        Ok(GradedIdeal {
            gens,
            vars,
            weights: weights
                .iter()
                .map(|(n, w)| (n.to_string(), *w))
                .collect(),
        })
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    fn weight_of_var(&self, index: usize) -> WeightVector {
        let name = self.vars.name(index);
        self.weights
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| *w)
            .expect("every variable carries a weight")
    }

    /// The multidegree under the given term order, with the component
    /// data that produced it.
    pub fn multidegree(
        &self,
        order: &TermOrder,
        basis: Basis,
    ) -> Result<MultidegreeReport, ExactAlgError> {
        assert_eq!(order.vars(), &self.vars, "order must match the ideal's variables");
        let gb = groebner_basis(&self.gens, order);
        let init = initial_ideal(&gb, order);
        let n = self.vars.len();
        let codim = minimum_cover_size(&init, n)
            .expect("ideal must be proper: the unit ideal has no cover");
        let mut components = Vec::new();
        let out_vars = basis.var_set();
        let mut total = MultiPoly::zero(&out_vars);
        for cover in covers_of_size(&init, n, codim) {
            let multiplicity = standard_monomial_count(&init, &cover);
            let mut class = MultiPoly::constant(&out_vars, Rational::from_integer(
                (multiplicity as i64).into(),
            ));
            for &v in &cover {
                class = class.mul(&self.weight_of_var(v).to_basis(basis).as_poly());
            }
            total = total.add(&class);
            components.push(MultidegreeComponent {
                variables: cover.iter().map(|&v| self.vars.name(v).to_string()).collect(),
                multiplicity,
                class,
            });
        }
        Ok(MultidegreeReport {
            multidegree: total,
            codim,
            components,
            groebner_basis: gb,
            initial_ideal: init,
        })
    }
}

/// One top-dimensional component of the initial monomial ideal.
#[derive(Debug, Clone)]
pub struct MultidegreeComponent {
    /// The names of the variables cutting out the component.
    pub variables: Vec<String>,
    /// The localization multiplicity.
    pub multiplicity: usize,
    /// `multiplicity * product of weights`.
    pub class: MultiPoly,
}

/// The multidegree plus everything computed on the way.
#[derive(Debug, Clone)]
pub struct MultidegreeReport {
    pub multidegree: MultiPoly,
    pub codim: usize,
    pub components: Vec<MultidegreeComponent>,
    pub groebner_basis: Vec<MultiPoly>,
    pub initial_ideal: Vec<Vec<u32>>,
}

/// Smallest size of a set of variables meeting the support of every
/// minimal generator; `None` when no cover exists (the unit ideal).
fn minimum_cover_size(init: &[Vec<u32>], nvars: usize) -> Option<usize> {
    (0..=nvars).find(|&size| !covers_of_size(init, nvars, size).is_empty())
}

/// All variable subsets of exactly `size` meeting every generator's
/// support. When `size` is the minimum, these are the top-dimensional
/// minimal primes.
fn covers_of_size(init: &[Vec<u32>], nvars: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut subset = Vec::new();
    fn recurse(
        init: &[Vec<u32>],
        nvars: usize,
        size: usize,
        start: usize,
        subset: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if subset.len() == size {
            let covers = init
                .iter()
                .all(|m| subset.iter().any(|&v| m[v] > 0));
            if covers {
                out.push(subset.clone());
            }
            return;
        }
        for v in start..nvars {
            subset.push(v);
            recurse(init, nvars, size, v + 1, subset, out);
            subset.pop();
        }
    }
    recurse(init, nvars, size, 0, &mut subset, &mut out);
    out
}

/// Localization multiplicity of the monomial ideal at the prime spanned
/// by `cover`: variables outside the cover are set to one and the
/// standard monomials of the resulting (artinian) monomial ideal are
/// counted.
fn standard_monomial_count(init: &[Vec<u32>], cover: &[usize]) -> usize {
    // restrict each generator to the cover's variables
    let restricted: Vec<Vec<u32>> = init
        .iter()
        .map(|m| cover.iter().map(|&v| m[v]).collect())
        .collect();
    // bound each variable by its minimal pure power; a minimal prime's
    // localization is artinian, so the pure power exists
    let bounds: Vec<u32> = (0..cover.len())
        .map(|i| {
            restricted
                .iter()
                .filter(|m| m.iter().enumerate().all(|(j, &e)| e == 0 || j == i))
                .map(|m| m[i])
                .filter(|&e| e > 0)
                .min()
                .expect("localization at a minimal prime is artinian")
        })
        .collect();
    // count monomials below the bounds not divisible by any generator
    let mut count = 0usize;
    let mut exp = vec![0u32; cover.len()];
    loop {
        let standard = !restricted
            .iter()
            .any(|m| m.iter().zip(&exp).all(|(g, e)| g <= e));
        if standard {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == exp.len() {
                return count;
            }
            exp[i] += 1;
            if exp[i] < bounds[i] {
                break;
            }
            exp[i] = 0;
            i += 1;
        }
    }
}

/// How one orbit class was assembled by the oracle.
#[derive(Debug, Clone)]
pub struct OrbitClassOracle {
    pub label: OrbitLabel,
    /// The class, in the requested basis.
    pub class: MultiPoly,
    /// Human-readable description of the route taken.
    pub route: String,
    /// Present when the route ran a Gröbner computation.
    pub report: Option<MultidegreeReport>,
}

/// Computes an orbit-closure class from first principles, without using
/// the closed forms:
///
/// * codim 0: the whole cone, class 1;
/// * codim 1: the hyperplane `z = 0`, class = weight of `z`;
/// * codim 2: complete intersection of `z` and the discriminant;
/// * codim 3: `z = 0` times the multidegree of the cubic's coefficient
///   ideal (the three minor forms);
/// * codim 5: the origin, product of all five coordinate weights.
pub fn orbit_class_oracle(label: OrbitLabel, basis: Basis) -> OrbitClassOracle {
    let out_vars = basis.var_set();
    let weights = orbits::coordinate_weights();
    let weight_by_name = |name: &str| -> WeightVector {
        weights
            .iter()
            .find(|(n, _)| *n == name)
            .expect("known coordinate")
            .1
    };
    let wt_poly = |name: &str| weight_by_name(name).to_basis(basis).as_poly();
    match label {
        OrbitLabel::O0 => OrbitClassOracle {
            label,
            class: MultiPoly::one(&out_vars),
            route: "dense orbit: the class of the whole cone is 1".to_string(),
            report: None,
        },
        OrbitLabel::O1 => OrbitClassOracle {
            label,
            class: wt_poly("z"),
            route: "hyperplane z = 0: class = weight of z".to_string(),
            report: None,
        },
        OrbitLabel::O2 => {
            let cubic_weights: Vec<(&str, WeightVector)> = weights
                .iter()
                .filter(|(n, _)| *n != "z")
                .map(|(n, w)| (*n, *w))
                .collect();
            let disc_weight = weight_of(&orbits::discriminant_poly(), &cubic_weights)
                .expect("discriminant is homogeneous");
            let class = wt_poly("z").mul(&disc_weight.to_basis(basis).as_poly());
            OrbitClassOracle {
                label,
                class,
                route: "complete intersection of z and the discriminant: \
                        class = wt(z) * wt(disc)"
                    .to_string(),
                report: None,
            }
        }
        OrbitLabel::O3 => {
            let gens = orbits::minor_ideal_generators();
            let cubic_vars = orbits::cubic_vars();
            let cubic_weights: Vec<(&str, WeightVector)> = weights
                .iter()
                .filter(|(n, _)| *n != "z")
                .map(|(n, w)| (*n, *w))
                .collect();
            let ideal = GradedIdeal::new(gens, &cubic_weights)
                .expect("minor forms are homogeneous");
            let order = TermOrder::degrevlex(&cubic_vars, &["a", "b", "c", "d"])
                .expect("valid order");
            let report = ideal.multidegree(&order, basis).expect("graded ideal");
            let class = wt_poly("z").mul(&report.multidegree);
            OrbitClassOracle {
                label,
                class,
                route: "z = 0 times the multidegree of the cubic's coefficient \
                        ideal <a^2 + bd, ad - bc, d^2 + ac>"
                    .to_string(),
                report: Some(report),
            }
        }
        OrbitLabel::O5 => {
            let mut class = MultiPoly::one(&out_vars);
            for (name, _) in &weights {
                class = class.mul(&wt_poly(name));
            }
            OrbitClassOracle {
                label,
                class,
                route: "the origin: product of all five coordinate weights".to_string(),
                report: None,
            }
        }
    }
}
