//! Deterministic randomized sampling. Every sample index gets its own
//! generator derived from the run seed, so results are identical whether
//! the loop runs sequentially or in parallel, and independent of thread
//! count. The `parallel` feature switches the default entry points to
//! rayon; the `_seq` variants are always available for comparison.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{rat, Rational};
use crate::octonion::OctonionElement;
use crate::orbits::{self, OrbitLabel};
use crate::triality::TrialitySymmetricMap;

/// A fresh generator for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A small random integer in `[-9, 9]`, biased toward zero.
pub fn random_int(rng: &mut ChaCha8Rng) -> i64 {
    if rng.gen_bool(0.3) {
        0
    } else {
        rng.gen_range(-9..=9)
    }
}

/// A random rational with numerator in `[-9, 9]` and denominator in
/// `[1, 4]`; integers are common, zero is possible.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = random_int(rng);
    let den = rng.gen_range(1..=4i64);
    Rational::new(num.into(), den.into())
}

/// A random nonzero rational.
pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !num::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// A random algebra element with small rational coordinates.
pub fn random_octonion(rng: &mut ChaCha8Rng) -> OctonionElement<Rational> {
    OctonionElement::from_coords(std::array::from_fn(|_| random_rational(rng)))
}

/// A random symmetric compatible map. The generator mixes strategies so
/// all five orbits appear: fully random coordinates, forced `z = 0`,
/// sparse coordinates, and torus-twisted orbit representatives.
pub fn random_map(rng: &mut ChaCha8Rng) -> TrialitySymmetricMap<Rational> {
    match rng.gen_range(0..4u8) {
        0 => TrialitySymmetricMap {
            a: random_rational(rng),
            b: random_rational(rng),
            c: random_rational(rng),
            d: random_rational(rng),
            z: random_rational(rng),
        },
        1 => TrialitySymmetricMap {
            a: random_rational(rng),
            b: random_rational(rng),
            c: random_rational(rng),
            d: random_rational(rng),
            z: rat(0),
        },
        2 => {
            let sparse = |rng: &mut ChaCha8Rng| {
                if rng.gen_bool(0.5) {
                    rat(0)
                } else {
                    random_rational(rng)
                }
            };
            TrialitySymmetricMap {
                a: sparse(rng),
                b: sparse(rng),
                c: sparse(rng),
                d: sparse(rng),
                z: if rng.gen_bool(0.75) { rat(0) } else { random_rational(rng) },
            }
        }
        _ => {
            let label = OrbitLabel::all()[rng.gen_range(0..5usize)];
            let rep = orbits::orbit_representative(label);
            let m1 = random_nonzero_rational(rng);
            let m2 = random_nonzero_rational(rng);
            let twisted = orbits::torus_scale(&rep, &m1, &m2);
            let k = random_nonzero_rational(rng);
            TrialitySymmetricMap {
                a: &twisted.a * &k,
                b: &twisted.b * &k,
                c: &twisted.c * &k,
                d: &twisted.d * &k,
                z: &twisted.z * &k,
            }
        }
    }
}

/// The deterministic batch of maps a run with this seed samples.
pub fn random_maps(samples: usize, seed: u64) -> Vec<TrialitySymmetricMap<Rational>> {
    (0..samples)
        .map(|i| random_map(&mut sample_rng(seed, i as u64)))
        .collect()
}

/// Sequential sample loop: runs `body` on indices `0..samples`, each
/// with its own generator, reporting the first failure.
pub fn for_each_sample_seq<F>(samples: usize, seed: u64, body: &F) -> Result<(), String>
where
    F: Fn(usize, &mut ChaCha8Rng) -> Result<(), String>,
{
    for i in 0..samples {
        let mut rng = sample_rng(seed, i as u64);
        body(i, &mut rng).map_err(|e| format!("sample {i}: {e}"))?;
    }
    Ok(())
}

/// Parallel sample loop with the same semantics (and the same reported
/// failure) as the sequential one.
#[cfg(feature = "parallel")]
pub fn for_each_sample_par<F>(samples: usize, seed: u64, body: &F) -> Result<(), String>
where
    F: Fn(usize, &mut ChaCha8Rng) -> Result<(), String> + Sync,
{
    use rayon::prelude::*;
    let failure = (0..samples).into_par_iter().find_map_first(|i| {
        let mut rng = sample_rng(seed, i as u64);
        body(i, &mut rng)
            .err()
            .map(|e| format!("sample {i}: {e}"))
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Runs the sample loop, in parallel when the `parallel` feature is
/// enabled.
pub fn for_each_sample<F>(samples: usize, seed: u64, body: F) -> Result<(), String>
where
    F: Fn(usize, &mut ChaCha8Rng) -> Result<(), String> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        for_each_sample_par(samples, seed, &body)
    }
    #[cfg(not(feature = "parallel"))]
    {
        for_each_sample_seq(samples, seed, &body)
    }
}

/// Classifies a batch sequentially.
pub fn classify_batch_seq(maps: &[TrialitySymmetricMap<Rational>]) -> Vec<OrbitLabel> {
    maps.iter().map(orbits::classify_map).collect()
}

/// Classifies a batch in parallel.
#[cfg(feature = "parallel")]
pub fn classify_batch_par(maps: &[TrialitySymmetricMap<Rational>]) -> Vec<OrbitLabel> {
    use rayon::prelude::*;
    maps.par_iter().map(orbits::classify_map).collect()
}

/// Classifies a batch, in parallel when the `parallel` feature is
/// enabled.
pub fn classify_batch(maps: &[TrialitySymmetricMap<Rational>]) -> Vec<OrbitLabel> {
    #[cfg(feature = "parallel")]
    {
        classify_batch_par(maps)
    }
    #[cfg(not(feature = "parallel"))]
    {
        classify_batch_seq(maps)
    }
}
