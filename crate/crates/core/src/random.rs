//! Seeded random systems with uniform coefficients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::PrimeModulus;
use crate::poly::{monomials_of_degree, monomials_up_to, PolySystem, Polynomial, Ring};

/// Random polynomial of exact degree `d` (nonzero top part).
///
/// With `homogeneous` set only degree-`d` monomials are used.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    nvars: usize,
    modulus: PrimeModulus,
    d: u32,
    homogeneous: bool,
) -> Polynomial {
    let p = modulus.value();
    let top = monomials_of_degree(nvars, d);
    loop {
        let support = if homogeneous {
            top.clone()
        } else {
            monomials_up_to(nvars, d)
        };
        let f = Polynomial::from_terms(
            nvars,
            modulus,
            support.into_iter().map(|m| (m, rng.gen_range(0..p) as i64)),
        );
        if f.degree() == Some(d) {
            return f;
        }
    }
}

/// `degrees.len()` random polynomials in `ring`, reproducible from `seed`.
pub fn random_system(ring: &Ring, degrees: &[u32], homogeneous: bool, seed: u64) -> PolySystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polys = degrees
        .iter()
        .map(|&d| random_polynomial(&mut rng, ring.nvars(), ring.modulus(), d, homogeneous))
        .collect();
    PolySystem::new(ring.clone(), polys).expect("polynomials built in the ring")
}
