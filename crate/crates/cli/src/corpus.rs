//! Seeded random systems used by the regression suite and the acceptance tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvdeg::poly::{monomials_of_degree, monomials_up_to, PolySystem, Polynomial, Ring};
use solvdeg::random::random_system;
use solvdeg::PrimeModulus;

pub const ORACLE_PRIMES: [u64; 3] = [2, 7, 101];

/// Sparse polynomial with 1 to 4 terms and exact degree `d`.
fn sparse_polynomial(
    rng: &mut ChaCha8Rng,
    n: usize,
    p: PrimeModulus,
    d: u32,
    homogeneous: bool,
) -> Polynomial {
    let top = monomials_of_degree(n, d);
    let pool = if homogeneous {
        top.clone()
    } else {
        monomials_up_to(n, d)
    };
    let nterms = rng.gen_range(1..=4usize);
    let mut terms = vec![(
        top.choose(rng).unwrap().clone(),
        rng.gen_range(1..p.value()) as i64,
    )];
    for _ in 1..nterms {
        terms.push((
            pool.choose(rng).unwrap().clone(),
            rng.gen_range(1..p.value()) as i64,
        ));
    }
    let f = Polynomial::from_terms(n, p, terms);
    if f.degree() == Some(d) {
        f
    } else {
        sparse_polynomial(rng, n, p, d, homogeneous)
    }
}

/// Small sparse systems: 2 or 3 variables, 2 to 4 polynomials of degree 1 to 3,
/// cycling through the primes 2, 7 and 101; every third system is homogeneous.
pub fn oracle_corpus(count: usize, seed: u64) -> Vec<PolySystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let p = PrimeModulus::new(ORACLE_PRIMES[i % 3]).unwrap();
            let homogeneous = i % 3 == 2;
            let n = rng.gen_range(2..=3);
            let m = rng.gen_range(2..=4);
            let polys = (0..m)
                .map(|_| {
                    let d = rng.gen_range(1..=3);
                    sparse_polynomial(&mut rng, n, p, d, homogeneous)
                })
                .collect();
            PolySystem::new(Ring::with_default_names(n, p).unwrap(), polys).unwrap()
        })
        .collect()
}

/// `n + 2` random quadratic forms in `n` variables over GF(7919).
pub fn quadric_system(n: usize, seed: u64) -> PolySystem {
    let ring = Ring::with_default_names(n, PrimeModulus::new(7919).unwrap()).unwrap();
    random_system(&ring, &vec![2; n + 2], true, seed)
}
