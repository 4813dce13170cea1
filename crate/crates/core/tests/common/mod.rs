#![allow(dead_code)]

use solvdeg::poly::{Monomial, PolySystem, Polynomial, Ring};
use solvdeg::PrimeModulus;

pub fn ring(p: u64, names: &[&str]) -> Ring {
    Ring::new(
        names.iter().map(|s| s.to_string()).collect(),
        PrimeModulus::new(p).unwrap(),
    )
    .unwrap()
}

/// Polynomial from `(coefficient, exponents)` pairs.
pub fn poly(r: &Ring, terms: &[(i64, &[u16])]) -> Polynomial {
    Polynomial::from_terms(
        r.nvars(),
        r.modulus(),
        terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), *c)),
    )
}

pub fn system(r: &Ring, polys: &[&[(i64, &[u16])]]) -> PolySystem {
    PolySystem::new(r.clone(), polys.iter().map(|t| poly(r, t)).collect()).unwrap()
}

/// {x^4 - 1, x^2*y - x^2, y^2 - 1} over GF(7).
pub fn gap_example() -> PolySystem {
    let r = ring(7, &["x", "y"]);
    system(
        &r,
        &[
            &[(1, &[4, 0]), (-1, &[0, 0])],
            &[(1, &[2, 1]), (-1, &[2, 0])],
            &[(1, &[0, 2]), (-1, &[0, 0])],
        ],
    )
}

pub mod strategies {
    use proptest::prelude::*;
    use solvdeg::poly::{Monomial, PolySystem, Polynomial};

    use super::ring;

    pub const PRIMES: [u64; 3] = [2, 7, 101];

    fn arb_terms(n: usize, max_deg: u16) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
        prop::collection::vec((prop::collection::vec(0..=max_deg, n), 1i64..1000), 1..=4).prop_map(
            move |ts| {
                ts.into_iter()
                    .map(|(mut e, c)| {
                        // clip the total degree
                        while e.iter().sum::<u16>() > max_deg {
                            let i = e.iter().position(|&x| x > 0).unwrap();
                            e[i] -= 1;
                        }
                        (e, c)
                    })
                    .collect()
            },
        )
    }

    /// Systems with 1 to 3 variables, 1 to 4 polynomials of degree at most 3, over
    /// GF(2), GF(7) or GF(101).
    pub fn arb_system() -> impl Strategy<Value = PolySystem> {
        (0..3usize, 1..=3usize).prop_flat_map(|(pi, n)| {
            prop::collection::vec(arb_terms(n, 3), 1..=4).prop_map(move |polys| {
                let r = ring(PRIMES[pi], &["x", "y", "z"][..n]);
                let polys = polys
                    .into_iter()
                    .map(|ts| {
                        Polynomial::from_terms(
                            n,
                            r.modulus(),
                            ts.into_iter().map(|(e, c)| (Monomial::new(e), c)),
                        )
                    })
                    .collect();
                PolySystem::new(r, polys).unwrap()
            })
        })
    }

    /// Homogeneous systems: each polynomial keeps only its top-degree terms.
    pub fn arb_homogeneous_system() -> impl Strategy<Value = PolySystem> {
        arb_system().prop_map(|f| f.top_parts())
    }
}
