//! Example systems built from their printed factors.

use solvdeg::poly::{field_equations, PolySystem, Polynomial, Ring};
use solvdeg::PrimeModulus;

use crate::format::parse_polynomial;

fn f7_ring(names: &[&str]) -> Ring {
    Ring::new(
        names.iter().map(|s| s.to_string()).collect(),
        PrimeModulus::new(7).expect("7 is prime"),
    )
    .expect("valid ring")
}

fn p(ring: &Ring, s: &str) -> Polynomial {
    parse_polynomial(s, ring).expect("fixture parses")
}

fn product(fs: &[&Polynomial]) -> Polynomial {
    fs[1..]
        .iter()
        .fold(fs[0].clone(), |acc, f| acc.try_mul(f).expect("same ring"))
}

/// `{x^4 - 1, x^2*y - x^2, y^2 - 1}` over GF(7).
pub fn gap_example() -> PolySystem {
    let r = f7_ring(&["x", "y"]);
    let polys = ["x^4 - 1", "x^2*y - x^2", "y^2 - 1"]
        .iter()
        .map(|s| p(&r, s))
        .collect();
    PolySystem::new(r, polys).expect("same ring")
}

/// All triple products of `f1..f4` (with repetition) plus the field equations.
pub fn large_example_1() -> PolySystem {
    let r = f7_ring(&["x", "y", "z"]);
    let f: Vec<Polynomial> = [
        "x^5 + y^5 + z^5 - 1",
        "x^3 + y^3 + z^2 - 1",
        "y^6 - 1",
        "z^6 - 1",
    ]
    .iter()
    .map(|s| p(&r, s))
    .collect();
    let mut polys = Vec::new();
    for i in 0..4 {
        for j in i..4 {
            for k in j..4 {
                polys.push(product(&[&f[i], &f[j], &f[k]]));
            }
        }
    }
    polys.extend(field_equations(&r, 7).expect("q = p"));
    PolySystem::new(r, polys).expect("same ring")
}

/// All pairwise products of `f1, f2` and the field equations (with repetition),
/// plus the field equations themselves.
pub fn large_example_2() -> PolySystem {
    let r = f7_ring(&["x", "y", "z"]);
    let fe = field_equations(&r, 7).expect("q = p");
    let mut f: Vec<Polynomial> = vec![p(&r, "x^5 + y^5 + z^5 - 1"), p(&r, "x^3 + y^3 + z^2 - 1")];
    f.extend(fe.iter().cloned());
    let mut polys = Vec::new();
    for i in 0..5 {
        for j in i..5 {
            polys.push(product(&[&f[i], &f[j]]));
        }
    }
    polys.extend(fe);
    PolySystem::new(r, polys).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_degrees() {
        let e1 = large_example_1();
        assert_eq!(e1.len(), 23);
        assert_eq!(e1.max_degree(), Some(18));
        let e2 = large_example_2();
        assert_eq!(e2.len(), 18);
        assert_eq!(e2.max_degree(), Some(14));
        assert_eq!(gap_example().len(), 3);
    }
}
