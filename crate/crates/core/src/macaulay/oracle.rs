//! Textbook Buchberger algorithm, used only to validate the matrix algorithm.
//!
//! Shares nothing with the matrix code besides polynomial arithmetic.

use crate::poly::{normal_form, reduce_basis, s_polynomial, PolySystem, Polynomial};

/// Reduced degrevlex Gröbner basis via Buchberger with the product and chain
/// criteria and the normal selection strategy.
pub fn buchberger_oracle(system: &PolySystem) -> Vec<Polynomial> {
    let mut g: Vec<Polynomial> = system
        .polys()
        .iter()
        .filter(|f| !f.is_zero())
        .map(Polynomial::monic)
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let lcm_deg = |g: &[Polynomial], (i, j): (usize, usize)| {
        g[i].leading_monomial()
            .unwrap()
            .lcm(g[j].leading_monomial().unwrap())
    };
    while !pairs.is_empty() {
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| lcm_deg(&g, *a.1).cmp(&lcm_deg(&g, *b.1)).then(a.1.cmp(b.1)))
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        let (li, lj) = (
            g[i].leading_monomial().unwrap(),
            g[j].leading_monomial().unwrap(),
        );
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].leading_monomial().unwrap().divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let h = normal_form(&s_polynomial(&g[i], &g[j]), &g);
        if !h.is_zero() {
            let k = g.len();
            g.push(h.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    reduce_basis(&g)
}
