//! Polynomial division against a fixed basis, driven by a max-heap of monomials.

use std::collections::{BinaryHeap, HashMap};

use crate::poly::{Monomial, Polynomial};

pub struct Reducer<'a> {
    basis: &'a [Polynomial],
    inv_lc: Vec<u32>,
}

impl<'a> Reducer<'a> {
    /// `basis` must not contain zero polynomials.
    pub fn new(basis: &'a [Polynomial]) -> Self {
        let inv_lc = basis
            .iter()
            .map(|g| {
                g.modulus()
                    .inv(g.leading_coeff().expect("nonzero basis element"))
                    .unwrap()
            })
            .collect();
        Self { basis, inv_lc }
    }

    fn divisor(&self, m: &Monomial) -> Option<(usize, Monomial)> {
        self.basis
            .iter()
            .enumerate()
            .find_map(|(i, g)| g.leading_monomial().unwrap().quotient_of(m).map(|u| (i, u)))
    }

    /// Runs the division; stops at the first irreducible term if `stop_early`.
    fn run(&self, f: &Polynomial, stop_early: bool) -> Vec<(Monomial, u32)> {
        let p = f.modulus();
        let pv = p.value() as u64;
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(f.len() * 2);
        let mut heap: BinaryHeap<Monomial> = BinaryHeap::with_capacity(f.len() * 2);
        for (m, c) in f.terms() {
            acc.insert(m.clone(), *c);
            heap.push(m.clone());
        }
        let mut rem = Vec::new();
        while let Some(m) = heap.pop() {
            let Some(c) = acc.remove(&m) else { continue };
            if c == 0 {
                continue;
            }
            match self.divisor(&m) {
                Some((i, u)) => {
                    let g = &self.basis[i];
                    let q = p.mul(c, self.inv_lc[i]) as u64;
                    for (t, tc) in &g.terms()[1..] {
                        let mm = u.mul(t);
                        let delta = ((pv - q) * *tc as u64 % pv) as u32;
                        match acc.get_mut(&mm) {
                            Some(v) => *v = p.add(*v, delta),
                            None => {
                                acc.insert(mm.clone(), delta);
                                heap.push(mm);
                            }
                        }
                    }
                }
                None => {
                    rem.push((m, c));
                    if stop_early {
                        break;
                    }
                }
            }
        }
        rem
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let rem = self.run(f, false);
        Polynomial::from_terms(
            f.nvars(),
            f.modulus(),
            rem.into_iter().map(|(m, c)| (m, c as i64)),
        )
    }

    /// Once a term is irreducible it stays in the remainder, so the first one
    /// already decides the question.
    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        self.run(f, true).is_empty()
    }
}
