//! Degree-by-degree linear algebra for homogeneous ideals.
//!
//! `I_d` is spanned by `x_i * I_{d-1}` together with the generators of degree `d`, so
//! each degree is built from the reduced echelon basis of the previous one. Products
//! with distinct leading monomials serve directly as pivots; the remaining products
//! are reduced against them in one pass and the small residual block is eliminated
//! densely. Rank does not depend on row order, so this gives `dim I_d` exactly.

use crate::field::PrimeModulus;
use crate::poly::{binomial_count, Polynomial};

use super::echelon::{lazy_budget, Accumulator, DenseEchelon, SparseRow};
use super::matrix::Columns;
use super::MacaulayError;

const NONE: u32 = u32::MAX;

/// The homogeneous ideal generated by a fixed list of forms, walked degree by degree.
pub struct GradedIdeal {
    nvars: usize,
    p: PrimeModulus,
    gens: Vec<Polynomial>,
    next_degree: u32,
    columns: Option<Columns>,
    /// Reduced echelon basis of `I_{next_degree - 1}` over `columns`.
    basis: Vec<SparseRow>,
    saturated: bool,
}

impl GradedIdeal {
    pub fn new(nvars: usize, p: PrimeModulus, gens: &[Polynomial]) -> Result<Self, MacaulayError> {
        if gens.iter().any(|g| !g.is_homogeneous()) {
            return Err(MacaulayError::NotHomogeneous);
        }
        Ok(Self {
            nvars,
            p,
            gens: gens.iter().filter(|g| !g.is_zero()).cloned().collect(),
            next_degree: 0,
            columns: None,
            basis: Vec::new(),
            saturated: false,
        })
    }

    /// `dim I_d` for the next degree `d`, advancing the walk.
    pub fn step(&mut self) -> (u32, u64) {
        let d = self.next_degree;
        self.next_degree += 1;
        let total = binomial_count(self.nvars, d);
        if self.saturated {
            return (d, total);
        }
        let cols = Columns::of_degree(self.nvars, d);
        let dim = self.eliminate(&cols, d);
        if dim as u64 == total {
            self.saturated = true;
            self.basis.clear();
            self.columns = None;
        } else {
            self.columns = Some(cols);
        }
        (d, dim as u64)
    }

    fn candidates(&self, cols: &Columns, d: u32) -> Vec<SparseRow> {
        let mut rows: Vec<SparseRow> = self
            .gens
            .iter()
            .filter(|g| g.degree() == Some(d))
            .map(|g| {
                let mut r = cols.row_of(g, &crate::poly::Monomial::one(self.nvars));
                r.make_monic(self.p);
                r
            })
            .collect();
        if let Some(prev) = &self.columns {
            // column of x_i * m for every previous column m
            let mult: Vec<Vec<u32>> = prev
                .monomials()
                .iter()
                .map(|m| {
                    (0..self.nvars)
                        .map(|i| {
                            let x = crate::poly::Monomial::var(self.nvars, i);
                            cols.col(&m.mul(&x)).unwrap()
                        })
                        .collect()
                })
                .collect();
            for b in &self.basis {
                for i in 0..self.nvars {
                    let c: Vec<u32> = b.cols.iter().map(|&c| mult[c as usize][i]).collect();
                    rows.push(SparseRow::new(c, b.vals.clone()));
                }
            }
        }
        rows
    }

    /// Computes a reduced echelon basis of `I_d`, stores it, and returns its size.
    fn eliminate(&mut self, cols: &Columns, d: u32) -> usize {
        let p = self.p;
        let pv = p.value() as u64;
        let ncols = cols.len();
        let rows = self.candidates(cols, d);
        if rows.is_empty() {
            self.basis.clear();
            return 0;
        }

        // phase 1: first row for each leading column
        let mut pivot_of_col = vec![NONE; ncols];
        let mut is_pivot_row = vec![false; rows.len()];
        for (i, r) in rows.iter().enumerate() {
            let lead = r.lead().unwrap() as usize;
            if pivot_of_col[lead] == NONE {
                pivot_of_col[lead] = i as u32;
                is_pivot_row[i] = true;
            }
        }
        let mut kindex = vec![NONE; ncols];
        let mut kcols: Vec<u32> = Vec::new();
        for c in 0..ncols {
            if pivot_of_col[c] == NONE {
                kindex[c] = kcols.len() as u32;
                kcols.push(c as u32);
            }
        }
        let k = kcols.len();

        // fully reduce pivot rows, smallest leading monomial first; tails live in the
        // compressed non-pivot space
        let mut tails: Vec<SparseRow> = vec![SparseRow::default(); ncols];
        let mut acc = Accumulator::new(k.max(1), p);
        let budget = lazy_budget(p);
        for c in (0..ncols).rev() {
            let ri = pivot_of_col[c];
            if ri == NONE {
                continue;
            }
            let r = &rows[ri as usize];
            acc.set_eager(r.len() as u64 + 1 > budget);
            for (&cc, &v) in r.cols[1..].iter().zip(&r.vals[1..]) {
                if pivot_of_col[cc as usize] == NONE {
                    acc.add(kindex[cc as usize], v as u64);
                } else {
                    let t = &tails[cc as usize];
                    acc.add_row(pv - v as u64, &t.cols, &t.vals);
                }
            }
            tails[c] = acc.drain();
        }

        // phase 2: everything else, reduced in one pass and eliminated densely
        let mut dense = DenseEchelon::new(k, p);
        if k > 0 {
            for (i, r) in rows.iter().enumerate() {
                if is_pivot_row[i] {
                    continue;
                }
                acc.set_eager(r.len() as u64 + 1 > budget);
                for (&cc, &v) in r.cols.iter().zip(&r.vals) {
                    if pivot_of_col[cc as usize] == NONE {
                        acc.add(kindex[cc as usize], v as u64);
                    } else {
                        let t = &tails[cc as usize];
                        acc.add_row(pv - v as u64, &t.cols, &t.vals);
                    }
                }
                let red = acc.drain();
                if red.is_empty() {
                    continue;
                }
                let mut v = vec![0u64; k];
                for (&c, &x) in red.cols.iter().zip(&red.vals) {
                    v[c as usize] = x as u64;
                }
                dense.insert(v);
                if dense.is_full() {
                    break;
                }
            }
        }
        let npiv = ncols - k;
        let dim = npiv + dense.rank();
        if dim == ncols {
            self.basis.clear();
            return dim;
        }

        // assemble the reduced echelon basis of I_d for the next degree
        let rref = dense.into_rref();
        let mut dense_lead_row = vec![NONE; k];
        for (i, (lead, _)) in rref.iter().enumerate() {
            dense_lead_row[*lead] = i as u32;
        }
        let mut basis: Vec<SparseRow> = Vec::with_capacity(dim);
        for c in 0..ncols {
            if pivot_of_col[c] != NONE {
                let mut pairs: Vec<(u32, u64)> = vec![(c as u32, 1)];
                let t = &tails[c];
                let mut extra: Vec<u64> = Vec::new();
                for (&kc, &v) in t.cols.iter().zip(&t.vals) {
                    let dr = dense_lead_row[kc as usize];
                    if dr == NONE {
                        pairs.push((kcols[kc as usize], v as u64));
                    } else {
                        if extra.is_empty() {
                            extra = vec![0; k];
                        }
                        let row = &rref[dr as usize].1;
                        let neg = pv - v as u64;
                        for (j, &x) in row.iter().enumerate() {
                            if x != 0 && dense_lead_row[j] == NONE {
                                extra[j] = (extra[j] + neg * x as u64) % pv;
                            }
                        }
                    }
                }
                for (j, &x) in extra.iter().enumerate() {
                    if x != 0 {
                        pairs.push((kcols[j], x));
                    }
                }
                basis.push(SparseRow::from_pairs(pairs, p));
            } else if kindex[c] != NONE && dense_lead_row[kindex[c] as usize] != NONE {
                let row = &rref[dense_lead_row[kindex[c] as usize] as usize].1;
                let pairs = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| (kcols[j], x as u64))
                    .collect();
                basis.push(SparseRow::from_pairs(pairs, p));
            }
        }
        debug_assert_eq!(basis.len(), dim);
        self.basis = basis;
        dim
    }
}

/// `dim I_d` for `d = 0..=upto`, stopping early once `I_d = R_d`.
///
/// The returned vector may be shorter than `upto + 1`; missing entries equal
/// `dim R_d`.
pub fn ideal_dimensions(
    nvars: usize,
    p: PrimeModulus,
    gens: &[Polynomial],
    upto: u32,
) -> Result<Vec<u64>, MacaulayError> {
    let mut g = GradedIdeal::new(nvars, p, gens)?;
    let mut out = Vec::new();
    for _ in 0..=upto {
        let (d, dim) = g.step();
        out.push(dim);
        if dim == binomial_count(nvars, d) {
            break;
        }
    }
    Ok(out)
}
