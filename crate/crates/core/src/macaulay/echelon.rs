//! Row reduction over GF(p) without row swaps.
//!
//! Rows are sparse with ascending column indices; column 0 is the largest monomial.
//! Accumulation happens in a dense `u64` buffer and is reduced modulo `p` lazily
//! whenever the number of pending additions provably cannot overflow.

use crate::field::PrimeModulus;

/// Sparse row: strictly ascending columns, values in `1..p`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseRow {
    pub cols: Vec<u32>,
    pub vals: Vec<u32>,
}

impl SparseRow {
    pub fn new(cols: Vec<u32>, vals: Vec<u32>) -> Self {
        debug_assert_eq!(cols.len(), vals.len());
        debug_assert!(cols.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(vals.iter().all(|&v| v != 0));
        Self { cols, vals }
    }

    /// Builds a row from unsorted `(col, value)` pairs, reducing values mod `p`.
    pub fn from_pairs(mut pairs: Vec<(u32, u64)>, p: PrimeModulus) -> Self {
        pairs.sort_unstable_by_key(|&(c, _)| c);
        let pv = p.value() as u64;
        let mut cols = Vec::with_capacity(pairs.len());
        let mut vals: Vec<u32> = Vec::with_capacity(pairs.len());
        for (c, v) in pairs {
            let v = (v % pv) as u32;
            if cols.last() == Some(&c) {
                let last = vals.last_mut().unwrap();
                *last = p.add(*last, v);
            } else {
                cols.push(c);
                vals.push(v);
            }
        }
        let mut row = Self { cols, vals };
        row.drop_zeros();
        row
    }

    fn drop_zeros(&mut self) {
        if self.vals.iter().all(|&v| v != 0) {
            return;
        }
        let (cols, vals) = self
            .cols
            .iter()
            .zip(&self.vals)
            .filter(|(_, &v)| v != 0)
            .map(|(&c, &v)| (c, v))
            .unzip();
        self.cols = cols;
        self.vals = vals;
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn lead(&self) -> Option<u32> {
        self.cols.first().copied()
    }

    pub fn get(&self, col: u32) -> u32 {
        self.cols
            .binary_search(&col)
            .map(|i| self.vals[i])
            .unwrap_or(0)
    }

    pub fn scale(&mut self, c: u32, p: PrimeModulus) {
        for v in &mut self.vals {
            *v = p.mul(*v, c);
        }
    }

    /// Scales so the leading value is 1.
    pub fn make_monic(&mut self, p: PrimeModulus) {
        if let Some(&lc) = self.vals.first() {
            if lc != 1 {
                self.scale(p.inv(lc).expect("nonzero"), p);
            }
        }
    }

    /// `self + a * other`, by merging.
    pub fn axpy(&self, a: u32, other: &SparseRow, p: PrimeModulus) -> SparseRow {
        let mut cols = Vec::with_capacity(self.len() + other.len());
        let mut vals = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let ci = self.cols.get(i).copied().unwrap_or(u32::MAX);
            let cj = other.cols.get(j).copied().unwrap_or(u32::MAX);
            if ci < cj {
                cols.push(ci);
                vals.push(self.vals[i]);
                i += 1;
            } else if cj < ci {
                cols.push(cj);
                vals.push(p.mul(a, other.vals[j]));
                j += 1;
            } else {
                let v = p.add(self.vals[i], p.mul(a, other.vals[j]));
                if v != 0 {
                    cols.push(ci);
                    vals.push(v);
                }
                i += 1;
                j += 1;
            }
        }
        SparseRow { cols, vals }
    }
}

/// Largest number of additions of products `< p^2` that fit in a `u64` on top of a
/// reduced value.
pub(crate) fn lazy_budget(p: PrimeModulus) -> u64 {
    let pm1 = p.value() as u64 - 1;
    if pm1 == 0 {
        return u64::MAX;
    }
    (u64::MAX - p.value() as u64) / (pm1 * pm1)
}

/// Dense scratch vector with a list of touched positions.
pub(crate) struct Accumulator {
    buf: Vec<u64>,
    mark: Vec<bool>,
    touched: Vec<u32>,
    p: u64,
    /// Reduce after every addition instead of lazily.
    eager: bool,
}

impl Accumulator {
    pub(crate) fn new(len: usize, p: PrimeModulus) -> Self {
        Self {
            buf: vec![0; len],
            mark: vec![false; len],
            touched: Vec::new(),
            p: p.value() as u64,
            eager: false,
        }
    }

    pub(crate) fn set_eager(&mut self, eager: bool) {
        self.eager = eager;
    }

    #[inline]
    pub(crate) fn add(&mut self, col: u32, v: u64) {
        let c = col as usize;
        if !self.mark[c] {
            self.mark[c] = true;
            self.touched.push(col);
        }
        if self.eager {
            self.buf[c] = (self.buf[c] + v) % self.p;
        } else {
            self.buf[c] += v;
        }
    }

    /// `self += a * row`, with `a` already reduced.
    #[inline]
    pub(crate) fn add_row(&mut self, a: u64, cols: &[u32], vals: &[u32]) {
        for (&c, &v) in cols.iter().zip(vals) {
            self.add(c, a * v as u64);
        }
    }

    /// Drains the accumulated vector into a sparse row and clears the buffer.
    pub(crate) fn drain(&mut self) -> SparseRow {
        self.touched.sort_unstable();
        let mut cols = Vec::with_capacity(self.touched.len());
        let mut vals = Vec::with_capacity(self.touched.len());
        for &c in &self.touched {
            let i = c as usize;
            let v = (self.buf[i] % self.p) as u32;
            self.buf[i] = 0;
            self.mark[i] = false;
            if v != 0 {
                cols.push(c);
                vals.push(v);
            }
        }
        self.touched.clear();
        SparseRow { cols, vals }
    }
}

const NO_PIVOT: u32 = u32::MAX;

/// Row-ordered elimination that keeps every stored row fully reduced.
///
/// Inserting a row reduces it against all stored rows. A nonzero remainder is made
/// monic, becomes a new pivot row, and is back-substituted into the existing rows.
/// The pivot column of an inserted row therefore depends only on the rows inserted
/// before it.
pub struct IncrementalRref {
    p: PrimeModulus,
    pivot_of_col: Vec<u32>,
    rows: Vec<SparseRow>,
    acc: Accumulator,
    budget: u64,
}

impl IncrementalRref {
    pub fn new(ncols: usize, p: PrimeModulus) -> Self {
        Self {
            p,
            pivot_of_col: vec![NO_PIVOT; ncols],
            rows: Vec::new(),
            acc: Accumulator::new(ncols, p),
            budget: lazy_budget(p),
        }
    }

    pub fn ncols(&self) -> usize {
        self.pivot_of_col.len()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.pivot_of_col.len()
    }

    pub fn pivot_row(&self, col: u32) -> Option<usize> {
        match self.pivot_of_col[col as usize] {
            NO_PIVOT => None,
            r => Some(r as usize),
        }
    }

    /// Normal form of `row` modulo the stored rows.
    pub fn reduce(&mut self, row: &SparseRow) -> SparseRow {
        let pv = self.p.value() as u64;
        self.acc.set_eager(row.len() as u64 + 1 > self.budget);
        for (&c, &v) in row.cols.iter().zip(&row.vals) {
            match self.pivot_of_col[c as usize] {
                NO_PIVOT => self.acc.add(c, v as u64),
                r => {
                    // stored rows carry only non-pivot columns besides their lead
                    let pr = &self.rows[r as usize];
                    let neg = pv - v as u64;
                    self.acc.add_row(neg, &pr.cols[1..], &pr.vals[1..]);
                }
            }
        }
        self.acc.drain()
    }

    /// Inserts a row; returns the index of the new pivot row and its column, or
    /// `None` if the row is in the span of the stored rows.
    pub fn insert(&mut self, row: &SparseRow) -> Option<(usize, u32)> {
        let mut r = self.reduce(row);
        let lead = r.lead()?;
        r.make_monic(self.p);
        for other in &mut self.rows {
            let a = other.get(lead);
            if a != 0 {
                *other = other.axpy(self.p.neg(a), &r, self.p);
            }
        }
        let idx = self.rows.len();
        self.pivot_of_col[lead as usize] = idx as u32;
        self.rows.push(r);
        Some((idx, lead))
    }
}

/// Echelon form over a dense column space, used for small residual blocks.
pub(crate) struct DenseEchelon {
    p: PrimeModulus,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    leads: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl DenseEchelon {
    pub(crate) fn new(ncols: usize, p: PrimeModulus) -> Self {
        Self {
            p,
            ncols,
            rows: Vec::new(),
            leads: Vec::new(),
            pivot_of_col: vec![None; ncols],
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Inserts a dense vector whose entries are reduced modulo `p`.
    pub(crate) fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p.value() as u64;
        let eager = self.rows.len() as u64 + 1 > lazy_budget(self.p);
        for c in 0..self.ncols {
            let x = v[c] % p;
            if x == 0 {
                continue;
            }
            match self.pivot_of_col[c] {
                Some(r) => {
                    let neg = p - x;
                    let row = &self.rows[r];
                    v[c] = 0;
                    if eager {
                        for j in c + 1..self.ncols {
                            v[j] = (v[j] + neg * row[j] as u64) % p;
                        }
                    } else {
                        for j in c + 1..self.ncols {
                            v[j] += neg * row[j] as u64;
                        }
                    }
                }
                None => {
                    let inv = self.p.inv(x as u32).unwrap() as u64;
                    let row: Vec<u32> = v
                        .iter()
                        .enumerate()
                        .map(|(j, &y)| if j < c { 0 } else { ((y % p) * inv % p) as u32 })
                        .collect();
                    self.pivot_of_col[c] = Some(self.rows.len());
                    self.rows.push(row);
                    self.leads.push(c);
                    return true;
                }
            }
        }
        false
    }

    /// Reduced echelon rows as `(lead, row)`, sorted by lead.
    pub(crate) fn into_rref(mut self) -> Vec<(usize, Vec<u32>)> {
        let p = self.p;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.leads[i]);
        for (pos, &i) in order.iter().enumerate().rev() {
            let lead = self.leads[i];
            let src = self.rows[i].clone();
            for &j in &order[..pos] {
                let a = self.rows[j][lead];
                if a != 0 {
                    let neg = p.neg(a);
                    let dst = &mut self.rows[j];
                    for c in lead..self.ncols {
                        if src[c] != 0 {
                            dst[c] = p.add(dst[c], p.mul(neg, src[c]));
                        }
                    }
                }
            }
        }
        order
            .into_iter()
            .map(|i| (self.leads[i], std::mem::take(&mut self.rows[i])))
            .collect()
    }
}

/// Rank of a set of sparse rows over `ncols` columns.
pub fn rank(rows: &[SparseRow], ncols: usize, p: PrimeModulus) -> usize {
    let mut e = IncrementalRref::new(ncols, p);
    for r in rows {
        if e.is_full() {
            break;
        }
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    /// Textbook elimination with row swaps on a dense copy.
    fn rank_with_swaps(m: &[Vec<u32>], p: u64) -> usize {
        let mut a: Vec<Vec<u64>> = m
            .iter()
            .map(|r| r.iter().map(|&x| x as u64).collect())
            .collect();
        let cols = a.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..a.len()).find(|&i| a[i][c] % p != 0) else {
                continue;
            };
            a.swap(rank, piv);
            let inv = gf(p).inv((a[rank][c] % p) as u32).unwrap() as u64;
            for i in 0..a.len() {
                if i != rank && a[i][c] % p != 0 {
                    let f = a[i][c] * inv % p;
                    for j in 0..cols {
                        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn sparse(dense: &[u32]) -> SparseRow {
        let pairs = dense
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i as u32, v as u64))
            .collect();
        SparseRow::from_pairs(pairs, gf(2_147_483_647))
    }

    #[test]
    fn rref_example() {
        // x^2 + y^2 and y^2 over columns (x^2, xy, y^2)
        let p = gf(7);
        let mut e = IncrementalRref::new(3, p);
        e.insert(&SparseRow::new(vec![0, 2], vec![1, 1]));
        e.insert(&SparseRow::new(vec![2], vec![1]));
        assert_eq!(e.rows()[0], SparseRow::new(vec![0], vec![1]));
        assert_eq!(e.rows()[1], SparseRow::new(vec![2], vec![1]));
        assert_eq!(e.insert(&SparseRow::new(vec![0, 2], vec![3, 4])), None);
    }

    #[test]
    fn random_20x30_matches_swapping_eliminator() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2u64, 7, 101] {
            for _ in 0..50 {
                let m: Vec<Vec<u32>> = (0..20)
                    .map(|_| {
                        (0..30)
                            .map(|_| {
                                if rng.gen_bool(0.3) {
                                    rng.gen_range(0..p as u32)
                                } else {
                                    0
                                }
                            })
                            .collect()
                    })
                    .collect();
                let rows: Vec<SparseRow> = m
                    .iter()
                    .map(|r| {
                        let pairs = r
                            .iter()
                            .enumerate()
                            .filter(|(_, &v)| v != 0)
                            .map(|(i, &v)| (i as u32, v as u64))
                            .collect();
                        SparseRow::from_pairs(pairs, gf(p))
                    })
                    .collect();
                assert_eq!(rank(&rows, 30, gf(p)), rank_with_swaps(&m, p));
                let mut d = DenseEchelon::new(30, gf(p));
                for r in &m {
                    d.insert(r.iter().map(|&x| x as u64).collect());
                }
                assert_eq!(d.rank(), rank_with_swaps(&m, p));
            }
        }
    }

    #[test]
    fn large_prime_eager_path() {
        let p = 2_147_483_647u64;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m: Vec<Vec<u32>> = (0..12)
            .map(|_| (0..10).map(|_| rng.gen_range(0..p as u32)).collect())
            .collect();
        let rows: Vec<SparseRow> = m.iter().map(|r| sparse(r)).collect();
        assert_eq!(rank(&rows, 10, gf(p)), 10);
        let mut d = DenseEchelon::new(10, gf(p));
        for r in &m {
            d.insert(r.iter().map(|&x| x as u64).collect());
        }
        assert_eq!(d.rank(), 10);
    }

    proptest! {
        #[test]
        fn stored_rows_are_reduced(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = gf(7);
            let mut e = IncrementalRref::new(12, p);
            for _ in 0..15 {
                let mut pairs: Vec<(u32, u64)> = Vec::new();
                for c in 0..12 {
                    if rng.gen_bool(0.4) {
                        pairs.push((c, rng.gen_range(1..7)));
                    }
                }
                e.insert(&SparseRow::from_pairs(pairs, p));
            }
            let leads: Vec<u32> = e.rows().iter().map(|r| r.lead().unwrap()).collect();
            for r in e.rows() {
                prop_assert_eq!(r.vals[0], 1);
                for &l in &leads {
                    if Some(l) != r.lead() {
                        prop_assert_eq!(r.get(l), 0);
                    }
                }
            }
        }
    }
}
