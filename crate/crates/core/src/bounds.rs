//! Degree-of-regularity bounds: Hilbert series of semi-regular sequences, exact
//! closed forms for quadrics, Macaulay/ACI/EGH bounds and Macaulay expansions.
//!
//! All series arithmetic is exact (`BigInt`); closed forms are evaluated by integer
//! sign tests.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("closed form only covers m - n in 2..=5 (got {0})")]
    UnsupportedGap(i64),
    #[error("underdetermined request: m = {m} equations, n = {n} variables")]
    Underdetermined { m: usize, n: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unsupported degrees: {0}")]
    UnsupportedDegrees(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("table parse error: {0}")]
    TableParse(String),
    #[error("series and closed form disagree at k = {k}, n = {n}")]
    Inconsistent { k: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, BoundsError>;

/// Power series coefficients `c_0..=c_cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Panics on an empty vector: a series always has a constant term.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![BigInt::zero()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficient at `d`, zero beyond the cap.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }
}

/// `[h]`: keep the initial run of strictly positive coefficients.
pub fn series_truncate_positive(h: &TruncatedSeries) -> TruncatedSeries {
    let run = h.coeffs.iter().take_while(|c| c.is_positive()).count();
    if run == 0 {
        return TruncatedSeries::zero();
    }
    TruncatedSeries::new(h.coeffs[..run].to_vec())
}

/// Lazily yields the coefficients of `prod(1 - z^d_i) / (1 - z)^n`.
pub struct SemiregularCoefficients {
    n: usize,
    /// Sparse numerator, ascending exponents, computed up to `limit`.
    numerator: Vec<(usize, BigInt)>,
    /// `C(n - 1 + j, j)` for `j < binom.len()`.
    binom: Vec<BigInt>,
    next: usize,
    limit: usize,
}

impl SemiregularCoefficients {
    pub fn new(n: usize, degrees: &[u32], limit: usize) -> Self {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &d in degrees {
            *counts.entry(d as usize).or_default() += 1;
        }
        let mut numerator: Vec<(usize, BigInt)> = vec![(0, BigInt::one())];
        for (d, c) in counts {
            // (1 - z^d)^c = sum_j (-1)^j C(c, j) z^{dj}
            let mut factor = Vec::new();
            let mut b = BigInt::one();
            for j in 0..=c {
                if d * j > limit {
                    break;
                }
                let v = if j % 2 == 0 { b.clone() } else { -b.clone() };
                factor.push((d * j, v));
                b = b * (c - j) / (j + 1);
            }
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (e1, c1) in &numerator {
                for (e2, c2) in &factor {
                    if e1 + e2 > limit {
                        break;
                    }
                    *acc.entry(e1 + e2).or_default() += c1 * c2;
                }
            }
            numerator = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        Self {
            n,
            numerator,
            binom: Vec::new(),
            next: 0,
            limit,
        }
    }

    fn binom(&mut self, j: usize) -> &BigInt {
        while self.binom.len() <= j {
            let k = self.binom.len();
            let v = if k == 0 {
                BigInt::one()
            } else {
                &self.binom[k - 1] * (self.n - 1 + k) / k
            };
            self.binom.push(v);
        }
        &self.binom[j]
    }
}

impl Iterator for SemiregularCoefficients {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let k = self.next;
        if k > self.limit {
            return None;
        }
        self.next += 1;
        if self.n == 0 {
            return Some(
                self.numerator
                    .iter()
                    .find(|(e, _)| *e == k)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_default(),
            );
        }
        self.binom(k);
        let mut s = BigInt::zero();
        for (e, c) in &self.numerator {
            if *e > k {
                break;
            }
            s += c * &self.binom[k - e];
        }
        Some(s)
    }
}

/// Degree cap for series searches: the Macaulay bound when `m >= n`, otherwise the
/// sum of all `d_i - 1` plus one.
pub fn series_cap(n: usize, degrees: &[u32]) -> usize {
    macaulay_bound(n, degrees)
        .unwrap_or_else(|_| degrees.iter().map(|&d| d.saturating_sub(1)).sum::<u32>() + 1)
        as usize
}

/// `[prod(1 - z^d_i) / (1 - z)^n]`.
///
/// When the series has no non-positive coefficient up to the cap (only possible for
/// `m < n`) the result is cut at the cap.
pub fn semiregular_series(n: usize, degrees: &[u32]) -> TruncatedSeries {
    let cap = series_cap(n, degrees);
    let coeffs: Vec<BigInt> = SemiregularCoefficients::new(n, degrees, cap)
        .take_while(|c| c.is_positive())
        .collect();
    if coeffs.is_empty() {
        TruncatedSeries::zero()
    } else {
        TruncatedSeries::new(coeffs)
    }
}

/// Raw (untruncated) coefficients `c_0..=c_upto`.
pub fn semiregular_coefficients(n: usize, degrees: &[u32], upto: usize) -> Vec<BigInt> {
    SemiregularCoefficients::new(n, degrees, upto).collect()
}

/// The least degree with a non-positive coefficient, searched up to the cap.
pub fn reg_from_series(n: usize, degrees: &[u32]) -> Option<u32> {
    let cap = series_cap(n, degrees);
    SemiregularCoefficients::new(n, degrees, cap)
        .position(|c| !c.is_positive())
        .map(|k| k as u32)
}

/// `r! * [z^k] (1 - z^2)^{n+r} / (1 - z)^n` as an explicit polynomial in `k`.
fn closed_form_poly(r: i64, n: i128, k: i128) -> i128 {
    match r {
        2 => 4 * k * k - 4 * (4 + n) * k + n * n + 7 * n + 12,
        3 => {
            -8 * k.pow(3) + 12 * (6 + n) * k.pow(2) - 2 * (92 + 33 * n + 3 * n * n) * k
                + n.pow(3)
                + 15 * n * n
                + 74 * n
                + 120
        }
        4 => {
            16 * k.pow(4) - 32 * (8 + n) * k.pow(3) + 8 * (172 + 45 * n + 3 * n * n) * k * k
                - 8 * (352 + 148 * n + 21 * n * n + n.pow(3)) * k
                + n.pow(4)
                + 26 * n.pow(3)
                + 251 * n * n
                + 1066 * n
                + 1680
        }
        5 => {
            -32 * k.pow(5) + 80 * (10 + n) * k.pow(4) - 80 * (92 + 19 * n + n * n) * k.pow(3)
                + 40 * (760 + 246 * n + 27 * n * n + n.pow(3)) * k * k
                - 2 * (27024 + 12450 * n + 2175 * n * n + 170 * n.pow(3) + 5 * n.pow(4)) * k
                + n.pow(5)
                + 40 * n.pow(4)
                + 635 * n.pow(3)
                + 5000 * n * n
                + 19524 * n
                + 30240
        }
        _ => unreachable!("gap checked by caller"),
    }
}

/// Exact regularity of `m` generic quadrics in `n` variables for `m - n` in `2..=5`.
///
/// Searches upward from `k = 0` for the first `k` with a non-positive value of the
/// integer polynomial.
pub fn closed_form_r(m: usize, n: usize) -> Result<u32> {
    let r = m as i64 - n as i64;
    if !(2..=5).contains(&r) {
        return Err(BoundsError::UnsupportedGap(r));
    }
    if n < 2 {
        return Err(BoundsError::PreconditionViolated(format!("n = {n} < 2")));
    }
    let nn = n as i128;
    // the series of m >= n quadrics goes non-positive by the Macaulay bound n + 1
    (0..=n as u32 + 1)
        .find(|&k| closed_form_poly(r, nn, k as i128) <= 0)
        .ok_or(BoundsError::Inconsistent { k: r as usize, n })
}

/// Sum of the `n` largest `d_i - 1`, plus one.
pub fn macaulay_bound(n: usize, degrees: &[u32]) -> Result<u32> {
    if degrees.len() < n {
        return Err(BoundsError::Underdetermined {
            m: degrees.len(),
            n,
        });
    }
    let mut ds = degrees.to_vec();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ds[..n].iter().map(|&d| d.saturating_sub(1)).sum::<u32>() + 1)
}

/// `floor((sum d_i - n - 1) / 2) + 1` for `n + 1` polynomials with
/// `d_{n+1} <= d_1 + ... + d_n - n` after sorting.
pub fn aci_bound(n: usize, degrees: &[u32]) -> Result<u32> {
    if degrees.len() != n + 1 {
        return Err(BoundsError::PreconditionViolated(format!(
            "need n + 1 = {} degrees, got {}",
            n + 1,
            degrees.len()
        )));
    }
    let mut ds = degrees.to_vec();
    ds.sort_unstable();
    let head: i64 = ds[..n].iter().map(|&d| d as i64).sum();
    let last = ds[n] as i64;
    if last > head - n as i64 {
        return Err(BoundsError::PreconditionViolated(format!(
            "largest degree {last} exceeds d_1 + ... + d_n - n = {}; drop the last polynomial",
            head - n as i64
        )));
    }
    let total = head + last;
    Ok(((total - n as i64 - 1).div_euclid(2) + 1) as u32)
}

/// Bound for `m >= n + 5` quadrics (`d = 2`) or `m >= n + 1` cubics (`d = 3`).
pub fn largerm_bound(n: usize, d: u32) -> Result<u32> {
    match d {
        2 => closed_form_r(n + 5, n),
        3 => Ok(n as u32 + 2),
        _ => Err(BoundsError::UnsupportedDegrees(format!(
            "d = {d}, expected 2 or 3"
        ))),
    }
}

/// Solving-degree bound for an inhomogeneous system of `m` polynomials in `n`
/// variables, via its homogenization in `n + 1` variables.
pub fn inhomog_bound(m: usize, n: usize, degrees: &[u32]) -> Result<u32> {
    if degrees.len() != m {
        return Err(BoundsError::PreconditionViolated(format!(
            "m = {m} but {} degrees given",
            degrees.len()
        )));
    }
    if m < n + 1 {
        return Err(BoundsError::Underdetermined { m, n });
    }
    let nh = n + 1;
    if m == nh {
        return Ok(degrees.iter().sum::<u32>() - n as u32);
    }
    if m == nh + 1 {
        return aci_bound(nh, degrees);
    }
    let all = |d: u32| degrees.iter().all(|&x| x == d);
    if all(2) {
        if m <= nh + 5 {
            closed_form_r(m, nh)
        } else {
            largerm_bound(nh, 2)
        }
    } else if all(3) {
        Ok(n as u32 + 3)
    } else {
        Err(BoundsError::UnsupportedDegrees(
            "m > n + 2 needs all degrees equal to 2 or all equal to 3".into(),
        ))
    }
}

/// Binomial coefficient saturating at `u128::MAX`.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        // acc * (a - i) / (i + 1) stays integral at every step
        let num = (a - i) as u128;
        match acc.checked_mul(num) {
            Some(v) => acc = v / (i as u128 + 1),
            None => {
                let g = gcd(acc, i as u128 + 1);
                let (x, y) = (acc / g, (i as u128 + 1) / g);
                match (num / y).checked_mul(x) {
                    Some(v) if num.is_multiple_of(y) => acc = v,
                    _ => return u128::MAX,
                }
            }
        }
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `l = sum C(l_j, j)` with `l_d > l_{d-1} > ... > l_1 >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayExpansion {
    pub value: u64,
    pub d: u32,
    /// Pairs `(l_j, j)` for `j = d, d-1, ..., 1`; empty for `l = 0`.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayExpansion {
    pub fn evaluate(&self) -> u128 {
        self.terms.iter().map(|&(a, j)| binomial(a, j as u64)).sum()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, j)| format!("C({a},{j})"))
            .collect();
        parts.join(" + ")
    }
}

/// Greedy expansion: the largest `l_d` with `C(l_d, d) <= l`, then recurse.
pub fn macaulay_expansion(l: u64, d: u32) -> MacaulayExpansion {
    let mut terms = Vec::new();
    if l > 0 {
        let mut rem = l as u128;
        for j in (1..=d as u64).rev() {
            let a = largest_with_binomial_at_most(j, rem);
            rem -= binomial(a, j);
            terms.push((a, j as u32));
        }
        debug_assert_eq!(rem, 0);
    }
    MacaulayExpansion { value: l, d, terms }
}

fn largest_with_binomial_at_most(j: u64, target: u128) -> u64 {
    // C(j - 1, j) = 0 always qualifies
    let mut lo = j - 1;
    let mut hi = j.max(1);
    while binomial(hi, j) <= target {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, j) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `l^(d) = sum C(l_j, j + 1)` over the Macaulay expansion of `l`.
pub fn macaulay_shift(l: u64, d: u32) -> u128 {
    macaulay_expansion(l, d)
        .terms
        .iter()
        .map(|&(a, j)| binomial(a, j as u64 + 1))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EghVariant {
    Homogeneous,
    Inhomogeneous,
    /// Weil descent of `m` quadrics over a degree-`d` extension.
    Weil {
        d: u32,
    },
    WeilInhomog {
        d: u32,
    },
}

/// The quadric-count window that determines an EGH bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EghWindow {
    /// Number of variables the window is computed in.
    pub vars: u64,
    pub alpha: i64,
    pub bound: u64,
}

/// The unique `alpha` in `-1..vars` with
/// `C(N+1,2) - C(N-alpha,2) < m <= C(N+1,2) - C(N-alpha-1,2)` where `N = vars`.
pub fn egh_window(m: u64, vars: u64) -> Result<EghWindow> {
    let total = binomial(vars + 1, 2);
    if m == 0 || m as u128 > total {
        return Err(BoundsError::OutOfRange(format!(
            "m = {m} outside 1..={total} for {vars} variables"
        )));
    }
    let c2 = |x: i64| if x < 2 { 0 } else { binomial(x as u64, 2) };
    let n = vars as i64;
    for alpha in -1..n {
        let lower = total - c2(n - alpha);
        let upper = total - c2(n - alpha - 1);
        if lower < m as u128 && m as u128 <= upper {
            return Ok(EghWindow {
                vars,
                alpha,
                bound: (n - alpha) as u64,
            });
        }
    }
    unreachable!("windows partition 1..=C(N+1,2)")
}

/// EGH-type solving-degree bound for `m` quadrics in `n` variables.
///
/// For the Weil variants `m` is the number of independent quadrics after descent and
/// the window is taken over `n*d` (homogeneous) or `(n+1)*d` variables.
pub fn egh_bound(m: u64, n: u64, variant: EghVariant) -> Result<EghWindow> {
    match variant {
        EghVariant::Homogeneous => {
            if m < n {
                return Err(BoundsError::OutOfRange(format!("m = {m} < n = {n}")));
            }
            egh_window(m, n)
        }
        EghVariant::Inhomogeneous => {
            if m < n + 1 {
                return Err(BoundsError::OutOfRange(format!(
                    "m = {m} < n + 1 = {}",
                    n + 1
                )));
            }
            egh_window(m, n + 1)
        }
        EghVariant::Weil { d } => egh_window(m, n * d as u64),
        EghVariant::WeilInhomog { d } => egh_window(m, (n + 1) * d as u64),
    }
}

/// A grid of regularities indexed by `k = m - n` (rows) and `n` (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegTable {
    pub ks: Vec<usize>,
    pub ns: Vec<usize>,
    /// `entries[i][j]` belongs to `(ks[i], ns[j])`.
    pub entries: Vec<Vec<u32>>,
}

impl RegTable {
    pub fn get(&self, k: usize, n: usize) -> Option<u32> {
        let i = self.ks.iter().position(|&x| x == k)?;
        let j = self.ns.iter().position(|&x| x == n)?;
        Some(self.entries[i][j])
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("k/n");
        for n in &self.ns {
            write!(s, "\t{n}").unwrap();
        }
        s.push('\n');
        for (k, row) in self.ks.iter().zip(&self.entries) {
            write!(s, "{k}").unwrap();
            for v in row {
                write!(s, "\t{v}").unwrap();
            }
            s.push('\n');
        }
        s
    }

    pub fn from_tsv(text: &str) -> Result<Self> {
        let bad = |msg: String| BoundsError::TableParse(msg);
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty table".into()))?;
        let mut cells = header.split('\t');
        if cells.next() != Some("k/n") {
            return Err(bad("header must start with k/n".into()));
        }
        let ns = cells
            .map(|c| {
                c.trim()
                    .parse::<usize>()
                    .map_err(|e| bad(format!("header: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut ks = Vec::new();
        let mut entries = Vec::new();
        for (i, line) in lines.enumerate() {
            let vals = line
                .split('\t')
                .map(|c| {
                    c.trim()
                        .parse::<u64>()
                        .map_err(|e| bad(format!("row {}: {e}", i + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != ns.len() + 1 {
                return Err(bad(format!("row {} has {} cells", i + 1, vals.len())));
            }
            ks.push(vals[0] as usize);
            entries.push(vals[1..].iter().map(|&v| v as u32).collect());
        }
        Ok(Self { ks, ns, entries })
    }
}

/// Regularity of `n + k` generic forms of degree `d` in `n` variables over a grid.
///
/// For quadrics with `k` in `2..=5` every entry is cross-checked against the closed
/// form.
pub fn table_generate(
    ks: impl IntoIterator<Item = usize>,
    ns: impl IntoIterator<Item = usize>,
    d: u32,
) -> Result<RegTable> {
    let ks: Vec<usize> = ks.into_iter().collect();
    let ns: Vec<usize> = ns.into_iter().collect();
    let mut entries = Vec::with_capacity(ks.len());
    for &k in &ks {
        let mut row = Vec::with_capacity(ns.len());
        for &n in &ns {
            let v =
                reg_from_series(n, &vec![d; n + k]).ok_or(BoundsError::Inconsistent { k, n })?;
            if d == 2 && (2..=5).contains(&k) && n >= 2 && closed_form_r(n + k, n)? != v {
                return Err(BoundsError::Inconsistent { k, n });
            }
            row.push(v);
        }
        entries.push(row);
    }
    Ok(RegTable { ks, ns, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Dense power-series division by `(1 - z)` repeated `n` times, in i128.
    fn dense_series(n: usize, degrees: &[u32], len: usize) -> Vec<i128> {
        let mut c = vec![0i128; len];
        c[0] = 1;
        for &d in degrees {
            for i in (d as usize..len).rev() {
                c[i] -= c[i - d as usize];
            }
        }
        for _ in 0..n {
            for i in 1..len {
                c[i] += c[i - 1];
            }
        }
        c
    }

    #[test]
    fn truncation_examples() {
        let t = |v: &[i64]| {
            series_truncate_positive(&TruncatedSeries::from_i64(v))
                .to_i64()
                .unwrap()
        };
        assert_eq!(t(&[1, 2, -1, 1]), vec![1, 2]);
        assert_eq!(t(&[1, 2, 0, 5]), vec![1, 2]);
        assert_eq!(t(&[0, 2]), vec![0]);
        assert!(series_truncate_positive(&TruncatedSeries::from_i64(&[-1])).is_zero());
    }

    #[test]
    fn semiregular_examples() {
        let s = |n, ds: &[u32]| semiregular_series(n, ds).to_i64().unwrap();
        assert_eq!(s(2, &[2, 2, 2]), vec![1, 2]);
        assert_eq!(s(2, &[2, 2]), vec![1, 2, 1]);
        assert_eq!(s(3, &[2, 2, 2, 2]), vec![1, 3, 2]);
        assert_eq!(reg_from_series(10, &[2; 12]), Some(6));
        assert_eq!(reg_from_series(2, &[2, 2]), Some(3));
        assert_eq!(reg_from_series(11, &[2; 14]), Some(5));
        // fewer equations than variables: never non-positive
        assert_eq!(reg_from_series(3, &[2, 2]), None);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_r(12, 10), Ok(6));
        assert_eq!(closed_form_r(14, 11), Ok(5));
        assert_eq!(closed_form_r(30, 26), Ok(11));
        assert_eq!(closed_form_r(11, 10), Err(BoundsError::UnsupportedGap(1)));
        assert_eq!(closed_form_r(16, 10), Err(BoundsError::UnsupportedGap(6)));
    }

    #[test]
    fn closed_form_polynomials_match_binomial_sum() {
        // r! * sum_l (-1)^l C(2r + n - k, r - l) C(k, l), an independent formula for
        // the coefficient, checked against the expanded polynomials
        fn c(a: i128, b: i128) -> i128 {
            if b < 0 || a < b {
                return 0;
            }
            (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
        }
        for r in 2..=5i128 {
            let fact: i128 = (1..=r).product();
            for n in 2..40i128 {
                for k in 0..=(2 * r + n) {
                    let sum: i128 = (0..=r)
                        .map(
                            |l| if l % 2 == 0 { 1 } else { -1 } * c(2 * r + n - k, r - l) * c(k, l),
                        )
                        .sum();
                    assert_eq!(
                        closed_form_poly(r as i64, n, k),
                        fact * sum,
                        "r={r} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn macaulay_bound_examples() {
        assert_eq!(macaulay_bound(3, &[2, 2, 2]), Ok(4));
        assert_eq!(macaulay_bound(2, &[2, 2, 3, 3]), Ok(5));
        assert_eq!(macaulay_bound(2, &[2, 2]), Ok(3));
        assert_eq!(
            macaulay_bound(3, &[2, 2]),
            Err(BoundsError::Underdetermined { m: 2, n: 3 })
        );
    }

    #[test]
    fn aci_examples() {
        assert_eq!(aci_bound(9, &[2; 10]), Ok(6));
        assert_eq!(aci_bound(5, &[3; 6]), Ok(7));
        assert_eq!(aci_bound(2, &[2, 2, 2]), Ok(2));
        assert_eq!(reg_from_series(2, &[2, 2, 2]), Some(2));
        assert!(matches!(
            aci_bound(2, &[2, 2, 5]),
            Err(BoundsError::PreconditionViolated(_))
        ));
        assert!(matches!(
            aci_bound(2, &[2, 2]),
            Err(BoundsError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn largerm_and_inhomog_examples() {
        assert_eq!(largerm_bound(7, 3), Ok(9));
        assert_eq!(largerm_bound(20, 2), Ok(8));
        assert_eq!(largerm_bound(2, 2), Ok(2));
        assert_eq!(inhomog_bound(7, 6, &[2; 7]), Ok(8));
        assert_eq!(inhomog_bound(5, 4, &[3; 5]), Ok(11));
        assert_eq!(inhomog_bound(14, 11, &[2; 14]), Ok(6));
        assert_eq!(
            inhomog_bound(3, 3, &[2; 3]),
            Err(BoundsError::Underdetermined { m: 3, n: 3 })
        );
        assert!(matches!(
            inhomog_bound(6, 3, &[2, 2, 2, 3, 3, 3]),
            Err(BoundsError::UnsupportedDegrees(_))
        ));
    }

    #[test]
    fn expansion_examples() {
        let e = macaulay_expansion(8, 3);
        assert_eq!(e.terms, vec![(4, 3), (3, 2), (1, 1)]);
        assert_eq!(
            macaulay_expansion(10, 3).terms,
            vec![(5, 3), (1, 2), (0, 1)]
        );
        assert!(macaulay_expansion(0, 4).terms.is_empty());
        assert_eq!(macaulay_shift(8, 3), 2);
        assert_eq!(macaulay_shift(10, 3), 5);
        assert_eq!(macaulay_shift(0, 3), 0);
    }

    #[test]
    fn expansion_round_trip_small_exhaustive() {
        for d in 1..=10u32 {
            for l in 0..=100_000u64 {
                let e = macaulay_expansion(l, d);
                assert_eq!(e.evaluate(), l as u128, "l={l} d={d}");
                assert!(e.terms.windows(2).all(|w| w[0].0 > w[1].0));
            }
        }
    }

    #[test]
    fn egh_examples() {
        for n in 1..20u64 {
            assert_eq!(
                egh_bound(n, n, EghVariant::Homogeneous).unwrap().bound,
                n + 1
            );
            let full = binomial(n + 1, 2) as u64;
            assert_eq!(
                egh_bound(full, n, EghVariant::Homogeneous).unwrap().bound,
                2.min(n + 1)
            );
        }
        let w = egh_bound(15, 2, EghVariant::Weil { d: 3 }).unwrap();
        assert_eq!((w.alpha, w.bound), (1, 5));
        assert_eq!(
            egh_bound(10, 10, EghVariant::Homogeneous).unwrap().bound,
            11
        );
        assert!(egh_bound(56, 10, EghVariant::Homogeneous).is_err());
        assert!(egh_bound(5, 10, EghVariant::Homogeneous).is_err());
        assert_eq!(
            egh_bound(11, 10, EghVariant::Inhomogeneous).unwrap().bound,
            12
        );
    }

    #[test]
    fn table_examples() {
        let t = table_generate([2, 100], [2, 100], 2).unwrap();
        assert_eq!(t.get(2, 2), Some(2));
        assert_eq!(t.get(100, 100), Some(14));
        assert_eq!(t.get(2, 100), Some(47));
        assert_eq!(RegTable::from_tsv(&t.to_tsv()).unwrap(), t);
    }

    #[test]
    fn quadric_gap_one_matches_aci() {
        for n in 2..=500usize {
            assert_eq!(
                reg_from_series(n, &vec![2; n + 1]),
                Some((n as u32 + 1) / 2 + 1),
                "n={n}"
            );
        }
    }

    #[test]
    fn closed_form_matches_series_up_to_500() {
        for n in 2..=500usize {
            for r in 2..=5usize {
                assert_eq!(
                    closed_form_r(n + r, n).ok(),
                    reg_from_series(n, &vec![2; n + r]),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn regular_sequences_hit_macaulay_bound() {
        fn rec(n: usize, acc: &mut Vec<u32>) {
            if acc.len() == n {
                assert_eq!(
                    reg_from_series(n, acc),
                    macaulay_bound(n, acc).ok(),
                    "{acc:?}"
                );
                return;
            }
            let lo = acc.last().copied().unwrap_or(1);
            for d in lo..=4 {
                acc.push(d);
                rec(n, acc);
                acc.pop();
            }
        }
        for n in 1..=6 {
            rec(n, &mut Vec::new());
        }
    }

    #[test]
    fn grid_is_monotone() {
        let t = table_generate(2..=100, 2..=100, 2).unwrap();
        for j in 0..t.ns.len() {
            for i in 1..t.ks.len() {
                assert!(t.entries[i][j] <= t.entries[i - 1][j]);
            }
        }
        for row in &t.entries {
            assert!(row.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    proptest! {
        #[test]
        fn lazy_series_matches_dense(n in 1usize..8, ds in prop::collection::vec(1u32..5, 0..9)) {
            let len = 30;
            let dense = dense_series(n, &ds, len);
            let lazy = semiregular_coefficients(n, &ds, len - 1);
            for (a, b) in dense.iter().zip(&lazy) {
                prop_assert_eq!(BigInt::from(*a), b.clone());
            }
        }

        #[test]
        fn egh_window_satisfies_both_inequalities(n in 1u64..60, frac in 0.0f64..1.0) {
            let total = binomial(n + 1, 2) as u64;
            let m = n + ((total - n) as f64 * frac) as u64;
            let w = egh_bound(m, n, EghVariant::Homogeneous).unwrap();
            let c2 = |x: i64| if x < 2 { 0 } else { binomial(x as u64, 2) as i64 };
            let (t, ni) = (total as i64, n as i64);
            prop_assert!(t - c2(ni - w.alpha) < m as i64);
            prop_assert!(m as i64 <= t - c2(ni - w.alpha - 1));
            prop_assert!(w.alpha >= -1 && w.alpha < ni);
        }

        #[test]
        fn expansion_round_trip(l in 0u64..10_000_000_000, d in 1u32..12) {
            let e = macaulay_expansion(l, d);
            prop_assert_eq!(e.evaluate(), l as u128);
            prop_assert!(e.terms.windows(2).all(|w| w[0].0 > w[1].0));
        }
    }
}
