//! Monomials, polynomials and systems over GF(p) under degrevlex.
//!
//! Variables are ordered `x_1 > x_2 > ... > x_n`. When a system is homogenized the
//! new variable is appended last, so it is the smallest variable of the order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::PrimeModulus;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("monomials have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("field equations for q = {q} are not supported over GF({p})")]
    UnsupportedExtensionField { q: u64, p: u32 },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
}

/// A monomial as a dense exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// The `i`-th variable (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self { exps, degree: 1 }
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Appends a trailing variable with exponent `e`.
    pub fn extend(&self, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(e);
        Monomial {
            exps,
            degree: self.degree + e as u32,
        }
    }

    /// Drops the trailing variable, returning its exponent.
    pub fn split_last(&self) -> (Monomial, u16) {
        let (last, rest) = self.exps.split_last().expect("monomial in zero variables");
        (Monomial::new(rest.to_vec()), *last)
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Degree reverse lexicographic comparison.
///
/// `a > b` iff `deg a > deg b`, or the degrees agree and the last nonzero entry of
/// `a - b` is negative.
pub fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::LengthMismatch(a.nvars(), b.nvars()));
    }
    Ok(a.cmp(b))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    // smaller exponent in the last differing variable wins
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree exactly `d` in `nvars` variables, descending.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left as u16;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e as u16;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Number of monomials of degree exactly `d` in `nvars` variables, `C(nvars+d-1, d)`.
pub fn binomial_count(nvars: usize, d: u32) -> u64 {
    if nvars == 0 {
        return u64::from(d == 0);
    }
    let (a, b) = ((nvars as u64 - 1) + d as u64, d as u64);
    let b = b.min(a - b);
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1))
}

/// All monomials of degree `<= d`, descending in degrevlex.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    (0..=d)
        .rev()
        .flat_map(|e| monomials_of_degree(nvars, e))
        .collect()
}

/// A polynomial with nonzero coefficients and strictly descending monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    modulus: PrimeModulus,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, modulus: PrimeModulus) -> Self {
        Self {
            nvars,
            modulus,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, modulus: PrimeModulus, c: i64) -> Self {
        Self::from_terms(nvars, modulus, [(Monomial::one(nvars), c)])
    }

    pub fn monomial(m: Monomial, modulus: PrimeModulus) -> Self {
        Self {
            nvars: m.nvars(),
            modulus,
            terms: vec![(m, 1)],
        }
    }

    /// Builds a polynomial from arbitrary terms; like monomials are combined.
    pub fn from_terms(
        nvars: usize,
        modulus: PrimeModulus,
        terms: impl IntoIterator<Item = (Monomial, i64)>,
    ) -> Self {
        let mut raw: Vec<(Monomial, u32)> = terms
            .into_iter()
            .map(|(m, c)| {
                assert_eq!(m.nvars(), nvars, "monomial arity");
                (m, modulus.reduce(c))
            })
            .collect();
        raw.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = modulus.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Self {
            nvars,
            modulus,
            terms: out,
        }
    }

    /// Trusted constructor: terms must already be sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(
        nvars: usize,
        modulus: PrimeModulus,
        terms: Vec<(Monomial, u32)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0 && *c < modulus.value()));
        Self {
            nvars,
            modulus,
            terms,
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the leading monomial; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|(_, c)| *c)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|(m, _)| m.degree() == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn coeff_of(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    fn same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars || self.modulus != other.modulus {
            return Err(PolyError::RingMismatch);
        }
        Ok(())
    }

    /// `self + c * u * other`.
    pub fn add_scaled(&self, c: u32, u: &Monomial, other: &Polynomial) -> Polynomial {
        let p = self.modulus;
        let c = c % p.value();
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(m, v)| (u.mul(m), p.mul(c, *v)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = p.add(*ca, cb);
                        if s != 0 {
                            out.push((m.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial::from_sorted_terms(self.nvars, p, out)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        Ok(self.add_scaled(1, &Monomial::one(self.nvars), other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        let minus_one = self.modulus.neg(1);
        Ok(self.add_scaled(minus_one, &Monomial::one(self.nvars), other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        let mut acc = Polynomial::zero(self.nvars, self.modulus);
        for (m, c) in &other.terms {
            acc = acc.add_scaled(*c, m, self);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let p = self.modulus;
        let c = c % p.value();
        if c == 0 {
            return Polynomial::zero(self.nvars, p);
        }
        Polynomial::from_sorted_terms(
            self.nvars,
            p,
            self.terms
                .iter()
                .map(|(m, v)| (m.clone(), p.mul(c, *v)))
                .collect(),
        )
    }

    pub fn mul_monomial(&self, u: &Monomial) -> Polynomial {
        // multiplication by a monomial preserves degrevlex order
        Polynomial::from_sorted_terms(
            self.nvars,
            self.modulus,
            self.terms.iter().map(|(m, c)| (u.mul(m), *c)).collect(),
        )
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.modulus.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Polynomial {
        Polynomial::from_sorted_terms(
            self.nvars,
            self.modulus,
            self.terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        )
    }

    /// Homogenization `f^h` in `nvars + 1` variables; the new variable is appended last.
    pub fn homogenize(&self) -> Polynomial {
        let d = self.degree().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.extend((d - m.degree()) as u16), *c as i64));
        Polynomial::from_terms(self.nvars + 1, self.modulus, terms)
    }

    /// The highest-degree homogeneous part `f^top`.
    pub fn top_part(&self) -> Result<Polynomial, PolyError> {
        let d = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(self.component(d))
    }

    /// Substitutes `value` for the last variable, returning a polynomial in one fewer
    /// variable.
    pub fn specialize_last(&self, value: u32) -> Polynomial {
        let p = self.modulus;
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let (rest, e) = m.split_last();
            let mut v = 1u32;
            for _ in 0..e {
                v = p.mul(v, value);
            }
            let c = p.mul(*c, v);
            (c != 0).then_some((rest, c as i64))
        });
        Polynomial::from_terms(self.nvars - 1, p, terms)
    }

    /// Divides by the largest power of the last variable dividing every term.
    pub fn strip_last_variable_power(&self) -> Polynomial {
        let k = self
            .terms
            .iter()
            .map(|(m, _)| *m.exponents().last().unwrap())
            .min()
            .unwrap_or(0);
        if k == 0 {
            return self.clone();
        }
        Polynomial::from_sorted_terms(
            self.nvars,
            self.modulus,
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    *e.last_mut().unwrap() -= k;
                    (Monomial::new(e), *c)
                })
                .collect(),
        )
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let p = self.modulus.value();
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            // symmetric representative reads more naturally (x - 1 rather than x + 6)
            let (neg, mag) = if p - c < *c {
                (true, p - c)
            } else {
                (false, *c)
            };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if m.is_one() {
                s.push_str(&mag.to_string());
            } else if mag == 1 {
                s.push_str(&m.render(names));
            } else {
                s.push_str(&format!("{mag}*{}", m.render(names)));
            }
        }
        s
    }
}

/// S-polynomial of two nonzero polynomials, normalized so both leading terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (
        f.leading_monomial().expect("nonzero"),
        g.leading_monomial().expect("nonzero"),
    );
    let l = lf.lcm(lg);
    let uf = lf.quotient_of(&l).unwrap();
    let ug = lg.quotient_of(&l).unwrap();
    let p = f.modulus();
    let a = f
        .mul_monomial(&uf)
        .scale(p.inv(f.leading_coeff().unwrap()).unwrap());
    let cg = p.neg(p.inv(g.leading_coeff().unwrap()).unwrap());
    a.add_scaled(cg, &ug, g)
}

/// Full normal form of `f` modulo `divisors` (multivariate division, remainder only).
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let p = f.modulus();
    let divs: Vec<(&Monomial, u32, &Polynomial)> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            (
                g.leading_monomial().unwrap(),
                p.inv(g.leading_coeff().unwrap()).unwrap(),
                g,
            )
        })
        .collect();
    let mut work = f.clone();
    let mut rem: Vec<(Monomial, u32)> = Vec::new();
    while let Some((lm, lc)) = work.terms.first().cloned() {
        let hit = divs
            .iter()
            .find_map(|(dl, dinv, g)| dl.quotient_of(&lm).map(|u| (u, p.mul(lc, *dinv), *g)));
        match hit {
            Some((u, c, g)) => work = work.add_scaled(p.neg(c), &u, g),
            None => {
                rem.push((lm, lc));
                work.terms.remove(0);
            }
        }
    }
    Polynomial::from_sorted_terms(f.nvars(), p, rem)
}

/// Interreduces a Gröbner basis into the unique reduced, monic basis, sorted by
/// ascending leading monomial.
pub fn reduce_basis(basis: &[Polynomial]) -> Vec<Polynomial> {
    let mut gens: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    gens.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in gens {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[i];
        let head = Polynomial::from_sorted_terms(g.nvars(), g.modulus(), g.terms[..1].to_vec());
        let tail = Polynomial::from_sorted_terms(g.nvars(), g.modulus(), g.terms[1..].to_vec());
        out.push(head.try_add(&normal_form(&tail, &others)).unwrap());
    }
    out
}

/// Ring descriptor: variable names (in decreasing variable order) and the field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    names: Vec<String>,
    modulus: PrimeModulus,
}

impl Ring {
    pub fn new(names: Vec<String>, modulus: PrimeModulus) -> Result<Self, PolyError> {
        if names.is_empty() {
            return Err(PolyError::InvalidRing("need at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            let ok = n
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::InvalidRing(format!("bad variable name {n:?}")));
            }
            if !seen.insert(n.as_str()) {
                return Err(PolyError::InvalidRing(format!("duplicate variable {n}")));
            }
        }
        Ok(Self { names, modulus })
    }

    /// Ring with variables named `x1..xn`.
    pub fn with_default_names(n: usize, modulus: PrimeModulus) -> Result<Self, PolyError> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), modulus)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// `R[t]` with the new variable last. It is called `t` unless that name is taken.
    pub fn homogenizing_extension(&self) -> Ring {
        let mut t = "t".to_string();
        while self.names.contains(&t) {
            t.push('_');
        }
        let mut names = self.names.clone();
        names.push(t);
        Ring {
            names,
            modulus: self.modulus,
        }
    }

    /// `R` without its last variable.
    pub fn drop_last(&self) -> Result<Ring, PolyError> {
        Ring::new(self.names[..self.names.len() - 1].to_vec(), self.modulus)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(self.nvars(), i), self.modulus)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars(), self.modulus)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::constant(self.nvars(), self.modulus, c)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.nvars() == self.nvars() && f.modulus() == self.modulus
    }
}

/// A system `F = {f_1, ..., f_m}` in a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    ring: Ring,
    polys: Vec<Polynomial>,
    /// User assertion that the ideal is in generic coordinates; never verified.
    pub asserted_generic_coordinates: bool,
}

impl PolySystem {
    pub fn new(ring: Ring, polys: Vec<Polynomial>) -> Result<Self, PolyError> {
        if polys.iter().any(|f| !ring.contains(f)) {
            return Err(PolyError::RingMismatch);
        }
        Ok(Self {
            ring,
            polys,
            asserted_generic_coordinates: false,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.polys.iter().all(Polynomial::is_homogeneous)
    }

    /// Degrees of the nonzero polynomials, in system order.
    pub fn degrees(&self) -> Vec<u32> {
        self.polys.iter().filter_map(Polynomial::degree).collect()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.degrees().into_iter().max()
    }

    /// `F^h` in `R[t]`.
    pub fn homogenize(&self) -> PolySystem {
        PolySystem {
            ring: self.ring.homogenizing_extension(),
            polys: self.polys.iter().map(Polynomial::homogenize).collect(),
            asserted_generic_coordinates: self.asserted_generic_coordinates,
        }
    }

    /// `F^top`; zero polynomials are dropped.
    pub fn top_parts(&self) -> PolySystem {
        PolySystem {
            ring: self.ring.clone(),
            polys: self
                .polys
                .iter()
                .filter_map(|f| f.top_part().ok())
                .collect(),
            asserted_generic_coordinates: self.asserted_generic_coordinates,
        }
    }

    /// The first `len` polynomials.
    pub fn prefix(&self, len: usize) -> PolySystem {
        PolySystem {
            ring: self.ring.clone(),
            polys: self.polys[..len].to_vec(),
            asserted_generic_coordinates: self.asserted_generic_coordinates,
        }
    }

    pub fn with_polys(&self, polys: Vec<Polynomial>) -> Result<PolySystem, PolyError> {
        let mut s = PolySystem::new(self.ring.clone(), polys)?;
        s.asserted_generic_coordinates = self.asserted_generic_coordinates;
        Ok(s)
    }

    pub fn render(&self) -> Vec<String> {
        self.polys
            .iter()
            .map(|f| f.render(self.ring.names()))
            .collect()
    }
}

/// Field equations `x_i^q - x_i`. Only `q = p` is supported.
pub fn field_equations(ring: &Ring, q: u64) -> Result<Vec<Polynomial>, PolyError> {
    let p = ring.modulus();
    if q != p.value() as u64 {
        return Err(PolyError::UnsupportedExtensionField { q, p: p.value() });
    }
    let n = ring.nvars();
    Ok((0..n)
        .map(|i| {
            let mut e = vec![0u16; n];
            e[i] = q as u16;
            Polynomial::from_terms(n, p, [(Monomial::new(e), 1), (Monomial::var(n, i), -1)])
        })
        .collect())
}

/// Makes the top parts linearly independent by Gaussian elimination.
///
/// Each polynomial is reduced against the already accepted ones of the same degree
/// (whole polynomials are subtracted). If its top part vanishes, the remainder is
/// processed again at its new, lower degree. Zero remainders are dropped and a
/// nonzero constant turns the whole system into `{1}`. Linear polynomials are kept.
pub fn normalize_system(system: &PolySystem) -> PolySystem {
    let ring = system.ring();
    let p = ring.modulus();
    let mut accepted: Vec<Polynomial> = Vec::new();
    for f in system.polys() {
        let mut f = f.clone();
        'reprocess: loop {
            let Some(d) = f.degree() else { break };
            if d == 0 {
                return PolySystem {
                    ring: ring.clone(),
                    polys: vec![ring.constant(1)],
                    asserted_generic_coordinates: system.asserted_generic_coordinates,
                };
            }
            loop {
                let (lm, lc) = f.terms()[0].clone();
                if lm.degree() < d {
                    continue 'reprocess;
                }
                let pivot = accepted.iter().find(|g| g.leading_monomial() == Some(&lm));
                match pivot {
                    Some(g) => {
                        let c = p.mul(lc, p.inv(g.leading_coeff().unwrap()).unwrap());
                        f = f.add_scaled(p.neg(c), &Monomial::one(ring.nvars()), g);
                        if f.is_zero() {
                            break 'reprocess;
                        }
                    }
                    None => {
                        accepted.push(f);
                        break 'reprocess;
                    }
                }
            }
        }
    }
    PolySystem {
        ring: ring.clone(),
        polys: accepted,
        asserted_generic_coordinates: system.asserted_generic_coordinates,
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.render() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn mono(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn poly(n: usize, p: u64, terms: &[(&[u16], i64)]) -> Polynomial {
        Polynomial::from_terms(n, gf(p), terms.iter().map(|(e, c)| (mono(e), *c)))
    }

    /// Reference comparison straight from the definition.
    fn degrevlex_by_definition(a: &[u16], b: &[u16]) -> Ordering {
        let (da, db): (u32, u32) = (
            a.iter().map(|&x| x as u32).sum(),
            b.iter().map(|&x| x as u32).sum(),
        );
        if da != db {
            return da.cmp(&db);
        }
        let diff: Vec<i32> = a
            .iter()
            .zip(b)
            .map(|(x, y)| *x as i32 - *y as i32)
            .collect();
        match diff.iter().rev().find(|&&v| v != 0) {
            None => Ordering::Equal,
            Some(v) if *v < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    #[test]
    fn degree_two_order_in_three_vars() {
        let got: Vec<Vec<u16>> = monomials_of_degree(3, 2)
            .iter()
            .map(|m| m.exponents().to_vec())
            .collect();
        // x^2 > xy > y^2 > xz > yz > z^2
        let want = vec![
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![0, 2, 0],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![0, 0, 2],
        ];
        assert_eq!(got, want);
        let ms = monomials_of_degree(3, 1);
        assert!(ms[0] > ms[1] && ms[1] > ms[2]);
        assert_eq!(ms[0].exponents(), &[1, 0, 0]);
    }

    #[test]
    fn monomial_counts() {
        for n in 1..5 {
            for d in 0..8 {
                assert_eq!(binomial_count(n, d), monomials_of_degree(n, d).len() as u64);
            }
        }
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(
            degrevlex_cmp(&mono(&[1, 2, 0]), &mono(&[2, 0, 1])),
            Ok(Ordering::Greater)
        );
        assert_eq!(
            degrevlex_cmp(&mono(&[1, 2]), &mono(&[2, 0, 1])),
            Err(PolyError::LengthMismatch(2, 3))
        );
    }

    #[test]
    fn order_matches_definition_exhaustively() {
        for n in 1..=4usize {
            let all = monomials_up_to(n, 6);
            for a in &all {
                for b in &all {
                    let want = degrevlex_by_definition(a.exponents(), b.exponents());
                    assert_eq!(a.cmp(b), want);
                    if a.degree() > b.degree() {
                        assert_eq!(a.cmp(b), Ordering::Greater);
                    }
                }
            }
            assert!(all.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn homogenize_and_top_part() {
        // x^2 + y + 1  ->  x^2 + y t + t^2
        let f = poly(2, 7, &[(&[2, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        let fh = f.homogenize();
        let want = poly(3, 7, &[(&[2, 0, 0], 1), (&[0, 1, 1], 1), (&[0, 0, 2], 1)]);
        assert_eq!(fh, want);
        assert_eq!(f.top_part().unwrap(), poly(2, 7, &[(&[2, 0], 1)]));

        let g = poly(2, 7, &[(&[2, 0], 1), (&[1, 1], 1)]);
        assert_eq!(
            g.homogenize(),
            poly(3, 7, &[(&[2, 0, 0], 1), (&[1, 1, 0], 1)])
        );
        assert_eq!(g.top_part().unwrap(), g);
        assert_eq!(
            Polynomial::zero(2, gf(7)).top_part(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn homogenize_gap_system() {
        let sys = [
            poly(2, 7, &[(&[4, 0], 1), (&[0, 0], -1)]),
            poly(2, 7, &[(&[2, 1], 1), (&[2, 0], -1)]),
            poly(2, 7, &[(&[0, 2], 1), (&[0, 0], -1)]),
        ];
        let want = [
            poly(3, 7, &[(&[4, 0, 0], 1), (&[0, 0, 4], -1)]),
            poly(3, 7, &[(&[2, 1, 0], 1), (&[2, 0, 1], -1)]),
            poly(3, 7, &[(&[0, 2, 0], 1), (&[0, 0, 2], -1)]),
        ];
        let tops = [
            poly(2, 7, &[(&[4, 0], 1)]),
            poly(2, 7, &[(&[2, 1], 1)]),
            poly(2, 7, &[(&[0, 2], 1)]),
        ];
        for i in 0..3 {
            assert_eq!(sys[i].homogenize(), want[i]);
            assert_eq!(sys[i].top_part().unwrap(), tops[i]);
        }
    }

    #[test]
    fn field_equation_examples() {
        let r = Ring::new(vec!["x".into(), "y".into(), "z".into()], gf(7)).unwrap();
        let fe = field_equations(&r, 7).unwrap();
        assert_eq!(fe.len(), 3);
        assert_eq!(fe[1].render(r.names()), "y^7 - y");
        let r2 = Ring::new(vec!["x".into()], gf(2)).unwrap();
        assert_eq!(
            field_equations(&r2, 2).unwrap()[0].render(r2.names()),
            "x^2 + x"
        );
        let r3 = Ring::new(vec!["x".into(), "y".into()], gf(3)).unwrap();
        let fe3 = field_equations(&r3, 3).unwrap();
        assert_eq!(fe3[0].render(r3.names()), "x^3 - x");
        assert_eq!(fe3[1].render(r3.names()), "y^3 - y");
        assert_eq!(
            field_equations(&r3, 9),
            Err(PolyError::UnsupportedExtensionField { q: 9, p: 3 })
        );
    }

    #[test]
    fn ring_validation() {
        assert!(Ring::new(vec![], gf(7)).is_err());
        assert!(Ring::new(vec!["x".into(), "x".into()], gf(7)).is_err());
        assert!(Ring::new(vec!["2x".into()], gf(7)).is_err());
        let r = Ring::new(vec!["t".into(), "x".into()], gf(7)).unwrap();
        assert_eq!(r.homogenizing_extension().names()[2], "t_");
    }

    fn system(p: u64, polys: Vec<Polynomial>) -> PolySystem {
        let ring = Ring::new(vec!["x".into(), "y".into()], gf(p)).unwrap();
        PolySystem::new(ring, polys).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let x2 = poly(2, 7, &[(&[2, 0], 1)]);
        let y2 = poly(2, 7, &[(&[0, 2], 1)]);
        let s = system(
            7,
            vec![x2.clone(), poly(2, 7, &[(&[2, 0], 1), (&[0, 2], 1)])],
        );
        assert_eq!(normalize_system(&s).polys(), &[x2.clone(), y2]);

        let s = system(
            7,
            vec![
                poly(2, 7, &[(&[2, 0], 1), (&[0, 0], 1)]),
                poly(2, 7, &[(&[2, 0], 1), (&[0, 0], 2)]),
            ],
        );
        assert_eq!(normalize_system(&s).polys(), &[poly(2, 7, &[(&[0, 0], 1)])]);

        let s = system(
            7,
            vec![x2.clone(), poly(2, 7, &[(&[2, 0], 1), (&[0, 1], 1)])],
        );
        assert_eq!(
            normalize_system(&s).polys(),
            &[x2, poly(2, 7, &[(&[0, 1], 1)])]
        );
    }

    #[test]
    fn s_polynomial_and_normal_form() {
        // x^2 - y and y^2 - x: x^4 - x lies in the ideal
        let f = poly(2, 7, &[(&[2, 0], 1), (&[0, 1], -1)]);
        let g = poly(2, 7, &[(&[0, 2], 1), (&[1, 0], -1)]);
        let s = s_polynomial(&f, &g);
        // y^2 f - x^2 g = x^3 - y^3
        assert_eq!(s, poly(2, 7, &[(&[3, 0], 1), (&[0, 3], -1)]));
        let h = poly(2, 7, &[(&[4, 0], 1), (&[1, 0], -1)]);
        // not a Groebner basis yet, but division still yields a valid remainder
        let r = normal_form(&h, &[f.clone(), g.clone()]);
        assert!(r
            .terms()
            .iter()
            .all(|(m, _)| !f.leading_monomial().unwrap().divides(m)
                && !g.leading_monomial().unwrap().divides(m)));
    }

    fn arb_poly(n: usize, p: u64) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u16..4, n), -20i64..20), 0..8).prop_map(
            move |ts| {
                Polynomial::from_terms(n, gf(p), ts.into_iter().map(|(e, c)| (Monomial::new(e), c)))
            },
        )
    }

    proptest! {
        #[test]
        fn top_part_is_homogenize_then_t_zero(f in arb_poly(3, 7)) {
            prop_assume!(!f.is_zero());
            let via_t = f.homogenize().specialize_last(0);
            prop_assert_eq!(f.top_part().unwrap(), via_t);
        }

        #[test]
        fn homogenize_keeps_terms_and_dehomogenizes(f in arb_poly(3, 101)) {
            let fh = f.homogenize();
            prop_assert_eq!(fh.len(), f.len());
            prop_assert!(fh.is_homogeneous());
            let mut c1: Vec<u32> = f.terms().iter().map(|t| t.1).collect();
            let mut c2: Vec<u32> = fh.terms().iter().map(|t| t.1).collect();
            c1.sort_unstable();
            c2.sort_unstable();
            prop_assert_eq!(c1, c2);
            prop_assert_eq!(fh.specialize_last(1), f);
        }

        #[test]
        fn multiplication_is_commutative_and_distributive(f in arb_poly(2, 7), g in arb_poly(2, 7), h in arb_poly(2, 7)) {
            prop_assert_eq!(f.try_mul(&g).unwrap(), g.try_mul(&f).unwrap());
            let lhs = f.try_mul(&g.try_add(&h).unwrap()).unwrap();
            let rhs = f.try_mul(&g).unwrap().try_add(&f.try_mul(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn normalized_top_parts_have_distinct_leading_terms(fs in prop::collection::vec(arb_poly(2, 7), 1..6)) {
            let ring = Ring::new(vec!["x".into(), "y".into()], gf(7)).unwrap();
            let s = PolySystem::new(ring, fs).unwrap();
            let out = normalize_system(&s);
            if out.polys().len() == 1 && out.polys()[0].is_constant() {
                return Ok(());
            }
            let lms: Vec<_> = out.polys().iter().map(|f| f.leading_monomial().unwrap().clone()).collect();
            let uniq: HashSet<_> = lms.iter().collect();
            prop_assert_eq!(uniq.len(), lms.len());
            prop_assert!(out.polys().iter().all(|f| f.degree().unwrap() >= 1));
        }
    }
}
