//! Macaulay matrices: rows are products `u * f_j`, columns are monomials of degree at
//! most `d` in decreasing degrevlex order.

use std::collections::HashMap;

use crate::field::PrimeModulus;
use crate::poly::{monomials_of_degree, monomials_up_to, Monomial, PolySystem, Polynomial};

use super::echelon::SparseRow;
use super::MacaulayError;

/// A fixed list of monomials (descending) with reverse lookup.
#[derive(Debug, Clone)]
pub struct Columns {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
}

impl Columns {
    pub fn from_monomials(monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        Self { monomials, index }
    }

    /// All monomials of degree `<= d`.
    pub fn up_to(nvars: usize, d: u32) -> Self {
        Self::from_monomials(monomials_up_to(nvars, d))
    }

    /// Monomials of degree exactly `d`.
    pub fn of_degree(nvars: usize, d: u32) -> Self {
        Self::from_monomials(monomials_of_degree(nvars, d))
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, col: u32) -> &Monomial {
        &self.monomials[col as usize]
    }

    pub fn col(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }

    /// Coefficient row of `u * f`. Every product monomial must be a column.
    pub fn row_of(&self, f: &Polynomial, u: &Monomial) -> SparseRow {
        // multiplying by u preserves the order, so columns come out ascending
        let (cols, vals) = f
            .terms()
            .iter()
            .map(|(m, c)| (self.index[&u.mul(m)], *c))
            .unzip();
        SparseRow::new(cols, vals)
    }

    /// Row of `u * r` where `r` is a row over these same columns.
    pub fn shift_row(&self, r: &SparseRow, u: &Monomial) -> SparseRow {
        let cols = r
            .cols
            .iter()
            .map(|&c| self.index[&u.mul(&self.monomials[c as usize])])
            .collect();
        SparseRow::new(cols, r.vals.clone())
    }

    pub fn to_polynomial(&self, r: &SparseRow, p: PrimeModulus) -> Polynomial {
        let nvars = self.monomials.first().map_or(0, Monomial::nvars);
        Polynomial::from_terms(
            nvars,
            p,
            r.cols
                .iter()
                .zip(&r.vals)
                .map(|(&c, &v)| (self.monomials[c as usize].clone(), v as i64)),
        )
    }
}

/// Where a row of a Macaulay matrix came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSource {
    /// The `j`-th input polynomial.
    Input(usize),
    /// The `k`-th degree-fall polynomial appended during elimination.
    Fall(usize),
}

#[derive(Debug, Clone)]
pub struct MatrixRow {
    pub multiplier: Monomial,
    pub source: RowSource,
    /// Column of the product's leading monomial before elimination.
    pub tag_lead: u32,
    pub row: SparseRow,
}

#[derive(Debug, Clone)]
pub struct MacaulayMatrix {
    pub degree: u32,
    pub modulus: PrimeModulus,
    pub columns: Columns,
    pub rows: Vec<MatrixRow>,
}

impl MacaulayMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }
}

/// Multipliers `u` with `lo <= deg u <= hi`, ascending in degrevlex.
pub(crate) fn multipliers(nvars: usize, lo: u32, hi: u32) -> Vec<Monomial> {
    (lo..=hi)
        .flat_map(|e| monomials_of_degree(nvars, e).into_iter().rev())
        .collect()
}

/// Degree-`d` Macaulay matrix of the nonzero polynomials of `system`.
///
/// Rows are grouped by input polynomial in system order; within a group the
/// multipliers ascend in degrevlex.
pub fn build_matrix(system: &PolySystem, d: u32) -> Result<MacaulayMatrix, MacaulayError> {
    let max = system.max_degree().ok_or(MacaulayError::EmptySystem)?;
    if d < max {
        return Err(MacaulayError::DegreeBelowInput { d, max });
    }
    let n = system.ring().nvars();
    let columns = Columns::up_to(n, d);
    let mut rows = Vec::new();
    for (j, f) in system.polys().iter().enumerate() {
        let Some(df) = f.degree() else { continue };
        let lt = f.leading_monomial().unwrap();
        for u in multipliers(n, 0, d - df) {
            rows.push(MatrixRow {
                tag_lead: columns.col(&u.mul(lt)).unwrap(),
                row: columns.row_of(f, &u),
                multiplier: u,
                source: RowSource::Input(j),
            });
        }
    }
    Ok(MacaulayMatrix {
        degree: d,
        modulus: system.ring().modulus(),
        columns,
        rows,
    })
}
