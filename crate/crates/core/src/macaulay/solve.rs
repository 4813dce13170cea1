//! The degree-by-degree Macaulay matrix algorithm with degree-fall augmentation.

use std::collections::HashSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bounds::macaulay_bound;
use crate::field::PrimeModulus;
use crate::poly::{s_polynomial, Monomial, PolySystem, Polynomial};

use super::echelon::{IncrementalRref, SparseRow};
use super::matrix::{multipliers, Columns};
use super::reduce::Reducer;
use super::MacaulayError;

/// Degree cap used when no bound applies.
pub const FALLBACK_MAX_DEGREE: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopCriterion {
    /// Stop once the extracted basis passes the S-polynomial test.
    SpairCheck,
    /// Run exactly at the given degree and extract the basis there.
    Apriori(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    SpairCheck,
    AprioriBound,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub max_degree: Option<u32>,
    pub stop: StopCriterion,
    pub deadline: Option<Instant>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            max_degree: None,
            stop: StopCriterion::SpairCheck,
            deadline: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTrace {
    pub degree: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Distinct degree-fall polynomials whose multiples were appended.
    pub falls: usize,
    /// Elimination passes until no new degree falls appeared.
    pub rounds: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// Reduced, monic Gröbner basis, ascending by leading monomial.
    pub basis: Vec<Polynomial>,
    pub solving_degree: u32,
    pub max_gb_degree: u32,
    pub trace: Vec<DegreeTrace>,
    pub stop_reason: StopReason,
}

/// Default degree cap: the Macaulay bound of the homogenized system if it has at
/// least as many equations as variables, otherwise [`FALLBACK_MAX_DEGREE`].
pub fn default_max_degree(system: &PolySystem) -> u32 {
    let degrees = system.degrees();
    let n = if system.is_homogeneous() {
        system.ring().nvars()
    } else {
        system.ring().nvars() + 1
    };
    macaulay_bound(n, &degrees)
        .unwrap_or(FALLBACK_MAX_DEGREE)
        .max(system.max_degree().unwrap_or(0))
}

struct DegreeRun {
    columns: Columns,
    engine: IncrementalRref,
    trace: DegreeTrace,
}

/// Builds `M_d`, eliminates, and appends multiples of degree falls until a fixpoint.
fn run_degree(inputs: &[Polynomial], n: usize, p: PrimeModulus, d: u32) -> DegreeRun {
    let columns = Columns::up_to(n, d);
    let mut engine = IncrementalRref::new(columns.len(), p);
    // tag column for every stored pivot row
    let mut tags: Vec<u32> = Vec::new();
    let mut nrows = 0usize;

    let push = |engine: &mut IncrementalRref, tags: &mut Vec<u32>, row: &SparseRow, tag: u32| {
        if let Some((idx, _)) = engine.insert(row) {
            debug_assert_eq!(idx, tags.len());
            tags.push(tag);
        }
    };

    for f in inputs {
        let df = f.degree().unwrap();
        let lt = f.leading_monomial().unwrap();
        for u in multipliers(n, 0, d - df) {
            nrows += 1;
            if engine.is_full() {
                continue;
            }
            let row = columns.row_of(f, &u);
            let tag = columns.col(&u.mul(lt)).unwrap();
            push(&mut engine, &mut tags, &row, tag);
        }
    }

    let mut seen: HashSet<SparseRow> = HashSet::new();
    let mut rounds = 1;
    loop {
        // snapshot the current reduced rows of every degree fall
        let fresh: Vec<SparseRow> = (0..engine.rank())
            .filter(|&i| {
                let lead = engine.row(i).lead().unwrap();
                lead != tags[i] && columns.monomial(lead).degree() < d
            })
            .map(|i| engine.row(i).clone())
            .filter(|r| seen.insert(r.clone()))
            .collect();
        if fresh.is_empty() {
            break;
        }
        rounds += 1;
        for f in &fresh {
            let lt = columns.monomial(f.lead().unwrap()).clone();
            for u in multipliers(n, 1, d - lt.degree()) {
                nrows += 1;
                if engine.is_full() {
                    continue;
                }
                let row = columns.shift_row(f, &u);
                let tag = columns.col(&u.mul(&lt)).unwrap();
                push(&mut engine, &mut tags, &row, tag);
            }
        }
    }

    let trace = DegreeTrace {
        degree: d,
        rows: nrows,
        cols: columns.len(),
        rank: engine.rank(),
        falls: seen.len(),
        rounds,
    };
    DegreeRun {
        columns,
        engine,
        trace,
    }
}

/// Rows whose leading monomials minimally generate the leading-term set, then
/// inter-reduced and made monic.
fn extract_basis(run: &DegreeRun, p: PrimeModulus) -> Vec<Polynomial> {
    let leads: Vec<&Monomial> = run
        .engine
        .rows()
        .iter()
        .map(|r| run.columns.monomial(r.lead().unwrap()))
        .collect();
    let mut gens: Vec<Polynomial> = run
        .engine
        .rows()
        .iter()
        .zip(&leads)
        .filter(|(_, l)| !leads.iter().any(|o| o != *l && o.divides(l)))
        .map(|(r, _)| run.columns.to_polynomial(r, p))
        .collect();
    gens.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    interreduce(gens)
}

/// Reduces every tail against the other elements. Leading monomials must already be
/// pairwise non-dividing.
pub(crate) fn interreduce(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        let others: Vec<Polynomial> = gens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = gens[i].monic();
        let head = Polynomial::monomial(g.leading_monomial().unwrap().clone(), g.modulus());
        let tail = g.try_sub(&head).unwrap();
        let tail = Reducer::new(&others).normal_form(&tail);
        out.push(head.try_add(&tail).unwrap());
    }
    out
}

/// True if all inputs and all S-polynomials (product criterion applied) reduce to
/// zero modulo `basis`.
pub(crate) fn passes_spair_check(basis: &[Polynomial], inputs: &[Polynomial]) -> bool {
    let red = Reducer::new(basis);
    if !inputs.iter().all(|f| red.reduces_to_zero(f)) {
        return false;
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (li, lj) = (
                basis[i].leading_monomial().unwrap(),
                basis[j].leading_monomial().unwrap(),
            );
            if li.is_coprime(lj) {
                continue;
            }
            if !red.reduces_to_zero(&s_polynomial(&basis[i], &basis[j])) {
                return false;
            }
        }
    }
    true
}

/// Runs the Macaulay matrix algorithm on `system`.
///
/// Each degree `d` starts from a fresh `M_d`. In S-pair mode the degrees run from the
/// largest input degree up to the cap; in a-priori mode only the given degree is
/// eliminated.
pub fn solve(system: &PolySystem, opts: &SolveOptions) -> Result<SolveReport, MacaulayError> {
    let inputs: Vec<Polynomial> = system
        .polys()
        .iter()
        .filter(|f| !f.is_zero())
        .cloned()
        .collect();
    let d0 = inputs
        .iter()
        .filter_map(Polynomial::degree)
        .max()
        .ok_or(MacaulayError::EmptySystem)?;
    let n = system.ring().nvars();
    let p = system.ring().modulus();

    let (degrees, cap) = match opts.stop {
        StopCriterion::SpairCheck => {
            let cap = opts
                .max_degree
                .unwrap_or_else(|| default_max_degree(system));
            (d0..=cap, cap)
        }
        StopCriterion::Apriori(b) => {
            if b < d0 {
                return Err(MacaulayError::DegreeBelowInput { d: b, max: d0 });
            }
            let cap = opts.max_degree.unwrap_or(b);
            (b..=b.min(cap), cap)
        }
    };

    let mut trace = Vec::new();
    for d in degrees {
        if opts.deadline.is_some_and(|t| Instant::now() >= t) {
            return Err(MacaulayError::Timeout { trace });
        }
        let run = run_degree(&inputs, n, p, d);
        trace.push(run.trace.clone());
        let basis = extract_basis(&run, p);
        let done = match opts.stop {
            StopCriterion::SpairCheck => passes_spair_check(&basis, &inputs),
            StopCriterion::Apriori(_) => true,
        };
        if done {
            let max_gb_degree = basis
                .iter()
                .filter_map(Polynomial::degree)
                .max()
                .unwrap_or(0);
            return Ok(SolveReport {
                basis,
                solving_degree: d,
                max_gb_degree,
                trace,
                stop_reason: match opts.stop {
                    StopCriterion::SpairCheck => StopReason::SpairCheck,
                    StopCriterion::Apriori(_) => StopReason::AprioriBound,
                },
            });
        }
    }
    Err(MacaulayError::DegreeCapExceeded { cap, trace })
}
