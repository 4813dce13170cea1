//! Macaulay matrices, no-swap elimination, the degree-fall solving algorithm, graded
//! Hilbert-function linear algebra, and a Buchberger oracle.

mod echelon;
mod graded;
mod matrix;
mod oracle;
mod reduce;
mod solve;

use thiserror::Error;

pub use echelon::{rank, IncrementalRref, SparseRow};
pub use graded::{ideal_dimensions, GradedIdeal};
pub use matrix::{build_matrix, Columns, MacaulayMatrix, MatrixRow, RowSource};
pub use oracle::buchberger_oracle;
pub use reduce::Reducer;
pub use solve::{
    default_max_degree, solve, DegreeTrace, SolveOptions, SolveReport, StopCriterion, StopReason,
    FALLBACK_MAX_DEGREE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("system has no nonzero polynomial")]
    EmptySystem,
    #[error("degree {d} is below the largest input degree {max}")]
    DegreeBelowInput { d: u32, max: u32 },
    #[error("no Gröbner basis found up to degree cap {cap}")]
    DegreeCapExceeded { cap: u32, trace: Vec<DegreeTrace> },
    #[error("deadline reached")]
    Timeout { trace: Vec<DegreeTrace> },
    #[error("system is not homogeneous")]
    NotHomogeneous,
}

/// Result of no-swap reduction of a Macaulay matrix.
#[derive(Debug, Clone)]
pub struct RrefResult {
    /// Row `k` of the reduced matrix; `None` where the row became zero.
    pub rows: Vec<Option<SparseRow>>,
    pub rank: usize,
}

/// Reduced row echelon form computed without permuting rows.
///
/// Row `k` keeps its position: it holds the fully reduced row whose pivot is the
/// leading column of `m_k` reduced against rows `0..k`, or `None` if `m_k` was in
/// their span. Pivots are 1 and pivot columns are cleared in every other row.
pub fn rref_no_swap(m: &MacaulayMatrix) -> RrefResult {
    let mut e = IncrementalRref::new(m.ncols(), m.modulus);
    let slots: Vec<Option<usize>> = m
        .rows
        .iter()
        .map(|r| e.insert(&r.row).map(|(i, _)| i))
        .collect();
    RrefResult {
        rows: slots
            .into_iter()
            .map(|s| s.map(|i| e.row(i).clone()))
            .collect(),
        rank: e.rank(),
    }
}
