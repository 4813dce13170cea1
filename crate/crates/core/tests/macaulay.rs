mod common;

use common::*;
use solvdeg::macaulay::{
    buchberger_oracle, build_matrix, rref_no_swap, solve, MacaulayError, SolveOptions,
    StopCriterion,
};
use solvdeg::poly::normal_form;

#[test]
fn matrix_shapes() {
    let r = ring(7, &["x", "y"]);
    let f = system(&r, &[&[(1, &[2, 0])], &[(1, &[0, 2])]]);
    let m = build_matrix(&f, 2).unwrap();
    assert_eq!((m.nrows(), m.ncols()), (2, 6));
    let m = build_matrix(&f, 3).unwrap();
    assert_eq!((m.nrows(), m.ncols()), (6, 10));
    // multiples of x^4 - 1 (1), x^2*y - x^2 (3), y^2 - 1 (6) up to degree 4
    let m = build_matrix(&gap_example(), 4).unwrap();
    assert_eq!((m.nrows(), m.ncols()), (10, 15));
    assert!(matches!(
        build_matrix(&gap_example(), 3),
        Err(MacaulayError::DegreeBelowInput { d: 3, max: 4 })
    ));
}

#[test]
fn rref_without_swaps() {
    let r = ring(7, &["x", "y"]);
    let f = system(&r, &[&[(1, &[2, 0]), (1, &[0, 2])], &[(1, &[0, 2])]]);
    let m = build_matrix(&f, 2).unwrap();
    let red = rref_no_swap(&m);
    assert_eq!(red.rank, 2);
    let rows: Vec<_> = red
        .rows
        .iter()
        .map(|row| m.columns.to_polynomial(row.as_ref().unwrap(), r.modulus()))
        .collect();
    assert_eq!(
        rows,
        vec![poly(&r, &[(1, &[2, 0])]), poly(&r, &[(1, &[0, 2])])]
    );

    // already reduced input is a fixed point
    let g = system(&r, &[&[(1, &[2, 0])], &[(1, &[0, 2])]]);
    let m = build_matrix(&g, 2).unwrap();
    let red = rref_no_swap(&m);
    for (row, orig) in red.rows.iter().zip(&m.rows) {
        assert_eq!(row.as_ref().unwrap(), &orig.row);
    }
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = ring(7, &["x", "y"]);
    let f = system(&r, &[&[(1, &[2, 0])], &[(1, &[0, 2])]]);
    let rep = solve(&f, &SolveOptions::default()).unwrap();
    assert_eq!(
        rep.basis,
        vec![poly(&r, &[(1, &[0, 2])]), poly(&r, &[(1, &[2, 0])])]
    );
    assert_eq!(rep.solving_degree, 2);
    assert_eq!(buchberger_oracle(&f), rep.basis);
}

#[test]
fn oracle_membership() {
    let r = ring(7, &["x", "y"]);
    let f = system(
        &r,
        &[
            &[(1, &[2, 0]), (-1, &[0, 1])],
            &[(1, &[0, 2]), (-1, &[1, 0])],
        ],
    );
    let g = buchberger_oracle(&f);
    let target = poly(&r, &[(1, &[4, 0]), (-1, &[1, 0])]);
    assert!(normal_form(&target, &g).is_zero());
    assert_eq!(solve(&f, &SolveOptions::default()).unwrap().basis, g);
}

#[test]
fn degree_cap_reports_partial_trace() {
    let f = gap_example();
    let opts = SolveOptions {
        max_degree: Some(4),
        ..Default::default()
    };
    match solve(&f, &opts) {
        Err(MacaulayError::DegreeCapExceeded { cap: 4, trace }) => {
            assert_eq!(trace.len(), 1);
            assert_eq!(trace[0].degree, 4);
        }
        other => panic!("unexpected {other:?}"),
    }
    let opts = SolveOptions {
        stop: StopCriterion::Apriori(3),
        ..Default::default()
    };
    assert!(matches!(
        solve(&f, &opts),
        Err(MacaulayError::DegreeBelowInput { .. })
    ));
}

#[test]
fn expired_deadline_times_out() {
    let opts = SolveOptions {
        deadline: Some(std::time::Instant::now()),
        ..Default::default()
    };
    assert!(matches!(
        solve(&gap_example(), &opts),
        Err(MacaulayError::Timeout { .. })
    ));
}
