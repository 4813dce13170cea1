mod common;

use common::*;
use solvdeg::analyze::{self, DegReg, SemiregularMode};
use solvdeg::macaulay::{buchberger_oracle, solve, SolveOptions, StopCriterion, StopReason};

#[test]
fn gap_example_solve() {
    let f = gap_example();
    let r = f.ring().clone();
    let rep = solve(&f, &SolveOptions::default()).unwrap();
    let want = vec![
        poly(&r, &[(1, &[0, 1]), (-1, &[0, 0])]),
        poly(&r, &[(1, &[4, 0]), (-1, &[0, 0])]),
    ];
    assert_eq!(rep.basis, want);
    assert_eq!(rep.solving_degree, 5);
    assert_eq!(rep.max_gb_degree, 4);
    assert_eq!(rep.stop_reason, StopReason::SpairCheck);
    assert_eq!(buchberger_oracle(&f), want);
    assert_eq!(
        analyze::degree_of_regularity(&f, 10).unwrap(),
        DegReg::Finite(4)
    );
    assert!(analyze::semiregular_test(&f.top_parts(), SemiregularMode::Crypto).unwrap());
    assert!(!analyze::t_nonzerodivisor(&f, &SolveOptions::default()).unwrap());
}

#[test]
fn apriori_mode() {
    let f = gap_example();
    let opts = SolveOptions {
        stop: StopCriterion::Apriori(5),
        ..Default::default()
    };
    let rep = solve(&f, &opts).unwrap();
    assert_eq!(rep.stop_reason, StopReason::AprioriBound);
    assert_eq!(rep.basis.len(), 2);
}
