//! The built-in regression suite behind `verify-paper`.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvdeg::analyze::{
    default_cap, degree_of_regularity, hilbert_function_upto, reg_from_hilbert, semiregular_test,
    DegReg, SemiregularMode,
};
use solvdeg::bounds::{
    aci_bound, binomial, closed_form_r, egh_bound, inhomog_bound, largerm_bound,
    macaulay_expansion, macaulay_shift, reg_from_series, EghVariant, RegTable,
};
use solvdeg::macaulay::{buchberger_oracle, solve, SolveOptions};
use solvdeg::poly::{field_equations, monomials_of_degree, normal_form, s_polynomial, PolySystem};

use crate::commands::generate_table_parallel;
use crate::corpus::{oracle_corpus, quadric_system};
use crate::fixtures;
use crate::format::parse_system;
use crate::report::{VerifyItem, VerifySummary};
use crate::tables;

type Check = Result<String, String>;
type Item = (&'static str, Box<dyn Fn() -> Check>);

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(format!("{what} = {got:?}"))
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn all(checks: impl IntoIterator<Item = Check>) -> Check {
    let mut details = Vec::new();
    for c in checks {
        details.push(c?);
    }
    Ok(details.join("; "))
}

fn quadrics(count: usize) -> Vec<u32> {
    vec![2; count]
}

fn table_regression() -> Check {
    let mut compared = 0usize;
    for (name, printed) in [
        ("table n=2..26", tables::parse(tables::TABLE_N002_026)),
        ("table n=52..76", tables::parse(tables::TABLE_N052_076)),
        ("second table as n=52..76", tables::table_two_relabelled()),
        ("table n=77..100", tables::parse(tables::TABLE_N077_100)),
    ] {
        let generated =
            generate_table_parallel(&printed.ks, &printed.ns, 2).map_err(|e| e.to_string())?;
        if let Some((k, n)) = first_mismatch(&generated, &printed) {
            return Err(format!(
                "{name}: k={k} n={n} generated {:?} printed {:?}",
                generated.get(k, n),
                printed.get(k, n)
            ));
        }
        compared += printed.ks.len() * printed.ns.len();
    }
    Ok(format!("{compared} printed entries match"))
}

fn first_mismatch(a: &RegTable, b: &RegTable) -> Option<(usize, usize)> {
    for &k in &b.ks {
        for &n in &b.ns {
            if a.get(k, n) != b.get(k, n) {
                return Some((k, n));
            }
        }
    }
    None
}

fn closed_form_vs_series() -> Check {
    for gap in 2..=5 {
        for n in 2..=500 {
            let cf = closed_form_r(n + gap, n).map_err(|e| e.to_string())?;
            let s = reg_from_series(n, &quadrics(n + gap));
            if s != Some(cf) {
                return Err(format!("m-n={gap} n={n}: closed form {cf}, series {s:?}"));
            }
        }
    }
    Ok("m-n in 2..=5, n in 2..=500".into())
}

fn n_plus_one_quadrics() -> Check {
    for n in 2..=500 {
        let s = reg_from_series(n, &quadrics(n + 1));
        if s != Some((n as u32 + 1) / 2 + 1) {
            return Err(format!("n={n}: series {s:?}"));
        }
    }
    Ok("n in 2..=500".into())
}

fn egh_checks() -> Check {
    for n in 1..=100u64 {
        let w = egh_bound(n, n, EghVariant::Homogeneous).map_err(|e| e.to_string())?;
        if w.bound != n + 1 {
            return Err(format!("m=n={n}: {}", w.bound));
        }
        let full = binomial(n + 1, 2) as u64;
        let w = egh_bound(full, n, EghVariant::Homogeneous).map_err(|e| e.to_string())?;
        if w.bound != 2 {
            return Err(format!("m=C(n+1,2), n={n}: {}", w.bound));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=200u64);
        let m = rng.gen_range(n..=binomial(n + 1, 2) as u64);
        let w = egh_bound(m, n, EghVariant::Homogeneous).map_err(|e| e.to_string())?;
        let c2 = |x: i64| if x < 2 { 0 } else { binomial(x as u64, 2) };
        let total = binomial(n + 1, 2);
        let (ni, a) = (n as i64, w.alpha);
        let ok = total - c2(ni - a) < m as u128
            && m as u128 <= total - c2(ni - a - 1)
            && w.bound == (ni - a) as u64;
        if !ok {
            return Err(format!("m={m} n={n}: alpha {a} violates the window"));
        }
    }
    Ok("m=n and m=C(n+1,2) for n<=100; 10^4 random windows".into())
}

fn gap_items() -> Check {
    let text = "field 7\nvars x,y\nx^4 - 1\nx^2*y - x^2\ny^2 - 1\n";
    let sys = parse_system(text).map_err(|e| e.to_string())?;
    if sys != fixtures::gap_example() {
        return Err("parsed system differs from the fixture".into());
    }
    let report = solve(&sys, &SolveOptions::default()).map_err(|e| e.to_string())?;
    let names = sys.ring().names();
    let basis: Vec<String> = report.basis.iter().map(|g| g.render(names)).collect();
    let top = sys.top_parts();
    let h = sys.homogenize();
    all([
        expect(
            "basis",
            basis,
            vec!["y - 1".to_string(), "x^4 - 1".to_string()],
        ),
        expect("solving degree", report.solving_degree, 5),
        expect("maxgb", report.max_gb_degree, 4),
        expect(
            "d_reg",
            degree_of_regularity(&sys, default_cap(2, &top.degrees()))
                .map_err(|e| e.to_string())?,
            DegReg::Finite(4),
        ),
        expect(
            "top parts",
            top.render(),
            vec!["x^4".into(), "x^2*y".into(), "y^2".into()],
        ),
        expect(
            "homogenization",
            h.render(),
            vec![
                "x^4 - t^4".into(),
                "x^2*y - x^2*t".into(),
                "y^2 - t^2".into(),
            ],
        ),
        expect(
            "reg of top parts",
            reg_from_hilbert(&top).map_err(|e| e.to_string())?,
            4,
        ),
        expect(
            "top parts crypto semi-regular",
            semiregular_test(&top, SemiregularMode::Crypto).map_err(|e| e.to_string())?,
            true,
        ),
    ])
}

fn large_example(sys: PolySystem, d_reg: u32, printed_sd: u32) -> Check {
    let cap = default_cap(3, &sys.top_parts().degrees());
    let got = degree_of_regularity(&sys, cap).map_err(|e| e.to_string())?;
    if got != DegReg::Finite(d_reg) {
        return Err(format!("d_reg {got:?}, expected {d_reg}"));
    }
    let report = solve(&sys, &SolveOptions::default()).map_err(|e| e.to_string())?;
    if report.solving_degree <= d_reg {
        return Err(format!(
            "solving degree {} not above d_reg {d_reg}",
            report.solving_degree
        ));
    }
    Ok(format!(
        "d_reg {d_reg}; measured solving degree {} > d_reg (other tool's step degree: {printed_sd})",
        report.solving_degree
    ))
}

fn standard_monomials(basis: &[solvdeg::poly::Polynomial], n: usize, d: u32) -> u64 {
    monomials_of_degree(n, d)
        .into_iter()
        .filter(|m| {
            !basis
                .iter()
                .any(|g| g.leading_monomial().unwrap().divides(m))
        })
        .count() as u64
}

fn oracle_equivalence() -> Check {
    let corpus = oracle_corpus(120, 2024);
    for (i, sys) in corpus.iter().enumerate() {
        let report =
            solve(sys, &SolveOptions::default()).map_err(|e| format!("system {i}: {e}"))?;
        let oracle = buchberger_oracle(sys);
        if report.basis != oracle {
            return Err(format!("system {i}: basis differs from the oracle"));
        }
        for a in 0..report.basis.len() {
            for b in a + 1..report.basis.len() {
                let s = s_polynomial(&report.basis[a], &report.basis[b]);
                if !normal_form(&s, &report.basis).is_zero() {
                    return Err(format!(
                        "system {i}: S-polynomial ({a},{b}) does not reduce to 0"
                    ));
                }
            }
        }
    }
    Ok(format!("{} systems", corpus.len()))
}

fn hilbert_oracle() -> Check {
    let corpus = oracle_corpus(120, 2024);
    for (i, sys) in corpus.iter().enumerate() {
        let h = if sys.is_homogeneous() {
            sys.clone()
        } else {
            sys.homogenize()
        };
        let n = h.ring().nvars();
        let oracle = buchberger_oracle(&h);
        let hf = hilbert_function_upto(&h, 8).map_err(|e| e.to_string())?;
        for d in 0..=8 {
            if hf[d as usize] != standard_monomials(&oracle, n, d) {
                return Err(format!("system {i}, degree {d}"));
            }
        }
    }
    Ok("degrees 0..=8".into())
}

fn semiregular_quadrics() -> Check {
    let table = tables::parse(tables::TABLE_N002_026);
    let mut details = Vec::new();
    for n in [6usize, 8, 10] {
        let want = table.get(2, n).unwrap();
        let good = std::thread::scope(|s| {
            let handles: Vec<_> = (0..4u64)
                .map(|t| {
                    s.spawn(move || {
                        (t * 25..(t + 1) * 25)
                            .filter(|&seed| {
                                let sys = quadric_system(n, seed);
                                semiregular_test(&sys, SemiregularMode::Crypto) == Ok(true)
                                    && reg_from_hilbert(&sys) == Ok(want)
                            })
                            .count()
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().unwrap())
                .sum::<usize>()
        });
        if good < 95 {
            return Err(format!(
                "n={n}: only {good}/100 seeds semi-regular with reg {want}"
            ));
        }
        details.push(format!("n={n}: {good}/100"));
    }
    Ok(details.join(", "))
}

fn items(quick: bool) -> Vec<Item> {
    let mut v: Vec<Item> = vec![
        (
            "gap example: parse, solve, d_reg, semi-regular top parts",
            Box::new(gap_items),
        ),
        (
            "field equations over GF(7)",
            Box::new(|| {
                let r = fixtures::gap_example().ring().clone();
                let r3 =
                    solvdeg::poly::Ring::new(vec!["x".into(), "y".into(), "z".into()], r.modulus())
                        .unwrap();
                let fe = field_equations(&r3, 7).map_err(|e| e.to_string())?;
                let names = r3.names();
                let got: Vec<String> = fe.iter().map(|f| f.render(names)).collect();
                expect(
                    "equations",
                    got,
                    vec!["x^7 - x".into(), "y^7 - y".into(), "z^7 - z".into()],
                )
            }),
        ),
        (
            "series regularity examples",
            Box::new(|| {
                all([
                    expect(
                        "n=10, 12 quadrics",
                        reg_from_series(10, &quadrics(12)),
                        Some(6),
                    ),
                    expect(
                        "n=11, 14 quadrics",
                        reg_from_series(11, &quadrics(14)),
                        Some(5),
                    ),
                ])
            }),
        ),
        (
            "closed-form examples",
            Box::new(|| {
                let cf = |m, n| closed_form_r(m, n).map_err(|e| e.to_string());
                all([
                    expect("r(12,10)", cf(12, 10)?, 6),
                    expect("r(14,11)", cf(14, 11)?, 5),
                    expect("r(30,26)", cf(30, 26)?, 11),
                ])
            }),
        ),
        (
            "n+1 generic forms",
            Box::new(|| {
                let aci = |n, ds: &[u32]| aci_bound(n, ds).map_err(|e| e.to_string());
                all([
                    expect("n=9 quadrics", aci(9, &[2; 10])?, 6),
                    expect("n=5 cubics", aci(5, &[3; 6])?, 7),
                ])
            }),
        ),
        (
            "many equations",
            Box::new(|| {
                let lm = |n, d| largerm_bound(n, d).map_err(|e| e.to_string());
                all([
                    expect("cubics n=7", lm(7, 3)?, 9),
                    expect("quadrics n=20", lm(20, 2)?, 8),
                    expect("quadrics n=2", lm(2, 2)?, 2),
                ])
            }),
        ),
        (
            "inhomogeneous bounds",
            Box::new(|| {
                let ih = |m, n, ds: &[u32]| inhomog_bound(m, n, ds).map_err(|e| e.to_string());
                all([
                    expect("7 quadrics, n=6", ih(7, 6, &[2; 7])?, 8),
                    expect("5 cubics, n=4", ih(5, 4, &[3; 5])?, 11),
                    expect("14 quadrics, n=11", ih(14, 11, &[2; 14])?, 6),
                ])
            }),
        ),
        (
            "Macaulay expansions and shifts",
            Box::new(|| {
                all([
                    expect(
                        "8 wrt 3",
                        macaulay_expansion(8, 3).terms,
                        vec![(4, 3), (3, 2), (1, 1)],
                    ),
                    expect(
                        "10 wrt 3",
                        macaulay_expansion(10, 3).terms,
                        vec![(5, 3), (1, 2), (0, 1)],
                    ),
                    expect("0 wrt 3", macaulay_expansion(0, 3).terms, vec![]),
                    expect("8^(3)", macaulay_shift(8, 3), 2),
                    expect("10^(3)", macaulay_shift(10, 3), 5),
                    expect("0^(3)", macaulay_shift(0, 3), 0),
                ])
            }),
        ),
        ("EGH windows", Box::new(egh_checks)),
        (
            "table spot checks",
            Box::new(|| {
                all([
                    expect("r(4,2)", reg_from_series(2, &quadrics(4)), Some(2)),
                    expect("r(200,100)", reg_from_series(100, &quadrics(200)), Some(14)),
                    expect("r(102,100)", reg_from_series(100, &quadrics(102)), Some(47)),
                ])
            }),
        ),
        ("regularity table regression", Box::new(table_regression)),
        (
            "closed form vs series, n <= 500",
            Box::new(closed_form_vs_series),
        ),
        ("n+1 quadrics, n <= 500", Box::new(n_plus_one_quadrics)),
    ];
    if !quick {
        v.push((
            "large example 1",
            Box::new(|| large_example(fixtures::large_example_1(), 15, 24)),
        ));
        v.push((
            "large example 2",
            Box::new(|| large_example(fixtures::large_example_2(), 13, 21)),
        ));
        v.push(("solve vs Buchberger oracle", Box::new(oracle_equivalence)));
        v.push((
            "Hilbert function vs standard monomials",
            Box::new(hilbert_oracle),
        ));
        v.push((
            "random quadrics m=n+2 over GF(7919)",
            Box::new(semiregular_quadrics),
        ));
    }
    v
}

pub fn run(quick: bool) -> VerifySummary {
    let items: Vec<VerifyItem> = items(quick)
        .into_iter()
        .map(|(name, f)| {
            let t = Instant::now();
            let r = f();
            VerifyItem {
                name: name.into(),
                passed: r.is_ok(),
                detail: r.unwrap_or_else(|e| e),
                millis: t.elapsed().as_millis() as u64,
            }
        })
        .collect();
    let passed = items.iter().filter(|i| i.passed).count();
    VerifySummary {
        failed: items.len() - passed,
        passed,
        items,
    }
}

pub fn render(s: &VerifySummary) -> String {
    let mut out = String::new();
    for i in &s.items {
        let tag = if i.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{tag} {} ({} ms): {}", i.name, i.millis, i.detail).unwrap();
    }
    writeln!(out, "{} passed, {} failed", s.passed, s.failed).unwrap();
    out
}
