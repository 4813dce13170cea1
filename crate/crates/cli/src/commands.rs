use std::fmt::Write as _;
use std::time::{Duration, Instant};

use solvdeg::analyze::{analyze, AnalysisReport, AnalyzeError, AnalyzeOptions, DegReg};
use solvdeg::bounds::{
    aci_bound, closed_form_r, egh_bound, inhomog_bound, largerm_bound, macaulay_bound,
    macaulay_expansion, macaulay_shift, reg_from_series, table_generate, BoundsError, EghVariant,
    RegTable,
};
use solvdeg::macaulay::{solve, MacaulayError, SolveOptions, StopCriterion};
use solvdeg::poly::{PolySystem, Ring};
use solvdeg::random::random_system;
use solvdeg::PrimeModulus;
use thiserror::Error;

use crate::args::{
    parse_range, AnalyzeArgs, BoundArgs, Cli, Command, GenRandomArgs, SolveArgs, SolveLimits,
    TableArgs, VariantArg,
};
use crate::format::{parse_system, render_system, FormatError};
use crate::report::{
    BoundQuery, BoundResult, ErrorDocument, ReportBody, ReportDocument, SolveDocument,
    SystemDocument, TableDocument,
};
use crate::verify;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Solve(#[from] MacaulayError),
    #[error(transparent)]
    Analyze(#[from] AnalyzeError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Format(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Format(_) => "parse",
            CliError::Bounds(_) => "bounds",
            CliError::Solve(_) => "solve",
            CliError::Analyze(_) => "analyze",
        }
    }

    fn trace(&self) -> Option<Vec<solvdeg::macaulay::DegreeTrace>> {
        let m = match self {
            CliError::Solve(m) | CliError::Analyze(AnalyzeError::Solve(m)) => m,
            _ => return None,
        };
        match m {
            MacaulayError::DegreeCapExceeded { trace, .. } | MacaulayError::Timeout { trace } => {
                Some(trace.clone())
            }
            _ => None,
        }
    }
}

/// What a command produced: text for stdout, text for stderr, and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

type Produced = Result<(ReportBody, String), CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| usage(format!("missing {flag}")))
}

fn read_input(path: &std::path::Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn run(cli: &Cli) -> Outcome {
    let (name, input, produced): (&str, Vec<u8>, Produced) = match &cli.command {
        Command::Bound(a) => ("bound", format!("{a:?}").into_bytes(), bound(a)),
        Command::Solve(a) => match read_input(&a.file) {
            Ok(bytes) => {
                let r = solve_cmd(a, &bytes);
                ("solve", bytes, r)
            }
            Err(e) => ("solve", Vec::new(), Err(e)),
        },
        Command::Analyze(a) => match read_input(&a.file) {
            Ok(bytes) => {
                let r = analyze_cmd(a, &bytes);
                ("analyze", bytes, r)
            }
            Err(e) => ("analyze", Vec::new(), Err(e)),
        },
        Command::Table(a) => ("table", format!("{a:?}").into_bytes(), table(a)),
        Command::GenRandom(a) => ("gen-random", format!("{a:?}").into_bytes(), gen_random(a)),
        Command::VerifyPaper(a) => {
            let summary = verify::run(a.quick);
            let text = verify::render(&summary);
            (
                "verify-paper",
                format!("{a:?}").into_bytes(),
                Ok((ReportBody::Verify(summary), text)),
            )
        }
    };
    match produced {
        Ok((body, text)) => {
            let exit_code = match &body {
                ReportBody::Verify(s) if s.failed > 0 => 1,
                _ => 0,
            };
            let stdout = if cli.json {
                ReportDocument::new(name, &input, body).to_json() + "\n"
            } else {
                text
            };
            Outcome {
                stdout,
                stderr: String::new(),
                exit_code,
            }
        }
        Err(e) => {
            let exit_code = e.exit_code();
            if cli.json {
                let doc = ReportDocument::new(
                    name,
                    &input,
                    ReportBody::Error(ErrorDocument {
                        kind: e.kind().into(),
                        message: e.to_string(),
                        exit_code,
                        trace: e.trace(),
                    }),
                );
                Outcome {
                    stdout: doc.to_json() + "\n",
                    stderr: String::new(),
                    exit_code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                    exit_code,
                }
            }
        }
    }
}

/// `--degrees` if given, otherwise `count` copies of `-d`.
fn degree_list(a: &BoundArgs, count: Option<u64>) -> Result<Vec<u32>, CliError> {
    if let Some(ds) = &a.degrees {
        if ds.is_empty() {
            return Err(usage("--degrees is empty"));
        }
        return Ok(ds.clone());
    }
    match (a.d, count) {
        (Some(d), Some(c)) => Ok(vec![d; c as usize]),
        _ => Err(usage(
            "give --degrees, or -d together with the number of equations",
        )),
    }
}

fn bound(a: &BoundArgs) -> Produced {
    let k = &a.kind;
    let m_or_k = || a.m.or_else(|| Some(a.n? + a.k?));
    let mut r = BoundResult {
        query: BoundQuery::Egh,
        m: None,
        n: a.n,
        degrees: None,
        d: None,
        ell: None,
        variant: None,
        value: None,
        alpha: None,
        expansion: None,
    };
    let text;
    if k.egh {
        let (m, n) = (need(m_or_k(), "-m")?, need(a.n, "-n")?);
        let variant = match a.variant {
            VariantArg::Homogeneous => EghVariant::Homogeneous,
            VariantArg::Inhomogeneous => EghVariant::Inhomogeneous,
            VariantArg::Weil => EghVariant::Weil {
                d: need(a.d, "-d")?,
            },
            VariantArg::WeilInhomog => EghVariant::WeilInhomog {
                d: need(a.d, "-d")?,
            },
        };
        let w = egh_bound(m, n, variant)?;
        r.m = Some(m);
        r.variant = Some(variant);
        r.value = Some(w.bound);
        r.alpha = Some(w.alpha);
        text = format!("{}\n", w.bound);
    } else if k.semiregular {
        let n = need(a.n, "-n")?;
        let ds = degree_list(a, m_or_k())?;
        let v = reg_from_series(n as usize, &ds);
        r.query = BoundQuery::Semiregular;
        r.m = Some(ds.len() as u64);
        r.degrees = Some(ds);
        r.value = v.map(u64::from);
        text = match v {
            Some(v) => format!("{v}\n"),
            None => "none\n".into(),
        };
    } else if k.closed_form {
        let (m, n) = (need(m_or_k(), "-m or -k")?, need(a.n, "-n")?);
        let v = closed_form_r(m as usize, n as usize)?;
        r.query = BoundQuery::ClosedForm;
        r.m = Some(m);
        r.value = Some(v as u64);
        text = format!("{v}\n");
    } else if k.macaulay || k.aci || k.inhomog {
        let n = need(a.n, "-n")?;
        let count = if k.aci { Some(n + 1) } else { m_or_k() };
        let ds = degree_list(a, count)?;
        let m = ds.len();
        let v = if k.macaulay {
            r.query = BoundQuery::Macaulay;
            macaulay_bound(n as usize, &ds)?
        } else if k.aci {
            r.query = BoundQuery::Aci;
            aci_bound(n as usize, &ds)?
        } else {
            r.query = BoundQuery::Inhomog;
            inhomog_bound(m, n as usize, &ds)?
        };
        r.m = Some(m as u64);
        r.degrees = Some(ds);
        r.value = Some(v as u64);
        text = format!("{v}\n");
    } else if k.largerm {
        let (n, d) = (need(a.n, "-n")?, need(a.d, "-d")?);
        let v = largerm_bound(n as usize, d)?;
        r.query = BoundQuery::Largerm;
        r.d = Some(d);
        r.value = Some(v as u64);
        text = format!("{v}\n");
    } else {
        let (ell, d) = (need(a.ell, "--ell")?, need(a.d, "-d")?);
        if d == 0 {
            return Err(usage("-d must be at least 1"));
        }
        r.ell = Some(ell);
        r.d = Some(d);
        if k.expansion {
            let e = macaulay_expansion(ell, d);
            r.query = BoundQuery::Expansion;
            r.value = Some(ell);
            text = format!("{}\n", e.render());
            r.expansion = Some(e.terms);
        } else {
            let v = u64::try_from(macaulay_shift(ell, d))
                .map_err(|_| BoundsError::OutOfRange("shift exceeds 64 bits".into()))?;
            r.query = BoundQuery::Shift;
            r.value = Some(v);
            text = format!("{v}\n");
        }
    }
    Ok((ReportBody::Bound(r), text))
}

fn solve_options(limits: &SolveLimits, stop: StopCriterion) -> SolveOptions {
    SolveOptions {
        max_degree: limits.max_degree,
        stop,
        deadline: limits
            .timeout_secs
            .map(|s| Instant::now() + Duration::from_secs(s)),
    }
}

fn parse_input(bytes: &[u8]) -> Result<PolySystem, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| usage(format!("input is not UTF-8: {e}")))?;
    Ok(parse_system(text)?)
}

fn solve_cmd(a: &SolveArgs, bytes: &[u8]) -> Produced {
    let system = parse_input(bytes)?;
    let stop = match a.apriori {
        Some(b) => StopCriterion::Apriori(b),
        None => StopCriterion::SpairCheck,
    };
    let report = solve(&system, &solve_options(&a.limits, stop))?;
    let doc = SolveDocument::new(&report, system.ring().names());
    let mut text = String::new();
    writeln!(text, "solving_degree {}", doc.solving_degree).unwrap();
    writeln!(text, "max_gb_degree {}", doc.max_gb_degree).unwrap();
    writeln!(text, "basis ({} elements)", doc.basis.len()).unwrap();
    for g in &doc.basis {
        writeln!(text, "  {g}").unwrap();
    }
    writeln!(text, "degree\trows\tcols\trank\tfalls\trounds").unwrap();
    for t in &doc.trace {
        writeln!(
            text,
            "{}\t{}\t{}\t{}\t{}\t{}",
            t.degree, t.rows, t.cols, t.rank, t.falls, t.rounds
        )
        .unwrap();
    }
    Ok((ReportBody::Solve(doc), text))
}

fn render_analysis(r: &AnalysisReport) -> String {
    let opt = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
    let mut s = String::new();
    let d_reg = match r.d_reg {
        DegReg::Finite(d) => d.to_string(),
        DegReg::Infinity => "infinity".into(),
    };
    writeln!(s, "d_reg {d_reg}").unwrap();
    let artinian = if r.is_artinian {
        format!("true (degree {})", r.artinian_witness_degree.unwrap())
    } else {
        format!("false (up to degree {})", r.cap)
    };
    writeln!(s, "is_artinian {artinian}").unwrap();
    writeln!(s, "crypto_semiregular {}", r.crypto_semiregular).unwrap();
    writeln!(
        s,
        "pardue_prefix_semiregular {}",
        opt(r.pardue_prefix_semiregular)
    )
    .unwrap();
    writeln!(
        s,
        "top_crypto_semiregular {}",
        opt(r.top_crypto_semiregular)
    )
    .unwrap();
    writeln!(s, "t_nonzerodivisor {}", opt(r.t_nonzerodivisor)).unwrap();
    writeln!(
        s,
        "maxgb {}",
        r.maxgb.map_or("n/a".to_string(), |v| v.to_string())
    )
    .unwrap();
    let hf: Vec<String> = r.hilbert_function.iter().map(u64::to_string).collect();
    writeln!(s, "hilbert_function {}", hf.join(" ")).unwrap();
    s
}

fn analyze_cmd(a: &AnalyzeArgs, bytes: &[u8]) -> Produced {
    let system = parse_input(bytes)?;
    let opts = AnalyzeOptions {
        cap: a.cap,
        t_nonzerodivisor: a.t_nzd,
        maxgb: a.maxgb,
        solve: solve_options(&a.limits, StopCriterion::SpairCheck),
    };
    let report = analyze(&system, &opts)?;
    let text = render_analysis(&report);
    Ok((ReportBody::Analyze(report), text))
}

/// Splits the `k` rows across threads and stitches the pieces back in order.
pub fn generate_table_parallel(
    ks: &[usize],
    ns: &[usize],
    d: u32,
) -> Result<RegTable, BoundsError> {
    let threads = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(ks.len().max(1));
    let chunk = ks.len().div_ceil(threads).max(1);
    let parts: Vec<Result<RegTable, BoundsError>> = std::thread::scope(|s| {
        let handles: Vec<_> = ks
            .chunks(chunk)
            .map(|c| s.spawn(move || table_generate(c.iter().copied(), ns.iter().copied(), d)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("table worker"))
            .collect()
    });
    let mut out = RegTable {
        ks: Vec::new(),
        ns: ns.to_vec(),
        entries: Vec::new(),
    };
    for part in parts {
        let part = part?;
        out.ks.extend(part.ks);
        out.entries.extend(part.entries);
    }
    Ok(out)
}

fn table(a: &TableArgs) -> Produced {
    let ks = parse_range(&a.ks).map_err(usage)?;
    let ns = parse_range(&a.ns).map_err(usage)?;
    if ns.iter().any(|&n| n < 1) || a.d < 1 {
        return Err(usage("n and d must be positive"));
    }
    let t = generate_table_parallel(&ks, &ns, a.d)?;
    let text = t.to_tsv();
    Ok((
        ReportBody::Table(TableDocument {
            d: a.d,
            ks: t.ks,
            ns: t.ns,
            entries: t.entries,
        }),
        text,
    ))
}

fn gen_random(a: &GenRandomArgs) -> Produced {
    let p = PrimeModulus::new(a.p).map_err(|e| usage(e.to_string()))?;
    let degrees = match (&a.degrees, a.d, a.m) {
        (Some(ds), _, _) => ds.clone(),
        (None, Some(d), Some(m)) => vec![d; m],
        _ => return Err(usage("give --degrees, or -d together with -m")),
    };
    if a.n == 0 {
        return Err(usage("-n must be positive"));
    }
    let ring = Ring::with_default_names(a.n, p).map_err(|e| usage(e.to_string()))?;
    let system = random_system(&ring, &degrees, a.homogeneous, a.seed);
    let text = render_system(&system);
    Ok((
        ReportBody::System(SystemDocument {
            seed: a.seed,
            text: text.clone(),
        }),
        text,
    ))
}
