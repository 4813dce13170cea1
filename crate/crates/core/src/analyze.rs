//! Hilbert functions, degree of regularity, Artinian tests, semi-regularity tests,
//! the nonzerodivisor test for the homogenizing variable, and `maxgb`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{macaulay_bound, semiregular_series, series_cap};
use crate::macaulay::{ideal_dimensions, solve, MacaulayError, Reducer, SolveOptions};
use crate::poly::{binomial_count, PolySystem, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("system is not homogeneous")]
    NotHomogeneous,
    #[error("system is already homogeneous; the test concerns its homogenization")]
    HomogeneousInput,
    #[error("ideal is not Artinian up to degree {cap}")]
    NotArtinian { cap: u32 },
    #[error("system has no nonzero polynomial")]
    EmptySystem,
    #[error(transparent)]
    Solve(#[from] MacaulayError),
}

pub type Result<T> = std::result::Result<T, AnalyzeError>;

/// Degree of regularity; `Infinity` when the top parts never fill a degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegReg {
    Finite(u32),
    Infinity,
}

fn require_homogeneous(system: &PolySystem) -> Result<()> {
    if system.is_homogeneous() {
        Ok(())
    } else {
        Err(AnalyzeError::NotHomogeneous)
    }
}

/// `H_{R/I}(d)` for `d = 0..=upto`.
pub fn hilbert_function_upto(system: &PolySystem, upto: u32) -> Result<Vec<u64>> {
    require_homogeneous(system)?;
    let n = system.ring().nvars();
    let dims = ideal_dimensions(n, system.ring().modulus(), system.polys(), upto)
        .map_err(|_| AnalyzeError::NotHomogeneous)?;
    Ok((0..=upto)
        .map(|d| match dims.get(d as usize) {
            Some(&dim) => binomial_count(n, d) - dim,
            None => 0,
        })
        .collect())
}

/// `dim R_d - dim I_d`.
pub fn hilbert_function(system: &PolySystem, d: u32) -> Result<u64> {
    Ok(hilbert_function_upto(system, d)?[d as usize])
}

/// Default search cap for regularity questions about homogeneous forms of the given
/// degrees: the Macaulay bound when `m >= n`, otherwise three times the largest degree.
pub fn default_cap(nvars: usize, degrees: &[u32]) -> u32 {
    macaulay_bound(nvars, degrees)
        .unwrap_or_else(|_| 3 * degrees.iter().copied().max().unwrap_or(1))
}

/// Least `d <= cap` with `(F^top)_d = R_d`.
pub fn degree_of_regularity(system: &PolySystem, cap: u32) -> Result<DegReg> {
    let top = system.top_parts();
    let hf = hilbert_function_upto(&top, cap)?;
    Ok(match hf.iter().position(|&h| h == 0) {
        Some(d) => DegReg::Finite(d as u32),
        None => DegReg::Infinity,
    })
}

/// Whether `I_d = R_d` for some `d <= cap`, with the least such `d`.
pub fn is_artinian(system: &PolySystem, cap: u32) -> Result<(bool, Option<u32>)> {
    let hf = hilbert_function_upto(system, cap)?;
    let w = hf.iter().position(|&h| h == 0).map(|d| d as u32);
    Ok((w.is_some(), w))
}

/// Castelnuovo-Mumford regularity of an Artinian ideal: the least `d` with
/// `I_d = R_d`, searched up to the default cap.
pub fn reg_from_hilbert(system: &PolySystem) -> Result<u32> {
    let cap = default_cap(system.ring().nvars(), &system.degrees());
    match is_artinian(system, cap)? {
        (true, Some(d)) => Ok(d),
        _ => Err(AnalyzeError::NotArtinian { cap }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemiregularMode {
    /// Hilbert series equals the truncated series of the whole sequence.
    Crypto,
    /// The crypto condition holds for every prefix `f_1..f_l`.
    ParduePrefix,
    /// The crypto condition for the homogenization `F^h`.
    Inhomogeneous,
}

/// Compares the Hilbert function with the truncated series coefficient by coefficient
/// through the series cap.
fn crypto_test(system: &PolySystem) -> Result<bool> {
    require_homogeneous(system)?;
    let n = system.ring().nvars();
    let degrees = system.degrees();
    let cap = series_cap(n, &degrees) as u32;
    let predicted = semiregular_series(n, &degrees);
    let hf = hilbert_function_upto(system, cap)?;
    Ok(hf
        .iter()
        .enumerate()
        .all(|(d, &h)| predicted.coeff(d) == BigInt::from(h)))
}

pub fn semiregular_test(system: &PolySystem, mode: SemiregularMode) -> Result<bool> {
    match mode {
        SemiregularMode::Crypto => crypto_test(system),
        SemiregularMode::ParduePrefix => {
            require_homogeneous(system)?;
            for l in 1..=system.len() {
                if !crypto_test(&system.prefix(l))? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        SemiregularMode::Inhomogeneous => crypto_test(&system.homogenize()),
    }
}

/// Whether the homogenizing variable is a nonzerodivisor modulo `J = (F^h)`.
///
/// With `t` last in degrevlex, dividing each element of a Gröbner basis of `J` by its
/// largest power of `t` gives generators of `J : t^inf`; `t` is a nonzerodivisor iff
/// they all lie in `J`.
pub fn t_nonzerodivisor(system: &PolySystem, opts: &SolveOptions) -> Result<bool> {
    if system.is_homogeneous() {
        return Err(AnalyzeError::HomogeneousInput);
    }
    let report = solve(&system.homogenize(), opts)?;
    let red = Reducer::new(&report.basis);
    Ok(report
        .basis
        .iter()
        .map(Polynomial::strip_last_variable_power)
        .all(|g| red.reduces_to_zero(&g)))
}

/// Largest degree in the reduced Gröbner basis.
pub fn maxgb(system: &PolySystem, opts: &SolveOptions) -> Result<u32> {
    Ok(solve(system, opts)?.max_gb_degree)
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Cap for Hilbert-function based quantities; defaults to [`default_cap`] of the
    /// top parts.
    pub cap: Option<u32>,
    pub t_nonzerodivisor: bool,
    pub maxgb: bool,
    pub solve: SolveOptions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub d_reg: DegReg,
    /// Artinian-ness of `(F^top)` (of `F` itself when homogeneous), up to `cap`.
    pub is_artinian: bool,
    pub artinian_witness_degree: Option<u32>,
    /// For inhomogeneous input this is the test on `F^h`.
    pub crypto_semiregular: bool,
    /// Homogeneous input only.
    pub pardue_prefix_semiregular: Option<bool>,
    /// Inhomogeneous input only: the crypto test on `F^top`.
    pub top_crypto_semiregular: Option<bool>,
    pub t_nonzerodivisor: Option<bool>,
    pub maxgb: Option<u32>,
    pub cap: u32,
    /// Hilbert function of `(F^top)` for degrees `0..=cap`.
    pub hilbert_function: Vec<u64>,
}

pub fn analyze(system: &PolySystem, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    if system.polys().iter().all(Polynomial::is_zero) {
        return Err(AnalyzeError::EmptySystem);
    }
    let top = system.top_parts();
    let cap = opts
        .cap
        .unwrap_or_else(|| default_cap(top.ring().nvars(), &top.degrees()));
    let hilbert = hilbert_function_upto(&top, cap)?;
    let witness = hilbert.iter().position(|&h| h == 0).map(|d| d as u32);
    let d_reg = witness.map_or(DegReg::Infinity, DegReg::Finite);
    let homogeneous = system.is_homogeneous();
    let (crypto, pardue, top_crypto, tnzd) = if homogeneous {
        (
            semiregular_test(system, SemiregularMode::Crypto)?,
            Some(semiregular_test(system, SemiregularMode::ParduePrefix)?),
            None,
            None,
        )
    } else {
        let tnzd = if opts.t_nonzerodivisor {
            Some(t_nonzerodivisor(system, &opts.solve)?)
        } else {
            None
        };
        (
            semiregular_test(system, SemiregularMode::Inhomogeneous)?,
            None,
            Some(semiregular_test(&top, SemiregularMode::Crypto)?),
            tnzd,
        )
    };
    let maxgb = if opts.maxgb {
        Some(maxgb(system, &opts.solve)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        d_reg,
        is_artinian: witness.is_some(),
        artinian_witness_degree: witness,
        crypto_semiregular: crypto,
        pardue_prefix_semiregular: pardue,
        top_crypto_semiregular: top_crypto,
        t_nonzerodivisor: tnzd,
        maxgb,
        cap,
        hilbert_function: hilbert,
    })
}
