//! Plain-text system files.
//!
//! ```text
//! # comment
//! field 7
//! vars x, y
//! x^4 - 1
//! x^2*y - x^2
//! ```

use solvdeg::field::is_prime;
use solvdeg::poly::{Monomial, PolySystem, Polynomial, Ring};
use solvdeg::PrimeModulus;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("line {line}, column {col}: unknown variable {name:?}")]
    UnknownVariable {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("line {line}: {value} is not a prime below 2^31")]
    NonPrimeField { line: usize, value: String },
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
    /// Column of `s[0]` in the original line (1-based).
    base: usize,
}

impl Cursor<'_> {
    fn col(&self) -> usize {
        self.base + self.pos
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> FormatError {
        parse_err(self.line, self.col(), msg)
    }

    fn integer(&mut self) -> Result<u64, FormatError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse::<u64>().map_err(|_| {
            parse_err(
                self.line,
                self.base + start,
                format!("expected an integer, found {text:?}"),
            )
        })
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }
}

/// Parses a polynomial in `ring`; positions are reported as line 1.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, FormatError> {
    parse_poly_line(text, 1, 1, ring)
}

fn parse_poly_line(
    text: &str,
    line: usize,
    base: usize,
    ring: &Ring,
) -> Result<Polynomial, FormatError> {
    let p = ring.modulus();
    let n = ring.nvars();
    let mut c = Cursor {
        s: text.as_bytes(),
        pos: 0,
        line,
        base,
    };
    let mut terms: Vec<(Monomial, i64)> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match c.peek() {
            None if first => return Err(c.err("empty polynomial")),
            None => break,
            Some(b'+') if !first => c.pos += 1,
            Some(b'-') => {
                c.pos += 1;
                negative = true;
            }
            Some(_) if first => {}
            Some(ch) => return Err(c.err(format!("expected '+' or '-', found {:?}", ch as char))),
        }
        first = false;
        // one term: factors separated by '*'
        let mut coeff: u32 = 1;
        let mut exps = vec![0u16; n];
        loop {
            match c.peek() {
                Some(ch) if ch.is_ascii_digit() => {
                    let v = c.integer()?;
                    coeff = p.mul(coeff, (v % p.value() as u64) as u32);
                }
                Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                    let col = c.base + c.pos;
                    let name = c.ident().to_string();
                    let i = ring.names().iter().position(|x| *x == name).ok_or(
                        FormatError::UnknownVariable {
                            line,
                            col,
                            name: name.clone(),
                        },
                    )?;
                    let mut e = 1u64;
                    if c.peek() == Some(b'^') {
                        c.pos += 1;
                        e = c.integer()?;
                    }
                    let total = exps[i] as u64 + e;
                    if total > u16::MAX as u64 {
                        return Err(c.err("exponent too large"));
                    }
                    exps[i] = total as u16;
                }
                Some(ch) => return Err(c.err(format!("unexpected {:?}", ch as char))),
                None => return Err(c.err("expected a term")),
            }
            if c.peek() == Some(b'*') {
                c.pos += 1;
            } else {
                break;
            }
        }
        let v = if negative { p.neg(coeff) } else { coeff };
        terms.push((Monomial::new(exps), v as i64));
    }
    Ok(Polynomial::from_terms(n, p, terms))
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Parses a whole system file.
pub fn parse_system(text: &str) -> Result<PolySystem, FormatError> {
    let mut ring: Option<Ring> = None;
    let mut modulus: Option<PrimeModulus> = None;
    let mut polys = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        let trimmed = body.trim();
        let Some(p) = modulus else {
            let Some(rest) = trimmed.strip_prefix("field") else {
                return Err(parse_err(line, indent + 1, "expected 'field <prime>'"));
            };
            let value = rest.trim();
            let p = value
                .parse::<u64>()
                .ok()
                .filter(|&v| is_prime(v))
                .and_then(|v| PrimeModulus::new(v).ok())
                .ok_or_else(|| FormatError::NonPrimeField {
                    line,
                    value: value.to_string(),
                })?;
            modulus = Some(p);
            continue;
        };
        match &ring {
            Some(r) => polys.push(parse_poly_line(body, line, 1, r)?),
            None => {
                let Some(rest) = trimmed.strip_prefix("vars") else {
                    return Err(parse_err(line, indent + 1, "expected 'vars <names>'"));
                };
                let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                ring = Some(
                    Ring::new(names, p).map_err(|e| parse_err(line, indent + 5, e.to_string()))?,
                );
            }
        }
    }
    let ring =
        ring.ok_or_else(|| parse_err(text.lines().count().max(1), 1, "missing header lines"))?;
    Ok(PolySystem::new(ring, polys).expect("parsed in the ring"))
}

/// Inverse of [`parse_system`].
pub fn render_system(system: &PolySystem) -> String {
    let mut s = format!(
        "field {}\nvars {}\n",
        system.ring().modulus(),
        system.ring().names().join(",")
    );
    for line in system.render() {
        s.push_str(&line);
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_system_parses() {
        let s = parse_system("field 7\nvars x,y\nx^4 - 1\nx^2*y - x^2\ny^2 - 1\n").unwrap();
        assert_eq!(s, crate::fixtures::gap_example());
        assert_eq!(s.render(), vec!["x^4 - 1", "x^2*y - x^2", "y^2 - 1"]);
    }

    #[test]
    fn coefficient_reduction_and_products() {
        let s = parse_system("field 7\nvars x\n8*x\n").unwrap();
        assert_eq!(s.render(), vec!["x"]);
        let s = parse_system("# c\nfield 5\nvars x, y\n2*x*3*x + y*x - 0 # tail\n-x\n0\n").unwrap();
        assert_eq!(s.render(), vec!["x^2 + x*y", "-x", "0"]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_system("field 4\nvars x\nx\n"),
            Err(FormatError::NonPrimeField {
                line: 1,
                value: "4".into()
            })
        );
        assert_eq!(
            parse_system("field 7\nvars x,y\nx + z\n"),
            Err(FormatError::UnknownVariable {
                line: 3,
                col: 5,
                name: "z".into()
            })
        );
        assert!(matches!(
            parse_system("field 7\nvars x\nx +* 2\n"),
            Err(FormatError::Parse {
                line: 3,
                col: 4,
                ..
            })
        ));
        assert!(matches!(
            parse_system("vars x\n"),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_system("field 7\nvars x\nx^\n"),
            Err(FormatError::Parse { line: 3, .. })
        ));
    }
}
