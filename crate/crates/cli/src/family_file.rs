//! The line-oriented family file format.
//!
//! ```text
//! # comments run to end of line, blank lines are ignored
//! vars 2
//! ideal first          # optional name after the keyword
//! gen 2 0
//! gen 0 1
//! ideal
//! gen 1 0
//! gen 0 2
//! ```
//!
//! The header fixes the number of variables; every `gen` line carries exactly
//! that many non-negative integers. Generators need not be minimal: parsing
//! reduces each ideal to its canonical minimal generating set, so
//! `parse(render(f)) == f`.

use brim::{IdealFamily, Monomial, MonomialIdeal};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone)]
pub struct ParsedFamily {
    pub family: IdealFamily,
    /// Optional name per ideal, parallel to the family members.
    pub names: Vec<Option<String>>,
    /// Line on which each ideal was declared, for error reporting.
    pub ideal_lines: Vec<usize>,
}

pub fn parse_family(text: &str, allow_non_primary: bool) -> Result<ParsedFamily, ParseError> {
    let mut dim: Option<usize> = None;
    let mut header_line = 0usize;
    let mut ideals: Vec<(usize, Option<String>, Vec<Monomial>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().expect("non-empty line has a first word");
        match keyword {
            "vars" => {
                if dim.is_some() {
                    return Err(err(line_no, "duplicate `vars` header"));
                }
                if !ideals.is_empty() {
                    return Err(err(line_no, "`vars` must come before any ideal"));
                }
                let value = words
                    .next()
                    .ok_or_else(|| err(line_no, "`vars` needs a positive integer"))?;
                let d: usize = value
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid variable count `{value}`")))?;
                if d == 0 {
                    return Err(err(line_no, "the number of variables must be at least 1"));
                }
                if words.next().is_some() {
                    return Err(err(line_no, "trailing tokens after `vars`"));
                }
                dim = Some(d);
                header_line = line_no;
            }
            "ideal" => {
                if dim.is_none() {
                    return Err(err(line_no, "`ideal` before the `vars` header"));
                }
                let name = {
                    let rest: Vec<&str> = words.collect();
                    if rest.is_empty() {
                        None
                    } else {
                        Some(rest.join(" "))
                    }
                };
                ideals.push((line_no, name, Vec::new()));
            }
            "gen" => {
                let d = dim.ok_or_else(|| err(line_no, "`gen` before the `vars` header"))?;
                let Some(current) = ideals.last_mut() else {
                    return Err(err(line_no, "`gen` before any `ideal`"));
                };
                let mut exps = Vec::with_capacity(d);
                for word in words {
                    let e: u64 = word.parse().map_err(|_| {
                        err(line_no, format!("invalid exponent `{word}`"))
                    })?;
                    exps.push(e);
                }
                if exps.len() != d {
                    return Err(err(
                        line_no,
                        format!("`gen` needs exactly {d} exponents, found {}", exps.len()),
                    ));
                }
                current.2.push(Monomial::new(exps));
            }
            other => {
                return Err(err(line_no, format!("unknown directive `{other}`")));
            }
        }
    }

    let dim = dim.ok_or_else(|| err(1, "missing `vars` header"))?;
    if ideals.is_empty() {
        return Err(err(header_line, "the file declares no ideals"));
    }

    let mut members = Vec::with_capacity(ideals.len());
    let mut names = Vec::with_capacity(ideals.len());
    let mut ideal_lines = Vec::with_capacity(ideals.len());
    for (line_no, name, gens) in ideals {
        if gens.is_empty() {
            return Err(err(line_no, "ideal has no generators"));
        }
        let ideal = MonomialIdeal::new(dim, gens)
            .map_err(|e| err(line_no, e.to_string()))?;
        if ideal.is_unit() {
            return Err(err(line_no, "ideal is the unit ideal"));
        }
        if !allow_non_primary && !ideal.is_m_primary() {
            return Err(err(
                line_no,
                format!("ideal {ideal} is not m-primary (pass --allow-non-primary to keep it)"),
            ));
        }
        members.push(ideal);
        names.push(name);
        ideal_lines.push(line_no);
    }

    let family = IdealFamily::new_allowing_non_primary(members)
        .map_err(|e| err(header_line, e.to_string()))?;
    Ok(ParsedFamily {
        family,
        names,
        ideal_lines,
    })
}

/// Canonical rendering; parsing it back reproduces the family exactly.
pub fn render_family(family: &IdealFamily, names: &[Option<String>]) -> String {
    let mut out = format!("vars {}\n", family.dim());
    for (i, ideal) in family.ideals().iter().enumerate() {
        match names.get(i).and_then(|n| n.as_deref()) {
            Some(name) => out.push_str(&format!("ideal {name}\n")),
            None => out.push_str("ideal\n"),
        }
        for g in ideal.gens() {
            out.push_str("gen");
            for e in g.exponents() {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
    }
    out
}
