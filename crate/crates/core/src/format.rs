//! Text formats for complexes, ideals and CNF formulas.
//!
//! Complex text format:
//!
//! ```text
//! # optional comment lines
//! vertices 4
//! 0 1 2
//! 1 3
//! ```
//!
//! Each line after the header is one facet given by its vertex indices; the
//! token `empty` stands for the empty facet and no facet lines means the void
//! complex. Faces are maximalized on input. The same complex can be written
//! as JSON: `{"vertices": 4, "facets": [[0, 1, 2], [1, 3]]}`.
//!
//! Ideals use the header `vars <n>` followed by one generator per line as
//! variable indices, with `empty` for the unit monomial. CNF formulas use
//! the DIMACS `p cnf` format.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::reductions::{CnfFormula, Literal};
use crate::translation::SquareFreeIdeal;

const EMPTY_TOKEN: &str = "empty";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Complex(Complex),
    Ideal(SquareFreeIdeal),
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<usize> {
    let (no, line) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing `{keyword} <n>` header")))?;
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(n), None) if k == keyword => n
            .parse()
            .map_err(|_| Error::parse(no, format!("`{n}` is not a non-negative integer"))),
        _ => Err(Error::parse(
            no,
            format!("expected `{keyword} <n>`, found `{line}`"),
        )),
    }
}

/// Parses one row of indices (or the `empty` token), checking the range.
fn parse_row(no: usize, line: &str, bound: usize, what: &str) -> Result<Vec<usize>> {
    if line == EMPTY_TOKEN {
        return Ok(Vec::new());
    }
    line.split_whitespace()
        .map(|tok| {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::parse(no, format!("`{tok}` is not a {what} index")))?;
            if v >= bound {
                return Err(Error::parse(
                    no,
                    format!("{what} {v} is outside the declared range 0..{bound}"),
                ));
            }
            Ok(v)
        })
        .collect()
}

/// Parses the complex text format.
pub fn parse_complex_text(text: &str) -> Result<Complex> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "vertices")?;
    let mut faces = Vec::new();
    for (no, line) in lines {
        faces.push(parse_row(no, line, n, "vertex")?);
    }
    Complex::new(n, faces)
}

/// Writes the complex text format, facets in stored order.
pub fn write_complex_text(c: &Complex) -> String {
    let mut out = format!("vertices {}\n", c.universe());
    for f in c.facets() {
        if f.is_empty() {
            out.push_str(EMPTY_TOKEN);
        } else {
            let parts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn parse_complex_json(text: &str) -> Result<Complex> {
    let doc: ComplexJson =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    Complex::new(doc.vertices, doc.facets)
}

pub fn write_complex_json(c: &Complex) -> String {
    let doc = ComplexJson {
        vertices: c.universe(),
        facets: c.facets().map(|f| f.iter().collect()).collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses the ideal text format. Generators must be minimal.
pub fn parse_ideal_text(text: &str) -> Result<SquareFreeIdeal> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "vars")?;
    let mut gens = Vec::new();
    for (no, line) in lines {
        gens.push(parse_row(no, line, n, "variable")?);
    }
    SquareFreeIdeal::new(n, gens)
}

pub fn write_ideal_text(ideal: &SquareFreeIdeal) -> String {
    let mut out = format!("vars {}\n", ideal.num_vars());
    for g in ideal.generators() {
        if g.is_empty() {
            out.push_str(EMPTY_TOKEN);
        } else {
            let parts: Vec<String> = g.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
        }
        out.push('\n');
    }
    out
}

/// Parses a complex or an ideal, telling them apart by the header line or a
/// leading `{` for JSON.
pub fn parse_document(text: &str) -> Result<Document> {
    if text.trim_start().starts_with('{') {
        return parse_complex_json(text).map(Document::Complex);
    }
    match content_lines(text).next() {
        Some((_, line)) if line.split_whitespace().next() == Some("vars") => {
            parse_ideal_text(text).map(Document::Ideal)
        }
        _ => parse_complex_text(text).map(Document::Complex),
    }
}

/// Parses the DIMACS CNF subset: `c` comment lines, one `p cnf <vars>
/// <clauses>` header, and clauses as signed literals terminated by `0`,
/// possibly spanning lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        last_line = no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(no, "duplicate `p cnf` header"));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            header =
                Some(parsed.ok_or_else(|| Error::parse(no, "expected `p cnf <vars> <clauses>`"))?);
            continue;
        }
        let (vars, _) =
            header.ok_or_else(|| Error::parse(no, "clause before the `p cnf` header"))?;
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::parse(no, format!("`{tok}` is not a literal")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(Error::parse(no, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = lit.unsigned_abs() as usize - 1;
            if var >= vars {
                return Err(Error::parse(
                    no,
                    format!("variable {} exceeds the declared {vars}", var + 1),
                ));
            }
            current.push(Literal {
                var,
                positive: lit > 0,
            });
        }
    }
    let (vars, count) =
        header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p cnf` header"))?;
    if !current.is_empty() {
        return Err(Error::parse(
            last_line,
            "last clause is not terminated by 0",
        ));
    }
    if clauses.len() != count {
        return Err(Error::parse(
            last_line,
            format!(
                "header declares {count} clauses but {} were given",
                clauses.len()
            ),
        ));
    }
    CnfFormula::new(vars, clauses)
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for clause in f.clauses() {
        for l in clause {
            let _ = write!(out, "{} ", l.to_dimacs());
        }
        out.push_str("0\n");
    }
    out
}
