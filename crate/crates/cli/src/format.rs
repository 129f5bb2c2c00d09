//! The plain-text facet list format.
//!
//! One facet per line as 1-based vertex labels separated by spaces. An optional
//! `m <int>` header fixes the vertex count; otherwise it is the largest label.
//! Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use dblhom_core::{Error as CoreError, SimplicialComplex, VertexSet};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Complex(#[from] CoreError),
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut m = None;
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| ParseError::Syntax { line: i + 1, message };
        if let Some(rest) = line.strip_prefix('m') {
            if m.is_some() || !facets.is_empty() {
                return Err(syntax("`m` header must come before the facets".into()));
            }
            let value = rest.trim().parse::<usize>().map_err(|_| syntax(format!("bad header `{line}`")))?;
            m = Some(value);
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(0) | Err(_) => Err(syntax(format!("`{tok}` is not a positive vertex label"))),
                Ok(v) => Ok(v),
            })
            .collect::<Result<Vec<usize>, _>>()?;
        facets.push(facet);
    }
    Ok(SimplicialComplex::from_labels(m, &facets)?)
}

/// Canonical facet list. A header is written only when the complex is the void complex.
pub fn format_complex(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    if k.facets().is_empty() || k.facets() == [VertexSet::EMPTY] {
        writeln!(out, "m {}", k.m()).unwrap();
    }
    for f in k.facet_labels() {
        let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", labels.join(" ")).unwrap();
    }
    out
}

/// A single face written as space- or comma-separated labels, e.g. `"1 3 5"`.
pub fn parse_face(text: &str) -> Result<VertexSet, ParseError> {
    let mut s = VertexSet::EMPTY;
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        match tok.parse::<usize>() {
            Ok(v) if v >= 1 && v <= dblhom_core::MAX_VERTICES => s = s.with(v - 1),
            _ => {
                return Err(ParseError::Syntax { line: 1, message: format!("`{tok}` is not a vertex label") })
            }
        }
    }
    Ok(s)
}
