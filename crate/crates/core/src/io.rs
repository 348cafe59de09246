//! Facet-list text format.
//!
//! One facet per line as whitespace-separated non-negative integers. Lines
//! starting with `#` are comments and blank lines are skipped. The canonical
//! form written by [`write_facet_list`] has sorted vertices on each line,
//! lines sorted as integer sequences, and LF line endings.

use std::path::Path;

use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, VertexId};
use crate::generators::{GeneratorError, GeneratorSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: invalid vertex label {token:?}")]
    BadToken { line: usize, token: String },
    #[error("no facets found")]
    Empty,
    #[error("not pure: line {first} has {first_len} vertices but line {line} has {len}")]
    NotPure {
        first: usize,
        first_len: usize,
        line: usize,
        len: usize,
    },
}

pub fn parse_facet_list(doc: &str) -> Result<SimplicialComplex, ParseError> {
    let mut facets: Vec<Vec<VertexId>> = Vec::new();
    let mut first: Option<(usize, usize)> = None;
    for (i, raw) in doc.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let face: Face = text
            .split_whitespace()
            .map(|t| {
                t.parse::<VertexId>().map_err(|_| ParseError::BadToken {
                    line,
                    token: t.to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        match first {
            None => first = Some((line, face.len())),
            Some((first_line, first_len)) if first_len != face.len() => {
                return Err(ParseError::NotPure {
                    first: first_line,
                    first_len,
                    line,
                    len: face.len(),
                })
            }
            Some(_) => {}
        }
        facets.push(face.vertices().to_vec());
    }
    if facets.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(SimplicialComplex::from_facets(facets).expect("checked non-empty and pure"))
}

pub fn write_facet_list(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let line: Vec<String> = f.vertices().iter().map(VertexId::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    File { path: String, source: ParseError },
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A complex together with the name it was requested by.
#[derive(Debug, Clone)]
pub struct NamedComplex {
    pub name: String,
    pub complex: SimplicialComplex,
}

/// Reads `arg` as a facet-list file if such a file exists, otherwise as a
/// generator spec.
pub fn resolve_input(arg: &str) -> Result<NamedComplex, InputError> {
    let path = Path::new(arg);
    if path.is_file() {
        let doc = std::fs::read_to_string(path).map_err(|source| InputError::Read {
            path: arg.to_string(),
            source,
        })?;
        let complex = parse_facet_list(&doc).map_err(|source| InputError::File {
            path: arg.to_string(),
            source,
        })?;
        return Ok(NamedComplex {
            name: arg.to_string(),
            complex,
        });
    }
    let spec: GeneratorSpec = arg.parse()?;
    Ok(NamedComplex {
        name: spec.to_string(),
        complex: spec.build()?,
    })
}
