//! Text and JSON formats for complexes and certificates.
//!
//! A facet list has one facet per line as whitespace-separated positive
//! integers; `#` starts a comment and blank lines are ignored. A line `{}`
//! is the empty facet, so the complex `{∅}` differs from the void complex
//! (no lines at all). The JSON form
//! is `{"facets": [[1, 2, 3], ...]}`. Writers emit the canonical facet order,
//! so writing, parsing and writing again gives identical bytes.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::lefschetz::WlpCertificate;

/// Largest facet accepted: face enumeration is exponential in facet size.
pub const MAX_FACET_SIZE: usize = 24;

const EMPTY_FACET: &str = "{}";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut facet = Vec::new();
        if body == EMPTY_FACET {
            facets.push(facet);
            continue;
        }
        for tok in body.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| parse_error(line, format!("{tok:?} is not a vertex label")))?;
            if v == 0 {
                return Err(parse_error(line, "vertex labels start at 1"));
            }
            facet.push(v);
        }
        facet.sort_unstable();
        if facet.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_error(line, "repeated vertex in a facet"));
        }
        if facet.len() > MAX_FACET_SIZE {
            return Err(parse_error(line, format!("facet has more than {MAX_FACET_SIZE} vertices")));
        }
        facets.push(facet);
    }
    Ok(SimplicialComplex::from_faces(facets))
}

pub fn write_facet_list(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in complex.facets() {
        if f.is_empty() {
            out.push_str(EMPTY_FACET);
        }
        let labels: Vec<String> = f.iter().map(u32::to_string).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    facets: Vec<Face>,
}

fn json_error(e: serde_json::Error) -> Error {
    parse_error(e.line(), e.to_string())
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    let raw: ComplexJson = serde_json::from_str(text).map_err(json_error)?;
    let mut facets = Vec::with_capacity(raw.facets.len());
    for (k, mut f) in raw.facets.into_iter().enumerate() {
        f.sort_unstable();
        if f.first() == Some(&0) {
            return Err(parse_error(0, format!("facet {k}: vertex labels start at 1")));
        }
        if f.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_error(0, format!("facet {k}: repeated vertex")));
        }
        if f.len() > MAX_FACET_SIZE {
            return Err(parse_error(0, format!("facet {k}: more than {MAX_FACET_SIZE} vertices")));
        }
        facets.push(f);
    }
    Ok(SimplicialComplex::from_faces(facets))
}

pub fn write_complex_json(complex: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexJson { facets: complex.facets().to_vec() }).expect("facets serialize")
}

/// Either format: JSON when the first non-blank character is `{`, unless
/// the first line is the empty-facet line `{}`.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let json = text.trim_start().starts_with('{')
        && text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()) != Some(EMPTY_FACET);
    if json {
        parse_complex_json(text)
    } else {
        parse_facet_list(text)
    }
}

pub fn parse_certificate(text: &str) -> Result<WlpCertificate> {
    let cert: WlpCertificate = serde_json::from_str(text).map_err(json_error)?;
    let m = cert.vertices.len();
    if cert.omega.len() != m || cert.theta.iter().any(|r| r.len() != m) {
        return Err(parse_error(0, format!("certificate rows must have {m} entries")));
    }
    Ok(cert)
}

pub fn write_certificate(cert: &WlpCertificate) -> String {
    serde_json::to_string_pretty(cert).expect("certificate serializes")
}
