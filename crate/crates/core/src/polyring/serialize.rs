//! The `BINV 1` text format and content hashing.
//!
//! ```text
//! BINV 1 r=4 aux=
//! 1/1 3 1 1 1
//! -1/1 3 1 0 2
//! ```
//!
//! One term per line in descending graded-lex order, coefficient as
//! `num/den` in lowest terms, then one exponent per variable.

use std::fmt::Write as _;

use rustc_hash::FxHashSet;
use sha2::{Digest, Sha256};

use super::context::VarContext;
use super::monomial::{Monomial, MAX_EXP};
use super::poly::{Polynomial, TermMap};
use super::rational::Rational;
use crate::error::{Error, Result};

pub const FORMAT_VERSION: &str = "1";

pub fn header(ctx: &VarContext) -> String {
    format!("BINV {FORMAT_VERSION} r={} aux={}\n", ctx.r, ctx.aux_list())
}

pub fn serialize(p: &Polynomial) -> String {
    let ctx = p.ctx();
    let n = ctx.nvars();
    let mut out = header(&ctx);
    for (m, c) in p.sorted_terms() {
        write!(out, "{c}").unwrap();
        for i in 0..n {
            write!(out, " {}", m.exp(i)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses just the header line, returning the context.
pub fn parse_header(line: &str) -> Result<VarContext> {
    let mut parts = line.split(' ');
    if parts.next() != Some("BINV") {
        return Err(Error::Parse("missing BINV magic".into()));
    }
    let version = parts
        .next()
        .ok_or_else(|| Error::Parse("missing version".into()))?;
    if version != FORMAT_VERSION {
        return Err(Error::UnsupportedVersion(version.to_string()));
    }
    let r = parts
        .next()
        .and_then(|s| s.strip_prefix("r="))
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("bad header `{line}`")))?;
    let aux = parts
        .next()
        .and_then(|s| s.strip_prefix("aux="))
        .ok_or_else(|| Error::Parse(format!("bad header `{line}`")))?;
    if parts.next().is_some() {
        return Err(Error::Parse(format!("trailing header fields in `{line}`")));
    }
    VarContext::parse_aux(r, aux)
}

pub fn deserialize(text: &str) -> Result<Polynomial> {
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| Error::Parse("input is not newline-terminated".into()))?;
    let mut lines = body.split('\n');
    let ctx = parse_header(lines.next().unwrap_or(""))?;
    let n = ctx.nvars();
    let mut terms = TermMap::default();
    let mut seen = FxHashSet::default();
    for (lineno, line) in lines.enumerate() {
        let bad = |what: &str| Error::Parse(format!("term line {}: {what}", lineno + 1));
        let mut fields = line.split(' ');
        let c: Rational = fields
            .next()
            .unwrap_or("")
            .parse()
            .map_err(|e| bad(&format!("{e}")))?;
        if c.is_zero() {
            return Err(bad("zero coefficient"));
        }
        let exps: Vec<u32> = fields
            .map(|s| {
                s.parse::<u32>()
                    .map_err(|_| bad(&format!("bad exponent `{s}`")))
            })
            .collect::<Result<_>>()?;
        if exps.len() != n {
            return Err(bad(&format!("{} exponents for {n} variables", exps.len())));
        }
        if exps.iter().any(|&e| e > MAX_EXP) {
            return Err(bad("exponent too large"));
        }
        let m = Monomial::from_exponents(&exps);
        if !seen.insert(m) {
            return Err(bad("repeated monomial"));
        }
        terms.insert(m, c);
    }
    Ok(Polynomial::from_map(ctx, terms))
}

/// Lowercase hex SHA-256 of the canonical serialization.
pub fn content_hash(p: &Polynomial) -> String {
    hex::encode(Sha256::digest(serialize(p).as_bytes()))
}
