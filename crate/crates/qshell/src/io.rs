//! Plain-text serialization of subspaces, rank tables and complexes.
//!
//! All formats start with a `q=<q> n=<n>` header line.
//!
//! * Subspace lists: one block per subspace separated by blank lines;
//!   each block is a basis, one row per line with whitespace-separated
//!   entries in [0, q) (canonical field representatives).  The zero
//!   subspace is the single-line block `0`.
//! * Rank tables: one line per subspace — the RREF basis as
//!   semicolon-separated rows of comma-separated entries, a `|`, then
//!   the rank value.  The zero subspace reads `0 | 0`.
//! * Complex files: a subspace list of faces.  Faces implied by downward
//!   closure may be omitted; the loader closes the family and reports
//!   whether that added anything.
//!
//! Parsing is lenient about surrounding whitespace and basis choice
//! (generators are canonicalized), while rendering always emits the
//! canonical RREF form, so render → parse → render is the identity.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{FieldError, FieldSpec};
use crate::lattice::{LatticeError, SubspaceLattice};
use crate::linalg::{LinAlgError, Subspace, Vector};
use crate::qcomplex::{ComplexError, QComplex};
use crate::qmatroid::{MatroidError, RankOracle};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

fn parse_error(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, message: message.into() }
}

/// Splits the text into the parsed header and the remaining numbered
/// lines (1-based, as in error messages).
fn header_and_body(text: &str) -> Result<(Arc<FieldSpec>, usize, Vec<(usize, &str)>), IoError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    for (no, raw) in &mut lines {
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut q = None;
        let mut n = None;
        for token in trimmed.split_whitespace() {
            if let Some(value) = token.strip_prefix("q=") {
                q = Some(value.parse::<u64>().map_err(|_| {
                    parse_error(no, format!("cannot read field order from `{token}`"))
                })?);
            } else if let Some(value) = token.strip_prefix("n=") {
                n = Some(value.parse::<usize>().map_err(|_| {
                    parse_error(no, format!("cannot read ambient dimension from `{token}`"))
                })?);
            } else {
                return Err(parse_error(no, format!("unexpected token `{token}` in header")));
            }
        }
        let (Some(q), Some(n)) = (q, n) else {
            return Err(parse_error(no, "header must provide both q= and n="));
        };
        let spec = FieldSpec::from_order(q)?;
        return Ok((spec, n, lines.collect()));
    }
    Err(parse_error(0, "missing `q=<q> n=<n>` header"))
}

fn parse_row(
    spec: &Arc<FieldSpec>,
    n: usize,
    no: usize,
    text: &str,
    separator: char,
) -> Result<Vector, IoError> {
    let mut entries = Vec::with_capacity(n);
    for token in text.split(separator).map(str::trim).filter(|t| !t.is_empty()) {
        let value = token
            .parse::<u64>()
            .map_err(|_| parse_error(no, format!("cannot read entry `{token}`")))?;
        if value >= spec.q() {
            return Err(parse_error(
                no,
                format!("entry {value} is no canonical representative modulo q = {}", spec.q()),
            ));
        }
        entries.push(value);
    }
    if entries.len() != n {
        return Err(parse_error(
            no,
            format!("expected {n} entries per row, found {}", entries.len()),
        ));
    }
    Vector::new(spec, &entries).map_err(|e| parse_error(no, e.to_string()))
}

/// Parses one basis block (already split into nonblank lines).  The
/// single line `0` denotes the zero subspace.
fn parse_block(
    spec: &Arc<FieldSpec>,
    n: usize,
    block: &[(usize, &str)],
) -> Result<Subspace, IoError> {
    if block.len() == 1 && block[0].1 == "0" {
        return Ok(Subspace::zero(spec, n));
    }
    let mut rows = Vec::with_capacity(block.len());
    for &(no, text) in block {
        rows.push(parse_row(spec, n, no, text, ' ')?);
    }
    let first_line = block[0].0;
    Subspace::from_generators(spec, n, &rows).map_err(|e| parse_error(first_line, e.to_string()))
}

/// Parses a blank-line-separated list of subspace blocks.
pub fn parse_subspace_list(text: &str) -> Result<(Arc<FieldSpec>, usize, Vec<Subspace>), IoError> {
    let (spec, n, body) = header_and_body(text)?;
    let mut subspaces = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    for (no, raw) in body {
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            if !block.is_empty() {
                subspaces.push(parse_block(&spec, n, &block)?);
                block.clear();
            }
        } else {
            block.push((no, trimmed));
        }
    }
    if !block.is_empty() {
        subspaces.push(parse_block(&spec, n, &block)?);
    }
    Ok((spec, n, subspaces))
}

fn render_block(subspace: &Subspace, entry_sep: &str, row_sep: &str) -> String {
    if subspace.dim() == 0 {
        return "0".to_string();
    }
    subspace
        .basis()
        .iter()
        .map(|row| {
            row.reprs().iter().map(u64::to_string).collect::<Vec<_>>().join(entry_sep)
        })
        .collect::<Vec<_>>()
        .join(row_sep)
}

/// Renders a subspace list in the block format parsed by
/// [`parse_subspace_list`].
pub fn render_subspace_list(spec: &Arc<FieldSpec>, n: usize, subspaces: &[Subspace]) -> String {
    let mut out = format!("q={} n={n}\n", spec.q());
    for subspace in subspaces {
        out.push('\n');
        out.push_str(&render_block(subspace, " ", "\n"));
        out.push('\n');
    }
    out
}

/// Parses a rank table into (subspace, rank) pairs; table completeness
/// is checked later by [`RankOracle::from_table`].
pub fn parse_rank_table(text: &str) -> Result<(Arc<FieldSpec>, usize, Vec<(Subspace, u64)>), IoError> {
    let (spec, n, body) = header_and_body(text)?;
    let mut entries = Vec::new();
    for (no, raw) in body {
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let Some((basis_part, rank_part)) = trimmed.split_once('|') else {
            return Err(parse_error(no, "expected `<basis> | <rank>`"));
        };
        let basis_part = basis_part.trim();
        let subspace = if basis_part == "0" {
            Subspace::zero(&spec, n)
        } else {
            let mut rows = Vec::new();
            for row_text in basis_part.split(';') {
                rows.push(parse_row(&spec, n, no, row_text, ',')?);
            }
            Subspace::from_generators(&spec, n, &rows)
                .map_err(|e| parse_error(no, e.to_string()))?
        };
        let rank_text = rank_part.trim();
        let rank = rank_text
            .parse::<u64>()
            .map_err(|_| parse_error(no, format!("cannot read rank value `{rank_text}`")))?;
        entries.push((subspace, rank));
    }
    Ok((spec, n, entries))
}

/// Renders a rank oracle as a complete rank table, one subspace per line
/// in ascending (dimension, ≼) order.
pub fn render_rank_table(oracle: &RankOracle) -> String {
    let mut out = format!("q={} n={}\n", oracle.q(), oracle.ambient_dim());
    for (subspace, rank) in oracle.entries() {
        out.push_str(&render_block(subspace, ",", ";"));
        out.push_str(&format!(" | {rank}\n"));
    }
    out
}

/// Reads a rank table and materializes it over a freshly built lattice
/// honoring the subspace cap.
pub fn load_rank_oracle(text: &str, max_subspaces: usize) -> Result<RankOracle, IoError> {
    let (spec, n, entries) = parse_rank_table(text)?;
    let lattice = SubspaceLattice::with_cap(&spec, n, max_subspaces)?;
    Ok(RankOracle::from_table(&lattice, &entries)?)
}

/// Reads a complex file: the listed faces are closed downward, and the
/// returned flag records whether the closure added any face beyond the
/// (distinct) listed ones.
pub fn load_complex(text: &str, max_subspaces: usize) -> Result<(QComplex, bool), IoError> {
    let (spec, n, faces) = parse_subspace_list(text)?;
    let lattice = SubspaceLattice::with_cap(&spec, n, max_subspaces)?;
    let complex = QComplex::generate(&lattice, &faces)?;
    let mut listed = BTreeSet::new();
    for face in &faces {
        listed.insert(lattice.id_of(face)?);
    }
    Ok((complex.clone(), complex.len() > listed.len()))
}
