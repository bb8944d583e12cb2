//! Action-dimension toolkit for Artin groups presented by Coxeter matrices.
//!
//! The crate builds the nerve of an Artin group, computes exact integer
//! (co)homology via Smith normal form, certifies fundamental-group conditions
//! with three-valued certificates, evaluates the action-dimension bound rules,
//! constructs basic constructions `U(W, |S(σ)|)` for finite Coxeter groups,
//! embeds complexes into contractible complexes of the same dimension where
//! the obstructions vanish, and verifies the dimension arithmetic of the
//! stratified gluing ledger.
//!
//! Everything is exact: arbitrary-precision integers for linear algebra,
//! integer matrices in the root basis for the crystallographic exceptional
//! groups, and the quadratic field `a + b√5` for the pentagonal ones. No
//! floating point is used anywhere.

pub mod bounds;
pub mod cli;
pub mod complex;
pub mod coxeter;
pub mod embed;
pub mod fungroup;
pub mod gluing;
pub mod homology;
pub mod nerve;
pub mod posets;

#[cfg(test)]
pub(crate) mod testutil;

use thiserror::Error;

/// Error for the text input formats (complex files and `coxmat` files).
///
/// `line` is 1-based and refers to the offending input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, msg: impl Into<String>) -> Self {
        ParseError { line, msg: msg.into() }
    }
}
