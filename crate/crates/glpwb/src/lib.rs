//! A symbolic workbench for transfinite provability-logic arithmetic:
//! canonical ordinal notations with hyperexponentials and hyperlogarithms,
//! simple constraint functions and their least solutions, the interval
//! topologies generated by hyperlogarithm bounds, worm order types, reductive
//! maps, d-product projections, a decidable evaluator for closed polymodal
//! formulas, and finite Kripke tooling for the logic J.
//!
//! Every value is immutable; all operations are pure and reentrant.
//!
//! The `examples/` directory of this crate walks through each capability;
//! `cli` exposes the same operations behind a single binary.
//!
//! ```
//! use glpwb::ordinal::{hyper_exp, hyper_log, parse_ordinal};
//!
//! let eps0 = parse_ordinal("e[w](1)")?;
//! assert_eq!(hyper_log(&parse_ordinal("w")?, &eps0), parse_ordinal("1")?);
//! let eps1 = hyper_exp(&parse_ordinal("w")?, &parse_ordinal("2")?);
//! assert_eq!(eps1.to_string(), "e[w](2)");
//! # Ok::<(), glpwb::Error>(())
//! ```

pub mod cli;
pub mod dproduct;
pub mod formula;
pub mod icard;
pub mod jlogic;
pub mod reduction;
pub mod worm;

pub mod ordinal;

pub mod simplefn;

pub use ordinal::{OrdCompare, Ordinal};

use std::fmt;

/// Errors shared across the workbench: syntax errors carry a position,
/// domain errors carry a message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Parse { pos: usize, msg: String },
    Domain(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { pos, msg } => write!(f, "syntax error at {pos}: {msg}"),
            Error::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Recursion-depth cap for parsers and formula evaluation, configurable via
/// `GLPWB_MAX_DEPTH` (default 10000).
pub fn max_depth() -> usize {
    std::env::var("GLPWB_MAX_DEPTH")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10_000)
}
