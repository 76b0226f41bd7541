//! Exact binary invariants of hyperelliptic branch points.
//!
//! `polyring` provides exact sparse polynomial arithmetic over ℚ,
//! `invariants` builds the forms `H_g` and the operator calculus acting on
//! them, `thetaf2` reconstructs the same forms from theta characteristics
//! over F₂, and `harness` ties everything to a cache and a command line.

pub mod budget;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod polyring;
pub mod thetaf2;

pub use budget::Budget;
pub use error::{Error, Result};
