//! Exact sparse multivariate polynomials over ℚ.

mod context;
mod monomial;
mod poly;
mod rational;
mod serialize;

pub use context::{Var, VarContext, MAX_VARS};
pub use monomial::{GrlexKey, Monomial, MAX_EXP};
pub use poly::{product_of_differences, sum, Polynomial, TermMap};
pub use rational::{ParseRationalError, Rational};
pub use serialize::{content_hash, deserialize, header, parse_header, serialize, FORMAT_VERSION};
