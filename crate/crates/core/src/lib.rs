//! Exact Ehrhart `h*`-polynomials of positroid polytopes.

pub mod combinatorics;
pub mod error;
pub mod halfopen;
pub mod input;
mod linalg;
pub mod oracle;
pub mod pipeline;
pub mod poly;
pub mod positroid;
pub mod tree;
pub mod triangulation;
pub mod verify;

pub use error::{Error, Result};
pub use poly::ExactPolynomial;
