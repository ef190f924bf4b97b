//! Numerical toolkit for the Hardy averaging operator on the half line:
//! decreasing rearrangements, rearrangement-invariant norms, membership in
//! the operator's optimal domain, and the constructions that separate the
//! spaces involved.

pub mod cli;
pub mod construct;
pub mod error;
pub mod funcrep;
pub mod hardy;
pub mod lorentz;
pub mod numeric;
pub mod rearrange;
pub mod spaces;
pub mod vectmeasure;
pub mod verify;

pub use error::{Error, Result};

/// Default absolute tolerance for quadrature and norm evaluation.
pub const DEFAULT_TOL: f64 = 1e-9;
