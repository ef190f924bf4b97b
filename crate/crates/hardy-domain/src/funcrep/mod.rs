//! Function representation: analytic atoms, piecewise assembly, quadrature
//! and the expression parser.

pub mod atom;
pub mod parse;
pub mod piecewise;
pub mod quad;

pub use atom::{Atom, AtomKind, Limit};
pub use piecewise::{
    IntegralResult, IntegralStatus, Method, NumericForm, Piece, PieceForm, PiecewiseFn,
};
pub use quad::QuadOutcome;
