//! Exact linear algebra over the rationals.

mod matrix;
mod rat;
mod sparse;

pub use matrix::{Echelon, LinAlgError, RatMatrix};
pub use rat::{ParseRatError, Rat};
pub use sparse::{SparseEliminator, SparseRow};
