//! Quivers, words in the associated Coxeter group, root-lattice reflections
//! and c-sortable elements.

mod group;
mod quiver;
mod roots;
mod sortable;
mod word;

use thiserror::Error;

pub use group::GroupElement;
pub use quiver::Quiver;
pub use roots::{
    contragradient_reflection, is_reduced, layer_roots, positive_real_roots, simple_reflection,
    RootVector,
};
pub use sortable::{
    is_admissible_coxeter, literal_blocks, sortable_decompose, sorting_word, SortableDecomposition,
};
pub use word::Word;

pub(crate) use roots::ReflectionProduct;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("quiver has an oriented cycle")]
    Cyclic,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("word is not reduced")]
    NotReduced,
    #[error("vector has length {got}, quiver has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("`{0}` is not an admissible Coxeter element")]
    NotAdmissible(Word),
}
