//! Exact computations with representations of acyclic quivers: Coxeter words
//! and c-sortability, BGP reflection functors, approximations, tilting
//! mutation and the chains of modules attached to c-sortable words.

pub mod chains;
pub mod coxeter;
pub mod exactlin;
pub mod functors;
pub mod rep;

pub use coxeter::{Quiver, RootVector, Word};
pub use exactlin::{Rat, RatMatrix};
pub use rep::{RepMorphism, Representation};
