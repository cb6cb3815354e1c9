//! U-chains, T-chains and everything assembled from them.
//!
//! Every function takes the quiver `q` the words live on. The modules are
//! right modules over its path algebra, i.e. representations of
//! `q.opposite()`; with that convention the projective at a source of `q`
//! is simple, and the first chain member of `c` is `P_{c_1}`.

mod chain;
mod count;
mod enumerate;
mod explore;
mod recover;
mod triple;

use thiserror::Error;

use crate::coxeter::{CoxeterError, RootVector};
use crate::functors::FunctorError;
use crate::rep::{RepError, Representation};

pub use chain::{co_t_chain, co_u_chain, t_chain, t_w, u_chain};
pub use count::{count_bijection, indecomposables, BijectionCount};
pub use enumerate::{fac_enumerate, sub_enumerate, SubcatReport};
pub use explore::{explore_word, Classification, ExplorerReport, ExplorerStep, Side};
pub use recover::recover_word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("not an admissible triple: {0}")]
    NotAdmissible(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("not a tilting module: {0}")]
    NotTilting(String),
    #[error("enumeration of Sub T is incomplete at bound {bound}")]
    Incomplete { bound: usize },
    #[error("bound {bound} is below the largest summand dimension {needed}")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("quiver is not of Dynkin type")]
    NotDynkin,
    #[error("word does not start with an admissible Coxeter element: {0}")]
    BadStart(String),
    #[error("modules must be representations of the opposite quiver")]
    WrongQuiver,
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainStatus {
    ReducedSortable,
    /// Nested block shape, reduced except for the last letter; the last
    /// chain member may vanish.
    SortableShapeNonreduced,
    /// A step that must be mono (or epi, for co-chains) was not.
    Failed,
}

impl ChainStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ChainStatus::ReducedSortable => "reduced-sortable",
            ChainStatus::SortableShapeNonreduced => "sortable-shape-nonreduced",
            ChainStatus::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ChainResult {
    pub modules: Vec<Representation>,
    /// Injectivity of `f^j` (surjectivity for co-chains); `None` where the
    /// member is a projective or injective and no map is involved. U-chains
    /// report `None` throughout.
    pub mono_flags: Vec<Option<bool>>,
    pub dim_vectors: Vec<RootVector>,
    pub status: ChainStatus,
}

impl ChainResult {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
}
