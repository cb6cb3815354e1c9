//! Finite-dimensional representations of acyclic quivers over the rationals.
//!
//! A representation assigns a vector space `k^{d_v}` to every vertex and a
//! matrix of shape `d_{t(a)} x d_{s(a)}` to every arrow `a`.

mod approx;
mod decompose;
mod hom;
mod io;
mod modules;
mod morphism;
mod tilting;

use std::fmt;

use thiserror::Error;

use crate::coxeter::{CoxeterError, Quiver, RootVector};
use crate::exactlin::RatMatrix;

pub use approx::{
    minimal_left_approximation, minimal_right_approximation, LeftApproximation,
    RightApproximation,
};
pub use decompose::{
    decompose, find_isomorphism, is_indecomposable, is_isomorphic, DecompositionReport,
    SummandCertificate,
};
pub use hom::{euler_form, ext1_dim, hom_basis, hom_dim, in_fac_closure, in_sub_closure, reject};
pub use io::{parse_representations, write_representation};
pub use modules::{injective, projective, simple};
pub use morphism::RepMorphism;
pub use tilting::{is_tilting, tilting_defect};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("expected {expected} vertex dimensions, got {got}")]
    DimsLength { expected: usize, got: usize },
    #[error("arrow {arrow}: expected a {expected:?} matrix, got {got:?}")]
    Shape {
        arrow: usize,
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("expected {expected} arrow maps, got {got}")]
    MapCount { expected: usize, got: usize },
    #[error("vertex {vertex}: expected a {expected:?} block, got {got:?}")]
    BlockShape {
        vertex: usize,
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("morphism square at arrow {0} does not commute")]
    NotCommuting(usize),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// A representation of an acyclic quiver.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<RatMatrix>,
}

impl Representation {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<RatMatrix>) -> Result<Self, RepError> {
        let n = quiver.vertex_count();
        if dims.len() != n {
            return Err(RepError::DimsLength {
                expected: n,
                got: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(RepError::MapCount {
                expected: quiver.arrows().len(),
                got: maps.len(),
            });
        }
        for (a, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            let expected = (dims[t - 1], dims[s - 1]);
            if (m.rows(), m.cols()) != expected {
                return Err(RepError::Shape {
                    arrow: a,
                    expected,
                    got: (m.rows(), m.cols()),
                });
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub(crate) fn new_unchecked(quiver: Quiver, dims: Vec<usize>, maps: Vec<RatMatrix>) -> Self {
        debug_assert!(Representation::new(quiver.clone(), dims.clone(), maps.clone()).is_ok());
        Representation { quiver, dims, maps }
    }

    pub fn zero(quiver: &Quiver) -> Representation {
        Representation::with_zero_maps(quiver, vec![0; quiver.vertex_count()])
    }

    /// The representation with the given dimensions and all arrow maps zero.
    pub fn with_zero_maps(quiver: &Quiver, dims: Vec<usize>) -> Representation {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| RatMatrix::zeros(dims[t - 1], dims[s - 1]))
            .collect();
        Representation {
            quiver: quiver.clone(),
            dims,
            maps,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension at the 1-based vertex `v`.
    pub fn dim(&self, v: usize) -> usize {
        self.dims[v - 1]
    }

    pub fn map(&self, arrow: usize) -> &RatMatrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[RatMatrix] {
        &self.maps
    }

    pub fn dim_vector(&self) -> RootVector {
        RootVector::new(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn same_quiver(&self, other: &Representation) -> Result<(), RepError> {
        if self.quiver == other.quiver {
            Ok(())
        } else {
            Err(RepError::QuiverMismatch)
        }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        self.same_quiver(other)?;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| RatMatrix::block_diag(&[a.clone(), b.clone()]))
            .collect();
        Ok(Representation {
            quiver: self.quiver.clone(),
            dims,
            maps,
        })
    }

    /// Direct sum of a list; the zero representation of `quiver` if empty.
    pub fn direct_sum_all(quiver: &Quiver, parts: &[Representation]) -> Result<Representation, RepError> {
        let mut acc = Representation::zero(quiver);
        for p in parts {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    /// The dual `D X = Hom_k(X, k)`, a representation of the opposite quiver.
    pub fn dual(&self) -> Representation {
        Representation {
            quiver: self.quiver.opposite(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(RatMatrix::transpose).collect(),
        }
    }

    /// The same vector spaces and maps viewed over another quiver with the
    /// same arrows. Arrows of `target` missing from `self` get zero maps,
    /// which requires a zero space at one of their ends. Arrows are matched
    /// by position and endpoints.
    pub fn transport(&self, target: &Quiver) -> Option<Representation> {
        if target.vertex_count() != self.quiver.vertex_count() {
            return None;
        }
        let mut used = vec![false; self.quiver.arrows().len()];
        let mut maps = Vec::with_capacity(target.arrows().len());
        for &(s, t) in target.arrows() {
            let found = self
                .quiver
                .arrows()
                .iter()
                .enumerate()
                .position(|(a, &e)| !used[a] && e == (s, t));
            match found {
                Some(a) => {
                    used[a] = true;
                    maps.push(self.maps[a].clone());
                }
                None if self.dims[s - 1] == 0 || self.dims[t - 1] == 0 => {
                    maps.push(RatMatrix::zeros(self.dims[t - 1], self.dims[s - 1]))
                }
                None => return None,
            }
        }
        // dropped arrows must carry zero maps
        for (a, m) in self.maps.iter().enumerate() {
            if !used[a] && !m.is_zero() {
                return None;
            }
        }
        Some(Representation {
            quiver: target.clone(),
            dims: self.dims.clone(),
            maps,
        })
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation{}", self.dim_vector())?;
        if f.alternate() {
            for (a, m) in self.maps.iter().enumerate() {
                write!(f, "\n  arrow {a}: {m:?}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rat;

    #[test]
    fn construction_checks_shapes() {
        let q = Quiver::linear(2);
        let ok = Representation::new(q.clone(), vec![1, 2], vec![RatMatrix::zeros(2, 1)]);
        assert!(ok.is_ok());
        let bad = Representation::new(q.clone(), vec![1, 2], vec![RatMatrix::zeros(1, 2)]);
        assert!(matches!(bad, Err(RepError::Shape { .. })));
        assert!(Representation::new(q, vec![1], vec![]).is_err());
    }

    #[test]
    fn sums_and_duals() {
        let q = Quiver::linear(2);
        let x = Representation::new(q.clone(), vec![1, 1], vec![RatMatrix::from_i64_rows(&[&[3]])]).unwrap();
        let s = x.direct_sum(&x).unwrap();
        assert_eq!(s.dims(), &[2, 2]);
        assert_eq!(s.map(0)[(1, 1)], Rat::from_int(3));
        let d = x.dual();
        assert_eq!(d.quiver().arrows(), &[(2, 1)]);
        assert_eq!(d.dual(), x);
    }

    #[test]
    fn transport_between_restrictions() {
        let q = Quiver::linear(3);
        let (r, _) = q.restrict(&[1, 2]);
        let x = Representation::new(r.clone(), vec![1, 1, 0], vec![RatMatrix::from_i64_rows(&[&[1]])]).unwrap();
        let y = x.transport(&q).unwrap();
        assert_eq!(y.map(1).rows(), 0);
        assert_eq!(y.transport(&r).unwrap(), x);
    }
}
