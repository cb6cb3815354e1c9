use super::{RepError, Representation};
use crate::exactlin::{Rat, RatMatrix};

/// A morphism of representations: one matrix per vertex, commuting with
/// the arrow maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    source: Representation,
    target: Representation,
    blocks: Vec<RatMatrix>,
}

impl RepMorphism {
    pub fn new(
        source: Representation,
        target: Representation,
        blocks: Vec<RatMatrix>,
    ) -> Result<RepMorphism, RepError> {
        source.same_quiver(&target)?;
        let n = source.quiver().vertex_count();
        if blocks.len() != n {
            return Err(RepError::DimsLength {
                expected: n,
                got: blocks.len(),
            });
        }
        for v in 1..=n {
            let b = &blocks[v - 1];
            let expected = (target.dim(v), source.dim(v));
            if (b.rows(), b.cols()) != expected {
                return Err(RepError::BlockShape {
                    vertex: v,
                    expected,
                    got: (b.rows(), b.cols()),
                });
            }
        }
        let f = RepMorphism {
            source,
            target,
            blocks,
        };
        if let Some(a) = f.failing_square() {
            return Err(RepError::NotCommuting(a));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, blocks: Vec<RatMatrix>) -> Self {
        let f = RepMorphism {
            source,
            target,
            blocks,
        };
        debug_assert!(f.failing_square().is_none());
        f
    }

    fn failing_square(&self) -> Option<usize> {
        let q = self.source.quiver();
        q.arrows().iter().enumerate().find_map(|(a, &(s, t))| {
            let lhs = &self.blocks[t - 1] * self.source.map(a);
            let rhs = self.target.map(a) * &self.blocks[s - 1];
            (lhs != rhs).then_some(a)
        })
    }

    pub fn zero(source: &Representation, target: &Representation) -> RepMorphism {
        let blocks = (1..=source.quiver().vertex_count())
            .map(|v| RatMatrix::zeros(target.dim(v), source.dim(v)))
            .collect();
        RepMorphism {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    pub fn identity(x: &Representation) -> RepMorphism {
        let blocks = x.dims().iter().map(|&d| RatMatrix::identity(d)).collect();
        RepMorphism {
            source: x.clone(),
            target: x.clone(),
            blocks,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn blocks(&self) -> &[RatMatrix] {
        &self.blocks
    }

    /// Block at the 1-based vertex `v`.
    pub fn block(&self, v: usize) -> &RatMatrix {
        &self.blocks[v - 1]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &RepMorphism) -> RepMorphism {
        debug_assert_eq!(self.target.dims(), g.source.dims());
        let blocks = g.blocks.iter().zip(&self.blocks).map(|(b, a)| b * a).collect();
        RepMorphism {
            source: self.source.clone(),
            target: g.target.clone(),
            blocks,
        }
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a + b).collect();
        RepMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn scale(&self, s: &Rat) -> RepMorphism {
        RepMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// `sum_k coeffs[k] * maps[k]`; all maps must share source and target.
    pub fn combination(source: &Representation, target: &Representation, maps: &[RepMorphism], coeffs: &[Rat]) -> RepMorphism {
        let mut acc = RepMorphism::zero(source, target);
        for (m, c) in maps.iter().zip(coeffs) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(RatMatrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(RatMatrix::is_injective)
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(RatMatrix::is_surjective)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.is_square() && b.rank() == b.rows())
    }

    /// Coordinates in `k^{sum d_t(v) d_s(v)}`, blocks in vertex order,
    /// row-major.
    pub fn to_vector(&self) -> Vec<Rat> {
        self.blocks.iter().flat_map(|b| b.entries().to_vec()).collect()
    }

    /// The kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, RepMorphism) {
        let bases: Vec<RatMatrix> = self.blocks.iter().map(RatMatrix::kernel_matrix).collect();
        subrepresentation(&self.source, bases)
    }

    /// The cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Representation, RepMorphism) {
        let q = self.target.quiver();
        let (projs, sections): (Vec<RatMatrix>, Vec<RatMatrix>) =
            self.blocks.iter().map(RatMatrix::cokernel_projection).unzip();
        let dims: Vec<usize> = projs.iter().map(RatMatrix::rows).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| &(&projs[t - 1] * self.target.map(a)) * &sections[s - 1])
            .collect();
        let coker = Representation::new_unchecked(q.clone(), dims, maps);
        let proj = RepMorphism::new_unchecked(self.target.clone(), coker.clone(), projs);
        (coker, proj)
    }

    /// The image as a subrepresentation of the target.
    pub fn image(&self) -> (Representation, RepMorphism) {
        let bases = self
            .blocks
            .iter()
            .map(|b| RatMatrix::from_columns(b.rows(), &b.column_space_basis()))
            .collect();
        subrepresentation(&self.target, bases)
    }
}

/// The subrepresentation spanned, at each vertex, by the columns of
/// `bases[v]` (assumed independent and stable under the arrow maps),
/// together with its inclusion.
pub(crate) fn subrepresentation(x: &Representation, bases: Vec<RatMatrix>) -> (Representation, RepMorphism) {
    let q = x.quiver();
    let lefts: Vec<RatMatrix> = bases
        .iter()
        .map(|b| b.left_inverse().expect("independent basis columns"))
        .collect();
    let dims: Vec<usize> = bases.iter().map(RatMatrix::cols).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| &(&lefts[t - 1] * x.map(a)) * &bases[s - 1])
        .collect();
    let sub = Representation::new_unchecked(q.clone(), dims, maps);
    let incl = RepMorphism::new_unchecked(sub.clone(), x.clone(), bases);
    (sub, incl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Quiver;

    fn a2_identity() -> Representation {
        Representation::new(Quiver::linear(2), vec![1, 1], vec![RatMatrix::identity(1)]).unwrap()
    }

    #[test]
    fn commuting_check() {
        let x = a2_identity();
        let s2 = Representation::with_zero_maps(x.quiver(), vec![0, 1]);
        // x -> S_2 projecting at vertex 2 does not commute
        let bad = RepMorphism::new(x.clone(), s2.clone(), vec![RatMatrix::zeros(0, 1), RatMatrix::identity(1)]);
        assert_eq!(bad, Err(RepError::NotCommuting(0)));
        // S_2 -> x including at vertex 2 does
        let inc = RepMorphism::new(s2, x, vec![RatMatrix::zeros(1, 0), RatMatrix::identity(1)]).unwrap();
        assert!(inc.is_injective());
        let (c, p) = inc.cokernel();
        assert_eq!(c.dims(), &[1, 0]);
        assert!(p.is_surjective());
        let (k, i) = p.kernel();
        assert_eq!(k.dims(), &[0, 1]);
        assert!(i.is_injective());
    }
}
