use num_traits::One;

use super::{RepError, Representation};
use crate::coxeter::Quiver;
use crate::exactlin::{Rat, RatMatrix};

/// The simple representation at vertex `i`.
pub fn simple(q: &Quiver, i: usize) -> Result<Representation, RepError> {
    q.check_vertex(i)?;
    let mut dims = vec![0; q.vertex_count()];
    dims[i - 1] = 1;
    Ok(Representation::with_zero_maps(q, dims))
}

/// The indecomposable projective at `i`: the space at `j` has the paths
/// `i ⇝ j` as basis (lexicographic by vertex sequence) and arrows act by
/// appending.
pub fn projective(q: &Quiver, i: usize) -> Result<Representation, RepError> {
    q.check_vertex(i)?;
    let bases: Vec<Vec<Vec<usize>>> = q.vertices().map(|j| q.paths(i, j)).collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let mut m = RatMatrix::zeros(dims[t - 1], dims[s - 1]);
            for (col, p) in bases[s - 1].iter().enumerate() {
                let mut ext = p.clone();
                ext.push(a);
                let row = bases[t - 1].iter().position(|r| *r == ext).expect("extended path");
                m[(row, col)] = Rat::one();
            }
            m
        })
        .collect();
    Ok(Representation::new_unchecked(q.clone(), dims, maps))
}

/// The indecomposable injective at `i`: the space at `j` is dual to the
/// paths `j ⇝ i`, and an arrow `a: s -> t` sends the functional `δ_p` to
/// `δ_r` when `p = a r`.
pub fn injective(q: &Quiver, i: usize) -> Result<Representation, RepError> {
    q.check_vertex(i)?;
    let bases: Vec<Vec<Vec<usize>>> = q.vertices().map(|j| q.paths(j, i)).collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let mut m = RatMatrix::zeros(dims[t - 1], dims[s - 1]);
            for (col, p) in bases[s - 1].iter().enumerate() {
                if p.first() == Some(&a) {
                    let rest = p[1..].to_vec();
                    let row = bases[t - 1].iter().position(|r| *r == rest).expect("shortened path");
                    m[(row, col)] = Rat::one();
                }
            }
            m
        })
        .collect();
    Ok(Representation::new_unchecked(q.clone(), dims, maps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qa() -> Quiver {
        Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn projective_dims() {
        assert_eq!(projective(&Quiver::linear(2), 1).unwrap().dims(), &[1, 1]);
        let p1 = projective(&qa(), 1).unwrap();
        assert_eq!(p1.dims(), &[1, 1, 2]);
        assert_eq!(projective(&qa(), 3).unwrap(), simple(&qa(), 3).unwrap());
        // 1->3 directly and 1->2->3 give independent vectors at 3
        let via2 = &*p1.map(1) * p1.map(0);
        let direct = p1.map(2).clone();
        assert_eq!(via2.hstack(&direct).rank(), 2);
    }

    #[test]
    fn injective_dims() {
        assert_eq!(injective(&Quiver::linear(2), 2).unwrap().dims(), &[1, 1]);
        assert_eq!(injective(&qa(), 1).unwrap(), simple(&qa(), 1).unwrap());
        let i3 = injective(&qa(), 3).unwrap();
        assert_eq!(i3.dims(), &[2, 1, 1]);
        // dual of the projective of the opposite quiver
        assert_eq!(
            i3.dual().dims(),
            projective(&qa().opposite(), 3).unwrap().dims()
        );
    }
}
