use std::collections::{HashSet, VecDeque};

use log::debug;

use super::ChainError;
use crate::coxeter::{is_admissible_coxeter, sortable_decompose, GroupElement, Quiver, Word};
use crate::functors::coxeter_minus;
use crate::rep::{hom_dim, in_sub_closure, projective, reject, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BijectionCount {
    pub sortable_count: usize,
    pub torsionfree_count: usize,
    pub matches: bool,
}

/// All indecomposable representations of a Dynkin quiver, as the
/// `C^-`-orbits of the projectives, ordered by total dimension and then
/// dimension vector.
pub fn indecomposables(q: &Quiver) -> Result<Vec<Representation>, ChainError> {
    if !q.is_dynkin() {
        return Err(ChainError::NotDynkin);
    }
    let mut out = Vec::new();
    for i in q.vertices() {
        let mut x = projective(q, i)?;
        while !x.is_zero() {
            let next = coxeter_minus(q, &x)?;
            out.push(x);
            x = next;
        }
    }
    out.sort_by(|a, b| (a.total_dim(), a.dims()).cmp(&(b.total_dim(), b.dims())));
    Ok(out)
}

fn count_sortable(q: &Quiver, c: &Word) -> Result<usize, ChainError> {
    let start = GroupElement::identity(q);
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.key()]);
    let mut queue = VecDeque::from([start]);
    let mut count = 0;
    while let Some(e) = queue.pop_front() {
        if sortable_decompose(q, c, &e.reduced_word())?.is_some() {
            count += 1;
        }
        for i in q.vertices() {
            if e.is_right_descent(i) {
                continue;
            }
            let mut f = e.clone();
            f.mul_right(i);
            if seen.insert(f.key()) {
                queue.push_back(f);
            }
        }
    }
    debug!("{} group elements, {count} sortable", seen.len());
    Ok(count)
}

/// A subset `F` of indecomposables spans a torsionfree class iff no
/// indecomposable `Y` outside it has its `F`-reject in `Sub(F)`.
fn count_torsionfree(gamma: &Quiver) -> Result<usize, ChainError> {
    let inds = indecomposables(gamma)?;
    let n = inds.len();
    let homs: Vec<Vec<usize>> = inds
        .iter()
        .map(|x| inds.iter().map(|y| hom_dim(x, y)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let mut count = 0;
    for mask in 0u64..(1u64 << n) {
        let members: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        let parts: Vec<Representation> = members.iter().map(|&k| inds[k].clone()).collect();
        let m = Representation::direct_sum_all(gamma, &parts)?;
        let mut closed = true;
        for y in (0..n).filter(|k| mask >> k & 1 == 0) {
            if members.iter().all(|&f| homs[y][f] == 0) {
                // the reject is Y itself, which has no nonzero map to F
                continue;
            }
            let k = reject(&inds[y], &m)?;
            if k.is_zero() || in_sub_closure(&k, &m)? {
                closed = false;
                break;
            }
        }
        if closed {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts c-sortable elements of the Weyl group and torsionfree classes of
/// the module category; the two agree for Dynkin quivers.
pub fn count_bijection(q: &Quiver, c: &Word) -> Result<BijectionCount, ChainError> {
    if !q.is_dynkin() {
        return Err(ChainError::NotDynkin);
    }
    if !is_admissible_coxeter(q, c) {
        return Err(ChainError::NotAdmissible(format!("`{c}` is not an admissible Coxeter element")));
    }
    let sortable_count = count_sortable(q, c)?;
    let torsionfree_count = count_torsionfree(&q.opposite())?;
    Ok(BijectionCount {
        sortable_count,
        torsionfree_count,
        matches: sortable_count == torsionfree_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indecomposables_of_a3() {
        let inds = indecomposables(&Quiver::linear(3)).unwrap();
        assert_eq!(inds.len(), 6);
        assert_eq!(inds.last().unwrap().dims(), &[1, 1, 1]);
        let d4 = Quiver::new(4, vec![(1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(indecomposables(&d4).unwrap().len(), 12);
        let kr = Quiver::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert_eq!(indecomposables(&kr).unwrap_err(), ChainError::NotDynkin);
    }

    #[test]
    fn small_counts() {
        let cases = [(1, vec![1], 2), (2, vec![1, 2], 5), (3, vec![1, 2, 3], 14)];
        for (n, c, expected) in cases {
            let r = count_bijection(&Quiver::linear(n), &Word::new(c)).unwrap();
            assert_eq!(r.sortable_count, expected);
            assert_eq!(r.torsionfree_count, expected);
            assert!(r.matches);
        }
    }
}
