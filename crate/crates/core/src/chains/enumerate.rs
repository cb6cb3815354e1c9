use log::debug;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::count::indecomposables;
use super::recover::search;
use super::ChainError;
use crate::coxeter::{positive_real_roots, Quiver, RootVector, Word};
use crate::exactlin::{Rat, RatMatrix};
use crate::rep::{hom_dim, in_fac_closure, in_sub_closure, Representation};

/// Indecomposables of `Sub(T)` (or `Fac(T)`) found within a bound.
#[derive(Clone, Debug)]
pub struct SubcatReport {
    /// Ordered by total dimension, then dimension vector.
    pub modules: Vec<Representation>,
    /// Every indecomposable of the subcategory is listed.
    pub complete: bool,
    /// Not known to be complete, and members occur in the upper half of the
    /// dimension range, so the family is still growing at the bound.
    pub growth_detected: bool,
    /// A sortable word whose chain is exactly `modules`, proving
    /// completeness beyond Dynkin type.
    pub certificate: Option<Word>,
}

fn support(t: &[Representation]) -> Vec<usize> {
    let n = t.first().map_or(0, |x| x.quiver().vertex_count());
    (1..=n).filter(|&v| t.iter().any(|x| x.dim(v) > 0)).collect()
}

/// A representation with random small integer maps; kept if it is a brick,
/// which for a real root means it is the exceptional module.
fn exceptional(gamma: &Quiver, d: &RootVector) -> Result<Option<Representation>, ChainError> {
    let dims: Vec<usize> = d.coords().iter().map(|&x| x as usize).collect();
    let seed = d.coords().iter().fold(0x5eed_u64, |h, &x| h.wrapping_mul(1_000_003).wrapping_add(x as u64));
    for attempt in 0..4u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ attempt);
        let range = 2 + 3 * attempt as i64;
        let maps = gamma
            .arrows()
            .iter()
            .map(|&(s, t)| {
                RatMatrix::from_fn(dims[t - 1], dims[s - 1], |_, _| Rat::from_int(rng.gen_range(-range..=range)))
            })
            .collect();
        let x = Representation::new(gamma.clone(), dims.clone(), maps)?;
        if hom_dim(&x, &x)? == 1 {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Members of `Sub(T)` (`Fac(T)` if `fac`) up to total dimension `bound`,
/// and whether the candidate list was exhaustive, i.e. the support of `T`
/// is of Dynkin type and nothing was cut off by the bound.
pub(crate) fn sub_members(
    gamma: &Quiver,
    t: &[Representation],
    bound: usize,
    fac: bool,
) -> Result<(Vec<Representation>, bool), ChainError> {
    let needed = t.iter().map(Representation::total_dim).max().unwrap_or(0);
    if bound < needed {
        return Err(ChainError::BoundTooSmall { bound, needed });
    }
    let supp = support(t);
    if supp.is_empty() {
        return Ok((Vec::new(), true));
    }
    let m = Representation::direct_sum_all(gamma, t)?;
    let inside = |x: &Representation| -> Result<bool, ChainError> {
        Ok(if fac { in_fac_closure(x, &m)? } else { in_sub_closure(x, &m)? })
    };
    let (restricted, _) = gamma.restrict(&supp);
    let mut out = Vec::new();
    let mut exhaustive = true;
    if restricted.is_dynkin() {
        for x in indecomposables(&restricted)? {
            if x.dim_vector().support().iter().any(|v| !supp.contains(v)) {
                continue;
            }
            let x = x.transport(gamma).expect("supported on the restriction");
            if inside(&x)? {
                if x.total_dim() <= bound {
                    out.push(x);
                } else {
                    exhaustive = false;
                }
            }
        }
    } else {
        exhaustive = false;
        for d in positive_real_roots(gamma, bound as i64) {
            if d.support().iter().any(|v| !supp.contains(v)) {
                continue;
            }
            match exceptional(gamma, &d)? {
                Some(x) => {
                    if inside(&x)? {
                        out.push(x);
                    }
                }
                None => debug!("no brick found for root {d}"),
            }
        }
    }
    out.sort_by(|a, b| (a.total_dim(), a.dims()).cmp(&(b.total_dim(), b.dims())));
    Ok((out, exhaustive))
}

fn report(modules: Vec<Representation>, complete: bool, certificate: Option<Word>, bound: usize) -> SubcatReport {
    let growth_detected = !complete && modules.iter().any(|m| 2 * m.total_dim() > bound);
    SubcatReport {
        modules,
        complete,
        growth_detected,
        certificate,
    }
}

fn check_quiver(q: &Quiver, t: &[Representation]) -> Result<(), ChainError> {
    let gamma = q.opposite();
    if t.iter().any(|x| x.quiver() != &gamma) {
        return Err(ChainError::WrongQuiver);
    }
    Ok(())
}

/// Indecomposables in `Sub(⊕T)` of total dimension at most `bound`.
///
/// Complete when the support of `T` is of Dynkin type; otherwise candidates
/// are the exceptional modules of positive real roots, and completeness is
/// certified by finding a sortable word (for the source-first Coxeter
/// element of `q`) whose chain consists of exactly the modules found.
pub fn sub_enumerate(q: &Quiver, t: &[Representation], bound: usize) -> Result<SubcatReport, ChainError> {
    check_quiver(q, t)?;
    let (modules, exhaustive) = sub_members(&q.opposite(), t, bound, false)?;
    if exhaustive {
        return Ok(report(modules, true, None, bound));
    }
    let c = Word::new(q.topological_order().expect("acyclic"));
    let certificate = search(q, &c, &modules, t)?;
    let complete = certificate.is_some();
    Ok(report(modules, complete, certificate, bound))
}

/// Indecomposables in `Fac(⊕T)` of total dimension at most `bound`; the
/// certificate is a word for the opposite quiver, in the processing order
/// used by [`co_t_chain`](super::co_t_chain).
pub fn fac_enumerate(q: &Quiver, t: &[Representation], bound: usize) -> Result<SubcatReport, ChainError> {
    check_quiver(q, t)?;
    let (modules, exhaustive) = sub_members(&q.opposite(), t, bound, true)?;
    if exhaustive {
        return Ok(report(modules, true, None, bound));
    }
    // D takes Fac(T) to Sub(DT) over the opposite quiver
    let qo = q.opposite();
    let c = Word::new(qo.topological_order().expect("acyclic"));
    let duals: Vec<Representation> = modules.iter().map(Representation::dual).collect();
    let t_duals: Vec<Representation> = t.iter().map(Representation::dual).collect();
    let certificate = search(&qo, &c, &duals, &t_duals)?;
    let complete = certificate.is_some();
    Ok(report(modules, complete, certificate, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{co_t_chain, t_w};
    use crate::rep::{injective, is_isomorphic, projective};

    fn qa() -> Quiver {
        Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn triangle_example_is_certified() {
        let q = qa();
        let c = Word::new(vec![1, 2, 3]);
        let w = Word::new(vec![1, 2, 3, 1, 2, 1]);
        let t = t_w(&q, &c, &w).unwrap();
        let r = sub_enumerate(&q, &t, 10).unwrap();
        let dims: Vec<_> = r.modules.iter().map(|m| m.dims().to_vec()).collect();
        assert_eq!(
            dims,
            vec![vec![1, 0, 0], vec![1, 0, 1], vec![1, 1, 0], vec![2, 1, 1], vec![2, 2, 1], vec![3, 2, 2]]
        );
        assert!(r.complete);
        assert!(!r.growth_detected);
        assert_eq!(r.certificate, Some(w));
    }

    #[test]
    fn a2_projectives() {
        let q = Quiver::linear(2);
        let g = q.opposite();
        let p: Vec<_> = (1..=2).map(|i| projective(&g, i).unwrap()).collect();
        let r = sub_enumerate(&q, &p, 4).unwrap();
        assert!(r.complete);
        assert_eq!(r.modules.len(), 2);
        let inj: Vec<_> = (1..=2).map(|i| injective(&g, i).unwrap()).collect();
        let f = fac_enumerate(&q, &inj, 4).unwrap();
        assert_eq!(f.modules.len(), 2);
    }

    #[test]
    fn fac_of_co_chain() {
        let q = qa();
        let c = Word::new(vec![1, 2, 3]);
        let v = Word::new(vec![3, 2, 1, 3, 2, 3]);
        let chain = co_t_chain(&q, &c, &v).unwrap();
        let last: Vec<Representation> = crate::chains::triple::last_occurrences(v.letters())
            .into_iter()
            .map(|j| chain.modules[j].clone())
            .collect();
        let r = fac_enumerate(&q, &last, 10).unwrap();
        assert!(r.complete);
        assert_eq!(r.modules.len(), chain.modules.len());
        for m in &chain.modules {
            assert!(r.modules.iter().any(|x| is_isomorphic(x, m).unwrap()));
        }
    }

    #[test]
    fn bound_must_cover_t() {
        let q = qa();
        let p = vec![projective(&q.opposite(), 3).unwrap()];
        assert_eq!(
            sub_enumerate(&q, &p, 2).unwrap_err(),
            ChainError::BoundTooSmall { bound: 2, needed: 4 }
        );
    }
}
