use super::triple::{validate, Triple};
use super::{ChainError, ChainResult, ChainStatus};
use crate::coxeter::{Quiver, Word};
use crate::functors::{reflect_sink_on_support, reflect_source_on_support};
use crate::rep::{
    injective, minimal_left_approximation, minimal_right_approximation, projective, simple, Representation,
};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    /// Projectives, source reflections, cokernels of left approximations.
    Left,
    /// Injectives, sink reflections, kernels of right approximations.
    Right,
}

fn validate_co(q: &Quiver, c: &Word, w: &Word) -> Result<Triple, ChainError> {
    // c is admissible for q exactly when its reverse is admissible for the
    // opposite quiver, and both quivers share the Coxeter group.
    validate(&q.opposite(), &c.reversed(), w)
}

fn finish(modules: Vec<Representation>, mono_flags: Vec<Option<bool>>, status: ChainStatus) -> ChainResult {
    let failed = status == ChainStatus::ReducedSortable && mono_flags.iter().any(|f| *f == Some(false));
    ChainResult {
        dim_vectors: modules.iter().map(Representation::dim_vector).collect(),
        modules,
        mono_flags,
        status: if failed { ChainStatus::Failed } else { status },
    }
}

/// `X^j = R_{u_1} ... R_{u_{j-1}} (S_{u_j})`, each reflection taken on the
/// quiver obtained from `q` by mutating at the letters before it.
fn reflection_chain(q: &Quiver, letters: &[usize], dir: Dir) -> Result<Vec<Representation>, ChainError> {
    let mut quivers = vec![q.clone()];
    for &u in letters {
        let next = quivers.last().expect("nonempty").mutate_at(u);
        quivers.push(next);
    }
    let mut out = Vec::with_capacity(letters.len());
    for (j, &u) in letters.iter().enumerate() {
        let mut x = simple(&quivers[j].opposite(), u)?;
        for k in (0..j).rev() {
            let here = quivers[k + 1].opposite();
            if x.is_zero() {
                x = Representation::zero(&quivers[k].opposite());
                continue;
            }
            let r = match dir {
                Dir::Left => reflect_source_on_support(&here, letters[k], &x)?,
                Dir::Right => reflect_sink_on_support(&here, letters[k], &x)?,
            };
            x = r.rep_after;
        }
        out.push(x);
    }
    Ok(out)
}

fn approximation_chain(q: &Quiver, triple: &Triple, dir: Dir) -> Result<ChainResult, ChainError> {
    let gamma = q.opposite();
    let (sub, _) = gamma.restrict(&triple.support());
    let l0 = triple.first_block_len();
    let mut modules: Vec<Representation> = Vec::with_capacity(triple.letters.len());
    let mut flags = Vec::with_capacity(triple.letters.len());
    for (j, &u) in triple.letters.iter().enumerate() {
        if j < l0 {
            let base = match dir {
                Dir::Left => projective(&sub, u)?,
                Dir::Right => injective(&sub, u)?,
            };
            modules.push(base.transport(&gamma).expect("supported on the restriction"));
            flags.push(None);
            continue;
        }
        let k = triple
            .previous_occurrence(j)
            .expect("nested blocks repeat letters of the first block");
        let others: Vec<Representation> = modules[k + 1..j].iter().filter(|m| !m.is_zero()).cloned().collect();
        let (next, ok) = match dir {
            Dir::Left => {
                let a = minimal_left_approximation(&modules[k], &others)?;
                (a.cokernel, a.mono)
            }
            Dir::Right => {
                let a = minimal_right_approximation(&modules[k], &others)?;
                (a.kernel, a.epi)
            }
        };
        modules.push(next);
        flags.push(Some(ok));
    }
    Ok(finish(modules, flags, triple.status))
}

/// Modules `U^j` built by iterated source reflections from simples.
pub fn u_chain(q: &Quiver, c: &Word, w: &Word) -> Result<ChainResult, ChainError> {
    let triple = validate(q, c, w)?;
    let modules = reflection_chain(q, &triple.letters, Dir::Left)?;
    let flags = vec![None; modules.len()];
    Ok(finish(modules, flags, triple.status))
}

/// Modules `T^j`: projectives over the support for the first block, then
/// cokernels of minimal left approximations of the previous occurrence.
pub fn t_chain(q: &Quiver, c: &Word, w: &Word) -> Result<ChainResult, ChainError> {
    let triple = validate(q, c, w)?;
    approximation_chain(q, &triple, Dir::Left)
}

/// The chain members at the last occurrence of each letter, in chain order.
pub fn t_w(q: &Quiver, c: &Word, w: &Word) -> Result<Vec<Representation>, ChainError> {
    let triple = validate(q, c, w)?;
    if triple.status != ChainStatus::ReducedSortable {
        return Err(ChainError::NotReduced);
    }
    let chain = approximation_chain(q, &triple, Dir::Left)?;
    Ok(triple
        .last_occurrences()
        .into_iter()
        .map(|j| chain.modules[j].clone())
        .collect())
}

/// Dual chain `T_j` for a word listed in processing order `u_1 u_2 ...`,
/// i.e. for the element `s_{u_l} ... s_{u_1}`: injectives over the support,
/// then kernels of minimal right approximations. The word must split into
/// blocks that are subwords of `c` reversed, with nested supports.
pub fn co_t_chain(q: &Quiver, c: &Word, w: &Word) -> Result<ChainResult, ChainError> {
    let triple = validate_co(q, c, w)?;
    approximation_chain(q, &triple, Dir::Right)
}

/// Dual of [`u_chain`]: iterated sink reflections, same word convention as
/// [`co_t_chain`].
pub fn co_u_chain(q: &Quiver, c: &Word, w: &Word) -> Result<ChainResult, ChainError> {
    let triple = validate_co(q, c, w)?;
    let modules = reflection_chain(q, &triple.letters, Dir::Right)?;
    let flags = vec![None; modules.len()];
    Ok(finish(modules, flags, triple.status))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{layer_roots, RootVector};
    use crate::rep::is_isomorphic;

    fn qa() -> Quiver {
        Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word::from(v)
    }

    fn dims(r: &ChainResult) -> Vec<Vec<i64>> {
        r.dim_vectors.iter().map(|v| v.coords().to_vec()).collect()
    }

    const EXPECTED: [[i64; 3]; 6] = [[1, 0, 0], [1, 1, 0], [2, 1, 1], [2, 2, 1], [3, 2, 2], [1, 0, 1]];

    #[test]
    fn u_chain_on_triangle() {
        let r = u_chain(&qa(), &w(&[1, 2, 3]), &w(&[1, 2, 3, 1, 2, 1])).unwrap();
        assert_eq!(dims(&r), EXPECTED.map(|v| v.to_vec()).to_vec());
        assert_eq!(r.status, ChainStatus::ReducedSortable);
        assert!(r.modules.iter().all(|m| m.quiver() == &qa().opposite()));
    }

    #[test]
    fn t_chain_on_triangle() {
        let c = w(&[1, 2, 3]);
        let word = w(&[1, 2, 3, 1, 2, 1]);
        let t = t_chain(&qa(), &c, &word).unwrap();
        assert_eq!(dims(&t), EXPECTED.map(|v| v.to_vec()).to_vec());
        assert_eq!(t.mono_flags, vec![None, None, None, Some(true), Some(true), Some(true)]);
        let u = u_chain(&qa(), &c, &word).unwrap();
        for (a, b) in t.modules.iter().zip(&u.modules) {
            assert!(is_isomorphic(a, b).unwrap());
        }
        let tw = t_w(&qa(), &c, &word).unwrap();
        let d: Vec<_> = tw.iter().map(|m| m.dims().to_vec()).collect();
        assert_eq!(d, vec![vec![2, 1, 1], vec![3, 2, 2], vec![1, 0, 1]]);
    }

    #[test]
    fn coxeter_word_gives_projectives() {
        let c = w(&[1, 2, 3]);
        let g = qa().opposite();
        for r in [u_chain(&qa(), &c, &c).unwrap(), t_chain(&qa(), &c, &c).unwrap()] {
            for (i, m) in r.modules.iter().enumerate() {
                assert!(is_isomorphic(m, &projective(&g, i + 1).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn restricted_support() {
        // w = 2 3 2 on the triangle: support {2, 3}
        let (c, word) = (w(&[1, 2, 3]), w(&[2, 3, 2]));
        let t = t_chain(&qa(), &c, &word).unwrap();
        let u = u_chain(&qa(), &c, &word).unwrap();
        let roots: Vec<RootVector> = layer_roots(&qa(), &word).unwrap();
        assert_eq!(t.dim_vectors, roots);
        assert_eq!(u.dim_vectors, roots);
        for (a, b) in t.modules.iter().zip(&u.modules) {
            assert!(is_isomorphic(a, b).unwrap());
        }
    }

    #[test]
    fn co_chains_are_dual() {
        let q = qa();
        let c = w(&[1, 2, 3]);
        let v = w(&[3, 2, 1, 3, 2, 3]);
        let co = co_t_chain(&q, &c, &v).unwrap();
        let co_u = co_u_chain(&q, &c, &v).unwrap();
        let plain = t_chain(&q.opposite(), &c.reversed(), &v).unwrap();
        assert!(co.mono_flags.iter().flatten().all(|&f| f));
        for ((a, b), p) in co.modules.iter().zip(&co_u.modules).zip(&plain.modules) {
            assert!(is_isomorphic(a, b).unwrap());
            assert!(is_isomorphic(a, &p.dual()).unwrap());
        }
        let inj = co_t_chain(&q, &c, &c.reversed()).unwrap();
        for (i, m) in inj.modules.iter().enumerate() {
            let u = c.reversed().letters()[i];
            assert!(is_isomorphic(m, &injective(&q.opposite(), u).unwrap()).unwrap());
        }
    }

    #[test]
    fn nonreduced_tail_may_vanish() {
        let q = Quiver::linear(2);
        let t = t_chain(&q, &w(&[1, 2]), &w(&[1, 2, 1, 2])).unwrap();
        assert_eq!(t.status, ChainStatus::SortableShapeNonreduced);
        assert!(t.modules[3].is_zero());
        let u = u_chain(&q, &w(&[1, 2]), &w(&[1, 2, 1, 2])).unwrap();
        assert!(u.modules[3].is_zero());
        assert!(t_w(&q, &w(&[1, 2]), &w(&[1, 2, 1, 2])).is_err());
    }
}
