//! BGP reflection functors and the Coxeter functors built from them.
//!
//! `reflect_source` at a source `i` replaces `X_i` by the cokernel of
//! `X_i -> ⊕_{i -> j} X_j`; `reflect_sink` at a sink replaces it by the
//! kernel of `⊕_{j -> i} X_j -> X_i`. Both return the representation over
//! the quiver with the arrows at `i` reversed, so callers always know which
//! orientation a module lives on.

use thiserror::Error;

use crate::coxeter::{simple_reflection, CoxeterError, Quiver};
use crate::exactlin::RatMatrix;
use crate::rep::{RepError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("vertex {0} is not a source")]
    NotSource(usize),
    #[error("vertex {0} is not a sink")]
    NotSink(usize),
    #[error("representation lives over a different quiver")]
    QuiverMismatch,
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Clone, Debug)]
pub struct ReflectionResult {
    /// The input quiver with every arrow at the reflected vertex reversed.
    pub quiver_after: Quiver,
    pub rep_after: Representation,
    /// A summand isomorphic to the simple at the reflected vertex was
    /// annihilated, detected as a dimension vector differing from the
    /// reflected one.
    pub killed: bool,
}

fn check(q: &Quiver, i: usize, x: &Representation) -> Result<(), FunctorError> {
    q.check_vertex(i)?;
    if x.quiver() != q {
        return Err(FunctorError::QuiverMismatch);
    }
    Ok(())
}

/// Reflection at a source `i` of `q`.
pub fn reflect_source(q: &Quiver, i: usize, x: &Representation) -> Result<ReflectionResult, FunctorError> {
    check(q, i, x)?;
    if !q.is_source(i) {
        return Err(FunctorError::NotSource(i));
    }
    Ok(source_reflection(q, i, x))
}

/// Reflection at a sink `i` of `q`.
pub fn reflect_sink(q: &Quiver, i: usize, x: &Representation) -> Result<ReflectionResult, FunctorError> {
    check(q, i, x)?;
    if !q.is_sink(i) {
        return Err(FunctorError::NotSink(i));
    }
    Ok(sink_reflection(q, i, x))
}

/// Source reflection where `i` only needs to be a source of the full
/// subquiver on the support of `x` (plus `i`): arrows into `i` must start at
/// vertices where `x` vanishes.
pub(crate) fn reflect_source_on_support(q: &Quiver, i: usize, x: &Representation) -> Result<ReflectionResult, FunctorError> {
    check(q, i, x)?;
    if q.incoming(i).any(|(_, s)| x.dim(s) > 0) {
        return Err(FunctorError::NotSource(i));
    }
    Ok(source_reflection(q, i, x))
}

/// Dual of [`reflect_source_on_support`].
pub(crate) fn reflect_sink_on_support(q: &Quiver, i: usize, x: &Representation) -> Result<ReflectionResult, FunctorError> {
    check(q, i, x)?;
    if q.outgoing(i).any(|(_, t)| x.dim(t) > 0) {
        return Err(FunctorError::NotSink(i));
    }
    Ok(sink_reflection(q, i, x))
}

fn killed(q: &Quiver, i: usize, x: &Representation, y: &Representation) -> bool {
    let expected = simple_reflection(q, i, &x.dim_vector()).expect("checked vertex");
    expected != y.dim_vector()
}

fn source_reflection(q: &Quiver, i: usize, x: &Representation) -> ReflectionResult {
    let out: Vec<(usize, usize)> = q.outgoing(i).collect();
    let di = x.dim(i);
    let mut stacked = RatMatrix::zeros(0, di);
    let mut offsets = Vec::with_capacity(out.len());
    for &(a, _) in &out {
        offsets.push(stacked.rows());
        stacked = stacked.vstack(x.map(a));
    }
    let (proj, _) = stacked.cokernel_projection();
    let new_q = q.mutate_at(i);
    let mut dims = x.dims().to_vec();
    dims[i - 1] = proj.rows();
    let maps = new_q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            if let Some(k) = out.iter().position(|&(b, _)| b == a) {
                // formerly i -> j, now j -> i
                let dj = x.dim(s);
                proj.submatrix(0..proj.rows(), offsets[k]..offsets[k] + dj)
            } else if s == i {
                // formerly into i from a vertex where x vanishes
                RatMatrix::zeros(dims[t - 1], dims[i - 1])
            } else {
                x.map(a).clone()
            }
        })
        .collect();
    let y = Representation::new(new_q.clone(), dims, maps).expect("reflected shapes");
    ReflectionResult {
        killed: killed(q, i, x, &y),
        quiver_after: new_q,
        rep_after: y,
    }
}

fn sink_reflection(q: &Quiver, i: usize, x: &Representation) -> ReflectionResult {
    let inc: Vec<(usize, usize)> = q.incoming(i).collect();
    let di = x.dim(i);
    let mut joined = RatMatrix::zeros(di, 0);
    let mut offsets = Vec::with_capacity(inc.len());
    for &(a, _) in &inc {
        offsets.push(joined.cols());
        joined = joined.hstack(x.map(a));
    }
    let kernel = joined.kernel_matrix();
    let new_q = q.mutate_at(i);
    let mut dims = x.dims().to_vec();
    dims[i - 1] = kernel.cols();
    let maps = new_q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            if let Some(k) = inc.iter().position(|&(b, _)| b == a) {
                // formerly j -> i, now i -> j
                let dj = x.dim(t);
                kernel.submatrix(offsets[k]..offsets[k] + dj, 0..kernel.cols())
            } else if t == i {
                RatMatrix::zeros(dims[i - 1], dims[s - 1])
            } else {
                x.map(a).clone()
            }
        })
        .collect();
    let y = Representation::new(new_q.clone(), dims, maps).expect("reflected shapes");
    ReflectionResult {
        killed: killed(q, i, x, &y),
        quiver_after: new_q,
        rep_after: y,
    }
}

/// The Coxeter functor `C^-`: source reflections along the admissible order
/// of `q` (sources first, smaller vertex first among incomparable ones).
/// Agrees with `τ^-` on modules without injective summands and kills
/// injectives.
pub fn coxeter_minus(q: &Quiver, x: &Representation) -> Result<Representation, FunctorError> {
    if x.quiver() != q {
        return Err(FunctorError::QuiverMismatch);
    }
    let order = q.topological_order().expect("acyclic");
    let (mut cur_q, mut cur) = (q.clone(), x.clone());
    for u in order {
        let r = reflect_source(&cur_q, u, &cur)?;
        cur_q = r.quiver_after;
        cur = r.rep_after;
    }
    debug_assert_eq!(&cur_q, q);
    Ok(cur)
}

/// The Coxeter functor `C^+` (sink reflections, sinks first); agrees with
/// `τ` on modules without projective summands.
pub fn coxeter_plus(q: &Quiver, x: &Representation) -> Result<Representation, FunctorError> {
    if x.quiver() != q {
        return Err(FunctorError::QuiverMismatch);
    }
    let order = q.topological_order().expect("acyclic");
    let (mut cur_q, mut cur) = (q.clone(), x.clone());
    for &u in order.iter().rev() {
        let r = reflect_sink(&cur_q, u, &cur)?;
        cur_q = r.quiver_after;
        cur = r.rep_after;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::RootVector;
    use crate::rep::{injective, is_isomorphic, projective, simple};

    fn qa() -> Quiver {
        Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn source_reflection_of_simple_two() {
        // over the opposite of the triangle mutated at 1, vertex 1 is a source
        let g = qa().mutate_at(1).opposite();
        assert!(g.is_source(1));
        let r = reflect_source(&g, 1, &simple(&g, 2).unwrap()).unwrap();
        assert_eq!(r.rep_after.dims(), &[1, 1, 0]);
        assert_eq!(r.quiver_after, qa().opposite());
        assert!(!r.killed);
        let k = reflect_source(&g, 1, &simple(&g, 1).unwrap()).unwrap();
        assert!(k.killed);
        assert!(k.rep_after.is_zero());
        assert_eq!(reflect_source(&g, 2, &simple(&g, 2).unwrap()).unwrap_err(), FunctorError::NotSource(2));
    }

    #[test]
    fn two_step_reflection() {
        // R_1^- R_2^- (S_3): dims (2,1,1)
        let q = qa();
        let g2 = q.mutate_at(1).mutate_at(2).opposite();
        let r2 = reflect_source(&g2, 2, &simple(&g2, 3).unwrap()).unwrap();
        let r1 = reflect_source(&r2.quiver_after, 1, &r2.rep_after).unwrap();
        assert_eq!(r1.rep_after.dims(), &[2, 1, 1]);
        assert_eq!(r1.quiver_after, q.opposite());
    }

    #[test]
    fn sink_reflection_of_projective() {
        let q = Quiver::linear(2);
        let r = reflect_sink(&q, 2, &projective(&q, 1).unwrap()).unwrap();
        assert_eq!(r.rep_after.dims(), &[1, 0]);
        assert_eq!(r.quiver_after.arrows(), &[(2, 1)]);
        assert!(reflect_sink(&q, 2, &simple(&q, 2).unwrap()).unwrap().killed);
    }

    #[test]
    fn sink_undoes_source() {
        let g = qa().opposite();
        // vertex 3 is a source of the opposite triangle
        let x = injective(&g, 1).unwrap();
        let there = reflect_source(&g, 3, &x).unwrap();
        let back = reflect_sink(&there.quiver_after, 3, &there.rep_after).unwrap();
        assert_eq!(back.quiver_after, g);
        assert!(is_isomorphic(&back.rep_after, &x).unwrap());
    }

    #[test]
    fn coxeter_functor_on_triangle() {
        let q = qa();
        let p1 = projective(&q, 1).unwrap();
        let y = coxeter_minus(&q, &p1).unwrap();
        let mut v = p1.dim_vector();
        for i in [1, 2, 3] {
            v = simple_reflection(&q, i, &v).unwrap();
        }
        assert_eq!(y.dim_vector(), v);
        for i in 1..=3 {
            assert!(coxeter_minus(&q, &injective(&q, i).unwrap()).unwrap().is_zero());
            assert!(coxeter_plus(&q, &projective(&q, i).unwrap()).unwrap().is_zero());
        }
        let back = coxeter_plus(&q, &y).unwrap();
        assert!(is_isomorphic(&back, &p1).unwrap());
    }

    #[test]
    fn tau_minus_on_a2() {
        let q = Quiver::linear(2);
        let y = coxeter_minus(&q, &simple(&q, 2).unwrap()).unwrap();
        assert_eq!(y.dim_vector(), RootVector::unit(2, 1));
    }
}
