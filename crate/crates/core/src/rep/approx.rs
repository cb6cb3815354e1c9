use log::warn;

use super::decompose::{decompose, find_isomorphism, local_data};
use super::{hom_basis, RepError, RepMorphism, Representation};
use crate::exactlin::{Rat, RatMatrix, SparseEliminator, SparseRow};

/// Output of [`minimal_left_approximation`].
#[derive(Clone, Debug)]
pub struct LeftApproximation {
    /// `f: X -> B`.
    pub map: RepMorphism,
    pub target: Representation,
    pub mono: bool,
    pub cokernel: Representation,
}

/// Output of [`minimal_right_approximation`].
#[derive(Clone, Debug)]
pub struct RightApproximation {
    /// `g: B -> X`.
    pub map: RepMorphism,
    pub source: Representation,
    pub epi: bool,
    pub kernel: Representation,
}

/// The pairwise non-isomorphic indecomposable summands of `t`, each with a
/// basis of the radical of its endomorphism ring.
struct Basic {
    parts: Vec<Representation>,
    radicals: Vec<Vec<RepMorphism>>,
}

fn basic_summands(t: &[Representation]) -> Basic {
    let mut parts: Vec<Representation> = Vec::new();
    for m in t {
        for (s, _) in decompose(m).summands {
            let dup = parts
                .iter()
                .any(|p| find_isomorphism(p, &s).ok().flatten().is_some());
            if !dup {
                parts.push(s);
            }
        }
    }
    let radicals = parts.iter().map(radical_basis).collect();
    Basic { parts, radicals }
}

fn radical_basis(x: &Representation) -> Vec<RepMorphism> {
    let (basis, rad) = local_data(x);
    if rad == 0 {
        return Vec::new();
    }
    if basis.len() - rad != 1 {
        warn!("summand {:?} has End/rad of dimension {}", x, basis.len() - rad);
    }
    let e = basis.len();
    let g = RatMatrix::from_fn(e, e, |i, j| {
        basis[j]
            .then(&basis[i])
            .blocks()
            .iter()
            .fold(Rat::from_int(0), |acc, b| &acc + &b.trace())
    });
    g.kernel_basis()
        .iter()
        .map(|c| RepMorphism::combination(x, x, &basis, c))
        .collect()
}

fn sparse(v: Vec<Rat>) -> SparseRow {
    v.into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// Members of `candidates` extending a basis of `span(sub)` to one of
/// `span(sub ∪ candidates)`, chosen greedily in order.
fn complement(width: usize, sub: Vec<Vec<Rat>>, candidates: &[RepMorphism]) -> Vec<RepMorphism> {
    let mut elim = SparseEliminator::new(width);
    for v in sub {
        elim.insert(sparse(v));
    }
    candidates
        .iter()
        .filter(|h| elim.insert(sparse(h.to_vector())))
        .cloned()
        .collect()
}

/// Minimal left `add(T)`-approximation `f: X -> B`.
///
/// For each indecomposable summand `T_i` of `T`, the multiplicity of `T_i`
/// in `B` is the dimension of `Hom(X, T_i)` modulo the maps factoring
/// through a radical map `T_j -> T_i`; the components of `f` are a basis of
/// a complement of that subspace.
pub fn minimal_left_approximation(x: &Representation, t: &[Representation]) -> Result<LeftApproximation, RepError> {
    for m in t {
        x.same_quiver(m)?;
    }
    let basic = basic_summands(t);
    let homs: Vec<Vec<RepMorphism>> = basic
        .parts
        .iter()
        .map(|p| hom_basis(x, p))
        .collect::<Result<_, _>>()?;
    let q = x.quiver();
    let mut target = Representation::zero(q);
    let mut rows: Vec<RatMatrix> = x.dims().iter().map(|&d| RatMatrix::zeros(0, d)).collect();
    for (i, ti) in basic.parts.iter().enumerate() {
        let mut factoring = Vec::new();
        for (j, tj) in basic.parts.iter().enumerate() {
            let rad: Vec<RepMorphism> = if i == j {
                basic.radicals[i].clone()
            } else {
                hom_basis(tj, ti)?
            };
            for r in &rad {
                for phi in &homs[j] {
                    factoring.push(phi.then(r).to_vector());
                }
            }
        }
        let width: usize = x.dims().iter().zip(ti.dims()).map(|(a, b)| a * b).sum();
        for c in complement(width, factoring, &homs[i]) {
            target = target.direct_sum(ti)?;
            for (v, r) in rows.iter_mut().enumerate() {
                *r = r.vstack(c.block(v + 1));
            }
        }
    }
    let map = RepMorphism::new_unchecked(x.clone(), target.clone(), rows);
    let mono = map.is_injective();
    let (cokernel, _) = map.cokernel();
    Ok(LeftApproximation {
        map,
        target,
        mono,
        cokernel,
    })
}

/// Minimal right `add(T)`-approximation `g: B -> X`, dual to
/// [`minimal_left_approximation`].
pub fn minimal_right_approximation(x: &Representation, t: &[Representation]) -> Result<RightApproximation, RepError> {
    for m in t {
        x.same_quiver(m)?;
    }
    let basic = basic_summands(t);
    let homs: Vec<Vec<RepMorphism>> = basic
        .parts
        .iter()
        .map(|p| hom_basis(p, x))
        .collect::<Result<_, _>>()?;
    let q = x.quiver();
    let mut source = Representation::zero(q);
    let mut cols: Vec<RatMatrix> = x.dims().iter().map(|&d| RatMatrix::zeros(d, 0)).collect();
    for (i, ti) in basic.parts.iter().enumerate() {
        let mut factoring = Vec::new();
        for (j, tj) in basic.parts.iter().enumerate() {
            let rad: Vec<RepMorphism> = if i == j {
                basic.radicals[i].clone()
            } else {
                hom_basis(ti, tj)?
            };
            for r in &rad {
                for phi in &homs[j] {
                    factoring.push(r.then(phi).to_vector());
                }
            }
        }
        let width: usize = x.dims().iter().zip(ti.dims()).map(|(a, b)| a * b).sum();
        for c in complement(width, factoring, &homs[i]) {
            source = source.direct_sum(ti)?;
            for (v, m) in cols.iter_mut().enumerate() {
                *m = m.hstack(c.block(v + 1));
            }
        }
    }
    let map = RepMorphism::new_unchecked(source.clone(), x.clone(), cols);
    let epi = map.is_surjective();
    let (kernel, _) = map.kernel();
    Ok(RightApproximation {
        map,
        source,
        epi,
        kernel,
    })
}
