use super::morphism::subrepresentation;
use super::{RepError, RepMorphism, Representation};
use crate::coxeter::{Quiver, RootVector};
use crate::exactlin::{RatMatrix, SparseEliminator, SparseRow};

/// Offsets of the unknown blocks `phi_v` (shape `dY_v x dX_v`, row-major).
fn block_offsets(x: &Representation, y: &Representation) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(x.dims().len());
    let mut total = 0;
    for (dx, dy) in x.dims().iter().zip(y.dims()) {
        offsets.push(total);
        total += dx * dy;
    }
    (offsets, total)
}

fn hom_system(x: &Representation, y: &Representation) -> SparseEliminator {
    let (off, unknowns) = block_offsets(x, y);
    let mut elim = SparseEliminator::new(unknowns);
    let q = x.quiver();
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let (xa, ya) = (x.map(a), y.map(a));
        let (dxs, dxt) = (x.dim(s), x.dim(t));
        let (dys, dyt) = (y.dim(s), y.dim(t));
        // (phi_t X_a - Y_a phi_s)[r, c] = 0
        for r in 0..dyt {
            for c in 0..dxs {
                let mut row: SparseRow = Vec::new();
                for k in 0..dxt {
                    let v = &xa[(k, c)];
                    if !v.is_zero() {
                        row.push((off[t - 1] + r * dxt + k, v.clone()));
                    }
                }
                for k in 0..dys {
                    let v = &ya[(r, k)];
                    if !v.is_zero() {
                        row.push((off[s - 1] + k * dxs + c, -v));
                    }
                }
                if row.is_empty() {
                    continue;
                }
                row.sort_by_key(|e| e.0);
                let merged = merge_sorted(row);
                elim.insert(merged);
            }
        }
    }
    elim
}

fn merge_sorted(row: SparseRow) -> SparseRow {
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// A basis of `Hom(X, Y)`.
pub fn hom_basis(x: &Representation, y: &Representation) -> Result<Vec<RepMorphism>, RepError> {
    x.same_quiver(y)?;
    let (off, _) = block_offsets(x, y);
    let n = x.quiver().vertex_count();
    let basis = hom_system(x, y).kernel_basis();
    Ok(basis
        .into_iter()
        .map(|vec| {
            let blocks = (0..n)
                .map(|v| {
                    let (dx, dy) = (x.dims()[v], y.dims()[v]);
                    RatMatrix::from_fn(dy, dx, |r, c| vec[off[v] + r * dx + c].clone())
                })
                .collect();
            RepMorphism::new_unchecked(x.clone(), y.clone(), blocks)
        })
        .collect())
}

pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize, RepError> {
    x.same_quiver(y)?;
    let (_, unknowns) = block_offsets(x, y);
    Ok(unknowns - hom_system(x, y).rank())
}

/// `<a, b> = sum_i a_i b_i - sum_{arrows i -> j} a_i b_j`.
pub fn euler_form(q: &Quiver, a: &RootVector, b: &RootVector) -> i64 {
    let diag: i64 = a.coords().iter().zip(b.coords()).map(|(x, y)| x * y).sum();
    let off: i64 = q.arrows().iter().map(|&(i, j)| a.get(i) * b.get(j)).sum();
    diag - off
}

/// `dim Ext^1(X, Y) = dim Hom(X, Y) - <dim X, dim Y>`.
pub fn ext1_dim(x: &Representation, y: &Representation) -> Result<usize, RepError> {
    let h = hom_dim(x, y)? as i64;
    let e = h - euler_form(x.quiver(), &x.dim_vector(), &y.dim_vector());
    assert!(e >= 0, "negative Ext dimension: hom {h}, euler form {}", h - e);
    Ok(e as usize)
}

/// Whether `X` embeds in a finite direct sum of copies of `T`: the map
/// `X -> T^{dim Hom(X,T)}` built from a Hom basis is injective.
pub fn in_sub_closure(x: &Representation, t: &Representation) -> Result<bool, RepError> {
    let basis = hom_basis(x, t)?;
    Ok((1..=x.quiver().vertex_count()).all(|v| {
        let d = x.dim(v);
        if d == 0 {
            return true;
        }
        let stacked = basis
            .iter()
            .fold(RatMatrix::zeros(0, d), |acc, f| acc.vstack(f.block(v)));
        stacked.rank() == d
    }))
}

/// Whether `X` is a quotient of a finite direct sum of copies of `T`.
pub fn in_fac_closure(x: &Representation, t: &Representation) -> Result<bool, RepError> {
    let basis = hom_basis(t, x)?;
    Ok((1..=x.quiver().vertex_count()).all(|v| {
        let d = x.dim(v);
        if d == 0 {
            return true;
        }
        let joined = basis
            .iter()
            .fold(RatMatrix::zeros(d, 0), |acc, f| acc.hstack(f.block(v)));
        joined.rank() == d
    }))
}

/// The reject of `T` in `X`: the intersection of the kernels of all maps
/// `X -> T`. `X` lies in `Sub(T)` exactly when it is zero.
pub fn reject(x: &Representation, t: &Representation) -> Result<Representation, RepError> {
    let basis = hom_basis(x, t)?;
    let bases = (1..=x.quiver().vertex_count())
        .map(|v| {
            let d = x.dim(v);
            let stacked = basis
                .iter()
                .fold(RatMatrix::zeros(0, d), |acc, f| acc.vstack(f.block(v)));
            RatMatrix::from_columns(d, &stacked.kernel_basis())
        })
        .collect();
    Ok(subrepresentation(x, bases).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{projective, simple};

    fn a2() -> Quiver {
        Quiver::linear(2)
    }

    #[test]
    fn hom_examples() {
        let qa = Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        let s1 = simple(&qa, 1).unwrap();
        assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
        let q = a2();
        let (s1, s2, p1) = (simple(&q, 1).unwrap(), simple(&q, 2).unwrap(), projective(&q, 1).unwrap());
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&p1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&s2, &p1).unwrap(), 1);
        for f in hom_basis(&p1, &p1).unwrap() {
            assert!(RepMorphism::new(p1.clone(), p1.clone(), f.blocks().to_vec()).is_ok());
        }
        let other = simple(&Quiver::linear(3), 1).unwrap();
        assert_eq!(hom_basis(&s1, &other), Err(RepError::QuiverMismatch));
    }

    #[test]
    fn euler_and_ext() {
        let q = a2();
        let e1 = RootVector::unit(2, 1);
        let e2 = RootVector::unit(2, 2);
        assert_eq!(euler_form(&q, &e1, &e1), 1);
        assert_eq!(euler_form(&q, &e1, &e2), -1);
        let (s1, s2, p1) = (simple(&q, 1).unwrap(), simple(&q, 2).unwrap(), projective(&q, 1).unwrap());
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 1);
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
        assert_eq!(ext1_dim(&p1, &p1).unwrap(), 0);
    }

    #[test]
    fn closures() {
        let q = a2();
        let (s1, s2) = (simple(&q, 1).unwrap(), simple(&q, 2).unwrap());
        assert!(in_sub_closure(&s2, &s2).unwrap());
        assert!(!in_sub_closure(&s1, &s2).unwrap());
        assert!(!in_fac_closure(&s2, &s1).unwrap());
        let p1 = projective(&q, 1).unwrap();
        assert!(in_fac_closure(&s1, &p1).unwrap());
        assert!(in_sub_closure(&s2, &p1).unwrap());
        assert!(in_sub_closure(&Representation::zero(&q), &s1).unwrap());
    }
}
