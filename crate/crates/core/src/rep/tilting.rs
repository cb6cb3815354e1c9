use super::{decompose, ext1_dim, find_isomorphism, Representation};

/// Why `t` fails to be a basic tilting module over the full subquiver on
/// its support, or `None` if it is one.
pub fn tilting_defect(t: &[Representation]) -> Option<String> {
    let Some(first) = t.first() else {
        return Some("empty list".into());
    };
    if t.iter().any(|x| x.quiver() != first.quiver()) {
        return Some("members live over different quivers".into());
    }
    for (k, x) in t.iter().enumerate() {
        if x.is_zero() {
            return Some(format!("member {} is zero", k + 1));
        }
        let d = decompose(x);
        if !d.is_indecomposable() {
            return Some(format!("member {} {} is decomposable", k + 1, x.dim_vector()));
        }
    }
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if find_isomorphism(&t[i], &t[j]).ok().flatten().is_some() {
                return Some(format!("members {} and {} are isomorphic", i + 1, j + 1));
            }
        }
    }
    for i in 0..t.len() {
        for j in 0..t.len() {
            let e = ext1_dim(&t[i], &t[j]).expect("same quiver");
            if e != 0 {
                return Some(format!("Ext^1(T{}, T{}) has dimension {e}", i + 1, j + 1));
            }
        }
    }
    let n = first.quiver().vertex_count();
    let support = (1..=n).filter(|&v| t.iter().any(|x| x.dim(v) > 0)).count();
    if t.len() != support {
        return Some(format!("{} summands but the support has {support} vertices", t.len()));
    }
    None
}

/// Whether `t` lists the pairwise non-isomorphic indecomposable summands of
/// a rigid module with as many summands as its support has vertices.
pub fn is_tilting(t: &[Representation]) -> bool {
    tilting_defect(t).is_none()
}
