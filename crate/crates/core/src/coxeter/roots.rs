use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use super::{CoxeterError, Quiver, Word};

/// An integer vector in the basis of simple roots; dimension vectors of
/// representations live here too.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> RootVector {
        RootVector(coords)
    }

    pub fn zero(n: usize) -> RootVector {
        RootVector(vec![0; n])
    }

    /// The simple root `e_i` (1-based `i`).
    pub fn unit(n: usize, i: usize) -> RootVector {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate at the 1-based vertex `i`.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Vertices (1-based) with nonzero coordinate.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.0.len()).filter(|&i| self.0[i - 1] != 0).collect()
    }

    fn check_len(&self, q: &Quiver) -> Result<(), CoxeterError> {
        if self.0.len() != q.vertex_count() {
            return Err(CoxeterError::LengthMismatch {
                expected: q.vertex_count(),
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<i64>> for RootVector {
    fn from(v: Vec<i64>) -> RootVector {
        RootVector(v)
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for RootVector {
    type Err = CoxeterError;

    /// Accepts `(1,0,2)`, `1,0,2` or `1 0 2`.
    fn from_str(s: &str) -> Result<RootVector, CoxeterError> {
        s.trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>().map_err(|_| CoxeterError::Parse {
                    line: 1,
                    message: format!("bad coordinate `{t}`"),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(RootVector)
    }
}

/// `R_i`: replaces `v_i` by `-v_i + sum_{j != i} m_ij v_j`.
pub fn simple_reflection(q: &Quiver, i: usize, v: &RootVector) -> Result<RootVector, CoxeterError> {
    q.check_vertex(i)?;
    v.check_len(q)?;
    let m = q.edge_table();
    Ok(reflect_with(&m, i, v))
}

pub(crate) fn reflect_with(m: &[Vec<i64>], i: usize, v: &RootVector) -> RootVector {
    let mut out = v.0.clone();
    let row = &m[i - 1];
    out[i - 1] = -v.0[i - 1] + row.iter().zip(&v.0).map(|(a, b)| a * b).sum::<i64>();
    RootVector(out)
}

/// The reflection `s_i` in the contragradient of the geometric
/// representation, written in the dual basis: `e_i*` goes to
/// `-e_i* + sum_{t != i} m_ti e_t*` and the other basis vectors are fixed.
pub fn contragradient_reflection(
    q: &Quiver,
    i: usize,
    v: &RootVector,
) -> Result<RootVector, CoxeterError> {
    q.check_vertex(i)?;
    v.check_len(q)?;
    let m = q.edge_table();
    let vi = v.0[i - 1];
    let out = (0..v.len())
        .map(|t| if t == i - 1 { -vi } else { v.0[t] + m[t][i - 1] * vi })
        .collect();
    Ok(RootVector(out))
}

/// Columns of `R_{u_1} ... R_{u_{j-1}}`, updated letter by letter.
#[derive(Clone)]
pub(crate) struct ReflectionProduct<'a> {
    m: &'a [Vec<i64>],
    cols: Vec<RootVector>,
}

impl<'a> ReflectionProduct<'a> {
    pub(crate) fn new(m: &'a [Vec<i64>]) -> Self {
        let n = m.len();
        ReflectionProduct {
            m,
            cols: (1..=n).map(|i| RootVector::unit(n, i)).collect(),
        }
    }

    /// The image of `e_i` under the current product.
    pub(crate) fn image_of_simple(&self, i: usize) -> &RootVector {
        &self.cols[i - 1]
    }

    /// Right multiplication by `R_i`.
    pub(crate) fn push(&mut self, i: usize) {
        let ci = self.cols[i - 1].clone();
        for j in 0..self.cols.len() {
            let mij = self.m[i - 1][j];
            if j == i - 1 {
                self.cols[j] = RootVector(ci.0.iter().map(|x| -x).collect());
            } else if mij != 0 {
                let col = &mut self.cols[j].0;
                for (a, b) in col.iter_mut().zip(&ci.0) {
                    *a += mij * b;
                }
            }
        }
    }
}

fn partial_roots(q: &Quiver, w: &Word) -> Result<Vec<RootVector>, CoxeterError> {
    w.validate(q)?;
    let m = q.edge_table();
    let mut prod = ReflectionProduct::new(&m);
    let mut out = Vec::with_capacity(w.len());
    for &u in w.letters() {
        out.push(prod.image_of_simple(u).clone());
        prod.push(u);
    }
    Ok(out)
}

/// Whether `w` is a reduced expression: every partial root
/// `R_{u_1} ... R_{u_{j-1}}(e_{u_j})` is nonnegative.
pub fn is_reduced(q: &Quiver, w: &Word) -> bool {
    match partial_roots(q, w) {
        Ok(roots) => roots.iter().all(RootVector::is_nonnegative),
        Err(_) => false,
    }
}

/// Dimension vectors of the layers of a reduced word.
pub fn layer_roots(q: &Quiver, w: &Word) -> Result<Vec<RootVector>, CoxeterError> {
    let roots = partial_roots(q, w)?;
    if !roots.iter().all(RootVector::is_nonnegative) {
        return Err(CoxeterError::NotReduced);
    }
    Ok(roots)
}

/// All positive real roots with coordinate sum at most `max_total`, ordered
/// by (total, coordinates).
pub fn positive_real_roots(q: &Quiver, max_total: i64) -> Vec<RootVector> {
    let n = q.vertex_count();
    let m = q.edge_table();
    let mut seen: BTreeSet<(i64, RootVector)> = BTreeSet::new();
    let mut frontier: Vec<RootVector> = (1..=n).map(|i| RootVector::unit(n, i)).collect();
    if max_total < 1 {
        return Vec::new();
    }
    for r in &frontier {
        seen.insert((1, r.clone()));
    }
    while let Some(r) = frontier.pop() {
        let h = r.total();
        for i in 1..=n {
            let s = reflect_with(&m, i, &r);
            let hs = s.total();
            if hs > h && hs <= max_total && seen.insert((hs, s.clone())) {
                frontier.push(s);
            }
        }
    }
    seen.into_iter().map(|(_, r)| r).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qa() -> Quiver {
        Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    fn rv(v: &[i64]) -> RootVector {
        RootVector::new(v.to_vec())
    }

    #[test]
    fn reflection_examples() {
        let q = qa();
        assert_eq!(simple_reflection(&q, 1, &rv(&[1, 0, 0])).unwrap(), rv(&[-1, 0, 0]));
        assert_eq!(simple_reflection(&q, 1, &rv(&[0, 1, 0])).unwrap(), rv(&[1, 1, 0]));
        assert!(simple_reflection(&q, 4, &rv(&[0, 1, 0])).is_err());
        assert_eq!(
            contragradient_reflection(&q, 1, &rv(&[0, 1, 0])).unwrap(),
            rv(&[0, 1, 0])
        );
        assert_eq!(
            contragradient_reflection(&q, 1, &rv(&[1, 0, 0])).unwrap(),
            rv(&[-1, 1, 1])
        );
    }

    #[test]
    fn reducedness() {
        let q = qa();
        assert!(!is_reduced(&q, &Word::new(vec![1, 1])));
        assert!(is_reduced(&q, &Word::new(vec![1, 2, 3, 1, 2, 1])));
        let qc = Quiver::new(4, vec![(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert!(!is_reduced(&qc, &Word::new(vec![1, 2, 3, 4, 3, 1, 4])));
        assert!(is_reduced(&q, &Word::empty()));
    }

    #[test]
    fn layers_of_triangle_words() {
        let q = qa();
        let l = layer_roots(&q, &Word::new(vec![1, 2, 3, 1, 2, 1])).unwrap();
        let expect: Vec<RootVector> = [
            [1, 0, 0],
            [1, 1, 0],
            [2, 1, 1],
            [2, 2, 1],
            [3, 2, 2],
            [1, 0, 1],
        ]
        .iter()
        .map(|v| rv(v))
        .collect();
        assert_eq!(l, expect);
        let l = layer_roots(&q, &Word::new(vec![1, 2, 3, 2, 1, 3])).unwrap();
        assert_eq!(l[4], rv(&[3, 2, 2]));
        assert_eq!(l[5], rv(&[2, 1, 2]));
        assert_eq!(layer_roots(&q, &Word::new(vec![2])).unwrap(), vec![rv(&[0, 1, 0])]);
        assert_eq!(
            layer_roots(&q, &Word::new(vec![2, 2])),
            Err(CoxeterError::NotReduced)
        );
    }

    #[test]
    fn real_roots_of_a3() {
        let roots = positive_real_roots(&Quiver::linear(3), 10);
        assert_eq!(roots.len(), 6);
        assert_eq!(roots.last().unwrap(), &rv(&[1, 1, 1]));
        // Kronecker: (n, n+1) and (n+1, n)
        let k = Quiver::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert_eq!(positive_real_roots(&k, 7).len(), 8);
    }

    #[test]
    fn root_vector_parse() {
        assert_eq!("(1,0,2)".parse::<RootVector>().unwrap(), rv(&[1, 0, 2]));
        assert_eq!("1 0 2".parse::<RootVector>().unwrap(), rv(&[1, 0, 2]));
        assert_eq!(rv(&[1, 0, 2]).to_string(), "(1,0,2)");
    }
}
