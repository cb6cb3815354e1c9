use super::roots::{reflect_with, RootVector};
use super::{CoxeterError, Quiver, Word};

/// An element of the Coxeter group of a quiver, kept as a reduced word
/// together with the matrices of `w` and `w^{-1}` on the root lattice.
#[derive(Clone, Debug)]
pub struct GroupElement {
    m: Vec<Vec<i64>>,
    word: Vec<usize>,
    // columns of w and of w^{-1}
    fwd: Vec<RootVector>,
    inv: Vec<RootVector>,
}

impl GroupElement {
    pub fn identity(q: &Quiver) -> GroupElement {
        let n = q.vertex_count();
        let cols: Vec<RootVector> = (1..=n).map(|i| RootVector::unit(n, i)).collect();
        GroupElement {
            m: q.edge_table(),
            word: Vec::new(),
            fwd: cols.clone(),
            inv: cols,
        }
    }

    /// The element represented by `w` (not necessarily reduced).
    pub fn from_word(q: &Quiver, w: &Word) -> Result<GroupElement, CoxeterError> {
        w.validate(q)?;
        let mut g = GroupElement::identity(q);
        for &u in w.letters() {
            g.mul_right(u);
        }
        Ok(g)
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn reduced_word(&self) -> Word {
        Word::new(self.word.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `w(e_i)`.
    pub fn apply_to_simple(&self, i: usize) -> &RootVector {
        &self.fwd[i - 1]
    }

    pub fn apply(&self, v: &RootVector) -> RootVector {
        let n = self.fwd.len();
        let mut out = RootVector::zero(n);
        for (k, &c) in v.coords().iter().enumerate() {
            if c != 0 {
                let col = &self.fwd[k];
                out = &out + &RootVector::new(col.coords().iter().map(|x| x * c).collect());
            }
        }
        out
    }

    /// `l(w s_i) < l(w)`, i.e. `w(e_i)` is negative.
    pub fn is_right_descent(&self, i: usize) -> bool {
        !self.fwd[i - 1].is_nonnegative()
    }

    /// `l(s_i w) < l(w)`, i.e. `w^{-1}(e_i)` is negative.
    pub fn is_left_descent(&self, i: usize) -> bool {
        !self.inv[i - 1].is_nonnegative()
    }

    /// Replaces `w` by `w s_i`, keeping the stored word reduced.
    pub fn mul_right(&mut self, i: usize) {
        if self.is_right_descent(i) {
            // exchange condition: w s_i is w with one letter deleted
            let mut v = RootVector::unit(self.fwd.len(), i);
            let mut del = None;
            for j in (0..self.word.len()).rev() {
                let r = self.word[j];
                if v == RootVector::unit(self.fwd.len(), r) {
                    del = Some(j);
                    break;
                }
                v = reflect_with(&self.m, r, &v);
            }
            let j = del.expect("exchange condition");
            self.word.remove(j);
        } else {
            self.word.push(i);
        }
        self.fwd = right_times_reflection(&self.m, &self.fwd, i);
        self.inv = left_times_reflection(&self.m, &self.inv, i);
    }

    /// Replaces `w` by `s_i w`.
    pub fn mul_left(&mut self, i: usize) {
        if self.is_left_descent(i) {
            let mut v = RootVector::unit(self.fwd.len(), i);
            let mut del = None;
            for j in 0..self.word.len() {
                let r = self.word[j];
                if v == RootVector::unit(self.fwd.len(), r) {
                    del = Some(j);
                    break;
                }
                v = reflect_with(&self.m, r, &v);
            }
            let j = del.expect("exchange condition");
            self.word.remove(j);
        } else {
            self.word.insert(0, i);
        }
        self.fwd = left_times_reflection(&self.m, &self.fwd, i);
        self.inv = right_times_reflection(&self.m, &self.inv, i);
    }

    /// A hashable key identifying the element.
    pub fn key(&self) -> Vec<i64> {
        self.fwd.iter().flat_map(|c| c.coords().to_vec()).collect()
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &GroupElement) -> bool {
        self.fwd == other.fwd
    }
}

impl Eq for GroupElement {}

/// Columns of `A R_i`.
fn right_times_reflection(m: &[Vec<i64>], cols: &[RootVector], i: usize) -> Vec<RootVector> {
    let ci = cols[i - 1].clone();
    cols.iter()
        .enumerate()
        .map(|(j, c)| {
            if j == i - 1 {
                RootVector::new(ci.coords().iter().map(|x| -x).collect())
            } else {
                let mij = m[i - 1][j];
                RootVector::new(c.coords().iter().zip(ci.coords()).map(|(a, b)| a + mij * b).collect())
            }
        })
        .collect()
}

/// Columns of `R_i A`.
fn left_times_reflection(m: &[Vec<i64>], cols: &[RootVector], i: usize) -> Vec<RootVector> {
    cols.iter().map(|c| reflect_with(m, i, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qa() -> Quiver {
        Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn reduces_by_exchange() {
        let q = Quiver::linear(2);
        let g = GroupElement::from_word(&q, &Word::new(vec![1, 2, 1, 2])).unwrap();
        // s1 s2 s1 s2 = s2 s1 in A2
        assert_eq!(g.length(), 2);
        let h = GroupElement::from_word(&q, &Word::new(vec![2, 1])).unwrap();
        assert_eq!(g, h);
        let e = GroupElement::from_word(&q, &Word::new(vec![1, 2, 1, 2, 1, 2])).unwrap();
        assert!(e.is_identity());
    }

    #[test]
    fn descents() {
        let q = qa();
        let g = GroupElement::from_word(&q, &Word::new(vec![1, 2])).unwrap();
        assert!(g.is_left_descent(1));
        assert!(!g.is_left_descent(2));
        assert!(g.is_right_descent(2));
        assert!(!g.is_right_descent(1));
        let mut h = g.clone();
        h.mul_left(1);
        assert_eq!(h.reduced_word(), Word::new(vec![2]));
    }

    #[test]
    fn triangle_word_length() {
        let q = qa();
        let g = GroupElement::from_word(&q, &Word::new(vec![1, 2, 3, 2, 1, 3])).unwrap();
        assert_eq!(g.length(), 6);
        // braid relation holds since m_12 = 1
        let g = GroupElement::from_word(&q, &Word::new(vec![1, 2, 1, 2])).unwrap();
        assert_eq!(g.length(), 2);
    }
}
