use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Rat;

/// A sparse row: `(column, value)` pairs with strictly increasing columns and
/// no zero values.
pub type SparseRow = Vec<(usize, Rat)>;

/// Incremental Gaussian elimination over sparse rows.
///
/// Rows are reduced against the pivots found so far as they are inserted, so
/// memory stays proportional to the rank. The kernel basis matches
/// [`RatMatrix::kernel_basis`](super::RatMatrix::kernel_basis): one vector
/// per free column, with that coordinate 1 and the other free ones 0.
#[derive(Clone, Debug)]
pub struct SparseEliminator {
    cols: usize,
    // pivot column -> normalized row whose leading entry is that column
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEliminator {
    pub fn new(cols: usize) -> SparseEliminator {
        SparseEliminator {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` and keeps it if it is independent of the previous rows.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        loop {
            let Some(&(lead, ref lv)) = row.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let factor = lv.clone();
                    row = axpy(&row, &factor, p);
                }
                None => {
                    let inv = lv.recip();
                    if !inv.is_one() {
                        for (_, v) in row.iter_mut() {
                            *v = &*v * &inv;
                        }
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rat::zero(); self.cols];
                x[f] = Rat::one();
                // pivots in decreasing column order; each row only involves
                // columns at or after its pivot
                for (&p, row) in self.pivots.iter().rev() {
                    let mut acc = Rat::zero();
                    for (c, v) in row.iter().skip(1) {
                        if !x[*c].is_zero() {
                            acc += &(v * &x[*c]);
                        }
                    }
                    x[p] = -acc;
                }
                x
            })
            .collect()
    }
}

/// `a - factor * b` for sparse rows.
fn axpy(a: &SparseRow, factor: &Rat, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(factor * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(factor * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::RatMatrix;

    fn to_sparse(m: &RatMatrix) -> Vec<SparseRow> {
        (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn matches_dense_kernel() {
        let m = RatMatrix::from_i64_rows(&[&[0, 1, 2, 0, 3], &[1, 1, 0, 0, 1], &[1, 2, 2, 0, 4], &[0, 0, 0, 5, 0]]);
        let mut e = SparseEliminator::new(5);
        for row in to_sparse(&m) {
            e.insert(row);
        }
        assert_eq!(e.rank(), m.rank());
        assert_eq!(e.kernel_basis(), m.kernel_basis());
    }

    #[test]
    fn empty_system() {
        let e = SparseEliminator::new(2);
        assert_eq!(e.kernel_basis().len(), 2);
        assert!(!SparseEliminator::new(0).clone().insert(Vec::new()));
    }
}
