use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rat;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Output of [`RatMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: RatMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> RatMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; `cols` is needed for the zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> RatMatrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        RatMatrix { rows: n, cols, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> RatMatrix {
        RatMatrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rat>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Rows stacked: `self` on top of `other`.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Columns side by side: `self` then `other`.
    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows);
        RatMatrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    /// Block-diagonal matrix.
    pub fn block_diag(blocks: &[RatMatrix]) -> RatMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = RatMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RatMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> RatMatrix {
        RatMatrix::from_fn(rows.len(), cols.len(), |r, c| {
            self[(rows.start + r, cols.start + c)].clone()
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> RatMatrix {
        RatMatrix::from_fn(idx.len(), self.cols, |r, c| self[(idx[r], c)].clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> RatMatrix {
        RatMatrix::from_fn(self.rows, idx.len(), |r, c| self[(r, idx[c])].clone())
    }

    /// Reduced row echelon form. The first nonzero entry in column order is
    /// used as pivot, so the result is deterministic.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Echelon {
            matrix: m,
            pivots,
            rank,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(src) = (pr..rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(pr, src);
            let inv = self[(pr, c)].recip();
            if !inv.is_one() {
                for k in c..cols {
                    let v = &self.data[pr * cols + k] * &inv;
                    self.data[pr * cols + k] = v;
                }
            }
            for r in 0..rows {
                if r == pr || self[(r, c)].is_zero() {
                    continue;
                }
                let factor = self[(r, c)].clone();
                for k in c..cols {
                    let p = &self.data[pr * cols + k];
                    if p.is_zero() {
                        continue;
                    }
                    let v = &self.data[r * cols + k] - &(&factor * p);
                    self.data[r * cols + k] = v;
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (i, &p) in e.pivots.iter().enumerate() {
                    v[p] = -&e.matrix[(i, f)];
                }
                v
            })
            .collect()
    }

    /// Kernel basis packed as the columns of a matrix.
    pub fn kernel_matrix(&self) -> RatMatrix {
        RatMatrix::from_columns(self.cols, &self.kernel_basis())
    }

    /// A particular solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let aug = self.hstack(&RatMatrix::from_columns(self.rows, &[b.to_vec()]));
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &p) in e.pivots.iter().enumerate() {
            x[p] = e.matrix[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Solves `self * X = rhs` column by column; `None` if any column is inconsistent.
    pub fn solve_matrix(&self, rhs: &RatMatrix) -> Option<RatMatrix> {
        assert_eq!(rhs.rows, self.rows);
        let aug = self.hstack(rhs);
        let e = aug.rref();
        if e.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = RatMatrix::zeros(self.cols, rhs.cols);
        for (i, &p) in e.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(p, c)] = e.matrix[(i, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_matrix(&RatMatrix::identity(self.rows))?;
        (self.rank() == self.rows).then_some(x)
    }

    pub fn determinant(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(src) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
                return Rat::zero();
            };
            if src != c {
                m.swap_rows(c, src);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            let inv = piv.recip();
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = &m[(r, c)] * &inv;
                for k in c..n {
                    let v = &m[(r, k)] - &(&f * &m[(c, k)]);
                    m[(r, k)] = v;
                }
            }
        }
        det
    }

    pub fn trace(&self) -> Rat {
        let mut t = Rat::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Basis of the column space chosen among the pivot columns.
    pub fn column_space_basis(&self) -> Vec<Vec<Rat>> {
        let e = self.rref();
        e.pivots.iter().map(|&p| self.column(p)).collect()
    }

    /// Projection `B/Im(self) <- B` as a matrix, together with a section.
    ///
    /// The quotient basis consists of the standard vectors not reached by the
    /// pivots of `[self | I]`.
    pub fn cokernel_projection(&self) -> (RatMatrix, RatMatrix) {
        let n = self.rows;
        let aug = self.hstack(&RatMatrix::identity(n));
        let e = aug.rref();
        let image_cols: Vec<usize> = e.pivots.iter().copied().filter(|&p| p < self.cols).collect();
        let complement: Vec<usize> = e
            .pivots
            .iter()
            .copied()
            .filter(|&p| p >= self.cols)
            .map(|p| p - self.cols)
            .collect();
        let r = image_cols.len();
        // Basis matrix [image | complement] is invertible; quotient coordinates
        // are the trailing rows of its inverse.
        let mut basis = self.select_columns(&image_cols);
        let section = RatMatrix::identity(n).select_columns(&complement);
        basis = basis.hstack(&section);
        let inv = basis.inverse().expect("basis of the ambient space");
        let proj = inv.submatrix(r..n, 0..n);
        (proj, section)
    }

    /// Left inverse of a matrix with independent columns.
    pub fn left_inverse(&self) -> Option<RatMatrix> {
        let e = self.rref();
        if e.rank != self.cols {
            return None;
        }
        // Choose `cols` independent rows of self, invert that square block.
        let et = self.transpose().rref();
        let rows_sel = et.pivots;
        let sq = self.select_rows(&rows_sel);
        let inv = sq.inverse()?;
        let mut li = RatMatrix::zeros(self.cols, self.rows);
        for (j, &r) in rows_sel.iter().enumerate() {
            for i in 0..self.cols {
                li[(i, r)] = inv[(i, j)].clone();
            }
        }
        Some(li)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<'a> Mul<&'a RatMatrix> for &'a RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out[(r, c)] + &(a * b);
                    out[(r, c)] = v;
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a RatMatrix> for &'a RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a RatMatrix> for &'a RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Neg for &'a RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows)
    }

    #[test]
    fn rref_identity() {
        let e = RatMatrix::identity(2).rref();
        assert_eq!(e.matrix, RatMatrix::identity(2));
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rank, 2);
    }

    #[test]
    fn rref_zero() {
        let z = RatMatrix::zeros(3, 3);
        let e = z.rref();
        assert_eq!(e.matrix, z);
        assert!(e.pivots.is_empty());
        assert_eq!(e.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let e = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(e.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(e.pivots, vec![0]);
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(RatMatrix::zeros(2, 3).kernel_basis().len(), 3);
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(&k[0][0] + &k[0][1], Rat::zero());
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = vec![Rat::from_int(3), Rat::new(-1, 2)];
        assert_eq!(RatMatrix::identity(2).solve(&b).unwrap(), Some(b.clone()));

        let a = m(&[&[1, 1]]);
        let x = a.solve(&[Rat::from_int(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], Rat::from_int(2));

        let a = m(&[&[1], &[1]]);
        assert_eq!(a.solve(&[Rat::zero(), Rat::one()]).unwrap(), None);
        assert!(a.solve(&[Rat::zero()]).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant(), Rat::one());
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn cokernel_projection_kills_image() {
        let a = m(&[&[1], &[1], &[0]]);
        let (p, s) = a.cokernel_projection();
        assert_eq!(p.rows(), 2);
        assert!((&p * &a).is_zero());
        assert_eq!(&p * &s, RatMatrix::identity(2));
    }

    #[test]
    fn left_inverse_of_injective() {
        let a = m(&[&[1, 0], &[2, 1], &[0, 3]]);
        let li = a.left_inverse().unwrap();
        assert_eq!(&li * &a, RatMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).left_inverse().is_none());
    }
}
