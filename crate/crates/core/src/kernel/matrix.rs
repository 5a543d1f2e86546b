use serde::{Deserialize, Serialize};

use super::vector::{self, Vector};
use super::{KernelError, Scalar};

/// Dense row-major matrix. As a linear map, column `k` holds the image of
/// the `k`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, KernelError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(KernelError::Extent("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for tests and examples.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        assert!(
            r < self.rows && c < self.cols,
            "matrix index ({r},{c}) out of range"
        );
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(
            r < self.rows && c < self.cols,
            "matrix index ({r},{c}) out of range"
        );
        self.entries[r * self.cols + c] = v;
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        assert!(
            r < self.rows && c < self.cols,
            "matrix index ({r},{c}) out of range"
        );
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: vector::neg(&self.entries),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: vector::add(&self.entries, &other.entries),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: vector::sub(&self.entries, &other.entries),
        }
    }

    pub fn scale(&self, a: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: vector::scale(a, &self.entries),
        }
    }

    /// `self += a * other`.
    pub fn add_scaled(&mut self, a: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        vector::axpy(&mut self.entries, a, &other.entries);
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product extent mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let orow = &other.entries[k * other.cols..(k + 1) * other.cols];
                vector::axpy(
                    &mut out.entries[r * other.cols..(r + 1) * other.cols],
                    a,
                    orow,
                );
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector extent mismatch");
        let mut out = vector::zeros(self.rows);
        for (k, x) in vector::support(v) {
            for r in 0..self.rows {
                let a = self.get(r, k);
                if !a.is_zero() {
                    out[r] += a * x;
                }
            }
        }
        out
    }

    /// Fraction-free (Bareiss) reduction to row echelon form. Returns the
    /// reduced matrix, pivot columns, and the parity of row swaps.
    fn bareiss(&self) -> (Matrix, Vec<usize>, bool) {
        let mut m = self.clone();
        let mut prev = Scalar::one();
        let mut pivots = Vec::new();
        let mut odd = false;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&p| !m.get(p, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
                odd = !odd;
            }
            let piv = m.get(r, c).clone();
            for i in r + 1..m.rows {
                let lead = m.get(i, c).clone();
                for j in c + 1..m.cols {
                    let v = &(&piv * m.get(i, j)) - &(&lead * m.get(r, j));
                    m.set(i, j, &v / &prev);
                }
                m.set(i, c, Scalar::zero());
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (m, pivots, odd)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    pub fn det(&self) -> Result<Scalar, KernelError> {
        if !self.is_square() {
            return Err(KernelError::Extent(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let (m, pivots, odd) = self.bareiss();
        if pivots.len() < n {
            return Ok(Scalar::zero());
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if odd { -d } else { d })
    }

    /// Basis of `{v : self·v = 0}`; each vector has a 1 in its free
    /// coordinate and zeros in the other free coordinates.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (m, pivots, _) = self.bareiss();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vector::zeros(self.cols);
            x[f] = Scalar::one();
            for (k, &p) in pivots.iter().enumerate().rev() {
                let mut acc = Scalar::zero();
                for j in p + 1..self.cols {
                    if !x[j].is_zero() {
                        acc += m.get(k, j) * &x[j];
                    }
                }
                x[p] = -(&acc / m.get(k, p));
            }
            basis.push(x);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(Matrix::identity(3).nullspace().is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        assert_eq!(Matrix::zeros(2, 2).nullspace().len(), 2);
    }

    #[test]
    fn rank_one_kernel() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        let k = m.nullspace();
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(
            &k[0][0] * &Scalar::from_int(-1),
            &k[0][1] * &Scalar::from_int(2)
        );
        assert!(vector::is_zero(&m.apply(&k[0])));
    }

    #[test]
    fn determinants() {
        let m = Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(m.det().unwrap(), Scalar::from_int(-3));
        let s = Matrix::from_ints(&[&[2, 4], &[1, 2]]);
        assert_eq!(s.det().unwrap(), Scalar::zero());
        let h = Matrix::from_ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(h.det().unwrap(), Scalar::from_int(4));
        assert!(Matrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn skipped_pivot_columns() {
        let m = Matrix::from_ints(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[0, 0, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.nullspace();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(vector::is_zero(&m.apply(v)));
        }
    }
}
