//! Dense row-major matrices, just large enough for linear policies and the
//! Riccati recursion. Not a general linear-algebra library.

use crate::error::{Error, Result};

/// Dense `rows x cols` matrix of `f64`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Build from row-major data; length must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "Matrix::from_vec",
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        assert!(r >= 1);
        let c = rows[0].len();
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matvec",
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = 0.0;
            for j in 0..self.cols {
                acc += row[j] * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matmul",
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "Matrix::add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "Matrix::sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Matrix,
        context: &'static str,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        Matrix::from_vec(self.rows, self.cols, data)
    }

    /// `self + factor * other`, shapes must match.
    pub fn add_scaled(&mut self, factor: f64, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "Matrix::add_scaled",
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += factor * b;
        }
        Ok(())
    }

    pub fn scale(&self, factor: f64) -> Matrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v *= factor;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        debug_assert_eq!(self.data.len(), other.data.len());
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Solve `self * X = rhs` by Gauss-Jordan elimination with partial
    /// pivoting. `self` must be square.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::invalid(format!(
                "solve requires a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch {
                context: "Matrix::solve",
                expected: self.rows,
                got: rhs.rows,
            });
        }
        let n = self.rows;
        let m = rhs.cols;
        let mut a = self.data.clone();
        let mut b = rhs.data.clone();

        for col in 0..n {
            // Pivot: largest magnitude in this column at or below the diagonal.
            let mut pivot_row = col;
            let mut pivot_val = a[col * n + col].abs();
            for r in (col + 1)..n {
                let v = a[r * n + col].abs();
                if v > pivot_val {
                    pivot_val = v;
                    pivot_row = r;
                }
            }
            if pivot_val < 1e-300 {
                return Err(Error::numerical(format!(
                    "singular matrix in solve (pivot {pivot_val:.3e} at column {col})"
                )));
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                for j in 0..m {
                    b.swap(col * m + j, pivot_row * m + j);
                }
            }
            let inv = 1.0 / a[col * n + col];
            for j in 0..n {
                a[col * n + j] *= inv;
            }
            for j in 0..m {
                b[col * m + j] *= inv;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] -= f * a[col * n + j];
                }
                for j in 0..m {
                    b[r * m + j] -= f * b[col * m + j];
                }
            }
        }
        Matrix::from_vec(n, m, b)
    }
}

/// Dot product of equal-length slices.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_identity() {
        let m = Matrix::identity(3);
        let v = vec![1.0, 2.0, 3.0];
        assert_eq!(m.matvec(&v).unwrap(), v);
    }

    #[test]
    fn matvec_zero_matrix() {
        let m = Matrix::zeros(3, 4);
        let v = vec![1.0, -2.0, 3.5, 7.0];
        assert_eq!(m.matvec(&v).unwrap(), vec![0.0; 3]);
    }

    #[test]
    fn matvec_hand_value() {
        let m = Matrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        assert_eq!(m.matvec(&[1.0, 1.0]).unwrap(), vec![3.0, 7.0]);
    }

    #[test]
    fn matvec_dimension_mismatch() {
        let m = Matrix::zeros(2, 3);
        let err = m.matvec(&[1.0, 2.0]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn from_vec_shape_contract() {
        assert!(Matrix::from_vec(2, 3, vec![0.0; 6]).is_ok());
        assert!(Matrix::from_vec(2, 3, vec![0.0; 5]).is_err());
    }

    #[test]
    fn solve_against_known_inverse() {
        // A = [[4,1],[2,3]], A^{-1} = 1/10 [[3,-1],[-2,4]]
        let a = Matrix::from_rows(&[&[4.0, 1.0], &[2.0, 3.0]]);
        let x = a.solve(&Matrix::identity(2)).unwrap();
        let expect = Matrix::from_rows(&[&[0.3, -0.1], &[-0.2, 0.4]]);
        assert!(x.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn solve_singular_reports_numerical_failure() {
        let a = Matrix::from_rows(&[&[1.0, 2.0], &[2.0, 4.0]]);
        let err = a.solve(&Matrix::identity(2)).unwrap_err();
        assert!(matches!(err, Error::Numerical(_)));
    }

    #[test]
    fn matmul_transpose_consistency() {
        let a = Matrix::from_rows(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]);
        let b = Matrix::from_rows(&[&[7.0, 8.0], &[9.0, 10.0], &[11.0, 12.0]]);
        let ab = a.matmul(&b).unwrap();
        let ba_t = b.transpose().matmul(&a.transpose()).unwrap().transpose();
        assert!(ab.max_abs_diff(&ba_t) < 1e-12);
    }
}
