//! Dense exact matrices and 3-index tensors.
//!
//! Linear maps follow the row-vector convention throughout the crate:
//! a map with matrix `M` sends the row vector `v` to `v * M`, so composing
//! maps is plain left-to-right matrix multiplication. Kernels of maps in
//! that convention are *left* kernels of the matrix.

use crate::error::LinalgError;
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Matrix {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: n_rows, cols: n_cols, field, data }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.at(i, j).add(other.at(i, j))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.at(i, j).mul(c))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        Matrix::from_fn(self.field, self.rows, other.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        })
    }

    /// Applies the map to a row vector: returns `v * self`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length does not match map domain");
        (0..self.cols)
            .map(|j| {
                let mut acc = self.field.zero();
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() {
                        acc = acc.add(&vi.mul(self.at(i, j)));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.at(row, col).inverse().expect("nonzero pivot");
            for j in col..m.cols {
                let v = m.at(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for j in col..m.cols {
                        let v = m.at(r, j).sub(&factor.mul(m.at(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Drops all-zero rows; useful after `rref`.
    pub fn without_zero_rows(&self) -> Matrix {
        let rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| self.row(r).to_vec())
            .filter(|row| row.iter().any(|s| !s.is_zero()))
            .collect();
        if rows.is_empty() {
            Matrix::zero(self.field, 0, self.cols)
        } else {
            Matrix::from_rows(self.field, rows)
        }
    }

    /// Right kernel: a basis (as rows) of `{x : self * x^T = 0}`.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = r.at(prow, fc).neg();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Matrix::zero(self.field, 0, self.cols)
        } else {
            Matrix::from_rows(self.field, rows)
        }
    }

    /// Kernel of the row-vector map `v -> v * self`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel()
    }

    /// Solves `self * x^T = b^T` for one particular solution.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "matrix has {} rows but right-hand side has {} entries",
                self.rows,
                b.len()
            )));
        }
        let b_col = Matrix::from_rows(self.field, b.iter().map(|s| vec![s.clone()]).collect());
        let aug = if self.rows == 0 {
            Matrix::zero(self.field, 0, self.cols + 1)
        } else {
            self.hstack(&b_col)
        };
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.at(prow, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let aug = self.hstack(&Matrix::identity(self.field, self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field, self.rows, self.rows, |i, j| {
            r.at(i, self.rows + j).clone()
        }))
    }

    /// Kronecker product. Index convention is lexicographic with the first
    /// factor major: `(A ⊗ B)[iB.rows + k][jB.cols + l] = A[i][j] * B[k][l]`,
    /// matching the basis order of a tensor product `V ⊗ W` used everywhere
    /// in this crate.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (ia, ib) = (i / other.rows, i % other.rows);
                let (ja, jb) = (j / other.cols, j % other.cols);
                self.at(ia, ja).mul(other.at(ib, jb))
            },
        )
    }
}

/// A 3-index structure-constant tensor with independent extents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    d0: usize,
    d1: usize,
    d2: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(field: FieldSpec, d0: usize, d1: usize, d2: usize) -> Tensor3 {
        Tensor3 { d0, d1, d2, field, data: vec![field.zero(); d0 * d1 * d2] }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d0, self.d1, self.d2)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.d1 + j) * self.d2 + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.data[(i * self.d1 + j) * self.d2 + k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.data.iter().enumerate().filter_map(move |(idx, s)| {
            if s.is_zero() {
                None
            } else {
                let k = idx % self.d2;
                let j = (idx / self.d2) % self.d1;
                let i = idx / (self.d1 * self.d2);
                Some((i, j, k, s))
            }
        })
    }

    /// The slice `t[i][.][.]` flattened as a vector of length `d1 * d2`,
    /// i.e. coordinates in the tensor-square basis with the middle index major.
    pub fn slice0(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.d1 * self.d2..(i + 1) * self.d1 * self.d2].to_vec()
    }
}

/// Accumulates `coeff * (left ⊗ right)` into `out` (length `left.len() * right.len()`).
pub fn add_tensor_product(out: &mut [Scalar], left: &[Scalar], right: &[Scalar], coeff: &Scalar) {
    if coeff.is_zero() {
        return;
    }
    let n = right.len();
    for (i, a) in left.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let ca = coeff.mul(a);
        for (j, b) in right.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            out[i * n + j] = out[i * n + j].add(&ca.mul(b));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn mq(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            q(),
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| q().from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn solve_identity_case() {
        let a = mq(vec![vec![1, 0], vec![0, 1]]);
        let x = a.solve(&[q().from_i64(3), q().from_i64(5)]).unwrap().unwrap();
        assert_eq!(x, vec![q().from_i64(3), q().from_i64(5)]);
        assert_eq!(a.kernel().rows(), 0);
    }

    #[test]
    fn solve_with_kernel_over_gf2() {
        let f = FieldSpec::prime_field(2).unwrap();
        let a = Matrix::from_rows(f, vec![vec![f.one(), f.one()]]);
        let x = a.solve(&[f.zero()]).unwrap().unwrap();
        assert_eq!(x, vec![f.zero(), f.zero()]);
        let k = a.kernel();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[f.one(), f.one()][..]);
    }

    #[test]
    fn solve_rank_deficient_rational() {
        // A = [[2,4],[1,2]], b = [2,1]: one solution plus a 1-dim kernel.
        let a = mq(vec![vec![2, 4], vec![1, 2]]);
        let b = vec![q().from_i64(2), q().from_i64(1)];
        let x = a.solve(&b).unwrap().unwrap();
        // check A x = b exactly
        for (i, bi) in b.iter().enumerate() {
            let mut acc = q().zero();
            for (j, xj) in x.iter().enumerate() {
                acc = acc.add(&a.at(i, j).mul(xj));
            }
            assert_eq!(&acc, bi);
        }
        let k = a.kernel();
        assert_eq!(k.rows(), 1);
        // kernel basis in canonical form: pivot column normalized, [-2, 1]
        assert_eq!(k.row(0), &[q().from_i64(-2), q().from_i64(1)][..]);
        // and A * k = 0
        for i in 0..2 {
            let mut acc = q().zero();
            for j in 0..2 {
                acc = acc.add(&a.at(i, j).mul(k.at(0, j)));
            }
            assert!(acc.is_zero());
        }
        // inconsistent right-hand side
        assert!(a.solve(&[q().from_i64(1), q().from_i64(1)]).unwrap().is_none());
        assert!(a.solve(&[q().from_i64(1)]).is_err());
    }

    #[test]
    fn kronecker_small_cases() {
        let i2 = Matrix::identity(q(), 2);
        assert_eq!(i2.kronecker(&i2), Matrix::identity(q(), 4));
        let two = mq(vec![vec![2]]);
        let swap = mq(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(two.kronecker(&swap), mq(vec![vec![0, 2], vec![2, 0]]));
    }

    #[test]
    fn kronecker_matches_action_on_simple_tensors() {
        // (A ⊗ B)(x ⊗ y) = Ax ⊗ By over GF(3), row-vector convention.
        let f = FieldSpec::prime_field(3).unwrap();
        let a = Matrix::from_fn(f, 2, 2, |i, j| f.from_i64((i as i64 + 2 * j as i64) % 3));
        let b = Matrix::from_fn(f, 2, 2, |i, j| f.from_i64((2 * i as i64 + j as i64 + 1) % 3));
        let x = vec![f.from_i64(1), f.from_i64(2)];
        let y = vec![f.from_i64(2), f.from_i64(2)];
        let mut xy = vec![f.zero(); 4];
        add_tensor_product(&mut xy, &x, &y, &f.one());
        let lhs = a.kronecker(&b).apply(&xy);
        let mut rhs = vec![f.zero(); 4];
        add_tensor_product(&mut rhs, &a.apply(&x), &b.apply(&y), &f.one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_round_trip() {
        let m = mq(vec![vec![1, 1], vec![0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        let sing = mq(vec![vec![1, 1], vec![2, 2]]);
        assert!(sing.inverse().is_none());
    }
}
