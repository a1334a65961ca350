use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{gf2, Subspace};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A dense matrix over `F_p`, row-major, entries in `[0, p)`.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixFp {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatrixFp {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    pub fn from_fn(field: PrimeField, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(field.reduce(f(i, j)));
            }
        }
        Self { field, rows, cols, data }
    }

    /// Builds a matrix from rows of equal length; entries are reduced mod p.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Reduces an integer matrix mod p.
    pub fn from_integer_rows(field: PrimeField, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| field.reduce_i64(x)));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = self.field.reduce(v);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &MatrixFp) -> Result<MatrixFp> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = self.field;
        let budget = f.lazy_budget();
        let mut out = MatrixFp::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            let mut pending = 0usize;
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += a * b as u64;
                }
                pending += 1;
                if pending + 1 >= budget {
                    acc.iter_mut().for_each(|x| *x = f.reduce_u64(*x) as u64);
                    pending = 0;
                }
            }
            for (j, &x) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = f.reduce_u64(x);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows).map(|i| super::dot(&self.field, self.row(i), v)).collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (MatrixFp, Vec<usize>) {
        if self.field.p() == 2 {
            return gf2::rref(self);
        }
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.p();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for x in self.row_mut(r)[c..].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before.chunks_exact_mut(cols).chain(after.chunks_exact_mut(cols)) {
                let coef = other[c];
                if coef == 0 {
                    continue;
                }
                let neg = (p - coef) as u64;
                for (x, &y) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = f.reduce_u64(*x as u64 + neg * y as u64);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.field.p() == 2 {
            return gf2::rank(self);
        }
        // Row echelon (not reduced) suffices for the rank.
        let f = self.field;
        let p = f.p();
        let cols = self.cols;
        let mut m = self.data.clone();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    m.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m[r * cols + c]);
            let (head, tail) = m.split_at_mut((r + 1) * cols);
            let pivot_row = &head[r * cols..];
            for other in tail.chunks_exact_mut(cols) {
                let coef = other[c];
                if coef == 0 {
                    continue;
                }
                let k = (p - f.mul(coef, inv)) as u64;
                for (x, &y) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = f.reduce_u64(*x as u64 + k * y as u64);
                }
            }
            r += 1;
        }
        r
    }

    /// Right null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(k, free));
            }
            basis.push(v);
        }
        Subspace::from_vectors(f, self.cols, basis.iter().map(|v| v.as_slice()))
            .expect("kernel vectors have the ambient length")
    }

    /// Span of the rows.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, (0..self.rows).map(|i| self.row(i)))
            .expect("rows have the ambient length")
    }

    /// Span of the columns.
    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }
}

impl fmt::Debug for MatrixFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixFp {}x{} over F_{} [", self.rows, self.cols, self.field.p())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Rank oracle by brute force: the largest k with a nonzero k x k minor.
    fn rank_by_minors(m: &MatrixFp) -> usize {
        let field = m.field();
        let p = field.p() as i64;
        fn det(a: &[Vec<i64>], p: i64) -> i64 {
            let n = a.len();
            if n == 1 {
                return a[0][0].rem_euclid(p);
            }
            let mut total = 0i64;
            for j in 0..n {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                total = (total + sign * a[0][j] * det(&minor, p)).rem_euclid(p);
            }
            total
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let maxk = m.rows().min(m.cols());
        for k in (1..=maxk).rev() {
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let a: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| m.get(i, j) as i64).collect())
                        .collect();
                    if det(&a, p) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn identity_and_zero_ranks() {
        for p in [2, 3, 5] {
            assert_eq!(MatrixFp::identity(f(p), 7).rank(), 7);
            assert_eq!(MatrixFp::zeros(f(p), 7, 7).rank(), 0);
            assert_eq!(MatrixFp::zeros(f(p), 4, 4).kernel().dim(), 4);
            assert_eq!(MatrixFp::identity(f(p), 4).kernel().dim(), 0);
        }
    }

    #[test]
    fn rank_matches_minor_oracle() {
        // Random 10x10 matrices over F_5, and low-rank products; compared on
        // their 5x5 leading blocks against the minor-expansion oracle.
        let field = f(5);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for trial in 0..40 {
            let inner = 1 + trial % 5;
            let a = MatrixFp::from_fn(field, 10, inner, |_, _| rng.random_range(0..5));
            let b = MatrixFp::from_fn(field, inner, 10, |_, _| rng.random_range(0..5));
            let full = if trial % 2 == 0 {
                a.mul(&b).unwrap()
            } else {
                MatrixFp::from_fn(field, 10, 10, |_, _| rng.random_range(0..5))
            };
            let block = MatrixFp::from_fn(field, 5, 5, |i, j| full.get(i, j));
            assert_eq!(block.rank(), rank_by_minors(&block), "trial {trial}");
            assert!(full.rank() <= 10);
            if trial % 2 == 0 {
                assert!(full.rank() <= inner);
            }
        }
    }

    #[test]
    fn gf2_path_agrees_with_minor_oracle() {
        let field = f(2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let m = MatrixFp::from_fn(field, 5, 6, |_, _| rng.random_range(0..2));
            assert_eq!(m.rank(), rank_by_minors(&m));
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2u32, 3, 7] {
            for _ in 0..20 {
                let rows = rng.random_range(1..9);
                let cols = rng.random_range(1..12);
                let m = MatrixFp::from_fn(f(p), rows, cols, |_, _| rng.random_range(0..p) * rng.random_range(0..2));
                let k = m.kernel();
                assert_eq!(k.dim(), cols - m.rank());
                for v in k.basis() {
                    assert!(m.mul_vec(v).iter().all(|&x| x == 0));
                }
            }
        }
    }

    #[test]
    fn rank_of_transpose() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in [2u32, 3, 5] {
            for _ in 0..30 {
                let m = MatrixFp::from_fn(f(p), 6, 9, |_, _| rng.random_range(0..p) * rng.random_range(0..2));
                assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }
}
