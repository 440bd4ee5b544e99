//! Dense exact matrices: row reduction, rank, kernels and linear solves.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).conj());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<S>) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<S>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<S>) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = S::one() / self.get(r, c).clone();
            for j in c..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let pivot_entry = self.get(r, j).clone();
                    if !pivot_entry.is_zero() {
                        let v = self.get(i, j).clone() - f.clone() * pivot_entry;
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `self · x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<S>], len: usize) -> Self {
        let mut m = Self::zeros(len, cols.len());
        for (c, v) in cols.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }
}

/// True when the two families span the same subspace.
pub fn same_span<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>], len: usize) -> bool {
    let ma = Matrix::from_columns(a, len).conj_transpose();
    let mb = Matrix::from_columns(b, len).conj_transpose();
    let ra = ma.rank();
    ra == mb.rank() && ma.vstack(&mb).rank() == ra
}
