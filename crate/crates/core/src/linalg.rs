//! Exact dense linear algebra over the rationals.
//!
//! Pivoting is by column order with the first nonzero row below the current
//! position, so echelon forms, ranks and kernel bases are reproducible.

use std::fmt;

use num_traits::{One, Zero};

use crate::rational::{format_rational, Q};

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn scalar(n: usize, c: &Q) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Builds from rows; panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        RatMatrix { rows: r, cols: c, data }
    }

    /// Builds from columns of equal length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
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

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Q>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
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
                        *out.entry_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        let mut out = vec![Q::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> RatMatrix {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product `self ⊗ other` with `self`'s index major.
    pub fn kron(&self, other: &RatMatrix) -> RatMatrix {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            let a = self.get(i / r2, j / c2);
            if a.is_zero() {
                Q::zero()
            } else {
                a * other.get(i % r2, j % c2)
            }
        })
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            let pivot_row: Vec<Q> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    if !pivot_row[c].is_zero() {
                        let v = &factor * &pivot_row[c];
                        *m.entry_mut(r, c) -= v;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            rank: pivot_cols.len(),
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the null space. Each basis vector has a `1`
    /// at one free column, zeros at the other free columns, ordered by free
    /// column index.
    pub fn kernel_basis(&self) -> RatMatrix {
        let Rref {
            matrix, pivot_cols, ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivot_cols {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = RatMatrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, Q::one());
            for (r, &p) in pivot_cols.iter().enumerate() {
                let v = matrix.get(r, f);
                if !v.is_zero() {
                    basis.set(p, k, -v.clone());
                }
            }
        }
        basis
    }

    /// A particular solution of `self · x = rhs` with free variables set to
    /// zero, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(rhs.len(), self.rows, "rhs length mismatch");
        let aug = self.hstack(&RatMatrix::from_columns(self.rows, &[rhs.to_vec()]));
        let Rref {
            matrix, pivot_cols, ..
        } = aug.rref();
        if pivot_cols.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in pivot_cols.iter().enumerate() {
            x[p] = matrix.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let Rref { matrix, rank, .. } = self.hstack(&Self::identity(n)).rref();
        // The left block is the identity exactly when the first n pivots land there.
        if rank < n || (0..n).any(|i| !matrix.get(i, i).is_one()) {
            return None;
        }
        if (0..n).any(|i| (0..n).any(|j| i != j && !matrix.get(i, j).is_zero())) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| matrix.get(i, n + j).clone()))
    }
}

/// Basis of the intersection of the column spaces of `u` and `w`, expressed
/// as columns in the ambient space. Both inputs must have independent columns.
pub fn column_space_intersection(u: &RatMatrix, w: &RatMatrix) -> RatMatrix {
    assert_eq!(u.rows(), w.rows());
    let combined = u.hstack(&w.scale(&-Q::one()));
    let ker = combined.kernel_basis();
    let coeffs = RatMatrix::from_fn(u.cols(), ker.cols(), |i, j| ker.get(i, j).clone());
    let raw = u.mul(&coeffs);
    independent_columns(&raw)
}

/// Keeps the pivot columns of `m`, giving a basis of its column space.
pub fn independent_columns(m: &RatMatrix) -> RatMatrix {
    let pivots = m.rref().pivot_cols;
    let cols: Vec<Vec<Q>> = pivots.iter().map(|&c| m.column(c)).collect();
    RatMatrix::from_columns(m.rows(), &cols)
}

/// Incrementally maintained reduced row echelon form, for kernels of tall
/// sparse systems whose rows arrive one at a time.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    width: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(width: usize) -> Self {
        RowEchelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, mut row: Vec<Q>) -> bool {
        assert_eq!(row.len(), self.width, "row width mismatch");
        if self.rows.len() == self.width || row.iter().all(Zero::is_zero) {
            return false;
        }
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].recip();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for r in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    /// Null space basis with the same conventions as
    /// [`RatMatrix::kernel_basis`].
    pub fn kernel_basis(&self) -> RatMatrix {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.width).filter(|&c| !is_pivot[c]).collect();
        let mut basis = RatMatrix::zeros(self.width, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, Q::one());
            for (r, &p) in self.rows.iter().zip(&self.pivots) {
                if !r[f].is_zero() {
                    basis.set(p, k, -r[f].clone());
                }
            }
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rref_examples() {
        let id = RatMatrix::identity(3).rref();
        assert_eq!(id.rank, 3);
        assert_eq!(id.pivot_cols, vec![0, 1, 2]);

        assert_eq!(RatMatrix::zeros(2, 4).rref().rank, 0);

        let r = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.matrix, m(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn row_echelon_matches_rref() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0], &[1, 0, 1, 5]]);
        let mut e = RowEchelon::new(4);
        for r in a.to_rows() {
            e.insert(r);
        }
        assert_eq!(e.rank(), a.rank());
        assert_eq!(e.kernel_basis(), a.kernel_basis());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RatMatrix::identity(3).kernel_basis().cols(), 0);
        assert_eq!(RatMatrix::zeros(2, 3).kernel_basis().cols(), 3);
        let k = m(&[&[1, 2]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![q(-2), q(1)]);
    }

    #[test]
    fn solve_examples() {
        let e1 = vec![q(1), q(0), q(0)];
        assert_eq!(RatMatrix::identity(3).solve(&e1), Some(e1.clone()));
        assert_eq!(m(&[&[1, 1]]).solve(&[q(2)]), Some(vec![q(2), q(0)]));
        assert_eq!(m(&[&[0]]).solve(&[q(1)]), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let b = RatMatrix::from_rows(vec![vec![qf(1, 2), q(0)], vec![q(0), q(3)]]);
        assert_eq!(b.inverse().unwrap(), RatMatrix::diagonal(&[q(2), qf(1, 3)]));
    }

    #[test]
    fn intersection_of_planes() {
        // span{e1,e2} ∩ span{e2,e3} = span{e2}
        let u = m(&[&[1, 0], &[0, 1], &[0, 0]]);
        let w = m(&[&[0, 0], &[1, 0], &[0, 1]]);
        let i = column_space_intersection(&u, &w);
        assert_eq!(i.cols(), 1);
        assert!(i.get(0, 0).is_zero() && !i.get(1, 0).is_zero() && i.get(2, 0).is_zero());
    }

    #[test]
    fn kron_shape() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let k = a.kron(&RatMatrix::identity(2));
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(*k.get(2, 0), q(3));
        assert_eq!(*k.get(3, 1), q(3));
        assert!(k.get(2, 1).is_zero());
    }
}
