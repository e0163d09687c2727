//! Dense matrices over `GF(p)` and Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.p())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| v % field.p()).collect();
        Ok(Self { field, rows: r, cols: c, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows()).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let brow = other.row(k);
                for (j, &b) in brow.iter().enumerate() {
                    acc[j] += a * b as u64;
                }
                if k % 4096 == 4095 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
            for (slot, &x) in out.data[i * other.cols..(i + 1) * other.cols].iter_mut().zip(&acc) {
                *slot = (x % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: u32, other: &Matrix) {
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(c, b));
        }
    }

    /// Places `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col));
            for c in col..self.cols {
                let v = self.get(row, c);
                self.set(row, c, f.mul(v, inv));
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column, with a `1` in
    /// that free position.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let mut r = self.clone();
        let pivots = r.rref_in_place();
        kernel_from_rref(&r, &pivots)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Matrix::identity(self.field, n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<u32>> {
    let f = r.field;
    let free: Vec<usize> = (0..r.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; r.cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            v
        })
        .collect()
}

/// Result of [`rref_solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub rank: usize,
    /// Echelon-normalised kernel basis of `A`.
    pub kernel: Vec<Vec<u32>>,
    /// A particular solution of `A X = B` when `B` was supplied and the system
    /// is consistent.
    pub particular: Option<Matrix>,
    /// `false` when `B` was supplied and the system has no solution.
    pub consistent: bool,
}

/// Rank, kernel and (optionally) a particular solution of `A X = B`.
pub fn rref_solve(a: &Matrix, b: Option<&Matrix>) -> Result<Solution> {
    let kernel = a.kernel();
    let rank = a.cols - kernel.len();
    let Some(b) = b else {
        return Ok(Solution { rank, kernel, particular: None, consistent: true });
    };
    if b.rows != a.rows {
        return Err(Error::Dimension(format!("A has {} rows but B has {}", a.rows, b.rows)));
    }
    let mut aug = Matrix::zeros(a.field, a.rows, a.cols + b.cols);
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols, b);
    let pivots = aug.rref_in_place();
    if pivots.iter().any(|&p| p >= a.cols) {
        return Ok(Solution { rank, kernel, particular: None, consistent: false });
    }
    let mut x = Matrix::zeros(a.field, a.cols, b.cols);
    for (i, &pc) in pivots.iter().enumerate() {
        for c in 0..b.cols {
            x.set(pc, c, aug.get(i, a.cols + c));
        }
    }
    Ok(Solution { rank, kernel, particular: Some(x), consistent: true })
}

/// A subspace of `GF(p)^n` held as an RREF basis, with constant-time
/// coordinates read off at the pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(field, vectors.len(), ambient);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), ambient, "vector length");
            for (j, &x) in v.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Self { field, ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let coords: Vec<u32> = self.pivots.iter().map(|&p| v[p]).collect();
        let f = self.field;
        let mut recon = vec![0u32; self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            for (r, &x) in recon.iter_mut().zip(b) {
                *r = f.add(*r, f.mul(*c, x));
            }
        }
        (recon == v).then_some(coords)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (r, &x) in out.iter_mut().zip(b) {
                *r = f.add(*r, f.mul(*c, x));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let f = gf(5);
        let s = rref_solve(&Matrix::identity(f, 4), None).unwrap();
        assert_eq!(s.rank, 4);
        assert!(s.kernel.is_empty());
        let s = rref_solve(&Matrix::zeros(f, 3, 4), None).unwrap();
        assert_eq!(s.rank, 0);
        assert_eq!(s.kernel.len(), 4);
    }

    #[test]
    fn singular_over_gf3() {
        // det [[1,2],[2,1]] = 1 - 4 = -3 = 0 mod 3, so the rank is 1.
        let f = gf(3);
        let brute_det = (1i64 - 2 * 2).rem_euclid(3);
        assert_eq!(brute_det, 0);
        let a = Matrix::from_rows(f, &[vec![1, 2], vec![2, 1]]).unwrap();
        let s = rref_solve(&a, None).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.kernel, vec![vec![1, 1]]);
    }

    #[test]
    fn inconsistent_system_reports_no_solution() {
        let f = gf(3);
        let a = Matrix::from_rows(f, &[vec![1, 2], vec![2, 1]]).unwrap();
        let b = Matrix::from_rows(f, &[vec![1], vec![0]]).unwrap();
        let s = rref_solve(&a, Some(&b)).unwrap();
        assert!(!s.consistent);
        assert!(s.particular.is_none());
    }

    #[test]
    fn subspace_coordinates() {
        let f = gf(7);
        let s = Subspace::span(f, 3, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(s.dim(), 2);
        let v = vec![1, 3, 4];
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combine(&c), v);
        assert!(s.coordinates(&[0, 0, 1]).is_none());
    }

    fn arb_system() -> impl Strategy<Value = (Vec<Vec<u32>>, Vec<u32>)> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            (
                proptest::collection::vec(proptest::collection::vec(0u32..5, c), r),
                proptest::collection::vec(0u32..5, r),
            )
        })
    }

    proptest! {
        #[test]
        fn reported_solutions_solve_the_system((rows, rhs) in arb_system()) {
            let f = gf(5);
            let a = Matrix::from_rows(f, &rows).unwrap();
            let b = Matrix::from_columns(f, rhs.len(), std::slice::from_ref(&rhs));
            let s = rref_solve(&a, Some(&b)).unwrap();
            if let Some(x) = s.particular {
                prop_assert_eq!(a.mul(&x), b);
            }
            for k in &s.kernel {
                prop_assert!(a.mul_vec(k).iter().all(|&v| v == 0));
            }
            prop_assert_eq!(s.rank + s.kernel.len(), a.cols());
        }

        #[test]
        fn inverse_round_trips(rows in proptest::collection::vec(proptest::collection::vec(0u32..7, 3), 3)) {
            let f = gf(7);
            let a = Matrix::from_rows(f, &rows).unwrap();
            match a.inverse() {
                Some(inv) => prop_assert_eq!(a.mul(&inv), Matrix::identity(f, 3)),
                None => prop_assert!(a.rank() < 3),
            }
        }
    }
}
