//! Dense matrices over an exact field and the deterministic elimination
//! kernel (RREF, null spaces, inverses) the whole crate is built on.
//!
//! Determinism contract: the pivot of a column is always the first nonzero
//! entry scanning rows top-down, free variables are enumerated in increasing
//! column order, and kernel vectors carry a `1` in their free slot. Computed
//! bases are therefore reproducible byte-for-byte.

use crate::error::Error;
use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    /// Boundary constructor: validates the entry count and that every entry
    /// shares one field descriptor.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let field = entries
            .first()
            .map(Scalar::field)
            .ok_or(Error::DimensionMismatch("empty matrix needs explicit field".into()))?;
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::MixedFields);
        }
        Ok(DenseMatrix { rows, cols, field, entries })
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert_eq!(v.field(), field, "mixed field descriptors");
                entries.push(v);
            }
        }
        DenseMatrix { rows, cols, field, entries }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, dim: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(field, dim, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "mixed field descriptors");
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> DenseMatrix {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mat_mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Self::from_fn(self.field, self.rows, rhs.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
            }
            acc
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).add(rhs.get(i, j))
        })
    }

    pub fn sub(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).sub(rhs.get(i, j))
        })
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        DenseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse by Gauss-Jordan on `[M | I]`; `None` when singular.
    pub fn inverse(&self) -> Option<DenseMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        Some(Self::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }
}

/// Reduced row-echelon form with the ordered pivot-column list.
///
/// Pivot selection is the first nonzero entry of the leftmost unfinished
/// column, scanning top-down, so the output is deterministic.
pub fn rref(m: &DenseMatrix) -> (DenseMatrix, Vec<usize>) {
    let mut mat = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..mat.cols {
        if row == mat.rows {
            break;
        }
        let pivot_row = (row..mat.rows).find(|&r| !mat.get(r, col).is_zero());
        let Some(pr) = pivot_row else { continue };
        if pr != row {
            for c in 0..mat.cols {
                let a = mat.get(row, c).clone();
                let b = mat.get(pr, c).clone();
                mat.set(row, c, b);
                mat.set(pr, c, a);
            }
        }
        let inv = mat.get(row, col).inv();
        for c in col..mat.cols {
            let v = mat.get(row, c).mul(&inv);
            mat.set(row, c, v);
        }
        for r in 0..mat.rows {
            if r == row || mat.get(r, col).is_zero() {
                continue;
            }
            let factor = mat.get(r, col).clone();
            for c in col..mat.cols {
                let v = mat.get(r, c).sub(&factor.mul(mat.get(row, c)));
                mat.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (mat, pivots)
}

/// Basis of the right null space in the canonical RREF parametrization:
/// free variables in increasing column order, each vector with a `1` in its
/// free slot.
pub fn kernel_basis(m: &DenseMatrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(m);
    let field = m.field;
    let mut basis = Vec::new();
    let mut pivot_of_col = vec![None; m.cols];
    for (row, &col) in pivots.iter().enumerate() {
        pivot_of_col[col] = Some(row);
    }
    for free in 0..m.cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = r.get(row, free).neg();
        }
        basis.push(v);
    }
    basis
}

/// Solves `B x = w` for `x`; `None` when `w` is outside the column space.
/// Used to express elements in a computed subspace basis.
pub fn solve_in_columns(basis: &DenseMatrix, w: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(basis.rows, w.len());
    let field = basis.field;
    let mut aug = DenseMatrix::zero(field, basis.rows, basis.cols + 1);
    for i in 0..basis.rows {
        for j in 0..basis.cols {
            aug.set(i, j, basis.get(i, j).clone());
        }
        aug.set(i, basis.cols, w[i].clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.contains(&basis.cols) {
        return None; // inconsistent
    }
    let mut x = vec![field.zero(); basis.cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = r.get(row, basis.cols).clone();
    }
    // With independent columns this is exact; with dependent columns it is
    // the RREF particular solution, still a valid preimage.
    Some(x)
}

/// Canonical form of the span of the given vectors: the nonzero rows of the
/// RREF of the matrix having the vectors as rows. Two spans are equal iff
/// their canonical forms are identical.
pub fn canonical_span(field: Field, dim: usize, vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = DenseMatrix::from_fn(field, vectors.len(), dim, |i, j| vectors[i][j].clone());
    let (r, pivots) = rref(&m);
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn mat(rows: usize, cols: usize, vals: &[i64]) -> DenseMatrix {
        DenseMatrix::from_fn(q(), rows, cols, |i, j| q().from_i64(vals[i * cols + j]))
    }

    #[test]
    fn rref_identity() {
        let id = DenseMatrix::identity(q(), 3);
        let (r, pivots) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero() {
        let z = DenseMatrix::zero(q(), 2, 2);
        let (r, pivots) = rref(&z);
        assert_eq!(r, z);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        // Hand Gaussian elimination: second row is twice the first.
        let m = mat(2, 3, &[1, 2, 3, 2, 4, 6]);
        let (r, pivots) = rref(&m);
        assert_eq!(pivots, vec![0]);
        assert_eq!(r.row(0), mat(1, 3, &[1, 2, 3]).row(0));
        assert!(r.row(1).iter().all(Scalar::is_zero));
    }

    #[test]
    fn rref_idempotent() {
        let m = mat(3, 4, &[0, 2, 4, 1, 1, 1, 1, 1, 2, 3, 5, 0]);
        let (r1, _) = rref(&m);
        let (r2, _) = rref(&r1);
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(kernel_basis(&DenseMatrix::identity(q(), 4)).is_empty());
    }

    #[test]
    fn kernel_of_zero_row_is_standard() {
        let z = DenseMatrix::zero(q(), 1, 3);
        let basis = kernel_basis(&z);
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, entry) in v.iter().enumerate() {
                assert_eq!(entry.is_one(), i == j);
                assert_eq!(entry.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = mat(2, 3, &[1, 2, 3, 2, 4, 6]);
        let basis = kernel_basis(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let e = DenseMatrix::new(
            1,
            2,
            vec![Field::Rational.one(), Field::prime(7).unwrap().one()],
        );
        assert!(matches!(e, Err(Error::MixedFields)));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat(2, 2, &[1, 2, 3, 5]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mat_mul(&inv), DenseMatrix::identity(q(), 2));
        let singular = mat(2, 2, &[1, 2, 2, 4]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn solve_in_columns_finds_coordinates() {
        let b = mat(3, 2, &[1, 0, 0, 1, 1, 1]);
        let w = vec![q().from_i64(2), q().from_i64(3), q().from_i64(5)];
        let x = solve_in_columns(&b, &w).unwrap();
        assert_eq!(x, vec![q().from_i64(2), q().from_i64(3)]);
        let outside = vec![q().from_i64(1), q().from_i64(0), q().from_i64(0)];
        assert!(solve_in_columns(&b, &outside).is_none());
    }
}
