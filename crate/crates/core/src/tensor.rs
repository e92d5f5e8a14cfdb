//! Sparse rank-3 structure tensors, the universal carrier for
//! multiplications, comultiplications, actions and coactions, plus a small
//! n-leg variant for iterated coproducts.
//!
//! Entry maps are ordered (`BTreeMap`), so iteration and serialization are
//! deterministic. Only nonzero coefficients are stored.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::field::{Field, Scalar};
use crate::matrix::DenseMatrix;

/// Sparse coefficient tensor `c[i][j][k]` with dimensions `(d0, d1, d2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTensor {
    pub dims: (usize, usize, usize),
    pub field: Field,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl StructureTensor {
    pub fn new(field: Field, dims: (usize, usize, usize)) -> Self {
        StructureTensor { dims, field, entries: BTreeMap::new() }
    }

    /// Adds `value` onto entry `(i, j, k)`, dropping the slot if the sum is
    /// zero. Indices are checked against the dimensions.
    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, value: Scalar) -> Result<(), Error> {
        if i >= self.dims.0 || j >= self.dims.1 || k >= self.dims.2 {
            return Err(Error::DimensionMismatch(format!(
                "tensor index ({i},{j},{k}) out of range for dims {:?}",
                self.dims
            )));
        }
        if value.field() != self.field {
            return Err(Error::MixedFields);
        }
        let slot = self.entries.entry((i, j, k)).or_insert_with(|| self.field.zero());
        *slot = slot.add(&value);
        if slot.is_zero() {
            self.entries.remove(&(i, j, k));
        }
        Ok(())
    }

    /// Infallible variant for indices known to be in range.
    pub fn add(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        self.add_entry(i, j, k, value).expect("tensor entry in range");
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries with the first two indices fixed; for a
    /// multiplication tensor this is the support of `e_i . e_j`.
    pub fn slice01(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries
            .range((i, j, 0)..=(i, j, usize::MAX))
            .map(|(&(_, _, k), c)| (k, c))
    }

    /// Nonzero entries with the first index fixed; for a comultiplication
    /// tensor this is the support of the Sweedler legs of `e_i`.
    pub fn slice0(&self, i: usize) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.entries
            .range((i, 0, 0)..=(i, usize::MAX, usize::MAX))
            .map(|(&(_, j, k), c)| ((j, k), c))
    }

    /// Sums the tensor against `v` over the named slot (0, 1 or 2). The
    /// result is indexed by the remaining slots in their original order:
    /// contracting slot 0 yields `M[j][k]`, slot 1 yields `M[i][k]`, slot 2
    /// yields `M[i][j]`.
    pub fn contract(&self, slot: usize, v: &[Scalar]) -> Result<DenseMatrix, Error> {
        let slot_dim = match slot {
            0 => self.dims.0,
            1 => self.dims.1,
            2 => self.dims.2,
            _ => return Err(Error::DimensionMismatch(format!("tensor slot {slot}"))),
        };
        if v.len() != slot_dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} contracted against slot {slot} of dimension {slot_dim}",
                v.len()
            )));
        }
        if v.iter().any(|s| s.field() != self.field) {
            return Err(Error::MixedFields);
        }
        let (rows, cols) = match slot {
            0 => (self.dims.1, self.dims.2),
            1 => (self.dims.0, self.dims.2),
            _ => (self.dims.0, self.dims.1),
        };
        let mut out = DenseMatrix::zero(self.field, rows, cols);
        for (&(i, j, k), c) in &self.entries {
            let (weight, r, col) = match slot {
                0 => (&v[i], j, k),
                1 => (&v[j], i, k),
                _ => (&v[k], i, j),
            };
            if weight.is_zero() {
                continue;
            }
            let updated = out.get(r, col).add(&weight.mul(c));
            out.set(r, col, updated);
        }
        Ok(out)
    }

    /// Bilinear evaluation `u ยท v` with output leg `k`:
    /// `out[k] = sum c[i][j][k] u[i] v[j]`.
    pub fn bilinear(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dims.0, "left argument length");
        assert_eq!(v.len(), self.dims.1, "right argument length");
        let mut out = vec![self.field.zero(); self.dims.2];
        for (&(i, j, k), c) in &self.entries {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            out[k] = out[k].add(&u[i].mul(&v[j]).mul(c));
        }
        out
    }

    /// Splitting evaluation: applies a comultiplication-shaped tensor to `v`
    /// and returns the two-leg coefficients as a `d1 x d2` matrix.
    pub fn split(&self, v: &[Scalar]) -> DenseMatrix {
        assert_eq!(v.len(), self.dims.0, "argument length");
        let mut out = DenseMatrix::zero(self.field, self.dims.1, self.dims.2);
        for (&(i, j, k), c) in &self.entries {
            if v[i].is_zero() {
                continue;
            }
            let updated = out.get(j, k).add(&v[i].mul(c));
            out.set(j, k, updated);
        }
        out
    }

    /// Reinterprets slot order: `out[p(0)][p(1)][p(2)] = self[i][j][k]`
    /// where `p` sends original slot positions to new ones.
    pub fn permute(&self, p: [usize; 3]) -> StructureTensor {
        let dims = [self.dims.0, self.dims.1, self.dims.2];
        let mut new_dims = [0usize; 3];
        for (orig, &target) in p.iter().enumerate() {
            new_dims[target] = dims[orig];
        }
        let mut out = StructureTensor::new(self.field, (new_dims[0], new_dims[1], new_dims[2]));
        for (&(i, j, k), c) in &self.entries {
            let idx = [i, j, k];
            let mut new_idx = [0usize; 3];
            for (orig, &target) in p.iter().enumerate() {
                new_idx[target] = idx[orig];
            }
            out.add(new_idx[0], new_idx[1], new_idx[2], c.clone());
        }
        out
    }
}

/// Sparse coefficient array with an arbitrary number of legs; used for
/// iterated coproducts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiTensor {
    pub dims: Vec<usize>,
    pub field: Field,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl MultiTensor {
    pub fn new(field: Field, dims: Vec<usize>) -> Self {
        MultiTensor { dims, field, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, idx: Vec<usize>, value: Scalar) {
        assert_eq!(idx.len(), self.dims.len());
        let slot = self.entries.entry(idx.clone()).or_insert_with(|| self.field.zero());
        *slot = slot.add(&value);
        if slot.is_zero() {
            self.entries.remove(&idx);
        }
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.entries
            .get(idx)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }

    pub fn from_structure(t: &StructureTensor) -> Self {
        let mut out = MultiTensor::new(t.field, vec![t.dims.0, t.dims.1, t.dims.2]);
        for (&(i, j, k), c) in t.iter() {
            out.add(vec![i, j, k], c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    /// Multiplication tensor of the order-2 group algebra: basis (e, g).
    fn c2_mul() -> StructureTensor {
        let mut t = StructureTensor::new(q(), (2, 2, 2));
        t.add(0, 0, 0, q().one());
        t.add(0, 1, 1, q().one());
        t.add(1, 0, 1, q().one());
        t.add(1, 1, 0, q().one());
        t
    }

    #[test]
    fn contract_basis_vector_slices() {
        let t = c2_mul();
        let e1 = vec![q().zero(), q().one()];
        let m = t.contract(1, &e1).unwrap();
        // Slice c[.][1][.]: e*g = g, g*g = e.
        assert!(m.get(0, 0).is_zero());
        assert!(m.get(0, 1).is_one());
        assert!(m.get(1, 0).is_one());
        assert!(m.get(1, 1).is_zero());
    }

    #[test]
    fn contract_zero_vector_is_zero() {
        let t = c2_mul();
        let z = vec![q().zero(), q().zero()];
        assert!(t.contract(0, &z).unwrap().is_zero());
    }

    #[test]
    fn contract_left_multiplication_by_e_plus_g() {
        // Multiply out by hand in the 2-dim group algebra:
        // (e+g)e = e+g, (e+g)g = g+e, so every output coefficient is 1.
        let t = c2_mul();
        let v = vec![q().one(), q().one()];
        let m = t.contract(0, &v).unwrap();
        for j in 0..2 {
            for k in 0..2 {
                assert!(m.get(j, k).is_one());
            }
        }
    }

    #[test]
    fn contract_dimension_mismatch() {
        let t = c2_mul();
        assert!(t.contract(0, &[q().one()]).is_err());
        assert!(t.contract(3, &[q().one(), q().one()]).is_err());
    }

    #[test]
    fn entries_summed_and_zeros_dropped() {
        let mut t = StructureTensor::new(q(), (1, 1, 1));
        t.add(0, 0, 0, q().from_i64(2));
        t.add(0, 0, 0, q().from_i64(-2));
        assert!(t.is_empty());
    }
}
