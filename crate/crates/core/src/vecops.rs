//! Small helpers for coordinate vectors over an exact field.

use crate::field::{Field, Scalar};

pub fn basis(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    assert_eq!(u.len(), v.len());
    let field = u.first().map(Scalar::field).expect("nonempty vectors");
    let mut acc = field.zero();
    for (a, b) in u.iter().zip(v) {
        acc = acc.add(&a.mul(b));
    }
    acc
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a.add(b)).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a.sub(b)).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|a| c.mul(a)).collect()
}

/// `acc += c * v`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (slot, a) in acc.iter_mut().zip(v) {
        *slot = slot.add(&c.mul(a));
    }
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Kronecker product, left factor major: `(u ox v)[i*len(v)+j] = u[i]v[j]`.
pub fn kron(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(a.mul(b));
        }
    }
    out
}
