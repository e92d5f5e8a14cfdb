//! Shared concrete instances used across the test suites and the worked
//! examples: small group algebras, the 4-dimensional Taft/Sweedler Hopf
//! algebra, and the standard module-algebra fixtures.
//!
//! Everything is parametric in the ground field so the same data runs over
//! the rationals and over prime fields.

use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::matrix::DenseMatrix;
use crate::modalg::{
    dual_group_hopf, g_action_algebra, graded_algebra, group_hopf, Algebra, Group, ModuleAlgebra,
};
use crate::tensor::StructureTensor;
use crate::vecops;

/// The symmetric group on three letters, elements ordered as the
/// lexicographically sorted permutations of `(0,1,2)`.
pub fn s3() -> Group {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let cayley = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq = compose(p, q);
                    perms.iter().position(|r| *r == pq).expect("closed")
                })
                .collect()
        })
        .collect();
    Group::new(cayley).expect("S3 table")
}

/// `k[C2]`, basis `(e, g)`.
pub fn kc2(field: Field) -> HopfAlgebra {
    group_hopf(field, &Group::cyclic(2))
}

/// `k[C3]`.
pub fn kc3(field: Field) -> HopfAlgebra {
    group_hopf(field, &Group::cyclic(3))
}

/// `k[S3]`.
pub fn ks3(field: Field) -> HopfAlgebra {
    group_hopf(field, &s3())
}

/// `k(S3)`, the dual group algebra on the idempotent basis.
pub fn dual_ks3(field: Field) -> HopfAlgebra {
    dual_group_hopf(field, &s3())
}

/// The 4-dimensional Sweedler Hopf algebra, basis `(1, g, x, gx)` with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `coproduct(x) = x (x) 1 + g (x) x`,
/// `S(x) = -gx`. Meaningful in characteristic different from 2.
pub fn sweedler(field: Field) -> HopfAlgebra {
    let one = field.one();
    let neg = field.from_i64(-1);
    let mut mul = StructureTensor::new(field, (4, 4, 4));
    // Multiplication table rows: 1, g, x, gx.
    let table: [[(usize, i64); 4]; 4] = [
        // 1 * _
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        // g * _ : g, 1, gx, x
        [(1, 1), (0, 1), (3, 1), (2, 1)],
        // x * _ : x, -gx, 0, 0
        [(2, 1), (3, -1), (0, 0), (0, 0)],
        // gx * _ : gx, -x, 0, 0
        [(3, 1), (2, -1), (0, 0), (0, 0)],
    ];
    for (i, row) in table.iter().enumerate() {
        for (j, &(k, c)) in row.iter().enumerate() {
            if c != 0 {
                mul.add(i, j, k, field.from_i64(c));
            }
        }
    }
    let mut comul = StructureTensor::new(field, (4, 4, 4));
    comul.add(0, 0, 0, one.clone()); // 1 -> 1 (x) 1
    comul.add(1, 1, 1, one.clone()); // g -> g (x) g
    comul.add(2, 2, 0, one.clone()); // x -> x (x) 1
    comul.add(2, 1, 2, one.clone()); //      + g (x) x
    comul.add(3, 3, 1, one.clone()); // gx -> gx (x) g
    comul.add(3, 0, 3, one.clone()); //       + 1 (x) gx
    let unit = vecops::basis(field, 4, 0);
    let counit = vec![one.clone(), one, field.zero(), field.zero()];
    let mut antipode = DenseMatrix::zero(field, 4, 4);
    antipode.set(0, 0, field.one());
    antipode.set(1, 1, field.one());
    antipode.set(3, 2, neg); // S(x) = -gx
    antipode.set(2, 3, field.one()); // S(gx) = x
    HopfAlgebra::new(mul, unit, comul, counit, Some(antipode)).expect("sweedler dims")
}

/// `k[x]/(x^2 - 1)` as an algebra, basis `(1, x)`.
pub fn f4_algebra(field: Field) -> Algebra {
    let mut mul = StructureTensor::new(field, (2, 2, 2));
    mul.add(0, 0, 0, field.one());
    mul.add(0, 1, 1, field.one());
    mul.add(1, 0, 1, field.one());
    mul.add(1, 1, 0, field.one());
    Algebra::new(mul, vecops::basis(field, 2, 0)).expect("f4 algebra")
}

/// Fixture F4: `k[x]/(x^2 - 1)` with C2 acting by `x -> -x`.
pub fn f4(field: Field) -> ModuleAlgebra {
    let group = Group::cyclic(2);
    let flip = DenseMatrix::from_fn(field, 2, 2, |i, j| {
        if (i, j) == (0, 0) {
            field.one()
        } else if (i, j) == (1, 1) {
            field.from_i64(-1)
        } else {
            field.zero()
        }
    });
    let id = DenseMatrix::identity(field, 2);
    g_action_algebra(field, &group, f4_algebra(field), &[id, flip]).expect("f4 fixture")
}

/// `Mat_2(k)` as an algebra on the matrix-unit basis `E00, E01, E10, E11`.
pub fn mat2_algebra(field: Field) -> Algebra {
    let mut mul = StructureTensor::new(field, (4, 4, 4));
    let idx = |p: usize, q: usize| p * 2 + q;
    for p in 0..2 {
        for q in 0..2 {
            for s in 0..2 {
                mul.add(idx(p, q), idx(q, s), idx(p, s), field.one());
            }
        }
    }
    let mut unit = vec![field.zero(); 4];
    unit[idx(0, 0)] = field.one();
    unit[idx(1, 1)] = field.one();
    Algebra::new(mul, unit).expect("mat2 algebra")
}

/// Fixture F5: C2 acting on `Mat_2(k)` by conjugation with `diag(1, -1)`.
pub fn f5(field: Field) -> ModuleAlgebra {
    let group = Group::cyclic(2);
    // Conjugation by diag(1,-1) negates the off-diagonal matrix units.
    let conj = DenseMatrix::from_fn(field, 4, 4, |i, j| {
        if i != j {
            field.zero()
        } else if i == 1 || i == 2 {
            field.from_i64(-1)
        } else {
            field.one()
        }
    });
    let id = DenseMatrix::identity(field, 4);
    g_action_algebra(field, &group, mat2_algebra(field), &[id, conj]).expect("f5 fixture")
}

/// `k[C2]` graded by C2 (the group algebra with its group grading), as a
/// `k(C2)`-module algebra.
pub fn graded_c2(field: Field) -> ModuleAlgebra {
    let group = Group::cyclic(2);
    graded_algebra(field, &group, f4_algebra(field), &[0, 1]).expect("graded c2 fixture")
}

/// `k[S3]` graded by S3, as a `k(S3)`-module algebra. The largest fixture:
/// its smash product has dimension 36.
pub fn graded_s3(field: Field) -> ModuleAlgebra {
    let group = s3();
    let kg = group_hopf(field, &group);
    let alg = Algebra::new(kg.mul.clone(), kg.unit.clone()).expect("group algebra");
    let degrees: Vec<usize> = (0..group.order).collect();
    graded_algebra(field, &group, alg, &degrees).expect("graded s3 fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_hopf_fixtures_verify() {
        for field in [Field::Rational, Field::prime(7).unwrap()] {
            for h in [kc2(field), kc3(field), ks3(field), dual_ks3(field), sweedler(field)] {
                assert!(h.verify().all_passed(), "{}", h.verify());
            }
        }
    }

    #[test]
    fn all_module_fixtures_verify() {
        for field in [Field::Rational, Field::prime(7).unwrap()] {
            for m in [f4(field), f5(field), graded_c2(field), graded_s3(field)] {
                assert!(m.verify().all_passed(), "{}", m.verify());
            }
        }
    }
}
