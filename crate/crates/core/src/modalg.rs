//! Module algebras over a Hopf algebra and the concrete builders: the
//! trivial algebra, the dual with its regular action, matrix amplification,
//! group algebras and their duals, algebras with a group action, and graded
//! algebras.

use crate::error::Error;
use crate::field::{Field, Scalar};
use crate::hopf::HopfAlgebra;
use crate::matrix::DenseMatrix;
use crate::report::AxiomReport;
use crate::tensor::StructureTensor;
use crate::vecops;

/// An associative unital algebra by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    pub field: Field,
    pub mul: StructureTensor,
    pub unit: Vec<Scalar>,
}

impl Algebra {
    pub fn new(mul: StructureTensor, unit: Vec<Scalar>) -> Result<Self, Error> {
        let m = unit.len();
        if mul.dims != (m, m, m) {
            return Err(Error::DimensionMismatch(format!(
                "algebra tensors inconsistent with dimension {m}"
            )));
        }
        if unit.iter().any(|s| s.field() != mul.field) {
            return Err(Error::MixedFields);
        }
        Ok(Algebra { dim: m, field: mul.field, mul, unit })
    }

    pub fn mul_elem(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.mul.bilinear(u, v)
    }

    pub fn verify(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        report.record("algebra_associativity", self.first_assoc_failure());
        let id = DenseMatrix::identity(self.field, self.dim);
        let left = self.mul.contract(0, &self.unit).expect("unit length");
        let right = self.mul.contract(1, &self.unit).expect("unit length");
        report.record(
            "algebra_unit",
            if left == id && right == id { None } else { Some(vec![]) },
        );
        report
    }

    fn first_assoc_failure(&self) -> Option<Vec<usize>> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij: Vec<(usize, Scalar)> =
                    self.mul.slice01(i, j).map(|(k, c)| (k, c.clone())).collect();
                for k in 0..n {
                    let mut lhs = vec![self.field.zero(); n];
                    for (s, c) in &ij {
                        for (t, d) in self.mul.slice01(*s, k) {
                            lhs[t] = lhs[t].add(&c.mul(d));
                        }
                    }
                    let mut rhs = vec![self.field.zero(); n];
                    for (s, c) in self.mul.slice01(j, k) {
                        for (t, d) in self.mul.slice01(i, s) {
                            rhs[t] = rhs[t].add(&c.mul(d));
                        }
                    }
                    if lhs != rhs {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }
}

/// An algebra in the module category of `hopf`: the action tensor stores
/// `e_h(a_j) = sum_k action[h][j][k] a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAlgebra {
    pub hopf: HopfAlgebra,
    pub alg: Algebra,
    pub action: StructureTensor,
}

impl ModuleAlgebra {
    pub fn new(hopf: HopfAlgebra, alg: Algebra, action: StructureTensor) -> Result<Self, Error> {
        if action.dims != (hopf.dim, alg.dim, alg.dim) {
            return Err(Error::DimensionMismatch(format!(
                "action tensor dims {:?} for hopf dim {} and algebra dim {}",
                action.dims, hopf.dim, alg.dim
            )));
        }
        if hopf.field != alg.field || action.field != alg.field {
            return Err(Error::MixedFields);
        }
        Ok(ModuleAlgebra { hopf, alg, action })
    }

    /// Applies a Hopf element to an algebra element.
    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action.bilinear(h, a)
    }

    /// Checks the algebra axioms, the module axioms, the module-algebra law
    /// `h(ab) = sum h_(1)(a) h_(2)(b)` and the unit law
    /// `h(1) = counit(h) 1`, each on all basis tuples.
    pub fn verify(&self) -> AxiomReport {
        let mut report = self.alg.verify();
        let n = self.hopf.dim;
        let m = self.alg.dim;
        let field = self.alg.field;

        // (gh)(a) = g(h(a))
        let mut composition = None;
        'comp: for g in 0..n {
            for h in 0..n {
                let gh: Vec<(usize, Scalar)> = self
                    .hopf
                    .mul
                    .slice01(g, h)
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                for a in 0..m {
                    let mut lhs = vec![field.zero(); m];
                    for (k, c) in &gh {
                        for (t, d) in self.action.slice01(*k, a) {
                            lhs[t] = lhs[t].add(&c.mul(d));
                        }
                    }
                    let mut rhs = vec![field.zero(); m];
                    for (b, c) in self.action.slice01(h, a) {
                        for (t, d) in self.action.slice01(g, b) {
                            rhs[t] = rhs[t].add(&c.mul(d));
                        }
                    }
                    if lhs != rhs {
                        composition = Some(vec![g, h, a]);
                        break 'comp;
                    }
                }
            }
        }
        report.record("module_composition", composition);

        let unit_action = self.action.contract(0, &self.hopf.unit).expect("unit length");
        report.record(
            "module_unit",
            if unit_action == DenseMatrix::identity(field, m) {
                None
            } else {
                Some(vec![])
            },
        );

        // h(ab) = sum h_(1)(a) h_(2)(b)
        let mut law = None;
        'law: for h in 0..n {
            let legs: Vec<((usize, usize), Scalar)> = self.hopf.comul_basis(h);
            for i in 0..m {
                for j in 0..m {
                    let mut lhs = vec![field.zero(); m];
                    for (k, c) in self.alg.mul.slice01(i, j) {
                        for (t, d) in self.action.slice01(h, k) {
                            lhs[t] = lhs[t].add(&c.mul(d));
                        }
                    }
                    let mut rhs = vec![field.zero(); m];
                    for ((h1, h2), c) in &legs {
                        for (u, d1) in self.action.slice01(*h1, i) {
                            let cu = c.mul(d1);
                            for (v, d2) in self.action.slice01(*h2, j) {
                                let cv = cu.mul(d2);
                                for (t, mm) in self.alg.mul.slice01(u, v) {
                                    rhs[t] = rhs[t].add(&cv.mul(mm));
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        law = Some(vec![h, i, j]);
                        break 'law;
                    }
                }
            }
        }
        report.record("module_algebra_law", law);

        // h(1_A) = counit(h) 1_A
        let mut unit_law = None;
        for h in 0..n {
            let image = self.act(&vecops::basis(field, n, h), &self.alg.unit);
            if image != vecops::scale(&self.hopf.counit[h], &self.alg.unit) {
                unit_law = Some(vec![h]);
                break;
            }
        }
        report.record("action_unit_law", unit_law);

        report
    }
}

/// A finite group by its Cayley table. `cayley[i][j]` is the index of
/// `g_i g_j`; construction validates the full group laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub order: usize,
    pub cayley: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl Group {
    pub fn new(cayley: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for row in &cayley {
            if row.len() != n || row.iter().any(|&e| e >= n) {
                return Err(Error::NotAGroup("table is not square over 0..n".into()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| cayley[e][i] == i && cayley[i][e] == i))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for i in 0..n {
            inverse[i] = (0..n)
                .find(|&j| cayley[i][j] == identity && cayley[j][i] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {i} has no inverse")))?;
        }
        Ok(Group { order: n, cayley, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Group {
        let cayley = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Group::new(cayley).expect("cyclic table is a group")
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i][j]
    }

    pub fn conj(&self, f: usize, g: usize) -> usize {
        self.mul(self.mul(f, g), self.inverse[f])
    }
}

/// The group Hopf algebra `k[G]`: grouplike basis, inversion antipode.
pub fn group_hopf(field: Field, group: &Group) -> HopfAlgebra {
    let n = group.order;
    let mut mul = StructureTensor::new(field, (n, n, n));
    let mut comul = StructureTensor::new(field, (n, n, n));
    let mut antipode = DenseMatrix::zero(field, n, n);
    for i in 0..n {
        for j in 0..n {
            mul.add(i, j, group.mul(i, j), field.one());
        }
        comul.add(i, i, i, field.one());
        antipode.set(group.inverse[i], i, field.one());
    }
    let unit = vecops::basis(field, n, group.identity);
    let counit = vec![field.one(); n];
    HopfAlgebra::new(mul, unit, comul, counit, Some(antipode)).expect("group hopf dims")
}

/// The dual `k(G)` on the idempotent basis `p_g`.
pub fn dual_group_hopf(field: Field, group: &Group) -> HopfAlgebra {
    let n = group.order;
    let mut mul = StructureTensor::new(field, (n, n, n));
    let mut comul = StructureTensor::new(field, (n, n, n));
    let mut antipode = DenseMatrix::zero(field, n, n);
    for g in 0..n {
        mul.add(g, g, g, field.one());
        antipode.set(group.inverse[g], g, field.one());
    }
    for u in 0..n {
        for v in 0..n {
            comul.add(group.mul(u, v), u, v, field.one());
        }
    }
    let unit = vec![field.one(); n];
    let mut counit = vec![field.zero(); n];
    counit[group.identity] = field.one();
    HopfAlgebra::new(mul, unit, comul, counit, Some(antipode)).expect("dual group hopf dims")
}

/// The trivial module algebra `k` with the counit action.
pub fn trivial_module_algebra(hopf: &HopfAlgebra) -> ModuleAlgebra {
    let field = hopf.field;
    let mut mul = StructureTensor::new(field, (1, 1, 1));
    mul.add(0, 0, 0, field.one());
    let alg = Algebra::new(mul, vec![field.one()]).expect("trivial algebra");
    let mut action = StructureTensor::new(field, (hopf.dim, 1, 1));
    for h in 0..hopf.dim {
        if !hopf.counit[h].is_zero() {
            action.add(h, 0, 0, hopf.counit[h].clone());
        }
    }
    ModuleAlgebra::new(hopf.clone(), alg, action).expect("trivial module algebra dims")
}

/// The dual `H*` with the regular action `(h . l)(g) = l(gh)`. The algebra
/// structure is the transpose of the coproduct.
pub fn dual_regular_module_algebra(hopf: &HopfAlgebra) -> ModuleAlgebra {
    let n = hopf.dim;
    let field = hopf.field;
    let mut mul = StructureTensor::new(field, (n, n, n));
    for (&(k, i, j), c) in hopf.comul.iter() {
        mul.add(i, j, k, c.clone());
    }
    let alg = Algebra::new(mul, hopf.counit.clone()).expect("dual algebra dims");
    // (h . l_j)(e_k) = l_j(e_k e_h) = mul[k][h][j]
    let mut action = StructureTensor::new(field, (n, n, n));
    for (&(k, h, j), c) in hopf.mul.iter() {
        action.add(h, j, k, c.clone());
    }
    ModuleAlgebra::new(hopf.clone(), alg, action).expect("dual regular dims")
}

/// `Mat_r(A) = Mat_r(k) (x) A` with the entrywise action (trivial on matrix
/// units). Basis ordering: matrix unit `E_{pq}` major (lexicographic in
/// `(p, q)`), algebra index minor.
pub fn matrix_amplify(m: &ModuleAlgebra, r: usize) -> ModuleAlgebra {
    assert!(r >= 1, "amplification size must be positive");
    let a = &m.alg;
    let dim = r * r * a.dim;
    let field = a.field;
    let idx = |p: usize, q: usize, i: usize| (p * r + q) * a.dim + i;
    let mut mul = StructureTensor::new(field, (dim, dim, dim));
    for (&(i, j, k), c) in a.mul.iter() {
        for p in 0..r {
            for q in 0..r {
                for s in 0..r {
                    mul.add(idx(p, q, i), idx(q, s, j), idx(p, s, k), c.clone());
                }
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    for p in 0..r {
        for (i, u) in a.unit.iter().enumerate() {
            unit[idx(p, p, i)] = u.clone();
        }
    }
    let alg = Algebra::new(mul, unit).expect("amplified algebra dims");
    let mut action = StructureTensor::new(field, (m.hopf.dim, dim, dim));
    for (&(h, i, k), c) in m.action.iter() {
        for p in 0..r {
            for q in 0..r {
                action.add(h, idx(p, q, i), idx(p, q, k), c.clone());
            }
        }
    }
    ModuleAlgebra::new(m.hopf.clone(), alg, action).expect("amplified dims")
}

/// A `k[G]`-module algebra from one automorphism matrix per group element.
/// Matrices are validated to be unital algebra endomorphisms respecting the
/// Cayley table (whence automorphisms).
pub fn g_action_algebra(
    field: Field,
    group: &Group,
    alg: Algebra,
    matrices: &[DenseMatrix],
) -> Result<ModuleAlgebra, Error> {
    let n = group.order;
    let m = alg.dim;
    if matrices.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "need {n} matrices, got {}",
            matrices.len()
        )));
    }
    for (g, mat) in matrices.iter().enumerate() {
        if mat.rows != m || mat.cols != m {
            return Err(Error::DimensionMismatch(format!("matrix {g} is not {m}x{m}")));
        }
        if mat.apply(&alg.unit) != alg.unit {
            return Err(Error::NotAnAutomorphism {
                element: g,
                witness: "unit not preserved".into(),
            });
        }
        for i in 0..m {
            for j in 0..m {
                let lhs = mat.apply(&alg.mul_elem(
                    &vecops::basis(field, m, i),
                    &vecops::basis(field, m, j),
                ));
                let rhs = alg.mul_elem(&mat.column(i), &mat.column(j));
                if lhs != rhs {
                    return Err(Error::NotAnAutomorphism {
                        element: g,
                        witness: format!("product of basis ({i},{j})"),
                    });
                }
            }
        }
    }
    if matrices[group.identity] != DenseMatrix::identity(field, m) {
        return Err(Error::CayleyViolation(group.identity, group.identity));
    }
    for f in 0..n {
        for g in 0..n {
            if matrices[f].mat_mul(&matrices[g]) != matrices[group.mul(f, g)] {
                return Err(Error::CayleyViolation(f, g));
            }
        }
    }
    let hopf = group_hopf(field, group);
    let mut action = StructureTensor::new(field, (n, m, m));
    for (g, mat) in matrices.iter().enumerate() {
        for j in 0..m {
            for k in 0..m {
                let c = mat.get(k, j);
                if !c.is_zero() {
                    action.add(g, j, k, c.clone());
                }
            }
        }
    }
    ModuleAlgebra::new(hopf, alg, action)
}

/// A `k(G)`-module algebra from a `G`-grading: `deg[i]` is the degree of the
/// `i`-th basis vector, `p_g` acts as the projection onto degree `g`.
/// Structure constants violating `A_f A_g <= A_{fg}` are rejected with the
/// offending triple, as is a unit not concentrated in the identity degree.
pub fn graded_algebra(
    field: Field,
    group: &Group,
    alg: Algebra,
    degrees: &[usize],
) -> Result<ModuleAlgebra, Error> {
    let m = alg.dim;
    if degrees.len() != m || degrees.iter().any(|&d| d >= group.order) {
        return Err(Error::DimensionMismatch("degree assignment".into()));
    }
    for (&(i, j, k), _) in alg.mul.iter() {
        if group.mul(degrees[i], degrees[j]) != degrees[k] {
            return Err(Error::GradingViolation {
                i,
                j,
                k,
                di: degrees[i],
                dj: degrees[j],
                dk: degrees[k],
            });
        }
    }
    for (i, u) in alg.unit.iter().enumerate() {
        if !u.is_zero() && degrees[i] != group.identity {
            return Err(Error::UnitDegree(i));
        }
    }
    let hopf = dual_group_hopf(field, group);
    let mut action = StructureTensor::new(field, (group.order, m, m));
    for (i, &d) in degrees.iter().enumerate() {
        action.add(d, i, i, field.one());
    }
    ModuleAlgebra::new(hopf, alg, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_module_algebra_passes() {
        for h in [
            fixtures::kc2(Field::Rational),
            fixtures::sweedler(Field::Rational),
        ] {
            let m = trivial_module_algebra(&h);
            assert!(m.verify().all_passed());
        }
    }

    #[test]
    fn f4_passes_and_sign_mutation_fails() {
        let m = fixtures::f4(Field::Rational);
        assert!(m.verify().all_passed());

        // Flipping only g(x) -> +x would produce the (valid) trivial action,
        // so flip the sign on the unit slot instead: g(1) = -1 breaks the
        // unit law.
        let mut action = m.action.clone();
        action.add(1, 0, 0, Field::Rational.from_i64(-2));
        let broken = ModuleAlgebra::new(m.hopf.clone(), m.alg.clone(), action).unwrap();
        let report = broken.verify();
        assert!(!report.all_passed());
        assert!(report.failures().next().unwrap().counterexample.is_some());
    }

    #[test]
    fn dual_regular_passes() {
        for h in [
            fixtures::kc2(Field::Rational),
            fixtures::sweedler(Field::Rational),
        ] {
            let m = dual_regular_module_algebra(&h);
            assert!(m.verify().all_passed(), "{}", m.verify());
            // 1_H acts as the identity.
            let unit_action = m.action.contract(0, &m.hopf.unit).unwrap();
            assert_eq!(unit_action, DenseMatrix::identity(m.alg.field, m.alg.dim));
        }
    }

    #[test]
    fn dual_regular_on_c2_permutes_dual_basis() {
        let m = dual_regular_module_algebra(&fixtures::kc2(Field::Rational));
        // g . l_0 = l_1 and g . l_1 = l_0: expanding l(gh) on the 2-element
        // group swaps the dual basis.
        assert!(m.action.get(1, 0, 1).is_one());
        assert!(m.action.get(1, 1, 0).is_one());
        assert!(m.action.get(1, 0, 0).is_zero());
    }

    #[test]
    fn matrix_amplify_passes() {
        let m = fixtures::f4(Field::Rational);
        let amped = matrix_amplify(&m, 2);
        assert_eq!(amped.alg.dim, 8);
        assert!(amped.verify().all_passed());

        let same = matrix_amplify(&m, 1);
        assert_eq!(same.alg, m.alg);
        assert_eq!(same.action, m.action);

        // The action on E_{00} (x) 1 is by the counit.
        let field = Field::Rational;
        let mut e00_unit = vec![field.zero(); 8];
        e00_unit[0] = field.one();
        for h in 0..2 {
            let image = amped.act(&vecops::basis(field, 2, h), &e00_unit);
            assert_eq!(image, vecops::scale(&amped.hopf.counit[h], &e00_unit));
        }
    }

    #[test]
    fn group_hopf_constructions_pass() {
        let c2 = Group::cyclic(2);
        let s3 = fixtures::s3();
        for g in [&c2, &s3] {
            let kg = group_hopf(Field::Rational, g);
            assert!(kg.verify().all_passed());
            let dual = dual_group_hopf(Field::Rational, g);
            assert!(dual.verify().all_passed());
            // Antipode of a group algebra is inversion, so S^2 = id.
            assert_eq!(
                kg.antipode.mat_mul(&kg.antipode),
                DenseMatrix::identity(Field::Rational, g.order)
            );
        }
        assert_eq!(
            dual_group_hopf(Field::Rational, &c2),
            group_hopf(Field::Rational, &c2).dual()
        );
    }

    #[test]
    fn bad_cayley_table_rejected() {
        // Left-translation table mangled so no identity exists.
        let bad = Group::new(vec![vec![1, 1], vec![1, 0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn g_action_algebra_validates_automorphisms() {
        let f5 = fixtures::f5(Field::Rational);
        assert!(f5.verify().all_passed());

        // A non-automorphism (kills the unit) is rejected with a witness.
        let field = Field::Rational;
        let group = Group::cyclic(2);
        let alg = fixtures::f4(field).alg;
        let bad = DenseMatrix::zero(field, 2, 2);
        let err = g_action_algebra(
            field,
            &group,
            alg.clone(),
            &[DenseMatrix::identity(field, 2), bad],
        );
        assert!(matches!(err, Err(Error::NotAnAutomorphism { .. })));

        // Genuine automorphisms that do not satisfy the C3 relations:
        // x -> -x has order 2, so assigning it to a generator of C3 breaks
        // the Cayley compatibility.
        let c3 = Group::cyclic(3);
        let d = DenseMatrix::from_fn(field, 2, 2, |i, j| {
            if (i, j) == (1, 1) {
                field.from_i64(-1)
            } else if i == j {
                field.one()
            } else {
                field.zero()
            }
        });
        let id = DenseMatrix::identity(field, 2);
        let err = g_action_algebra(field, &c3, alg, &[id.clone(), d, id]);
        assert!(matches!(err, Err(Error::CayleyViolation(..))));
    }

    #[test]
    fn graded_algebra_checks_grading() {
        let field = Field::Rational;
        let m = fixtures::graded_c2(field);
        assert!(m.verify().all_passed());
        // Projections: commuting idempotents summing to the identity.
        let g = Group::cyclic(2);
        let mut sum = DenseMatrix::zero(field, 2, 2);
        for gi in 0..2 {
            let p = m.action.contract(0, &vecops::basis(field, 2, gi)).unwrap();
            assert_eq!(p.mat_mul(&p), p);
            sum = sum.add(&p);
        }
        assert_eq!(sum, DenseMatrix::identity(field, 2));

        // Mis-graded input: x in degree g but x.x lands in degree g.
        let mut mul = StructureTensor::new(field, (2, 2, 2));
        mul.add(0, 0, 0, field.one());
        mul.add(0, 1, 1, field.one());
        mul.add(1, 0, 1, field.one());
        mul.add(1, 1, 1, field.one()); // x.x = x: degree g+g = e but lands in g
        let alg = Algebra::new(mul, vecops::basis(field, 2, 0)).unwrap();
        let err = graded_algebra(field, &g, alg, &[0, 1]);
        assert!(matches!(err, Err(Error::GradingViolation { .. })));
    }
}
