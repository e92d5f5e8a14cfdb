//! The smash product `A # H` of a module algebra, its comodule-algebra
//! structure, the endomorphism-algebra map for the dual with its regular
//! action, and the correspondence between compatible pairs of
//! representations and smash-product representations.
//!
//! Basis ordering of `A # H` is fixed as algebra index major, Hopf index
//! minor: `(a_i # h_j) -> i * dim H + j`. The centre computation depends on
//! this ordering for reproducible output.

use crate::error::Error;
use crate::field::Scalar;
use crate::matrix::DenseMatrix;
use crate::modalg::ModuleAlgebra;
use crate::report::AxiomReport;
use crate::tensor::StructureTensor;
use crate::vecops;

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmashProduct {
    pub base: ModuleAlgebra,
    pub dim: usize,
    pub mul: StructureTensor,
    pub unit: Vec<Scalar>,
    /// Coaction tensor of `psi: A#H -> (A#H) (x) H`,
    /// `a # h -> sum a # h_(1) (x) h_(2)`; stored once and reused by the
    /// centre machinery.
    pub coaction: StructureTensor,
}

impl SmashProduct {
    /// Builds the multiplication from
    /// `(a # g)(b # h) = sum a g_(1)(b) # g_(2) h`.
    pub fn new(base: &ModuleAlgebra) -> SmashProduct {
        let m = base.alg.dim;
        let n = base.hopf.dim;
        let dim = m * n;
        let field = base.alg.field;
        let idx = |i: usize, j: usize| i * n + j;

        let mut mul = StructureTensor::new(field, (dim, dim, dim));
        for g in 0..n {
            for ((g1, g2), c) in base.hopf.comul.slice0(g) {
                for j in 0..m {
                    for (b, d) in base.action.slice01(g1, j) {
                        let cd = c.mul(d);
                        for i in 0..m {
                            for (t, ma) in base.alg.mul.slice01(i, b) {
                                let w = cd.mul(ma);
                                for h in 0..n {
                                    for (u, mh) in base.hopf.mul.slice01(g2, h) {
                                        mul.add(idx(i, g), idx(j, h), idx(t, u), w.mul(mh));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let unit = vecops::kron(&base.alg.unit, &base.hopf.unit);

        let mut coaction = StructureTensor::new(field, (dim, dim, n));
        for i in 0..m {
            for h in 0..n {
                for ((h1, h2), c) in base.hopf.comul.slice0(h) {
                    coaction.add(idx(i, h), idx(i, h1), h2, c.clone());
                }
            }
        }

        SmashProduct { base: base.clone(), dim, mul, unit, coaction }
    }

    pub fn index(&self, a: usize, h: usize) -> usize {
        a * self.base.hopf.dim + h
    }

    /// Embedding `a -> a # 1` of a coordinate vector of `A`.
    pub fn embed_algebra(&self, a: &[Scalar]) -> Vec<Scalar> {
        vecops::kron(a, &self.base.hopf.unit)
    }

    /// Embedding `h -> 1 # h` of a coordinate vector of `H`.
    pub fn embed_hopf(&self, h: &[Scalar]) -> Vec<Scalar> {
        vecops::kron(&self.base.alg.unit, h)
    }

    pub fn mul_elem(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.mul.bilinear(u, v)
    }

    /// Associativity, unit, and both embedding homomorphism properties.
    pub fn verify(&self) -> AxiomReport {
        let field = self.base.alg.field;
        let mut report = AxiomReport::new();

        report.record("smash_associativity", self.first_assoc_failure());

        let id = DenseMatrix::identity(field, self.dim);
        let left = self.mul.contract(0, &self.unit).expect("unit length");
        let right = self.mul.contract(1, &self.unit).expect("unit length");
        report.record(
            "smash_unit",
            if left == id && right == id { None } else { Some(vec![]) },
        );

        // (a#1)(b#1) = ab#1
        let m = self.base.alg.dim;
        let mut embed_a = None;
        'ea: for i in 0..m {
            for j in 0..m {
                let u = self.embed_algebra(&vecops::basis(field, m, i));
                let v = self.embed_algebra(&vecops::basis(field, m, j));
                let prod = self.mul_elem(&u, &v);
                let ab = self.base.alg.mul_elem(
                    &vecops::basis(field, m, i),
                    &vecops::basis(field, m, j),
                );
                if prod != self.embed_algebra(&ab) {
                    embed_a = Some(vec![i, j]);
                    break 'ea;
                }
            }
        }
        report.record("smash_algebra_embedding", embed_a);

        // (1#g)(1#h) = 1#gh
        let n = self.base.hopf.dim;
        let mut embed_h = None;
        'eh: for g in 0..n {
            for h in 0..n {
                let u = self.embed_hopf(&vecops::basis(field, n, g));
                let v = self.embed_hopf(&vecops::basis(field, n, h));
                let prod = self.mul_elem(&u, &v);
                let gh = self.base.hopf.mul_elem(
                    &vecops::basis(field, n, g),
                    &vecops::basis(field, n, h),
                );
                if prod != self.embed_hopf(&gh) {
                    embed_h = Some(vec![g, h]);
                    break 'eh;
                }
            }
        }
        report.record("smash_hopf_embedding", embed_h);

        report
    }

    fn first_assoc_failure(&self) -> Option<Vec<usize>> {
        let d = self.dim;
        let field = self.base.alg.field;
        for i in 0..d {
            for j in 0..d {
                let ij: Vec<(usize, Scalar)> =
                    self.mul.slice01(i, j).map(|(k, c)| (k, c.clone())).collect();
                for k in 0..d {
                    let mut lhs = vec![field.zero(); d];
                    for (s, c) in &ij {
                        for (t, dd) in self.mul.slice01(*s, k) {
                            lhs[t] = lhs[t].add(&c.mul(dd));
                        }
                    }
                    let mut rhs = vec![field.zero(); d];
                    for (s, c) in self.mul.slice01(j, k) {
                        for (t, dd) in self.mul.slice01(i, s) {
                            rhs[t] = rhs[t].add(&c.mul(dd));
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

    /// Verifies that the stored coaction is an algebra homomorphism
    /// `psi(uv) = psi(u) psi(v)` (componentwise product on `(A#H) (x) H`),
    /// coassociative and counital.
    pub fn verify_comodule(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        let d = self.dim;
        let hopf = &self.base.hopf;

        let mut algebra_map = None;
        'am: for u in 0..d {
            let psi_u: Vec<((usize, usize), Scalar)> =
                self.coaction.slice0(u).map(|(vk, c)| (vk, c.clone())).collect();
            for v in 0..d {
                let mut lhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                for (w, c) in self.mul.slice01(u, v) {
                    for ((w2, x), dd) in self.coaction.slice0(w) {
                        accumulate(&mut lhs, (w2, x), c.mul(dd));
                    }
                }
                let mut rhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                for ((v1, k1), c1) in &psi_u {
                    for ((v2, k2), c2) in self.coaction.slice0(v) {
                        let c12 = c1.mul(c2);
                        for (w, cm) in self.mul.slice01(*v1, v2) {
                            let cw = c12.mul(cm);
                            for (x, ch) in hopf.mul.slice01(*k1, k2) {
                                accumulate(&mut rhs, (w, x), cw.mul(ch));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    algebra_map = Some(vec![u, v]);
                    break 'am;
                }
            }
        }
        report.record("comodule_algebra_map", algebra_map);

        let mut coassoc = None;
        for u in 0..d {
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for ((v, k), c) in self.coaction.slice0(u) {
                for ((w, l), dd) in self.coaction.slice0(v) {
                    accumulate(&mut lhs, (w, l, k), c.mul(dd));
                }
                for ((k1, k2), dd) in hopf.comul.slice0(k) {
                    accumulate(&mut rhs, (v, k1, k2), c.mul(dd));
                }
            }
            if lhs != rhs {
                coassoc = Some(vec![u]);
                break;
            }
        }
        report.record("comodule_coassociative", coassoc);

        let field = self.base.alg.field;
        let mut counital = None;
        for u in 0..d {
            let mut acc = vec![field.zero(); d];
            for ((v, k), c) in self.coaction.slice0(u) {
                acc[v] = acc[v].add(&c.mul(&hopf.counit[k]));
            }
            if acc != vecops::basis(field, d, u) {
                counital = Some(vec![u]);
                break;
            }
        }
        report.record("comodule_counit", counital);

        report
    }
}

/// For each basis element `l # h` of `H* # H` (built from the dual with its
/// regular action), the operator `m -> l . h(m)` on `H*`, together with the
/// assembled linear map `H* # H -> End(H*)`.
pub struct ThetaMap {
    pub operators: Vec<DenseMatrix>,
    pub assembled: DenseMatrix,
}

/// Requires the smash product of [`crate::modalg::dual_regular_module_algebra`];
/// the assembled map is checked to be bijective and an error is returned
/// otherwise (bijectivity is forced for any valid construction, so failure
/// signals a bug, not bad input).
pub fn theta_map(smash: &SmashProduct) -> Result<ThetaMap, Error> {
    let hopf = &smash.base.hopf;
    let n = hopf.dim;
    if smash.base.alg.dim != n {
        return Err(Error::DimensionMismatch(
            "theta needs the dual with its regular action as base".into(),
        ));
    }
    let field = hopf.field;
    let mut operators = Vec::with_capacity(n * n);
    for i in 0..n {
        for h in 0..n {
            // T[k][j] = coefficient of l_k in l_i . (e_h . l_j).
            let mut t = DenseMatrix::zero(field, n, n);
            for j in 0..n {
                for (b, d) in smash.base.action.slice01(h, j) {
                    for (k, ma) in smash.base.alg.mul.slice01(i, b) {
                        let updated = t.get(k, j).add(&d.mul(ma));
                        t.set(k, j, updated);
                    }
                }
            }
            operators.push(t);
        }
    }
    let assembled = DenseMatrix::from_fn(field, n * n, n * n, |row, col| {
        let (k, j) = (row / n, row % n);
        operators[col].get(k, j).clone()
    });
    let rank = assembled.rank();
    if rank != n * n {
        return Err(Error::NotBijective { rank, expected: n * n });
    }
    Ok(ThetaMap { operators, assembled })
}

/// Builds the smash-product representation `(a # h) -> repA(a) repH(h)` from
/// a compatible pair, validating that `repA` and `repH` are representations
/// and that `h(a m) = sum h_(1)(a) h_(2)(m)` holds; the first violation is
/// reported as a witness triple.
pub fn module_correspondence(
    base: &ModuleAlgebra,
    rep_a: &[DenseMatrix],
    rep_h: &[DenseMatrix],
) -> Result<Vec<DenseMatrix>, Error> {
    let m = base.alg.dim;
    let n = base.hopf.dim;
    if rep_a.len() != m || rep_h.len() != n {
        return Err(Error::DimensionMismatch("representation family sizes".into()));
    }
    let d = rep_a.first().map(|r| r.rows).unwrap_or(0);
    let field = base.alg.field;
    for r in rep_a.iter().chain(rep_h.iter()) {
        if r.rows != d || r.cols != d {
            return Err(Error::DimensionMismatch("representation matrix shapes".into()));
        }
    }

    let lincomb = |coeffs: &[Scalar], mats: &[DenseMatrix]| -> DenseMatrix {
        let mut acc = DenseMatrix::zero(field, d, d);
        for (c, mat) in coeffs.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&DenseMatrix::from_fn(field, d, d, |r, s| c.mul(mat.get(r, s))));
        }
        acc
    };

    // repA is an A-module.
    for i in 0..m {
        for j in 0..m {
            let mut expected = vec![field.zero(); m];
            for (k, c) in base.alg.mul.slice01(i, j) {
                expected[k] = expected[k].add(c);
            }
            if rep_a[i].mat_mul(&rep_a[j]) != lincomb(&expected, rep_a) {
                return Err(Error::Internal(format!(
                    "repA is not a representation at basis pair ({i},{j})"
                )));
            }
        }
    }
    if lincomb(&base.alg.unit, rep_a) != DenseMatrix::identity(field, d) {
        return Err(Error::Internal("repA does not send the unit to the identity".into()));
    }
    // repH is an H-module.
    for i in 0..n {
        for j in 0..n {
            let mut expected = vec![field.zero(); n];
            for (k, c) in base.hopf.mul.slice01(i, j) {
                expected[k] = expected[k].add(c);
            }
            if rep_h[i].mat_mul(&rep_h[j]) != lincomb(&expected, rep_h) {
                return Err(Error::Internal(format!(
                    "repH is not a representation at basis pair ({i},{j})"
                )));
            }
        }
    }
    if lincomb(&base.hopf.unit, rep_h) != DenseMatrix::identity(field, d) {
        return Err(Error::Internal("repH does not send the unit to the identity".into()));
    }

    // Compatibility: h(a m) = sum h_(1)(a) h_(2)(m).
    for h in 0..n {
        for a in 0..m {
            let lhs = rep_h[h].mat_mul(&rep_a[a]);
            let mut rhs = DenseMatrix::zero(field, d, d);
            for ((h1, h2), c) in base.hopf.comul.slice0(h) {
                for (k, d1) in base.action.slice01(h1, a) {
                    let cd = c.mul(d1);
                    let term = rep_a[k].mat_mul(&rep_h[h2]);
                    rhs = rhs.add(&DenseMatrix::from_fn(field, d, d, |r, s| {
                        cd.mul(term.get(r, s))
                    }));
                }
            }
            if lhs != rhs {
                let witness = (0..d * d)
                    .find(|&t| lhs.get(t / d, t % d) != rhs.get(t / d, t % d))
                    .unwrap_or(0);
                return Err(Error::IncompatibleRepresentation { h, a, m: witness % d });
            }
        }
    }

    let mut out = Vec::with_capacity(m * n);
    for i in 0..m {
        for h in 0..n {
            out.push(rep_a[i].mat_mul(&rep_h[h]));
        }
    }
    Ok(out)
}

/// Splits a smash-product representation through the two embeddings:
/// `repA(a_i) = rep(a_i # 1)`, `repH(h) = rep(1 # h)`.
pub fn split_smash_representation(
    smash: &SmashProduct,
    rep: &[DenseMatrix],
) -> (Vec<DenseMatrix>, Vec<DenseMatrix>) {
    let m = smash.base.alg.dim;
    let n = smash.base.hopf.dim;
    let d = rep[0].rows;
    let field = smash.base.alg.field;
    let combine = |coords: &[Scalar]| -> DenseMatrix {
        let mut acc = DenseMatrix::zero(field, d, d);
        for (c, mat) in coords.iter().zip(rep) {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&DenseMatrix::from_fn(field, d, d, |r, s| c.mul(mat.get(r, s))));
        }
        acc
    };
    let rep_a = (0..m)
        .map(|i| combine(&smash.embed_algebra(&vecops::basis(field, m, i))))
        .collect();
    let rep_h = (0..n)
        .map(|h| combine(&smash.embed_hopf(&vecops::basis(field, n, h))))
        .collect();
    (rep_a, rep_h)
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, value: Scalar) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(slot) => {
            *slot = slot.add(&value);
            if slot.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, value);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::fixtures;
    use crate::modalg::{dual_regular_module_algebra, trivial_module_algebra};

    #[test]
    fn trivial_base_gives_h_itself() {
        let h = fixtures::sweedler(Field::Rational);
        let s = SmashProduct::new(&trivial_module_algebra(&h));
        assert_eq!(s.dim, h.dim);
        assert_eq!(s.mul, h.mul);
        assert!(s.verify().all_passed());
        assert!(s.verify_comodule().all_passed());
    }

    #[test]
    fn f4_smash_relations() {
        let field = Field::Rational;
        let s = SmashProduct::new(&fixtures::f4(field));
        assert!(s.verify().all_passed());
        assert!(s.verify_comodule().all_passed());

        // (x#1)(1#g) = x#g but (1#g)(x#1) = -x#g.
        let x1 = vecops::basis(field, 4, s.index(1, 0));
        let g1 = vecops::basis(field, 4, s.index(0, 1));
        let xg = vecops::basis(field, 4, s.index(1, 1));
        assert_eq!(s.mul_elem(&x1, &g1), xg);
        assert_eq!(s.mul_elem(&g1, &x1), vecops::scale(&field.from_i64(-1), &xg));
    }

    #[test]
    fn coaction_formulas() {
        let field = Field::Rational;
        // Grouplike coproduct: psi(x#g) = x#g (x) g on F4.
        let s = SmashProduct::new(&fixtures::f4(field));
        let entries: Vec<_> = s.coaction.slice0(s.index(1, 1)).collect();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].0, (s.index(1, 1), 1));

        // Sweedler with trivial coefficients: psi(1#x) = 1#x (x) 1 + 1#g (x) x.
        let h = fixtures::sweedler(field);
        let st = SmashProduct::new(&trivial_module_algebra(&h));
        let entries: Vec<_> = st.coaction.slice0(st.index(0, 2)).collect();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].0, (st.index(0, 1), 2));
        assert_eq!(entries[1].0, (st.index(0, 2), 0));
    }

    #[test]
    fn theta_is_bijective_for_small_hopf_algebras() {
        for h in [
            fixtures::kc2(Field::Rational),
            fixtures::sweedler(Field::Rational),
        ] {
            let s = SmashProduct::new(&dual_regular_module_algebra(&h));
            let theta = theta_map(&s).expect("theta bijective");
            assert_eq!(theta.assembled.rank(), h.dim * h.dim);
        }
    }

    #[test]
    fn theta_trivial_hopf_is_identity() {
        // H = k: one-dimensional Hopf algebra.
        let field = Field::Rational;
        let mut mul = StructureTensor::new(field, (1, 1, 1));
        mul.add(0, 0, 0, field.one());
        let mut comul = StructureTensor::new(field, (1, 1, 1));
        comul.add(0, 0, 0, field.one());
        let h = crate::hopf::HopfAlgebra::new(
            mul,
            vec![field.one()],
            comul,
            vec![field.one()],
            None,
        )
        .unwrap();
        let s = SmashProduct::new(&dual_regular_module_algebra(&h));
        let theta = theta_map(&s).unwrap();
        assert_eq!(theta.assembled, DenseMatrix::identity(field, 1));
    }

    #[test]
    fn module_correspondence_roundtrip() {
        let field = Field::Rational;
        let base = fixtures::f4(field);
        let s = SmashProduct::new(&base);

        // A acting on itself; H acting through the module-algebra action.
        let rep_a: Vec<DenseMatrix> = (0..2)
            .map(|i| {
                base.alg
                    .mul
                    .contract(0, &vecops::basis(field, 2, i))
                    .unwrap()
                    .transpose()
            })
            .collect();
        let rep_h: Vec<DenseMatrix> = (0..2)
            .map(|h| {
                base.action
                    .contract(0, &vecops::basis(field, 2, h))
                    .unwrap()
                    .transpose()
            })
            .collect();
        let rep = module_correspondence(&base, &rep_a, &rep_h).expect("compatible pair");
        assert_eq!(rep.len(), 4);

        // Smash relation (1#g)(x#1) = g(x)#g = -x#g.
        let g = &rep[s.index(0, 1)];
        let x = &rep[s.index(1, 0)];
        let xg = &rep[s.index(1, 1)];
        assert_eq!(
            g.mat_mul(x),
            DenseMatrix::from_fn(field, 2, 2, |r, c| field.from_i64(-1).mul(xg.get(r, c)))
        );

        let (back_a, back_h) = split_smash_representation(&s, &rep);
        assert_eq!(back_a, rep_a);
        assert_eq!(back_h, rep_h);
    }

    #[test]
    fn incompatible_pair_rejected() {
        let field = Field::Rational;
        let base = fixtures::f4(field);
        let rep_a: Vec<DenseMatrix> = (0..2)
            .map(|i| {
                base.alg
                    .mul
                    .contract(0, &vecops::basis(field, 2, i))
                    .unwrap()
                    .transpose()
            })
            .collect();
        // Trivial H-action on a faithful A-module is incompatible with the
        // sign action on x.
        let rep_h = vec![DenseMatrix::identity(field, 2), DenseMatrix::identity(field, 2)];
        let err = module_correspondence(&base, &rep_a, &rep_h);
        assert!(matches!(err, Err(Error::IncompatibleRepresentation { .. })));
    }
}
