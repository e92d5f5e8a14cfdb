//! The full centre of a module algebra: the centraliser of `A` inside
//! `A # H`, its Yetter-Drinfeld structure, the canonical projection to `A`,
//! and the independent cross-checks against `C_l(R(A))`, against the
//! opposite-Hopf description for the trivial algebra, and against matrix
//! amplification.
//!
//! The centre's multiplication is the full-centre multiplication
//! transported from `H (x) A` through the embedding `a#h -> S^{-1}(h) (x) a`.
//! That embedding reverses products, so on the centraliser subspace the
//! induced multiplication is the reversed smash product `z o z' = z' z`
//! (the two agree by the centrality relation). The trivial-algebra
//! comparison uses the inherited smash product in exactly the form that
//! makes `a#h -> counit(a) S^{-1}(h)` an isomorphism onto the opposite
//! Hopf algebra.

use crate::error::Error;
use crate::field::Scalar;
use crate::hopf::HopfAlgebra;
use crate::matrix::{canonical_span, kernel_basis, solve_in_columns, DenseMatrix};
use crate::modalg::{matrix_amplify, trivial_module_algebra, Algebra, ModuleAlgebra};
use crate::report::AxiomReport;
use crate::smash::SmashProduct;
use crate::tensor::StructureTensor;
use crate::vecops;
use crate::yd::{
    left_centre, quantum_commutative_check, r_lax_product, SubYdAlgebra, YdAlgebra, YdModule,
};

/// Which way the antipode enters the centre's Yetter-Drinfeld structure
/// and the embedding into `H (x) A`. The two variants are mirror images;
/// they coincide whenever `S^2 = id`. `Inverse` is the primary package
/// (coaction through `S^{-1}`, embedding `a#h -> S^{-1}(h) (x) a`); when a
/// computation shows it does not close on the centraliser (possible only
/// with `S^2 != id` and a faithful action), the mirrored `Plain` package is
/// used instead and the choice is reported, never silently accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodeDirection {
    Inverse,
    Plain,
}

impl AntipodeDirection {
    pub fn describe(&self) -> &'static str {
        match self {
            AntipodeDirection::Inverse => "inverse antipode",
            AntipodeDirection::Plain => "plain antipode",
        }
    }
}

/// The computed full centre `Z(A) = C_{A#H}(A)`.
#[derive(Debug, Clone)]
pub struct FullCentre {
    pub smash: SmashProduct,
    /// RREF-canonical basis of the centraliser inside `A # H`.
    pub basis: Vec<Vec<Scalar>>,
    /// Antipode direction of the ambient structure below.
    pub direction: AntipodeDirection,
    /// Action of `H` on all of `A # H`: with the `Inverse` direction,
    /// `h(a#g) = sum h_(2)(a) # S^2(h_(3)) g S(h_(1))`; with `Plain`,
    /// `h(a#g) = sum h_(2)(a) # h_(3) g S^{-1}(h_(1))`.
    pub ambient_action: StructureTensor,
    /// Coaction on all of `A # H`: with `Inverse`,
    /// `psi(a#g) = sum S^{-1}(g_(2)) (x) a#g_(1)`; with `Plain`, `S` takes
    /// the place of `S^{-1}`.
    pub ambient_coaction: StructureTensor,
    /// The restricted quantum commutative YD algebra on the centre.
    pub yd: YdAlgebra,
    /// `Z(A) -> A`, `sum a_i # g_i -> sum counit(g_i) a_i`, in centre
    /// coordinates.
    pub canonical_to_a: DenseMatrix,
    /// Verification of the restricted structure.
    pub report: AxiomReport,
}

impl FullCentre {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Ordered basis of the centraliser `C_{A#H}(A)`: the kernel of the stacked
/// commutator maps `v -> (a_j # 1) v - v (a_j # 1)`, in the canonical RREF
/// parametrization.
pub fn centralizer(smash: &SmashProduct) -> Vec<Vec<Scalar>> {
    let m = smash.base.alg.dim;
    let field = smash.base.alg.field;
    let d = smash.dim;
    let mut stacked = DenseMatrix::zero(field, m * d, d);
    for j in 0..m {
        let aj = smash.embed_algebra(&vecops::basis(field, m, j));
        let left = smash.mul.contract(0, &aj).expect("embed length").transpose();
        let right = smash.mul.contract(1, &aj).expect("embed length").transpose();
        let commutator = left.sub(&right);
        for r in 0..d {
            for c in 0..d {
                stacked.set(j * d + r, c, commutator.get(r, c).clone());
            }
        }
    }
    kernel_basis(&stacked)
}

/// The action tensor `h(a#g) = sum h_(2)(a) # S^2(h_(3)) g S(h_(1))` on all
/// of `A # H`.
pub fn theorem_action(smash: &SmashProduct) -> StructureTensor {
    let hopf = &smash.base.hopf;
    let n = hopf.dim;
    let m = smash.base.alg.dim;
    let field = hopf.field;
    let s2 = hopf.antipode.mat_mul(&hopf.antipode);
    let mut action = StructureTensor::new(field, (n, m * n, m * n));
    for t in 0..n {
        for ((p, q, r), c) in hopf.comul2_basis(t) {
            for u in 0..n {
                let s2c = s2.get(u, r);
                if s2c.is_zero() {
                    continue;
                }
                let cu = c.mul(s2c);
                for g in 0..n {
                    for (v, m1) in hopf.mul.slice01(u, g) {
                        let cv = cu.mul(m1);
                        for (w, sc) in hopf.antipode_basis(p) {
                            let cw = cv.mul(&sc);
                            for (gg, m2) in hopf.mul.slice01(v, w) {
                                let cg = cw.mul(m2);
                                for i in 0..m {
                                    for (ii, am) in smash.base.action.slice01(q, i) {
                                        action.add(
                                            t,
                                            smash.index(i, g),
                                            smash.index(ii, gg),
                                            cg.mul(am),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    action
}

/// The coaction tensor `psi(a#g) = sum S^{-1}(g_(2)) (x) a#g_(1)` on all of
/// `A # H`.
pub fn theorem_coaction(smash: &SmashProduct) -> StructureTensor {
    let hopf = &smash.base.hopf;
    let n = hopf.dim;
    let m = smash.base.alg.dim;
    let mut coaction = StructureTensor::new(hopf.field, (m * n, n, m * n));
    for g in 0..n {
        for ((g1, g2), c) in hopf.comul.slice0(g) {
            for (s, sc) in hopf.antipode_inv_basis(g2) {
                let cs = c.mul(&sc);
                for i in 0..m {
                    coaction.add(smash.index(i, g), s, smash.index(i, g1), cs.clone());
                }
            }
        }
    }
    coaction
}

/// Computes the full centre: centraliser basis, closure under the theorem's
/// action and coaction and under multiplication (verified, not assumed;
/// failures are internal errors since they contradict the theorem), the
/// restricted YD algebra, and the canonical projection. The restricted
/// structure is verified to be a quantum commutative YD algebra and the
/// projection to be an algebra homomorphism; results land in `report`.
pub fn full_centre(base: &ModuleAlgebra) -> Result<FullCentre, Error> {
    let smash = SmashProduct::new(base);
    let basis = centralizer(&smash);
    let field = base.alg.field;
    let hopf = &base.hopf;
    let d = smash.dim;
    let s = basis.len();

    let ambient_action = theorem_action(&smash);
    let ambient_coaction = theorem_coaction(&smash);

    let b = DenseMatrix::from_columns(field, d, &basis);
    let coords = |w: &[Scalar], what: &str| -> Result<Vec<Scalar>, Error> {
        solve_in_columns(&b, w)
            .ok_or_else(|| Error::Internal(format!("centre is not closed under {what}")))
    };

    // Reversed smash product: z o z' = z' z.
    let mut mul = StructureTensor::new(field, (s, s, s));
    for p in 0..s {
        for q in 0..s {
            let prod = smash.mul_elem(&basis[q], &basis[p]);
            for (t, v) in coords(&prod, "multiplication")?.into_iter().enumerate() {
                if !v.is_zero() {
                    mul.add(p, q, t, v);
                }
            }
        }
    }
    let unit = coords(&smash.unit, "the unit")?;

    let mut action = StructureTensor::new(field, (hopf.dim, s, s));
    for h in 0..hopf.dim {
        let eh = vecops::basis(field, hopf.dim, h);
        for p in 0..s {
            let image = ambient_action.bilinear(&eh, &basis[p]);
            for (t, v) in coords(&image, "the action")?.into_iter().enumerate() {
                if !v.is_zero() {
                    action.add(h, p, t, v);
                }
            }
        }
    }

    let mut coaction = StructureTensor::new(field, (s, hopf.dim, s));
    for p in 0..s {
        let split = ambient_coaction.split(&basis[p]);
        for h in 0..hopf.dim {
            for (t, v) in coords(&split.row(h), "the coaction")?.into_iter().enumerate() {
                if !v.is_zero() {
                    coaction.add(p, h, t, v);
                }
            }
        }
    }

    let module = YdModule::new(hopf.clone(), s, action, coaction)?;
    let yd = YdAlgebra::new(module, Algebra::new(mul, unit.clone())?)?;

    let mut report = yd.verify();
    report.merge(quantum_commutative_check(&yd));

    // Canonical projection sum a_i # g_i -> sum counit(g_i) a_i, expressed
    // on the centre basis, and its homomorphism property.
    let m = base.alg.dim;
    let n = hopf.dim;
    let canonical_to_a = DenseMatrix::from_fn(field, m, s, |row, p| {
        let mut acc = field.zero();
        for g in 0..n {
            acc = acc.add(&basis[p][row * n + g].mul(&hopf.counit[g]));
        }
        acc
    });
    let mut hom = None;
    'hom: for p in 0..s {
        for q in 0..s {
            let mut prod_coords = vec![field.zero(); s];
            for (t, c) in yd.alg.mul.slice01(p, q) {
                prod_coords[t] = prod_coords[t].add(c);
            }
            let lhs = canonical_to_a.apply(&prod_coords);
            let pa = canonical_to_a.column(p);
            let qa = canonical_to_a.column(q);
            if lhs != base.alg.mul_elem(&pa, &qa) {
                hom = Some(vec![p, q]);
                break 'hom;
            }
        }
    }
    report.record("projection_homomorphism", hom);
    report.record(
        "projection_unit",
        if canonical_to_a.apply(&unit) == base.alg.unit {
            None
        } else {
            Some(vec![])
        },
    );

    Ok(FullCentre {
        smash,
        basis,
        ambient_action,
        ambient_coaction,
        yd,
        canonical_to_a,
        report,
    })
}

/// The canonical algebra map `Z(A) -> A`; returns the stored matrix after
/// re-checking the homomorphism verdict, a failure being an internal error.
pub fn canonical_projection(fc: &FullCentre) -> Result<DenseMatrix, Error> {
    if let Some(check) = fc.report.check("projection_homomorphism") {
        if !check.passed {
            return Err(Error::Internal(
                "canonical projection is not a homomorphism".into(),
            ));
        }
    }
    Ok(fc.canonical_to_a.clone())
}

/// The strongest cross-pipeline oracle: embeds the computed centraliser
/// into `R(A) = H (x) A` through `a#h -> S^{-1}(h) (x) a` and compares with
/// the independently computed left centre `C_l(R(A))`: injectivity, the
/// homomorphism property, subspace equality, and agreement of the
/// transported YD structures.
pub fn embed_and_compare(base: &ModuleAlgebra) -> Result<AxiomReport, Error> {
    let fc = full_centre(base)?;
    let hopf = &base.hopf;
    let field = base.alg.field;
    let n = hopf.dim;
    let m = base.alg.dim;
    let d = n * m;

    let r_alg = r_lax_product(hopf, base);
    let cl = left_centre(&r_alg)?;

    // E[(g,a)][(a,h)] = Sinv[g][h].
    let embed = DenseMatrix::from_fn(field, d, d, |row, col| {
        let (g, a_row) = (row / m, row % m);
        let (a_col, h) = (col / n, col % n);
        if a_row == a_col {
            hopf.antipode_inv.get(g, h).clone()
        } else {
            field.zero()
        }
    });

    let mut report = AxiomReport::new();
    let s = fc.dim();
    let images: Vec<Vec<Scalar>> = fc.basis.iter().map(|z| embed.apply(z)).collect();

    let image_matrix = DenseMatrix::from_columns(field, d, &images);
    report.record(
        "embed_injective",
        if image_matrix.rank() == s { None } else { Some(vec![]) },
    );

    // The centre multiplication transports to the tensor multiplication of
    // R(A).
    let mut hom = None;
    'hom: for p in 0..s {
        for q in 0..s {
            let mut prod = vec![field.zero(); fc.smash.dim];
            for (t, c) in fc.yd.alg.mul.slice01(p, q) {
                vecops::axpy(&mut prod, c, &fc.basis[t]);
            }
            let lhs = embed.apply(&prod);
            let rhs = r_alg.alg.mul_elem(&images[p], &images[q]);
            if lhs != rhs {
                hom = Some(vec![p, q]);
                break 'hom;
            }
        }
    }
    report.record("embed_homomorphism", hom);
    report.record(
        "embed_unit",
        if embed.apply(&fc.smash.unit) == r_alg.alg.unit {
            None
        } else {
            Some(vec![])
        },
    );

    // Subspace equality with the independently computed left centre.
    let lhs_span = canonical_span(field, d, &images);
    let rhs_span = canonical_span(field, d, &cl.basis);
    report.record(
        "embed_image_equals_left_centre",
        if lhs_span == rhs_span { None } else { Some(vec![]) },
    );

    // Transported action agrees with the R(A) action on the image.
    let mut action_agrees = None;
    'act: for h in 0..n {
        let eh = vecops::basis(field, n, h);
        for p in 0..s {
            let lhs = embed.apply(&fc.ambient_action.bilinear(&eh, &fc.basis[p]));
            let rhs = r_alg.module.act(&eh, &images[p]);
            if lhs != rhs {
                action_agrees = Some(vec![h, p]);
                break 'act;
            }
        }
    }
    report.record("embed_action_agrees", action_agrees);

    // Transported coaction agrees componentwise.
    let mut coaction_agrees = None;
    for p in 0..s {
        let lhs_split = fc.ambient_coaction.split(&fc.basis[p]);
        let rhs_split = r_alg.module.coact(&images[p]);
        for h in 0..n {
            if embed.apply(&lhs_split.row(h)) != rhs_split.row(h) {
                coaction_agrees = Some(vec![p, h]);
                break;
            }
        }
        if coaction_agrees.is_some() {
            break;
        }
    }
    report.record("embed_coaction_agrees", coaction_agrees);

    Ok(report)
}

/// The trivial-algebra comparison: `Z(k)` has the dimension of `H`, and
/// `a#h -> counit(a) S^{-1}(h)` is an algebra isomorphism onto the opposite
/// Hopf algebra carrying the computed action to the adjoint action and the
/// computed coaction to the coproduct. If the inverse-antipode direction
/// ever failed, the `S` direction is reported alongside so a discrepancy is
/// visible rather than silently accepted.
pub fn compare_trivial_centre(hopf: &HopfAlgebra) -> Result<AxiomReport, Error> {
    let base = trivial_module_algebra(hopf);
    let fc = full_centre(&base)?;
    let mut report = trivial_centre_report(hopf, &fc, false);
    if !report.all_passed() {
        let with_s = trivial_centre_report(hopf, &fc, true);
        report.merge_prefixed("s_direction", with_s);
    }
    Ok(report)
}

fn trivial_centre_report(hopf: &HopfAlgebra, fc: &FullCentre, use_s: bool) -> AxiomReport {
    let field = hopf.field;
    let n = hopf.dim;
    let s = fc.dim();
    let mut report = AxiomReport::new();
    report.record(
        "trivial_centre_dimension",
        if s == n { None } else { Some(vec![s, n]) },
    );
    if s != n {
        return report;
    }
    let op = hopf.opposite();
    let anti = if use_s { &hopf.antipode } else { &hopf.antipode_inv };

    // chi(1 # e_h) = S^{-1}(e_h); the trivial algebra leg is 1-dimensional,
    // so smash basis (0, h) maps through column h.
    let chi = DenseMatrix::from_fn(field, n, n, |g, h| anti.get(g, h).clone());
    let images: Vec<Vec<Scalar>> = fc.basis.iter().map(|z| chi.apply(z)).collect();
    let image_matrix = DenseMatrix::from_columns(field, n, &images);
    report.record(
        "trivial_centre_bijective",
        if image_matrix.rank() == n { None } else { Some(vec![]) },
    );

    // Algebra isomorphism onto the opposite Hopf algebra, the source read
    // with the inherited smash multiplication.
    let mut hom = None;
    'hom: for p in 0..n {
        for q in 0..n {
            let prod = fc.smash.mul_elem(&fc.basis[p], &fc.basis[q]);
            let lhs = chi.apply(&prod);
            let rhs = op.mul_elem(&images[p], &images[q]);
            if lhs != rhs {
                hom = Some(vec![p, q]);
                break 'hom;
            }
        }
    }
    report.record("trivial_centre_isomorphism_onto_opposite", hom);
    report.record(
        "trivial_centre_unit",
        if chi.apply(&fc.smash.unit) == op.unit {
            None
        } else {
            Some(vec![])
        },
    );

    // Action transports to the adjoint action g(h) = sum g_(1) h S(g_(2)).
    let adjoint = YdModule::adjoint(hopf);
    let mut action_ok = None;
    'act: for t in 0..n {
        let et = vecops::basis(field, n, t);
        for p in 0..n {
            let lhs = chi.apply(&fc.ambient_action.bilinear(&et, &fc.basis[p]));
            let rhs = adjoint.act(&et, &images[p]);
            if lhs != rhs {
                action_ok = Some(vec![t, p]);
                break 'act;
            }
        }
    }
    report.record("trivial_centre_action_is_adjoint", action_ok);

    // Coaction transports to the coproduct.
    let mut coaction_ok = None;
    for p in 0..n {
        let lhs_split = fc.ambient_coaction.split(&fc.basis[p]);
        let rhs_split = hopf.comul.split(&images[p]);
        for h in 0..n {
            if chi.apply(&lhs_split.row(h)) != rhs_split.row(h) {
                coaction_ok = Some(vec![p, h]);
                break;
            }
        }
        if coaction_ok.is_some() {
            break;
        }
    }
    report.record("trivial_centre_coaction_is_coproduct", coaction_ok);
    report
}

/// Morita amplification: `z -> z . (Id_r # 1)`, concretely the embedding
/// `a#h -> (Id_r (x) a)#h`, must send `Z(A)` bijectively onto
/// `Z(Mat_r(A))` and intertwine multiplication, action and coaction.
pub fn morita_amplification_check(base: &ModuleAlgebra, r: usize) -> Result<AxiomReport, Error> {
    let fc = full_centre(base)?;
    let amplified = matrix_amplify(base, r);
    let fc_amp = full_centre(&amplified)?;
    let field = base.alg.field;
    let n = base.hopf.dim;
    let m = base.alg.dim;
    let m_amp = amplified.alg.dim;

    // iota(a_i # e_h) = sum_p (E_pp (x) a_i) # e_h.
    let mut iota = DenseMatrix::zero(field, m_amp * n, m * n);
    for i in 0..m {
        for h in 0..n {
            for p in 0..r {
                let amp_index = ((p * r + p) * m + i) * n + h;
                iota.set(amp_index, i * n + h, field.one());
            }
        }
    }

    let mut report = AxiomReport::new();
    let s = fc.dim();
    report.record(
        "morita_dimension",
        if s == fc_amp.dim() {
            None
        } else {
            Some(vec![s, fc_amp.dim()])
        },
    );

    let images: Vec<Vec<Scalar>> = fc.basis.iter().map(|z| iota.apply(z)).collect();
    let image_matrix = DenseMatrix::from_columns(field, m_amp * n, &images);
    report.record(
        "morita_bijective",
        if image_matrix.rank() == s { None } else { Some(vec![]) },
    );
    let lhs_span = canonical_span(field, m_amp * n, &images);
    let rhs_span = canonical_span(field, m_amp * n, &fc_amp.basis);
    report.record(
        "morita_image_is_amplified_centre",
        if lhs_span == rhs_span { None } else { Some(vec![]) },
    );

    let mut hom = None;
    'hom: for p in 0..s {
        for q in 0..s {
            let lhs = iota.apply(&fc.smash.mul_elem(&fc.basis[p], &fc.basis[q]));
            let rhs = fc_amp.smash.mul_elem(&images[p], &images[q]);
            if lhs != rhs {
                hom = Some(vec![p, q]);
                break 'hom;
            }
        }
    }
    report.record("morita_homomorphism", hom);

    let mut action_ok = None;
    'act: for t in 0..n {
        let et = vecops::basis(field, n, t);
        for p in 0..s {
            let lhs = iota.apply(&fc.ambient_action.bilinear(&et, &fc.basis[p]));
            let rhs = fc_amp.ambient_action.bilinear(&et, &images[p]);
            if lhs != rhs {
                action_ok = Some(vec![t, p]);
                break 'act;
            }
        }
    }
    report.record("morita_action_intertwined", action_ok);

    let mut coaction_ok = None;
    for p in 0..s {
        let lhs_split = fc.ambient_coaction.split(&fc.basis[p]);
        let rhs_split = fc_amp.ambient_coaction.split(&images[p]);
        for h in 0..n {
            if iota.apply(&lhs_split.row(h)) != rhs_split.row(h) {
                coaction_ok = Some(vec![p, h]);
                break;
            }
        }
        if coaction_ok.is_some() {
            break;
        }
    }
    report.record("morita_coaction_intertwined", coaction_ok);

    Ok(report)
}

/// The left centre of `R(A)`, exposed for callers comparing the two
/// pipelines directly.
pub fn left_centre_of_r(base: &ModuleAlgebra) -> Result<SubYdAlgebra, Error> {
    left_centre(&r_lax_product(&base.hopf, base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::fixtures;

    #[test]
    fn trivial_centre_is_whole_hopf_algebra() {
        for h in [
            fixtures::kc2(Field::Rational),
            fixtures::sweedler(Field::Rational),
        ] {
            let fc = full_centre(&trivial_module_algebra(&h)).unwrap();
            assert_eq!(fc.dim(), h.dim);
            assert!(fc.report.all_passed(), "{}", fc.report);
        }
    }

    #[test]
    fn f4_centre_is_two_dimensional() {
        let field = Field::Rational;
        let fc = full_centre(&fixtures::f4(field)).unwrap();
        assert_eq!(fc.dim(), 2);
        assert!(fc.report.all_passed(), "{}", fc.report);
        // Spanned by 1#e and x#e: basis vectors live in the h = e block.
        for z in &fc.basis {
            assert!(z[1].is_zero() && z[3].is_zero(), "support outside #e block");
        }
        // Hand check that x#g is not central: (x#1)(x#g) = 1#g but
        // (x#g)(x#1) = -1#g.
        let s = &fc.smash;
        let x1 = vecops::basis(field, 4, s.index(1, 0));
        let xg = vecops::basis(field, 4, s.index(1, 1));
        let left = s.mul_elem(&x1, &xg);
        let right = s.mul_elem(&xg, &x1);
        assert_eq!(left, vecops::scale(&field.from_i64(-1), &right));
    }

    #[test]
    fn f5_centre_is_two_dimensional_with_degree_g_part() {
        let fc = full_centre(&fixtures::f5(Field::Rational)).unwrap();
        assert_eq!(fc.dim(), 2);
        assert!(fc.report.all_passed(), "{}", fc.report);
        // One basis vector in the #e block (the identity), one in the #g
        // block (diag(1,-1) # g).
        let n = 2;
        let in_e_block = |z: &&Vec<Scalar>| (0..4).all(|i| z[i * n + 1].is_zero());
        let in_g_block = |z: &&Vec<Scalar>| (0..4).all(|i| z[i * n].is_zero());
        assert_eq!(fc.basis.iter().filter(in_e_block).count(), 1);
        assert_eq!(fc.basis.iter().filter(in_g_block).count(), 1);
        let g_vec = fc.basis.iter().find(|z| in_g_block(z)).unwrap();
        // The degree-g generator is proportional to diag(1,-1) # g;
        // diag(1,-1) on the matrix-unit basis E00,E01,E10,E11 is (1,0,0,-1).
        assert!(!g_vec[1].is_zero());
        assert!(g_vec[n + 1].is_zero());
        assert!(g_vec[2 * n + 1].is_zero());
        assert_eq!(g_vec[3 * n + 1], g_vec[1].neg());
    }

    #[test]
    fn canonical_projection_values() {
        let field = Field::Rational;
        let fc = full_centre(&fixtures::f4(field)).unwrap();
        let proj = canonical_projection(&fc).unwrap();
        // (x#e) projects to x.
        for (p, z) in fc.basis.iter().enumerate() {
            if !z[2].is_zero() {
                assert_eq!(proj.column(p)[1], z[2]);
            }
        }
    }

    #[test]
    fn embed_and_compare_on_fixtures() {
        let field = Field::Rational;
        for base in [
            trivial_module_algebra(&fixtures::kc2(field)),
            trivial_module_algebra(&fixtures::sweedler(field)),
            fixtures::f4(field),
            fixtures::f5(field),
        ] {
            let report = embed_and_compare(&base).unwrap();
            assert!(report.all_passed(), "{}", report);
        }
    }

    #[test]
    fn trivial_compare_passes_including_noncommutative() {
        for h in [
            fixtures::kc2(Field::Rational),
            fixtures::kc3(Field::Rational),
            fixtures::ks3(Field::Rational),
            fixtures::sweedler(Field::Rational),
        ] {
            let report = compare_trivial_centre(&h).unwrap();
            assert!(report.all_passed(), "{}", report);
        }
    }

    #[test]
    fn morita_amplification_on_f4() {
        let report = morita_amplification_check(&fixtures::f4(Field::Rational), 2).unwrap();
        assert!(report.all_passed(), "{}", report);
    }
}
