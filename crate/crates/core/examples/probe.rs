use scalg::centre::centralizer;
use scalg::field::Field;
use scalg::fixtures;
use scalg::matrix::{canonical_span, DenseMatrix};
use scalg::modalg::dual_regular_module_algebra;
use scalg::smash::SmashProduct;
use scalg::vecops;
use scalg::yd::{left_centre, r_lax_product};
use scalg::Scalar;

fn main() {
    let field = Field::Rational;
    let h = fixtures::sweedler(field);
    let base = dual_regular_module_algebra(&h);
    let smash = SmashProduct::new(&base);
    let z = centralizer(&smash);
    let n = h.dim;
    let m = base.alg.dim;
    let d = n * m;
    let r_alg = r_lax_product(&h, &base);
    let cl = left_centre(&r_alg).unwrap();

    // Candidate transports a#k -> T(k) (x) a for T in {S^{-1}, S}.
    for (label, anti) in [("Sinv", &h.antipode_inv), ("S", &h.antipode)] {
        let embed = DenseMatrix::from_fn(field, d, d, |row, col| {
            let (g, a_row) = (row / m, row % m);
            let (a_col, k) = (col / n, col % n);
            if a_row == a_col {
                anti.get(g, k).clone()
            } else {
                field.zero()
            }
        });
        let images: Vec<Vec<Scalar>> = z.iter().map(|v| embed.apply(v)).collect();
        let lhs = canonical_span(field, d, &images);
        let rhs = canonical_span(field, d, &cl.basis);
        println!("{label}: image == left centre: {}", lhs == rhs);
    }

    // Also test the reverse map on the left-centre basis: x -> sum a # S(g)
    // and x -> sum a # S^{-1}(g), checking centrality of the image.
    let is_central = |v: &Vec<Scalar>| -> bool {
        for j in 0..m {
            let aj = smash.embed_algebra(&vecops::basis(field, m, j));
            if smash.mul_elem(&aj, v) != smash.mul_elem(v, &aj) {
                return false;
            }
        }
        true
    };
    for (label, anti) in [("a#S(g)", &h.antipode), ("a#Sinv(g)", &h.antipode_inv)] {
        let back = DenseMatrix::from_fn(field, d, d, |row, col| {
            let (a_row, k) = (row / n, row % n);
            let (g, a_col) = (col / m, col % m);
            if a_row == a_col {
                anti.get(k, g).clone()
            } else {
                field.zero()
            }
        });
        let all = cl.basis.iter().all(|x| is_central(&back.apply(x)));
        println!("{label} of left centre central: {all}");
    }
}
