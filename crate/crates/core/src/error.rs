use thiserror::Error;

/// Errors raised by constructors and operations. Axiom failures are not
/// errors; they are reported through [`crate::report::AxiomReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("mixed field descriptors")]
    MixedFields,
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("malformed scalar `{0}`")]
    ScalarSyntax(String),
    #[error("no antipode exists: the convolution system is inconsistent")]
    NoAntipode,
    #[error("antipode is singular; invertibility is required")]
    SingularAntipode,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("matrix for group element {element} is not an algebra automorphism (witness {witness})")]
    NotAnAutomorphism { element: usize, witness: String },
    #[error("action matrices violate the Cayley table at pair ({0}, {1})")]
    CayleyViolation(usize, usize),
    #[error("grading violation: product of basis {i} (deg {di}) and {j} (deg {dj}) hits basis {k} of degree {dk}")]
    GradingViolation {
        i: usize,
        j: usize,
        k: usize,
        di: usize,
        dj: usize,
        dk: usize,
    },
    #[error("unit is not concentrated in the identity degree (basis {0})")]
    UnitDegree(usize),
    #[error("representations are incompatible at (h={h}, a={a}, m={m})")]
    IncompatibleRepresentation { h: usize, a: usize, m: usize },
    #[error("the assembled map is not bijective (rank {rank} of {expected})")]
    NotBijective { rank: usize, expected: usize },
    #[error("coaction is not grouplike-diagonal at basis {0}")]
    NotGrouplikeDiagonal(usize),
    #[error("hopf algebra is not a group algebra in the standard basis")]
    NotAGroupAlgebra,
    #[error("hopf algebra is not a dual group algebra in the standard basis")]
    NotADualGroupAlgebra,
    #[error("internal consistency error: {0}")]
    Internal(String),
}
