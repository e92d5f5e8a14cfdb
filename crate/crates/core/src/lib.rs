//! Exact structure-constant computer algebra for Hopf algebras: smash
//! products, Yetter-Drinfeld modules, Drinfeld doubles, and full centres of
//! module algebras, with machine verification of every algebraic identity
//! involved.
//!
//! All arithmetic is exact (arbitrary-precision rationals or GF(p)); all
//! values are immutable after construction and every operation is a pure
//! function, so identity checks are tolerance-free and outputs are
//! reproducible byte-for-byte.

pub mod centre;
pub mod double;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod grouplike;
pub mod hopf;
pub mod matrix;
pub mod modalg;
pub mod report;
pub mod smash;
pub mod tensor;
pub mod vecops;
pub mod yd;

pub use error::Error;
pub use field::{Field, Scalar};
pub use matrix::{canonical_span, kernel_basis, rref, DenseMatrix};
pub use report::{AxiomCheck, AxiomReport};
pub use tensor::{MultiTensor, StructureTensor};
