//! Exact computational machinery for modules over finite group algebras:
//! finite-field arithmetic, dense linear algebra, enumerated permutation
//! groups, matrix representations with irreducibility and projectivity
//! tests, invariant bilinear and quadratic forms, two-sided bimodules with
//! form transport along tensor functors, and central block idempotents.

pub mod field;
pub mod linalg;

pub use field::{Embedding, Field, FieldElement};
pub use linalg::Matrix;
