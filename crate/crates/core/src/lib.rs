//! Exact computations with BiHom-associative dialgebras given by structure
//! constants: axiom checks, twisting constructions, bracket functors,
//! actions, second cohomology and derivations.

pub mod action;
pub mod bracket;
pub mod cohomology;
pub mod corpus;
pub mod derivation;
pub mod dialgebra;
pub mod error;
pub mod fleet;
pub mod format;
pub mod linalg;
pub mod operators;
pub mod report;
pub mod scalar;

pub use dialgebra::{
    check_axioms, check_morphism, check_multiplicative, direct_sum, is_ideal, is_regular,
    is_subalgebra, matrix_dialgebra, quotient, Dialgebra, Product, Side, Subspace,
};
pub use error::{Error, Result};
pub use linalg::{Matrix, Tensor3, Vector};
pub use report::{AxiomResult, CheckReport};
pub use scalar::{Gf, Gf2, Gf3, Gf5, Gf7, Scalar, Q};
