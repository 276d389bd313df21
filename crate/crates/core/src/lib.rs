//! Irreducible algebraic dependence of two univariate polynomials over an
//! exact field, computed by degree reduction with standard monomials, plus
//! the degree-semigroup analyses built on top of it.

pub mod cli;
pub mod engine;
pub mod error;
pub mod laurent;
pub mod oracle;
pub mod scalar;
pub mod semigroup;
pub mod unipoly;

pub use error::{Error, Result};
pub use laurent::{Gap, Laurent2, Monomial, MonomialRatio};
pub use scalar::{FieldKind, FieldSpec, Scalar};
pub use unipoly::{Degree, FImage, UniPoly};
