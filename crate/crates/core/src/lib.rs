//! Exact-arithmetic workbench for finite-dimensional nonassociative
//! algebras over ℚ: weakly associative and symmetric Leibniz identities,
//! polarization into a commutative product and a bracket, structure
//! analysis, a catalog of low-dimensional symmetric Leibniz algebras, and
//! truncated formal deformations.
//!
//! Algebras are given by dense structure constants `e_i ∗ e_j = Σ_k c_ijk e_k`.
//! Every identity is trilinear, so checking it on basis triples decides it;
//! the first failing triple in lexicographic order is reported as witness.

pub mod catalog;
pub mod deformation;
pub mod error;
pub mod format;
pub mod identity;
pub mod linalg;
pub mod polar;
pub mod scalar;
pub mod structure;
pub mod tensor;

pub use catalog::{build, FamilyId, FamilyTag};
pub use deformation::{truncated_identity_check, SeriesElement, TruncatedDeformation};
pub use error::{Error, Result};
pub use identity::{check_identity, IdentityKind, IdentityReport, Witness};
pub use polar::{depolarize, polarize, PolarPair};
pub use scalar::Scalar;
pub use structure::{structure_verdict, StructureVerdict, Subspace};
pub use tensor::{Algebra, BilinearMap, Element, LinearMap, TrilinearTensor};
