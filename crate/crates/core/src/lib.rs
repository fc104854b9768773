//! Exact construction and verification of the fusion-procedure elements
//! F_Λ and G_Λ of the finite Hecke algebra H_n.
//!
//! The crate builds the ordered fusion product over ℚ(q)(t) along a generic
//! line inside the hook (or row/column) subspace, takes the exact limit
//! t → 0, and provides the linear-algebra tooling to verify the resulting
//! elements: T_0-coefficients, φ-invariance, divisibility eigenvalues,
//! ideal dimensions, irreducibility and the q = 1 specialization.

pub mod arith;
pub mod error;
pub mod hecke;
pub mod cache;
pub mod fusion;
pub mod jsonio;
pub mod perm;
pub mod repr;
pub mod verify;
pub mod tableaux;

pub use arith::{BigRational, Poly, PolyQ, QPool, RatFuncT, RatQ, RatQT, RatT, Scalar};
pub use error::{Error, Result};
pub use fusion::{evaluate_f, evaluate_g, fusion_factor, fusion_product, pair_order, ElementKind, FusionResult, FusionSpec};
pub use hecke::{HeckeAlgebra, HeckeElement};
pub use perm::Permutation;
pub use tableaux::{Partition, StandardTableau, Variant};
