//! Exact arithmetic for the coefficient tower ℚ → ℚ(q) → ℚ(q)(t).
//!
//! Everything here is an immutable value with pure operations; values may be
//! shared freely across threads.

pub mod poly;
pub mod qpool;
pub mod ratfunc_t;
pub mod ratq;
pub mod scalar;

pub use poly::{format_poly_q, parse_poly_q, Poly, PolyQ};
pub use qpool::{QPool, DEFAULT_SEED, MAX_Q0_RETRIES};
pub use ratfunc_t::{RatFuncT, RatQT, RatT};
pub use ratq::RatQ;
pub use scalar::{format_big_rational, parse_big_rational, rat, Scalar};

pub use num_rational::BigRational;
