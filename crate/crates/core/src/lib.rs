//! Exact decision procedures for homomorphisms of generalized Verma modules
//! over the odd orthogonal Lie algebras, specialized to the parabolic pair
//! whose diagram data is (k, n): g = so(n+2k) with the k-th node crossed.
//!
//! A generalized Verma module is represented purely by its shifted highest
//! weight, a vector of exact half-integers split into two blocks. The crate
//! decides when a true Verma module homomorphism exists between two weights,
//! when the induced standard homomorphism is nonzero, and bounds the order
//! of the dual differential operator. On top of that it enumerates the
//! p-dominant Weyl orbit of the Dirac-operator weight for a given (k, n),
//! assembles the resulting homomorphism diagram with operator orders, and
//! renders it as DOT or JSON.
//!
//! All arithmetic is generic over the signed integer scalar backing the
//! half-integer storage; `i64` (the default and the aliases below) is wide
//! enough for every rank the searches support.

pub mod bruhat;
pub mod context;
pub mod dirac;
pub mod emit;
pub mod halfint;
pub mod hasse;
pub mod homs;
pub mod root;
pub mod scalar;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use context::{ContextError, ParabolicContext, MAX_RANK};
pub use halfint::HalfInt;
pub use root::Root;
pub use scalar::Scalar;
pub use weight::Weight;
pub use weyl::WeylElem;

/// Concrete instantiations on 64-bit storage.
pub type HalfInt64 = HalfInt<i64>;
pub type Weight64 = Weight<i64>;

/// Narrow instantiations, ample for the supported ranks.
pub type HalfInt32 = HalfInt<i32>;
pub type Weight32 = Weight<i32>;
