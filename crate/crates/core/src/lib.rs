//! Quantum matrices, the dual canonical basis of `O_q(M(n))` and `O_q(SL(n))`,
//! translation actions of `U_q(sl_n)`, crystal operators and invariant
//! subalgebras, all in exact arithmetic over `Z[q, q^-1]`.
//!
//! The coefficient ring is [`Laurent`], generic over an integer type; the
//! algebra layers use the arbitrary-precision alias [`LaurentPoly`].

pub mod canonical;
pub mod error;
pub mod invariants;
pub mod kashiwara;
pub mod laurent;
pub mod linalg;
pub mod qmatrix;
pub mod uq;
pub mod verify;

pub use canonical::{CanonicalBasis, CanonicalExpansion, MinorSpec};
pub use error::Error;
pub use laurent::{Coefficient, Laurent};
pub use qmatrix::{Basis, Element, ExponentMatrix, Letter, QMatrixAlgebra, Word};
pub use uq::{Generator, Side, WeightVector};

/// Laurent polynomials with arbitrary-precision integer coefficients.
pub type LaurentPoly = Laurent<num_bigint::BigInt>;

/// Laurent polynomials with 64-bit coefficients, for quick experiments.
pub type LaurentPoly64 = Laurent<i64>;

pub type Result<T, E = Error> = std::result::Result<T, E>;
