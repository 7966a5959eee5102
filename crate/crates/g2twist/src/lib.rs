//! Exact models of the two real Lie algebras of type G2 as twisted ring
//! groups over the group Z2^3 and the ring R+R.
//!
//! The carrier is the free module on the seven nonzero elements of Z2^3
//! with coefficients in R+R (held here as exact rationals), and the
//! bracket is built from three families of bilinear cocycles. Choosing
//! the compact cocycle signs gives the compact form; flipping the signs
//! on products of two "odd" components (those outside the quaternion
//! line {1,2,4}) gives the split form.
//!
//! Everything the construction claims is checked against an independent
//! oracle: the derivation algebra of the octonions, computed by brute
//! force as the nullspace of the Leibniz system over the multiplication
//! table. No floating point appears anywhere; all scalars are arbitrary
//! precision rationals or elements of Q(sqrt 3), and every verification
//! is an exact equality.
//!
//! The core is generic over an exact scalar [`Field`]; the type aliases
//! below fix the two instantiations used throughout.

pub mod analysis;
pub mod export;
pub mod group;
pub mod linalg;
pub mod model;
pub mod octonion;
pub mod report;
pub mod scalar;

pub use scalar::{Field, Polynomial, QSqrt3, Rational};

use thiserror::Error;

/// Exact 8x8 operator on octonion coordinates.
pub type LinOp8 = linalg::Matrix<Rational>;

/// Exact 14x14 operator on model coordinates, in the canonical basis
/// (1,0)g1, (0,1)g1, ..., (1,0)g7, (0,1)g7.
pub type LinOp14 = linalg::Matrix<Rational>;

/// Coefficient pair (a,b) with rational components.
pub type RatPair = model::RingPair<Rational>;

/// Model element with rational coefficient pairs.
pub type RatElement = model::G2Element<Rational>;

/// Coefficient pair over Q(sqrt 3), used by the orthonormal basis.
pub type Sqrt3Pair = model::RingPair<QSqrt3>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("the zero polynomial has no squarefree test")]
    ZeroPolynomial,
    #[error("group index {0} is out of range 1..=7")]
    IndexOutOfRange(usize),
    #[error("operation requires two distinct group indices, got {0} twice")]
    EqualIndices(usize),
    #[error("the zero triple is the excluded neutral element")]
    ZeroTriple,
    #[error("index {index} and parameter {k} violate line membership for line {line}")]
    LineMembership { index: usize, k: usize, line: group::Line },
    #[error("lines {0} and {1} are not two distinct lines through index {2}")]
    LinePair(group::Line, group::Line, usize),
    #[error("eigen data is stated for the compact variant only")]
    NonCompactEigen,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
