//! Exact Pfaffians of skew-symmetric forms indexed by words of letters.
//!
//! A skew form gives a value `f[xy] = -f[yx]` for every ordered pair of
//! letters; its Pfaffian `f[α]` on an even-length word `α` is the signed sum
//! over perfect matchings of `α`. Values live in a [`Ring`]: exact rationals
//! ([`Scalar`]) for numeric work, or integer polynomials in generic skew
//! indeterminates ([`MultiPoly`]) for symbolic proofs.

pub mod algebra;
pub mod bridge;
pub mod closed;
pub mod error;
pub mod identities;
pub mod io;
pub mod matrix;
pub mod pfaffian;
pub mod random;
pub mod word;

pub use algebra::{Field, Monomial, MultiPoly, Ring, Scalar, Var};
pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use pfaffian::{pf_elimination, pf_matchings, pf_recursive, GenericForm, MatrixForm, RuleForm, SkewForm};
pub use word::{enumerate_matchings, reverse_complement, sign, word_diff, Letter, Matching, Word};
