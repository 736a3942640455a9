//! Exact arithmetic shared by every engine.
//!
//! Two rings are supported: [`Scalar`], exact rationals used for numeric
//! instances, and [`MultiPoly`], integer polynomials in the generic skew
//! indeterminates `g(i,j)` used for symbolic proofs. All Pfaffian and
//! determinant code is generic over [`Ring`]; code that needs division asks
//! for [`Field`], which only [`Scalar`] implements.

mod poly;
mod scalar;

use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::matrix::{det_laplace, SquareMatrix};

pub use poly::{Monomial, MultiPoly, Var};
pub use scalar::{parse_scalar, scalar_div, Scalar};

/// A commutative ring with exact equality.
///
/// Methods take references and return fresh values so that generic code never
/// needs to reason about which operand may be consumed.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplies by a sign in `{-1, 0, 1}`.
    fn signed(&self, sign: i8) -> Self {
        match sign {
            0 => Self::zero(),
            s if s > 0 => self.clone(),
            _ => self.neg(),
        }
    }

    /// Determinant of a square matrix over this ring. The default is a
    /// memoized Laplace expansion, which needs no division.
    fn determinant(m: &SquareMatrix<Self>) -> Self {
        det_laplace(m)
    }
}

/// A ring with exact division by nonzero elements.
pub trait Field: Ring {
    fn div(&self, rhs: &Self) -> Result<Self>;
}

/// Sums an iterator of ring values.
pub fn sum<R: Ring>(items: impl IntoIterator<Item = R>) -> R {
    items.into_iter().fold(R::zero(), |acc, x| acc.add(&x))
}

/// Multiplies an iterator of ring values.
pub fn product<R: Ring>(items: impl IntoIterator<Item = R>) -> R {
    items.into_iter().fold(R::one(), |acc, x| acc.mul(&x))
}
