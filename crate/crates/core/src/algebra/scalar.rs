use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, Ring};
use crate::error::{Error, Result};
use crate::matrix::{det_bareiss, SquareMatrix};

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Serializes as `p/q`, or `p` when the denominator is one.
pub type Scalar = BigRational;

/// Parses `p/q` or `p`. Non-reduced input is accepted and reduced.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse("scalar", "empty token"));
    }
    text.parse::<BigRational>()
        .map_err(|e| Error::parse("scalar", format!("{text:?}: {e}")))
}

/// Exact quotient `a / b`.
pub fn scalar_div(a: &Scalar, b: &Scalar) -> Result<Scalar> {
    if Zero::is_zero(b) {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

impl Ring for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }

    fn one() -> Self {
        <BigRational as One>::one()
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn determinant(m: &SquareMatrix<Self>) -> Self {
        det_bareiss(m)
    }
}

impl Field for BigRational {
    fn div(&self, rhs: &Self) -> Result<Self> {
        scalar_div(self, rhs)
    }
}
