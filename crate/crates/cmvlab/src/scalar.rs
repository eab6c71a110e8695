//! Scalar abstraction over the two arithmetic backends.
//!
//! The default backend is `Complex64`. The exact backend is a complex number
//! with `BigRational` parts (a Gaussian rational), used to certify small
//! cases without rounding. Everything that must run in both modes (Laurent
//! algebra, triangular factorization, quasideterminants, jets) is generic
//! over [`Scalar`].

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Gaussian rational: exact complex arithmetic over ℚ(i).
pub type ExactComplex = num_complex::Complex<BigRational>;

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    /// True for backends where `==` comparisons are exact algebra.
    const EXACT: bool;

    fn conj(&self) -> Self;
    fn from_int(n: i64) -> Self;
    /// Lossy magnitude, used for pivot floors and diagnostics only.
    fn mag(&self) -> f64;
    /// Lossy conversion for reporting.
    fn to_c64(&self) -> Complex64;
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn mag(&self) -> f64 {
        self.norm()
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }
}

impl Scalar for ExactComplex {
    const EXACT: bool = true;

    fn conj(&self) -> Self {
        ExactComplex::new(self.re.clone(), -self.im.clone())
    }

    fn from_int(n: i64) -> Self {
        ExactComplex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    fn mag(&self) -> f64 {
        self.to_c64().norm()
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Exact rational from an `f64` (every finite double is a dyadic rational).
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Exact Gaussian rational from a pair of doubles.
pub fn exact_from_f64(re: f64, im: f64) -> Option<ExactComplex> {
    Some(ExactComplex::new(rational_from_f64(re)?, rational_from_f64(im)?))
}
