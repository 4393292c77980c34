//! Scalar abstraction: the algebra is generic over the real scalar type.
//!
//! Exact mode instantiates [`Real`] with arbitrary-precision rationals, so
//! every identity in the pointwise modules is checked to literal zero.
//! Float mode instantiates with `f64` and is used by the chart numerics.
//! Complex scalars are `num_complex::Complex<R>` over either real type.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use std::fmt::Debug;
use std::ops::Neg;

/// Real scalar field the core algebra is generic over.
pub trait Real:
    Clone + Debug + PartialEq + PartialOrd + Num + Neg<Output = Self> + Signed + 'static
{
    /// Whether arithmetic in this type is exact (no rounding).
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Lossy conversion for reporting.
    fn to_f64(&self) -> f64;

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }
}

impl Real for BigRational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(num.into(), den.into())
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Complex scalar over a real field.
pub type Cx<R> = Complex<R>;

pub fn cx<R: Real>(re: R, im: R) -> Cx<R> {
    Complex::new(re, im)
}

pub fn cx_re<R: Real>(re: R) -> Cx<R> {
    Complex::new(re, R::zero())
}

pub fn cx_i<R: Real>() -> Cx<R> {
    Complex::new(R::zero(), R::one())
}

pub fn cx_zero<R: Real>() -> Cx<R> {
    Complex::new(R::zero(), R::zero())
}

pub fn cx_one<R: Real>() -> Cx<R> {
    Complex::new(R::one(), R::zero())
}

/// i/2 as a complex scalar.
pub fn cx_half_i<R: Real>() -> Cx<R> {
    Complex::new(R::zero(), R::one().half())
}

pub fn is_zero<R: Real>(z: &Cx<R>) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

/// |z| in the reporting sense: max(|re|,|im|), good enough for residual maxima.
pub fn cx_mag<R: Real>(z: &Cx<R>) -> f64 {
    let re = z.re.abs().to_f64();
    let im = z.im.abs().to_f64();
    re.max(im)
}
