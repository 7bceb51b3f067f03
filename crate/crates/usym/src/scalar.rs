//! Scalar abstraction for the numeric core.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Complex number over a generic real scalar.
pub type C<T> = Complex<T>;

/// Real scalar the core math is generic over. Implemented for `f32`/`f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + serde::Serialize
    + serde::de::DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Lift an `f64` literal into the scalar type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    fn c(re: Self, im: Self) -> C<Self> {
        Complex::new(re, im)
    }

    fn cre(re: Self) -> C<Self> {
        Complex::new(re, Self::zero())
    }
}

impl Real for f64 {}
impl Real for f32 {}

/// `e^{i theta}` as a complex number.
pub fn cis<T: Real>(theta: T) -> C<T> {
    Complex::new(theta.cos(), theta.sin())
}
