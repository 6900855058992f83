//! Real scalar abstraction shared by every numerical routine in the crate.
//!
//! All region constructors, predicates, oracles and bounds are written once
//! against [`Real`] and instantiated for `f32` and `f64`. Complex values are
//! always `num_complex::Complex<T>` over the chosen real type.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point type usable as the real part of matrix entries.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
}

/// Converts an `f64` literal into `T`.
///
/// Every constant used by the crate is representable (possibly rounded) in
/// both `f32` and `f64`, so the conversion cannot fail for supported types.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal must be representable in the scalar type")
}

#[inline]
pub fn cplx<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

#[inline]
pub fn real<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

#[inline]
pub fn is_zero<T: Real>(z: Complex<T>) -> bool {
    z.re == T::zero() && z.im == T::zero()
}
