//! Exact counters.
//!
//! Every cardinality in this crate is a sum of non-negative integer terms. The
//! arithmetic is generic over [`Count`] so the same code runs on machine
//! integers (with overflow reported as [`Error::Overflow`]) or on arbitrary
//! precision integers such as `num_bigint::BigUint`.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, One, Zero};

use crate::error::{Error, Result};

/// An exact unsigned integer type usable as a counter.
pub trait Count:
    Clone + Debug + Display + Ord + Zero + One + CheckedAdd + CheckedMul + FromPrimitive + Integer
{
}

impl<T> Count for T where
    T: Clone + Debug + Display + Ord + Zero + One + CheckedAdd + CheckedMul + FromPrimitive + Integer
{
}

pub(crate) fn lift<T: Count>(value: usize) -> Result<T> {
    T::from_usize(value).ok_or(Error::Overflow)
}

pub(crate) fn add<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `base^exp` with overflow detection.
pub fn pow<T: Count>(base: usize, exp: u32) -> Result<T> {
    let base = lift::<T>(base)?;
    let mut acc = T::one();
    for _ in 0..exp {
        acc = mul(&acc, &base)?;
    }
    Ok(acc)
}

/// Sums `values^exp` exactly.
pub fn power_sum<T, I>(values: I, exp: u32) -> Result<T>
where
    T: Count,
    I: IntoIterator<Item = usize>,
{
    values
        .into_iter()
        .try_fold(T::zero(), |acc, v| add(&acc, &pow::<T>(v, exp)?))
}
