//! The coefficient field abstraction.
//!
//! Two backends implement [`Scalar`]: the exact cyclotomic field
//! [`Cyclotomic`](crate::cyclotomic::Cyclotomic) and the approximate complex
//! field [`Approx`](crate::approx::Approx).

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;
    /// Embeds an exact cyclotomic number.
    fn from_cyclotomic(c: &Cyclotomic) -> Self;
    /// A primitive `n`-th root of unity, `exp(2πi/n)` in the approximate backend.
    fn root_of_unity(n: u32) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    /// Size estimate used for pivot selection; exact backends return 1 for any nonzero value.
    fn magnitude(&self) -> f64;
    /// Short backend name for reports.
    fn backend() -> &'static str;

    fn is_one(&self) -> bool {
        (self.clone() - Self::one()).is_zero()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}
