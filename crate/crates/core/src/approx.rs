//! Approximate complex scalars with a process-wide comparison tolerance.
//!
//! Only the command line `--float` path uses this backend; every reported
//! result of the library is computed with exact scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::cyclotomic::Cyclotomic;
use crate::scalar::Scalar;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0);

/// Sets the tolerance used by equality and zero tests. Non-positive or
/// non-finite values restore the default.
pub fn set_tolerance(eps: f64) {
    let v = if eps.is_finite() && eps > 0.0 {
        eps
    } else {
        0.0
    };
    TOLERANCE_BITS.store(v.to_bits(), Ordering::Relaxed);
}

pub fn tolerance() -> f64 {
    let v = f64::from_bits(TOLERANCE_BITS.load(Ordering::Relaxed));
    if v > 0.0 {
        v
    } else {
        DEFAULT_TOLERANCE
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Approx(pub Complex64);

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        (self.0 - other.0).norm() <= tolerance()
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, rhs: Self) -> Self {
        Approx(self.0 + rhs.0)
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, rhs: Self) -> Self {
        Approx(self.0 - rhs.0)
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, rhs: Self) -> Self {
        Approx(self.0 * rhs.0)
    }
}

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Self {
        Approx(-self.0)
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps = tolerance();
        let clean = |x: f64| if x.abs() <= eps { 0.0 } else { x };
        let (re, im) = (clean(self.0.re), clean(self.0.im));
        if im == 0.0 {
            write!(f, "{re}")
        } else if re == 0.0 {
            write!(f, "{im}i")
        } else if im < 0.0 {
            write!(f, "{re}-{}i", -im)
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}

impl Scalar for Approx {
    fn zero() -> Self {
        Approx(Complex64::new(0.0, 0.0))
    }
    fn one() -> Self {
        Approx(Complex64::new(1.0, 0.0))
    }
    fn from_i64(n: i64) -> Self {
        Approx(Complex64::new(n as f64, 0.0))
    }
    fn from_rational(q: &BigRational) -> Self {
        Approx(Complex64::new(q.to_f64().unwrap_or(f64::NAN), 0.0))
    }
    fn from_cyclotomic(c: &Cyclotomic) -> Self {
        Approx(c.to_complex())
    }
    fn root_of_unity(n: u32) -> Self {
        Approx(Complex64::from_polar(
            1.0,
            2.0 * std::f64::consts::PI / n as f64,
        ))
    }
    fn is_zero(&self) -> bool {
        self.0.norm() <= tolerance()
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Approx(self.0.inv()))
    }
    fn magnitude(&self) -> f64 {
        self.0.norm()
    }
    fn backend() -> &'static str {
        "approximate"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_close_up() {
        let w = Approx::root_of_unity(7);
        assert!(w.pow(7).is_one());
        assert!(!w.pow(3).is_one());
    }

    #[test]
    fn matches_exact_embedding() {
        let exact = Cyclotomic::zeta_pow(5, 2) + Cyclotomic::fraction(1, 3);
        let a = Approx::from_cyclotomic(&exact);
        let b = Approx::root_of_unity(5).pow(2)
            + Approx::from_i64(1) * Approx::from_i64(3).inv().unwrap();
        assert_eq!(a, b);
    }
}
