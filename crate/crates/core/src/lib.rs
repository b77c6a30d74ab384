//! Exact computations with algebraic quantum groups: integrals, modular
//! data, duality, the Heisenberg algebra and the Fourier transform.

pub mod algebra;
pub mod approx;
pub mod catalog;
pub mod cyclotomic;
pub mod dual;
pub mod duality;
pub mod element;
pub mod error;
pub mod format;
pub mod fourier;
pub mod heisenberg;
pub mod hopf;
pub mod integrals;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod suites;

pub use cyclotomic::Cyclotomic;
pub use element::{BasisId, Element, Tensor};
pub use error::{Error, Result};
pub use scalar::Scalar;
