//! Exact combinatorics of affine Weyl groups and their relative Coxeter
//! systems: root data, reduced words and lengths, parabolic normalizers,
//! facets of the Coxeter complex, spirals of ℤ/m-graded root systems, and a
//! symbolic degenerate double affine Hecke algebra.
//!
//! All arithmetic is exact; rationals are `num_rational::BigRational`.

pub mod complex;
pub mod ddaha;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod relative;
pub mod root_system;
pub mod spiral;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Rational;
pub use root_system::{AffineRoot, AffineRootSystem, CartanType, FiniteRootSystem};
pub use weyl::{Element, NodeSet, WeylGroup};
