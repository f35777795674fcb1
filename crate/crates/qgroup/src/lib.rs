//! Finite-dimensional quantum groups at an odd primitive root of unity.
//!
//! Everything here is exact: scalars live in the cyclotomic field `Q(q)` with
//! `q` a primitive `N`-th root of unity, and every identity is checked by
//! comparing normal forms.
//!
//! The crate builds without `std` (it only needs `alloc`).
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod action;
pub mod cyclo;
pub mod diffops;
pub mod error;
pub mod gauge;
pub mod hopf;
pub mod invariant;
pub mod linalg;
pub mod qplane;
pub mod repcat;
pub mod rmatrix;
pub mod tensor;
pub mod wz;

pub use cyclo::{CycField, CycScalar};
pub use error::Error;
pub use hopf::{FAlgebra, FElement, HAlgebra, HElement};
pub use qplane::{Plane, PlaneElement};
pub use wz::{WzComplex, WzForm};

