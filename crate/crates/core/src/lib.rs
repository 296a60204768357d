//! Airy functions built from their series, Bessel and asymptotic
//! representations, the spectrum of a particle bouncing on a hard floor
//! in a uniform gravitational field, its normalized eigenstates, and an
//! independent finite-difference eigensolver used to cross-check both.
//!
//! The crate is `no_std` (it needs `alloc`). Elementary functions come from
//! [`libm`]. Enable the default `std` feature to get `std::error::Error`
//! on [`Error`].

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod airy;
pub mod bouncer;
mod dd;
mod error;
pub mod fd;
pub mod gamma;
pub mod quadrature;
pub mod spectrum;
pub mod tridiag;

pub use airy::{
    airy, airy_asymptotic_neg, airy_asymptotic_pos, airy_bessel, airy_series, bi_asymptotic_neg,
    AiryConstants, AiryValue, AsymptoticTruncation, Branch, Route, SeriesConfig,
};
pub use bouncer::{BouncerSystem, Eigenstate};
pub use error::{Error, Result};
pub use fd::GridEigenSolution;
pub use spectrum::{Spectrum, SpectrumEntry};
