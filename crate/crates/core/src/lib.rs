//! Exact arithmetic engine for the order of the Samelson product
//! `<ε_{m,n}, ε_{m,n}>: S^{4m-1} ∧ Q_{n-m+1} → Sp(n)`.
//!
//! The group `[S^{4m-1} ∧ Q_{n-m+1}, Sp(n)]` is the cokernel of a map
//! `ψ: KSp^{-2}(X) → H^{4n+2}(X) ≅ Z`. Its value on each basis element is a
//! Chern-character coefficient on `CP^{2n-2m+1}`, scaled by `(2n+1)!` and by
//! the complexification factor 1 or 2. This crate computes those values
//! exactly, takes their gcd, and compares it with the closed form
//! `(2n+1)!/(2n-2m+1)!` (even `m`) or twice that (odd `m`).
//!
//! Everything here is pure and allocation-only; IO and the command line live
//! in the companion `samelson-cli` crate.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bott;
pub mod chern;
mod error;
pub mod order;
pub mod rational;
pub mod series;

pub use bott::{
    complexification_sigma, ksp_minus2_of_sphere, BottSigma, ScalingFactor, SigmaTable,
    SphereKSpGroup,
};
pub use chern::{
    chern_via_compositions, chern_via_series, chern_via_stirling, ChernCoefficient, Triangulation,
};
pub use error::{Error, Result};
pub use order::{closed_form, compute_order, OrderReport, PsiGenerator, SamelsonParams, Verdict};
pub use rational::{Integer, Rational};
pub use series::TruncSeries;
