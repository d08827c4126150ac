//! Exact curvature apparatus for left-invariant metrics on 4-dimensional
//! real Lie algebras.
//!
//! Everything here is algebra at the identity of the group: structure
//! constants, the Levi-Civita connection from the Koszul formula, the
//! Riemann and Ricci tensors, the splitting of the curvature operator on
//! 2-forms, and the almost Hermitian invariants built on top of it. The
//! arithmetic is generic over [`Ring`]; exact rationals are the default
//! backend, `f64` is available for sweeps, and [`Poly`] lets the same
//! pipeline run on symbolic structure constants.
//!
//! The [`classification`] module uses this machinery to re-derive the
//! polynomial condition systems for almost Kähler structures with
//! J-invariant Ricci tensor and to certify every solution branch.
#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod classification;
pub mod error;
pub mod exterior;
pub mod hermitian;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod surd;

pub use error::Error;
pub use exterior::{OneForm, Orientation, ThreeForm, TwoForm};
pub use hermitian::AlmostHermitian4;
pub use lie::{CoframeDiff, CurvatureData, LieAlgebra4, MetricLieAlgebra};
pub use poly::{Poly, Var};
pub use scalar::{rat, Field, Rational, Ring, Scalar};
pub use surd::Surd;

pub type Result<T> = core::result::Result<T, Error>;
