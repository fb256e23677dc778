//! Numerical laboratory for Dirichlet L-series.
//!
//! The crate builds exact Dirichlet character tables, evaluates `L(s, χ)` by
//! truncated sums and by Hurwitz-zeta continuation, and checks a family of
//! finite-truncation identities: the amplitude/phase factorisation of the
//! series, the Pappus relation for the rectangle rotation solid, and complex
//! bilinear triangle geometry. The [`audit`] module turns those checks into
//! per-claim verdicts.

pub mod audit;
pub mod cgeom;
pub mod characters;
pub mod complex;
pub mod error;
pub mod lseries;
pub mod resolution;
pub mod rotation;

pub use error::{LabError, Result};
pub use num_complex::Complex64;
