//! Exact-arithmetic verification of one-sided Drazin inverse constructions.
//!
//! Everything is computed over exact scalars (rationals, Gaussian rationals,
//! integers mod `m`), so every identity check is an equality test, never a
//! tolerance comparison.

pub mod drazin;
pub mod error;
pub mod gen;
pub mod intertwine;
pub mod io;
pub mod matrix;
pub mod par;
pub mod poly;
pub mod report;
pub mod ringlab;
pub mod scalar;
pub mod spectra;
pub mod transfer;

pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use poly::Poly;
pub use report::{Side, VerificationReport, Witness, WitnessKind, WitnessSide};
pub use scalar::{Gaussian, ModInt, Scalar, ScalarKind};
