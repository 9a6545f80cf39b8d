//! Exact linear algebra over the integers and `Z[φ]`.

mod golden;
mod matrix;
mod perron;
mod poly;

pub use golden::{GoldenFraction, GoldenNumber, GoldenRational, PHI};
pub use matrix::{golden_eigencheck, EigenSide, IntMatrix};
pub use perron::{frequencies, golden_eigenvector, golden_perron_value, perron, Frequencies, Perron};
pub use poly::IntPolynomial;
