//! Certification pipeline and acceptance suite behind the `wang` binary.

pub mod certify;
pub mod reference;
pub mod suite;
