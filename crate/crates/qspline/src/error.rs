//! Crate-wide error type.

use crate::quaternion::Quaternion;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("order has Sc(q) = {sc}, but this operation requires Sc(q) > {floor}")]
    InvalidOrder { sc: f64, floor: f64 },

    #[error("0^q is undefined for Sc(q) = {sc} <= 0")]
    ZeroBase { sc: f64 },

    #[error("Gamma pole at q = {0} (nonpositive integer scalar with zero vector part)")]
    GammaPole(Quaternion),

    #[error("argument outside the supported domain: {0}")]
    OutOfDomain(&'static str),

    #[error("{0}")]
    SingularValue(&'static str),

    #[error("imaginary residue {0} exceeds tolerance when converting to a real quaternion")]
    ImaginaryResidue(f64),

    #[error("coefficient decay did not reach tolerance within {cap} terms")]
    TruncationBudget { cap: usize },

    #[error("lattice-sum tail bound {bound} exceeds the admissible 1e-6")]
    TailTooLarge { bound: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
}
