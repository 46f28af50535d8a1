//! Quaternionic B-splines.
//!
//! The spline of quaternionic order `q = a + v` (with `Sc(q) = a > 1`) is
//! defined in the Fourier domain by `B̂_q(ξ) = ((1 - e^{-iξ})/(iξ))^q` and in
//! the time domain by the finite alternating sum
//! `B_q(t) = Γ(q)^{-1} Σ_k (-1)^k binom(q,k) (t-k)_+^{q-1}`.
//!
//! The crate provides:
//! - quaternion/biquaternion algebra and quaternionic powers of complex
//!   numbers ([`quaternion`]);
//! - the quaternionic Gamma function (three evaluation routes), Pochhammer
//!   symbols, binomial coefficients and series ([`gamma`]);
//! - Fourier-domain evaluation, the refinement mask with its coefficients,
//!   autocorrelation (Riesz) bounds and norm estimates ([`fourier`]);
//! - time-domain evaluation, the quaternionic backwards difference and the
//!   recursion relation ([`time_domain`]);
//! - Gaussian-limit diagnostics: quaternionic Gaussian Fourier integrals,
//!   the sinc envelope and pointwise/L^p convergence trends ([`gaussian`]);
//! - property-check suites and independent oracles ([`verify`]) and the
//!   sample-figure datasets ([`figures`]).

pub mod error;
pub mod figures;
pub mod fourier;
pub mod gamma;
pub mod gaussian;
pub mod quad;
pub mod quaternion;
pub mod time_domain;
pub mod verify;

pub use error::Error;
pub use quaternion::{Biquaternion, Quaternion, SplineOrder};
