//! Fourier-domain machinery: the first-order symbol `Ξ`, the spline transform
//! `B̂_q = Ξ^q`, the two-scale mask `H₀` with its coefficients, and the
//! autocorrelation/norm estimators behind the Riesz-sequence argument.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::{PI, TAU};

use crate::error::Error;
use crate::quad::simpson;
use crate::quaternion::{complex_pow_quat, sinc, Biquaternion, Quaternion, SplineOrder};

// ── The symbol Ξ ─────────────────────────────────────────────────────

/// Value of `Ξ(ξ) = (1 - e^{-iξ})/(iξ) = e^{-iξ/2} sinc(ξ/2)` at one
/// frequency, with its principal logarithm when the value is nonzero.
#[derive(Debug, Clone, Copy)]
pub struct XiValue {
    pub xi: f64,
    pub value: Complex64,
    /// Principal log; absent exactly at the lattice zeros `ξ = 2πk, k ≠ 0`.
    pub log_value: Option<Complex64>,
}

/// Nearest lattice multiple `2πk` if `xi` sits on it (to f64 accuracy).
fn lattice_index(xi: f64) -> Option<i64> {
    let k = (xi / TAU).round();
    if k != 0.0 && (xi - TAU * k).abs() <= 1e-12 * xi.abs().max(1.0) {
        Some(k as i64)
    } else {
        None
    }
}

/// Stable evaluation of `Ξ(ξ)` through `e^{-iξ/2} sinc(ξ/2)`; the sinc factor
/// switches to its Taylor series below `|ξ| < 2e-4`.
pub fn xi_symbol(xi: f64) -> XiValue {
    if lattice_index(xi).is_some() {
        return XiValue {
            xi,
            value: Complex64::ZERO,
            log_value: None,
        };
    }
    let h = 0.5 * xi;
    let s = sinc(h);
    let value = Complex64::new(h.cos() * s, -h.sin() * s);
    XiValue {
        xi,
        value,
        log_value: Some(value.ln()),
    }
}

// ── The spline transform ─────────────────────────────────────────────

/// `B̂_q(ξ) = Ξ(ξ)^q`, exactly zero at the lattice zeros and exactly one at
/// the origin.
pub fn bspline_hat(order: &SplineOrder, xi: f64) -> Biquaternion {
    let x = xi_symbol(xi);
    if x.value == Complex64::ZERO {
        return Biquaternion::ZERO;
    }
    complex_pow_quat(x.value, order.q()).expect("nonzero base with Sc(q) > 0")
}

/// Samples `B̂_q` on the uniform frequency grid `xi0 + dxi·i`, `i = 0..n`.
pub fn bspline_hat_grid(
    order: &SplineOrder,
    xi0: f64,
    dxi: f64,
    n: usize,
) -> Result<crate::time_domain::SampledField<Biquaternion>, Error> {
    if dxi <= 0.0 {
        return Err(Error::InvalidConfig("grid step must be positive"));
    }
    if n == 0 {
        return Err(Error::InvalidConfig("grid needs at least one point"));
    }
    let samples: Vec<Biquaternion> = (0..n)
        .into_par_iter()
        .map(|i| bspline_hat(order, xi0 + dxi * i as f64))
        .collect();
    Ok(crate::time_domain::SampledField {
        t0: xi0,
        dt: dxi,
        samples,
        order: order.q(),
        method: "fourier-domain",
    })
}

// ── Refinement mask ──────────────────────────────────────────────────

/// Two-scale symbol `H₀(ξ) = 2^{-q} (1 + e^{-iξ})^q`; equals
/// `B̂_q(2ξ) B̂_q(ξ)^{-1}` wherever the denominator is nonzero.
pub fn mask_h0(order: &SplineOrder, xi: f64) -> Biquaternion {
    let q = order.q();
    let two_inv_q =
        complex_pow_quat(Complex64::new(2.0, 0.0), -q).expect("2^{-q} is always defined");
    let z = Complex64::new(1.0 + xi.cos(), -xi.sin());
    let pow = complex_pow_quat(z, q).expect("Sc(q) > 1 admits a vanishing base");
    two_inv_q * pow
}

/// Truncated mask coefficients `h(k) = 2^{-q} binom(q, k)` with the recorded
/// tail bound.
#[derive(Debug, Clone)]
pub struct MaskCoefficients {
    pub order: Quaternion,
    pub h: Vec<Quaternion>,
    pub truncation_error: f64,
}

impl MaskCoefficients {
    /// Sum of the retained coefficients (should be 1 up to the tail).
    pub fn sum(&self) -> Quaternion {
        let mut s = Quaternion::ZERO;
        for h in &self.h {
            s = s + *h;
        }
        s
    }
}

const MASK_CAP: usize = 200_000;

/// Mask coefficients truncated once the `k^{-Sc(q)-1}` tail estimate drops
/// below `tol`.
pub fn mask_coefficients(order: &SplineOrder, tol: f64) -> Result<MaskCoefficients, Error> {
    let q = order.q();
    let a = order.sc();
    let w = q.complexified();
    let two_inv = (-w * 2.0f64.ln()).exp();

    let mut h = Vec::new();
    let mut coeff = Complex64::ONE; // binom(w, k)
    let truncation_error;
    let mut k = 0usize;
    loop {
        let hk = two_inv * coeff;
        h.push(q.embed_complex(hk));
        if k > (a.ceil() as usize + 2) {
            let mag = hk.norm();
            if mag == 0.0 {
                truncation_error = 0.0;
                break;
            }
            // Σ_{j>k} c j^{-a-1} ≈ |h_k| k / a
            let tail = mag * k as f64 / a;
            if tail < tol {
                truncation_error = tail;
                break;
            }
        }
        if k + 1 >= MASK_CAP {
            return Err(Error::TruncationBudget { cap: MASK_CAP });
        }
        coeff *= (w - k as f64) / (k as f64 + 1.0);
        k += 1;
    }
    while h.len() > 1 && h.last().map(|x| x.norm()) == Some(0.0) {
        h.pop();
    }
    Ok(MaskCoefficients {
        order: q,
        h,
        truncation_error,
    })
}

// ── Riesz bounds ─────────────────────────────────────────────────────

/// Extrema of the autocorrelation symbol `Σ_{|k| <= K} |B̂_q(ξ + 2πk)|^2`
/// over a uniform grid on `[0, 2π)`.
#[derive(Debug, Clone, Copy)]
pub struct RieszBounds {
    pub lower: f64,
    pub upper: f64,
    pub tail_bound: f64,
}

/// Default shift count: tail below 1e-8 by the `k^{-2 Sc(q)}` decay.
pub fn default_riesz_shifts(sc: f64) -> usize {
    (64.0f64).max((1e8f64).powf(1.0 / (2.0 * sc - 1.0)).ceil()) as usize
}

pub fn riesz_bounds(
    order: &SplineOrder,
    grid_points: usize,
    shifts: usize,
) -> Result<RieszBounds, Error> {
    let a = order.sc();
    let m = order.vec_norm();
    let k = shifts as f64;
    // |B̂_q(η)|^2 <= cosh(2π|v|) (2/|η|)^{2a}
    let tail_bound =
        2.0 * (TAU * m).cosh() * (PI * (k - 0.5)).powf(-2.0 * a) * (k - 0.5) / (2.0 * a - 1.0);
    if tail_bound > 1e-6 {
        return Err(Error::TailTooLarge { bound: tail_bound });
    }

    let values = autocorrelation_symbol(order, grid_points, shifts);
    let lower = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let upper = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(RieszBounds {
        lower,
        upper,
        tail_bound,
    })
}

/// Autocorrelation symbol values on the default grid (used by the sandwich
/// checks).
pub fn autocorrelation_symbol(order: &SplineOrder, grid_points: usize, shifts: usize) -> Vec<f64> {
    (0..grid_points)
        .into_par_iter()
        .map(|i| {
            let xi = TAU * i as f64 / grid_points as f64;
            let mut s = 0.0;
            for j in -(shifts as i64)..=(shifts as i64) {
                s += bspline_hat(order, xi + TAU * j as f64).norm_sq();
            }
            s
        })
        .collect()
}

// ── Norm estimates ───────────────────────────────────────────────────

/// Numerical `‖B̂_q‖` estimates with their cosh bounds relative to the real
/// order `Sc(q)`. The L¹ block is absent when `Sc(q) <= 1`.
#[derive(Debug, Clone, Copy)]
pub struct NormEstimates {
    pub l2_sq: f64,
    pub l2_sq_bound: f64,
    pub l2_tail: f64,
    pub l1: Option<f64>,
    pub l1_bound: Option<f64>,
    pub l1_tail: Option<f64>,
}

const NORM_RANGE_CAP: f64 = 5e4;

fn l2_range(a: f64, m: f64) -> f64 {
    let cosh = (TAU * m).cosh();
    let r = (2.0 * cosh * 4.0f64.powf(a) / ((2.0 * a - 1.0) * 1e-7)).powf(1.0 / (2.0 * a - 1.0));
    r.clamp(50.0, NORM_RANGE_CAP)
}

fn l1_range(a: f64, m: f64) -> f64 {
    let cosh = (TAU * m).cosh().sqrt();
    let r = (2.0 * cosh * 2.0f64.powf(a) / ((a - 1.0) * 1e-6)).powf(1.0 / (a - 1.0));
    r.clamp(50.0, NORM_RANGE_CAP)
}

/// Norm estimates over `[-R, R]` with `R` chosen from the decay exponent
/// (`range_scale` stretches it, for convergence self-checks).
pub fn l2_l1_norm_estimates_scaled(
    order: &SplineOrder,
    range_scale: f64,
) -> Result<NormEstimates, Error> {
    if order.sc() <= 0.5 {
        return Err(Error::InvalidOrder {
            sc: order.sc(),
            floor: 0.5,
        });
    }
    let a = order.sc();
    let m = order.vec_norm();
    let real_order = SplineOrder::l2(Quaternion::scalar(a))?;

    let integrate = |f: &dyn Fn(f64) -> f64, r: f64| -> f64 {
        let n = ((r / 0.02).ceil() as usize).clamp(1000, 4_000_000);
        2.0 * simpson(&|xi: f64| f(xi), 0.0, r, n)
    };

    let r2 = (l2_range(a, m) * range_scale).min(NORM_RANGE_CAP * range_scale);
    let l2_sq = integrate(&|xi| bspline_hat(order, xi).norm_sq(), r2);
    let l2_a = integrate(&|xi| bspline_hat(&real_order, xi).norm_sq(), r2);
    let l2_tail =
        2.0 * (TAU * m).cosh() * 4.0f64.powf(a) * r2.powf(1.0 - 2.0 * a) / (2.0 * a - 1.0);

    let (l1, l1_bound, l1_tail) = if a > 1.0 {
        let r1 = (l1_range(a, m) * range_scale).min(NORM_RANGE_CAP * range_scale);
        let v = integrate(&|xi| bspline_hat(order, xi).norm(), r1);
        let va = integrate(&|xi| bspline_hat(&real_order, xi).norm(), r1);
        let tail = 2.0 * (TAU * m).cosh().sqrt() * 2.0f64.powf(a) * r1.powf(1.0 - a) / (a - 1.0);
        (Some(v), Some((PI * m).cosh().sqrt() * va), Some(tail))
    } else {
        (None, None, None)
    };

    Ok(NormEstimates {
        l2_sq,
        l2_sq_bound: (PI * m).cosh() * l2_a,
        l2_tail,
        l1,
        l1_bound,
        l1_tail,
    })
}

pub fn l2_l1_norm_estimates(order: &SplineOrder) -> Result<NormEstimates, Error> {
    l2_l1_norm_estimates_scaled(order, 1.0)
}
