//! Time-domain evaluation of the quaternionic B-spline, the backwards
//! difference operator and the recursion relation.
//!
//! The time-domain sum is evaluated in plain quaternion arithmetic (the
//! Fourier side runs through complex powers), which keeps the two domains as
//! independent computation routes for the cross-domain checks.

use rayon::prelude::*;

use crate::error::Error;
use crate::gamma::{gamma_quat, PochhammerTable};
use crate::quaternion::{real_pow_quat, Quaternion, SplineOrder};

// ── Sampled fields & configuration ───────────────────────────────────

/// Uniform grid of sample values with provenance metadata.
#[derive(Debug, Clone)]
pub struct SampledField<T> {
    pub t0: f64,
    pub dt: f64,
    pub samples: Vec<T>,
    pub order: Quaternion,
    pub method: &'static str,
}

impl<T> SampledField<T> {
    pub fn grid_point(&self, i: usize) -> f64 {
        self.t0 + self.dt * i as f64
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Truncation limits, tolerances and quadrature settings for the numeric
/// routines.
#[derive(Debug, Clone, Copy)]
pub struct EvalConfig {
    pub series_tol: f64,
    pub quad_points: usize,
    pub freq_cutoff: f64,
    pub lattice_k: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            series_tol: 1e-10,
            quad_points: 100_001,
            freq_cutoff: 1e4,
            lattice_k: 64,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.series_tol > 0.0
            && self.quad_points > 0
            && self.freq_cutoff > 0.0
            && self.lattice_k > 0
        {
            Ok(())
        } else {
            Err(Error::InvalidConfig(
                "all EvalConfig fields must be strictly positive",
            ))
        }
    }
}

// ── Truncated powers ─────────────────────────────────────────────────

/// One-sided power `t_+^q`: `t^q` for `t > 0`, zero otherwise. Real-quaternion
/// arithmetic throughout.
pub fn truncated_power(t: f64, q: Quaternion) -> Quaternion {
    if t <= 0.0 {
        return Quaternion::ZERO;
    }
    real_pow_quat(t, q).expect("positive base")
}

// ── Time-domain spline ───────────────────────────────────────────────

/// Diagnostics from one time-domain evaluation.
#[derive(Debug, Clone, Copy, Default)]
pub struct TimeDomainDiag {
    /// Largest term modulus in the alternating sum.
    pub max_term: f64,
    /// Largest-term modulus over result modulus (conditioning estimate).
    pub amplification: f64,
    /// Set when the amplification exceeds 1e12.
    pub conditioning_warning: bool,
}

/// Four-lane Kahan-compensated quaternion accumulator.
#[derive(Default, Clone, Copy)]
struct KahanQuat {
    sum: Quaternion,
    comp: Quaternion,
}

impl KahanQuat {
    fn add(&mut self, x: Quaternion) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

fn bspline_time_core(
    order: &SplineOrder,
    gamma_inv: Quaternion,
    table: &PochhammerTable,
    t: f64,
) -> (Quaternion, f64) {
    if t <= 0.0 {
        return (Quaternion::ZERO, 0.0);
    }
    let qm1 = order.q() - Quaternion::ONE;
    let k_max = t.floor() as usize;
    let mut acc = KahanQuat::default();
    let mut max_term = 0.0f64;
    for k in 0..=k_max {
        let tp = truncated_power(t - k as f64, qm1);
        if tp == Quaternion::ZERO {
            continue;
        }
        let mut term = table.binom(k) * tp;
        if k % 2 == 1 {
            term = -term;
        }
        max_term = max_term.max(term.norm());
        acc.add(term);
    }
    (gamma_inv * acc.sum, max_term)
}

/// `B_q(t)` by the finite alternating sum of truncated powers, left-multiplied
/// by `Γ(q)^{-1} = conj(Γ(q))/|Γ(q)|²`. Zero for `t <= 0`; requires
/// `Sc(q) > 1`.
pub fn bspline_time(order: &SplineOrder, t: f64) -> Result<Quaternion, Error> {
    Ok(bspline_time_diag(order, t)?.0)
}

/// As [`bspline_time`], also reporting the summation diagnostics.
pub fn bspline_time_diag(
    order: &SplineOrder,
    t: f64,
) -> Result<(Quaternion, TimeDomainDiag), Error> {
    let g = gamma_quat(order.q())?.value;
    let gamma_inv = g.inverse()?;
    let table = PochhammerTable::new(order.q(), t.max(0.0).floor() as usize + 1);
    let (value, max_term) = bspline_time_core(order, gamma_inv, &table, t);
    let amplification = if value.norm() > 0.0 {
        max_term * gamma_inv.norm() / value.norm()
    } else {
        0.0
    };
    Ok((
        value,
        TimeDomainDiag {
            max_term,
            amplification,
            conditioning_warning: amplification > 1e12,
        },
    ))
}

/// Samples `B_q` on the uniform grid `t0 + dt·i`, `i = 0..n`. One shared
/// Pochhammer table serves every node; nodes are evaluated independently so
/// the output does not depend on the parallel chunking.
pub fn bspline_time_grid(
    order: &SplineOrder,
    t0: f64,
    dt: f64,
    n: usize,
) -> Result<SampledField<Quaternion>, Error> {
    if dt <= 0.0 {
        return Err(Error::InvalidConfig("grid step must be positive"));
    }
    if n == 0 {
        return Err(Error::InvalidConfig("grid needs at least one point"));
    }
    let g = gamma_quat(order.q())?.value;
    let gamma_inv = g.inverse()?;
    let t_max = t0 + dt * (n - 1) as f64;
    let table = PochhammerTable::new(order.q(), t_max.max(0.0).floor() as usize + 1);
    let samples: Vec<Quaternion> = (0..n)
        .into_par_iter()
        .map(|i| bspline_time_core(order, gamma_inv, &table, t0 + dt * i as f64).0)
        .collect();
    Ok(SampledField {
        t0,
        dt,
        samples,
        order: order.q(),
        method: "time-domain",
    })
}

// ── Backwards difference ─────────────────────────────────────────────

const DIFF_CAP: usize = 100_000;

/// Truncation length for `∇^q` at tolerance `tol`, from the binomial
/// coefficient decay. Integer orders terminate exactly.
fn difference_truncation(q: Quaternion, tol: f64) -> Result<usize, Error> {
    let table_guard = q.a.abs().ceil() as usize + 3;
    let mut b = Quaternion::ONE;
    let mut run = 0usize;
    for k in 0..DIFF_CAP {
        if b.norm() == 0.0 {
            return Ok(k);
        }
        if k > table_guard {
            if b.norm() < tol {
                run += 1;
                if run >= 5 {
                    return Ok(k + 1);
                }
            } else {
                run = 0;
            }
        }
        // binom(q, k+1) = binom(q, k) (q - k)/(k + 1)
        b = b * (q - Quaternion::scalar(k as f64)) / (k as f64 + 1.0);
    }
    Err(Error::TruncationBudget { cap: DIFF_CAP })
}

/// `∇^q f = Σ_k (-1)^k binom(q,k) f(· - k)` sampled on a uniform grid, with
/// the series truncated once the coefficient decay passes `tol`. For `q = 1`
/// this is exactly `f(t) - f(t-1)`; for `q = 0` the identity.
pub fn backwards_difference<F: Fn(f64) -> Quaternion + Sync>(
    q: Quaternion,
    f: &F,
    t0: f64,
    dt: f64,
    n: usize,
    tol: f64,
) -> Result<SampledField<Quaternion>, Error> {
    if dt <= 0.0 || n == 0 {
        return Err(Error::InvalidConfig(
            "backwards_difference needs a nonempty grid",
        ));
    }
    let k_terms = difference_truncation(q, tol)?;
    let table = PochhammerTable::new(q, k_terms);
    let samples: Vec<Quaternion> = (0..n)
        .into_par_iter()
        .map(|i| {
            let t = t0 + dt * i as f64;
            let mut acc = KahanQuat::default();
            for k in 0..k_terms {
                let mut term = table.binom(k) * f(t - k as f64);
                if k % 2 == 1 {
                    term = -term;
                }
                acc.add(term);
            }
            acc.sum
        })
        .collect();
    Ok(SampledField {
        t0,
        dt,
        samples,
        order: q,
        method: "backwards-difference",
    })
}

/// [`backwards_difference`] applied to an already sampled field whose grid
/// step divides 1. Samples left of the field's origin are taken as zero
/// (causal convention).
pub fn backwards_difference_field(
    q: Quaternion,
    f: &SampledField<Quaternion>,
    tol: f64,
) -> Result<SampledField<Quaternion>, Error> {
    let per_unit = 1.0 / f.dt;
    let m = per_unit.round();
    if (per_unit - m).abs() > 1e-9 || m < 1.0 {
        return Err(Error::InvalidConfig("field step must divide 1"));
    }
    let m = m as usize;
    let k_terms = difference_truncation(q, tol)?;
    let table = PochhammerTable::new(q, k_terms);
    let samples: Vec<Quaternion> = (0..f.samples.len())
        .into_par_iter()
        .map(|i| {
            let mut acc = KahanQuat::default();
            for k in 0..k_terms {
                let shifted = match i.checked_sub(k * m) {
                    Some(j) => f.samples[j],
                    None => Quaternion::ZERO,
                };
                let mut term = table.binom(k) * shifted;
                if k % 2 == 1 {
                    term = -term;
                }
                acc.add(term);
            }
            acc.sum
        })
        .collect();
    Ok(SampledField {
        t0: f.t0,
        dt: f.dt,
        samples,
        order: q,
        method: "backwards-difference",
    })
}

// ── Recursion relation ───────────────────────────────────────────────

/// Residual of `(q-1) B_q(t) = t B_{q-1}(t) + (q-t) B_{q-1}(t-1)`; requires
/// `Sc(q) > 2` so that `B_{q-1}` is itself a valid time-domain spline.
pub fn recursion_check(order: &SplineOrder, t: f64) -> Result<f64, Error> {
    if order.sc() <= 2.0 {
        return Err(Error::InvalidOrder {
            sc: order.sc(),
            floor: 2.0,
        });
    }
    let q = order.q();
    let lower = SplineOrder::time_domain(q - Quaternion::ONE)?;
    let lhs = (q - Quaternion::ONE) * bspline_time(order, t)?;
    let rhs =
        bspline_time(&lower, t)? * t + (q - Quaternion::scalar(t)) * bspline_time(&lower, t - 1.0)?;
    Ok((lhs - rhs).norm())
}
