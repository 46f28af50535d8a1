//! Property-check suites behind the `verify` command, plus the shared random
//! sampling helpers and the Fourier-inversion oracle used for cross-domain
//! validation.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};
use std::ops::Range;

use crate::fourier::{
    autocorrelation_symbol, bspline_hat, default_riesz_shifts, l2_l1_norm_estimates,
    mask_coefficients, mask_h0, riesz_bounds, xi_symbol,
};
use crate::gamma::{
    gamma_gauss_limit, gamma_quadrature, gamma_quat, pochhammer, pochhammer_via_complex,
};
use crate::gaussian::{
    gaussian_ft_oracle, gaussian_ft_quat, modulated_gaussian_ft, modulated_gaussian_ft_oracle,
    pointwise_gaussian_ratio, quat_sqrt, sinc_envelope_check, uniform_grid, GaussianApproximant,
};
use crate::quaternion::{complex_pow_quat, rotation_matrix, Biquaternion, Quaternion, SplineOrder};
use crate::time_domain::{backwards_difference, bspline_time, recursion_check, truncated_power};

// ── Sampling helpers ─────────────────────────────────────────────────

/// Deterministic RNG for reproducible property sweeps.
pub fn test_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.gen_range(lo..hi)
    }
}

/// Random quaternion with the scalar part drawn from `sc_range` (or pinned to
/// its start when the range is empty) and vector components uniform in
/// `[-vec_scale, vec_scale]`.
pub fn random_quat(rng: &mut ChaCha8Rng, sc_range: Range<f64>, vec_scale: f64) -> Quaternion {
    let a = uniform(rng, sc_range.start, sc_range.end);
    Quaternion::new(
        a,
        uniform(rng, -vec_scale, vec_scale),
        uniform(rng, -vec_scale, vec_scale),
        uniform(rng, -vec_scale, vec_scale),
    )
}

/// Random rotation from a uniform axis and angle (Rodrigues form).
pub fn random_rotation(rng: &mut ChaCha8Rng) -> [[f64; 3]; 3] {
    let axis = [
        uniform(rng, -1.0, 1.0),
        uniform(rng, -1.0, 1.0),
        uniform(rng, -1.0, 1.0),
    ];
    let axis = if axis == [0.0, 0.0, 0.0] {
        [1.0, 0.0, 0.0]
    } else {
        axis
    };
    rotation_matrix(axis, uniform(rng, 0.0, TAU))
}

// ── Independent oracles ──────────────────────────────────────────────

/// Cardinal B-spline `B_n` (degree n-1, support `[0, n]`) by the Cox–de Boor
/// recursion; reference path for the classical-reduction checks.
pub fn cardinal_bspline(n: usize, t: f64) -> f64 {
    if n == 1 {
        return if (0.0..1.0).contains(&t) { 1.0 } else { 0.0 };
    }
    let nm = (n - 1) as f64;
    (t * cardinal_bspline(n - 1, t) + (n as f64 - t) * cardinal_bspline(n - 1, t - 1.0)) / nm
}

/// Fourier inversion `(1/2π) ∫ B̂_q(ξ) e^{iξt} dξ` by piecewise composite
/// Simpson over `[-R, R]`, exploiting `B̂_q(-ξ) = conj(B̂_q(ξ))` componentwise.
///
/// The cutoff comes from the absolute decay bound for `Sc(q) >= 2`; below
/// that the integrand's tail only converges through its oscillation, so a
/// fixed wide cutoff is used and integer `t` (where the period sum turns
/// resonant) should be avoided by the caller for `Sc(q) < 2`.
pub fn fourier_inversion(order: &SplineOrder, ts: &[f64]) -> Vec<Quaternion> {
    let a = order.sc();
    let m = order.vec_norm();
    let cv = (TAU * m).cosh().sqrt();
    let r = if a >= 2.0 {
        (2.0 * cv * 2.0f64.powf(a) / ((a - 1.0) * PI * 5e-7))
            .powf(1.0 / (a - 1.0))
            .clamp(500.0, 3e4)
    } else {
        2.5e4
    };

    let mut sum_c: Vec<Complex64> = vec![Complex64::ZERO; ts.len()];
    let mut sum_s: Vec<Complex64> = vec![Complex64::ZERO; ts.len()];
    let u = order.direction();

    // panels: fine step through the head, coarser through the tail
    let split = 64.0f64.min(r);
    let panels: &[(f64, f64, f64)] = &[(0.0, split, 0.005), (split, r, 0.02)];
    for &(lo, hi, step) in panels {
        if hi <= lo {
            continue;
        }
        let n = (((hi - lo) / step).ceil() as usize).max(2);
        let n = if n.is_multiple_of(2) { n } else { n + 1 };
        let h = (hi - lo) / n as f64;
        for j in 0..=n {
            let xi = lo + h * j as f64;
            let weight = if j == 0 || j == n {
                1.0
            } else if j % 2 == 1 {
                4.0
            } else {
                2.0
            } * h
                / 3.0;
            let hat = bspline_hat(order, xi);
            let c = hat.c0;
            let s = match u {
                Some(u) => hat.c1 * u[0] + hat.c2 * u[1] + hat.c3 * u[2],
                None => Complex64::ZERO,
            };
            for (k, &t) in ts.iter().enumerate() {
                let phase = Complex64::new(0.0, xi * t).exp();
                sum_c[k] += c * phase * weight;
                sum_s[k] += s * phase * weight;
            }
        }
    }

    ts.iter()
        .enumerate()
        .map(|(k, _)| {
            let c = sum_c[k].re / PI; // 2 Re(...) / (2π)
            let s = sum_s[k].re / PI;
            match u {
                Some(u) => Quaternion::new(c, s * u[0], s * u[1], s * u[2]),
                None => Quaternion::scalar(c),
            }
        })
        .collect()
}

// ── Check plumbing ───────────────────────────────────────────────────

/// Sample-count profile for the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Reduced counts, suitable for interactive runs.
    Fast,
    /// Full counts from the property definitions.
    Strict,
}

impl Profile {
    fn scale(&self, strict: usize, fast: usize) -> usize {
        match self {
            Profile::Strict => strict,
            Profile::Fast => fast,
        }
    }
}

/// One property-check outcome. `measured` is compared against `tolerance` in
/// the direction implied by the check (recorded in `passed`).
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub note: Option<String>,
}

impl CheckResult {
    fn upper(name: &str, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            measured,
            tolerance,
            passed: measured <= tolerance,
            note: None,
        }
    }

    fn lower(name: &str, measured: f64, floor: f64) -> Self {
        Self {
            name: name.to_string(),
            measured,
            tolerance: floor,
            passed: measured > floor,
            note: None,
        }
    }

    fn info(name: &str, measured: f64, note: &str) -> Self {
        Self {
            name: name.to_string(),
            measured,
            tolerance: f64::NAN,
            passed: true,
            note: Some(note.to_string()),
        }
    }
}

/// Known suite names, in the order `all` runs them.
pub const SUITES: [&str; 5] = ["algebra", "gamma", "fourier", "time", "gaussian"];

pub fn run_suite(name: &str, profile: Profile) -> Option<Vec<CheckResult>> {
    match name {
        "algebra" => Some(suite_algebra(profile)),
        "gamma" => Some(suite_gamma(profile)),
        "fourier" => Some(suite_fourier(profile)),
        "time" => Some(suite_time(profile)),
        "gaussian" => Some(suite_gaussian(profile)),
        _ => None,
    }
}

// ── Suites ───────────────────────────────────────────────────────────

pub fn suite_algebra(profile: Profile) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let n = profile.scale(1000, 200);

    // vector product decomposition vw = -<v,w> + v∧w
    let mut rng = test_rng(1001);
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let v = random_quat(&mut rng, 0.0..0.0, 2.0).ve();
        let w = random_quat(&mut rng, 0.0..0.0, 2.0).ve();
        let prod = v * w;
        let dot = v.v1 * w.v1 + v.v2 * w.v2 + v.v3 * w.v3;
        let wedge = Quaternion::vector(
            v.v2 * w.v3 - v.v3 * w.v2,
            v.v3 * w.v1 - v.v1 * w.v3,
            v.v1 * w.v2 - v.v2 * w.v1,
        );
        let scale = 1.0 + v.norm() * w.norm();
        worst = worst.max((prod.a + dot).abs() / scale);
        worst = worst.max(prod.ve().max_abs_diff(&wedge) / scale);
    }
    out.push(CheckResult::upper(
        "vector product = -<v,w> + v∧w",
        worst,
        1e-12,
    ));

    // |e^q| = e^{Sc q}
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let q = random_quat(&mut rng, -3.0..3.0, 3.0);
        worst = worst.max((q.exp().norm() - q.a.exp()).abs() / q.a.exp());
    }
    out.push(CheckResult::upper(
        "|e^q| = e^{Sc q} (relative)",
        worst,
        1e-12,
    ));

    // |e^{zq}| <= e^{√2 |zq|} for unimodular z, |arg z| < π/2
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..n {
        let q = random_quat(&mut rng, -2.0..2.0, 2.0);
        let z = Complex64::from_polar(1.0, uniform(&mut rng, -1.57, 1.57));
        let p = Biquaternion::new(z * q.a, z * q.v1, z * q.v2, z * q.v3);
        worst = worst.max(p.exp().norm() / (std::f64::consts::SQRT_2 * p.norm()).exp() - 1.0);
    }
    out.push(CheckResult::upper(
        "|e^{zq}| <= e^{√2|zq|} (excess)",
        worst,
        1e-12,
    ));

    // derivative law for complex powers
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(200, 50) {
        let q = random_quat(&mut rng, 0.5..3.0, 2.0);
        let z = Complex64::new(uniform(&mut rng, 0.5, 2.0), uniform(&mut rng, -1.0, 1.0));
        let h = 1e-5;
        let fd = (complex_pow_quat(z + h, q).unwrap() - complex_pow_quat(z - h, q).unwrap())
            * Complex64::new(1.0 / (2.0 * h), 0.0);
        let exact = Biquaternion::from(q) * complex_pow_quat(z, q - Quaternion::ONE).unwrap();
        worst = worst.max(fd.max_abs_diff(&exact) / exact.norm().max(1e-12));
    }
    out.push(CheckResult::upper(
        "d/dz z^q = q z^{q-1} (finite diff)",
        worst,
        1e-6,
    ));

    // semigroup identity for parallel vector parts
    let q1 = Quaternion::new(1.0, 1.0, 0.0, 0.0);
    let q2 = Quaternion::new(0.5, 2.0, 0.0, 0.0);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let z = Complex64::new(
            1.0 + uniform(&mut rng, -0.2, 0.2),
            uniform(&mut rng, -0.2, 0.2),
        );
        let lhs = complex_pow_quat(z, q1).unwrap() * complex_pow_quat(z, q2).unwrap();
        worst = worst.max(lhs.max_abs_diff(&complex_pow_quat(z, q1 + q2).unwrap()));
    }
    out.push(CheckResult::upper(
        "parallel-v semigroup identity",
        worst,
        1e-10,
    ));

    // semigroup defect for independent vector parts on |z-1| = 0.1
    let q3 = Quaternion::new(1.0, 0.0, 1.0, 0.0);
    let mut defect: f64 = 0.0;
    for k in 0..64 {
        let th = TAU * k as f64 / 64.0;
        let z = Complex64::new(1.0 + 0.1 * th.cos(), 0.1 * th.sin());
        let lhs = complex_pow_quat(z, q1).unwrap() * complex_pow_quat(z, q3).unwrap();
        defect = defect.max((lhs - complex_pow_quat(z, q1 + q3).unwrap()).norm());
    }
    out.push(CheckResult::lower(
        "independent-v semigroup defect",
        defect,
        1e-6,
    ));

    // exponential against its defining series
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(200, 50) {
        let q = random_quat(&mut rng, -2.0..2.0, 2.0);
        let mut term = Quaternion::ONE;
        let mut series = Quaternion::ONE;
        for j in 1..=60 {
            term = term * q * (1.0 / j as f64);
            series = series + term;
        }
        worst = worst.max(q.exp().max_abs_diff(&series) / (1.0 + series.norm()));
    }
    out.push(CheckResult::upper(
        "e^q matches truncated series",
        worst,
        1e-12,
    ));

    out
}

pub fn suite_gamma(profile: Profile) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = test_rng(2001);

    // functional equation Γ(q+1) = q Γ(q)
    let n = profile.scale(1000, 150);
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let q = random_quat(&mut rng, 0.1..20.0, 3.0);
        let g = gamma_quat(q).unwrap().value;
        let g1 = gamma_quat(q + Quaternion::ONE).unwrap().value;
        let prod = q * g;
        worst = worst.max((g1 - prod).norm() / g1.norm().max(prod.norm()));
    }
    out.push(CheckResult::upper(
        "Γ(q+1) = q Γ(q) (relative)",
        worst,
        1e-10,
    ));

    // modulus bound |Γ(q)| <= √2 Γ(Sc q)
    let mut excess = f64::NEG_INFINITY;
    for _ in 0..n {
        let q = random_quat(&mut rng, 0.1..10.0, 3.0);
        let g = gamma_quat(q).unwrap().value.norm();
        let bound = 2.0f64.sqrt() * gamma_quat(Quaternion::scalar(q.a)).unwrap().value.a;
        excess = excess.max(g / bound - 1.0);
    }
    out.push(CheckResult::upper(
        "|Γ(q)| <= √2 Γ(Sc q) (excess)",
        excess,
        1e-12,
    ));

    // rotation covariance
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(50, 10) {
        let q = random_quat(&mut rng, 0.2..8.0, 2.0);
        let rot = random_rotation(&mut rng);
        let lhs = gamma_quat(q.rotate_vector(&rot)).unwrap().value;
        let rhs = gamma_quat(q).unwrap().value.rotate_vector(&rot);
        worst = worst.max(lhs.max_abs_diff(&rhs) / (1.0 + rhs.norm()));
    }
    out.push(CheckResult::upper("Γ((1⊗σ)q) = (1⊗σ)Γ(q)", worst, 1e-10));

    // homogeneity v_j Γ_i = v_i Γ_j
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(200, 50) {
        let q = random_quat(&mut rng, 0.2..8.0, 2.0);
        let g = gamma_quat(q).unwrap().value;
        let (v, gv) = (q.vec(), g.vec());
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((v[j] * gv[i] - v[i] * gv[j]).abs() / (1.0 + g.norm()));
            }
        }
    }
    out.push(CheckResult::upper(
        "homogeneity of Γ components",
        worst,
        1e-12,
    ));

    // rising-product asymptotics |(q)(q+1)(q+2)| / |q|^3 -> 1
    let mut worst: f64 = 0.0;
    for &scale in &[1e2, 1e3, 1e4] {
        let q = Quaternion::new(scale, 0.01 * scale, 0.0, 0.0);
        let mut p = Quaternion::ONE;
        for k in 0..3 {
            p = p * (q + Quaternion::scalar(k as f64));
        }
        worst = worst.max((p.norm() / q.norm().powi(3) - 1.0).abs() * scale / 10.0);
    }
    out.push(CheckResult::upper(
        "Pochhammer asymptotics (scaled)",
        worst,
        1.0,
    ));

    // dual-path Pochhammer
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(200, 40) {
        let q = random_quat(&mut rng, -5.0..5.0, 2.0);
        for j in [5usize, 20, 50] {
            let a = pochhammer(q, j);
            let b = pochhammer_via_complex(q, j);
            worst = worst.max((a - b).norm() / a.norm().max(b.norm()).max(1e-300));
        }
    }
    out.push(CheckResult::upper(
        "Pochhammer recursion vs complex shortcut",
        worst,
        1e-10,
    ));

    // complexified Γ against the quadrature oracle
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(25, 8) {
        let q = random_quat(&mut rng, 0.3..6.0, 2.0);
        let a = gamma_quat(q).unwrap().value;
        let b = gamma_quadrature(q).unwrap().value;
        worst = worst.max((a - b).norm() / a.norm());
    }
    out.push(CheckResult::upper(
        "Γ complexified vs quadrature (relative)",
        worst,
        1e-8,
    ));

    // Gauss limit improves with n
    let mut worst_ratio: f64 = 0.0;
    for _ in 0..profile.scale(10, 4) {
        let q = random_quat(&mut rng, 0.5..5.0, 1.5);
        let exact = gamma_quat(q).unwrap().value;
        let e4 = (gamma_gauss_limit(q, 10_000).unwrap().value - exact).norm();
        let e6 = (gamma_gauss_limit(q, 1_000_000).unwrap().value - exact).norm();
        worst_ratio = worst_ratio.max(e6 / e4);
    }
    out.push(CheckResult::upper(
        "Gauss-limit error shrinks 10^4 -> 10^6",
        worst_ratio,
        1.0,
    ));

    // binomial sum identities
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(20, 6) {
        let q = random_quat(&mut rng, 0.6..5.0, 1.5);
        let (plus, alt) = binomial_sums(q, 2e-10);
        let two_q = complex_pow_quat(Complex64::new(2.0, 0.0), q)
            .unwrap()
            .into_real(1e-10)
            .unwrap();
        worst = worst.max(plus.max_abs_diff(&two_q));
        worst = worst.max(alt.norm());
    }
    out.push(CheckResult::upper(
        "Σ binom(q,j) = 2^q and alternating sum = 0",
        worst,
        1e-8,
    ));

    out
}

/// Both binomial sum identities (`Σ binom(q,j) = 2^q` and
/// `Σ (-1)^j binom(q,j) = 0`) evaluated from one coefficient recursion.
///
/// The `2^q` series alternates in sign term-to-term, so its partial sum is
/// accurate to about half the last coefficient once that falls below `tol`.
/// The alternating identity sits at the `z = -1` branch point of `(1+z)^q`,
/// where the tail decays only like `J^{-Sc q}`; its partial sums at
/// `J, 2J, 4J, 8J` carry a `μ J^{-w}(1 + O(1/J))` tail with known complex
/// exponent `w = Sc q + i|v|`, so three levels of exponent elimination bring
/// the limit estimate down to `O(J^{-Sc q - 3})`.
pub fn binomial_sums(q: Quaternion, tol: f64) -> (Quaternion, Quaternion) {
    let w = q.complexified();

    // pick J (multiple of 8) so the direct 2^q sum resolves to tol
    let mut coeff = Complex64::ONE;
    let mut j_max = 0usize;
    for j in 0..4_000_000usize {
        coeff *= (w - j as f64) / (j as f64 + 1.0);
        if (coeff.norm() < tol && j > (q.a.abs() as usize + 3)) || coeff.norm() == 0.0 {
            j_max = j + 1;
            break;
        }
        j_max = j + 1;
    }
    let j_max = j_max.max(4096).div_ceil(8) * 8;

    let mut coeff = Complex64::ONE;
    let mut plus = Complex64::ONE;
    let mut alt = Complex64::ONE;
    let mut sign = 1.0;
    let mut snapshots = [Complex64::ZERO; 4]; // alt at J/8, J/4, J/2, J
    for j in 0..j_max {
        coeff *= (w - j as f64) / (j as f64 + 1.0);
        sign = -sign;
        plus += coeff;
        alt += coeff * sign;
        let n = j + 1;
        if n == j_max / 8 {
            snapshots[0] = alt;
        } else if n == j_max / 4 {
            snapshots[1] = alt;
        } else if n == j_max / 2 {
            snapshots[2] = alt;
        } else if n == j_max {
            snapshots[3] = alt;
        }
    }

    // eliminate the J^{-w}, J^{-w-1}, J^{-w-2} tail terms
    let mut table = snapshots;
    for level in 0..3usize {
        let r = (-(w + level as f64) * 2.0f64.ln()).exp(); // 2^{-(w+level)}
        for i in 0..(3 - level) {
            table[i] = (table[i + 1] - r * table[i]) / (Complex64::ONE - r);
        }
    }
    let alt_limit = table[0];

    (q.embed_complex(plus), q.embed_complex(alt_limit))
}

pub fn suite_fourier(profile: Profile) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = test_rng(3001);

    // Ξ closed form against the defining quotient
    let mut worst: f64 = 0.0;
    for i in 0..profile.scale(4000, 800) {
        let lg = -3.0 + 6.0 * i as f64 / 3999.0;
        for sign in [-1.0, 1.0] {
            let xi = sign * 10.0f64.powf(lg.min(3.0));
            let direct =
                (Complex64::ONE - Complex64::new(0.0, -xi).exp()) / Complex64::new(0.0, xi);
            worst = worst.max((xi_symbol(xi).value - direct).norm());
        }
    }
    out.push(CheckResult::upper(
        "Ξ quotient vs e^{-iξ/2} sinc(ξ/2)",
        worst,
        1e-13,
    ));

    // graph of Ξ misses the closed negative real axis
    let mut min_im = f64::INFINITY;
    for i in 1..profile.scale(200_000, 40_000) {
        let v = xi_symbol(i as f64 * 1e-3).value;
        if v != Complex64::ZERO && v.re < 0.0 {
            min_im = min_im.min(v.im.abs());
        }
    }
    out.push(CheckResult::lower(
        "Ξ avoids the negative real axis (min |Im|)",
        min_im,
        0.0,
    ));

    // decay |B̂_q(ξ)| |ξ|^{Sc q} bounded
    let o = SplineOrder::l2(Quaternion::new(2.5, 1.0, 0.0, -1.0)).unwrap();
    let bound = 2.0f64.powf(2.5) * (TAU * o.vec_norm()).cosh().sqrt();
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(2000, 400) {
        let xi = uniform(&mut rng, 10.0, 1e4);
        worst = worst.max(bspline_hat(&o, xi).norm() * xi.powf(2.5) / bound - 1.0);
    }
    out.push(CheckResult::upper(
        "decay: |B̂_q| |ξ|^{Sc q} within bound",
        worst,
        0.01,
    ));

    // exact lattice zeros
    let mut worst: f64 = 0.0;
    for k in 1..=20i64 {
        worst = worst.max(bspline_hat(&o, TAU * k as f64).norm());
        worst = worst.max(bspline_hat(&o, -TAU * k as f64).norm());
    }
    out.push(CheckResult::upper(
        "B̂_q(2πk) = 0 exactly, 1 <= |k| <= 20",
        worst,
        0.0,
    ));

    // convolution identity / defect
    let o1 = SplineOrder::l2(Quaternion::new(1.5, 1.0, 0.0, 0.0)).unwrap();
    let o2 = SplineOrder::l2(Quaternion::new(2.0, 2.0, 0.0, 0.0)).unwrap();
    let o12 = SplineOrder::l2(Quaternion::new(3.5, 3.0, 0.0, 0.0)).unwrap();
    let c2 = SplineOrder::l2(Quaternion::new(1.5, 0.0, 1.0, 0.0)).unwrap();
    let c12 = SplineOrder::l2(Quaternion::new(3.0, 1.0, 1.0, 0.0)).unwrap();
    let mut worst_par: f64 = 0.0;
    let mut defect: f64 = 0.0;
    for i in 0..512 {
        let xi = -20.0 + 40.0 * i as f64 / 511.0;
        let lhs = bspline_hat(&o1, xi) * bspline_hat(&o2, xi);
        worst_par = worst_par.max(lhs.max_abs_diff(&bspline_hat(&o12, xi)));
        let lhs2 = bspline_hat(&o1, xi) * bspline_hat(&c2, xi);
        defect = defect.max(lhs2.max_abs_diff(&bspline_hat(&c12, xi)));
    }
    out.push(CheckResult::upper(
        "parallel-v convolution identity on grid",
        worst_par,
        1e-10,
    ));
    out.push(CheckResult::lower(
        "non-parallel convolution defect (e1, e2)",
        defect,
        1e-4,
    ));

    // multiplier commutation for parallel vector parts
    let q1 = Quaternion::new(1.2, 1.0, 0.0, 0.0);
    let q2 = Quaternion::new(2.3, -2.0, 0.0, 0.0);
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(200, 50) {
        let xi = uniform(&mut rng, 0.1, 10.0);
        let d = complex_pow_quat(Complex64::new(0.0, -xi), q1).unwrap();
        let nb = complex_pow_quat(Complex64::ONE - Complex64::new(0.0, -xi).exp(), q2).unwrap();
        worst = worst.max((d * nb).max_abs_diff(&(nb * d)) / (1.0 + (d * nb).norm()));
    }
    out.push(CheckResult::upper(
        "multiplier symbols commute (parallel v)",
        worst,
        1e-12,
    ));

    // mask: normalization and ratio cross-check
    let om = SplineOrder::time_domain(Quaternion::new(3.0, 1.0, 0.0, 0.0)).unwrap();
    let mc = mask_coefficients(&om, 1e-8).unwrap();
    let sum_resid = (mc.sum() - Quaternion::ONE).norm();
    out.push(CheckResult::upper(
        "mask coefficients sum to 1",
        sum_resid,
        1e-7,
    ));
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(200, 50) {
        let xi = uniform(&mut rng, -3.0, 3.0);
        let denom = bspline_hat(&om, xi);
        if denom.norm() < 1e-6 {
            continue;
        }
        let ratio = bspline_hat(&om, 2.0 * xi) * denom.inverse().unwrap();
        worst = worst.max(ratio.max_abs_diff(&mask_h0(&om, xi)));
    }
    out.push(CheckResult::upper(
        "H₀ closed form vs B̂(2ξ)/B̂(ξ)",
        worst,
        1e-11,
    ));

    // order of the zero of 1 - |H₀|²
    let slope = mask_zero_order_slope(&om);
    out.push(CheckResult::upper(
        "1-|H₀|² log-log slope minus 2",
        (slope - 2.0).abs(),
        0.01,
    ));

    // Riesz: classical bracket and quaternionic positivity plus sandwich
    let oc = SplineOrder::l2(Quaternion::scalar(2.0)).unwrap();
    let grid = profile.scale(4096, 512);
    let rb = riesz_bounds(&oc, grid, default_riesz_shifts(2.0)).unwrap();
    out.push(CheckResult::upper(
        "classical autocorrelation bracket [1/3, 1]",
        (rb.lower - 1.0 / 3.0).abs().max((rb.upper - 1.0).abs()),
        1e-3,
    ));
    let oq = SplineOrder::l2(Quaternion::new(3.0, 1.0, -1.0, 0.0)).unwrap();
    let shifts = default_riesz_shifts(3.0);
    let rq = riesz_bounds(&oq, grid, shifts).unwrap();
    out.push(CheckResult::lower(
        "quaternionic Riesz lower bound",
        rq.lower,
        0.0,
    ));
    let oa = SplineOrder::l2(Quaternion::scalar(3.0)).unwrap();
    let ra = riesz_bounds(&oa, grid, shifts).unwrap();
    let stretch = (PI * oq.vec_norm()).cosh();
    let vals = autocorrelation_symbol(&oq, grid, shifts);
    let mut sandwich: f64 = 0.0;
    for v in vals {
        sandwich = sandwich.max(ra.lower - v).max(v - ra.upper * stretch);
    }
    out.push(CheckResult::upper(
        "symbol sandwich within cosh(π|v|) bracket",
        sandwich,
        1e-6,
    ));

    // norms: classical value and cosh bounds
    let est = l2_l1_norm_estimates(&oc).unwrap();
    out.push(CheckResult::upper(
        "‖B̂₂‖₂² = 4π/3 (relative)",
        (est.l2_sq - 4.0 * PI / 3.0).abs() / (4.0 * PI / 3.0),
        1e-5,
    ));
    let oqn = SplineOrder::l2(Quaternion::new(2.0, 1.0, 0.0, 0.0)).unwrap();
    let eq = l2_l1_norm_estimates(&oqn).unwrap();
    let mut excess = (eq.l2_sq / eq.l2_sq_bound - 1.0).max(f64::NEG_INFINITY);
    if let (Some(l1), Some(b)) = (eq.l1, eq.l1_bound) {
        excess = excess.max(l1 / b - 1.0);
    }
    out.push(CheckResult::upper(
        "norm estimates within cosh bounds (excess)",
        excess,
        0.0,
    ));

    out
}

/// Least-squares log-log slope of `1 - |H₀(ξ)|²` over `ξ ∈ [1e-4, 1e-2]`;
/// the order of the zero at the origin (2 for these masks).
pub fn mask_zero_order_slope(o: &SplineOrder) -> f64 {
    let n = 40;
    let (mut sxy, mut sxx, mut mx, mut my) = (0.0, 0.0, 0.0, 0.0);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..n {
        let lg = -4.0 + 2.0 * i as f64 / (n - 1) as f64;
        let xi = 10.0f64.powf(lg);
        xs.push(xi.ln());
        ys.push((1.0 - mask_h0(o, xi).norm_sq()).ln());
    }
    for i in 0..n {
        mx += xs[i] / n as f64;
        my += ys[i] / n as f64;
    }
    for i in 0..n {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    sxy / sxx
}

pub fn suite_time(profile: Profile) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = test_rng(4001);

    // classical reduction against Cox–de Boor
    let mut worst: f64 = 0.0;
    for n in [2usize, 3, 4] {
        let o = SplineOrder::time_domain(Quaternion::scalar(n as f64)).unwrap();
        for i in 0..100 {
            let t = -0.5 + (n as f64 + 1.0) * i as f64 / 99.0;
            let ours = bspline_time(&o, t).unwrap();
            worst = worst.max((ours.a - cardinal_bspline(n, t)).abs());
            worst = worst.max(ours.ve().norm());
        }
    }
    out.push(CheckResult::upper(
        "classical reduction n = 2,3,4",
        worst,
        1e-12,
    ));

    // refinement residual for three orders
    let mut worst: f64 = 0.0;
    let tol = 1e-8;
    for q in [
        Quaternion::new(3.0, 1.0, 0.0, 0.0),
        Quaternion::new(2.5, 0.0, 0.8, -0.4),
        Quaternion::new(2.0, 0.0, 0.0, 0.0),
    ] {
        let o = SplineOrder::time_domain(q).unwrap();
        worst = worst.max(refinement_residual(&o, tol, profile.scale(161, 81)));
    }
    out.push(CheckResult::upper(
        "refinement equation residual",
        worst,
        10.0 * tol,
    ));

    // backwards difference reproduces the spline from truncated powers
    let q = Quaternion::new(2.5, 0.0, 1.0, 0.0);
    let o = SplineOrder::time_domain(q).unwrap();
    let g_inv = gamma_quat(q).unwrap().value.inverse().unwrap();
    let qm1 = q - Quaternion::ONE;
    let f = move |t: f64| g_inv * truncated_power(t, qm1);
    let field = backwards_difference(q, &f, 0.0, 0.25, 25, 1e-9).unwrap();
    let mut worst: f64 = 0.0;
    for (i, s) in field.samples.iter().enumerate() {
        let expect = bspline_time(&o, field.grid_point(i)).unwrap();
        worst = worst.max(s.max_abs_diff(&expect));
    }
    out.push(CheckResult::upper(
        "∇^q t_+^{q-1} / Γ(q) = B_q",
        worst,
        1e-8,
    ));

    // recursion relation
    let mut worst: f64 = 0.0;
    worst = worst.max(
        recursion_check(
            &SplineOrder::recursion(Quaternion::scalar(3.0)).unwrap(),
            1.5,
        )
        .unwrap(),
    );
    worst = worst.max(
        recursion_check(
            &SplineOrder::recursion(Quaternion::new(3.0, 1.0, 1.0, 0.0)).unwrap(),
            2.2,
        )
        .unwrap(),
    );
    worst = worst.max(
        recursion_check(
            &SplineOrder::recursion(Quaternion::new(2.5, 0.0, 0.0, 2.0)).unwrap(),
            0.3,
        )
        .unwrap(),
    );
    for _ in 0..profile.scale(20, 5) {
        let q = random_quat(&mut rng, 2.2..4.5, 1.0);
        let t = uniform(&mut rng, 0.1, 5.0);
        worst = worst.max(recursion_check(&SplineOrder::recursion(q).unwrap(), t).unwrap());
    }
    out.push(CheckResult::upper(
        "recursion (q-1)B_q = tB_{q-1} + (q-t)B_{q-1}(·-1)",
        worst,
        1e-8,
    ));

    // partition of unity with tail accounting
    let o = SplineOrder::time_domain(Quaternion::new(3.0, 1.0, 0.0, 0.0)).unwrap();
    let mut worst: f64 = 0.0;
    for &t in &[4.0, 4.5, 5.0] {
        let mut s = Quaternion::ZERO;
        for k in -10i64..=10 {
            s = s + bspline_time(&o, t - k as f64).unwrap();
        }
        let mut tail = Quaternion::ZERO;
        for k in 11i64..=400 {
            tail = tail + bspline_time(&o, t + k as f64).unwrap();
        }
        worst = worst.max((s + tail - Quaternion::ONE).norm());
    }
    out.push(CheckResult::upper(
        "partition of unity (tail accounted)",
        worst,
        1e-6,
    ));

    // homogeneity and rotation covariance of B_q
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(100, 25) {
        let q = random_quat(&mut rng, 1.2..4.0, 1.5);
        let o = SplineOrder::time_domain(q).unwrap();
        let t = uniform(&mut rng, 0.1, 6.0);
        let b = bspline_time(&o, t).unwrap();
        let (v, bv) = (q.vec(), b.vec());
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((v[j] * bv[i] - v[i] * bv[j]).abs());
            }
        }
    }
    out.push(CheckResult::upper(
        "homogeneity of B_q components",
        worst,
        1e-10,
    ));

    let mut worst: f64 = 0.0;
    let outer = profile.scale(20, 5);
    for _ in 0..outer {
        let q = random_quat(&mut rng, 1.2..4.0, 1.2);
        let rot = random_rotation(&mut rng);
        for _ in 0..outer {
            let t = uniform(&mut rng, 0.1, 5.0);
            let lhs =
                bspline_time(&SplineOrder::time_domain(q.rotate_vector(&rot)).unwrap(), t).unwrap();
            let rhs = bspline_time(&SplineOrder::time_domain(q).unwrap(), t)
                .unwrap()
                .rotate_vector(&rot);
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
    }
    out.push(CheckResult::upper("B_{(1⊗σ)q} = (1⊗σ)B_q", worst, 1e-9));

    // cross-domain agreement against the Fourier-inversion oracle
    let cases: Vec<(Quaternion, Vec<f64>)> = match profile {
        Profile::Strict => vec![
            (
                Quaternion::new(1.5, 0.0, 0.0, 0.0),
                vec![0.4, 1.3, 2.6, 3.5, 4.7],
            ),
            (
                Quaternion::new(2.5, 0.0, 1.0, 0.0),
                vec![0.5, 1.0, 1.7, 2.3, 3.1],
            ),
            (
                Quaternion::new(3.0, 1.0, 0.0, 0.0),
                vec![0.5, 1.0, 1.7, 2.3, 3.1],
            ),
            (
                Quaternion::new(3.5, 0.0, 1.0, -1.0),
                vec![0.5, 1.3, 2.6, 3.5, 4.7],
            ),
        ],
        Profile::Fast => vec![
            (Quaternion::new(2.5, 0.0, 1.0, 0.0), vec![0.5, 1.7, 3.1]),
            (Quaternion::new(3.0, 1.0, 0.0, 0.0), vec![1.0, 2.3]),
        ],
    };
    let mut worst: f64 = 0.0;
    for (q, ts) in cases {
        let o = SplineOrder::time_domain(q).unwrap();
        let inverted = fourier_inversion(&o, &ts);
        for (t, inv) in ts.iter().zip(inverted) {
            let direct = bspline_time(&o, *t).unwrap();
            worst = worst.max(direct.max_abs_diff(&inv));
        }
    }
    out.push(CheckResult::upper(
        "time domain vs Fourier inversion",
        worst,
        1e-5,
    ));

    out
}

/// Max refinement residual `|B_q(t) - Σ 2 h(k) B_q(2t-k)|` over `[0, 8]`.
///
/// `h(k)` are the Fourier coefficients of `H₀` (they sum to 1); the dilation
/// in the two-scale sum contributes a factor 1/2 under the transform, so the
/// time-domain coefficients are `2 h(k)`. The classical hat case fixes the
/// factor: `B₂ = ½B₂(2t) + B₂(2t-1) + ½B₂(2t-2)` with `h = [¼, ½, ¼]`.
pub fn refinement_residual(order: &SplineOrder, mask_tol: f64, grid_n: usize) -> f64 {
    let mc = mask_coefficients(order, mask_tol).expect("mask coefficients");
    let mut worst: f64 = 0.0;
    for i in 0..grid_n {
        let t = 8.0 * i as f64 / (grid_n - 1) as f64;
        let lhs = bspline_time(order, t).expect("spline value");
        let mut rhs = Quaternion::ZERO;
        for (k, h) in mc.h.iter().enumerate() {
            let arg = 2.0 * t - k as f64;
            if arg <= 0.0 {
                break;
            }
            rhs = rhs + (*h * 2.0) * bspline_time(order, arg).expect("spline value");
        }
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

pub fn suite_gaussian(profile: Profile) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = test_rng(5001);

    // principal square root
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(1000, 200) {
        let q = random_quat(&mut rng, 0.05..6.0, 2.0);
        let r = quat_sqrt(q).unwrap();
        worst = worst.max((r * r).max_abs_diff(&q) / (1.0 + q.norm()));
    }
    out.push(CheckResult::upper("√q squared returns q", worst, 1e-12));

    // closed forms against the quadrature oracle
    let mut worst: f64 = 0.0;
    for _ in 0..profile.scale(100, 20) {
        let q = random_quat(&mut rng, 0.05..5.0, 1.0);
        let alpha = uniform(&mut rng, -2.0, 2.0);
        let t = uniform(&mut rng, -2.0, 2.0);
        let closed = modulated_gaussian_ft(q, alpha, t).unwrap();
        let plain = gaussian_ft_quat(q, t).unwrap();
        let oracle_mod = modulated_gaussian_ft_oracle(q, alpha, t).unwrap();
        let oracle_plain = gaussian_ft_oracle(q, t).unwrap();
        worst = worst.max(closed.max_abs_diff(&oracle_mod) / (1.0 + closed.norm()));
        worst = worst.max(plain.max_abs_diff(&oracle_plain) / (1.0 + plain.norm()));
    }
    out.push(CheckResult::upper(
        "Gaussian integrals: closed form vs quadrature",
        worst,
        1e-7,
    ));

    // sinc envelope for orders where the printed window is a real bound
    let pts = profile.scale(100_000, 10_000);
    let grid = uniform_grid(-20.0, 20.0, pts);
    let mut worst = f64::NEG_INFINITY;
    for &a in &[4.0, 5.0, 10.0, 100.0] {
        let (w, _) = sinc_envelope_check(a, &grid);
        worst = worst.max(w);
    }
    out.push(CheckResult::upper(
        "sinc envelope holds for a >= 4",
        worst,
        0.0,
    ));
    let (two, at) = sinc_envelope_check(2.0, &grid);
    out.push(CheckResult::info(
        "sinc envelope at a = 2 (informational)",
        two,
        &format!(
            "Gaussian-only window |ξ|<=2 is exceeded near ξ = {at:.3}; bound valid from a >= 4"
        ),
    ));

    // dominating chain |B̂_q(ξ/√a)| <= √cosh(π|v|) (e^{-(ξ/2π)²} + tail)
    let v = [1.0, 0.0, 0.0];
    let mut excess = f64::NEG_INFINITY;
    for &a in &[10.0, 100.0] {
        let o = SplineOrder::fourier(Quaternion::new(a, v[0], v[1], v[2])).unwrap();
        let factor = (PI * 1.0f64).cosh().sqrt();
        for &xi in grid.iter() {
            let lhs = bspline_hat(&o, xi / a.sqrt()).norm();
            let mut rhs = (-(xi / TAU).powi(2)).exp();
            if (xi / (2.0 * TAU)).abs() > 1.0 {
                rhs += 2.0 / (xi / 2.0).powi(2);
            }
            excess = excess.max(lhs - factor * rhs);
        }
    }
    out.push(CheckResult::upper(
        "rescaled |B̂_q| under the Gaussian dominant (a >= 10)",
        excess,
        0.0,
    ));

    // pointwise ratio: deviations shrink with slope about -1
    let devs: Vec<f64> = [1e2, 1e3, 1e4]
        .iter()
        .map(|&a| {
            (pointwise_gaussian_ratio([1.0, 0.0, 0.0], a, 1.0).unwrap() - Biquaternion::ONE).norm()
        })
        .collect();
    let monotone = devs.windows(2).all(|w| w[1] < w[0]);
    let slope = (devs[2].ln() - devs[0].ln()) / (1e4f64.ln() - 1e2f64.ln());
    out.push(CheckResult {
        name: "pointwise Gaussian ratio deviation slope".into(),
        measured: slope,
        tolerance: -0.7,
        passed: monotone && (-1.3..=-0.7).contains(&slope),
        note: Some(format!("deviations {devs:?}")),
    });

    // approximant envelope
    let approx = GaussianApproximant::new(Quaternion::new(7.0, 1.0, -0.5, 0.0)).unwrap();
    let mut excess = f64::NEG_INFINITY;
    for &xi in grid.iter() {
        excess = excess.max(approx.hat(xi).norm() / approx.envelope(xi) - 1.0);
    }
    out.push(CheckResult::upper(
        "approximant under its a-independent envelope",
        excess,
        1e-10,
    ));

    // L^p error trends
    for &p in &[1.0, 2.0, f64::INFINITY] {
        let seq = lp_convergence_trend_for(profile, p);
        let decreasing = seq.windows(2).all(|w| w[1] < w[0]);
        out.push(CheckResult {
            name: format!(
                "L^{} Fourier-domain error decreasing",
                if p.is_infinite() {
                    "inf".into()
                } else {
                    format!("{p}")
                }
            ),
            measured: *seq.last().unwrap(),
            tolerance: f64::INFINITY,
            passed: decreasing,
            note: Some(format!("sequence {seq:?}")),
        });
    }

    out
}

fn lp_convergence_trend_for(profile: Profile, p: f64) -> Vec<f64> {
    let a_list: &[f64] = match profile {
        Profile::Strict => &[4.0, 64.0, 1024.0],
        Profile::Fast => &[4.0, 64.0],
    };
    crate::gaussian::lp_convergence_trend([1.0, -1.0, 0.0], a_list, p).unwrap()
}
