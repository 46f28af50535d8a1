//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its measured residuals. Run with `--nocapture` to see every line:
//!
//! ```text
//! cargo test --release -p qspline-cli --test acceptance -- --nocapture
//! ```
//!
//! Wall-clock budgets are asserted in release builds only (debug builds
//! print the elapsed time but do not enforce the budget).
//!
//! Two checks fail by design and document real defects in the inequalities
//! they test: the Gauss-limit product at n = 10^6 carries a relative error
//! |q(q+1)|/(2n) > 1e-6 over most of the sampled order range (criterion 2),
//! and the windowed sinc envelope is violated near |ξ| ≈ 2 for a = 2
//! (criterion 10). The measured numbers in their output match the analytic
//! predictions; see the module tests for the corrected, passing forms.

use num_complex::Complex64;
use std::process::Command;
use std::time::Instant;

use qspline::fourier::{autocorrelation_symbol, bspline_hat, default_riesz_shifts, riesz_bounds};
use qspline::gamma::{gamma_gauss_limit, gamma_quadrature, gamma_quat};
use qspline::gaussian::{
    lp_convergence_trend, pointwise_gaussian_ratio, sinc_envelope_check, uniform_grid,
};
use qspline::quaternion::complex_pow_quat;
use qspline::time_domain::bspline_time;
use qspline::verify::{
    binomial_sums, cardinal_bspline, fourier_inversion, mask_zero_order_slope, random_quat,
    random_rotation, refinement_residual, test_rng, uniform,
};
use qspline::{Biquaternion, Quaternion, SplineOrder};

fn finish(label: &str, budget_s: f64, started: Instant, pass: bool, detail: &str) {
    let elapsed = started.elapsed().as_secs_f64();
    let status = if pass { "PASS" } else { "FAIL" };
    println!("criterion {label}: {status} — {detail} ({elapsed:.2} s, budget {budget_s} s)");
    if !cfg!(debug_assertions) {
        assert!(
            elapsed < budget_s,
            "criterion {label} exceeded its {budget_s} s budget ({elapsed:.2} s)"
        );
    }
    assert!(pass, "criterion {label} failed: {detail}");
}

#[test]
fn criterion_01_classical_reduction() {
    let started = Instant::now();
    let mut worst: f64 = 0.0;
    for n in [2usize, 3, 4] {
        let order = SplineOrder::time_domain(Quaternion::scalar(n as f64)).unwrap();
        for i in 0..100 {
            let t = -0.5 + (n as f64 + 1.0) * i as f64 / 99.0;
            let ours = bspline_time(&order, t).unwrap();
            worst = worst.max((ours.a - cardinal_bspline(n, t)).abs());
            worst = worst.max(ours.ve().norm());
        }
    }
    finish(
        "01 classical-reduction",
        1.0,
        started,
        worst < 1e-12,
        &format!("max |B_n - cardinal| = {worst:.3e} over n = 2,3,4 at 100 points (tol 1e-12)"),
    );
}

#[test]
fn criterion_02_gamma_triangulation() {
    let started = Instant::now();
    let mut rng = test_rng(20_001);
    let mut worst_cq: f64 = 0.0; // complexified vs quadrature
    let mut worst_cg: f64 = 0.0; // complexified vs gauss limit
    let mut worst_qg: f64 = 0.0; // quadrature vs gauss limit
    for _ in 0..50 {
        let q = random_quat(&mut rng, 0.5..10.0, 2.0);
        let c = gamma_quat(q).unwrap().value;
        let quad = gamma_quadrature(q).unwrap().value;
        let gauss = gamma_gauss_limit(q, 1_000_000).unwrap().value;
        let scale = c.norm();
        worst_cq = worst_cq.max((c - quad).norm() / scale);
        worst_cg = worst_cg.max((c - gauss).norm() / scale);
        worst_qg = worst_qg.max((quad - gauss).norm() / scale);
    }
    let pass = worst_cq < 1e-6 && worst_cg < 1e-6 && worst_qg < 1e-6;
    finish(
        "02 gamma-triangulation",
        60.0,
        started,
        pass,
        &format!(
            "pairwise relative deviations: complexified/quadrature {worst_cq:.3e}, \
             complexified/gauss {worst_cg:.3e}, quadrature/gauss {worst_qg:.3e} (tol 1e-6; \
             the Gauss product at n = 10^6 has relative error |q(q+1)|/(2n), e.g. exactly \
             3e-6 at q = 2, so the gauss pairs cannot meet 1e-6)"
        ),
    );
}

#[test]
fn criterion_03_functional_equation() {
    let started = Instant::now();
    let mut rng = test_rng(20_003);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let q = random_quat(&mut rng, 0.1..20.0, 3.0);
        let g = gamma_quat(q).unwrap().value;
        let g1 = gamma_quat(q + Quaternion::ONE).unwrap().value;
        let prod = q * g;
        worst = worst.max((g1 - prod).norm() / g1.norm().max(prod.norm()));
    }
    finish(
        "03 functional-equation",
        5.0,
        started,
        worst < 1e-10,
        &format!(
            "max relative residual of Γ(q+1) = qΓ(q) over 1000 samples: {worst:.3e} (tol 1e-10)"
        ),
    );
}

#[test]
fn criterion_04_binomial_identities() {
    let started = Instant::now();
    let mut rng = test_rng(20_004);
    let mut worst_plus: f64 = 0.0;
    let mut worst_alt: f64 = 0.0;
    for _ in 0..50 {
        let q = random_quat(&mut rng, 0.5..5.0, 1.5);
        let (plus, alt) = binomial_sums(q, 2e-9);
        let two_q = complex_pow_quat(Complex64::new(2.0, 0.0), q)
            .unwrap()
            .into_real(1e-10)
            .unwrap();
        worst_plus = worst_plus.max(plus.max_abs_diff(&two_q));
        worst_alt = worst_alt.max(alt.norm());
    }
    finish(
        "04 binomial-identities",
        30.0,
        started,
        worst_plus < 1e-8 && worst_alt < 1e-8,
        &format!("|Σ binom - 2^q| = {worst_plus:.3e}, |Σ (-1)^j binom| = {worst_alt:.3e} over 50 orders (tol 1e-8)"),
    );
}

#[test]
fn criterion_05_cross_domain() {
    let started = Instant::now();
    // non-integer t below Sc(q) = 2.5 keeps the slowly-decaying inversion
    // tails non-resonant; see the Fourier-inversion oracle notes
    let cases: [(Quaternion, [f64; 5]); 5] = [
        (Quaternion::scalar(1.5), [0.4, 1.3, 2.6, 3.5, 4.7]),
        (
            Quaternion::new(2.0, 0.5, 0.5, 0.0),
            [0.4, 1.3, 2.6, 3.5, 4.7],
        ),
        (
            Quaternion::new(2.5, 0.0, 1.0, 0.0),
            [0.5, 1.0, 1.7, 2.3, 3.1],
        ),
        (
            Quaternion::new(3.0, 1.0, 0.0, 0.0),
            [0.5, 1.0, 1.7, 2.3, 3.1],
        ),
        (
            Quaternion::new(3.5, 0.0, 1.0, -1.0),
            [0.5, 1.0, 1.7, 2.3, 3.1],
        ),
    ];
    let mut worst: f64 = 0.0;
    for (q, ts) in cases {
        let order = SplineOrder::time_domain(q).unwrap();
        let inverted = fourier_inversion(&order, &ts);
        for (t, inv) in ts.iter().zip(inverted) {
            let direct = bspline_time(&order, *t).unwrap();
            worst = worst.max(direct.max_abs_diff(&inv));
        }
    }
    finish(
        "05 cross-domain",
        60.0,
        started,
        worst < 1e-5,
        &format!("max |time-domain - Fourier-inversion| over 5 orders x 5 points: {worst:.3e} (tol 1e-5)"),
    );
}

#[test]
fn criterion_06_semigroup_dichotomy() {
    let started = Instant::now();
    let parallel: [(Quaternion, Quaternion); 2] = [
        (
            Quaternion::new(1.5, 1.0, 0.0, 0.0),
            Quaternion::new(2.0, 2.0, 0.0, 0.0),
        ),
        (
            Quaternion::new(1.0, 0.0, 0.0, 1.0),
            Quaternion::new(1.5, 0.0, 0.0, -0.5),
        ),
    ];
    let mut worst_par: f64 = 0.0;
    for (q1, q2) in parallel {
        let o1 = SplineOrder::fourier(q1).unwrap();
        let o2 = SplineOrder::fourier(q2).unwrap();
        let o12 = SplineOrder::fourier(q1 + q2).unwrap();
        for i in 0..512 {
            let xi = -20.0 + 40.0 * i as f64 / 511.0;
            let lhs = bspline_hat(&o1, xi) * bspline_hat(&o2, xi);
            worst_par = worst_par.max(lhs.max_abs_diff(&bspline_hat(&o12, xi)));
        }
    }
    // the fixed non-parallel pair (e1, e2)
    let c1 = SplineOrder::fourier(Quaternion::new(1.5, 1.0, 0.0, 0.0)).unwrap();
    let c2 = SplineOrder::fourier(Quaternion::new(1.5, 0.0, 1.0, 0.0)).unwrap();
    let c12 = SplineOrder::fourier(Quaternion::new(3.0, 1.0, 1.0, 0.0)).unwrap();
    let mut defect: f64 = 0.0;
    for i in 0..512 {
        let xi = -20.0 + 40.0 * i as f64 / 511.0;
        let lhs = bspline_hat(&c1, xi) * bspline_hat(&c2, xi);
        defect = defect.max(lhs.max_abs_diff(&bspline_hat(&c12, xi)));
    }
    finish(
        "06 semigroup-dichotomy",
        10.0,
        started,
        worst_par < 1e-10 && defect > 1e-4,
        &format!("parallel-v residual {worst_par:.3e} (tol 1e-10); (e1,e2) defect {defect:.3e} (must exceed 1e-4)"),
    );
}

#[test]
fn criterion_07_riesz_sandwich() {
    let started = Instant::now();
    let orders = [
        Quaternion::scalar(2.0),
        Quaternion::new(2.0, 1.0, 0.0, 0.0),
        Quaternion::new(3.0, 1.0, -1.0, 0.0),
    ];
    let grid = 4096;
    let mut detail = String::new();
    let mut pass = true;
    for q in orders {
        let order = SplineOrder::l2(q).unwrap();
        let shifts = default_riesz_shifts(order.sc());
        let vals = autocorrelation_symbol(&order, grid, shifts);
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let real = SplineOrder::l2(Quaternion::scalar(order.sc())).unwrap();
        let rb = riesz_bounds(&real, grid, shifts).unwrap();
        let stretch = (std::f64::consts::PI * order.vec_norm()).cosh();
        let violations = vals
            .iter()
            .filter(|&&v| v < rb.lower - 1e-6 || v > rb.upper * stretch + 1e-6)
            .count();
        pass &= lo > 0.0 && violations == 0;
        detail.push_str(&format!(
            "[q = {q}: range ({lo:.6}, {hi:.6}), real-order bracket ({:.6}, {:.6}), violations {violations}] ",
            rb.lower, rb.upper
        ));
        if q == Quaternion::scalar(2.0) {
            pass &= (lo - 1.0 / 3.0).abs() < 1e-3 && (hi - 1.0).abs() < 1e-3;
        }
    }
    finish(
        "07 riesz-sandwich",
        30.0,
        started,
        pass,
        &format!("{detail}(lower bound positive and sandwich violation-free required)"),
    );
}

#[test]
fn criterion_08_refinement_equation() {
    let started = Instant::now();
    let order = SplineOrder::time_domain(Quaternion::new(3.0, 1.0, 0.0, 0.0)).unwrap();
    let worst = refinement_residual(&order, 1e-8, 161);
    finish(
        "08 refinement-equation",
        30.0,
        started,
        worst < 1e-6,
        &format!("max refinement residual on t in [0,8] for q = 3+e1, mask tol 1e-8: {worst:.3e} (tol 1e-6)"),
    );
}

#[test]
fn criterion_09_mask_zero_order() {
    let started = Instant::now();
    let mut worst: f64 = 0.0;
    for q in [
        Quaternion::scalar(2.0),
        Quaternion::new(3.0, 1.0, 0.0, 0.0),
        Quaternion::new(2.5, 0.0, 0.5, 0.0),
    ] {
        let order = SplineOrder::time_domain(q).unwrap();
        let slope = mask_zero_order_slope(&order);
        worst = worst.max((slope - 2.0).abs());
    }
    finish(
        "09 mask-zero-order",
        5.0,
        started,
        worst <= 0.01,
        &format!("max |log-log slope of 1-|H0|^2 minus 2| = {worst:.4} (tol 0.01)"),
    );
}

#[test]
fn criterion_10_gaussian_convergence() {
    let started = Instant::now();

    // pointwise ratio at ξ = 1, v = e1
    let devs: Vec<f64> = [1e2, 1e3, 1e4]
        .iter()
        .map(|&a| {
            (pointwise_gaussian_ratio([1.0, 0.0, 0.0], a, 1.0).unwrap() - Biquaternion::ONE).norm()
        })
        .collect();
    let monotone = devs.windows(2).all(|w| w[1] < w[0]);
    let slope = (devs[2].ln() - devs[0].ln()) / (1e4f64.ln() - 1e2f64.ln());
    let pointwise_ok = monotone && (-1.3..=-0.7).contains(&slope);

    // L^p error sequences, p = 1, 2, ∞
    let mut lp_ok = true;
    let mut lp_detail = String::new();
    for p in [1.0, 2.0, f64::INFINITY] {
        let seq = lp_convergence_trend([1.0, -1.0, 0.0], &[4.0, 64.0, 1024.0], p).unwrap();
        let dec = seq.windows(2).all(|w| w[1] < w[0]);
        lp_ok &= dec;
        lp_detail.push_str(&format!("p={p}: {seq:?} "));
    }

    // sinc envelope sweep
    let grid = uniform_grid(-20.0, 20.0, 100_000);
    let mut sinc_ok = true;
    let mut sinc_detail = String::new();
    for a in [2.0, 5.0, 10.0, 100.0] {
        let (worst, at) = sinc_envelope_check(a, &grid);
        sinc_ok &= worst <= 0.0;
        sinc_detail.push_str(&format!("a={a}: max violation {worst:.3e} at ξ={at:.3}; "));
    }

    finish(
        "10 gaussian-convergence",
        120.0,
        started,
        pointwise_ok && lp_ok && sinc_ok,
        &format!(
            "pointwise devs {devs:?} slope {slope:.3} (need [-1.3,-0.7]); L^p decreasing: {lp_detail}; \
             sinc envelope: {sinc_detail}(the a = 2 window violation near |ξ| ≈ 1.9 is a real \
             property of the printed envelope; it holds from a >= 4)"
        ),
    );
}

#[test]
fn criterion_11_figure_reproduction() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let run = Command::new(env!("CARGO_BIN_EXE_qspline"))
        .args(["figures", "--out-dir", dir.path().to_str().unwrap()])
        .output()
        .expect("binary runs");
    let mut pass = run.status.success();
    let mut detail = String::new();
    if !pass {
        detail.push_str(&format!(
            "figures command failed: {}",
            String::from_utf8_lossy(&run.stderr)
        ));
    }
    for name in [
        "fig1_modulus.csv",
        "fig1_scalar.csv",
        "fig2_v1.csv",
        "fig2_v2.csv",
        "fig2_v3.csv",
        "fig3_scalar_v1.csv",
        "fig3_v1_v2.csv",
        "fig4_v1_v2.csv",
    ] {
        if !dir.path().join(name).exists() {
            pass = false;
            detail.push_str(&format!("{name} missing; "));
        }
    }

    // m = 0 series has identically zero vector columns
    for name in ["fig2_v1.csv", "fig2_v2.csv", "fig2_v3.csv"] {
        let text = std::fs::read_to_string(dir.path().join(name)).unwrap();
        for line in text.lines().skip(1) {
            let m0: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
            if m0 != 0.0 {
                pass = false;
                detail.push_str(&format!("{name}: nonzero m0 column; "));
                break;
            }
        }
    }

    // amplitude monotonicity in m from the emitted modulus dataset
    let text = std::fs::read_to_string(dir.path().join("fig1_modulus.csv")).unwrap();
    let mut peaks = [0.0f64; 5];
    for line in text.lines().skip(1) {
        for (j, cell) in line.split(',').skip(1).enumerate() {
            peaks[j] = peaks[j].max(cell.parse::<f64>().unwrap());
        }
    }
    if !peaks.windows(2).all(|w| w[1] > w[0]) {
        pass = false;
        detail.push_str(&format!("peak moduli not increasing: {peaks:?}; "));
    }

    // planarity of the vector-phase data
    let data = qspline::figures::compute_figure_data().unwrap();
    let mut planarity: f64 = 0.0;
    for f in data.family.iter().chain(data.contrast.iter()) {
        planarity = planarity.max(qspline::figures::planarity_residual(f));
    }
    pass &= planarity < 1e-9;

    finish(
        "11 figure-reproduction",
        60.0,
        started,
        pass,
        &format!(
            "8 datasets emitted; m0 vector columns zero; peak moduli {peaks:?} increasing; \
             planarity residual {planarity:.3e} (tol 1e-9) {detail}"
        ),
    );
}

#[test]
fn criterion_12_covariance_homogeneity() {
    let started = Instant::now();
    let mut rng = test_rng(20_012);

    // rotation covariance of Γ
    let mut gamma_cov: f64 = 0.0;
    for _ in 0..50 {
        let q = random_quat(&mut rng, 0.2..8.0, 2.0);
        let rot = random_rotation(&mut rng);
        let lhs = gamma_quat(q.rotate_vector(&rot)).unwrap().value;
        let rhs = gamma_quat(q).unwrap().value.rotate_vector(&rot);
        gamma_cov = gamma_cov.max(lhs.max_abs_diff(&rhs) / (1.0 + rhs.norm()));
    }

    // rotation covariance of B_q: 20 rotations x 20 points
    let mut spline_cov: f64 = 0.0;
    for _ in 0..20 {
        let q = random_quat(&mut rng, 1.2..4.0, 1.2);
        let rot = random_rotation(&mut rng);
        for _ in 0..20 {
            let t = uniform(&mut rng, 0.1, 5.0);
            let lhs =
                bspline_time(&SplineOrder::time_domain(q.rotate_vector(&rot)).unwrap(), t).unwrap();
            let rhs = bspline_time(&SplineOrder::time_domain(q).unwrap(), t)
                .unwrap()
                .rotate_vector(&rot);
            spline_cov = spline_cov.max(lhs.max_abs_diff(&rhs));
        }
    }

    // homogeneity of Γ and B_q components
    let mut homog: f64 = 0.0;
    for _ in 0..100 {
        let q = random_quat(&mut rng, 1.2..4.0, 1.5);
        let g = gamma_quat(q).unwrap().value;
        let t = uniform(&mut rng, 0.1, 6.0);
        let b = bspline_time(&SplineOrder::time_domain(q).unwrap(), t).unwrap();
        let v = q.vec();
        for (x, scale) in [(g.vec(), 1.0 + g.norm()), (b.vec(), 1.0)] {
            for i in 0..3 {
                for j in 0..3 {
                    homog = homog.max((v[j] * x[i] - v[i] * x[j]).abs() / scale);
                }
            }
        }
    }

    finish(
        "12 covariance-homogeneity",
        30.0,
        started,
        gamma_cov < 1e-9 && spline_cov < 1e-9 && homog < 1e-10,
        &format!(
            "Γ covariance {gamma_cov:.3e}, B_q covariance {spline_cov:.3e} (tol 1e-9); \
             homogeneity {homog:.3e} (tol 1e-10)"
        ),
    );
}
