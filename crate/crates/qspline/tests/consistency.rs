//! Cross-module consistency: the time- and Fourier-domain evaluations, the
//! refinement machinery and the difference operator all describe one spline.

use qspline::fourier::{bspline_hat, mask_coefficients};
use qspline::gamma::gamma_quat;
use qspline::quaternion::complex_pow_quat;
use qspline::time_domain::{
    backwards_difference, bspline_time, bspline_time_grid, truncated_power,
};
use qspline::verify::{fourier_inversion, refinement_residual};
use qspline::{Quaternion, SplineOrder};

#[test]
fn time_and_fourier_domain_agree() {
    for (q, ts) in [
        (
            Quaternion::new(3.0, 1.0, 0.0, 0.0),
            vec![0.5, 1.0, 1.7, 2.3, 3.1],
        ),
        (Quaternion::new(2.5, 0.0, 0.8, -0.4), vec![0.4, 1.3, 2.6]),
    ] {
        let order = SplineOrder::time_domain(q).unwrap();
        let inverted = fourier_inversion(&order, &ts);
        for (t, inv) in ts.iter().zip(inverted) {
            let direct = bspline_time(&order, *t).unwrap();
            assert!(
                direct.max_abs_diff(&inv) < 1e-5,
                "domains disagree at q={q}, t={t}: {}",
                direct.max_abs_diff(&inv)
            );
        }
    }
}

#[test]
fn refinement_holds_for_three_orders() {
    for q in [
        Quaternion::new(3.0, 1.0, 0.0, 0.0),
        Quaternion::new(2.5, 0.0, 0.8, -0.4),
        Quaternion::scalar(2.0),
    ] {
        let order = SplineOrder::time_domain(q).unwrap();
        let worst = refinement_residual(&order, 1e-8, 161);
        assert!(worst < 1e-7, "refinement residual {worst} at q={q}");
    }
}

#[test]
fn mask_tail_is_within_its_recorded_bound() {
    let order = SplineOrder::time_domain(Quaternion::new(2.2, 0.0, 1.0, 0.0)).unwrap();
    let mc = mask_coefficients(&order, 1e-6).unwrap();
    // recompute far more coefficients and compare the dropped mass
    let fine = mask_coefficients(&order, 1e-10).unwrap();
    let dropped: f64 = fine.h[mc.h.len()..].iter().map(|h| h.norm()).sum();
    assert!(
        dropped <= mc.truncation_error * 1.5 + 1e-12,
        "dropped {dropped} vs recorded bound {}",
        mc.truncation_error
    );
}

#[test]
fn difference_operator_reproduces_grid() {
    // ∇^q (t_+^{q-1} / Γ(q)) sampled on a grid equals the grid evaluation
    let q = Quaternion::new(2.2, 0.4, 0.0, -0.4);
    let order = SplineOrder::time_domain(q).unwrap();
    let g_inv = gamma_quat(q).unwrap().value.inverse().unwrap();
    let qm1 = q - Quaternion::ONE;
    let f = move |t: f64| g_inv * truncated_power(t, qm1);
    let diffed = backwards_difference(q, &f, 0.0, 0.5, 13, 1e-10).unwrap();
    let grid = bspline_time_grid(&order, 0.0, 0.5, 13).unwrap();
    for (a, b) in diffed.samples.iter().zip(&grid.samples) {
        assert!(a.max_abs_diff(b) < 1e-9);
    }
}

#[test]
fn fourier_values_factor_through_the_power() {
    // B̂_q(ξ) is literally Ξ(ξ)^q: spot-check the factorization publicly
    let q = Quaternion::new(1.8, 0.0, 0.0, 1.2);
    let order = SplineOrder::l2(q).unwrap();
    for &xi in &[0.3, 1.0, 2.5, -4.0, 9.7] {
        let xv = qspline::fourier::xi_symbol(xi);
        let direct = complex_pow_quat(xv.value, q).unwrap();
        assert_eq!(bspline_hat(&order, xi), direct);
    }
}
