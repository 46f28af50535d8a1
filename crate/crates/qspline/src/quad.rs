//! Numerical quadrature: 15-point Gauss–Kronrod with adaptive bisection and
//! composite Simpson rules, generic over scalar, complex and biquaternion
//! integrands.

use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

use crate::quaternion::Biquaternion;

/// Output values the quadrature routines can accumulate.
pub trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::ZERO
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl QuadValue for Biquaternion {
    fn zero() -> Self {
        Biquaternion::ZERO
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

// 15-point Kronrod nodes with the embedded 7-point Gauss rule (QUADPACK).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_17,
    0.207_784_955_007_898_47,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel; returns (integral, error estimate).
fn gk15<V: QuadValue, F: Fn(f64) -> V>(f: &F, a: f64, b: f64) -> (V, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    for (j, &x) in XGK.iter().enumerate().take(7) {
        let dx = half * x;
        let fsum = f(center - dx) + f(center + dx);
        kronrod = kronrod + fsum * WGK[j];
        if j % 2 == 1 {
            gauss = gauss + fsum * WG[j / 2];
        }
    }
    let integral = kronrod * half;
    let err = (kronrod - gauss).magnitude() * half.abs();
    (integral, err)
}

/// Adaptive Gauss–Kronrod on `[a, b]`.
///
/// Bisects the worst panel until the summed error estimate falls below
/// `tol_abs + tol_rel * |I|` or `max_panels` is reached. Returns the integral
/// and the final error estimate.
pub fn adaptive_gk<V: QuadValue, F: Fn(f64) -> V>(
    f: &F,
    a: f64,
    b: f64,
    tol_abs: f64,
    tol_rel: f64,
    max_panels: usize,
) -> (V, f64) {
    struct Panel<V> {
        a: f64,
        b: f64,
        value: V,
        err: f64,
    }

    let (v0, e0) = gk15(f, a, b);
    let mut panels = vec![Panel {
        a,
        b,
        value: v0,
        err: e0,
    }];

    loop {
        let total: V = panels.iter().fold(V::zero(), |acc, p| acc + p.value);
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        if total_err <= tol_abs + tol_rel * total.magnitude() || panels.len() >= max_panels {
            return (total, total_err);
        }
        // split the panel with the largest error estimate
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .expect("non-empty panel list");
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            // interval too small to bisect in f64; keep it and stop refining
            let mut kept = p;
            kept.err = 0.0;
            panels.push(kept);
            continue;
        }
        let (vl, el) = gk15(f, p.a, mid);
        let (vr, er) = gk15(f, mid, p.b);
        panels.push(Panel {
            a: p.a,
            b: mid,
            value: vl,
            err: el,
        });
        panels.push(Panel {
            a: mid,
            b: p.b,
            value: vr,
            err: er,
        });
    }
}

/// Composite Simpson on `[a, b]` with `n` intervals (`n` is rounded up to an
/// even count).
pub fn simpson<V: QuadValue, F: Fn(f64) -> V>(f: &F, a: f64, b: f64, n: usize) -> V {
    let n = if n.is_multiple_of(2) { n.max(2) } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    let mut odd = V::zero();
    let mut even = V::zero();
    for i in 1..n {
        let x = a + h * i as f64;
        if i % 2 == 1 {
            odd = odd + f(x);
        } else {
            even = even + f(x);
        }
    }
    acc = acc + odd * 4.0 + even * 2.0;
    acc * (h / 3.0)
}
