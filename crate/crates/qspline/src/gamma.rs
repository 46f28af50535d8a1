//! Quaternionic Gamma function, Pochhammer symbols, binomial coefficients and
//! binomial series.
//!
//! For `q = a + v` every value here lies in the commutative subalgebra spanned
//! by `1` and `u = v/|v|`, so the scalar/vector split reduces to the complex
//! number `w = a + i|v|`: a function value is `Re f(w) + u Im f(w)`. The
//! recursion-based paths below deliberately stay in quaternion arithmetic so
//! the complex shortcut can serve as an independent cross-check.

use num_complex::Complex64;
use std::sync::OnceLock;

use crate::error::Error;
use crate::quad::adaptive_gk;
use crate::quaternion::{real_pow_quat, Biquaternion, Quaternion};

// ── Complex Gamma kernel (Lanczos, g = 7, 9 coefficients) ────────────

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function of a complex argument via the Lanczos approximation, with
/// the reflection formula for `Re z < 0.5`.
pub fn complex_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z) Γ(1-z) = π / sin(πz)
        let pi = std::f64::consts::PI;
        return pi / ((z * pi).sin() * complex_gamma(Complex64::ONE - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let sqrt_two_pi = (2.0 * std::f64::consts::PI).sqrt();
    sqrt_two_pi * (t.ln() * (z + 0.5)).exp() * (-t).exp() * x
}

/// Natural log of `n!`, exact table up to 170, Stirling series beyond.
pub fn ln_factorial(n: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![0.0f64; 171];
        let mut acc = 0.0f64;
        let mut comp = 0.0f64;
        for (k, slot) in t.iter_mut().enumerate().skip(1) {
            // Kahan-compensated sum of ln k
            let y = (k as f64).ln() - comp;
            let s = acc + y;
            comp = (s - acc) - y;
            acc = s;
            *slot = acc;
        }
        t
    });
    if n <= 170 {
        return table[n];
    }
    let x = n as f64 + 1.0;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    (x - 0.5) * x.ln() - x
        + 0.5 * (2.0 * std::f64::consts::PI).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0))
}

/// `n!` as f64 (finite up to n = 170).
pub fn factorial(n: usize) -> f64 {
    let mut p = 1.0f64;
    for k in 2..=n {
        p *= k as f64;
    }
    p
}

// ── Quaternionic Gamma ───────────────────────────────────────────────

/// How a Gamma value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaMethod {
    /// Complexified kernel: `Γ(q) = Re Γ(a+i|v|) + (v/|v|) Im Γ(a+i|v|)`.
    Complexified,
    /// Adaptive quadrature of the defining cosine/sine integrals.
    Quadrature,
    /// Gauss limit `n! n^q / (q (q+1) ... (q+n))` at a finite n.
    GaussLimit,
}

/// A Gamma value together with its argument and the method that produced it.
#[derive(Debug, Clone, Copy)]
pub struct GammaValue {
    pub value: Quaternion,
    pub order: Quaternion,
    pub method: GammaMethod,
}

fn check_gamma_domain(q: &Quaternion) -> Result<(), Error> {
    let m = q.vec_norm();
    if m == 0.0 && q.a <= 0.0 && (q.a - q.a.round()).abs() < 1e-12 {
        return Err(Error::GammaPole(*q));
    }
    Ok(())
}

/// Quaternionic Gamma via the complexification identity. The scalar part is
/// `(Γ(a-i|v|) + Γ(a+i|v|))/2` and the vector part carries
/// `(i/2)(Γ(a-i|v|) - Γ(a+i|v|))` along `v/|v|`; both collapse to the real and
/// imaginary parts of `Γ(a+i|v|)` by the reflection symmetry of Γ.
pub fn gamma_quat(q: Quaternion) -> Result<GammaValue, Error> {
    check_gamma_domain(&q)?;
    let w = q.complexified();
    let g = complex_gamma(w);
    Ok(GammaValue {
        value: q.embed_complex(g),
        order: q,
        method: GammaMethod::Complexified,
    })
}

/// Quaternionic Gamma by adaptive quadrature of
/// `∫_0^∞ t^{a-1} cos(|v| log t) e^{-t} dt` and the matching sine integral,
/// split at `t = 1` with the upper limit chosen from the integrand decay.
/// Independent of the Lanczos kernel; requires `Sc(q) > 0`.
pub fn gamma_quadrature(q: Quaternion) -> Result<GammaValue, Error> {
    if q.a <= 0.0 {
        return Err(Error::OutOfDomain("gamma_quadrature requires Sc(q) > 0"));
    }
    let a = q.a;
    let m = q.vec_norm();

    // e^{-T} T^{a-1} < 1e-18: iterate T = 41.5 + (a-1) ln T
    let mut t_max = 45.0 + 3.0 * a;
    for _ in 0..20 {
        t_max = 41.5 + (a - 1.0).max(0.0) * t_max.ln();
    }
    let t_max = t_max.max(45.0);

    let scale = complex_gamma(Complex64::new(a, 0.0)).re.abs();
    let tol_abs = scale * 1e-12;

    let integrate = |f: &dyn Fn(f64) -> f64| -> f64 {
        let (low, _) = adaptive_gk(&|t: f64| f(t), 0.0, 1.0, tol_abs, 1e-12, 4000);
        let (high, _) = adaptive_gk(&|t: f64| f(t), 1.0, t_max, tol_abs, 1e-12, 4000);
        low + high
    };

    let cos_part = integrate(&|t: f64| t.powf(a - 1.0) * (m * t.ln()).cos() * (-t).exp());
    let sin_part = if m == 0.0 {
        0.0
    } else {
        integrate(&|t: f64| t.powf(a - 1.0) * (m * t.ln()).sin() * (-t).exp())
    };

    Ok(GammaValue {
        value: q.embed_complex(Complex64::new(cos_part, sin_part)),
        order: q,
        method: GammaMethod::Quadrature,
    })
}

/// Finite-n Gauss product `(1·2···n) / (q(q+1)···(q+n)) · n^q`.
///
/// Converges to `Γ(q)` as `n → ∞` with a relative error of order
/// `|q(q+1)|/(2n)`. Falls back to a log-magnitude evaluation whenever the
/// direct product would overflow (always for `n > 170`).
pub fn gamma_gauss_limit(q: Quaternion, n: usize) -> Result<GammaValue, Error> {
    if q.a <= 0.0 {
        return Err(Error::OutOfDomain("gamma_gauss_limit requires Sc(q) > 0"));
    }
    if n == 0 {
        return Err(Error::OutOfDomain("gamma_gauss_limit requires n >= 1"));
    }

    let nf = n as f64;
    let ln_mag_est = ln_factorial(n) + (q.a.abs() + 2.0) * (nf + 2.0).ln();
    let value = if n <= 170 && ln_mag_est < 600.0 {
        let mut num = 1.0f64;
        for k in 1..=n {
            num *= k as f64;
        }
        let mut den = q;
        for k in 1..=n {
            den = den * (q + Quaternion::scalar(k as f64));
        }
        let nq = real_pow_quat(nf, q)?;
        (den.inverse()? * num) * nq
    } else {
        // log-magnitude form: exp(ln n! - Σ ln(w+k) + w ln n) with w = a+i|v|
        let w = q.complexified();
        let mut acc = Complex64::ZERO;
        let mut comp = Complex64::ZERO;
        for k in 0..=n {
            let y = (w + k as f64).ln() - comp;
            let s = acc + y;
            comp = (s - acc) - y;
            acc = s;
        }
        let total = Complex64::new(ln_factorial(n), 0.0) - acc + w * nf.ln();
        q.embed_complex(total.exp())
    };

    Ok(GammaValue {
        value,
        order: q,
        method: GammaMethod::GaussLimit,
    })
}

// ── Pochhammer symbols and binomial coefficients ─────────────────────

/// Falling product `(q)_j = q (q-1) ... (q-j+1)` by left-to-right recursion in
/// quaternion arithmetic.
pub fn pochhammer(q: Quaternion, j: usize) -> Quaternion {
    let mut p = Quaternion::ONE;
    for l in 0..j {
        p = p * (q - Quaternion::scalar(l as f64));
    }
    p
}

/// `(q)_j` through the complex shortcut `Re(w_j) + (v/|v|) Im(w_j)` with
/// `w = a + i|v|`; cross-check path for [`pochhammer`].
pub fn pochhammer_via_complex(q: Quaternion, j: usize) -> Quaternion {
    let w = q.complexified();
    let mut p = Complex64::ONE;
    for l in 0..j {
        p *= w - l as f64;
    }
    q.embed_complex(p)
}

/// Precomputed `(q)_j` for `j = 0..=j_max`, built once by the recursion and
/// shared read-only afterwards.
#[derive(Debug, Clone)]
pub struct PochhammerTable {
    order: Quaternion,
    values: Vec<Quaternion>,
}

impl PochhammerTable {
    pub fn new(order: Quaternion, j_max: usize) -> Self {
        let mut values = Vec::with_capacity(j_max + 1);
        values.push(Quaternion::ONE);
        let mut p = Quaternion::ONE;
        for l in 0..j_max {
            p = p * (order - Quaternion::scalar(l as f64));
            values.push(p);
        }
        Self { order, values }
    }

    #[inline]
    pub fn order(&self) -> Quaternion {
        self.order
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn value(&self, j: usize) -> Quaternion {
        self.values[j]
    }

    /// Binomial coefficient `binom(q, j) = (q)_j / j!` from the table.
    pub fn binom(&self, j: usize) -> Quaternion {
        if j <= 170 {
            self.values[j] / factorial(j)
        } else {
            binom_quat(self.order, j)
        }
    }
}

/// Quaternionic binomial coefficient `binom(q, j) = (q)_j / j!`.
///
/// Small `j` divides the Pochhammer product by an exact factorial; for
/// `j > 20` the factorial (and the product) move to log form to avoid
/// overflow.
pub fn binom_quat(q: Quaternion, j: usize) -> Quaternion {
    if j <= 20 {
        return pochhammer(q, j) / factorial(j);
    }
    let w = q.complexified();
    let mut acc = Complex64::ZERO;
    for l in 0..j {
        let f = w - l as f64;
        if f.norm() == 0.0 {
            return Quaternion::ZERO;
        }
        acc += f.ln();
    }
    let b = (acc - ln_factorial(j)).exp();
    q.embed_complex(b)
}

/// Result of a truncated binomial series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct BinomialSeries {
    pub value: Biquaternion,
    pub terms: usize,
    /// Set when `|z| = 1` with `Sc(q) <= 1`, or when the term cap was reached
    /// before the run-length stopping rule fired.
    pub slow_convergence: bool,
}

const SERIES_CAP: usize = 100_000;

/// Partial sums of `(1+z)^q = Σ binom(q, j) z^j` for `|z| <= 1`, stopping when
/// five consecutive term moduli fall below `tol` times the partial-sum modulus
/// (the terms are not monotone for quaternionic orders).
pub fn binomial_series(q: Quaternion, z: Complex64, tol: f64) -> Result<BinomialSeries, Error> {
    if q.a <= 0.0 {
        return Err(Error::OutOfDomain("binomial_series requires Sc(q) > 0"));
    }
    if z.norm() > 1.0 + 1e-12 {
        return Err(Error::OutOfDomain("binomial_series requires |z| <= 1"));
    }
    let w = q.complexified();
    let mut slow = z.norm() > 1.0 - 1e-12 && q.a <= 1.0;

    let mut coeff = Complex64::ONE; // binom(w, j)
    let mut zp = Complex64::ONE; // z^j
    let mut s0 = Complex64::ONE; // Σ z^j Re binom
    let mut s1 = Complex64::ZERO; // Σ z^j Im binom
    let mut terms = 1usize;
    let mut run = 0usize;

    for j in 0..SERIES_CAP {
        coeff *= (w - j as f64) / (j as f64 + 1.0);
        zp *= z;
        let t0 = zp * coeff.re;
        let t1 = zp * coeff.im;
        s0 += t0;
        s1 += t1;
        terms += 1;
        let term_mag = (t0.norm_sqr() + t1.norm_sqr()).sqrt();
        let sum_mag = (s0.norm_sqr() + s1.norm_sqr()).sqrt().max(1e-300);
        if term_mag < tol * sum_mag {
            run += 1;
            if run >= 5 {
                break;
            }
        } else {
            run = 0;
        }
        if j + 1 == SERIES_CAP {
            slow = true;
        }
    }

    let value = match q.direction() {
        Some(u) => Biquaternion::from_scalar_and_dir(s0, s1, u),
        None => Biquaternion::scalar(s0),
    };
    Ok(BinomialSeries {
        value,
        terms,
        slow_convergence: slow,
    })
}
