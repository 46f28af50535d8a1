//! Real quaternions, biquaternions (quaternions with complex components) and
//! the quaternionic power of a complex number.
//!
//! Conventions: a quaternion is written `q = a + v1 e1 + v2 e2 + v3 e3` with
//! scalar part `Sc(q) = a` and vector part `Ve(q) = v`. The units satisfy
//! `e1 e2 = e3`, `e2 e3 = e1`, `e3 e1 = e2` and `ei^2 = -1`. All fractional
//! powers and logarithms use the principal branch `arg ∈ (-π, π]`.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;

// ── Real quaternions ─────────────────────────────────────────────────

/// A real quaternion `a + v1 e1 + v2 e2 + v3 e3`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub a: f64,
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);

    #[inline]
    pub const fn new(a: f64, v1: f64, v2: f64, v3: f64) -> Self {
        Self { a, v1, v2, v3 }
    }

    /// Purely scalar quaternion.
    #[inline]
    pub const fn scalar(a: f64) -> Self {
        Self::new(a, 0.0, 0.0, 0.0)
    }

    /// Purely vectorial quaternion.
    #[inline]
    pub const fn vector(v1: f64, v2: f64, v3: f64) -> Self {
        Self::new(0.0, v1, v2, v3)
    }

    /// Scalar part `Sc(q)`.
    #[inline]
    pub fn sc(&self) -> f64 {
        self.a
    }

    /// Vector part `Ve(q)` as a quaternion with zero scalar part.
    #[inline]
    pub fn ve(&self) -> Quaternion {
        Quaternion::vector(self.v1, self.v2, self.v3)
    }

    /// Euclidean norm of the vector part, `|v|`.
    #[inline]
    pub fn vec_norm(&self) -> f64 {
        (self.v1 * self.v1 + self.v2 * self.v2 + self.v3 * self.v3).sqrt()
    }

    /// Unit direction of the vector part, `None` when `|v| = 0`.
    pub fn direction(&self) -> Option<[f64; 3]> {
        let m = self.vec_norm();
        if m == 0.0 {
            None
        } else {
            Some([self.v1 / m, self.v2 / m, self.v3 / m])
        }
    }

    /// `Re(w) + (v/|v|) Im(w)` along this quaternion's vector direction; the
    /// inverse of the complexification `q = a + v ↦ w = a + i|v|`. With a
    /// vanishing vector part the imaginary part is dropped (the complexified
    /// value of a real argument is real).
    pub fn embed_complex(&self, w: Complex64) -> Quaternion {
        match self.direction() {
            Some(u) => Quaternion::new(w.re, u[0] * w.im, u[1] * w.im, u[2] * w.im),
            None => Quaternion::scalar(w.re),
        }
    }

    /// The complexified counterpart `w = Sc(q) + i|Ve(q)|`.
    pub fn complexified(&self) -> Complex64 {
        Complex64::new(self.a, self.vec_norm())
    }

    /// Conjugate `a - v`.
    #[inline]
    pub fn conj(&self) -> Self {
        Self::new(self.a, -self.v1, -self.v2, -self.v3)
    }

    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.a * self.a + self.v1 * self.v1 + self.v2 * self.v2 + self.v3 * self.v3
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Multiplicative inverse `conj(q) / |q|^2`.
    pub fn inverse(&self) -> Result<Self, Error> {
        let n2 = self.norm_sq();
        if n2 < 1e-300 {
            return Err(Error::SingularValue("quaternion inverse of (near) zero"));
        }
        Ok(self.conj() * (1.0 / n2))
    }

    /// Exponential `e^q = e^a (cos|v| + (v/|v|) sin|v|)`.
    pub fn exp(&self) -> Self {
        let ea = self.a.exp();
        let m = self.vec_norm();
        if m == 0.0 {
            return Self::scalar(ea);
        }
        let c = ea * m.cos();
        let s = ea * sinc(m);
        Self::new(c, s * self.v1, s * self.v2, s * self.v3)
    }

    /// Componentwise maximum absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.v1 - other.v1).abs())
            .max((self.v2 - other.v2).abs())
            .max((self.v3 - other.v3).abs())
    }

    /// Vector components as an array.
    #[inline]
    pub fn vec(&self) -> [f64; 3] {
        [self.v1, self.v2, self.v3]
    }

    /// Apply a 3x3 rotation to the vector part, fixing the scalar axis
    /// (the `1 ⊗ σ` action).
    pub fn rotate_vector(&self, rot: &[[f64; 3]; 3]) -> Self {
        let v = self.vec();
        let mut w = [0.0; 3];
        for (i, wi) in w.iter_mut().enumerate() {
            *wi = rot[i][0] * v[0] + rot[i][1] * v[1] + rot[i][2] * v[2];
        }
        Self::new(self.a, w[0], w[1], w[2])
    }
}

impl From<f64> for Quaternion {
    fn from(a: f64) -> Self {
        Quaternion::scalar(a)
    }
}

impl std::fmt::Display for Quaternion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.a)?;
        for (v, unit) in [(self.v1, "e1"), (self.v2, "e2"), (self.v3, "e3")] {
            if v < 0.0 {
                write!(f, " - {} {unit}", -v)?;
            } else {
                write!(f, " + {} {unit}", v)?;
            }
        }
        Ok(())
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.a + r.a, self.v1 + r.v1, self.v2 + r.v2, self.v3 + r.v3)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.a - r.a, self.v1 - r.v1, self.v2 - r.v2, self.v3 - r.v3)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.v1, -self.v2, -self.v3)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.a * s, self.v1 * s, self.v2 * s, self.v3 * s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, s: f64) -> Quaternion {
        self * (1.0 / s)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    /// Hamilton product under `e1 e2 = e3`, `e2 e3 = e1`, `e3 e1 = e2`.
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.a * r.a - self.v1 * r.v1 - self.v2 * r.v2 - self.v3 * r.v3,
            self.a * r.v1 + self.v1 * r.a + self.v2 * r.v3 - self.v3 * r.v2,
            self.a * r.v2 - self.v1 * r.v3 + self.v2 * r.a + self.v3 * r.v1,
            self.a * r.v3 + self.v1 * r.v2 - self.v2 * r.v1 + self.v3 * r.a,
        )
    }
}

/// Free-function form of the Hamilton product.
#[inline]
pub fn quat_mul(p: Quaternion, q: Quaternion) -> Quaternion {
    p * q
}

/// Exponential of a real quaternion (free-function form).
#[inline]
pub fn quat_exp(q: Quaternion) -> Quaternion {
    q.exp()
}

// ── Biquaternions ────────────────────────────────────────────────────

/// A quaternion with complex components, `c0 + c1 e1 + c2 e2 + c3 e3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Biquaternion {
    pub c0: Complex64,
    pub c1: Complex64,
    pub c2: Complex64,
    pub c3: Complex64,
}

impl Biquaternion {
    pub const ZERO: Biquaternion = Biquaternion {
        c0: Complex64::new(0.0, 0.0),
        c1: Complex64::new(0.0, 0.0),
        c2: Complex64::new(0.0, 0.0),
        c3: Complex64::new(0.0, 0.0),
    };
    pub const ONE: Biquaternion = Biquaternion {
        c0: Complex64::new(1.0, 0.0),
        c1: Complex64::new(0.0, 0.0),
        c2: Complex64::new(0.0, 0.0),
        c3: Complex64::new(0.0, 0.0),
    };

    #[inline]
    pub const fn new(c0: Complex64, c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        Self { c0, c1, c2, c3 }
    }

    /// Purely scalar biquaternion.
    #[inline]
    pub fn scalar(c: Complex64) -> Self {
        Self::new(c, Complex64::ZERO, Complex64::ZERO, Complex64::ZERO)
    }

    /// Scalar `c` times the real unit vector `u`.
    #[inline]
    pub fn from_scalar_and_dir(c0: Complex64, s: Complex64, u: [f64; 3]) -> Self {
        Self::new(c0, s * u[0], s * u[1], s * u[2])
    }

    /// Conjugation in `H_C`: negate the vector part and complex-conjugate
    /// every component.
    pub fn conj(&self) -> Self {
        Self::new(
            self.c0.conj(),
            -self.c1.conj(),
            -self.c2.conj(),
            -self.c3.conj(),
        )
    }

    /// Complex inner product `<p, q> = Sc(p conj(q)) = Σ p_i conj(q_i)`.
    pub fn inner(&self, q: &Biquaternion) -> Complex64 {
        self.c0 * q.c0.conj()
            + self.c1 * q.c1.conj()
            + self.c2 * q.c2.conj()
            + self.c3 * q.c3.conj()
    }

    /// Squared modulus `Σ |c_i|^2 = Re <p, p>`.
    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.c0.norm_sqr() + self.c1.norm_sqr() + self.c2.norm_sqr() + self.c3.norm_sqr()
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Inverse through the quaternionic conjugate without complex conjugation:
    /// `(c0 + c)(c0 - c) = c0^2 + c1^2 + c2^2 + c3^2` is a complex scalar.
    pub fn inverse(&self) -> Result<Self, Error> {
        let d = self.c0 * self.c0 + self.c1 * self.c1 + self.c2 * self.c2 + self.c3 * self.c3;
        if d.norm() < 1e-300 {
            return Err(Error::SingularValue(
                "biquaternion inverse: c0^2 + |c|^2 vanishes",
            ));
        }
        let inv = d.inv();
        Ok(Self::new(
            self.c0 * inv,
            -self.c1 * inv,
            -self.c2 * inv,
            -self.c3 * inv,
        ))
    }

    /// Exponential via `exp(c0 + P) = e^{c0}(cos s + P sin(s)/s)` with
    /// `s^2 = c1^2 + c2^2 + c3^2`.
    pub fn exp(&self) -> Self {
        let e0 = self.c0.exp();
        let s2 = self.c1 * self.c1 + self.c2 * self.c2 + self.c3 * self.c3;
        let s = s2.sqrt();
        let (cos_s, sinc_s) = if s.norm() < 1e-4 {
            // Taylor in s^2 to avoid 0/0 at a vanishing vector part.
            let c = Complex64::ONE - s2 / 2.0 + s2 * s2 / 24.0;
            let sn = Complex64::ONE - s2 / 6.0 + s2 * s2 / 120.0;
            (c, sn)
        } else {
            (s.cos(), s.sin() / s)
        };
        let f = e0 * sinc_s;
        Self::new(e0 * cos_s, f * self.c1, f * self.c2, f * self.c3)
    }

    /// Largest componentwise absolute difference (complex modulus per lane).
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.c0 - other.c0)
            .norm()
            .max((self.c1 - other.c1).norm())
            .max((self.c2 - other.c2).norm())
            .max((self.c3 - other.c3).norm())
    }

    /// Largest imaginary residue over the four components.
    pub fn max_imag(&self) -> f64 {
        self.c0
            .im
            .abs()
            .max(self.c1.im.abs())
            .max(self.c2.im.abs())
            .max(self.c3.im.abs())
    }

    /// Drop the imaginary parts, failing if any residue exceeds `tol`.
    pub fn into_real(self, tol: f64) -> Result<Quaternion, Error> {
        let resid = self.max_imag();
        if resid > tol {
            return Err(Error::ImaginaryResidue(resid));
        }
        Ok(Quaternion::new(
            self.c0.re, self.c1.re, self.c2.re, self.c3.re,
        ))
    }
}

impl From<Quaternion> for Biquaternion {
    fn from(q: Quaternion) -> Self {
        Biquaternion::new(
            Complex64::new(q.a, 0.0),
            Complex64::new(q.v1, 0.0),
            Complex64::new(q.v2, 0.0),
            Complex64::new(q.v3, 0.0),
        )
    }
}

impl Add for Biquaternion {
    type Output = Biquaternion;
    fn add(self, r: Biquaternion) -> Biquaternion {
        Biquaternion::new(
            self.c0 + r.c0,
            self.c1 + r.c1,
            self.c2 + r.c2,
            self.c3 + r.c3,
        )
    }
}

impl Sub for Biquaternion {
    type Output = Biquaternion;
    fn sub(self, r: Biquaternion) -> Biquaternion {
        Biquaternion::new(
            self.c0 - r.c0,
            self.c1 - r.c1,
            self.c2 - r.c2,
            self.c3 - r.c3,
        )
    }
}

impl Neg for Biquaternion {
    type Output = Biquaternion;
    fn neg(self) -> Biquaternion {
        Biquaternion::new(-self.c0, -self.c1, -self.c2, -self.c3)
    }
}

impl Mul<Complex64> for Biquaternion {
    type Output = Biquaternion;
    fn mul(self, s: Complex64) -> Biquaternion {
        Biquaternion::new(self.c0 * s, self.c1 * s, self.c2 * s, self.c3 * s)
    }
}

impl Mul<f64> for Biquaternion {
    type Output = Biquaternion;
    fn mul(self, s: f64) -> Biquaternion {
        Biquaternion::new(self.c0 * s, self.c1 * s, self.c2 * s, self.c3 * s)
    }
}

impl Mul for Biquaternion {
    type Output = Biquaternion;
    /// Same multiplication table as the real quaternions, componentwise complex.
    fn mul(self, r: Biquaternion) -> Biquaternion {
        Biquaternion::new(
            self.c0 * r.c0 - self.c1 * r.c1 - self.c2 * r.c2 - self.c3 * r.c3,
            self.c0 * r.c1 + self.c1 * r.c0 + self.c2 * r.c3 - self.c3 * r.c2,
            self.c0 * r.c2 - self.c1 * r.c3 + self.c2 * r.c0 + self.c3 * r.c1,
            self.c0 * r.c3 + self.c1 * r.c2 - self.c2 * r.c1 + self.c3 * r.c0,
        )
    }
}

/// Hamilton product of biquaternions (free-function form).
#[inline]
pub fn biquat_mul(p: Biquaternion, q: Biquaternion) -> Biquaternion {
    p * q
}

// ── Quaternionic powers of complex numbers ───────────────────────────

/// sin(x)/x with a Taylor fallback near zero.
#[inline]
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// The quaternionic power `z^q = z^a (cos(|v| log z) + (v/|v|) sin(|v| log z))`
/// of a complex number, principal branch.
///
/// `z = 0` returns exactly zero when `Sc(q) > 0` (the continuity limit) and
/// errors otherwise. A vanishing vector part reduces to the scalar `z^a`.
pub fn complex_pow_quat(z: Complex64, q: Quaternion) -> Result<Biquaternion, Error> {
    if z.re == 0.0 && z.im == 0.0 {
        if q.a > 0.0 {
            return Ok(Biquaternion::ZERO);
        }
        return Err(Error::ZeroBase { sc: q.a });
    }
    let lz = z.ln(); // principal branch, arg ∈ (-π, π]
    let za = (lz * q.a).exp();
    let m = q.vec_norm();
    if m == 0.0 {
        return Ok(Biquaternion::scalar(za));
    }
    let u = [q.v1 / m, q.v2 / m, q.v3 / m];
    let arg = lz * m;
    let c = za * arg.cos();
    let s = za * arg.sin();
    Ok(Biquaternion::from_scalar_and_dir(c, s, u))
}

/// `x^q` for a real `x > 0`; stays in real-quaternion arithmetic.
///
/// Returns zero for `x = 0` with `Sc(q) > 0`.
pub fn real_pow_quat(x: f64, q: Quaternion) -> Result<Quaternion, Error> {
    if x < 0.0 {
        return Err(Error::OutOfDomain("real_pow_quat requires x >= 0"));
    }
    if x == 0.0 {
        if q.a > 0.0 {
            return Ok(Quaternion::ZERO);
        }
        return Err(Error::ZeroBase { sc: q.a });
    }
    let lx = x.ln();
    let xa = (q.a * lx).exp();
    let m = q.vec_norm();
    if m == 0.0 {
        return Ok(Quaternion::scalar(xa));
    }
    let theta = m * lx;
    let c = xa * theta.cos();
    let s = xa * theta.sin() / m;
    Ok(Quaternion::new(c, s * q.v1, s * q.v2, s * q.v3))
}

/// Linear dependence test for the vector parts of two orders: true iff
/// `|v1 ∧ v2| <= tol |v1| |v2|`, the criterion for `z^{q1} z^{q2} = z^{q1+q2}`
/// to hold near `z = 1`.
pub fn semigroup_compatible(q1: Quaternion, q2: Quaternion, tol: f64) -> bool {
    let (x1, y1, z1) = (q1.v1, q1.v2, q1.v3);
    let (x2, y2, z2) = (q2.v1, q2.v2, q2.v3);
    let wedge = [y1 * z2 - z1 * y2, z1 * x2 - x1 * z2, x1 * y2 - y1 * x2];
    let wn = (wedge[0] * wedge[0] + wedge[1] * wedge[1] + wedge[2] * wedge[2]).sqrt();
    wn <= tol * q1.vec_norm() * q2.vec_norm()
}

// ── Validated spline orders ──────────────────────────────────────────

/// A quaternionic order together with the minimum admissible scalar part for
/// the operation consuming it (1/2 for L^2 machinery, 1 for L^1/time domain,
/// 2 for the recursion), plus the cached vector norm and direction.
#[derive(Debug, Clone, Copy)]
pub struct SplineOrder {
    q: Quaternion,
    floor: f64,
    vec_norm: f64,
    direction: Option<[f64; 3]>,
}

impl SplineOrder {
    pub fn new(q: Quaternion, floor: f64) -> Result<Self, Error> {
        if !(q.a > floor) {
            return Err(Error::InvalidOrder { sc: q.a, floor });
        }
        Ok(Self {
            q,
            floor,
            vec_norm: q.vec_norm(),
            direction: q.direction(),
        })
    }

    /// Order valid for Fourier-domain evaluation (`Sc(q) > 0`).
    pub fn fourier(q: Quaternion) -> Result<Self, Error> {
        Self::new(q, 0.0)
    }

    /// Order valid for L^2 machinery (`Sc(q) > 1/2`).
    pub fn l2(q: Quaternion) -> Result<Self, Error> {
        Self::new(q, 0.5)
    }

    /// Order valid for the time-domain representation and mask (`Sc(q) > 1`).
    pub fn time_domain(q: Quaternion) -> Result<Self, Error> {
        Self::new(q, 1.0)
    }

    /// Order valid for the recursion relation (`Sc(q) > 2`).
    pub fn recursion(q: Quaternion) -> Result<Self, Error> {
        Self::new(q, 2.0)
    }

    #[inline]
    pub fn q(&self) -> Quaternion {
        self.q
    }

    #[inline]
    pub fn sc(&self) -> f64 {
        self.q.a
    }

    #[inline]
    pub fn vec_norm(&self) -> f64 {
        self.vec_norm
    }

    #[inline]
    pub fn direction(&self) -> Option<[f64; 3]> {
        self.direction
    }

    #[inline]
    pub fn floor(&self) -> f64 {
        self.floor
    }
}

// ── SO(3) helpers ────────────────────────────────────────────────────

/// Rodrigues rotation matrix about a (not necessarily unit) axis.
pub fn rotation_matrix(axis: [f64; 3], angle: f64) -> [[f64; 3]; 3] {
    let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    if n == 0.0 {
        return [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    }
    let (x, y, z) = (axis[0] / n, axis[1] / n, axis[2] / n);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn e(i: usize) -> Quaternion {
        match i {
            1 => Quaternion::vector(1.0, 0.0, 0.0),
            2 => Quaternion::vector(0.0, 1.0, 0.0),
            _ => Quaternion::vector(0.0, 0.0, 1.0),
        }
    }

    #[test]
    fn unit_relations() {
        assert_eq!(e(1) * e(2), e(3));
        assert_eq!(e(2) * e(3), e(1));
        assert_eq!(e(3) * e(1), e(2));
        assert_eq!(e(1) * e(1), Quaternion::scalar(-1.0));
        assert_eq!(e(2) * e(2), Quaternion::scalar(-1.0));
        assert_eq!(e(3) * e(3), Quaternion::scalar(-1.0));
    }

    #[test]
    fn identity_and_norm() {
        let q = Quaternion::new(1.5, -0.25, 2.0, 0.75);
        assert_eq!(q * Quaternion::ONE, q);
        assert_eq!(Quaternion::ONE * q, q);
        let qc = q * q.conj();
        assert!((qc.a - q.norm_sq()).abs() < 1e-12 * q.norm_sq());
        assert!(qc.ve().norm() < 1e-12);
        let cq = q.conj() * q;
        assert!((cq.a - q.norm_sq()).abs() < 1e-12 * q.norm_sq());
    }

    // (e1+e2)(e1-e2) expanded against the scalar/wedge decomposition of a
    // vector product: -<v,w> + v∧w with v=(1,1,0), w=(1,-1,0) gives -2 e3.
    #[test]
    fn vector_product_decomposition_case() {
        let p = e(1) + e(2);
        let q = e(1) - e(2);
        let r = p * q;
        assert_eq!(r, Quaternion::vector(0.0, 0.0, -2.0));
    }

    #[test]
    fn exp_basics() {
        assert_eq!(Quaternion::ZERO.exp(), Quaternion::ONE);
        let q = e(1) * std::f64::consts::PI;
        let r = q.exp();
        assert!((r.a + 1.0).abs() < 1e-12);
        assert!(r.ve().norm() < 1e-12);
    }

    // Oracle: direct summation of the defining series Σ q^j / j!.
    fn exp_series(q: Quaternion) -> Quaternion {
        let mut term = Quaternion::ONE;
        let mut sum = Quaternion::ONE;
        for j in 1..=60 {
            term = term * q * (1.0 / j as f64);
            sum = sum + term;
        }
        sum
    }

    #[test]
    fn exp_matches_series_oracle() {
        let mut rng = crate::verify::test_rng(11);
        for _ in 0..200 {
            let q = crate::verify::random_quat(&mut rng, -2.0..2.0, 2.5);
            if q.norm() > 5.0 {
                continue;
            }
            let a = q.exp();
            let b = exp_series(q);
            assert!(a.max_abs_diff(&b) <= 1e-12 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn exp_modulus_is_exp_of_scalar_part() {
        let mut rng = crate::verify::test_rng(13);
        for _ in 0..1000 {
            let q = crate::verify::random_quat(&mut rng, -3.0..3.0, 3.0);
            let r = q.exp();
            let rel = (r.norm() - q.a.exp()).abs() / q.a.exp();
            assert!(rel < 1e-12, "|e^q| != e^a: rel {rel}");
        }
    }

    #[test]
    fn pow_at_one_is_one() {
        let q = Quaternion::new(2.5, 1.0, -0.5, 0.25);
        let r = complex_pow_quat(Complex64::ONE, q).unwrap();
        assert_eq!(r, Biquaternion::ONE);
    }

    #[test]
    fn pow_real_order_is_principal_power() {
        let z = Complex64::new(0.8, 1.7);
        let q = Quaternion::scalar(1.37);
        let r = complex_pow_quat(z, q).unwrap();
        let expected = z.powf(1.37);
        assert!((r.c0 - expected).norm() < 1e-13 * expected.norm());
        assert_eq!(r.c1, Complex64::ZERO);
    }

    // z = e reduces z^q to e^q.
    #[test]
    fn pow_at_e_matches_exp() {
        let q = Quaternion::new(0.7, 0.3, -1.1, 0.4);
        let r = complex_pow_quat(Complex64::new(std::f64::consts::E, 0.0), q).unwrap();
        let ex: Biquaternion = q.exp().into();
        assert!(r.max_abs_diff(&ex) < 1e-13 * ex.norm());
    }

    #[test]
    fn pow_zero_base() {
        let q = Quaternion::new(1.5, 0.5, 0.0, 0.0);
        assert_eq!(
            complex_pow_quat(Complex64::ZERO, q).unwrap(),
            Biquaternion::ZERO
        );
        assert!(complex_pow_quat(Complex64::ZERO, Quaternion::scalar(-1.0)).is_err());
        assert_eq!(real_pow_quat(0.0, q).unwrap(), Quaternion::ZERO);
        assert!(real_pow_quat(-2.0, q).is_err());
        assert!(real_pow_quat(0.0, Quaternion::scalar(-0.5)).is_err());
    }

    // Derivative law: centered finite difference of z^q matches q z^{q-1}.
    #[test]
    fn pow_derivative_law() {
        let mut rng = crate::verify::test_rng(17);
        for _ in 0..50 {
            let q = crate::verify::random_quat(&mut rng, 0.5..3.0, 2.0);
            let z = Complex64::new(
                crate::verify::uniform(&mut rng, 0.5, 2.0),
                crate::verify::uniform(&mut rng, -1.0, 1.0),
            );
            let h = 1e-5;
            let fp = complex_pow_quat(z + h, q).unwrap();
            let fm = complex_pow_quat(z - h, q).unwrap();
            let fd = (fp - fm) * Complex64::new(1.0 / (2.0 * h), 0.0);
            let deriv = Biquaternion::from(q) * complex_pow_quat(z, q - Quaternion::ONE).unwrap();
            let rel = fd.max_abs_diff(&deriv) / deriv.norm().max(1e-12);
            assert!(rel < 1e-6, "derivative law failed: rel {rel}");
        }
    }

    #[test]
    fn semigroup_criterion() {
        let q1 = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        let q2 = Quaternion::new(2.0, 2.0, 0.0, 0.0);
        assert!(semigroup_compatible(q1, q2, 1e-12));
        let q3 = Quaternion::new(2.0, 0.0, 1.0, 0.0);
        assert!(!semigroup_compatible(q1, q3, 1e-12));
    }

    // When the vector parts are parallel the power product collapses; when
    // they are not, a defect appears in every punctured neighborhood of 1.
    #[test]
    fn semigroup_product_identity_and_failure() {
        let mut rng = crate::verify::test_rng(19);
        let par1 = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        let par2 = Quaternion::new(0.5, 2.0, 0.0, 0.0);
        for _ in 0..100 {
            let z = Complex64::new(
                1.0 + crate::verify::uniform(&mut rng, -0.2, 0.2),
                crate::verify::uniform(&mut rng, -0.2, 0.2),
            );
            let lhs = complex_pow_quat(z, par1).unwrap() * complex_pow_quat(z, par2).unwrap();
            let rhs = complex_pow_quat(z, par1 + par2).unwrap();
            assert!(lhs.max_abs_diff(&rhs) < 1e-10);
        }
        let q1 = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        let q2 = Quaternion::new(1.0, 0.0, 1.0, 0.0);
        let mut worst: f64 = 0.0;
        for k in 0..64 {
            let th = 2.0 * std::f64::consts::PI * k as f64 / 64.0;
            let z = Complex64::new(1.0 + 0.1 * th.cos(), 0.1 * th.sin());
            let lhs = complex_pow_quat(z, q1).unwrap() * complex_pow_quat(z, q2).unwrap();
            let rhs = complex_pow_quat(z, q1 + q2).unwrap();
            worst = worst.max((lhs - rhs).norm());
        }
        assert!(worst > 1e-6, "expected a semigroup defect, worst {worst}");
    }

    // Sc(vw) = -<v,w>, Ve(vw) = v ∧ w on random vector pairs.
    #[test]
    fn vec_mult_property() {
        let mut rng = crate::verify::test_rng(23);
        for _ in 0..1000 {
            let v = crate::verify::random_quat(&mut rng, 0.0..0.0, 2.0).ve();
            let w = crate::verify::random_quat(&mut rng, 0.0..0.0, 2.0).ve();
            let prod = v * w;
            let dot = v.v1 * w.v1 + v.v2 * w.v2 + v.v3 * w.v3;
            let wedge = Quaternion::vector(
                v.v2 * w.v3 - v.v3 * w.v2,
                v.v3 * w.v1 - v.v1 * w.v3,
                v.v1 * w.v2 - v.v2 * w.v1,
            );
            assert!((prod.a + dot).abs() < 1e-12 * (1.0 + dot.abs()));
            assert!(prod.ve().max_abs_diff(&wedge) < 1e-12 * (1.0 + wedge.norm()));
        }
    }

    // |e^{zq}| <= e^{sqrt(2) |zq|} for unimodular z with |arg z| < π/2.
    #[test]
    fn biquat_exp_bound() {
        let mut rng = crate::verify::test_rng(29);
        for _ in 0..1000 {
            let q = crate::verify::random_quat(&mut rng, -2.0..2.0, 2.0);
            let th = crate::verify::uniform(&mut rng, -1.57, 1.57);
            let z = Complex64::from_polar(1.0, th);
            let p = Biquaternion::new(z * q.a, z * q.v1, z * q.v2, z * q.v3);
            let modulus = p.exp().norm();
            let bound = (std::f64::consts::SQRT_2 * p.norm()).exp();
            assert!(modulus <= bound * (1.0 + 1e-12));
        }
    }

    #[test]
    fn biquat_exp_reduces_to_quat_exp() {
        let q = Quaternion::new(0.4, 1.2, -0.7, 0.3);
        let b: Biquaternion = q.into();
        let viaq: Biquaternion = q.exp().into();
        assert!(b.exp().max_abs_diff(&viaq) < 1e-13 * viaq.norm());
    }

    #[test]
    fn biquat_conj_involution_and_inner() {
        let p = Biquaternion::new(
            Complex64::new(1.0, 2.0),
            Complex64::new(-0.5, 0.25),
            Complex64::new(0.0, -1.0),
            Complex64::new(2.0, 0.5),
        );
        assert_eq!(p.conj().conj(), p);
        let ip = p.inner(&p);
        assert!((ip.re - p.norm_sq()).abs() < 1e-12 * p.norm_sq());
        assert!(ip.im.abs() < 1e-12 * p.norm_sq());
        let inv = p.inverse().unwrap();
        assert!((p * inv).max_abs_diff(&Biquaternion::ONE) < 1e-13);
    }

    #[test]
    fn spline_order_floors() {
        let q = Quaternion::new(0.4, 0.0, 0.0, 0.0);
        assert!(SplineOrder::time_domain(q).is_err());
        assert!(SplineOrder::fourier(q).is_ok());
        let o = SplineOrder::time_domain(Quaternion::new(3.0, 1.0, 0.0, 0.0)).unwrap();
        assert_eq!(o.sc(), 3.0);
        assert!((o.vec_norm() - 1.0).abs() < 1e-15);
        assert_eq!(o.direction(), Some([1.0, 0.0, 0.0]));
        let o0 = SplineOrder::time_domain(Quaternion::scalar(2.0)).unwrap();
        assert_eq!(o0.direction(), None);
    }

    #[test]
    fn rotation_is_orthogonal() {
        let r = rotation_matrix([1.0, 2.0, -0.5], 1.234);
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| r[k][i] * r[k][j]).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-14);
            }
        }
    }
}
