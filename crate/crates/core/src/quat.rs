//! Complexified quaternions `q0 + i1 q1 + i2 q2 + i3 q3` with complex `q_μ`.
//!
//! The imaginary unit `i` of the coefficients commutes with the quaternion
//! units `i1, i2, i3`; `i_r² = −1` and `i1 i2 = i3` cyclically. Three
//! conjugations act independently:
//!
//! * quaternion conjugate `‡` negates the spatial part,
//! * complex conjugate `*` conjugates each coefficient,
//! * Hermitian conjugate `†` is both.
//!
//! [`Mat2`] is the 2×2 complex matrix view, used for the spinor maps.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar.
pub type Cx = Complex64;

pub const ZERO: Cx = Cx::new(0.0, 0.0);
pub const ONE: Cx = Cx::new(1.0, 0.0);
pub const I: Cx = Cx::new(0.0, 1.0);

/// Builds a complex number; shorthand used all over the physics modules.
#[inline]
pub const fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjugation {
    /// `‡`
    Quaternion,
    /// `*`
    Complex,
    /// `†`
    Hermitian,
}

/// A complexified quaternion, stored as its associated vector `(q0, q1, q2, q3)`.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Quat(pub [Cx; 4]);

impl Quat {
    pub const ZERO: Quat = Quat([ZERO; 4]);
    pub const ONE: Quat = Quat([ONE, ZERO, ZERO, ZERO]);
    pub const I1: Quat = Quat([ZERO, ONE, ZERO, ZERO]);
    pub const I2: Quat = Quat([ZERO, ZERO, ONE, ZERO]);
    pub const I3: Quat = Quat([ZERO, ZERO, ZERO, ONE]);

    #[inline]
    pub const fn new(q0: Cx, q1: Cx, q2: Cx, q3: Cx) -> Self {
        Quat([q0, q1, q2, q3])
    }

    /// Quaternion with real coefficients.
    #[inline]
    pub fn real(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Quat([cx(q0, 0.0), cx(q1, 0.0), cx(q2, 0.0), cx(q3, 0.0)])
    }

    /// The basis element `i_μ` (`i_0 = 1`).
    pub fn basis(mu: usize) -> Self {
        let mut q = Quat::ZERO;
        q.0[mu] = ONE;
        q
    }

    #[inline]
    pub fn scalar(s: Cx) -> Self {
        Quat([s, ZERO, ZERO, ZERO])
    }

    /// `s + v1 i1 + v2 i2 + v3 i3`.
    #[inline]
    pub fn from_parts(s: Cx, v: [Cx; 3]) -> Self {
        Quat([s, v[0], v[1], v[2]])
    }

    #[inline]
    pub fn components(&self) -> [Cx; 4] {
        self.0
    }

    /// Temporal part `S` (coefficient of `i_0`).
    #[inline]
    pub fn temporal(&self) -> Cx {
        self.0[0]
    }

    /// Spatial part `V` as a quaternion with zero temporal component.
    #[inline]
    pub fn spatial(&self) -> Quat {
        Quat([ZERO, self.0[1], self.0[2], self.0[3]])
    }

    #[inline]
    pub fn vector(&self) -> [Cx; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// `(S, V)` with `self = S + V`.
    pub fn temporal_spatial_split(&self) -> (Cx, Quat) {
        (self.temporal(), self.spatial())
    }

    pub fn conjugate(&self, kind: Conjugation) -> Quat {
        match kind {
            Conjugation::Quaternion => self.qconj(),
            Conjugation::Complex => self.cconj(),
            Conjugation::Hermitian => self.hconj(),
        }
    }

    /// `‡`
    #[inline]
    pub fn qconj(&self) -> Quat {
        let [a, b, c, d] = self.0;
        Quat([a, -b, -c, -d])
    }

    /// `*`
    #[inline]
    pub fn cconj(&self) -> Quat {
        Quat(self.0.map(|z| z.conj()))
    }

    /// `†`
    #[inline]
    pub fn hconj(&self) -> Quat {
        let [a, b, c, d] = self.0;
        Quat([a.conj(), -b.conj(), -c.conj(), -d.conj()])
    }

    /// Component dot product `Σ q_μ u_μ` (no complex conjugation).
    pub fn dot(&self, other: &Quat) -> Cx {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// Dot product through the algebra: `(Q‡U + U‡Q)/2`, whose spatial part
    /// cancels.
    pub fn dot_via_product(&self, other: &Quat) -> Cx {
        ((self.qconj() * *other + other.qconj() * *self).temporal()) * 0.5
    }

    /// The complex modulus `|Q| = Q‡Q = Σ q_μ²`. Not a norm: it can vanish
    /// for nonzero `Q` and is complex in general.
    pub fn modulus(&self) -> Cx {
        self.0.iter().map(|z| z * z).sum()
    }

    /// Returns `(|Q|, Q⁻¹)` with `Q⁻¹ = Q‡/|Q|`.
    pub fn modulus_inverse(&self) -> Result<(Cx, Quat)> {
        let m = self.modulus();
        let scale = self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().max(f64::MIN_POSITIVE);
        if m.norm() <= 1e-14 * scale {
            return Err(Error::SingularQuaternion { modulus: format!("{m}") });
        }
        Ok((m, self.qconj() * m.inv()))
    }

    pub fn inverse(&self) -> Result<Quat> {
        self.modulus_inverse().map(|(_, inv)| inv)
    }

    /// Integer power; negative exponents go through [`Quat::inverse`].
    pub fn powi(&self, n: i32) -> Result<Quat> {
        let base = if n < 0 { self.inverse()? } else { *self };
        Ok((0..n.unsigned_abs()).fold(Quat::ONE, |acc, _| acc * base))
    }

    /// Euclidean norm of the 8 real coordinates; used for residuals.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.0.iter().all(|z| z.im.abs() <= tol)
    }

    pub fn approx_eq(&self, other: &Quat, tol: f64) -> bool {
        (*self - *other).norm() <= tol
    }

    pub fn to_matrix(&self) -> Mat2 {
        let [q0, q1, q2, q3] = self.0;
        Mat2([
            [q0 - I * q3, -I * q1 - q2],
            [-I * q1 + q2, q0 + I * q3],
        ])
    }

    /// Inverse of [`Quat::to_matrix`]. Every 2×2 complex matrix is in the
    /// image, since the four basis matrices span `M₂(ℂ)` over `ℂ`.
    pub fn from_matrix(m: &Mat2) -> Quat {
        let [[a, b], [c, d]] = m.0;
        Quat([
            (a + d) * 0.5,
            I * (b + c) * 0.5,
            (c - b) * 0.5,
            I * (a - d) * 0.5,
        ])
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Quat({} + {} i1 + {} i2 + {} i3)",
            self.0[0], self.0[1], self.0[2], self.0[3]
        )
    }
}

impl Index<usize> for Quat {
    type Output = Cx;
    fn index(&self, mu: usize) -> &Cx {
        &self.0[mu]
    }
}

impl Add for Quat {
    type Output = Quat;
    #[inline]
    fn add(self, o: Quat) -> Quat {
        Quat(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl AddAssign for Quat {
    fn add_assign(&mut self, o: Quat) {
        *self = *self + o;
    }
}

impl Sub for Quat {
    type Output = Quat;
    #[inline]
    fn sub(self, o: Quat) -> Quat {
        Quat(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl SubAssign for Quat {
    fn sub_assign(&mut self, o: Quat) {
        *self = *self - o;
    }
}

impl Neg for Quat {
    type Output = Quat;
    #[inline]
    fn neg(self) -> Quat {
        Quat(self.0.map(|z| -z))
    }
}

/// Hamilton product: `(a0 + a)(b0 + b) = a0 b0 − a·b + a0 b + b0 a + a×b`.
impl Mul for Quat {
    type Output = Quat;
    #[inline]
    fn mul(self, o: Quat) -> Quat {
        let [a0, a1, a2, a3] = self.0;
        let [b0, b1, b2, b3] = o.0;
        Quat([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        ])
    }
}

impl Mul<Cx> for Quat {
    type Output = Quat;
    #[inline]
    fn mul(self, s: Cx) -> Quat {
        Quat(self.0.map(|z| z * s))
    }
}

impl Mul<Quat> for Cx {
    type Output = Quat;
    #[inline]
    fn mul(self, q: Quat) -> Quat {
        q * self
    }
}

impl Mul<f64> for Quat {
    type Output = Quat;
    #[inline]
    fn mul(self, s: f64) -> Quat {
        Quat(self.0.map(|z| z * s))
    }
}

impl Mul<Quat> for f64 {
    type Output = Quat;
    #[inline]
    fn mul(self, q: Quat) -> Quat {
        q * self
    }
}

impl std::iter::Sum for Quat {
    fn sum<It: Iterator<Item = Quat>>(iter: It) -> Quat {
        iter.fold(Quat::ZERO, |a, b| a + b)
    }
}

/// Row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat2(pub [[Cx; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);

    pub fn trace(&self) -> Cx {
        self.0[0][0] + self.0[1][1]
    }

    /// Column `j` as a ℂ² vector.
    pub fn column(&self, j: usize) -> [Cx; 2] {
        [self.0[0][j], self.0[1][j]]
    }

    pub fn apply(&self, v: [Cx; 2]) -> [Cx; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        let m = self.0;
        Mat2([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.0[r][c] - other.0[r][c]).norm());
            }
        }
        worst
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let (a, b) = (self.0, o.0);
        Mat2(std::array::from_fn(|r| {
            std::array::from_fn(|c| a[r][0] * b[0][c] + a[r][1] * b[1][c])
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_rules() {
        assert_eq!(Quat::I1 * Quat::I2, Quat::I3);
        assert_eq!(Quat::I2 * Quat::I1, -Quat::I3);
        assert_eq!(Quat::I2 * Quat::I3, Quat::I1);
        assert_eq!(Quat::I3 * Quat::I1, Quat::I2);
        for r in 1..4 {
            assert_eq!(Quat::basis(r) * Quat::basis(r), -Quat::ONE);
        }
        let q = Quat::new(cx(0.3, -1.0), cx(2.0, 0.5), cx(-0.1, 0.0), cx(0.0, 4.0));
        assert_eq!(Quat::ONE * q, q);
        assert_eq!(q * Quat::ONE, q);
    }

    #[test]
    fn conjugations() {
        let q = Quat::real(1.0, 1.0, 0.0, 0.0);
        assert_eq!(q.qconj(), Quat::real(1.0, -1.0, 0.0, 0.0));
        assert_eq!(Quat::I2.cconj(), Quat::I2);
        let iq3 = Quat::I3 * I;
        // ‡ gives −i·i3, then * gives i·i3
        assert_eq!(iq3.hconj(), iq3);
        assert_eq!(iq3.qconj().cconj(), iq3.cconj().qconj());
    }

    #[test]
    fn dot_examples() {
        let a = Quat::real(1.0, 0.0, 1.0, 0.0);
        let b = Quat::real(2.0, 0.0, 3.0, 0.0);
        assert_eq!(a.dot(&b), cx(5.0, 0.0));
        assert_eq!(Quat::I1.dot(&Quat::I2), ZERO);
        assert!((a.dot_via_product(&b) - cx(5.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn modulus_and_inverse() {
        let q = Quat::real(1.0, 1.0, 0.0, 0.0);
        let (m, inv) = q.modulus_inverse().unwrap();
        assert_eq!(m, cx(2.0, 0.0));
        assert!(inv.approx_eq(&Quat::real(0.5, -0.5, 0.0, 0.0), 1e-15));
        assert!((inv * q).approx_eq(&Quat::ONE, 1e-15));
        assert_eq!(Quat::ONE.modulus_inverse().unwrap(), (ONE, Quat::ONE));

        let null = Quat::new(ONE, ZERO, ZERO, I);
        assert!(matches!(
            null.modulus_inverse(),
            Err(Error::SingularQuaternion { .. })
        ));
        assert!(Quat::ZERO.inverse().is_err());
    }

    #[test]
    fn split() {
        let q = Quat::real(2.0, 3.0, 0.0, 0.0);
        assert_eq!(q.temporal_spatial_split(), (cx(2.0, 0.0), Quat::real(0.0, 3.0, 0.0, 0.0)));
        assert_eq!(Quat::I2.temporal_spatial_split(), (ZERO, Quat::I2));
    }

    #[test]
    fn matrix_view() {
        let m = Quat::I3.to_matrix();
        assert_eq!(m, Mat2([[-I, ZERO], [ZERO, I]]));
        assert_eq!(Quat::ONE.to_matrix(), Mat2::IDENTITY);
        assert_eq!(Quat::I1.to_matrix(), Mat2([[ZERO, -I], [-I, ZERO]]));
        assert_eq!(Quat::I2.to_matrix(), Mat2([[ZERO, -ONE], [ONE, ZERO]]));
        for mu in 0..4 {
            assert_eq!(Quat::from_matrix(&Quat::basis(mu).to_matrix()), Quat::basis(mu));
        }
    }

    #[test]
    fn powers() {
        let q = Quat::real(0.6, 0.8, 0.0, 0.0);
        assert!(q.powi(2).unwrap().approx_eq(&(q * q), 1e-15));
        assert!((q.powi(-1).unwrap() * q).approx_eq(&Quat::ONE, 1e-15));
        assert_eq!(q.powi(0).unwrap(), Quat::ONE);
    }
}
