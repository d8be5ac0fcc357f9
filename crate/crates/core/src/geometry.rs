//! Rotation and boost rotors, the temporal/spatial plane-angle geometry, and the
//! discrete symmetry elements.
//!
//! Every proper Lorentz transformation of a Euclidean four-vector quaternion
//! (imaginary `q0`, real `q_r`) is a sandwich `q ↦ L q L†`. For a spatial
//! rotor (real coefficients) `L† = L‡`; for a boost (real temporal part,
//! imaginary spatial part) `L† = L`. The block form is the rotator
//! `R| = Rotator(L, L*)`, which is `Rotator(R, R)` for rotations and
//! `Rotator(R, R‡)` for boosts.

use crate::blocks::{Block, Reflector, Rotator};
use crate::error::{Error, Result};
use crate::quat::{cx, Cx, Quat, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotorKind {
    Spatial,
    Boost,
    /// Product of rotors of different kinds, or of non-collinear boosts.
    General,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotor {
    pub value: Quat,
    pub kind: RotorKind,
}

fn unit_axis(axis: [f64; 3]) -> Result<[f64; 3]> {
    let n = axis.iter().map(|a| a * a).sum::<f64>().sqrt();
    if !(n.is_finite() && n > 1e-12) {
        return Err(Error::InvalidConfig(format!("axis {axis:?} has no direction")));
    }
    Ok(axis.map(|a| a / n))
}

/// `cos(θ/2) + (a·i) sin(θ/2)` with real coefficients.
pub fn rotor_spatial(axis: [f64; 3], angle: f64) -> Result<Rotor> {
    let a = unit_axis(axis)?;
    let (s, c) = (angle / 2.0).sin_cos();
    Ok(Rotor { value: Quat::real(c, a[0] * s, a[1] * s, a[2] * s), kind: RotorKind::Spatial })
}

/// `cosh(w/2) + i sinh(w/2) (a·i)`.
///
/// Applied as `L q L` this maps Minkowski `(t, x∥)` to
/// `(t cosh w + x∥ sinh w, x∥ cosh w + t sinh w)`. It is the inverse of the
/// rotor `cos(θ/2) + i1 sin(θ/2)` with `θ = −i w`, which boosts the other way.
pub fn rotor_boost(axis: [f64; 3], rapidity: f64) -> Result<Rotor> {
    let a = unit_axis(axis)?;
    let (c, s) = ((rapidity / 2.0).cosh(), (rapidity / 2.0).sinh());
    Ok(Rotor {
        value: Quat::new(cx(c, 0.0), cx(0.0, a[0] * s), cx(0.0, a[1] * s), cx(0.0, a[2] * s)),
        kind: RotorKind::Boost,
    })
}

impl Rotor {
    pub const IDENTITY: Rotor = Rotor { value: Quat::ONE, kind: RotorKind::Spatial };

    /// `self` applied after `first`.
    pub fn after(&self, first: &Rotor) -> Rotor {
        let kind = match (self.kind, first.kind) {
            (RotorKind::Spatial, RotorKind::Spatial) => RotorKind::Spatial,
            _ => RotorKind::General,
        };
        let value = self.value * first.value;
        let kind = if kind == RotorKind::General && is_boost_shaped(&value) { RotorKind::Boost } else { kind };
        Rotor { value, kind }
    }

    /// The inverse transformation (`L‡` for unit `L`).
    pub fn inverse(&self) -> Rotor {
        Rotor { value: self.value.qconj(), kind: self.kind }
    }

    /// `L†`, the right factor of the four-vector sandwich.
    pub fn right_factor(&self) -> Quat {
        self.value.hconj()
    }

    /// Angle `θ` from `tan(θ/2) = |r|/r0` for a spatial rotor.
    pub fn spatial_angle(&self) -> f64 {
        let [r0, r1, r2, r3] = self.value.0.map(|z| z.re);
        2.0 * (r1 * r1 + r2 * r2 + r3 * r3).sqrt().atan2(r0)
    }

    /// Unit direction of the spatial part (real parts for spatial rotors,
    /// imaginary parts for boosts), or `None` for the identity.
    pub fn axis(&self) -> Option<[f64; 3]> {
        let v = self.value.vector();
        let raw = match self.kind {
            RotorKind::Boost => v.map(|z| z.im),
            _ => v.map(|z| z.re),
        };
        unit_axis(raw).ok()
    }

    /// The Minkowski-coordinate matrix of this rotor's four-vector action,
    /// `None` for general products.
    pub fn matrix(&self) -> Option<Mat4> {
        let Some(axis) = self.axis() else {
            return Some(std::array::from_fn(|r| std::array::from_fn(|c| if r == c { 1.0 } else { 0.0 })));
        };
        match self.kind {
            RotorKind::Spatial => rotation_matrix(axis, self.spatial_angle()).ok(),
            RotorKind::Boost => {
                let s = self.value.vector().iter().map(|z| z.im * z.im).sum::<f64>().sqrt();
                boost_matrix(axis, 2.0 * s.asinh()).ok()
            }
            RotorKind::General => None,
        }
    }

    /// Checks the kind invariants: unit complex modulus and the coefficient
    /// pattern (all real, or real temporal with imaginary spatial).
    pub fn check(&self, tol: f64) -> bool {
        let unit = (self.value.modulus() - cx(1.0, 0.0)).norm() <= tol;
        let shape = match self.kind {
            RotorKind::Spatial => self.value.is_real(tol),
            RotorKind::Boost => is_boost_shaped_tol(&self.value, tol),
            RotorKind::General => true,
        };
        unit && shape
    }
}

fn is_boost_shaped_tol(q: &Quat, tol: f64) -> bool {
    q.0[0].im.abs() <= tol && q.0[1..].iter().all(|z| z.re.abs() <= tol)
}

fn is_boost_shaped(q: &Quat) -> bool {
    is_boost_shaped_tol(q, 1e-14 * (1.0 + q.norm()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformSpec {
    pub rotor: Rotor,
    /// Exponent of the spinor and mass transformation laws.
    pub n: i32,
}

impl TransformSpec {
    pub fn new(rotor: Rotor, n: i32) -> Self {
        TransformSpec { rotor, n }
    }

    pub fn identity() -> Self {
        TransformSpec { rotor: Rotor::IDENTITY, n: 0 }
    }
}

/// `L q L†`: spatial rotors give `R q R‡`, boosts give `R q R`.
pub fn four_vector_transform(q: &Quat, spec: &TransformSpec) -> Quat {
    let l = spec.rotor.value;
    l * *q * spec.rotor.right_factor()
}

/// Returns `(R|, R|‡)` with `R| = Rotator(L, L*)`.
pub fn make_transform_blocks(spec: &TransformSpec) -> (Rotator, Rotator) {
    let l = spec.rotor.value;
    let r = Rotator::new(l, l.cconj());
    (r, r.qconj())
}

/// `(R|ⁿ, R|‡ⁿ)`; negative powers use the inverse blocks.
pub fn transform_block_powers(spec: &TransformSpec, n: i32) -> Result<(Rotator, Rotator)> {
    let (r, rd) = make_transform_blocks(spec);
    Ok((r.powi(n)?, rd.powi(n)?))
}

/// The eight one- and two-sided multiplication patterns of a rotor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table1Pattern {
    RQ,
    QR,
    RdQ,
    QRd,
    RQR,
    RQRd,
    RdQR,
    RdQRd,
}

impl Table1Pattern {
    pub const ALL: [Table1Pattern; 8] = [
        Table1Pattern::RQ,
        Table1Pattern::QR,
        Table1Pattern::RdQ,
        Table1Pattern::QRd,
        Table1Pattern::RQR,
        Table1Pattern::RQRd,
        Table1Pattern::RdQR,
        Table1Pattern::RdQRd,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Table1Pattern::RQ => "RQ",
            Table1Pattern::QR => "QR",
            Table1Pattern::RdQ => "R‡Q",
            Table1Pattern::QRd => "QR‡",
            Table1Pattern::RQR => "RQR",
            Table1Pattern::RQRd => "RQR‡",
            Table1Pattern::RdQR => "R‡QR",
            Table1Pattern::RdQRd => "R‡QR‡",
        }
    }

    /// `(ξ_s, ξ_t)` as multiples of the rotor angle `ξ`.
    pub fn expected_angles(self) -> (f64, f64) {
        match self {
            Table1Pattern::RQ => (0.5, 0.5),
            Table1Pattern::QR => (-0.5, 0.5),
            Table1Pattern::RdQ => (-0.5, -0.5),
            Table1Pattern::QRd => (0.5, -0.5),
            Table1Pattern::RQR => (0.0, 1.0),
            Table1Pattern::RQRd => (1.0, 0.0),
            Table1Pattern::RdQR => (-1.0, 0.0),
            Table1Pattern::RdQRd => (0.0, -1.0),
        }
    }
}

pub fn table1_apply(pattern: Table1Pattern, r: &Rotor, q: &Quat) -> Quat {
    let r = r.value;
    let rd = r.qconj();
    let q = *q;
    match pattern {
        Table1Pattern::RQ => r * q,
        Table1Pattern::QR => q * r,
        Table1Pattern::RdQ => rd * q,
        Table1Pattern::QRd => q * rd,
        Table1Pattern::RQR => r * q * r,
        Table1Pattern::RQRd => r * q * rd,
        Table1Pattern::RdQR => rd * q * r,
        Table1Pattern::RdQRd => rd * q * rd,
    }
}

/// Signed rotation angles of `q → q'` within the spatial and temporal planes
/// of a rotor. Each is an error when that plane's projection is degenerate.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneAngles {
    pub spatial: Result<f64>,
    pub temporal: Result<f64>,
}

fn dot4(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Any unit vector orthogonal to `v`.
fn orthogonal_unit(v: [f64; 3]) -> [f64; 3] {
    let k = (0..3).min_by(|&i, &j| v[i].abs().total_cmp(&v[j].abs())).unwrap_or(0);
    let mut e = [0.0; 3];
    e[k] = 1.0;
    unit_axis(cross(v, e)).unwrap_or([1.0, 0.0, 0.0])
}

fn plane_angle(basis: (&[f64; 4], &[f64; 4]), q: &[f64; 4], q2: &[f64; 4], tol: f64, plane: &'static str) -> Result<f64> {
    let (x1, y1) = (dot4(basis.0, q), dot4(basis.1, q));
    let (x2, y2) = (dot4(basis.0, q2), dot4(basis.1, q2));
    for norm in [x1.hypot(y1), x2.hypot(y2)] {
        if norm < tol {
            return Err(Error::DegenerateProjection { plane, norm });
        }
    }
    Ok((x1 * y2 - y1 * x2).atan2(x1 * x2 + y1 * y2))
}

/// Orientation: the temporal plane is oriented from `1` towards the rotor
/// axis `v̂`, the spatial plane by `(u, v̂ × u)` for any `u ⊥ v̂`. With these,
/// `R Q R‡` about `i3` turning `i1` towards `i2` measures `+ξ` and `R 1 R`
/// measures `+ξ` in the temporal plane.
pub fn measure_plane_angles(r: &Rotor, q: &Quat, q_prime: &Quat, tol: f64) -> PlaneAngles {
    let v = r.axis().unwrap_or([0.0, 0.0, 1.0]);
    let u = orthogonal_unit(v);
    let w = cross(v, u);
    let t1 = [1.0, 0.0, 0.0, 0.0];
    let t2 = [0.0, v[0], v[1], v[2]];
    let s1 = [0.0, u[0], u[1], u[2]];
    let s2 = [0.0, w[0], w[1], w[2]];
    let a = q.0.map(|z| z.re);
    let b = q_prime.0.map(|z| z.re);
    PlaneAngles {
        spatial: plane_angle((&s1, &s2), &a, &b, tol, "spatial"),
        temporal: plane_angle((&t1, &t2), &a, &b, tol, "temporal"),
    }
}

/// Real 4×4 matrices acting on Minkowski coordinates `(t, x, y, z)`.
pub type Mat4 = [[f64; 4]; 4];

/// Rotation by `angle` about `axis` (right-handed).
pub fn rotation_matrix(axis: [f64; 3], angle: f64) -> Result<Mat4> {
    let a = unit_axis(axis)?;
    let (s, c) = angle.sin_cos();
    let mut m = [[0.0; 4]; 4];
    m[0][0] = 1.0;
    for i in 0..3 {
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            let eps = levi_civita(i, j);
            m[i + 1][j + 1] = c * delta + (1.0 - c) * a[i] * a[j] - s * eps(a);
        }
    }
    Ok(m)
}

fn levi_civita(i: usize, j: usize) -> impl Fn([f64; 3]) -> f64 {
    // Σ_k ε_ijk a_k
    move |a: [f64; 3]| {
        let mut acc = 0.0;
        for (k, ak) in a.iter().enumerate() {
            let sign = match (i, j, k) {
                (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
                (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
                _ => 0.0,
            };
            acc += sign * ak;
        }
        acc
    }
}

/// Pure boost with rapidity `w` along `axis`.
pub fn boost_matrix(axis: [f64; 3], rapidity: f64) -> Result<Mat4> {
    let a = unit_axis(axis)?;
    let (ch, sh) = (rapidity.cosh(), rapidity.sinh());
    let mut m = [[0.0; 4]; 4];
    m[0][0] = ch;
    for i in 0..3 {
        m[0][i + 1] = sh * a[i];
        m[i + 1][0] = sh * a[i];
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            m[i + 1][j + 1] = delta + (ch - 1.0) * a[i] * a[j];
        }
    }
    Ok(m)
}

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|r| std::array::from_fn(|c| (0..4).map(|k| a[r][k] * b[k][c]).sum()))
}

/// Euclidean quaternion → Minkowski coordinates `(i q0, q1, q2, q3)`.
pub fn to_minkowski(q: &Quat) -> [Cx; 4] {
    [I * q.0[0], q.0[1], q.0[2], q.0[3]]
}

pub fn from_minkowski(v: &[Cx; 4]) -> Quat {
    Quat::new(-I * v[0], v[1], v[2], v[3])
}

/// Applies a Minkowski-coordinate matrix to a Euclidean quaternion.
pub fn apply_matrix(m: &Mat4, q: &Quat) -> Quat {
    let v = to_minkowski(q);
    let out: [Cx; 4] = std::array::from_fn(|r| (0..4).map(|k| v[k] * m[r][k]).sum());
    from_minkowski(&out)
}

/// `t² − |x|²` of a Euclidean quaternion.
pub fn minkowski_interval(q: &Quat) -> Cx {
    let v = to_minkowski(q);
    v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiscreteKind {
    Parity,
    TimeReversal,
    ChargeConjugation,
}

/// `C₊(a, b)`: the anti-diagonal element.
pub fn c_plus(a: f64, b: f64) -> Reflector {
    Reflector::scalars(a, b)
}

/// `C₋(a, b)`: the diagonal element.
pub fn c_minus(a: f64, b: f64) -> Rotator {
    Rotator::scalars(a, b)
}

/// `T| = Rotator(i2, i2)`.
pub fn charge_rotator() -> Rotator {
    Rotator::new(Quat::I2, Quat::I2)
}

/// Elements of a discrete symmetry acting as
/// `D'' = B D B‡`, `A'' = B A B‡`, `Φ'' = B Φ E‡`, `M'' = E M E‡`,
/// after complex conjugation of every block when `conjugate` is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteElements {
    pub kind: DiscreteKind,
    pub b: Block,
    pub e: Block,
    pub conjugate: bool,
}

pub fn discrete_elements(kind: DiscreteKind) -> DiscreteElements {
    match kind {
        DiscreteKind::Parity => DiscreteElements {
            kind,
            b: c_plus(1.0, 1.0).into(),
            e: c_minus(1.0, 1.0).into(),
            conjugate: false,
        },
        DiscreteKind::TimeReversal => DiscreteElements {
            kind,
            b: c_minus(-1.0, 1.0).into(),
            e: c_plus(1.0, 1.0).into(),
            conjugate: false,
        },
        DiscreteKind::ChargeConjugation => {
            let t = charge_rotator();
            DiscreteElements {
                kind,
                b: (t * c_minus(1.0, 1.0)).into(),
                e: (t * c_plus(1.0, 1.0)).into(),
                conjugate: true,
            }
        }
    }
}

/// Unit vector helper for callers holding possibly unnormalised axes.
pub fn normalize_axis(axis: [f64; 3]) -> Result<[f64; 3]> {
    unit_axis(axis)
}

/// Temporal part of a rotator's blocks, as complex numbers.
pub fn rotator_temporals(r: &Rotator) -> (Cx, Cx) {
    (r.upper.temporal(), r.lower.temporal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::ZERO;
    use std::f64::consts::PI;

    #[test]
    fn spatial_rotor_examples() {
        assert!(rotor_spatial([0.0, 0.0, 1.0], 0.0).unwrap().value.approx_eq(&Quat::ONE, 1e-15));
        assert!(rotor_spatial([0.0, 0.0, 1.0], PI).unwrap().value.approx_eq(&Quat::I3, 1e-15));
        let r = rotor_spatial([1.0, 2.0, -0.5], 1.234).unwrap();
        assert!((r.spatial_angle() - 1.234).abs() < 1e-14);
        assert!(r.check(1e-14));
        assert!(rotor_spatial([0.0; 3], 1.0).is_err());
    }

    #[test]
    fn boost_rotor_examples() {
        assert!(rotor_boost([1.0, 0.0, 0.0], 0.0).unwrap().value.approx_eq(&Quat::ONE, 1e-15));
        let b = rotor_boost([0.3, -0.2, 0.9], 1.7).unwrap();
        assert!((b.value.modulus() - cx(1.0, 0.0)).norm() < 1e-14);
        assert!(b.check(1e-14));

        let w: f64 = 0.8;
        let t = from_minkowski(&[cx(1.0, 0.0), ZERO, ZERO, ZERO]);
        let spec = TransformSpec::new(rotor_boost([1.0, 0.0, 0.0], w).unwrap(), 0);
        let out = to_minkowski(&four_vector_transform(&t, &spec));
        assert!((out[0] - cx(w.cosh(), 0.0)).norm() < 1e-14);
        assert!((out[1] - cx(w.sinh(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn table1_hand_expansions() {
        let xi = 0.7f64;
        let r = rotor_spatial([0.0, 0.0, 1.0], xi).unwrap();
        let got = table1_apply(Table1Pattern::RQRd, &r, &Quat::I1);
        assert!(got.approx_eq(&Quat::real(0.0, xi.cos(), xi.sin(), 0.0), 1e-15));
        let got = table1_apply(Table1Pattern::RQR, &r, &Quat::ONE);
        assert!(got.approx_eq(&Quat::real(xi.cos(), 0.0, 0.0, xi.sin()), 1e-15));
        let q = Quat::real(0.1, 0.2, -0.3, 0.4);
        for p in Table1Pattern::ALL {
            assert!(table1_apply(p, &Rotor::IDENTITY, &q).approx_eq(&q, 1e-15));
        }
    }

    #[test]
    fn plane_angle_examples() {
        let xi = 0.9;
        let r = rotor_spatial([0.0, 0.0, 1.0], xi).unwrap();
        let q1 = table1_apply(Table1Pattern::RQRd, &r, &Quat::I1);
        let a = measure_plane_angles(&r, &Quat::I1, &q1, 1e-9);
        assert!((a.spatial.unwrap() - xi).abs() < 1e-14);
        assert!(matches!(a.temporal, Err(Error::DegenerateProjection { .. })));

        let q1 = table1_apply(Table1Pattern::RQR, &r, &Quat::ONE);
        let a = measure_plane_angles(&r, &Quat::ONE, &q1, 1e-9);
        assert!((a.temporal.unwrap() - xi).abs() < 1e-14);

        let q = Quat::real(0.3, 0.2, 0.1, -0.5);
        let a = measure_plane_angles(&r, &q, &q, 1e-9);
        assert_eq!(a.spatial.unwrap(), 0.0);
        assert_eq!(a.temporal.unwrap(), 0.0);
    }

    #[test]
    fn block_forms() {
        let rs = rotor_spatial([0.0, 1.0, 0.0], 0.4).unwrap();
        let (r, _) = make_transform_blocks(&TransformSpec::new(rs, 0));
        assert_eq!(r, Rotator::new(rs.value, rs.value));
        let rb = rotor_boost([0.0, 1.0, 0.0], 0.4).unwrap();
        let (r, rd) = make_transform_blocks(&TransformSpec::new(rb, 0));
        assert_eq!(r, Rotator::new(rb.value, rb.value.qconj()));
        assert!((rd * r).upper.approx_eq(&Quat::ONE, 1e-15));
    }

    #[test]
    fn discrete_shapes() {
        let c = discrete_elements(DiscreteKind::ChargeConjugation);
        assert_eq!(charge_rotator(), Rotator::new(Quat::I2, Quat::I2));
        assert!(c.conjugate);
        let p = discrete_elements(DiscreteKind::Parity);
        assert!(p.b.is_reflector() && !p.e.is_reflector());
        let t = discrete_elements(DiscreteKind::TimeReversal);
        assert!(!t.b.is_reflector() && t.e.is_reflector());
    }

    #[test]
    fn rotor_matrix_matches_sandwich() {
        let q = Quat::new(cx(0.0, 0.7), cx(0.3, 0.0), cx(-1.0, 0.0), cx(0.2, 0.0));
        for r in [
            rotor_spatial([0.3, -1.0, 0.4], 2.1).unwrap(),
            rotor_boost([-0.2, 0.5, 0.8], -1.3).unwrap(),
            Rotor::IDENTITY,
        ] {
            let m = r.matrix().unwrap();
            let spec = TransformSpec::new(r, 0);
            assert!(apply_matrix(&m, &q).approx_eq(&four_vector_transform(&q, &spec), 1e-14));
        }
    }

    #[test]
    fn matrices_are_lorentz() {
        let m = boost_matrix([0.2, 0.5, -0.1], 1.1).unwrap();
        let q = Quat::new(cx(0.0, -0.4), cx(0.3, 0.0), cx(-1.0, 0.0), cx(0.2, 0.0));
        let before = minkowski_interval(&q);
        let after = minkowski_interval(&apply_matrix(&m, &q));
        assert!((before - after).norm() < 1e-13);
        let rot = rotation_matrix([0.0, 0.0, 1.0], PI / 2.0).unwrap();
        let x = apply_matrix(&rot, &Quat::I1);
        assert!(x.approx_eq(&Quat::I2, 1e-15));
    }
}
