//! The Dirac equation for plane waves, its translation to versatile
//! quaternion bispinors, and the reflector form `(D − iA)Φ = ΦM`.
//!
//! Plane waves carry the phase `exp(i(p·x − E t))`. On such a mode the
//! operator `D = H{i∂/∂x0, ∂/∂x1, ∂/∂x2, ∂/∂x3}` acts as left multiplication by
//! the momentum symbol `P = E + i(p1 i1 + p2 i2 + p3 i3)`, so every identity is
//! checked exactly at the symbol level.
//!
//! Euclidean variables: `m = m̃/i`, `A0 = Ã0/i`, `A_r = Ã_r`.

use nalgebra::Matrix4;

use crate::blocks::{Block, Reflector};
use crate::error::{Error, Result};
use crate::geometry::{discrete_elements, transform_block_powers, DiscreteKind, TransformSpec};
use crate::maps::{ideal_defect, Bispinor2, Lift};
use crate::quat::{cx, Conjugation, Cx, Quat, I, ONE, ZERO};

/// The four-component Dirac amplitude `Ψ = (ψ1, ψ2)ᵀ`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpinorColumn(pub [Cx; 4]);

impl SpinorColumn {
    pub fn from_bispinors(psi1: Bispinor2, psi2: Bispinor2) -> Self {
        SpinorColumn([psi1.0[0], psi1.0[1], psi2.0[0], psi2.0[1]])
    }

    pub fn psi1(&self) -> Bispinor2 {
        Bispinor2([self.0[0], self.0[1]])
    }

    pub fn psi2(&self) -> Bispinor2 {
        Bispinor2([self.0[2], self.0[3]])
    }

    pub fn scale(&self, s: Cx) -> Self {
        SpinorColumn(self.0.map(|z| z * s))
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, o: &SpinorColumn) -> f64 {
        self.0.iter().zip(o.0.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// Mass and constant potential in Minkowski form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldData {
    /// `m̃ ≥ 0`
    pub mass: f64,
    /// `(Ã0, Ã1, Ã2, Ã3)`
    pub potential: [f64; 4],
}

impl FieldData {
    pub fn free(mass: f64) -> Self {
        FieldData { mass, potential: [0.0; 4] }
    }

    /// Euclidean mass `m = m̃/i = −i m̃`.
    pub fn euclid_mass(&self) -> Cx {
        cx(0.0, -self.mass)
    }

    /// `A = H(Ã0/i, Ã1, Ã2, Ã3)`.
    pub fn euclid_potential(&self) -> Quat {
        let a = self.potential;
        Quat::new(cx(0.0, -a[0]), cx(a[1], 0.0), cx(a[2], 0.0), cx(a[3], 0.0))
    }

    /// The scalar mass block `Reflector(m, −m)`.
    pub fn mass_block(&self) -> Reflector {
        mass_block(Quat::scalar(self.euclid_mass()))
    }
}

/// `M̲ = Reflector(M, −M‡)`.
pub fn mass_block(m: Quat) -> Reflector {
    Reflector::new(m, -m.qconj())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveMode {
    pub amplitude: SpinorColumn,
    pub energy: f64,
    pub momentum: [f64; 3],
}

impl PlaneWaveMode {
    pub fn symbol(&self) -> Quat {
        momentum_symbol(self.energy, self.momentum)
    }
}

/// Quaternion bispinors `(φ1, φ2)` in the left ideal of the lift's idempotent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VersatilePair {
    pub phi1: Quat,
    pub phi2: Quat,
}

impl VersatilePair {
    pub const ZERO: VersatilePair = VersatilePair { phi1: Quat::ZERO, phi2: Quat::ZERO };

    pub fn reflector(&self) -> Reflector {
        Reflector::new(self.phi1, self.phi2)
    }
}

/// Pauli matrices as dense 2×2 arrays.
pub fn pauli(r: usize) -> [[Cx; 2]; 2] {
    match r {
        0 => [[ZERO, ONE], [ONE, ZERO]],
        1 => [[ZERO, -I], [I, ZERO]],
        _ => [[ONE, ZERO], [ZERO, -ONE]],
    }
}

/// `α_r = [[0, σ_r], [σ_r, 0]]`.
pub fn alpha(r: usize) -> Matrix4<Cx> {
    let s = pauli(r);
    let mut m = Matrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j + 2)] = s[i][j];
            m[(i + 2, j)] = s[i][j];
        }
    }
    m
}

/// `β = diag(1, 1, −1, −1)`.
pub fn beta() -> Matrix4<Cx> {
    Matrix4::from_diagonal(&nalgebra::Vector4::new(ONE, ONE, -ONE, -ONE))
}

/// Momentum-space Dirac operator `Σ α_r (p_r − Ã_r) + Ã0 + m̃ β`.
pub fn dirac_matrix(p: [f64; 3], fd: &FieldData) -> Matrix4<Cx> {
    let mut h = beta() * cx(fd.mass, 0.0) + Matrix4::identity() * cx(fd.potential[0], 0.0);
    for (r, pr) in p.iter().enumerate() {
        h += alpha(r) * cx(pr - fd.potential[r + 1], 0.0);
    }
    h
}

fn to_vector(s: &SpinorColumn) -> nalgebra::Vector4<Cx> {
    nalgebra::Vector4::new(s.0[0], s.0[1], s.0[2], s.0[3])
}

/// `|(H − E) Ψ|` for a mode.
pub fn dirac_residual(mode: &PlaneWaveMode, fd: &FieldData) -> f64 {
    let psi = to_vector(&mode.amplitude);
    let r = dirac_matrix(mode.momentum, fd) * psi - psi * cx(mode.energy, 0.0);
    r.norm()
}

/// Four orthonormal plane-wave solutions sorted by energy. Degenerate
/// eigenspaces come back in whatever orthonormal basis the solver picks.
pub fn solve_plane_waves(p: [f64; 3], fd: &FieldData) -> [PlaneWaveMode; 4] {
    let eig = dirac_matrix(p, fd).symmetric_eigen();
    let mut order: [usize; 4] = [0, 1, 2, 3];
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    order.map(|k| {
        let col = eig.eigenvectors.column(k);
        PlaneWaveMode {
            amplitude: SpinorColumn([col[0], col[1], col[2], col[3]]),
            energy: eig.eigenvalues[k],
            momentum: p,
        }
    })
}

/// Eigenvalues of [`dirac_matrix`], ascending.
pub fn dirac_eigenvalues(p: [f64; 3], fd: &FieldData) -> [f64; 4] {
    let mut ev: [f64; 4] = dirac_matrix(p, fd).symmetric_eigenvalues().into();
    ev.sort_by(f64::total_cmp);
    ev
}

/// `Ψ ↦ (φ1, φ2)`: `φ1 = ψ1 + ψ2`, `φ2 = i(ψ1 − ψ2)`, lifted and projected
/// into the left ideal.
pub fn to_versatile(psi: &SpinorColumn, lift: Lift) -> VersatilePair {
    let (p1, p2) = (psi.psi1(), psi.psi2());
    let c1 = p1.add(&p2);
    let c2 = p1.sub(&p2).scale(I);
    let g = lift.generator();
    VersatilePair { phi1: lift.lift(&c1) * g, phi2: lift.lift(&c2) * g }
}

/// Inverse of [`to_versatile`]. The map recovers `2φ` from an ideal element,
/// hence the factor ½; `V⁻¹ = ½[[1, −i], [1, i]]`.
pub fn from_versatile(vp: &VersatilePair, lift: Lift, tol: f64) -> Result<SpinorColumn> {
    let defect = ideal_defect(&vp.phi1, lift).max(ideal_defect(&vp.phi2, lift));
    if defect.is_nan() || defect > tol {
        return Err(Error::IdealViolation { residual: defect });
    }
    let c1 = lift.map(&vp.phi1).scale(cx(0.5, 0.0));
    let c2 = lift.map(&vp.phi2).scale(cx(0.5, 0.0));
    let psi1 = c1.add(&c2.scale(-I)).scale(cx(0.5, 0.0));
    let psi2 = c1.add(&c2.scale(I)).scale(cx(0.5, 0.0));
    Ok(SpinorColumn::from_bispinors(psi1, psi2))
}

/// `P = E + i(p1 i1 + p2 i2 + p3 i3)`.
pub fn momentum_symbol(energy: f64, p: [f64; 3]) -> Quat {
    Quat::new(cx(energy, 0.0), cx(0.0, p[0]), cx(0.0, p[1]), cx(0.0, p[2]))
}

/// Reads `(E, p)` back from a symbol; assumes the symbol shape.
pub fn symbol_energy_momentum(p: &Quat) -> (Cx, [Cx; 3]) {
    (p.0[0], [-I * p.0[1], -I * p.0[2], -I * p.0[3]])
}

/// `((P − iA)‡φ1 − φ2 M, (P − iA)φ2 + φ1 M‡)`.
pub fn versatile_residual(vp: &VersatilePair, symbol: &Quat, potential: &Quat, m: &Quat) -> (Quat, Quat) {
    let x = *symbol - *potential * I;
    (x.qconj() * vp.phi1 - vp.phi2 * *m, x * vp.phi2 + vp.phi1 * m.qconj())
}

/// `(D̲ − i q A̲)Φ̲ − Φ̲M̲` for charge sign `q`.
pub fn reflector_residual(phi: &Block, d: &Reflector, a: &Reflector, m: &Reflector, charge: f64) -> Block {
    let op = *d - a.scale(cx(0.0, charge));
    let lhs = op * *phi;
    let rhs = *phi * *m;
    lhs.checked_sub(&rhs).expect("both sides share a shape")
}

/// Energies at which the versatile equation has nonzero solutions for
/// momentum `p`: roots of `|P(E) − iA| + |M| = 0`, each twofold degenerate.
pub fn versatile_energies(p: [f64; 3], fd: &FieldData, m: &Quat) -> [f64; 2] {
    let a = fd.euclid_potential();
    let f = |e: f64| (momentum_symbol(e, p) - a * I).modulus() + m.modulus();
    let c = f(0.0);
    let (fp, fm) = (f(1.0), f(-1.0));
    let qa = (fp + fm) * 0.5 - c;
    let qb = (fp - fm) * 0.5;
    let disc = (qb * qb - qa * c * 4.0).sqrt();
    let r1 = (-qb - disc) / (qa * 2.0);
    let r2 = (-qb + disc) / (qa * 2.0);
    let mut out = [r1.re, r2.re];
    out.sort_by(f64::total_cmp);
    out
}

/// All blocks of the reflector-form equation for one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracState {
    pub d: Reflector,
    pub a: Reflector,
    pub phi: Block,
    pub m: Reflector,
    /// Sign of the coupling: `(D − i q A)Φ = ΦM`.
    pub charge: f64,
}

impl DiracState {
    pub fn from_mode(mode: &PlaneWaveMode, fd: &FieldData, lift: Lift) -> Self {
        let vp = to_versatile(&mode.amplitude, lift);
        DiracState {
            d: Reflector::of_vector(mode.symbol()),
            a: Reflector::of_vector(fd.euclid_potential()),
            phi: vp.reflector().into(),
            m: fd.mass_block(),
            charge: 1.0,
        }
    }

    pub fn residual(&self) -> Block {
        reflector_residual(&self.phi, &self.d, &self.a, &self.m, self.charge)
    }

    pub fn residual_norm(&self) -> f64 {
        self.residual().norm()
    }

    pub fn max_abs_diff(&self, o: &DiracState) -> f64 {
        let phi = match self.phi.checked_sub(&o.phi) {
            Some(b) => b.norm(),
            None => f64::INFINITY,
        };
        [(self.d - o.d).norm(), (self.a - o.a).norm(), (self.m - o.m).norm(), phi]
            .into_iter()
            .fold(0.0, f64::max)
            .max(if self.charge == o.charge { 0.0 } else { f64::INFINITY })
    }
}

/// `D̲' = R|D̲R|‡`, `A̲' = R|A̲R|‡`, `M̲' = R|ⁿM̲R|‡ⁿ`, `Φ̲' = R|Φ̲R|‡ⁿ`.
pub fn transform_all(state: &DiracState, spec: &TransformSpec) -> Result<DiracState> {
    let (r, rd) = transform_block_powers(spec, 1)?;
    let (rn, rdn) = transform_block_powers(spec, spec.n)?;
    Ok(DiracState {
        d: r * state.d * rd,
        a: r * state.a * rd,
        phi: r * state.phi * rdn,
        m: rn * state.m * rdn,
        charge: state.charge,
    })
}

fn conj_reflector(x: &Reflector, on: bool) -> Reflector {
    if on {
        x.cconj()
    } else {
        *x
    }
}

fn sandwich(left: &Block, x: &Block, right: &Block) -> Block {
    *left * *x * right.qconj()
}

fn expect_reflector(b: Block) -> Reflector {
    match b {
        Block::Reflector(r) => r,
        Block::Rotator(_) => unreachable!("B X B‡ keeps the shape of X"),
    }
}

/// Parity, time reversal or charge conjugation:
/// `D'' = B D B‡`, `A'' = B A B‡`, `Φ'' = B Φ E‡`, `M'' = E M E‡`, after
/// complex conjugation (which flips the charge sign) for `C`.
pub fn apply_discrete(state: &DiracState, kind: DiscreteKind) -> DiracState {
    let el = discrete_elements(kind);
    let c = el.conjugate;
    let d = conj_reflector(&state.d, c);
    let a = conj_reflector(&state.a, c);
    let m = conj_reflector(&state.m, c);
    let phi = if c { state.phi.conj(Conjugation::Complex) } else { state.phi };
    DiracState {
        d: expect_reflector(sandwich(&el.b, &d.into(), &el.b)),
        a: expect_reflector(sandwich(&el.b, &a.into(), &el.b)),
        phi: sandwich(&el.b, &phi, &el.e),
        m: expect_reflector(sandwich(&el.e, &m.into(), &el.e)),
        charge: if c { -state.charge } else { state.charge },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::lift_g;

    #[test]
    fn beta_at_rest() {
        let h = dirac_matrix([0.0; 3], &FieldData::free(1.0));
        assert_eq!(h, beta());
        let h = dirac_matrix([0.3, -0.2, 1.1], &FieldData { mass: 0.7, potential: [0.1, 0.2, 0.3, 0.4] });
        assert!((h - h.adjoint()).norm() < 1e-15);
    }

    #[test]
    fn eigenvalues_for_z_momentum() {
        let ev = dirac_eigenvalues([0.0, 0.0, 0.75], &FieldData::free(1.0));
        let want = [-1.25, -1.25, 1.25, 1.25];
        for (a, b) in ev.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn massless_rest_is_fourfold_zero() {
        for m in solve_plane_waves([0.0; 3], &FieldData::free(0.0)) {
            assert!(m.energy.abs() < 1e-15);
        }
    }

    #[test]
    fn rest_frame_spinor_translation() {
        let psi = SpinorColumn([ONE, ZERO, ZERO, ZERO]);
        let vp = to_versatile(&psi, Lift::First);
        let gen = Quat::new(ONE, ZERO, ZERO, I);
        assert!(vp.phi1.approx_eq(&gen, 1e-15));
        assert!(vp.phi2.approx_eq(&(-Quat::I3 * gen), 1e-15));
        assert_eq!(lift_g(&Bispinor2::new(I, ZERO)), -Quat::I3);
        assert_eq!(to_versatile(&SpinorColumn::default(), Lift::First), VersatilePair::ZERO);
    }

    #[test]
    fn from_versatile_rejects_non_ideal() {
        let vp = VersatilePair { phi1: Quat::ONE, phi2: Quat::ZERO };
        assert!(matches!(from_versatile(&vp, Lift::First, 1e-12), Err(Error::IdealViolation { .. })));
        let zero = from_versatile(&VersatilePair::ZERO, Lift::First, 1e-12).unwrap();
        assert_eq!(zero, SpinorColumn::default());
    }

    #[test]
    fn symbol_examples() {
        assert_eq!(momentum_symbol(1.0, [0.0; 3]), Quat::ONE);
        let p = momentum_symbol(1.3, [0.2, -0.5, 0.7]);
        let pp = p * p.qconj();
        assert!((pp.temporal() - cx(1.69 - 0.04 - 0.25 - 0.49, 0.0)).norm() < 1e-14);
        assert!(pp.spatial().norm() < 1e-15);
    }

    #[test]
    fn massless_mode_by_hand() {
        // E = |p| along z with m = 0: ψ1 = (1, 0), ψ2 = σ3 ψ1 = (1, 0).
        let psi = SpinorColumn([ONE, ZERO, ONE, ZERO]);
        let fd = FieldData::free(0.0);
        let mode = PlaneWaveMode { amplitude: psi, energy: 2.0, momentum: [0.0, 0.0, 2.0] };
        assert!(dirac_residual(&mode, &fd) < 1e-15);
        let vp = to_versatile(&psi, Lift::First);
        let (r1, r2) = versatile_residual(&vp, &mode.symbol(), &Quat::ZERO, &Quat::ZERO);
        assert!(r1.norm() < 1e-15 && r2.norm() < 1e-15);
    }

    #[test]
    fn textbook_positive_energy_spinor() {
        // u = (χ, σ·p χ / (E + m)) with E = √(p² + m²)
        let (m, p) = (0.6f64, [0.3, -0.8, 0.5]);
        let e = (m * m + p.iter().map(|x| x * x).sum::<f64>()).sqrt();
        let chi = [cx(0.6, 0.2), cx(-0.1, 0.7)];
        let mut lower = [ZERO; 2];
        for (r, pr) in p.iter().enumerate() {
            let s = pauli(r);
            for i in 0..2 {
                lower[i] += (s[i][0] * chi[0] + s[i][1] * chi[1]) * (pr / (e + m));
            }
        }
        let psi = SpinorColumn([chi[0], chi[1], lower[0], lower[1]]);
        let fd = FieldData::free(m);
        let mode = PlaneWaveMode { amplitude: psi, energy: e, momentum: p };
        assert!(dirac_residual(&mode, &fd) < 1e-15);
        let vp = to_versatile(&psi, Lift::First);
        let (r1, r2) = versatile_residual(&vp, &mode.symbol(), &Quat::ZERO, &Quat::scalar(fd.euclid_mass()));
        assert!(r1.norm() < 1e-15 && r2.norm() < 1e-15);
        assert!((versatile_energies(p, &fd, &Quat::scalar(fd.euclid_mass()))[1] - e).abs() < 1e-14);
    }

    #[test]
    fn non_solution_has_residual() {
        let fd = FieldData::free(1.0);
        let psi = SpinorColumn([ONE, cx(0.3, 0.1), ZERO, I]);
        let vp = to_versatile(&psi, Lift::First);
        let (r1, r2) = versatile_residual(&vp, &momentum_symbol(0.4, [0.1, 0.2, 0.3]), &Quat::ZERO, &Quat::scalar(fd.euclid_mass()));
        assert!(r1.norm() + r2.norm() > 1e-3);
    }

    #[test]
    fn parity_twice_is_identity() {
        let fd = FieldData { mass: 0.8, potential: [0.1, -0.3, 0.2, 0.05] };
        let mode = solve_plane_waves([0.4, 0.1, -0.6], &fd)[3];
        let s = DiracState::from_mode(&mode, &fd, Lift::First);
        for kind in [DiscreteKind::Parity, DiscreteKind::TimeReversal] {
            let twice = apply_discrete(&apply_discrete(&s, kind), kind);
            assert!(twice.max_abs_diff(&s) < 1e-15);
        }
    }
}
