//! The Dirac current in its original, Euclidean and block forms, current
//! conservation for superpositions of plane-wave solutions, covariance of the
//! current, and the radiation equation for plane-wave sources.

use crate::blocks::{Reflector, Rotator};
use crate::dirac::{alpha, to_versatile, versatile_residual, DiracState, FieldData, PlaneWaveMode, SpinorColumn, VersatilePair};
use crate::error::{Error, Result};
use crate::geometry::{four_vector_transform, make_transform_blocks, transform_block_powers, TransformSpec};
use crate::maps::Lift;
use crate::quat::{cx, Cx, Quat};

/// `k_μ = −i/4`, the same for every μ.
pub const K_MU: Cx = cx(0.0, -0.25);

/// One spinor value's current in all three forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentSample {
    /// `(Ψ†Ψ, Ψ†α_rΨ)`
    pub original: [f64; 4],
    /// `J_0^§ = J̃_0/i`, `J_r^§ = J̃_r`
    pub euclid: [Cx; 4],
    /// `Σ J_μ^§ i_μ`
    pub quat: Quat,
}

pub fn current_original(psi: &SpinorColumn) -> [f64; 4] {
    let v = nalgebra::Vector4::new(psi.0[0], psi.0[1], psi.0[2], psi.0[3]);
    let j0 = v.dotc(&v).re;
    let jr: [f64; 3] = std::array::from_fn(|r| v.dotc(&(alpha(r) * v)).re);
    [j0, jr[0], jr[1], jr[2]]
}

/// Converts the original current to Euclidean components.
pub fn euclid_from_original(j: &[f64; 4]) -> [Cx; 4] {
    [cx(0.0, -j[0]), cx(j[1], 0.0), cx(j[2], 0.0), cx(j[3], 0.0)]
}

pub fn current_sample(psi: &SpinorColumn) -> CurrentSample {
    let original = current_original(psi);
    let euclid = euclid_from_original(&original);
    CurrentSample { original, euclid, quat: Quat(euclid) }
}

/// `t:{k(a1† i_μ‡ b1 + a2† i_μ b2)}` for each μ. With `a = b` this is the
/// current of one pair; with `a ≠ b` it is the cross current of two modes.
pub fn pair_current(a: &VersatilePair, b: &VersatilePair) -> [Cx; 4] {
    let (a1, a2) = (a.phi1.hconj(), a.phi2.hconj());
    std::array::from_fn(|mu| {
        let e = Quat::basis(mu);
        ((a1 * e.qconj() * b.phi1 + a2 * e * b.phi2) * K_MU).temporal()
    })
}

/// `J_μ^§` of a versatile pair.
pub fn current_versatile(vp: &VersatilePair) -> [Cx; 4] {
    pair_current(vp, vp)
}

/// The factors of the block form of the current and the four products
/// `J_μ| = K̲ Φ̲_S I̲_μ Φ̲`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentBlocks {
    pub k: Reflector,
    pub phi_s: Reflector,
    pub phi: Reflector,
    pub i_mu: [Reflector; 4],
    pub j: [Rotator; 4],
}

/// `Φ̲_S = Reflector(φ1†, φ2†)`.
pub fn spinor_adjoint_block(phi: &Reflector) -> Reflector {
    Reflector::new(phi.upper.hconj(), phi.lower.hconj())
}

pub fn k_block() -> Reflector {
    Reflector::new(Quat::scalar(K_MU), Quat::scalar(K_MU).qconj())
}

pub fn basis_block(mu: usize) -> Reflector {
    Reflector::of_vector(Quat::basis(mu))
}

impl CurrentBlocks {
    /// Builds the blocks from the factors; `Φ̲_S` is formed from `Φ̲`.
    pub fn assemble(k: Reflector, phi: Reflector, i_mu: [Reflector; 4]) -> Self {
        let phi_s = spinor_adjoint_block(&phi);
        let j = i_mu.map(|i| k * phi_s * i * phi);
        CurrentBlocks { k, phi_s, phi, i_mu, j }
    }

    /// `t:(Trace J_μ|)` for each μ.
    pub fn temporal_currents(&self) -> [Cx; 4] {
        self.j.map(|j| j.trace().temporal())
    }
}

pub fn current_blocks(vp: &VersatilePair) -> CurrentBlocks {
    CurrentBlocks::assemble(k_block(), vp.reflector(), std::array::from_fn(basis_block))
}

/// The blocks after a transformation with exponent `n`:
/// `K̲' = R|ⁿK̲R|‡ⁿ`, `I̲_μ' = R|I̲_μR|‡`, `Φ̲' = R|Φ̲R|‡ⁿ`, and `Φ̲_S'` formed from `Φ̲'`.
pub fn transformed_current_blocks(vp: &VersatilePair, spec: &TransformSpec) -> Result<CurrentBlocks> {
    let (r, rd) = make_transform_blocks(spec);
    let (rn, rdn) = transform_block_powers(spec, spec.n)?;
    let k = rn * k_block() * rdn;
    let phi = r * vp.reflector() * rdn;
    let i_mu = std::array::from_fn(|mu| r * basis_block(mu) * rd);
    Ok(CurrentBlocks::assemble(k, phi, i_mu))
}

fn max_diff(a: &[Cx; 4], b: &[Cx; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Largest disagreement between the original, versatile and block currents
/// of one spinor value.
pub fn pipeline_disagreement(psi: &SpinorColumn) -> f64 {
    let want = current_sample(psi).euclid;
    let vp = to_versatile(psi, Lift::First);
    let versatile = current_versatile(&vp);
    let blocks = current_blocks(&vp).temporal_currents();
    max_diff(&want, &versatile).max(max_diff(&want, &blocks))
}

/// Residuals of the covariance checks for one pair and transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceReport {
    /// `max_μ |t:(J_μ|') − t:(J_μ|)|`
    pub temporal_invariance: f64,
    /// `|R|J̲R|‡ − Reflector(J', J'‡)|` with `J'` from the Minkowski matrix;
    /// `None` when the rotor has no single matrix (general products).
    pub matrix_agreement: Option<f64>,
    /// Current of the `n = 0` transformed pair against `L J L†`.
    pub spinor_agreement: f64,
}

impl CovarianceReport {
    pub fn max(&self) -> f64 {
        self.temporal_invariance.max(self.matrix_agreement.unwrap_or(0.0)).max(self.spinor_agreement)
    }
}

pub fn current_covariance_check(vp: &VersatilePair, spec: &TransformSpec) -> Result<CovarianceReport> {
    let before = current_blocks(vp).temporal_currents();
    let after = transformed_current_blocks(vp, spec)?.temporal_currents();
    let temporal_invariance = max_diff(&before, &after);

    let j = Quat(current_versatile(vp));
    let (r, rd) = make_transform_blocks(spec);
    let jb = r * Reflector::of_vector(j) * rd;
    let matrix_agreement = spec.rotor.matrix().map(|m| {
        let want = Reflector::of_vector(crate::geometry::apply_matrix(&m, &j));
        (jb - want).norm()
    });

    let moved = r * vp.reflector();
    let moved = VersatilePair { phi1: moved.upper, phi2: moved.lower };
    let spinor = Quat(current_versatile(&moved));
    let spinor_agreement = (spinor - four_vector_transform(&j, spec)).norm();

    Ok(CovarianceReport { temporal_invariance, matrix_agreement, spinor_agreement })
}

fn solution_pairs(modes: &[PlaneWaveMode], fd: &FieldData, tol: f64) -> Result<Vec<VersatilePair>> {
    if fd.potential.iter().any(|a| *a != 0.0) {
        return Err(Error::InvalidConfig("divergence needs zero potential".into()));
    }
    let m = Quat::scalar(fd.euclid_mass());
    modes
        .iter()
        .enumerate()
        .map(|(index, mode)| {
            let vp = to_versatile(&mode.amplitude, Lift::First);
            let (r1, r2) = versatile_residual(&vp, &mode.symbol(), &Quat::ZERO, &m);
            let residual = r1.norm().max(r2.norm());
            if residual > tol {
                return Err(Error::NotASolution { index, residual });
            }
            Ok(vp)
        })
        .collect()
}

/// `Σ_μ D_μ J_μ^§` of a superposition `Σ_a φ_a exp(i(p_a·x − E_a t))`.
///
/// The product of the `a` and `b` terms carries the phase
/// `exp(i((p_b − p_a)·x − (E_b − E_a)t))`, on which `D` acts as the symbol
/// difference `P_b − P_a`. The divergence is therefore the sum over ordered
/// pairs of `Σ_μ (P_b − P_a)_μ J_ab,μ` times that phase; the returned value
/// is the largest coefficient magnitude.
pub fn divergence(modes: &[PlaneWaveMode], fd: &FieldData, tol: f64) -> Result<f64> {
    let pairs = solution_pairs(modes, fd, tol)?;
    let mut worst: f64 = 0.0;
    for (a, va) in modes.iter().zip(&pairs) {
        for (b, vb) in modes.iter().zip(&pairs) {
            let dp = b.symbol() - a.symbol();
            let j = pair_current(va, vb);
            let c: Cx = (0..4).map(|mu| dp.0[mu] * j[mu]).sum();
            worst = worst.max(c.norm());
        }
    }
    Ok(worst)
}

/// Pair divergence coefficient in block form, `t:(Trace K̲ Φ̲_S,a ΔD̲ Φ̲_b)`.
pub fn pair_block_coefficient(k: &Reflector, phi_a: &Reflector, dd: &Reflector, phi_b: &Reflector) -> Cx {
    (*k * spinor_adjoint_block(phi_a) * *dd * *phi_b).trace().temporal()
}

/// Divergence after transforming every mode by `spec` (with its exponent
/// `n`). Each transformed state is re-checked as a solution, then the
/// coefficients are formed from the transformed blocks `K̲'`, `Φ̲'`, `D̲'`.
pub fn divergence_transformed(modes: &[PlaneWaveMode], fd: &FieldData, spec: &TransformSpec, tol: f64) -> Result<f64> {
    solution_pairs(modes, fd, tol)?;
    let (rn, rdn) = transform_block_powers(spec, spec.n)?;
    let k = rn * k_block() * rdn;
    let mut states = Vec::with_capacity(modes.len());
    for (index, mode) in modes.iter().enumerate() {
        let s = crate::dirac::transform_all(&DiracState::from_mode(mode, fd, Lift::First), spec)?;
        let residual = s.residual_norm();
        if residual > tol {
            return Err(Error::NotASolution { index, residual });
        }
        let crate::blocks::Block::Reflector(phi) = s.phi else {
            return Err(Error::InvalidConfig("continuous transforms keep Φ a reflector".into()));
        };
        states.push((s.d, phi));
    }
    let mut worst: f64 = 0.0;
    for (da, pa) in &states {
        for (db, pb) in &states {
            worst = worst.max(pair_block_coefficient(&k, pa, &(*db - *da), pb).norm());
        }
    }
    Ok(worst)
}

/// Divergence in a boosted or rotated frame with the ordinary current:
/// spinors move by `Φ̲ ↦ R|Φ̲`, symbols by `P ↦ L P L†`.
pub fn divergence_covariant(modes: &[PlaneWaveMode], fd: &FieldData, spec: &TransformSpec, tol: f64) -> Result<f64> {
    let pairs = solution_pairs(modes, fd, tol)?;
    let (r, _) = make_transform_blocks(spec);
    let moved: Vec<(Quat, VersatilePair)> = modes
        .iter()
        .zip(&pairs)
        .map(|(mode, vp)| {
            let phi = r * vp.reflector();
            (four_vector_transform(&mode.symbol(), spec), VersatilePair { phi1: phi.upper, phi2: phi.lower })
        })
        .collect();
    let mut worst: f64 = 0.0;
    for (pa, va) in &moved {
        for (pb, vb) in &moved {
            let dp = *pb - *pa;
            let j = pair_current(va, vb);
            let c: Cx = (0..4).map(|mu| dp.0[mu] * j[mu]).sum();
            worst = worst.max(c.norm());
        }
    }
    Ok(worst)
}

/// A plane-wave four-vector field `amplitude · exp(i(k·x − ω t))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveMode {
    pub omega: f64,
    pub k: [f64; 3],
    pub amplitude: Quat,
}

impl WaveMode {
    pub fn symbol(&self) -> Quat {
        crate::dirac::momentum_symbol(self.omega, self.k)
    }

    /// `ω² − |k|²`, the symbol of `DD‡`.
    pub fn dalembertian(&self) -> f64 {
        self.omega * self.omega - self.k.iter().map(|x| x * x).sum::<f64>()
    }
}

/// Potential solving the radiation equation for a set of current modes.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PotentialField {
    pub modes: Vec<WaveMode>,
}

/// `A = J/(ω² − |k|²)` mode by mode.
pub fn solve_radiation(current: &[WaveMode], tol: f64) -> Result<PotentialField> {
    current
        .iter()
        .enumerate()
        .map(|(index, j)| {
            let s = j.dalembertian();
            let scale = 1.0 + j.omega * j.omega;
            if s.abs() <= tol * scale {
                return Err(Error::LightlikeMode { index, symbol: s });
            }
            Ok(WaveMode { amplitude: j.amplitude * (1.0 / s), ..*j })
        })
        .collect::<Result<Vec<_>>>()
        .map(|modes| PotentialField { modes })
}

/// `D̲D̲A̲ − J̲` for reflector-form `D̲`, `A̲`, `J̲`.
pub fn radiation_residual(d: &Reflector, a: &Reflector, j: &Reflector) -> Reflector {
    *d * *d * *a - *j
}

/// Largest radiation residual over paired current and potential modes,
/// optionally after transforming `D̲`, `A̲`, `J̲` together.
pub fn radiation_residual_max(current: &[WaveMode], field: &PotentialField, spec: Option<&TransformSpec>) -> f64 {
    let blocks = spec.map(make_transform_blocks);
    current
        .iter()
        .zip(&field.modes)
        .map(|(j, a)| {
            let mut d = Reflector::of_vector(j.symbol());
            let mut ab = Reflector::of_vector(a.amplitude);
            let mut jb = Reflector::of_vector(j.amplitude);
            if let Some((r, rd)) = blocks {
                d = r * d * rd;
                ab = r * ab * rd;
                jb = r * jb * rd;
            }
            radiation_residual(&d, &ab, &jb).norm()
        })
        .fold(0.0, f64::max)
}

/// Current modes of a two-mode superposition: one per ordered pair, at the
/// difference frequency and wavevector, with amplitude `J_ab`.
pub fn current_modes(modes: &[PlaneWaveMode]) -> Vec<WaveMode> {
    let pairs: Vec<VersatilePair> = modes.iter().map(|m| to_versatile(&m.amplitude, Lift::First)).collect();
    let mut out = Vec::new();
    for (a, va) in modes.iter().zip(&pairs) {
        for (b, vb) in modes.iter().zip(&pairs) {
            out.push(WaveMode {
                omega: b.energy - a.energy,
                k: std::array::from_fn(|r| b.momentum[r] - a.momentum[r]),
                amplitude: Quat(pair_current(va, vb)),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::solve_plane_waves;
    use crate::geometry::{rotor_boost, rotor_spatial};
    use crate::quat::{I, ONE, ZERO};

    #[test]
    fn original_current_examples() {
        assert_eq!(current_original(&SpinorColumn([ONE, ZERO, ZERO, ZERO])), [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(current_original(&SpinorColumn::default()), [0.0; 4]);
        // ψ1 = (1, 0), ψ2 = (0, 1): ψ1†σ1ψ2 + ψ2†σ1ψ1 = 2.
        let j = current_original(&SpinorColumn([ONE, ZERO, ZERO, ONE]));
        assert_eq!(j, [2.0, 2.0, 0.0, 0.0]);
        let psi = SpinorColumn([cx(0.3, 0.1), cx(-0.2, 0.5), cx(0.7, 0.0), cx(0.0, -0.4)]);
        let c = cx(1.5, -0.5);
        let (a, b) = (current_original(&psi), current_original(&psi.scale(c)));
        for mu in 0..4 {
            assert!((b[mu] - a[mu] * c.norm_sqr()).abs() < 1e-14);
        }
    }

    #[test]
    fn rest_frame_versatile_current() {
        let vp = to_versatile(&SpinorColumn([ONE, ZERO, ZERO, ZERO]), Lift::First);
        let j = current_versatile(&vp);
        assert!(max_diff(&j, &[-I, ZERO, ZERO, ZERO]) < 1e-15);
        assert_eq!(current_versatile(&VersatilePair::ZERO), [ZERO; 4]);
    }

    #[test]
    fn block_current_shapes() {
        let k = k_block();
        assert_eq!(k.upper, k.lower);
        let b = current_blocks(&VersatilePair::ZERO);
        assert!(b.j.iter().all(|j| j.norm() == 0.0));
        let psi = SpinorColumn([cx(0.3, 0.1), cx(-0.2, 0.5), cx(0.7, 0.0), cx(0.0, -0.4)]);
        assert!(pipeline_disagreement(&psi) < 1e-15);
    }

    #[test]
    fn single_mode_is_divergence_free() {
        let fd = FieldData::free(0.9);
        let modes = solve_plane_waves([0.2, -0.4, 0.3], &fd);
        assert_eq!(divergence(&modes[3..], &fd, 1e-10).unwrap(), 0.0);
        assert!(divergence(&modes, &fd, 1e-10).unwrap() < 1e-14);
    }

    #[test]
    fn off_shell_mode_is_rejected() {
        let fd = FieldData::free(0.9);
        let mut m = solve_plane_waves([0.2, -0.4, 0.3], &fd)[2];
        m.energy += 0.1;
        assert!(matches!(divergence(&[m], &fd, 1e-10), Err(Error::NotASolution { index: 0, .. })));
        let with_a = FieldData { mass: 0.9, potential: [0.1, 0.0, 0.0, 0.0] };
        assert!(divergence(&[m], &with_a, 1e-10).is_err());
    }

    #[test]
    fn identity_covariance_is_exact() {
        let vp = to_versatile(&SpinorColumn([cx(0.3, 0.1), cx(-0.2, 0.5), cx(0.7, 0.0), cx(0.0, -0.4)]), Lift::First);
        let rep = current_covariance_check(&vp, &TransformSpec::identity()).unwrap();
        assert!(rep.max() < 1e-15);
        let boost = TransformSpec::new(rotor_boost([0.1, 0.7, -0.3], 1.2).unwrap(), 1);
        assert!(current_covariance_check(&vp, &boost).unwrap().max() < 1e-13);
        let rot = TransformSpec::new(rotor_spatial([0.5, 0.1, 0.2], 2.0).unwrap(), -1);
        assert!(current_covariance_check(&vp, &rot).unwrap().max() < 1e-13);
    }

    #[test]
    fn radiation_examples() {
        let j = Quat::real(0.2, -0.1, 0.4, 0.3);
        let mode = WaveMode { omega: 2.0, k: [1.0, 0.0, 0.0], amplitude: j };
        let a = solve_radiation(&[mode], 1e-12).unwrap();
        assert!(a.modes[0].amplitude.approx_eq(&(j * (1.0 / 3.0)), 1e-15));
        assert!(radiation_residual_max(&[mode], &a, None) < 1e-15);

        let light = WaveMode { omega: 1.0, k: [1.0, 0.0, 0.0], amplitude: j };
        assert!(matches!(solve_radiation(&[light], 1e-12), Err(Error::LightlikeMode { index: 0, .. })));

        let zero = WaveMode { amplitude: Quat::ZERO, ..mode };
        assert_eq!(solve_radiation(&[zero], 1e-12).unwrap().modes[0].amplitude, Quat::ZERO);
    }

    #[test]
    fn dalembertian_symbol_commutes() {
        let p = crate::dirac::momentum_symbol(1.3, [0.4, -0.9, 0.2]);
        assert_eq!(p * p.qconj(), p.qconj() * p);
        let w = WaveMode { omega: 1.3, k: [0.4, -0.9, 0.2], amplitude: Quat::ZERO };
        assert!(((p * p.qconj()).temporal() - cx(w.dalembertian(), 0.0)).norm() < 1e-15);
    }
}
