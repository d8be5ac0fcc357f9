use std::f64::consts::PI;

use rand::Rng;

use super::grid::{convergence_ratio, fd_divergence_error, fd_mode_error, GridMode};
use super::sample;
use super::{trial_rng, Ctx};
use crate::blocks::{dense_max_abs_diff, dense_mul, Reflector, Rotator};
use crate::current::{
    current_covariance_check, current_modes, current_original, divergence, divergence_covariant, divergence_transformed,
    pipeline_disagreement, radiation_residual_max, solve_radiation, WaveMode,
};
use crate::dirac::{
    apply_discrete, dirac_eigenvalues, dirac_residual, from_versatile, solve_plane_waves, to_versatile, transform_all,
    versatile_energies, versatile_residual, DiracState, FieldData,
};
use crate::error::{Error, Result};
use crate::geometry::{
    apply_matrix, boost_matrix, four_vector_transform, make_transform_blocks, mat4_mul, measure_plane_angles,
    minkowski_interval, rotation_matrix, rotor_boost, rotor_spatial, table1_apply, DiscreteKind, Table1Pattern,
    TransformSpec,
};
use crate::maps::{bijection_h, bijection_h_inv, lift_g, lift_l, map_f, map_n, Bispinor2, Lift, Vec4C};
use crate::quat::{cx, Quat, I};

/// Tolerance multipliers relative to `cfg.tol`.
const EXACT: f64 = 0.01;
const STD: f64 = 1.0;
const ANGLE: f64 = 10.0;
const LOOSE: f64 = 100.0;

/// `|ratio − 4|` allowed for the second-order convergence checks.
const ORDER2_WINDOW: f64 = 0.8;
const FD_POINTS: usize = 9;

pub(crate) fn run(name: &str, ctx: &mut Ctx) -> Result<()> {
    match name {
        "algebra" => algebra(ctx),
        "maps" => maps(ctx),
        "blocks" => blocks(ctx),
        "table1" => table1(ctx),
        "equivalence" => equivalence(ctx),
        "invariance" => invariance(ctx),
        "symmetries" => symmetries(ctx),
        "current" => current(ctx),
        "conservation" => conservation(ctx),
        "radiation" => radiation(ctx),
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(())
}

fn algebra(ctx: &mut Ctx) {
    ctx.each("matrix_homomorphism", EXACT, |rng| {
        let (a, b) = (sample::quat(rng), sample::quat(rng));
        Ok((a * b).to_matrix().max_abs_diff(&(a.to_matrix() * b.to_matrix())))
    });
    ctx.each("matrix_round_trip", EXACT, |rng| {
        let q = sample::quat(rng);
        Ok((Quat::from_matrix(&q.to_matrix()) - q).max_abs())
    });
    ctx.each("associativity", EXACT, |rng| {
        let (a, b, c) = (sample::quat(rng), sample::quat(rng), sample::quat(rng));
        Ok(((a * b) * c - a * (b * c)).max_abs())
    });
    ctx.each("quaternion_conjugate_reverses", EXACT, |rng| {
        let (a, b) = (sample::quat(rng), sample::quat(rng));
        Ok(((a * b).qconj() - b.qconj() * a.qconj()).max_abs())
    });
    ctx.each("hermitian_conjugate_reverses", EXACT, |rng| {
        let (a, b) = (sample::quat(rng), sample::quat(rng));
        Ok(((a * b).hconj() - b.hconj() * a.hconj()).max_abs())
    });
    ctx.each("complex_conjugate_preserves", EXACT, |rng| {
        let (a, b) = (sample::quat(rng), sample::quat(rng));
        Ok(((a * b).cconj() - a.cconj() * b.cconj()).max_abs())
    });
    ctx.each("hermitian_is_matrix_adjoint", EXACT, |rng| {
        let q = sample::quat(rng);
        Ok(q.hconj().to_matrix().max_abs_diff(&q.to_matrix().adjoint()))
    });
    ctx.each("dot_forms_agree", EXACT, |rng| {
        let (a, b) = (sample::quat(rng), sample::quat(rng));
        let sym = (a.qconj() * b + b.qconj() * a) * 0.5;
        Ok((a.dot(&b) - a.dot_via_product(&b)).norm().max(sym.spatial().max_abs()).max((sym.temporal() - a.dot(&b)).norm()))
    });
    ctx.each("modulus_multiplicative", EXACT, |rng| {
        let (a, b) = (sample::quat(rng), sample::quat(rng));
        Ok(((a * b).modulus() - a.modulus() * b.modulus()).norm())
    });
    ctx.each("inverse", EXACT, |rng| {
        let q = sample::quat(rng);
        let inv = q.inverse()?;
        let scale = 1.0f64.max(q.norm() * inv.norm());
        Ok(((q * inv - Quat::ONE).max_abs()).max((inv * q - Quat::ONE).max_abs()) / scale)
    });
    ctx.each("temporal_spatial_split", EXACT, |rng| {
        let q = sample::quat(rng);
        let (t, s) = q.temporal_spatial_split();
        let half = (q + q.qconj()) * 0.5;
        let tr = q.to_matrix().trace() * 0.5;
        let dt = (half - Quat::scalar(t)).max_abs().max((tr - t).norm());
        Ok(dt.max((Quat::scalar(t) + s - q).max_abs()))
    });
}

fn apply(q: &Quat, v: &Bispinor2) -> Bispinor2 {
    Bispinor2(q.to_matrix().apply(v.0))
}

fn maps(ctx: &mut Ctx) {
    ctx.each("f_after_g", EXACT, |rng| {
        let v = sample::bispinor(rng);
        Ok(map_f(&lift_g(&v)).max_abs_diff(&v))
    });
    ctx.each("n_after_l", EXACT, |rng| {
        let v = sample::bispinor(rng);
        Ok(map_n(&lift_l(&v)).max_abs_diff(&v))
    });
    ctx.each("f_left_action", EXACT, |rng| {
        let (a, b) = (sample::quat(rng), sample::quat(rng));
        Ok(map_f(&(a * b)).max_abs_diff(&apply(&a, &map_f(&b))))
    });
    ctx.each("f_right_minus_i3", EXACT, |rng| {
        let q = sample::quat(rng);
        Ok(map_f(&(q * -Quat::I3)).max_abs_diff(&map_f(&q).scale(I)))
    });
    ctx.each("f_right_idempotent", EXACT, |rng| {
        let q = sample::quat(rng);
        Ok(map_f(&(q * Lift::First.generator())).max_abs_diff(&map_f(&q).scale(cx(2.0, 0.0))))
    });
    ctx.each("g_of_basis_action_real", EXACT, |rng| {
        let q = sample::real_quat(rng);
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            let e = Quat::basis(mu);
            let fq = map_f(&q);
            worst = worst.max((lift_g(&apply(&e, &fq)) - e * q).max_abs());
            worst = worst.max((lift_g(&apply(&e, &fq).scale(I)) - e * q * -Quat::I3).max_abs());
        }
        Ok(worst)
    });
    ctx.each("lift_after_map_on_ideal", EXACT, |rng| {
        let q = sample::quat(rng);
        let g1 = Lift::First.generator();
        let g2 = Lift::Second.generator();
        let d1 = (lift_g(&map_f(&q)) * g1 - q * g1).max_abs();
        let d2 = (lift_l(&map_n(&q)) * g2 - q * g2).max_abs();
        Ok(d1.max(d2))
    });
    ctx.each("contraction_basis", EXACT, |rng| {
        let (q, u) = (sample::real_quat(rng), sample::real_quat(rng));
        let (fq, fu) = (map_f(&q), map_f(&u));
        let mut worst: f64 = 0.0;
        for r in 1..4 {
            let e = Quat::basis(r);
            let lhs = fq.inner(&apply(&e, &fu)).re;
            let dot = q.dot(&(e * u));
            let sym = ((q.hconj() * e * u + u.hconj() * e.hconj() * q) * 0.5).temporal();
            worst = worst.max((dot - cx(lhs, 0.0)).norm()).max((sym - cx(lhs, 0.0)).norm());
        }
        Ok(worst)
    });
    ctx.each("contraction_pauli", EXACT, |rng| {
        let (q, u) = (sample::real_quat(rng), sample::real_quat(rng));
        let (fq, fu) = (map_f(&q), map_f(&u));
        let m3 = -Quat::I3;
        let mut worst: f64 = 0.0;
        for r in 1..4 {
            let e = Quat::basis(r);
            let sigma_fu = apply(&e, &fu).scale(I);
            let lhs = cx(fq.inner(&sigma_fu).re, 0.0);
            let dot = q.dot(&(e * u * m3));
            let sym = ((q.hconj() * e * u * m3 + m3.hconj() * u.hconj() * e.hconj() * q) * 0.5).temporal();
            worst = worst.max((dot - lhs).norm()).max((sym - lhs).norm());
        }
        Ok(worst)
    });
    ctx.each("lifts_are_real", EXACT, |rng| {
        let v = sample::bispinor(rng);
        let (g, l) = (lift_g(&v), lift_l(&v));
        let imag = g.0.iter().chain(l.0.iter()).map(|z| z.im.abs()).fold(0.0, f64::max);
        Ok(imag.max((g.qconj() - g.hconj()).max_abs()))
    });
    ctx.each("bijection_round_trip", EXACT, |rng| {
        let v = Vec4C(sample::quat(rng).0);
        let back = bijection_h_inv(&bijection_h(&v));
        Ok((Quat(back.0) - Quat(v.0)).max_abs())
    });
}

fn blocks(ctx: &mut Ctx) {
    ctx.each("dense_products", EXACT, |rng| {
        let q: [Quat; 4] = std::array::from_fn(|_| sample::quat(rng));
        let (f1, f2) = (Reflector::new(q[0], q[1]), Reflector::new(q[2], q[3]));
        let (r1, r2) = (Rotator::new(q[1], q[2]), Rotator::new(q[3], q[0]));
        let pairs = [
            ((f1 * f2).to_dense(), dense_mul(&f1.to_dense(), &f2.to_dense())),
            ((r1 * f2).to_dense(), dense_mul(&r1.to_dense(), &f2.to_dense())),
            ((f1 * r2).to_dense(), dense_mul(&f1.to_dense(), &r2.to_dense())),
            ((r1 * r2).to_dense(), dense_mul(&r1.to_dense(), &r2.to_dense())),
        ];
        Ok(pairs.iter().map(|(a, b)| dense_max_abs_diff(a, b)).fold(0.0, f64::max))
    });
    ctx.each("transform_blocks_inverse", EXACT, |rng| {
        let spec = TransformSpec::new(sample::rotor(rng), 1);
        let (r, rd) = make_transform_blocks(&spec);
        Ok((rd * r - Rotator::IDENTITY).norm().max((r * rd - Rotator::IDENTITY).norm()))
    });
    ctx.each("rotator_powers", EXACT, |rng| {
        let (r, _) = make_transform_blocks(&TransformSpec::new(sample::rotor(rng), 1));
        let mut worst: f64 = 0.0;
        for n in 1..=3 {
            worst = worst.max((r.powi(n)? * r.powi(-n)? - Rotator::IDENTITY).norm());
        }
        Ok(worst)
    });
    ctx.each("similarity_keeps_temporal_trace", EXACT, |rng| {
        let x = Rotator::new(sample::quat(rng), sample::quat(rng));
        let (r, _) = make_transform_blocks(&TransformSpec::new(sample::rotor(rng), 1));
        Ok((x.similarity(&r).trace().temporal() - x.trace().temporal()).norm())
    });
}

fn wrap(a: f64) -> f64 {
    (a + PI).rem_euclid(2.0 * PI) - PI
}

fn table1(ctx: &mut Ctx) {
    for pattern in Table1Pattern::ALL {
        ctx.each(&format!("angles_{pattern:?}"), ANGLE, |rng| loop {
            let r = sample::spatial_rotor(rng);
            let q = sample::real_quat(rng);
            let q2 = table1_apply(pattern, &r, &q);
            let got = measure_plane_angles(&r, &q, &q2, 1e-3);
            let (Ok(s), Ok(t)) = (got.spatial, got.temporal) else { continue };
            let xi = r.spatial_angle();
            let (xs, xt) = pattern.expected_angles();
            return Ok(wrap(s - xs * xi).abs().max(wrap(t - xt * xi).abs()));
        });
    }
}

fn equivalence(ctx: &mut Ctx) {
    ctx.each("versatile_residual", STD, |rng| {
        let fd = sample::field(rng);
        let modes = solve_plane_waves(sample::momentum(rng), &fd);
        let m = Quat::scalar(fd.euclid_mass());
        Ok(modes
            .iter()
            .map(|mode| {
                let vp = to_versatile(&mode.amplitude, Lift::First);
                let (a, b) = versatile_residual(&vp, &mode.symbol(), &fd.euclid_potential(), &m);
                a.norm().max(b.norm())
            })
            .fold(0.0, f64::max))
    });
    ctx.each("reflector_residual", STD, |rng| {
        let fd = sample::field(rng);
        let modes = solve_plane_waves(sample::momentum(rng), &fd);
        Ok(modes.iter().map(|m| DiracState::from_mode(m, &fd, Lift::First).residual_norm()).fold(0.0, f64::max))
    });
    ctx.each("matrix_residual", STD, |rng| {
        let fd = sample::field(rng);
        let modes = solve_plane_waves(sample::momentum(rng), &fd);
        Ok(modes.iter().map(|m| dirac_residual(m, &fd)).fold(0.0, f64::max))
    });
    ctx.each("round_trip", EXACT, |rng| {
        let fd = sample::field(rng);
        let mut worst: f64 = 0.0;
        let mut spinors: Vec<_> = solve_plane_waves(sample::momentum(rng), &fd).iter().map(|m| m.amplitude).collect();
        spinors.push(sample::spinor(rng));
        for psi in spinors {
            for lift in [Lift::First, Lift::Second] {
                let back = from_versatile(&to_versatile(&psi, lift), lift, 1e-12)?;
                worst = worst.max(back.max_abs_diff(&psi));
            }
        }
        Ok(worst)
    });
    ctx.each("energies_match_eigenvalues", STD, |rng| {
        let fd = sample::field(rng);
        let p = sample::momentum(rng);
        let ev = dirac_eigenvalues(p, &fd);
        let [lo, hi] = versatile_energies(p, &fd, &Quat::scalar(fd.euclid_mass()));
        Ok([lo, lo, hi, hi].iter().zip(ev).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
    });
}

fn random_state<R: Rng>(rng: &mut R) -> (DiracState, FieldData) {
    let fd = sample::field(rng);
    let p = sample::momentum(rng);
    let mode = sample::solution(rng, p, &fd);
    (DiracState::from_mode(&mode, &fd, Lift::First), fd)
}

fn invariance(ctx: &mut Ctx) {
    for n in ctx.cfg.n_set.clone() {
        ctx.each(&format!("residual_n={n}"), LOOSE, |rng| {
            let (state, _) = random_state(rng);
            let spec = TransformSpec::new(sample::rotor(rng), n);
            Ok(transform_all(&state, &spec)?.residual_norm())
        });
    }
    ctx.each("mass_boost_n=1", STD, |rng| {
        let (state, fd) = random_state(rng);
        let (axis, w) = (sample::axis(rng), sample::rapidity(rng));
        let spec = TransformSpec::new(rotor_boost(axis, w)?, 1);
        let moved = transform_all(&state, &spec)?;
        let want = apply_matrix(&boost_matrix(axis, w)?, &Quat::scalar(fd.euclid_mass()));
        Ok((moved.m.upper - want).max_abs().max((moved.m.lower + want.qconj()).max_abs()))
    });
    ctx.each("boost_matrix", STD, |rng| {
        let q = sample::euclid_vector(rng);
        let (axis, w) = (sample::axis(rng), sample::rapidity(rng));
        let spec = TransformSpec::new(rotor_boost(axis, w)?, 0);
        Ok((four_vector_transform(&q, &spec) - apply_matrix(&boost_matrix(axis, w)?, &q)).max_abs())
    });
    ctx.each("boost_interval", STD, |rng| {
        let q = sample::euclid_vector(rng);
        let spec = TransformSpec::new(sample::boost_rotor(rng), 0);
        Ok((minkowski_interval(&four_vector_transform(&q, &spec)) - minkowski_interval(&q)).norm())
    });
    ctx.each("rotation_matrix", STD, |rng| {
        let q = sample::euclid_vector(rng);
        let (axis, a) = (sample::axis(rng), sample::angle(rng));
        let spec = TransformSpec::new(rotor_spatial(axis, a)?, 0);
        Ok((four_vector_transform(&q, &spec) - apply_matrix(&rotation_matrix(axis, a)?, &q)).max_abs())
    });
    ctx.each("collinear_boost_composition", STD, |rng| {
        let axis = sample::axis(rng);
        let (w1, w2) = (sample::rapidity(rng), sample::rapidity(rng));
        let composed = rotor_boost(axis, w1)?.after(&rotor_boost(axis, w2)?);
        Ok((composed.value - rotor_boost(axis, w1 + w2)?.value).max_abs())
    });
    ctx.each("general_composition", STD, |rng| {
        let q = sample::euclid_vector(rng);
        let (a1, x1) = (sample::axis(rng), sample::angle(rng));
        let (a2, w2) = (sample::axis(rng), sample::rapidity(rng));
        let (r, b) = (rotor_spatial(a1, x1)?, rotor_boost(a2, w2)?);
        let (mr, mb) = (rotation_matrix(a1, x1)?, boost_matrix(a2, w2)?);
        let mut worst: f64 = 0.0;
        for (rotor, m) in [(r.after(&b), mat4_mul(&mr, &mb)), (b.after(&r), mat4_mul(&mb, &mr)), (r.after(&r), mat4_mul(&mr, &mr))] {
            let spec = TransformSpec::new(rotor, 0);
            worst = worst.max((four_vector_transform(&q, &spec) - apply_matrix(&m, &q)).max_abs());
        }
        Ok(worst)
    });
}

fn symmetries(ctx: &mut Ctx) {
    for (name, kind) in [
        ("parity", DiscreteKind::Parity),
        ("time_reversal", DiscreteKind::TimeReversal),
        ("charge_conjugation", DiscreteKind::ChargeConjugation),
    ] {
        ctx.each(&format!("{name}_residual"), STD, |rng| {
            let (state, _) = random_state(rng);
            let image = apply_discrete(&state, kind);
            let flipped = image.charge == -state.charge;
            if flipped != (kind == DiscreteKind::ChargeConjugation) {
                return Err(Error::InvalidConfig(format!("{name} changed the charge sign unexpectedly")));
            }
            Ok(image.residual_norm())
        });
    }
    for (name, kind) in [("parity", DiscreteKind::Parity), ("time_reversal", DiscreteKind::TimeReversal)] {
        ctx.each(&format!("{name}_squared"), STD, |rng| {
            let (state, _) = random_state(rng);
            Ok(apply_discrete(&apply_discrete(&state, kind), kind).max_abs_diff(&state))
        });
    }
}

fn current(ctx: &mut Ctx) {
    ctx.each("pipelines_agree", EXACT, |rng| Ok(pipeline_disagreement(&sample::spinor(rng))));
    ctx.each("density_nonnegative", EXACT, |rng| Ok((-current_original(&sample::spinor(rng))[0]).max(0.0)));
    for n in ctx.cfg.n_set.clone() {
        ctx.each(&format!("covariance_n={n}"), STD, |rng| {
            let vp = to_versatile(&sample::spinor(rng), Lift::First);
            let spec = TransformSpec::new(sample::rotor(rng), n);
            Ok(current_covariance_check(&vp, &spec)?.max())
        });
    }
}

fn free_pair<R: Rng>(rng: &mut R) -> (FieldData, [crate::dirac::PlaneWaveMode; 2]) {
    let fd = FieldData::free(sample::mass(rng));
    let (pa, pb) = (sample::momentum(rng), sample::momentum(rng));
    let a = sample::solution(rng, pa, &fd);
    let b = sample::solution(rng, pb, &fd);
    (fd, [a, b])
}

fn grid_modes(modes: &[crate::dirac::PlaneWaveMode]) -> Vec<GridMode> {
    modes
        .iter()
        .map(|m| GridMode { pair: to_versatile(&m.amplitude, Lift::First), energy: m.energy, momentum: m.momentum })
        .collect()
}

fn conservation(ctx: &mut Ctx) {
    let tol = ctx.cfg.tol;
    ctx.each("two_mode", STD, |rng| {
        let (fd, modes) = free_pair(rng);
        divergence(&modes, &fd, tol)
    });
    for n in ctx.cfg.n_set.clone() {
        ctx.each(&format!("transformed_n={n}"), STD, |rng| {
            let (fd, modes) = free_pair(rng);
            let spec = TransformSpec::new(sample::rotor(rng), n);
            divergence_transformed(&modes, &fd, &spec, tol * LOOSE)
        });
    }
    ctx.each("moving_frame", STD, |rng| {
        let (fd, modes) = free_pair(rng);
        let spec = TransformSpec::new(sample::rotor(rng), 0);
        divergence_covariant(&modes, &fd, &spec, tol)
    });

    let (seed, h) = (ctx.cfg.seed, ctx.cfg.grid_h);
    let mut rng = trial_rng(seed, "fd", 0);
    let (_, modes) = free_pair(&mut rng);
    let center: [f64; 4] = std::array::from_fn(|_| sample::unit(&mut rng));
    let gm = grid_modes(&modes);
    let mode_ratio = convergence_ratio(h, |h| fd_mode_error(&gm[0], FD_POINTS, h, center));
    ctx.fixed("fd_operator_order2", ORDER2_WINDOW, mode_ratio.map(|r| (r - 4.0).abs()));
    let div_ratio = convergence_ratio(h, |h| fd_divergence_error(&gm, FD_POINTS, h, center));
    ctx.fixed("fd_divergence_order2", ORDER2_WINDOW, div_ratio.map(|r| (r - 4.0).abs()));
}

fn wave_mode<R: Rng>(rng: &mut R) -> WaveMode {
    loop {
        let m = WaveMode { omega: rng.gen_range(-3.0..=3.0), k: sample::momentum(rng), amplitude: sample::euclid_vector(rng) };
        if m.dalembertian().abs() >= 0.1 {
            return m;
        }
    }
}

fn radiation(ctx: &mut Ctx) {
    let tol = ctx.cfg.tol;
    ctx.each("solved_residual", EXACT, |rng| {
        let j = [wave_mode(rng), wave_mode(rng)];
        let a = solve_radiation(&j, tol)?;
        Ok(radiation_residual_max(&j, &a, None))
    });
    ctx.each("dirac_current_source", EXACT, |rng| {
        let (_, modes) = free_pair(rng);
        let j: Vec<WaveMode> = current_modes(&modes).into_iter().filter(|m| m.dalembertian().abs() > 1e-3).collect();
        let a = solve_radiation(&j, tol)?;
        Ok(radiation_residual_max(&j, &a, None))
    });
    ctx.each("lightlike_rejected", STD, |rng| {
        let k = sample::momentum(rng);
        let kn = k.iter().map(|x| x * x).sum::<f64>().sqrt();
        let omega = if rng.gen_bool(0.5) { kn } else { -kn };
        let m = WaveMode { omega, k, amplitude: sample::euclid_vector(rng) };
        Ok(match solve_radiation(&[m], tol) {
            Err(Error::LightlikeMode { .. }) => 0.0,
            _ => f64::INFINITY,
        })
    });
    ctx.each("transformed_residual", STD, |rng| {
        let j = [wave_mode(rng), wave_mode(rng)];
        let a = solve_radiation(&j, tol)?;
        let spec = TransformSpec::new(sample::rotor(rng), 1);
        Ok(radiation_residual_max(&j, &a, Some(&spec)))
    });
    ctx.each("dalembertian_symbol", EXACT, |rng| {
        let m = wave_mode(rng);
        let p = m.symbol();
        let pp = p * p.qconj();
        Ok((pp - p.qconj() * p).max_abs().max((pp - Quat::scalar(cx(m.dalembertian(), 0.0))).max_abs()))
    });
}
