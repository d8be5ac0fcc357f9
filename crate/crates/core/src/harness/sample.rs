//! Random instances for the property suites.

use rand::Rng;

use crate::dirac::{solve_plane_waves, FieldData, PlaneWaveMode, SpinorColumn};
use crate::geometry::{rotor_boost, rotor_spatial, Rotor};
use crate::maps::Bispinor2;
use crate::quat::{cx, Cx, Quat};

pub fn unit<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(-1.0..=1.0)
}

pub fn complex<R: Rng>(rng: &mut R) -> Cx {
    cx(unit(rng), unit(rng))
}

/// Complex components, real and imaginary parts uniform in [−1, 1].
pub fn quat<R: Rng>(rng: &mut R) -> Quat {
    Quat([complex(rng), complex(rng), complex(rng), complex(rng)])
}

pub fn real_quat<R: Rng>(rng: &mut R) -> Quat {
    Quat::real(unit(rng), unit(rng), unit(rng), unit(rng))
}

/// Imaginary temporal and real spatial components.
pub fn euclid_vector<R: Rng>(rng: &mut R) -> Quat {
    Quat::new(cx(0.0, unit(rng)), cx(unit(rng), 0.0), cx(unit(rng), 0.0), cx(unit(rng), 0.0))
}

pub fn bispinor<R: Rng>(rng: &mut R) -> Bispinor2 {
    Bispinor2([complex(rng), complex(rng)])
}

pub fn spinor<R: Rng>(rng: &mut R) -> SpinorColumn {
    SpinorColumn([complex(rng), complex(rng), complex(rng), complex(rng)])
}

fn ball<R: Rng>(rng: &mut R, radius: f64) -> [f64; 3] {
    loop {
        let v = [unit(rng), unit(rng), unit(rng)];
        if v.iter().map(|x| x * x).sum::<f64>() <= 1.0 {
            return v.map(|x| x * radius);
        }
    }
}

/// Uniform in the ball `|p| ≤ 2`.
pub fn momentum<R: Rng>(rng: &mut R) -> [f64; 3] {
    ball(rng, 2.0)
}

/// Uniform on the unit sphere.
pub fn axis<R: Rng>(rng: &mut R) -> [f64; 3] {
    loop {
        let v = ball(rng, 1.0);
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 {
            return v.map(|x| x / n);
        }
    }
}

pub fn mass<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(0.1..=2.0)
}

pub fn rapidity<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(-2.0..=2.0)
}

/// Uniform in the open interval (0, π).
pub fn angle<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let a = rng.gen_range(0.0..std::f64::consts::PI);
        if a > 0.0 {
            return a;
        }
    }
}

pub fn spatial_rotor<R: Rng>(rng: &mut R) -> Rotor {
    rotor_spatial(axis(rng), angle(rng)).expect("unit axis")
}

pub fn boost_rotor<R: Rng>(rng: &mut R) -> Rotor {
    rotor_boost(axis(rng), rapidity(rng)).expect("unit axis")
}

/// A rotation or a boost with equal probability.
pub fn rotor<R: Rng>(rng: &mut R) -> Rotor {
    if rng.gen_bool(0.5) {
        spatial_rotor(rng)
    } else {
        boost_rotor(rng)
    }
}

pub fn field<R: Rng>(rng: &mut R) -> FieldData {
    FieldData { mass: mass(rng), potential: [unit(rng), unit(rng), unit(rng), unit(rng)] }
}

/// A normalized solution drawn from one of the two energy eigenspaces at
/// momentum `p`, as a random combination of its basis vectors.
pub fn solution<R: Rng>(rng: &mut R, p: [f64; 3], fd: &FieldData) -> PlaneWaveMode {
    let modes = solve_plane_waves(p, fd);
    let base = if rng.gen_bool(0.5) { 0 } else { 2 };
    let (c0, c1) = (complex(rng), complex(rng));
    let (a, b) = (modes[base].amplitude, modes[base + 1].amplitude);
    let mut amp = SpinorColumn(std::array::from_fn(|k| a.0[k] * c0 + b.0[k] * c1));
    let n = amp.norm();
    if n > 1e-6 {
        amp = amp.scale(cx(1.0 / n, 0.0));
    } else {
        amp = a;
    }
    let energy = 0.5 * (modes[base].energy + modes[base + 1].energy);
    PlaneWaveMode { amplitude: amp, energy, momentum: p }
}
