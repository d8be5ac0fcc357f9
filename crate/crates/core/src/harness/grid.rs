//! Finite-difference oracle on uniform 4-D grids.
//!
//! Coordinates are `(x0, x1, x2, x3)` with `x0` the time `t`. The operator
//! `D` acts as `i ∂0 + Σ_r i_r ∂_r` (left multiplication by `i_r`), evaluated
//! with second-order central differences.

use crate::current::current_versatile;
use crate::dirac::{momentum_symbol, VersatilePair};
use crate::error::{Error, Result};
use crate::quat::{cx, Quat, I};

/// Points per axis needed for a nonempty interior that is not just one layer.
pub const MIN_POINTS: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct Grid4 {
    pub h: f64,
    /// Points per axis.
    pub n: usize,
    /// Coordinates of the middle point.
    pub center: [f64; 4],
    /// Row-major over `(x0, x1, x2, x3)`.
    pub values: Vec<Quat>,
}

impl Grid4 {
    pub fn sample<F: Fn([f64; 4]) -> Quat>(n: usize, h: f64, center: [f64; 4], f: F) -> Result<Self> {
        if n < MIN_POINTS {
            return Err(Error::GridTooSmall { min: MIN_POINTS, got: n });
        }
        let mut g = Grid4 { h, n, center, values: Vec::with_capacity(n.pow(4)) };
        for idx in 0..n.pow(4) {
            let x = g.coords(g.unflatten(idx));
            g.values.push(f(x));
        }
        Ok(g)
    }

    fn unflatten(&self, mut idx: usize) -> [usize; 4] {
        let mut out = [0; 4];
        for a in (0..4).rev() {
            out[a] = idx % self.n;
            idx /= self.n;
        }
        out
    }

    fn flatten(&self, i: [usize; 4]) -> usize {
        i.iter().fold(0, |acc, &k| acc * self.n + k)
    }

    pub fn coords(&self, i: [usize; 4]) -> [f64; 4] {
        let mid = (self.n - 1) as f64 / 2.0;
        std::array::from_fn(|a| self.center[a] + (i[a] as f64 - mid) * self.h)
    }

    pub fn at(&self, i: [usize; 4]) -> Quat {
        self.values[self.flatten(i)]
    }

    /// Value at the middle point (`n` odd) or the point just below it.
    pub fn center_value(&self) -> Quat {
        let m = (self.n - 1) / 2;
        self.at([m; 4])
    }

    /// Applies `f` to every interior point, giving a grid one point smaller on
    /// each side.
    fn interior<F: Fn(&Grid4, [usize; 4]) -> Quat>(&self, f: F) -> Result<Grid4> {
        if self.n < MIN_POINTS {
            return Err(Error::GridTooSmall { min: MIN_POINTS, got: self.n });
        }
        let m = self.n - 2;
        let mut values = Vec::with_capacity(m.pow(4));
        for a in 1..=m {
            for b in 1..=m {
                for c in 1..=m {
                    for d in 1..=m {
                        values.push(f(self, [a, b, c, d]));
                    }
                }
            }
        }
        Ok(Grid4 { h: self.h, n: m, center: self.center, values })
    }

    fn partial_at(&self, i: [usize; 4], axis: usize) -> Quat {
        let (mut lo, mut hi) = (i, i);
        lo[axis] -= 1;
        hi[axis] += 1;
        (self.at(hi) - self.at(lo)) * (0.5 / self.h)
    }

    /// Central difference along one axis.
    pub fn partial(&self, axis: usize) -> Result<Grid4> {
        self.interior(|g, i| g.partial_at(i, axis))
    }
}

/// `D q ≈ i ∂0 q + Σ_r i_r ∂_r q`.
pub fn fd_apply_d(grid: &Grid4) -> Result<Grid4> {
    grid.interior(|g, i| {
        let mut acc = g.partial_at(i, 0) * I;
        for r in 1..4 {
            acc += Quat::basis(r) * g.partial_at(i, r);
        }
        acc
    })
}

/// `i ∂0 J0 + Σ_r ∂_r J_r` for four scalar component grids.
pub fn fd_divergence(j: &[Grid4; 4]) -> Result<Grid4> {
    let n = j[0].n;
    if j.iter().any(|g| g.n != n) {
        return Err(Error::InvalidConfig("component grids differ in size".into()));
    }
    let parts: Vec<Grid4> = (0..4).map(|mu| j[mu].partial(mu)).collect::<Result<_>>()?;
    let mut out = parts[0].clone();
    for (k, v) in out.values.iter_mut().enumerate() {
        *v = *v * I + parts[1].values[k] + parts[2].values[k] + parts[3].values[k];
    }
    Ok(out)
}

/// A plane-wave solution for sampling: pair, energy, momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMode {
    pub pair: VersatilePair,
    pub energy: f64,
    pub momentum: [f64; 3],
}

impl GridMode {
    fn phase(&self, x: [f64; 4]) -> crate::quat::Cx {
        let th = self.momentum[0] * x[1] + self.momentum[1] * x[2] + self.momentum[2] * x[3] - self.energy * x[0];
        cx(0.0, th).exp()
    }
}

/// `|FD(D φ1)(center) − P φ1(center)|` for one mode on an `n⁴` grid.
pub fn fd_mode_error(mode: &GridMode, n: usize, h: f64, center: [f64; 4]) -> Result<f64> {
    let g = Grid4::sample(n, h, center, |x| mode.pair.phi1 * mode.phase(x))?;
    let d = fd_apply_d(&g)?;
    let exact = momentum_symbol(mode.energy, mode.momentum) * mode.pair.phi1 * mode.phase(center);
    Ok((d.center_value() - exact).norm())
}

/// `|FD divergence of J(center)|` for a superposition, whose exact value is 0.
pub fn fd_divergence_error(modes: &[GridMode], n: usize, h: f64, center: [f64; 4]) -> Result<f64> {
    let pair_at = |x: [f64; 4]| {
        modes.iter().fold(VersatilePair::ZERO, |acc, m| {
            let ph = m.phase(x);
            VersatilePair { phi1: acc.phi1 + m.pair.phi1 * ph, phi2: acc.phi2 + m.pair.phi2 * ph }
        })
    };
    let j = Grid4::sample(n, h, center, |x| Quat(current_versatile(&pair_at(x))))?;
    let comp = |mu: usize| Grid4 { values: j.values.iter().map(|q| Quat::scalar(q.0[mu])).collect(), ..j.clone() };
    let div = fd_divergence(&[comp(0), comp(1), comp(2), comp(3)])?;
    Ok(div.center_value().norm())
}

/// `e(h) / e(h/2)`; close to 4 for a second-order scheme.
pub fn convergence_ratio<F: Fn(f64) -> Result<f64>>(h: f64, err: F) -> Result<f64> {
    Ok(err(h)? / err(h / 2.0)?)
}
