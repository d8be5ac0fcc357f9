//! Maps and lifts between ℂ² columns and complexified quaternions.
//!
//! `F` and `N` read off the first and second matrix columns of a quaternion.
//! `G` and `L` are their ℝ-linear right inverses, sending the columns of the
//! basis matrices back to the basis quaternions; they always produce
//! quaternions with real coefficients.

use crate::quat::{cx, Cx, Quat, I, ONE, ZERO};

/// A ℂ² column.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bispinor2(pub [Cx; 2]);

impl Bispinor2 {
    pub const ZERO: Bispinor2 = Bispinor2([ZERO; 2]);

    pub fn new(a: Cx, b: Cx) -> Self {
        Bispinor2([a, b])
    }

    pub fn scale(&self, s: Cx) -> Bispinor2 {
        Bispinor2(self.0.map(|z| z * s))
    }

    pub fn add(&self, o: &Bispinor2) -> Bispinor2 {
        Bispinor2([self.0[0] + o.0[0], self.0[1] + o.0[1]])
    }

    pub fn sub(&self, o: &Bispinor2) -> Bispinor2 {
        Bispinor2([self.0[0] - o.0[0], self.0[1] - o.0[1]])
    }

    /// `self† · other`
    pub fn inner(&self, o: &Bispinor2) -> Cx {
        self.0[0].conj() * o.0[0] + self.0[1].conj() * o.0[1]
    }

    pub fn max_abs_diff(&self, o: &Bispinor2) -> f64 {
        (self.0[0] - o.0[0]).norm().max((self.0[1] - o.0[1]).norm())
    }
}

/// Which matrix column carries the spinor: `G`/`F` (first) or `L`/`N` (second).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Lift {
    #[default]
    First,
    Second,
}

impl Lift {
    pub fn lift(self, v: &Bispinor2) -> Quat {
        match self {
            Lift::First => lift_g(v),
            Lift::Second => lift_l(v),
        }
    }

    pub fn map(self, q: &Quat) -> Bispinor2 {
        match self {
            Lift::First => map_f(q),
            Lift::Second => map_n(q),
        }
    }

    /// Idempotent generator `1 ± i·i3` whose left ideal the lift targets.
    /// Right multiplication by it keeps only the selected column.
    pub fn generator(self) -> Quat {
        match self {
            Lift::First => Quat::new(ONE, ZERO, ZERO, I),
            Lift::Second => Quat::new(ONE, ZERO, ZERO, -I),
        }
    }
}

/// `F(Q) = Q (1, 0)ᵀ`.
pub fn map_f(q: &Quat) -> Bispinor2 {
    Bispinor2(q.to_matrix().column(0))
}

/// `N(Q) = Q (0, 1)ᵀ`.
pub fn map_n(q: &Quat) -> Bispinor2 {
    Bispinor2(q.to_matrix().column(1))
}

/// ℝ-linear lift with `i_μ (1,0)ᵀ ↦ i_μ`.
///
/// The basis columns are `(1,0)`, `(0,−i)`, `(0,1)`, `(−i,0)`, so
/// `(a, b) = x0 (1,0) + x1 (0,−i) + x2 (0,1) + x3 (−i,0)` gives
/// `x0 = Re a`, `x3 = −Im a`, `x2 = Re b`, `x1 = −Im b`.
pub fn lift_g(v: &Bispinor2) -> Quat {
    let [a, b] = v.0;
    Quat::real(a.re, -b.im, b.re, -a.im)
}

/// ℝ-linear lift with `i_μ (0,1)ᵀ ↦ i_μ`.
///
/// Basis columns `(0,1)`, `(−i,0)`, `(−1,0)`, `(0,i)`.
pub fn lift_l(v: &Bispinor2) -> Quat {
    let [a, b] = v.0;
    Quat::real(b.re, -a.im, -a.re, b.im)
}

/// ℂ⁴ column.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec4C(pub [Cx; 4]);

/// `(v0, v1, v2, v3) ↦ v0 + i1 v1 + i2 v2 + i3 v3`.
pub fn bijection_h(v: &Vec4C) -> Quat {
    Quat(v.0)
}

pub fn bijection_h_inv(q: &Quat) -> Vec4C {
    Vec4C(q.0)
}

/// The idempotent generator `1 + i·i3`.
pub fn idempotent() -> Quat {
    Lift::First.generator()
}

/// `q (1 + i·i3)`: projection into the left ideal (up to the factor 2).
pub fn idempotent_project(q: &Quat) -> Quat {
    *q * idempotent()
}

/// Distance of `q` from the left ideal generated by `(1 + i·i3)/2`,
/// i.e. `|q (1 + i·i3) − 2q|`.
pub fn ideal_defect(q: &Quat, lift: Lift) -> f64 {
    (*q * lift.generator() - *q * cx(2.0, 0.0)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_examples() {
        assert_eq!(map_f(&Quat::ONE), Bispinor2::new(ONE, ZERO));
        assert_eq!(map_f(&Quat::I1), Bispinor2::new(ZERO, -I));
        assert_eq!(map_n(&Quat::ONE), Bispinor2::new(ZERO, ONE));
        assert_eq!(map_n(&Quat::I3), Bispinor2::new(ZERO, I));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_g(&Bispinor2::new(ONE, ZERO)), Quat::ONE);
        assert_eq!(lift_g(&Bispinor2::new(ZERO, ONE)), Quat::I2);
        assert_eq!(lift_g(&Bispinor2::new(I, ZERO)), -Quat::I3);
        for mu in 0..4 {
            let e = Quat::basis(mu);
            assert_eq!(lift_g(&map_f(&e)), e);
            assert_eq!(lift_l(&map_n(&e)), e);
        }
    }

    #[test]
    fn bijection() {
        assert_eq!(bijection_h(&Vec4C([ONE, ZERO, ZERO, ZERO])), Quat::ONE);
        let v = Vec4C([I, cx(2.0, 0.0), ZERO, ZERO]);
        assert_eq!(bijection_h(&v), Quat::new(I, cx(2.0, 0.0), ZERO, ZERO));
        assert_eq!(bijection_h_inv(&bijection_h(&v)), v);
    }

    #[test]
    fn idempotent_squares_to_itself() {
        let half = idempotent() * 0.5;
        assert!((half * half).approx_eq(&half, 1e-15));
        assert_eq!(idempotent_project(&Quat::ONE), idempotent());
        let half2 = Lift::Second.generator() * 0.5;
        assert!((half2 * half2).approx_eq(&half2, 1e-15));
    }

    #[test]
    fn generator_kills_the_other_column() {
        let q = Quat::new(cx(0.2, 1.0), cx(-0.7, 0.1), cx(0.5, 0.5), cx(1.0, -2.0));
        let p = q * Lift::First.generator();
        assert_eq!(map_n(&p), Bispinor2::ZERO);
        let p = q * Lift::Second.generator();
        assert!(map_f(&p).max_abs_diff(&Bispinor2::ZERO) < 1e-15);
    }
}
