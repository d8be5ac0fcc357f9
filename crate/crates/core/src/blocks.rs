//! Reflector and rotator matrices: 2×2 matrices of quaternions with
//! anti-diagonal and diagonal shape respectively.
//!
//! ```text
//! Reflector(Q, U) = | 0  Q |      Rotator(Q, U) = | Q  0 |
//!                   | U  0 |                      | 0  U |
//! ```
//!
//! Shapes compose by parity: an even number of reflectors multiplies to a
//! rotator, an odd number to a reflector.

use std::ops::{Add, Mul, Neg, Sub};

use crate::quat::{Conjugation, Cx, Quat};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reflector {
    pub upper: Quat,
    pub lower: Quat,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotator {
    pub upper: Quat,
    pub lower: Quat,
}

/// Either shape; used where a transformation can change the shape of a
/// block (the spinor under parity or time reversal).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Block {
    Reflector(Reflector),
    Rotator(Rotator),
}

/// Dense 4×4 complex embedding, each quaternion replaced by its 2×2 matrix.
pub type Dense4 = [[Cx; 4]; 4];

fn embed(upper_left: Option<Quat>, upper_right: Option<Quat>, lower_left: Option<Quat>, lower_right: Option<Quat>) -> Dense4 {
    let mut out = [[Cx::new(0.0, 0.0); 4]; 4];
    let slots = [(0, 0, upper_left), (0, 2, upper_right), (2, 0, lower_left), (2, 2, lower_right)];
    for (r0, c0, q) in slots {
        if let Some(q) = q {
            let m = q.to_matrix().0;
            for r in 0..2 {
                for c in 0..2 {
                    out[r0 + r][c0 + c] = m[r][c];
                }
            }
        }
    }
    out
}

impl Reflector {
    pub const ZERO: Reflector = Reflector { upper: Quat::ZERO, lower: Quat::ZERO };

    pub fn new(upper: Quat, lower: Quat) -> Self {
        Reflector { upper, lower }
    }

    /// `Reflector(Q, Q‡)`, the form taken by four-vector quantities.
    pub fn of_vector(q: Quat) -> Self {
        Reflector::new(q, q.qconj())
    }

    /// Reflector with scalar entries.
    pub fn scalars(a: f64, b: f64) -> Self {
        Reflector::new(Quat::real(a, 0.0, 0.0, 0.0), Quat::real(b, 0.0, 0.0, 0.0))
    }

    pub fn conj(&self, kind: Conjugation) -> Self {
        Reflector::new(self.upper.conjugate(kind), self.lower.conjugate(kind))
    }

    pub fn qconj(&self) -> Self {
        self.conj(Conjugation::Quaternion)
    }

    pub fn cconj(&self) -> Self {
        self.conj(Conjugation::Complex)
    }

    /// Block trace; zero for every reflector.
    pub fn trace(&self) -> Quat {
        Quat::ZERO
    }

    /// `t:` applied entrywise.
    pub fn temporal(&self) -> Self {
        Reflector::new(Quat::scalar(self.upper.temporal()), Quat::scalar(self.lower.temporal()))
    }

    /// `r · self · r‡`
    pub fn similarity(&self, r: &Rotator) -> Self {
        *r * *self * r.qconj()
    }

    pub fn scale(&self, s: Cx) -> Self {
        Reflector::new(self.upper * s, self.lower * s)
    }

    pub fn norm(&self) -> f64 {
        (self.upper.norm().powi(2) + self.lower.norm().powi(2)).sqrt()
    }

    pub fn to_dense(&self) -> Dense4 {
        embed(None, Some(self.upper), Some(self.lower), None)
    }
}

impl Rotator {
    pub const IDENTITY: Rotator = Rotator { upper: Quat::ONE, lower: Quat::ONE };
    pub const ZERO: Rotator = Rotator { upper: Quat::ZERO, lower: Quat::ZERO };

    pub fn new(upper: Quat, lower: Quat) -> Self {
        Rotator { upper, lower }
    }

    pub fn scalars(a: f64, b: f64) -> Self {
        Rotator::new(Quat::real(a, 0.0, 0.0, 0.0), Quat::real(b, 0.0, 0.0, 0.0))
    }

    pub fn conj(&self, kind: Conjugation) -> Self {
        Rotator::new(self.upper.conjugate(kind), self.lower.conjugate(kind))
    }

    pub fn qconj(&self) -> Self {
        self.conj(Conjugation::Quaternion)
    }

    /// Block trace: the sum of the diagonal quaternions.
    pub fn trace(&self) -> Quat {
        self.upper + self.lower
    }

    pub fn temporal(&self) -> Self {
        Rotator::new(Quat::scalar(self.upper.temporal()), Quat::scalar(self.lower.temporal()))
    }

    pub fn similarity(&self, r: &Rotator) -> Self {
        *r * *self * r.qconj()
    }

    /// Blockwise inverse; fails if either block is null.
    pub fn inverse(&self) -> crate::Result<Self> {
        Ok(Rotator::new(self.upper.inverse()?, self.lower.inverse()?))
    }

    /// Integer power, negative exponents through [`Rotator::inverse`].
    pub fn powi(&self, n: i32) -> crate::Result<Self> {
        Ok(Rotator::new(self.upper.powi(n)?, self.lower.powi(n)?))
    }

    pub fn scale(&self, s: Cx) -> Self {
        Rotator::new(self.upper * s, self.lower * s)
    }

    pub fn norm(&self) -> f64 {
        (self.upper.norm().powi(2) + self.lower.norm().powi(2)).sqrt()
    }

    pub fn to_dense(&self) -> Dense4 {
        embed(Some(self.upper), None, None, Some(self.lower))
    }
}

impl Block {
    pub fn conj(&self, kind: Conjugation) -> Self {
        match self {
            Block::Reflector(x) => Block::Reflector(x.conj(kind)),
            Block::Rotator(x) => Block::Rotator(x.conj(kind)),
        }
    }

    pub fn qconj(&self) -> Self {
        self.conj(Conjugation::Quaternion)
    }

    pub fn trace(&self) -> Quat {
        match self {
            Block::Reflector(x) => x.trace(),
            Block::Rotator(x) => x.trace(),
        }
    }

    pub fn temporal(&self) -> Self {
        match self {
            Block::Reflector(x) => Block::Reflector(x.temporal()),
            Block::Rotator(x) => Block::Rotator(x.temporal()),
        }
    }

    pub fn similarity(&self, r: &Rotator) -> Self {
        match self {
            Block::Reflector(x) => Block::Reflector(x.similarity(r)),
            Block::Rotator(x) => Block::Rotator(x.similarity(r)),
        }
    }

    /// `(upper, lower)` quaternions regardless of shape.
    pub fn entries(&self) -> (Quat, Quat) {
        match self {
            Block::Reflector(x) => (x.upper, x.lower),
            Block::Rotator(x) => (x.upper, x.lower),
        }
    }

    pub fn is_reflector(&self) -> bool {
        matches!(self, Block::Reflector(_))
    }

    pub fn norm(&self) -> f64 {
        match self {
            Block::Reflector(x) => x.norm(),
            Block::Rotator(x) => x.norm(),
        }
    }

    pub fn to_dense(&self) -> Dense4 {
        match self {
            Block::Reflector(x) => x.to_dense(),
            Block::Rotator(x) => x.to_dense(),
        }
    }

    /// Difference of two blocks of the same shape; `None` when the shapes differ.
    pub fn checked_sub(&self, other: &Block) -> Option<Block> {
        match (self, other) {
            (Block::Reflector(a), Block::Reflector(b)) => Some(Block::Reflector(*a - *b)),
            (Block::Rotator(a), Block::Rotator(b)) => Some(Block::Rotator(*a - *b)),
            _ => None,
        }
    }
}

impl From<Reflector> for Block {
    fn from(x: Reflector) -> Self {
        Block::Reflector(x)
    }
}

impl From<Rotator> for Block {
    fn from(x: Rotator) -> Self {
        Block::Rotator(x)
    }
}

// |0 a||0 c|   |a d  0 |
// |b 0||d 0| = |0   b c|
impl Mul<Reflector> for Reflector {
    type Output = Rotator;
    fn mul(self, o: Reflector) -> Rotator {
        Rotator::new(self.upper * o.lower, self.lower * o.upper)
    }
}

impl Mul<Reflector> for Rotator {
    type Output = Reflector;
    fn mul(self, o: Reflector) -> Reflector {
        Reflector::new(self.upper * o.upper, self.lower * o.lower)
    }
}

impl Mul<Rotator> for Reflector {
    type Output = Reflector;
    fn mul(self, o: Rotator) -> Reflector {
        Reflector::new(self.upper * o.lower, self.lower * o.upper)
    }
}

impl Mul<Rotator> for Rotator {
    type Output = Rotator;
    fn mul(self, o: Rotator) -> Rotator {
        Rotator::new(self.upper * o.upper, self.lower * o.lower)
    }
}

impl Mul for Block {
    type Output = Block;
    fn mul(self, o: Block) -> Block {
        match (self, o) {
            (Block::Reflector(a), Block::Reflector(b)) => (a * b).into(),
            (Block::Reflector(a), Block::Rotator(b)) => (a * b).into(),
            (Block::Rotator(a), Block::Reflector(b)) => (a * b).into(),
            (Block::Rotator(a), Block::Rotator(b)) => (a * b).into(),
        }
    }
}

impl Mul<Block> for Rotator {
    type Output = Block;
    fn mul(self, o: Block) -> Block {
        Block::Rotator(self) * o
    }
}

impl Mul<Block> for Reflector {
    type Output = Block;
    fn mul(self, o: Block) -> Block {
        Block::Reflector(self) * o
    }
}

impl Mul<Rotator> for Block {
    type Output = Block;
    fn mul(self, o: Rotator) -> Block {
        self * Block::Rotator(o)
    }
}

impl Mul<Reflector> for Block {
    type Output = Block;
    fn mul(self, o: Reflector) -> Block {
        self * Block::Reflector(o)
    }
}

macro_rules! linear_ops {
    ($t:ident) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                $t::new(self.upper + o.upper, self.lower + o.lower)
            }
        }

        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                $t::new(self.upper - o.upper, self.lower - o.lower)
            }
        }

        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $t::new(-self.upper, -self.lower)
            }
        }
    };
}

linear_ops!(Reflector);
linear_ops!(Rotator);

/// Dense 4×4 product, used to cross-check the block tables.
pub fn dense_mul(a: &Dense4, b: &Dense4) -> Dense4 {
    std::array::from_fn(|r| std::array::from_fn(|c| (0..4).map(|k| a[r][k] * b[k][c]).sum()))
}

pub fn dense_max_abs_diff(a: &Dense4, b: &Dense4) -> f64 {
    let mut worst = 0.0f64;
    for r in 0..4 {
        for c in 0..4 {
            worst = worst.max((a[r][c] - b[r][c]).norm());
        }
    }
    worst
}

pub fn dense_trace(a: &Dense4) -> Cx {
    (0..4).map(|k| a[k][k]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::cx;

    fn q(a: f64, b: f64, c: f64, d: f64) -> Quat {
        Quat::new(cx(a, d), cx(b, -a), cx(c, 0.5), cx(d, b))
    }

    #[test]
    fn reflector_pair_gives_swapped_rotator() {
        let (x, u) = (q(0.1, 0.2, 0.3, 0.4), q(-1.0, 0.5, 0.0, 2.0));
        let r = Reflector::scalars(1.0, 1.0) * Reflector::new(x, u);
        assert_eq!(r, Rotator::new(u, x));
    }

    #[test]
    fn identity_rotator() {
        let refl = Reflector::new(q(0.1, 0.2, 0.3, 0.4), q(0.5, 0.6, 0.7, 0.8));
        assert_eq!(Rotator::IDENTITY * refl, refl);
        let rot = Rotator::new(q(0.1, 0.2, 0.3, 0.4), q(0.5, 0.6, 0.7, 0.8));
        assert_eq!(Rotator::IDENTITY * rot, rot);
        assert_eq!(refl.similarity(&Rotator::IDENTITY), refl);
    }

    #[test]
    fn conj_entrywise() {
        let r = Reflector::new(Quat::I1, Quat::ONE).qconj();
        assert_eq!(r, Reflector::new(-Quat::I1, Quat::ONE));
        let rr = q(0.3, 0.1, 0.2, 0.4);
        let rot = Rotator::new(rr, rr.qconj()).qconj();
        assert_eq!(rot, Rotator::new(rr.qconj(), rr));
    }

    #[test]
    fn traces() {
        let (a, b) = (q(0.3, 0.1, 0.2, 0.4), q(-0.3, 1.0, 0.0, 0.0));
        assert_eq!(Rotator::new(a, b).trace(), a + b);
        assert_eq!(Reflector::new(a, b).trace(), Quat::ZERO);
        let rot = Rotator::new(a, b);
        let dense = dense_trace(&rot.to_dense());
        assert!((dense - rot.trace().temporal() * 2.0).norm() < 1e-14);
    }

    #[test]
    fn temporal_part() {
        let rot = Rotator::new(Quat::real(2.0, 1.0, 0.0, 0.0), Quat::real(0.0, 0.0, 3.0, 0.0));
        assert_eq!(rot.temporal(), Rotator::scalars(2.0, 0.0));
    }

    #[test]
    fn block_products_match_dense() {
        let a = Reflector::new(q(0.3, 0.1, 0.2, 0.4), q(-0.3, 1.0, 0.0, 0.7));
        let b = Rotator::new(q(1.3, -0.1, 0.2, 0.0), q(0.0, 0.2, -0.5, 0.7));
        let checks = [
            (Block::from(a * a).to_dense(), dense_mul(&a.to_dense(), &a.to_dense())),
            (Block::from(a * b).to_dense(), dense_mul(&a.to_dense(), &b.to_dense())),
            (Block::from(b * a).to_dense(), dense_mul(&b.to_dense(), &a.to_dense())),
            (Block::from(b * b).to_dense(), dense_mul(&b.to_dense(), &b.to_dense())),
        ];
        for (lhs, rhs) in checks {
            assert!(dense_max_abs_diff(&lhs, &rhs) < 1e-14);
        }
    }
}
