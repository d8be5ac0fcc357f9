//! Complexified-quaternion form of the Dirac and radiation equations.
//!
//! The crate is organised bottom-up:
//!
//! * [`quat`]: the algebra `H^ℂ` with its three conjugations and 2×2 matrix view,
//! * [`maps`]: the maps `F`, `N` and lifts `G`, `L` between ℂ² and `H^ℂ`,
//! * [`blocks`]: reflector and rotator block matrices,
//! * [`geometry`]: rotation/boost rotors, plane-angle patterns, discrete symmetries,
//! * [`dirac`]: plane-wave Dirac solutions and the versatile reflector equation,
//! * [`current`]: Dirac current, conservation, covariance and the radiation equation,
//! * [`harness`]: seeded property suites, the finite-difference oracle and reports.

pub mod blocks;
pub mod current;
pub mod dirac;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod maps;
pub mod quat;

pub use error::{Error, Result};
pub use quat::{Conjugation, Cx, Quat};
