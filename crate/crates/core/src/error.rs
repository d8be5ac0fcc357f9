use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The complex modulus `Q‡Q` vanished, so the quaternion has no inverse.
    /// This happens for nonzero null elements, e.g. the idempotent direction
    /// `1 + i·i3` or any vector on the light cone.
    #[error("quaternion is singular: modulus {modulus} is zero")]
    SingularQuaternion { modulus: String },

    #[error("projection onto the {plane} plane is degenerate (norm {norm:e})")]
    DegenerateProjection { plane: &'static str, norm: f64 },

    #[error("versatile pair is outside the left ideal (residual {residual:e})")]
    IdealViolation { residual: f64 },

    #[error("mode {index} is not a solution (residual {residual:e})")]
    NotASolution { index: usize, residual: f64 },

    #[error("mode {index} is lightlike: omega^2 - |k|^2 = {symbol:e}")]
    LightlikeMode { index: usize, symbol: f64 },

    #[error("grid needs at least {min} points per axis, got {got}")]
    GridTooSmall { min: usize, got: usize },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
