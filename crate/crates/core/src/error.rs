use thiserror::Error;

/// Errors raised by the algebra, the spacetime transforms and the field tools.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `M M⁻` vanishes (or nearly so), e.g. the null element `1 + e₁`.
    #[error("element is not invertible: |M M⁻| = {modulus:e}")]
    NotInvertible { modulus: f64 },

    #[error("speed {v} is not below the speed of light {c}")]
    SpeedNotSubluminal { v: f64, c: f64 },

    #[error("direction is not a unit vector (norm {norm})")]
    NonUnitDirection { norm: f64 },

    #[error("speed of light must be positive and finite, got {0}")]
    InvalidLightSpeed(f64),

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    /// The multivector has scalar or pseudoscalar content, so it is not a field `E + iB`.
    #[error("not a pure complex vector: scalar part has modulus {scalar:e}")]
    NotAField { scalar: f64 },

    #[error("field sampler returned a non-finite value at t={t}, x=({x}, {y}, {z})")]
    EvaluationFailure { t: f64, x: f64, y: f64, z: f64 },

    #[error("step must be positive and finite, got {0}")]
    InvalidStep(f64),

    #[error("worldline sample is not subluminal: |v| = {speed} >= c = {c}")]
    SuperluminalSample { speed: f64, c: f64 },

    #[error("unknown field kind `{0}`")]
    UnknownKind(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
