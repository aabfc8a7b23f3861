use thiserror::Error;

/// Everything that can go wrong while building frames, spinors and amplitudes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("expected a unit vector, got norm {norm}")]
    NonUnitVector { norm: f64 },

    #[error("inelastic input: |p_i| = {p_in}, |p_f| = {p_out}")]
    InelasticInput { p_in: f64, p_out: f64 },

    #[error("degenerate geometry: scattering angle {theta} rad leaves a frame axis undefined")]
    DegenerateGeometry { theta: f64 },

    #[error("incident direction and scattering-plane normal are not perpendicular")]
    NotPerpendicular,

    #[error("zero momentum where a direction is required")]
    ZeroMomentum,

    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),

    #[error("mass must be non-negative and finite, got {0}")]
    InvalidMass(f64),

    #[error("momentum transfer is zero")]
    ZeroMomentumTransfer,

    #[error("Aharonov-Bohm potential needs q in the x-y plane, got q_z = {q_z}")]
    OutOfPlane { q_z: f64 },

    #[error("vector potential vanishes at this momentum transfer")]
    NullPotentialAtQ,

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
