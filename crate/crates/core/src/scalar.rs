//! Scalar abstraction shared by every module.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar the library is generic over: `f32` or `f64`.
///
/// Besides the arithmetic, each type carries the numerical thresholds that
/// only make sense at its own precision (unit-norm checks, the elastic
/// tolerance and the forward/backward cutoff).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Allowed deviation of a direction from unit norm.
    fn unit_tolerance() -> Self;

    /// Relative tolerance on `|p_f| - |p_i|` for elastic input.
    fn elastic_tolerance() -> Self;

    /// Smallest scattering angle (and distance from pi) for which the frame
    /// axes are defined.
    fn theta_min() -> Self;

    /// Below this magnitude a Fourier amplitude counts as zero.
    fn null_threshold() -> Self;

    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }
}

impl Real for f64 {
    fn unit_tolerance() -> Self {
        1e-12
    }
    fn elastic_tolerance() -> Self {
        1e-9
    }
    fn theta_min() -> Self {
        1e-6
    }
    fn null_threshold() -> Self {
        1e-300
    }
}

impl Real for f32 {
    fn unit_tolerance() -> Self {
        1e-5
    }
    fn elastic_tolerance() -> Self {
        1e-5
    }
    fn theta_min() -> Self {
        1e-3
    }
    fn null_threshold() -> Self {
        f32::MIN_POSITIVE
    }
}
