//! First-order spin amplitudes of a Dirac particle scattered by a static
//! magnetic field, expressed in the intrinsic frame built from the total
//! momentum `k = p_f + p_i`, the momentum transfer `q = p_f - p_i` and
//! `l = k × q`.
//!
//! Everything is generic over the scalar type through [`Real`] (`f64` and
//! `f32`); the `*64` aliases below are what most callers want.
//!
//! ```
//! use helicity_core::{planar_momenta, oracle_element, reduced_element,
//!     Frame64, Helicity, Potential64, Vec3};
//!
//! let (p_i, p_f) = planar_momenta(1.0, 1.0, Vec3::unit_x(), -Vec3::unit_z()).unwrap();
//! let frame = Frame64::from_momenta(p_i, p_f, 1.0).unwrap();
//! let ab = Potential64::aharonov_bohm(1.0);
//! let brute = oracle_element(&frame, &ab, Helicity::Plus, Helicity::Plus).unwrap();
//! let closed = reduced_element(&frame, &ab, Helicity::Plus).unwrap();
//! assert!((brute.value - closed.value).norm() < 1e-12);
//! assert!((brute.value.norm_sqr() - 0.25).abs() < 1e-12);
//! ```

pub mod amplitude;
pub mod clifford;
pub mod error;
pub mod kinematics;
pub mod potentials;
pub mod scalar;
pub mod spinors;
pub mod vector;

pub use amplitude::{
    ab_cross_section, k_basis_element, operator_element, oracle_element, oracle_element_with,
    reduced_element, reduced_element_with, reduced_or_zero, reduced_value, s_matrix_element,
    spin_averaged_square, spin_factor, AmplitudeResult, CrossSectionPoint, EnergyDelta,
    FrameSummary, KBasisElement, Method, SMatrixElement,
};
pub use clifford::{
    alpha, check_algebra, gamma, gamma5, rotation, sigma, sigma_dot, sigma_dot_complex,
    AlgebraReport, DiracMatrix, GeneratorTriple, IdentityCheck,
};
pub use error::{Error, Result};
pub use kinematics::{
    decompose, helicity_axis_decomposition, planar_momenta, GeometricCoefficients,
    HelicityDecomposition, ScatteringFrame,
};
pub use potentials::{FieldDirection, GaugeFunction, PotentialKind, PotentialSpec};
pub use scalar::Real;
pub use spinors::{
    axis_spinor, axis_spinor_with, expand_in_axis, frame_pauli_spinor, pauli_eigenspinor,
    BasisAxis, DiracSpinor, Expansion, Helicity, Normalization, PauliSpinor,
};
pub use vector::{ComplexVec3, Momentum3, Vec3};

pub type Vec64 = Vec3<f64>;
pub type ComplexVec64 = ComplexVec3<f64>;
pub type DiracMatrix64 = DiracMatrix<f64>;
pub type DiracSpinor64 = DiracSpinor<f64>;
pub type Frame64 = ScatteringFrame<f64>;
pub type Coefficients64 = GeometricCoefficients<f64>;
pub type Potential64 = PotentialSpec<f64>;
pub type Amplitude64 = AmplitudeResult<f64>;
pub type CrossSection64 = CrossSectionPoint<f64>;

pub type Vec32 = Vec3<f32>;
pub type DiracMatrix32 = DiracMatrix<f32>;
pub type DiracSpinor32 = DiracSpinor<f32>;
pub type Frame32 = ScatteringFrame<f32>;
pub type Potential32 = PotentialSpec<f32>;
pub type Amplitude32 = AmplitudeResult<f32>;
