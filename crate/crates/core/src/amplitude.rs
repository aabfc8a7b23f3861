//! Spin-space matrix elements `⟨p̂_f; h'| γ5 Σ·â |p̂_i; h⟩` of the first-order
//! S-matrix, computed two ways:
//!
//! * [`oracle_element`] multiplies explicit 4-spinors through the 4×4
//!   operator and uses no reduction at all;
//! * [`reduced_element`] only needs the projections of `â` on `l̂` and `k̂`:
//!   `(B + i h A sin(θ/2)) · 2N′²p/(E + m)`, which is
//!   `h (B + i h A sin(θ/2)) ⟨k̂; h|γ5|k̂; h⟩` since
//!   `⟨k̂; h|γ5|k̂; h⟩ = h · 2N′²p/(E + m)`.
//!
//! Helicity-flip elements vanish identically; the oracle confirms it
//! numerically and the reduced form returns exactly zero.

use num_complex::Complex;

use crate::clifford::{gamma5, sigma_dot_complex, sigma_dot_unchecked, DiracMatrix};
use crate::error::Result;
use crate::kinematics::{decompose, GeometricCoefficients, ScatteringFrame};
use crate::potentials::PotentialSpec;
use crate::scalar::Real;
use crate::spinors::{axis_spinor_with, Helicity, Normalization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Explicit spinor/matrix products.
    Oracle,
    /// Closed form in the projections on `l̂` and `k̂`.
    Reduced,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Reduced => "reduced",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameSummary<T> {
    pub theta: T,
    pub p: T,
    pub m: T,
    pub energy: T,
}

impl<T: Real> From<&ScatteringFrame<T>> for FrameSummary<T> {
    fn from(f: &ScatteringFrame<T>) -> Self {
        Self {
            theta: f.theta(),
            p: f.p(),
            m: f.mass(),
            energy: f.energy(),
        }
    }
}

/// One spin matrix element with the data it was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeResult<T> {
    pub value: Complex<T>,
    pub method: Method,
    pub coefficients: GeometricCoefficients<T>,
    pub h_in: Helicity,
    pub h_out: Helicity,
    pub frame: FrameSummary<T>,
    /// `|A(q)|` of the potential at this momentum transfer.
    pub potential_magnitude: T,
    /// `2N′²p/(E + m)`.
    pub spin_factor: T,
}

impl<T: Real> AmplitudeResult<T> {
    /// `max(1, 2N′²p/(E + m))`, the size of a nonvanishing channel; zero
    /// tests are made relative to it.
    pub fn scale(&self) -> T {
        self.spin_factor.max(T::one())
    }

    pub fn is_flip(&self) -> bool {
        self.h_in != self.h_out
    }
}

/// `2N′²p/(E + m)`.
pub fn spin_factor<T: Real>(frame: &ScatteringFrame<T>, normalization: Normalization) -> Result<T> {
    let (p, m, e) = (frame.p(), frame.mass(), frame.energy());
    let n = normalization.constant(e, m)?;
    Ok(T::lit(2.0) * n * n * p / (e + m))
}

/// `⟨p̂_f; h_out| op |p̂_i; h_in⟩` for any Dirac-space operator.
pub fn operator_element<T: Real>(
    frame: &ScatteringFrame<T>,
    op: &DiracMatrix<T>,
    h_in: Helicity,
    h_out: Helicity,
    normalization: Normalization,
) -> Result<Complex<T>> {
    let u_i = axis_spinor_with(frame, frame.p_i_hat(), h_in, normalization)?;
    let u_f = axis_spinor_with(frame, frame.p_f_hat(), h_out, normalization)?;
    Ok(op.sandwich(u_f.components(), u_i.components()))
}

/// Brute-force `⟨p̂_f; h_out| γ5 Σ·â |p̂_i; h_in⟩` with covariant normalization.
pub fn oracle_element<T: Real>(
    frame: &ScatteringFrame<T>,
    spec: &PotentialSpec<T>,
    h_in: Helicity,
    h_out: Helicity,
) -> Result<AmplitudeResult<T>> {
    oracle_element_with(frame, spec, h_in, h_out, Normalization::Covariant)
}

pub fn oracle_element_with<T: Real>(
    frame: &ScatteringFrame<T>,
    spec: &PotentialSpec<T>,
    h_in: Helicity,
    h_out: Helicity,
    normalization: Normalization,
) -> Result<AmplitudeResult<T>> {
    let field = spec.direction_and_magnitude(frame.q())?;
    let coefficients = decompose(frame, &field.direction)?;
    let op = gamma5::<T>() * sigma_dot_complex(&field.direction);
    let value = operator_element(frame, &op, h_in, h_out, normalization)?;
    Ok(AmplitudeResult {
        value,
        method: Method::Oracle,
        coefficients,
        h_in,
        h_out,
        frame: frame.into(),
        potential_magnitude: field.magnitude,
        spin_factor: spin_factor(frame, normalization)?,
    })
}

/// Closed-form non-flip element `(B + i h A sin(θ/2)) · 2N′²p/(E + m)`.
pub fn reduced_element<T: Real>(
    frame: &ScatteringFrame<T>,
    spec: &PotentialSpec<T>,
    h: Helicity,
) -> Result<AmplitudeResult<T>> {
    reduced_element_with(frame, spec, h, Normalization::Covariant)
}

pub fn reduced_element_with<T: Real>(
    frame: &ScatteringFrame<T>,
    spec: &PotentialSpec<T>,
    h: Helicity,
    normalization: Normalization,
) -> Result<AmplitudeResult<T>> {
    let field = spec.direction_and_magnitude(frame.q())?;
    let coefficients = decompose(frame, &field.direction)?;
    let factor = spin_factor(frame, normalization)?;
    let value = reduced_value(&coefficients, frame.half_sin(), h) * factor;
    Ok(AmplitudeResult {
        value,
        method: Method::Reduced,
        coefficients,
        h_in: h,
        h_out: h,
        frame: frame.into(),
        potential_magnitude: field.magnitude,
        spin_factor: factor,
    })
}

/// `B + i h A sin(θ/2)`.
pub fn reduced_value<T: Real>(
    c: &GeometricCoefficients<T>,
    half_sin: T,
    h: Helicity,
) -> Complex<T> {
    c.along_k + c.along_l * Complex::new(T::zero(), h.sign::<T>() * half_sin)
}

/// Reduced element for any helicity pair: zero for a flip.
pub fn reduced_or_zero<T: Real>(
    frame: &ScatteringFrame<T>,
    spec: &PotentialSpec<T>,
    h_in: Helicity,
    h_out: Helicity,
) -> Result<Complex<T>> {
    if h_in != h_out {
        // validate inputs the same way the non-flip path does
        spec.direction_and_magnitude(frame.q())?;
        return Ok(Complex::new(T::zero(), T::zero()));
    }
    Ok(reduced_element(frame, spec, h_in)?.value)
}

/// Marker for the `δ(E_f - E_i)` factor of a static-field S-matrix element.
/// Elastic frames satisfy it by construction; it is never turned into a
/// number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnergyDelta;

/// First-order S-matrix element with the energy delta kept symbolic:
/// `value · δ(E_f - E_i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SMatrixElement<T> {
    /// Coefficient of `δ(E_f - E_i)` (units of inverse energy dropped).
    pub value: Complex<T>,
    pub energy_delta: EnergyDelta,
}

/// `-2π e |N|² |A(q)| ⟨p̂_f; h_out| γ5 Σ·â |p̂_i; h_in⟩`.
pub fn s_matrix_element<T: Real>(
    frame: &ScatteringFrame<T>,
    spec: &PotentialSpec<T>,
    h_in: Helicity,
    h_out: Helicity,
    normalization: T,
) -> Result<SMatrixElement<T>> {
    let m = oracle_element(frame, spec, h_in, h_out)?;
    let prefactor = -T::lit(2.0)
        * T::PI()
        * spec.charge
        * normalization
        * normalization
        * m.potential_magnitude;
    Ok(SMatrixElement {
        value: m.value * prefactor,
        energy_delta: EnergyDelta,
    })
}

/// `(1/2) Σ_{h, h'} |⟨p̂_f; h'| γ5 Σ·â |p̂_i; h⟩|²` from oracle elements.
pub fn spin_averaged_square<T: Real>(
    frame: &ScatteringFrame<T>,
    spec: &PotentialSpec<T>,
) -> Result<T> {
    let mut total = T::zero();
    for h_in in Helicity::ALL {
        for h_out in Helicity::ALL {
            total = total + oracle_element(frame, spec, h_in, h_out)?.value.norm_sqr();
        }
    }
    Ok(total / T::lit(2.0))
}

/// Unpolarized Aharonov-Bohm cross section at one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossSectionPoint<T> {
    pub theta: T,
    /// `e²Φ² / (2π p³ sin²(θ/2)) · (1/2) Σ |M|²`, from oracle elements.
    pub dsigma_dtheta: T,
    pub spin_averaged_m2: T,
    /// `e²Φ² / (8π p sin²(θ/2))`, the textbook closed form. Differs from
    /// `dsigma_dtheta` by the factor `1/m²` under covariant normalization.
    pub closed_form: T,
}

/// `dσ/dθ` for a flux line of strength `flux` (geometry must be normal to
/// the line, i.e. `q` in the x-y plane).
pub fn ab_cross_section<T: Real>(
    frame: &ScatteringFrame<T>,
    flux: T,
    charge: T,
) -> Result<CrossSectionPoint<T>> {
    let spec = PotentialSpec::aharonov_bohm(flux).with_charge(charge);
    let avg = spin_averaged_square(frame, &spec)?;
    let p = frame.p();
    let s2 = frame.half_sin().powi(2);
    let coupling = charge * charge * flux * flux;
    Ok(CrossSectionPoint {
        theta: frame.theta(),
        dsigma_dtheta: coupling / (T::lit(2.0) * T::PI() * p * p * p * s2) * avg,
        spin_averaged_m2: avg,
        closed_form: coupling / (T::lit(8.0) * T::PI() * p * s2),
    })
}

/// `⟨k̂; h|γ5|k̂; h⟩` and, transported back to the helicity states,
/// `⟨p̂_f; h|γ5 Σ_k|p̂_i; h⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KBasisElement<T> {
    /// `⟨k̂; h|γ5|k̂; h⟩ = h · 2N′²p/(E + m)`.
    pub diagonal: Complex<T>,
    /// `⟨p̂_f; h|γ5 Σ_k|p̂_i; h⟩`, equal to `h · diagonal`.
    pub helicity_sandwich: Complex<T>,
}

pub fn k_basis_element<T: Real>(
    frame: &ScatteringFrame<T>,
    h: Helicity,
) -> Result<KBasisElement<T>> {
    let norm = Normalization::Covariant;
    let k = axis_spinor_with(frame, frame.k_hat(), h, norm)?;
    let g5 = gamma5::<T>();
    let diagonal = g5.sandwich(k.components(), k.components());
    let op = g5 * sigma_dot_unchecked(frame.k_hat());
    let helicity_sandwich = operator_element(frame, &op, h, h, norm)?;
    Ok(KBasisElement {
        diagonal,
        helicity_sandwich,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::planar_momenta;
    use crate::vector::Vec3;

    fn ab_frame(theta: f64, p: f64, m: f64) -> ScatteringFrame<f64> {
        let (pi, pf) = planar_momenta(p, theta, Vec3::unit_x(), -Vec3::unit_z()).unwrap();
        ScatteringFrame::from_momenta(pi, pf, m).unwrap()
    }

    #[test]
    fn spin_factor_unit_mass_and_momentum() {
        let f = ab_frame(1.0, 1.0, 1.0);
        assert!((spin_factor(&f, Normalization::Covariant).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn flip_vanishes_for_ab() {
        let f = ab_frame(1.0, 1.0, 1.0);
        let spec = PotentialSpec::aharonov_bohm(1.0);
        for h in Helicity::ALL {
            let r = oracle_element(&f, &spec, h, h.flipped()).unwrap();
            assert!(r.is_flip());
            assert!(r.value.norm() < 1e-12 * r.scale());
        }
    }

    #[test]
    fn ab_non_flip_equals_spin_factor() {
        let f = ab_frame(0.7, 1.3, 0.6);
        let spec = PotentialSpec::aharonov_bohm(1.0);
        let x = spin_factor(&f, Normalization::Covariant).unwrap();
        for h in Helicity::ALL {
            let o = oracle_element(&f, &spec, h, h).unwrap();
            assert!((o.value - Complex::new(x, 0.0)).norm() < 1e-13);
            let r = reduced_element(&f, &spec, h).unwrap();
            assert_eq!(r.method, Method::Reduced);
            assert!((r.value - o.value).norm() < 1e-13);
        }
    }

    #[test]
    fn transfer_direction_never_contributes() {
        let (pi, pf) = planar_momenta(
            1.4,
            2.1,
            Vec3::new(1.0, 1.0, 1.0),
            Vec3::new(1.0, -1.0, 0.0),
        )
        .unwrap();
        let f = ScatteringFrame::from_momenta(pi, pf, 0.8).unwrap();
        let spec = PotentialSpec::fixed(f.q_hat()).unwrap();
        for h_in in Helicity::ALL {
            for h_out in Helicity::ALL {
                assert!(oracle_element(&f, &spec, h_in, h_out).unwrap().value.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn pure_out_of_plane_direction() {
        let theta = 1.2f64;
        let f = ab_frame(theta, 1.0, 1.0);
        let spec = PotentialSpec::fixed(f.l_hat()).unwrap();
        let x = spin_factor(&f, Normalization::Covariant).unwrap();
        for h in Helicity::ALL {
            let expected = Complex::new(0.0, h.sign::<f64>() * (theta / 2.0).sin() * x);
            assert!((reduced_element(&f, &spec, h).unwrap().value - expected).norm() < 1e-14);
            assert!((oracle_element(&f, &spec, h, h).unwrap().value - expected).norm() < 1e-13);
        }
    }

    #[test]
    fn s_matrix_scaling() {
        let f = ab_frame(1.0, 1.0, 1.0);
        let spec = PotentialSpec::aharonov_bohm(2.0).with_charge(0.3);
        let s = s_matrix_element(&f, &spec, Helicity::Plus, Helicity::Plus, 1.5).unwrap();
        let m = oracle_element(&f, &spec, Helicity::Plus, Helicity::Plus).unwrap();
        let expected = m.value * (-2.0 * std::f64::consts::PI * 0.3 * 2.25 * m.potential_magnitude);
        assert!((s.value - expected).norm() < 1e-14);
        let off = s_matrix_element(
            &f,
            &spec.clone().with_charge(0.0),
            Helicity::Plus,
            Helicity::Plus,
            1.5,
        )
        .unwrap();
        assert_eq!(off.value.norm(), 0.0);
        let flip = s_matrix_element(&f, &spec, Helicity::Plus, Helicity::Minus, 1.5).unwrap();
        assert!(flip.value.norm() < 1e-12);
    }

    #[test]
    fn k_basis_unit_mass_and_momentum() {
        let f = ab_frame(0.9, 1.0, 1.0);
        for h in Helicity::ALL {
            let k = k_basis_element(&f, h).unwrap();
            let s = h.sign::<f64>();
            assert!((k.diagonal - Complex::new(s * 0.5, 0.0)).norm() < 1e-14);
            assert!((k.helicity_sandwich - k.diagonal * s).norm() < 1e-14);
        }
    }

    #[test]
    fn ab_cross_section_values() {
        let (p, m, theta) = (1.3, 0.7, 0.9f64);
        let f = ab_frame(theta, p, m);
        let x = ab_cross_section(&f, 1.0, 1.0).unwrap();
        assert!((x.spin_averaged_m2 - p * p / (4.0 * m * m)).abs() < 1e-13);
        let s2 = (theta / 2.0).sin().powi(2);
        let eq37 = 1.0 / (8.0 * std::f64::consts::PI * p * m * m * s2);
        assert!((x.dsigma_dtheta - eq37).abs() < 1e-12 * eq37);
        assert!((x.closed_form * (1.0 / (m * m)) - eq37).abs() < 1e-12 * eq37);
    }
}
