//! Static vector potentials given by their Fourier transforms `A(q)`.
//!
//! * Aharonov-Bohm flux line along `ẑ`: `A(q) = -Φ (q_y, -q_x, 0) / q²`,
//!   defined for `q` in the x-y plane only. Overall `2π` factors of the
//!   real-space potential are not carried.
//! * Point dipole: `A(q) = (μ × q) / q²`, up to a constant factor set to one.
//! * Fixed direction: `A(q) = â` for every `q`.
//! * Gauge-shifted: `A(q) + q f(q)` for a caller-supplied scalar `f`.
//!
//! For the AB line the direction `A/|A| = ẑ × q̂`, which equals `+k̂` when the
//! scattering-plane normal `l̂` points along `-ẑ` and `-k̂` when it points
//! along `+ẑ`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::vector::{ComplexVec3, Momentum3, Vec3};

/// Scalar gauge function `f(q)`. Must be effect-free.
#[derive(Clone)]
pub struct GaugeFunction<T>(Arc<dyn Fn(Momentum3<T>) -> Complex<T> + Send + Sync>);

impl<T> GaugeFunction<T> {
    pub fn new(f: impl Fn(Momentum3<T>) -> Complex<T> + Send + Sync + 'static) -> Self {
        Self(Arc::new(f))
    }

    pub fn eval(&self, q: Momentum3<T>) -> Complex<T> {
        (self.0)(q)
    }
}

impl<T> fmt::Debug for GaugeFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("GaugeFunction(..)")
    }
}

#[derive(Debug, Clone)]
pub enum PotentialKind<T> {
    AharonovBohm {
        flux: T,
    },
    Dipole {
        moment: Vec3<T>,
    },
    FixedDirection {
        direction: ComplexVec3<T>,
    },
    GaugeShifted {
        base: Box<PotentialSpec<T>>,
        gauge: GaugeFunction<T>,
    },
}

/// A vector potential plus the charge it couples to.
#[derive(Debug, Clone)]
pub struct PotentialSpec<T> {
    pub kind: PotentialKind<T>,
    pub charge: T,
}

/// `|A(q)|` together with the unit direction `â = A(q) / |A(q)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldDirection<T> {
    pub magnitude: T,
    pub direction: ComplexVec3<T>,
}

impl<T: Real> PotentialSpec<T> {
    fn with_kind(kind: PotentialKind<T>) -> Self {
        Self {
            kind,
            charge: T::one(),
        }
    }

    pub fn aharonov_bohm(flux: T) -> Self {
        Self::with_kind(PotentialKind::AharonovBohm { flux })
    }

    pub fn dipole(moment: Vec3<T>) -> Self {
        Self::with_kind(PotentialKind::Dipole { moment })
    }

    /// Constant real unit direction.
    pub fn fixed(direction: Vec3<T>) -> Result<Self> {
        let direction = direction.ensure_unit()?;
        Ok(Self::with_kind(PotentialKind::FixedDirection {
            direction: direction.to_complex(),
        }))
    }

    /// Constant complex direction with `sum |a_i|² = 1`.
    pub fn fixed_complex(direction: ComplexVec3<T>) -> Result<Self> {
        let direction = direction.ensure_unit()?;
        Ok(Self::with_kind(PotentialKind::FixedDirection { direction }))
    }

    /// `A(q) → A(q) + q f(q)`; the charge is kept.
    pub fn gauge_shifted(self, gauge: GaugeFunction<T>) -> Self {
        let charge = self.charge;
        Self {
            kind: PotentialKind::GaugeShifted {
                base: Box::new(self),
                gauge,
            },
            charge,
        }
    }

    pub fn with_charge(mut self, charge: T) -> Self {
        self.charge = charge;
        self
    }

    pub fn is_aharonov_bohm(&self) -> bool {
        match &self.kind {
            PotentialKind::AharonovBohm { .. } => true,
            PotentialKind::GaugeShifted { base, .. } => base.is_aharonov_bohm(),
            _ => false,
        }
    }

    /// `A(q)`.
    pub fn fourier_amplitude(&self, q: Momentum3<T>) -> Result<ComplexVec3<T>> {
        if !q.is_finite() {
            return Err(Error::NonFinite("momentum transfer"));
        }
        let q2 = q.norm_squared();
        if q2 == T::zero() {
            return Err(Error::ZeroMomentumTransfer);
        }
        match &self.kind {
            PotentialKind::AharonovBohm { flux } => {
                if q.z.abs() > T::elastic_tolerance() * q2.sqrt().max(T::one()) {
                    return Err(Error::OutOfPlane {
                        q_z: q.z.to_f64().unwrap_or(f64::NAN),
                    });
                }
                let s = -*flux / q2;
                Ok(Vec3::new(q.y * s, -q.x * s, T::zero()).to_complex())
            }
            PotentialKind::Dipole { moment } => Ok(moment.cross(q).scale(q2.recip()).to_complex()),
            PotentialKind::FixedDirection { direction } => Ok(*direction),
            PotentialKind::GaugeShifted { base, gauge } => {
                let a = base.fourier_amplitude(q)?;
                Ok(a + q.to_complex().scale_complex(gauge.eval(q)))
            }
        }
    }

    /// `|A(q)|` and `â`. Fails with [`Error::NullPotentialAtQ`] where the
    /// transform vanishes, since the direction is undefined there.
    pub fn direction_and_magnitude(&self, q: Momentum3<T>) -> Result<FieldDirection<T>> {
        let a = self.fourier_amplitude(q)?;
        let magnitude = a.norm();
        if !magnitude.is_finite() {
            return Err(Error::NonFinite("vector potential"));
        }
        if magnitude < T::null_threshold() {
            return Err(Error::NullPotentialAtQ);
        }
        Ok(FieldDirection {
            magnitude,
            direction: a.scale(magnitude.recip()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(v: [f64; 3]) -> ComplexVec3<f64> {
        Vec3::from_array(v).to_complex()
    }

    #[test]
    fn ab_at_q_along_y() {
        let q = 0.8;
        let a = PotentialSpec::aharonov_bohm(1.0)
            .fourier_amplitude(Vec3::new(0.0, q, 0.0))
            .unwrap();
        assert!(a.max_abs_diff(&cv([-1.0 / q, 0.0, 0.0])) < 1e-15);

        let d = PotentialSpec::aharonov_bohm(1.0)
            .direction_and_magnitude(Vec3::new(0.0, q, 0.0))
            .unwrap();
        assert!((d.magnitude - 1.0 / q).abs() < 1e-15);
        assert!(d.direction.max_abs_diff(&cv([-1.0, 0.0, 0.0])) < 1e-15);
    }

    #[test]
    fn ab_out_of_plane_rejected() {
        let r = PotentialSpec::aharonov_bohm(1.0).fourier_amplitude(Vec3::new(0.1, 0.2, 0.3));
        assert!(matches!(r, Err(Error::OutOfPlane { .. })));
    }

    #[test]
    fn zero_transfer_rejected() {
        let r = PotentialSpec::dipole(Vec3::unit_z()).fourier_amplitude(Vec3::<f64>::zero());
        assert_eq!(r, Err(Error::ZeroMomentumTransfer));
    }

    #[test]
    fn dipole_cross_product() {
        let (mu, q) = (2.5, 0.4);
        let a = PotentialSpec::dipole(Vec3::new(0.0, 0.0, mu))
            .fourier_amplitude(Vec3::new(q, 0.0, 0.0))
            .unwrap();
        assert!(a.max_abs_diff(&cv([0.0, mu / q, 0.0])) < 1e-15);
    }

    #[test]
    fn dipole_parallel_to_q_is_null() {
        let r = PotentialSpec::dipole(Vec3::new(0.0, 0.0, 1.0))
            .direction_and_magnitude(Vec3::new(0.0, 0.0, 2.0));
        assert_eq!(r, Err(Error::NullPotentialAtQ));
    }

    #[test]
    fn fixed_direction_is_unit() {
        let d = PotentialSpec::fixed(Vec3::unit_x())
            .unwrap()
            .direction_and_magnitude(Vec3::new(0.3, 0.1, 0.0))
            .unwrap();
        assert_eq!(d.magnitude, 1.0);
        assert_eq!(d.direction, cv([1.0, 0.0, 0.0]));
        assert!(PotentialSpec::fixed(Vec3::new(1.0, 1.0, 0.0)).is_err());
    }

    #[test]
    fn transversality() {
        let q = Vec3::new(0.3, -1.1, 0.0);
        let ab = PotentialSpec::aharonov_bohm(2.0)
            .fourier_amplitude(q)
            .unwrap();
        assert!(ab.project(q).norm() < 1e-14);
        let q3 = Vec3::new(0.3, -1.1, 0.7);
        let dip = PotentialSpec::dipole(Vec3::new(1.0, 2.0, -0.5))
            .fourier_amplitude(q3)
            .unwrap();
        assert!(dip.project(q3).norm() < 1e-14);
    }

    #[test]
    fn gauge_shift_adds_q_times_f() {
        let q = Vec3::new(0.3, -1.1, 0.0);
        let base = PotentialSpec::aharonov_bohm(1.0);
        let shifted = base
            .clone()
            .with_charge(0.5)
            .gauge_shifted(GaugeFunction::new(|_| Complex::new(2.0, -1.0)));
        assert_eq!(shifted.charge, 0.5);
        assert!(shifted.is_aharonov_bohm());
        let a0 = base.fourier_amplitude(q).unwrap();
        let a1 = shifted.fourier_amplitude(q).unwrap();
        let expected = a0 + q.to_complex().scale_complex(Complex::new(2.0, -1.0));
        assert!(a1.max_abs_diff(&expected) < 1e-15);
    }
}
