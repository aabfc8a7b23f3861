//! The intrinsic scattering frame `(k̂, q̂, l̂)` and projections onto it.
//!
//! For elastic scattering `p_i → p_f` with `|p_i| = |p_f| = p`:
//!
//! * `k = p_f + p_i` (total momentum), `|k| = 2p cos(θ/2)`
//! * `q = p_f - p_i` (momentum transfer), `|q| = 2p sin(θ/2)`
//! * `l = k × q`
//!
//! `θ` is the full angle between `p_i` and `p_f`, so `p̂_i = cos(θ/2) k̂ - sin(θ/2) q̂`
//! and `p̂_f = cos(θ/2) k̂ + sin(θ/2) q̂`. The frame is right-handed:
//! `k̂ × q̂ = l̂`, `q̂ × l̂ = k̂`, `l̂ × k̂ = q̂`, and `p_f` is `p_i` turned by `+θ`
//! about `l̂`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::vector::{ComplexVec3, Momentum3, Vec3};

/// Orthonormal triad and kinematic scalars of one elastic scattering event.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringFrame<T> {
    k_hat: Vec3<T>,
    q_hat: Vec3<T>,
    l_hat: Vec3<T>,
    p_i_hat: Vec3<T>,
    p_f_hat: Vec3<T>,
    theta: T,
    p: T,
    m: T,
    energy: T,
}

impl<T: Real> ScatteringFrame<T> {
    /// Builds the frame from incident and outgoing momenta and the mass.
    ///
    /// Fails with [`Error::InelasticInput`] when the magnitudes differ by more
    /// than the relative elastic tolerance, and with
    /// [`Error::DegenerateGeometry`] when `θ` is within `θ_min` of 0 or π.
    pub fn from_momenta(p_i: Momentum3<T>, p_f: Momentum3<T>, m: T) -> Result<Self> {
        if !p_i.is_finite() || !p_f.is_finite() {
            return Err(Error::NonFinite("momentum"));
        }
        if !m.is_finite() || m < T::zero() {
            return Err(Error::InvalidMass(m.to_f64().unwrap_or(f64::NAN)));
        }
        let (p_in, p_out) = (p_i.norm(), p_f.norm());
        if p_in == T::zero() || p_out == T::zero() {
            return Err(Error::ZeroMomentum);
        }
        if (p_out - p_in).abs() > T::elastic_tolerance() * p_in {
            return Err(Error::InelasticInput {
                p_in: p_in.to_f64().unwrap_or(f64::NAN),
                p_out: p_out.to_f64().unwrap_or(f64::NAN),
            });
        }

        let p_i_hat = p_i.scale(p_in.recip());
        let p_f_hat = p_f.scale(p_out.recip());
        let theta = p_i_hat.cross(p_f_hat).norm().atan2(p_i_hat.dot(p_f_hat));
        let theta_min = T::theta_min();
        if theta < theta_min || theta > T::PI() - theta_min {
            return Err(Error::DegenerateGeometry {
                theta: theta.to_f64().unwrap_or(f64::NAN),
            });
        }

        let k_hat = (p_f_hat + p_i_hat).normalized()?;
        let q_hat = (p_f_hat - p_i_hat).normalized()?;
        let l_hat = k_hat.cross(q_hat).normalized()?;
        // Use the mean magnitude so that tiny elastic mismatches stay symmetric.
        let p = (p_in + p_out) / T::lit(2.0);

        Ok(Self {
            k_hat,
            q_hat,
            l_hat,
            p_i_hat,
            p_f_hat,
            theta,
            p,
            m,
            energy: (p * p + m * m).sqrt(),
        })
    }

    pub fn k_hat(&self) -> Vec3<T> {
        self.k_hat
    }

    pub fn q_hat(&self) -> Vec3<T> {
        self.q_hat
    }

    pub fn l_hat(&self) -> Vec3<T> {
        self.l_hat
    }

    pub fn p_i_hat(&self) -> Vec3<T> {
        self.p_i_hat
    }

    pub fn p_f_hat(&self) -> Vec3<T> {
        self.p_f_hat
    }

    /// Incident momentum `p p̂_i`.
    pub fn p_i(&self) -> Momentum3<T> {
        self.p_i_hat.scale(self.p)
    }

    /// Outgoing momentum `p p̂_f`.
    pub fn p_f(&self) -> Momentum3<T> {
        self.p_f_hat.scale(self.p)
    }

    /// Momentum transfer `q = p_f - p_i`, of length `2p sin(θ/2)`.
    pub fn q(&self) -> Momentum3<T> {
        self.q_hat.scale(self.q_magnitude())
    }

    /// Total momentum `k = p_f + p_i`, of length `2p cos(θ/2)`.
    pub fn k(&self) -> Momentum3<T> {
        self.k_hat.scale(self.k_magnitude())
    }

    pub fn q_magnitude(&self) -> T {
        T::lit(2.0) * self.p * self.half_sin()
    }

    pub fn k_magnitude(&self) -> T {
        T::lit(2.0) * self.p * self.half_cos()
    }

    /// Scattering angle in radians, in `(θ_min, π - θ_min)`.
    pub fn theta(&self) -> T {
        self.theta
    }

    /// Common momentum magnitude.
    pub fn p(&self) -> T {
        self.p
    }

    pub fn mass(&self) -> T {
        self.m
    }

    /// `E = sqrt(p² + m²)`.
    pub fn energy(&self) -> T {
        self.energy
    }

    pub fn half_cos(&self) -> T {
        (self.theta / T::lit(2.0)).cos()
    }

    pub fn half_sin(&self) -> T {
        (self.theta / T::lit(2.0)).sin()
    }

    /// Same geometry with another mass.
    pub fn with_mass(&self, m: T) -> Result<Self> {
        Self::from_momenta(self.p_i(), self.p_f(), m)
    }
}

/// Momenta for in-plane scattering by `theta`.
///
/// `p_i = p d̂` and `p_f` is `p_i` turned by `theta` about `normal`, which
/// becomes the frame's `l̂`. `incident` and `normal` need not be unit length
/// but must be nonzero and perpendicular.
pub fn planar_momenta<T: Real>(
    p: T,
    theta: T,
    incident: Vec3<T>,
    normal: Vec3<T>,
) -> Result<(Momentum3<T>, Momentum3<T>)> {
    if !p.is_finite() || !theta.is_finite() {
        return Err(Error::NonFinite("momentum or angle"));
    }
    if p <= T::zero() {
        return Err(Error::ZeroMomentum);
    }
    let d = incident.normalized()?;
    let n = normal.normalized()?;
    if d.dot(n).abs() > T::unit_tolerance().sqrt() {
        return Err(Error::NotPerpendicular);
    }
    let side = n.cross(d);
    let p_i = d.scale(p);
    let p_f = (d.scale(theta.cos()) + side.scale(theta.sin())).scale(p);
    Ok((p_i, p_f))
}

/// Projections of a direction `â` on `(l̂, k̂, q̂)`.
///
/// Complex when `â` carries phases. For a real unit `â` the three squares
/// sum to one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricCoefficients<T> {
    /// `â·l̂`, out of the scattering plane.
    pub along_l: Complex<T>,
    /// `â·k̂`, along the total momentum.
    pub along_k: Complex<T>,
    /// `â·q̂`, along the momentum transfer (pure gauge).
    pub along_q: Complex<T>,
}

impl<T: Real> GeometricCoefficients<T> {
    /// `along_l l̂ + along_k k̂ + along_q q̂`.
    pub fn recompose(&self, frame: &ScatteringFrame<T>) -> ComplexVec3<T> {
        let axis = |v: Vec3<T>, s: Complex<T>| v.to_complex().scale_complex(s);
        axis(frame.l_hat(), self.along_l)
            + axis(frame.k_hat(), self.along_k)
            + axis(frame.q_hat(), self.along_q)
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            along_l: self.along_l * s,
            along_k: self.along_k * s,
            along_q: self.along_q * s,
        }
    }
}

/// Projects a unit complex direction onto the frame axes.
pub fn decompose<T: Real>(
    frame: &ScatteringFrame<T>,
    a_hat: &ComplexVec3<T>,
) -> Result<GeometricCoefficients<T>> {
    let a_hat = a_hat.ensure_unit()?;
    Ok(GeometricCoefficients {
        along_l: a_hat.project(frame.l_hat()),
        along_k: a_hat.project(frame.k_hat()),
        along_q: a_hat.project(frame.q_hat()),
    })
}

/// Coefficients of the helicity operators on `Σ_k` and `Σ_q`:
/// `Σ·p̂_i = cos(θ/2) Σ_k - sin(θ/2) Σ_q`, `Σ·p̂_f = cos(θ/2) Σ_k + sin(θ/2) Σ_q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelicityDecomposition<T> {
    pub cos_half: T,
    pub sin_half: T,
}

impl<T: Real> HelicityDecomposition<T> {
    /// `(coefficient of Σ_k, coefficient of Σ_q)` for `Σ·p̂_i`.
    pub fn initial(&self) -> (T, T) {
        (self.cos_half, -self.sin_half)
    }

    /// `(coefficient of Σ_k, coefficient of Σ_q)` for `Σ·p̂_f`.
    pub fn final_(&self) -> (T, T) {
        (self.cos_half, self.sin_half)
    }
}

pub fn helicity_axis_decomposition<T: Real>(
    frame: &ScatteringFrame<T>,
) -> HelicityDecomposition<T> {
    HelicityDecomposition {
        cos_half: frame.half_cos(),
        sin_half: frame.half_sin(),
    }
}
