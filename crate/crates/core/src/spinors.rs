//! Plane-wave Dirac spinors that are eigenstates of `Σ·n` for an arbitrary
//! axis, and their expansion in the `k̂` and `q̂` spin bases.
//!
//! Phase convention. Matrix elements between states of different axes are
//! phase sensitive, so every spin state attached to a frame is derived from a
//! single reference: `χ(k̂, +)` from [`pauli_eigenspinor`], then
//! `χ(k̂, -) = i σ_l χ(k̂, +)`, and for any other axis `n` the state is the
//! reference rotated by the smallest rotation taking `k̂` to `n`. For axes in
//! the scattering plane this is a rotation about `l̂`, so
//!
//! ```text
//! |p̂_i; ±⟩ = U(l̂, -θ/2) |k̂; ±⟩      |p̂_f; ±⟩ = U(l̂, +θ/2) |k̂; ±⟩
//! |q̂; ±⟩   = U(l̂,  π/2) |k̂; ±⟩
//! ```
//!
//! hold exactly, phases included.

use std::fmt;

use num_complex::Complex;

use crate::clifford::{gamma5, Column4};
use crate::error::{Error, Result};
use crate::kinematics::ScatteringFrame;
use crate::scalar::Real;
use crate::vector::Vec3;

/// Eigenvalue `±1` of a spin projection `Σ·n` (helicity when `n = p̂`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub const ALL: [Helicity; 2] = [Helicity::Plus, Helicity::Minus];

    pub fn sign<T: Real>(self) -> T {
        match self {
            Helicity::Plus => T::one(),
            Helicity::Minus => -T::one(),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Helicity::Plus => Helicity::Minus,
            Helicity::Minus => Helicity::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Helicity::Plus => '+',
            Helicity::Minus => '-',
        }
    }
}

impl fmt::Display for Helicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl std::str::FromStr for Helicity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "+" | "+1" | "plus" => Ok(Helicity::Plus),
            "-" | "-1" | "minus" => Ok(Helicity::Minus),
            other => Err(format!("helicity must be '+' or '-', got '{other}'")),
        }
    }
}

/// Choice of the spinor normalization constant `N′`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// `N′ = sqrt((E + m) / 4m)`, giving `ū u = 1/2`. Requires `m > 0`.
    #[default]
    Covariant,
    /// `N′ = sqrt((E + m) / 2E)`, giving `u†u = 1`.
    Unit,
}

impl Normalization {
    /// `N′` for the given energy and mass.
    pub fn constant<T: Real>(self, energy: T, m: T) -> Result<T> {
        match self {
            Normalization::Covariant => {
                if m.is_nan() || m <= T::zero() {
                    return Err(Error::NonPositiveMass(m.to_f64().unwrap_or(f64::NAN)));
                }
                Ok(((energy + m) / (T::lit(4.0) * m)).sqrt())
            }
            Normalization::Unit => Ok(((energy + m) / (T::lit(2.0) * energy)).sqrt()),
        }
    }
}

/// Two-component spin state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliSpinor<T>(pub [Complex<T>; 2]);

impl<T: Real> PauliSpinor<T> {
    pub fn components(&self) -> [Complex<T>; 2] {
        self.0
    }

    /// `σ·n χ` for a real vector `n`.
    pub fn sigma_dot(&self, n: Vec3<T>) -> Self {
        let [a, b] = self.0;
        let off = Complex::new(n.x, -n.y);
        Self([a * n.z + b * off, a * off.conj() - b * n.z])
    }

    /// `exp(-i angle σ·n / 2) χ` for a unit axis `n`.
    pub fn rotated(&self, n: Vec3<T>, angle: T) -> Self {
        let half = angle / T::lit(2.0);
        let s = self.sigma_dot(n);
        let (cos, sin) = (half.cos(), half.sin());
        let mi = Complex::new(T::zero(), -sin);
        Self([self.0[0] * cos + s.0[0] * mi, self.0[1] * cos + s.0[1] * mi])
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.0[0].conj() * other.0[0] + self.0[1].conj() * other.0[1]
    }

    pub fn norm_squared(&self) -> T {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }

    fn scale(&self, s: Complex<T>) -> Self {
        Self([self.0[0] * s, self.0[1] * s])
    }

    fn max_abs_diff(&self, other: &Self) -> T {
        (self.0[0] - other.0[0])
            .norm()
            .max((self.0[1] - other.0[1]).norm())
    }
}

/// Eigenstate of `σ·n` with eigenvalue `sign`, in the spherical phase
/// convention: with polar angle β and azimuth φ of `n`,
/// `χ₊ = (cos β/2, e^{iφ} sin β/2)` and `χ₋ = (sin β/2, -e^{iφ} cos β/2)`,
/// then rephased so the first nonzero component is real and positive.
pub fn pauli_eigenspinor<T: Real>(n: Vec3<T>, sign: Helicity) -> Result<PauliSpinor<T>> {
    let n = n.ensure_unit()?;
    let two = T::lit(2.0);
    let beta = n.z.max(-T::one()).min(T::one()).acos();
    let phi = n.y.atan2(n.x);
    let (cb, sb) = ((beta / two).cos(), (beta / two).sin());
    let e = Complex::from_polar(T::one(), phi);
    let raw = match sign {
        Helicity::Plus => PauliSpinor([Complex::from(cb), e * sb]),
        Helicity::Minus => PauliSpinor([Complex::from(sb), -e * cb]),
    };
    Ok(canonical_phase(raw))
}

fn canonical_phase<T: Real>(chi: PauliSpinor<T>) -> PauliSpinor<T> {
    let eps = T::epsilon().sqrt();
    match chi.0.iter().find(|c| c.norm() > eps) {
        Some(lead) => chi.scale(lead.conj() / lead.norm()),
        None => chi,
    }
}

/// Spin state along `axis` in the frame's phase-linked convention (see the
/// module docs).
pub fn frame_pauli_spinor<T: Real>(
    frame: &ScatteringFrame<T>,
    axis: Vec3<T>,
    sign: Helicity,
) -> Result<PauliSpinor<T>> {
    let axis = axis.ensure_unit()?;
    let k = frame.k_hat();
    let l = frame.l_hat();
    let reference = pauli_eigenspinor(k, Helicity::Plus)?;
    let reference = match sign {
        Helicity::Plus => reference,
        Helicity::Minus => reference.sigma_dot(l).scale(Complex::i()),
    };

    let cross = k.cross(axis);
    let s = cross.norm();
    let c = k.dot(axis);
    if s <= T::epsilon() {
        return Ok(if c > T::zero() {
            reference
        } else {
            reference.rotated(l, T::PI())
        });
    }
    Ok(reference.rotated(cross.scale(s.recip()), s.atan2(c)))
}

/// Positive-energy plane-wave spinor with momentum `p · axis`, eigenstate of
/// `Σ·axis`:
///
/// ```text
/// u = N′ ( χ, (σ·p axis)/(E + m) χ ) = N′ ( χ, ±p/(E + m) χ )
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracSpinor<T> {
    components: Column4<T>,
    axis: Vec3<T>,
    eigenvalue: Helicity,
    p: T,
    m: T,
    norm_const: T,
}

impl<T: Real> DiracSpinor<T> {
    pub fn components(&self) -> &Column4<T> {
        &self.components
    }

    pub fn axis(&self) -> Vec3<T> {
        self.axis
    }

    pub fn eigenvalue(&self) -> Helicity {
        self.eigenvalue
    }

    pub fn momentum(&self) -> T {
        self.p
    }

    pub fn mass(&self) -> T {
        self.m
    }

    /// `N′`.
    pub fn norm_const(&self) -> T {
        self.norm_const
    }

    /// The two-component spin part `χ` (upper block divided by `N′`).
    pub fn spin_part(&self) -> PauliSpinor<T> {
        PauliSpinor([
            self.components[0] / self.norm_const,
            self.components[1] / self.norm_const,
        ])
    }

    /// `u†u`.
    pub fn norm_squared(&self) -> T {
        self.components
            .iter()
            .map(|c| c.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
    }

    /// `⟨self|other⟩ = self† other`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.components
            .iter()
            .zip(other.components.iter())
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * b
            })
    }

    /// `u† γ5 u`.
    pub fn gamma5_expectation(&self) -> Complex<T> {
        gamma5::<T>().sandwich(&self.components, &self.components)
    }
}

/// Eigenstate of `Σ·axis` with momentum `p · axis`, using the default
/// covariant normalization.
pub fn axis_spinor<T: Real>(
    frame: &ScatteringFrame<T>,
    axis: Vec3<T>,
    sign: Helicity,
) -> Result<DiracSpinor<T>> {
    axis_spinor_with(frame, axis, sign, Normalization::Covariant)
}

pub fn axis_spinor_with<T: Real>(
    frame: &ScatteringFrame<T>,
    axis: Vec3<T>,
    sign: Helicity,
    normalization: Normalization,
) -> Result<DiracSpinor<T>> {
    let (p, m, energy) = (frame.p(), frame.mass(), frame.energy());
    let norm_const = normalization.constant(energy, m)?;
    let chi = frame_pauli_spinor(frame, axis, sign)?;
    let lower = sign.sign::<T>() * p / (energy + m);
    let [a, b] = chi.0;
    Ok(DiracSpinor {
        components: [
            a * norm_const,
            b * norm_const,
            a * (norm_const * lower),
            b * (norm_const * lower),
        ],
        axis,
        eigenvalue: sign,
        p,
        m,
        norm_const,
    })
}

/// Spin basis used by [`expand_in_axis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisAxis {
    K,
    Q,
}

/// Coefficients of a spin state on `|axis; +⟩` and `|axis; -⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expansion<T> {
    pub plus: Complex<T>,
    pub minus: Complex<T>,
}

impl<T: Real> Expansion<T> {
    pub fn get(&self, h: Helicity) -> Complex<T> {
        match h {
            Helicity::Plus => self.plus,
            Helicity::Minus => self.minus,
        }
    }

    /// `|c₊|² + |c₋|²`.
    pub fn total_weight(&self) -> T {
        self.plus.norm_sqr() + self.minus.norm_sqr()
    }
}

/// Expands the spin part of `state` on the eigenstates of `Σ_k` or `Σ_q`.
///
/// The expansion is taken in spin space (the two-component `χ`), where the
/// helicity states are pure rotations of the basis states. With this crate's
/// phase convention `|p̂_i; +⟩` has k̂-coefficients `(cos θ/4, sin θ/4)` and
/// `|p̂_f; +⟩` has `(cos θ/4, -sin θ/4)`.
pub fn expand_in_axis<T: Real>(
    frame: &ScatteringFrame<T>,
    state: &DiracSpinor<T>,
    target: BasisAxis,
) -> Result<Expansion<T>> {
    let axis = match target {
        BasisAxis::K => frame.k_hat(),
        BasisAxis::Q => frame.q_hat(),
    };
    let chi = state.spin_part();
    let plus = frame_pauli_spinor(frame, axis, Helicity::Plus)?;
    let minus = frame_pauli_spinor(frame, axis, Helicity::Minus)?;
    Ok(Expansion {
        plus: plus.inner(&chi),
        minus: minus.inner(&chi),
    })
}

/// Deviation of `σ·n χ` from `sign · χ`.
pub fn eigen_residual<T: Real>(chi: &PauliSpinor<T>, n: Vec3<T>, sign: Helicity) -> T {
    chi.sigma_dot(n)
        .max_abs_diff(&chi.scale(Complex::from(sign.sign::<T>())))
}
