//! Real and complex 3-vectors.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Real 3-vector. Used for momenta (natural units) and for directions.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

/// Momentum components in natural units.
pub type Momentum3<T> = Vec3<T>;

impl<T: Real> Vec3<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn unit_x() -> Self {
        Self::new(T::one(), T::zero(), T::zero())
    }

    pub fn unit_y() -> Self {
        Self::new(T::zero(), T::one(), T::zero())
    }

    pub fn unit_z() -> Self {
        Self::new(T::zero(), T::zero(), T::one())
    }

    pub fn from_array(a: [T; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.norm_squared().sqrt()
    }

    pub fn scale(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Direction of a nonzero vector.
    pub fn normalized(self) -> Result<Self> {
        let n = self.norm();
        if !self.is_finite() {
            return Err(Error::NonFinite("vector component"));
        }
        if n == T::zero() {
            return Err(Error::ZeroMomentum);
        }
        Ok(self.scale(n.recip()))
    }

    /// Fails unless `| |self| - 1 |` is within the scalar's unit tolerance.
    pub fn ensure_unit(self) -> Result<Self> {
        let n = self.norm();
        if !n.is_finite() || (n - T::one()).abs() > T::unit_tolerance() {
            return Err(Error::NonUnitVector {
                norm: n.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(self)
    }

    pub fn to_complex(self) -> ComplexVec3<T> {
        ComplexVec3::new([
            Complex::from(self.x),
            Complex::from(self.y),
            Complex::from(self.z),
        ])
    }
}

impl<T: Real> Add for Vec3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Real> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Real> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul<T> for Vec3<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        self.scale(s)
    }
}

/// Complex 3-vector, e.g. a Fourier-space vector potential A(q).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexVec3<T>(pub [Complex<T>; 3]);

impl<T: Real> ComplexVec3<T> {
    pub fn new(c: [Complex<T>; 3]) -> Self {
        Self(c)
    }

    pub fn zero() -> Self {
        Self([Complex::new(T::zero(), T::zero()); 3])
    }

    pub fn components(&self) -> &[Complex<T>; 3] {
        &self.0
    }

    /// `sqrt(sum |a_i|^2)`.
    pub fn norm(&self) -> T {
        self.0
            .iter()
            .map(|c| c.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Bilinear projection on a real axis: `sum a_i n_i`, no conjugation.
    pub fn project(&self, axis: Vec3<T>) -> Complex<T> {
        self.0[0] * axis.x + self.0[1] * axis.y + self.0[2] * axis.z
    }

    pub fn scale(&self, s: T) -> Self {
        Self(self.0.map(|c| c * s))
    }

    pub fn scale_complex(&self, s: Complex<T>) -> Self {
        Self(self.0.map(|c| c * s))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Real parts, when the vector is known to be real.
    pub fn re(&self) -> Vec3<T> {
        Vec3::new(self.0[0].re, self.0[1].re, self.0[2].re)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn ensure_unit(self) -> Result<Self> {
        let n = self.norm();
        if !n.is_finite() || (n - T::one()).abs() > T::unit_tolerance() {
            return Err(Error::NonUnitVector {
                norm: n.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(self)
    }
}

impl<T: Real> Add for ComplexVec3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

impl<T: Real> From<Vec3<T>> for ComplexVec3<T> {
    fn from(v: Vec3<T>) -> Self {
        v.to_complex()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_right_handed() {
        let z = Vec3::<f64>::unit_x().cross(Vec3::unit_y());
        assert_eq!(z, Vec3::unit_z());
    }

    #[test]
    fn normalizing_zero_fails() {
        assert_eq!(Vec3::<f64>::zero().normalized(), Err(Error::ZeroMomentum));
    }

    #[test]
    fn unit_check_uses_tolerance() {
        assert!(Vec3::new(1.0 + 1e-13, 0.0, 0.0).ensure_unit().is_ok());
        assert!(Vec3::new(1.0 + 1e-11, 0.0, 0.0).ensure_unit().is_err());
    }

    #[test]
    fn complex_projection_does_not_conjugate() {
        let v = ComplexVec3::new([
            Complex::new(0.0, 1.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
        ]);
        assert_eq!(v.project(Vec3::unit_x()), Complex::new(0.0, 1.0));
    }
}
