//! Dirac matrices in the standard (Dirac) representation, spin operators
//! `Σ·n`, spin-1/2 rotations and numerical checks of the operator algebra.
//!
//! Index conventions: `gamma(0)` is `γ^0 = diag(I, -I)`, `gamma(i)` for
//! `i = 1..3` is `γ^i = [[0, σ_i], [-σ_i, 0]]`, the metric is
//! `diag(+1, -1, -1, -1)`. With these,
//!
//! * `Σ_i = blockdiag(σ_i, σ_i)`,
//! * `γ5 = [[0, I], [I, 0]] = i γ^0 γ^1 γ^2 γ^3`,
//! * `α_i = γ^0 γ^i = γ5 Σ_i`.
//!
//! The ordering `γ^1 γ^2 γ^3 γ^0` (a trailing "fourth" matrix equal to `γ^0`)
//! gives exactly `i γ5`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::Result;
use crate::kinematics::ScatteringFrame;
use crate::scalar::Real;
use crate::vector::{ComplexVec3, Vec3};

/// A 4-component complex column vector in Dirac space.
pub type Column4<T> = [Complex<T>; 4];

/// 4×4 complex matrix acting on Dirac spinors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracMatrix<T> {
    entries: [[Complex<T>; 4]; 4],
}

fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

impl<T: Real> DiracMatrix<T> {
    pub fn from_entries(entries: [[Complex<T>; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn zero() -> Self {
        Self {
            entries: [[Complex::new(T::zero(), T::zero()); 4]; 4],
        }
    }

    pub fn identity() -> Self {
        Self::scalar(Complex::new(T::one(), T::zero()))
    }

    /// `s · I`.
    pub fn scalar(s: Complex<T>) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = s;
        }
        m
    }

    /// Block matrix `[[a, b], [c, d]]` from 2×2 blocks.
    pub fn from_blocks(
        a: [[Complex<T>; 2]; 2],
        b: [[Complex<T>; 2]; 2],
        c: [[Complex<T>; 2]; 2],
        d: [[Complex<T>; 2]; 2],
    ) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.entries[i][j] = a[i][j];
                m.entries[i][j + 2] = b[i][j];
                m.entries[i + 2][j] = c[i][j];
                m.entries[i + 2][j + 2] = d[i][j];
            }
        }
        m
    }

    pub fn entries(&self) -> &[[Complex<T>; 4]; 4] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row][col]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        let mut m = *self;
        m.entries.iter_mut().flatten().for_each(|e| *e = *e * s);
        m
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    pub fn apply(&self, v: &Column4<T>) -> Column4<T> {
        let mut out = [Complex::new(T::zero(), T::zero()); 4];
        for (i, row) in self.entries.iter().enumerate() {
            out[i] = row
                .iter()
                .zip(v.iter())
                .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                    acc + a * b
                });
        }
        out
    }

    /// `⟨left| M |right⟩ = left† M right`.
    pub fn sandwich(&self, left: &Column4<T>, right: &Column4<T>) -> Complex<T> {
        let mr = self.apply(right);
        left.iter()
            .zip(mr.iter())
            .fold(Complex::new(T::zero(), T::zero()), |acc, (l, r)| {
                acc + l.conj() * r
            })
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    /// Deviation of `self† self` from the identity.
    pub fn unitarity_defect(&self) -> T {
        (self.adjoint() * *self).max_abs_diff(&Self::identity())
    }
}

impl<T: Real> Mul for DiracMatrix<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = Complex::new(T::zero(), T::zero());
                for k in 0..4 {
                    acc = acc + self.entries[i][k] * rhs.entries[k][j];
                }
                m.entries[i][j] = acc;
            }
        }
        m
    }
}

impl<T: Real> Add for DiracMatrix<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for (a, b) in m
            .entries
            .iter_mut()
            .flatten()
            .zip(rhs.entries.iter().flatten())
        {
            *a = *a + b;
        }
        m
    }
}

impl<T: Real> Sub for DiracMatrix<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Real> Neg for DiracMatrix<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_real(-T::one())
    }
}

/// Pauli matrix `σ_i`, `i ∈ {1, 2, 3}`.
pub fn pauli<T: Real>(i: usize) -> [[Complex<T>; 2]; 2] {
    match i {
        1 => [[c(0., 0.), c(1., 0.)], [c(1., 0.), c(0., 0.)]],
        2 => [[c(0., 0.), c(0., -1.)], [c(0., 1.), c(0., 0.)]],
        3 => [[c(1., 0.), c(0., 0.)], [c(0., 0.), c(-1., 0.)]],
        _ => panic!("Pauli index must be 1, 2 or 3, got {i}"),
    }
}

fn block_identity<T: Real>() -> [[Complex<T>; 2]; 2] {
    [[c(1., 0.), c(0., 0.)], [c(0., 0.), c(1., 0.)]]
}

fn block_zero<T: Real>() -> [[Complex<T>; 2]; 2] {
    [[c(0., 0.); 2]; 2]
}

fn block_neg<T: Real>(b: [[Complex<T>; 2]; 2]) -> [[Complex<T>; 2]; 2] {
    b.map(|row| row.map(|e| -e))
}

/// Minkowski metric `g^{μν}` with signature (+, −, −, −).
pub fn metric<T: Real>(mu: usize, nu: usize) -> T {
    match (mu, nu) {
        (0, 0) => T::one(),
        (a, b) if a == b && a < 4 => -T::one(),
        (a, b) if a < 4 && b < 4 => T::zero(),
        _ => panic!("Lorentz index out of range"),
    }
}

/// Contravariant `γ^μ`, `μ ∈ 0..4`.
pub fn gamma<T: Real>(mu: usize) -> DiracMatrix<T> {
    match mu {
        0 => DiracMatrix::from_blocks(
            block_identity(),
            block_zero(),
            block_zero(),
            block_neg(block_identity()),
        ),
        1..=3 => {
            let s = pauli(mu);
            DiracMatrix::from_blocks(block_zero(), s, block_neg(s), block_zero())
        }
        _ => panic!("Lorentz index out of range: {mu}"),
    }
}

pub fn gamma5<T: Real>() -> DiracMatrix<T> {
    DiracMatrix::from_blocks(
        block_zero(),
        block_identity(),
        block_identity(),
        block_zero(),
    )
}

/// `i γ^0 γ^1 γ^2 γ^3`, equal to [`gamma5`] in this representation.
pub fn gamma5_from_product<T: Real>() -> DiracMatrix<T> {
    (gamma::<T>(0) * gamma(1) * gamma(2) * gamma(3)).scale(Complex::i())
}

/// Spin matrix `Σ_i = blockdiag(σ_i, σ_i)`.
pub fn sigma<T: Real>(i: usize) -> DiracMatrix<T> {
    let s = pauli(i);
    DiracMatrix::from_blocks(s, block_zero(), block_zero(), s)
}

/// `α_i = γ^0 γ^i`.
pub fn alpha<T: Real>(i: usize) -> DiracMatrix<T> {
    gamma::<T>(0) * gamma(i)
}

/// `Σ·n` for a real unit vector `n`.
pub fn sigma_dot<T: Real>(n: Vec3<T>) -> Result<DiracMatrix<T>> {
    let n = n.ensure_unit()?;
    Ok(sigma_dot_unchecked(n))
}

pub(crate) fn sigma_dot_unchecked<T: Real>(n: Vec3<T>) -> DiracMatrix<T> {
    sigma::<T>(1).scale_real(n.x) + sigma(2).scale_real(n.y) + sigma(3).scale_real(n.z)
}

/// `Σ·a` for a complex 3-vector (no normalization requirement).
pub fn sigma_dot_complex<T: Real>(a: &ComplexVec3<T>) -> DiracMatrix<T> {
    let [ax, ay, az] = *a.components();
    sigma::<T>(1).scale(ax) + sigma(2).scale(ay) + sigma(3).scale(az)
}

/// Spin-1/2 rotation `exp(-i angle Σ·n / 2) = cos(angle/2) I - i sin(angle/2) Σ·n`.
///
/// Acting on states it turns spin along `m` into spin along `R(n, angle) m`;
/// on operators, `U (Σ·m) U⁻¹ = Σ·(R m)`.
pub fn rotation<T: Real>(n: Vec3<T>, angle: T) -> Result<DiracMatrix<T>> {
    let s = sigma_dot(n)?;
    Ok(rotation_from_generator(&s, angle))
}

pub(crate) fn rotation_from_generator<T: Real>(
    generator: &DiracMatrix<T>,
    angle: T,
) -> DiracMatrix<T> {
    let half = angle / T::lit(2.0);
    DiracMatrix::scalar(Complex::new(half.cos(), T::zero()))
        + generator.scale(Complex::new(T::zero(), -half.sin()))
}

/// `Σ_k`, `Σ_q`, `Σ_l` for one scattering frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorTriple<T> {
    pub sigma_k: DiracMatrix<T>,
    pub sigma_q: DiracMatrix<T>,
    pub sigma_l: DiracMatrix<T>,
}

impl<T: Real> GeneratorTriple<T> {
    pub fn from_frame(frame: &ScatteringFrame<T>) -> Self {
        Self {
            sigma_k: sigma_dot_unchecked(frame.k_hat()),
            sigma_q: sigma_dot_unchecked(frame.q_hat()),
            sigma_l: sigma_dot_unchecked(frame.l_hat()),
        }
    }
}

/// One named identity and its worst entrywise deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck<T> {
    pub name: &'static str,
    pub deviation: T,
}

/// Result of [`check_algebra`].
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraReport<T> {
    pub checks: Vec<IdentityCheck<T>>,
}

impl<T: Real> AlgebraReport<T> {
    pub fn max_deviation(&self) -> T {
        self.checks
            .iter()
            .map(|c| c.deviation)
            .fold(T::zero(), T::max)
    }

    pub fn deviation(&self, name: &str) -> Option<T> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.deviation)
    }

    /// Entrywise maximum of two reports with the same check list.
    pub fn merge_max(&mut self, other: &Self) {
        if self.checks.is_empty() {
            self.checks = other.checks.clone();
            return;
        }
        for (mine, theirs) in self.checks.iter_mut().zip(other.checks.iter()) {
            debug_assert_eq!(mine.name, theirs.name);
            mine.deviation = mine.deviation.max(theirs.deviation);
        }
    }
}

fn max_of<T: Real>(it: impl IntoIterator<Item = T>) -> T {
    it.into_iter().fold(T::zero(), T::max)
}

/// Clifford relations `{γ^μ, γ^ν} = 2 g^{μν} I`: worst deviation.
pub fn clifford_deviation<T: Real>() -> T {
    let mut worst = T::zero();
    for mu in 0..4 {
        for nu in 0..4 {
            let lhs = gamma::<T>(mu).anticommutator(&gamma(nu));
            let rhs = DiracMatrix::identity().scale_real(T::lit(2.0) * metric::<T>(mu, nu));
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
    }
    worst
}

/// Evaluates every spin-algebra identity tied to a frame.
///
/// Covered: Clifford relations, `γ5² = I` and `[γ5, Σ·n] = 0`, the su(2)
/// commutators, anticommutators, squares and pairwise products of
/// `Σ_k, Σ_q, Σ_l`, the helicity operators in terms of `Σ_k, Σ_q`, the
/// sandwiches `Σ·p̂_f Σ_k Σ·p̂_i = Σ_k` and `Σ·p̂_f Σ_q Σ·p̂_i = -Σ_q`, the
/// reduction of `Σ·p̂_f Σ_l Σ·p̂_i` on helicity eigenspaces, and the two
/// rotation identities about `l̂`.
pub fn check_algebra<T: Real>(frame: &ScatteringFrame<T>) -> AlgebraReport<T> {
    let two = T::lit(2.0);
    let i = Complex::new(T::zero(), T::one());
    let id = DiracMatrix::<T>::identity();
    let g5 = gamma5::<T>();
    let GeneratorTriple {
        sigma_k: sk,
        sigma_q: sq,
        sigma_l: sl,
    } = GeneratorTriple::from_frame(frame);
    let si = sigma_dot_unchecked(frame.p_i_hat());
    let sf = sigma_dot_unchecked(frame.p_f_hat());
    let (ch, sh) = ((frame.theta() / two).cos(), (frame.theta() / two).sin());
    let axes = [sk, sq, sl, si, sf];

    let mut checks = Vec::new();
    let mut push = |name, deviation| checks.push(IdentityCheck { name, deviation });

    push("clifford_anticommutators", clifford_deviation());
    push(
        "gamma5_product_form",
        gamma5_from_product::<T>().max_abs_diff(&g5),
    );
    push("gamma5_involution", (g5 * g5).max_abs_diff(&id));
    push(
        "gamma5_commutes_with_sigma",
        max_of(
            axes.iter()
                .map(|s| g5.commutator(s).max_abs_diff(&DiracMatrix::zero())),
        ),
    );
    push(
        "sigma_axis_hermitian",
        max_of(axes.iter().map(|s| s.max_abs_diff(&s.adjoint()))),
    );
    push(
        "su2_commutators",
        max_of([
            sk.commutator(&sq).max_abs_diff(&sl.scale(i * two)),
            sl.commutator(&sk).max_abs_diff(&sq.scale(i * two)),
            sq.commutator(&sl).max_abs_diff(&sk.scale(i * two)),
        ]),
    );
    push(
        "su2_anticommutators",
        max_of([
            sl.anticommutator(&sk).max_abs_diff(&DiracMatrix::zero()),
            sq.anticommutator(&sl).max_abs_diff(&DiracMatrix::zero()),
            sq.anticommutator(&sk).max_abs_diff(&DiracMatrix::zero()),
        ]),
    );
    push(
        "su2_squares",
        max_of(axes.iter().map(|s| (*s * *s).max_abs_diff(&id))),
    );
    push(
        "su2_products",
        max_of([
            sk.scale(i).max_abs_diff(&(sq * sl)),
            sq.scale(i).max_abs_diff(&(sl * sk)),
            sl.scale(i).max_abs_diff(&(sk * sq)),
        ]),
    );
    push(
        "helicity_in_kq_basis",
        max_of([
            si.max_abs_diff(&(sk.scale_real(ch) - sq.scale_real(sh))),
            sf.max_abs_diff(&(sk.scale_real(ch) + sq.scale_real(sh))),
        ]),
    );
    push("sandwich_sigma_k", (sf * sk * si).max_abs_diff(&sk));
    push("sandwich_sigma_q", (sf * sq * si).max_abs_diff(&(-sq)));

    // On the ±1 eigenspaces of Σ·p̂_i: Σ·p̂_f Σ_l Σ·p̂_i = ±i(-cos Σ_q + sin Σ_k).
    let reduced = sq.scale_real(-ch) + sk.scale_real(sh);
    let appendix = max_of([T::one(), -T::one()].map(|sign| {
        let projector = (id + si.scale_real(sign)).scale_real(T::lit(0.5));
        let lhs = sf * sl * si * projector;
        let rhs = reduced.scale(i * sign) * projector;
        lhs.max_abs_diff(&rhs)
    }));
    push("sigma_l_reduction", appendix);

    let theta = frame.theta();
    let u_full = rotation_from_generator(&sl, theta);
    push(
        "rotation_maps_helicity",
        (u_full * si * u_full.adjoint()).max_abs_diff(&sf),
    );
    let u_plus = rotation_from_generator(&sl, theta / two);
    let u_minus = rotation_from_generator(&sl, -theta / two);
    let g5k = g5 * sk;
    push(
        "rotation_preserves_gamma5_sigma_k",
        (u_plus.adjoint() * g5k * u_minus).max_abs_diff(&g5k),
    );

    AlgebraReport { checks }
}
