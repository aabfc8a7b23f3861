//! Seeded random geometries and potentials for the invariant checks.

use helicity_core::{planar_momenta, ComplexVec3, Frame64, GaugeFunction, Potential64, Vec64};
use num_complex::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform direction on the sphere (rejection from the cube).
pub fn unit_vector<R: Rng>(rng: &mut R) -> Vec64 {
    loop {
        let v = Vec64::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v.scale(1.0 / n);
        }
    }
}

pub fn complex_unit_vector<R: Rng>(rng: &mut R) -> ComplexVec3<f64> {
    let v = ComplexVec3::new(
        [(); 3].map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))),
    );
    let n = v.norm();
    if n < 1e-3 {
        return Vec64::unit_x().to_complex();
    }
    v.scale(1.0 / n)
}

fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

fn perpendicular<R: Rng>(rng: &mut R, d: Vec64) -> Vec64 {
    loop {
        let v = unit_vector(rng);
        let perp = v - d.scale(v.dot(d));
        if perp.norm() > 0.1 {
            return perp.normalized().expect("nonzero");
        }
    }
}

/// Angle away from the degenerate ends by a comfortable margin.
fn angle<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(0.01..std::f64::consts::PI - 0.01)
}

/// Random elastic geometry in an arbitrary orientation. Momenta and masses
/// are log-uniform over four decades.
pub fn frame<R: Rng>(rng: &mut R) -> Frame64 {
    let d = unit_vector(rng);
    let n = perpendicular(rng, d);
    planar_frame(rng, d, n)
}

/// Random geometry in the x-y plane (either scattering sense).
pub fn xy_plane_frame<R: Rng>(rng: &mut R) -> Frame64 {
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    let d = Vec64::new(phi.cos(), phi.sin(), 0.0);
    let n = if rng.gen_bool(0.5) {
        Vec64::unit_z()
    } else {
        -Vec64::unit_z()
    };
    planar_frame(rng, d, n)
}

fn planar_frame<R: Rng>(rng: &mut R, d: Vec64, n: Vec64) -> Frame64 {
    let theta = angle(rng);
    let p = log_uniform(rng, 0.01, 100.0);
    let m = log_uniform(rng, 0.01, 100.0);
    let (pi, pf) = planar_momenta(p, theta, d, n).expect("valid planar geometry");
    Frame64::from_momenta(pi, pf, m).expect("angle kept inside the valid range")
}

/// Random gauge function `f(q) = c0 + c1 |q|`.
pub fn gauge<R: Rng>(rng: &mut R) -> GaugeFunction<f64> {
    let c0 = Complex::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    let c1 = Complex::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    GaugeFunction::new(move |q: Vec64| c0 + c1 * q.norm())
}

/// Real-direction potentials only (no complex phases).
pub fn real_case<R: Rng>(rng: &mut R) -> (Frame64, Potential64) {
    match rng.gen_range(0..3) {
        0 => {
            let f = frame(rng);
            (f, Potential64::fixed(unit_vector(rng)).expect("unit"))
        }
        1 => {
            let f = frame(rng);
            let mu = unit_vector(rng).scale(log_uniform(rng, 0.1, 10.0));
            (f, Potential64::dipole(mu))
        }
        _ => {
            let f = xy_plane_frame(rng);
            (f, Potential64::aharonov_bohm(log_uniform(rng, 0.1, 10.0)))
        }
    }
}

/// Any catalog potential, including complex directions and gauge shifts.
pub fn any_case<R: Rng>(rng: &mut R) -> (Frame64, Potential64) {
    let (f, spec) = match rng.gen_range(0..4) {
        0 => {
            let f = frame(rng);
            (
                f,
                Potential64::fixed_complex(complex_unit_vector(rng)).expect("unit"),
            )
        }
        _ => real_case(rng),
    };
    let spec = spec.with_charge(rng.gen_range(-2.0..2.0));
    if rng.gen_bool(0.5) {
        let g = gauge(rng);
        (f, spec.gauge_shifted(g))
    } else {
        (f, spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_frames() {
        let mut a = rng(7);
        let mut b = rng(7);
        for _ in 0..20 {
            assert_eq!(frame(&mut a), frame(&mut b));
        }
    }

    #[test]
    fn xy_frames_have_vertical_normal() {
        let mut r = rng(3);
        for _ in 0..50 {
            let f = xy_plane_frame(&mut r);
            assert!((f.l_hat().z.abs() - 1.0).abs() < 1e-12);
        }
    }
}
