//! Subcommand implementations.

use std::io::Write;
use std::path::Path;

use helicity_core::{
    ab_cross_section, oracle_element, planar_momenta, reduced_or_zero, spin_averaged_square, Error,
    Frame64, Helicity, Potential64,
};
use rayon::prelude::*;

use crate::args::{
    AlgebraCheckArgs, AmplitudeArgs, AngleRangeArgs, Command, KinematicArgs, PotentialArgs,
    PotentialName, SweepArgs, XsecArgs,
};
use crate::checks;
use crate::CliError;

pub const SWEEP_HEADER: [&str; 9] = [
    "theta",
    "A",
    "B",
    "C",
    "re_M",
    "im_M",
    "abs2_M",
    "abs2_M_avg",
    "dsigma_dtheta",
];

pub const XSEC_HEADER: [&str; 4] = [
    "theta",
    "spin_averaged_M2",
    "dsigma_dtheta",
    "dsigma_dtheta_closed_form",
];

pub fn dispatch(
    command: Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    match command {
        Command::AlgebraCheck(a) => algebra_check(&a, out),
        Command::Amplitude(a) => amplitude(&a, out),
        Command::Sweep(a) => sweep(&a, err),
        Command::Xsec(a) => xsec(&a, out, err),
    }
}

/// Full-precision scientific notation used in every numeric output.
pub fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn finite(name: &str, x: f64) -> Result<(), CliError> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--{name} must be finite")))
    }
}

pub fn algebra_check(a: &AlgebraCheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let report = checks::run_suite(a.seed, a.trials);
    let width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    let mut failures = 0;
    for c in &report.checks {
        let pass = c.deviation < checks::TOLERANCE;
        if !pass {
            failures += 1;
        }
        let note = if checks::EXTENSIONS.contains(&c.name) {
            "  (extension: all helicity pairs)"
        } else {
            ""
        };
        writeln!(
            out,
            "{:<width$}  {:.3e}  {}{}",
            c.name,
            c.deviation,
            if pass { "ok" } else { "FAIL" },
            note
        )?;
    }
    writeln!(
        out,
        "seed={} trials={} max_deviation={:.3e} tolerance={:.0e} status={}",
        a.seed,
        a.trials,
        report.max_deviation(),
        checks::TOLERANCE,
        if failures == 0 { "PASS" } else { "FAIL" }
    )?;
    if failures > 0 {
        return Err(CliError::Violations(failures));
    }
    Ok(())
}

/// Builds the potential selected on the command line.
pub fn potential(p: &PotentialArgs) -> Result<Potential64, CliError> {
    finite("flux", p.flux)?;
    finite("charge", p.charge)?;
    let spec = match p.potential {
        PotentialName::Ab => Potential64::aharonov_bohm(p.flux),
        PotentialName::Dipole => Potential64::dipole(p.mu),
        PotentialName::Fixed => Potential64::fixed(p.ahat)?,
    };
    Ok(spec.with_charge(p.charge))
}

fn check_kinematics(k: &KinematicArgs) -> Result<(), CliError> {
    finite("p", k.p)?;
    finite("mass", k.mass)
}

/// Elastic frame at angle `theta` for the command-line kinematics.
pub fn frame_at(k: &KinematicArgs, theta: f64) -> Result<Frame64, Error> {
    let (p_i, p_f) = planar_momenta(k.p, theta, k.incident, k.normal)?;
    Frame64::from_momenta(p_i, p_f, k.mass)
}

pub fn amplitude(a: &AmplitudeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_kinematics(&a.kinematics)?;
    finite("theta", a.theta)?;
    let spec = potential(&a.potential)?;
    let (h_in, h_out) = (a.helicities.hin, a.helicities.hout);
    let frame = frame_at(&a.kinematics, a.theta)?;
    let m = oracle_element(&frame, &spec, h_in, h_out)?;
    let reduced = reduced_or_zero(&frame, &spec, h_in, h_out)?;
    let c = m.coefficients;
    let lines = [
        ("theta", fmt(frame.theta())),
        ("h_in", h_in.symbol().to_string()),
        ("h_out", h_out.symbol().to_string()),
        ("A", fmt(c.along_l.re)),
        ("B", fmt(c.along_k.re)),
        ("C", fmt(c.along_q.re)),
        ("re_M", fmt(m.value.re)),
        ("im_M", fmt(m.value.im)),
        ("abs2_M", fmt(m.value.norm_sqr())),
        ("method", m.method.name().to_string()),
        ("reduced_delta", fmt((m.value - reduced).norm())),
    ];
    for (k, v) in lines {
        writeln!(out, "{k}={v}")?;
    }
    Ok(())
}

/// Inclusive, ascending grid of `steps` angles.
pub fn grid(r: &AngleRangeArgs) -> Result<Vec<f64>, CliError> {
    finite("theta-min", r.theta_min)?;
    finite("theta-max", r.theta_max)?;
    if r.steps < 2 {
        return Err(CliError::Usage("--steps must be at least 2".into()));
    }
    let lo = 1e-6;
    let hi = std::f64::consts::PI - 1e-6;
    if !(r.theta_min > lo && r.theta_max < hi) {
        return Err(CliError::Usage(format!(
            "theta range must lie inside ({lo:e}, pi - {lo:e})"
        )));
    }
    if r.theta_min >= r.theta_max {
        return Err(CliError::Usage(
            "--theta-min must be below --theta-max".into(),
        ));
    }
    let n = r.steps - 1;
    let span = r.theta_max - r.theta_min;
    Ok((0..r.steps)
        .map(|i| {
            if i == n {
                r.theta_max
            } else {
                r.theta_min + span * (i as f64) / (n as f64)
            }
        })
        .collect())
}

/// One sweep row. `dsigma_dtheta` is present only for the flux line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub re_m: f64,
    pub im_m: f64,
    pub abs2_m: f64,
    pub abs2_m_avg: f64,
    pub dsigma_dtheta: Option<f64>,
}

impl SweepRow {
    pub fn record(&self) -> Vec<String> {
        let mut v: Vec<String> = [
            self.theta,
            self.a,
            self.b,
            self.c,
            self.re_m,
            self.im_m,
            self.abs2_m,
            self.abs2_m_avg,
        ]
        .iter()
        .map(|&x| fmt(x))
        .collect();
        v.push(self.dsigma_dtheta.map(fmt).unwrap_or_default());
        v
    }
}

pub fn sweep_row(
    spec: &Potential64,
    flux: Option<f64>,
    k: &KinematicArgs,
    h_in: Helicity,
    h_out: Helicity,
    theta: f64,
) -> Result<SweepRow, Error> {
    let frame = frame_at(k, theta)?;
    let m = oracle_element(&frame, spec, h_in, h_out)?;
    let dsigma_dtheta = match flux {
        Some(flux) => Some(ab_cross_section(&frame, flux, spec.charge)?.dsigma_dtheta),
        None => None,
    };
    Ok(SweepRow {
        theta,
        a: m.coefficients.along_l.re,
        b: m.coefficients.along_k.re,
        c: m.coefficients.along_q.re,
        re_m: m.value.re,
        im_m: m.value.im,
        abs2_m: m.value.norm_sqr(),
        abs2_m_avg: spin_averaged_square(&frame, spec)?,
        dsigma_dtheta,
    })
}

/// Row-level failures that skip a grid point instead of aborting.
fn skippable(e: &Error) -> bool {
    matches!(
        e,
        Error::DegenerateGeometry { .. } | Error::NullPotentialAtQ
    )
}

/// Computes rows in parallel, keeps grid order, and reports skipped points.
fn collect_rows<R: Send>(
    thetas: &[f64],
    err: &mut dyn Write,
    f: impl Fn(f64) -> Result<R, Error> + Sync,
) -> Result<Vec<R>, CliError> {
    let results: Vec<Result<R, Error>> = thetas.par_iter().map(|&t| f(t)).collect();
    let mut rows = Vec::with_capacity(results.len());
    for (theta, r) in thetas.iter().zip(results) {
        match r {
            Ok(row) => rows.push(row),
            Err(e) if skippable(&e) => {
                writeln!(err, "warning: skipping theta={}: {e}", fmt(*theta))?;
            }
            Err(e) => return Err(e.into()),
        }
    }
    if rows.is_empty() {
        return Err(CliError::Io("no valid grid points".into()));
    }
    Ok(rows)
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

fn write_csv<W: Write>(w: W, header: &[&str], rows: &[Vec<String>]) -> Result<W, CliError> {
    let mut wr = csv_writer(w);
    let csv_err = |e: csv::Error| CliError::Io(e.to_string());
    wr.write_record(header).map_err(csv_err)?;
    for r in rows {
        wr.write_record(r).map_err(csv_err)?;
    }
    wr.into_inner().map_err(|e| CliError::Io(e.to_string()))
}

/// Writes through a temporary file in the target directory and renames it on
/// success, so a failed run never leaves a partial file behind.
fn write_atomically(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    let file = write_csv(std::io::BufWriter::new(tmp.as_file()), header, rows)?;
    drop(file);
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

pub fn sweep(a: &SweepArgs, err: &mut dyn Write) -> Result<(), CliError> {
    check_kinematics(&a.kinematics)?;
    let spec = potential(&a.potential)?;
    let thetas = grid(&a.range)?;
    let flux = (a.potential.potential == PotentialName::Ab).then_some(a.potential.flux);
    let (h_in, h_out) = (a.helicities.hin, a.helicities.hout);
    let rows = collect_rows(&thetas, err, |t| {
        sweep_row(&spec, flux, &a.kinematics, h_in, h_out, t)
    })?;
    let records: Vec<Vec<String>> = rows.iter().map(SweepRow::record).collect();
    write_atomically(&a.out, &SWEEP_HEADER, &records)
}

pub fn xsec(a: &XsecArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    check_kinematics(&a.kinematics)?;
    finite("flux", a.flux)?;
    finite("charge", a.charge)?;
    let thetas = grid(&a.range)?;
    let points = collect_rows(&thetas, err, |t| {
        let frame = frame_at(&a.kinematics, t)?;
        ab_cross_section(&frame, a.flux, a.charge)
    })?;
    let records: Vec<Vec<String>> = points
        .iter()
        .zip(&thetas)
        .map(|(p, &t)| {
            vec![
                fmt(t),
                fmt(p.spin_averaged_m2),
                fmt(p.dsigma_dtheta),
                fmt(p.closed_form),
            ]
        })
        .collect();
    match &a.out {
        Some(path) => write_atomically(path, &XSEC_HEADER, &records),
        None => {
            write_csv(out, &XSEC_HEADER, &records)?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(lo: f64, hi: f64, steps: usize) -> AngleRangeArgs {
        AngleRangeArgs {
            theta_min: lo,
            theta_max: hi,
            steps,
        }
    }

    #[test]
    fn grid_is_inclusive_and_ascending() {
        let g = grid(&range(0.5, 1.5, 5)).unwrap();
        assert_eq!(g, vec![0.5, 0.75, 1.0, 1.25, 1.5]);
    }

    #[test]
    fn grid_rejects_bad_ranges() {
        assert!(matches!(grid(&range(0.5, 1.5, 1)), Err(CliError::Usage(_))));
        assert!(matches!(grid(&range(1.5, 0.5, 3)), Err(CliError::Usage(_))));
        assert!(matches!(grid(&range(0.0, 1.0, 3)), Err(CliError::Usage(_))));
        assert!(matches!(
            grid(&range(0.1, std::f64::consts::PI - 1e-7, 3)),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            grid(&range(f64::NAN, 1.0, 3)),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn formatting_round_trips() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 123456.789] {
            assert_eq!(fmt(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn empty_dsigma_field_for_non_ab() {
        let row = SweepRow {
            theta: 1.0,
            a: 0.0,
            b: 1.0,
            c: 0.0,
            re_m: 0.5,
            im_m: 0.0,
            abs2_m: 0.25,
            abs2_m_avg: 0.25,
            dsigma_dtheta: None,
        };
        let rec = row.record();
        assert_eq!(rec.len(), 9);
        assert_eq!(rec[8], "");
    }
}
