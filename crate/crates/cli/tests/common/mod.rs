#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub fn helicity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_helicity"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

/// `key=value` output of `amplitude`.
pub fn value(o: &Output, key: &str) -> String {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")).map(str::to_owned))
        .unwrap_or_else(|| panic!("missing key {key}"))
}

/// Header and numeric rows (empty fields become `None`).
pub fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<Option<f64>>>) {
    let mut r = csv::Reader::from_path(path).expect("readable csv");
    let header = r.headers().unwrap().iter().map(str::to_owned).collect();
    let rows = r
        .records()
        .map(|rec| {
            rec.unwrap()
                .iter()
                .map(|f| {
                    if f.is_empty() {
                        None
                    } else {
                        Some(f.parse().unwrap())
                    }
                })
                .collect()
        })
        .collect();
    (header, rows)
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
