use std::io::Write;

use appellfield::fields::Psi;
use appellfield::{Error, SeriesControl};
use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::body::{check_branch, BodyArgs, Quantity};
use crate::error::{usage, CliError, CliResult};
use crate::eval::psi_at;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Sampling grid in the meridian half plane.
#[derive(Debug, Clone, Args, Serialize, Deserialize, PartialEq)]
pub struct GridSpec {
    #[arg(long, default_value_t = 0.0)]
    pub r_min: f64,
    #[arg(long)]
    pub r_max: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub z_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub z_max: f64,
    #[arg(long)]
    pub nr: usize,
    #[arg(long)]
    pub nz: usize,
    #[command(flatten)]
    pub body: BodyArgs,
    #[arg(long, value_enum, default_value_t = Quantity::Both)]
    pub quantity: Quantity,
    /// Sheet(s) of the tube ψ; repeat for several.
    #[arg(long = "branch", default_values_t = [0i64], allow_hyphen_values = true)]
    pub branches: Vec<i64>,
}

impl GridSpec {
    pub fn validate(&self) -> CliResult<()> {
        let finite = [self.r_min, self.r_max, self.z_min, self.z_max].iter().all(|v| v.is_finite());
        if !finite || self.r_min < 0.0 || self.r_max < self.r_min || self.z_max < self.z_min {
            return Err(usage("grid needs finite ranges with 0 <= r-min <= r-max and z-min <= z-max"));
        }
        if self.nr < 2 || self.nz < 2 {
            return Err(usage("grid needs --nr and --nz of at least 2"));
        }
        if self.branches.is_empty() {
            return Err(usage("at least one --branch is needed"));
        }
        Ok(())
    }

    fn axis(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
        if i + 1 == n {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub r: f64,
    pub z: f64,
    /// `None` where the value is undefined; written as "nan" / null.
    pub phi: Option<f64>,
    pub psi: Option<f64>,
    pub branch: i64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct GridOutput {
    pub meta: GridSpec,
    pub rows: Vec<Row>,
}

/// Geometric singularities give undefined values; anything else is an error.
fn undefined_on(e: CliError) -> CliResult<Option<f64>> {
    match e {
        CliError::Core(Error::EdgeProximity { .. } | Error::OnSurface { .. }) => Ok(None),
        e => Err(e),
    }
}

/// Evaluates the grid. Rows are in branch-major, then z-major order,
/// whatever order the worker threads finish in.
pub fn compute(spec: &GridSpec, ctl: &SeriesControl) -> CliResult<Vec<Row>> {
    spec.validate()?;
    let body = spec.body.build()?;
    for &b in &spec.branches {
        check_branch(&body, b)?;
    }
    let per_sheet = spec.nr * spec.nz;
    (0..spec.branches.len() * per_sheet)
        .into_par_iter()
        .map(|idx| {
            let branch = spec.branches[idx / per_sheet];
            let k = idx % per_sheet;
            let r = GridSpec::axis(spec.r_min, spec.r_max, spec.nr, k % spec.nr);
            let z = GridSpec::axis(spec.z_min, spec.z_max, spec.nz, k / spec.nr);
            let phi = if spec.quantity.phi() {
                body.phi(r, z, ctl).map(Some).map_err(CliError::from).or_else(undefined_on)?
            } else {
                None
            };
            let psi = if spec.quantity.psi() {
                match psi_at(&body, r, z, branch, ctl) {
                    Ok(Psi::Value(v)) => Some(v),
                    Ok(Psi::InsideCharge) => None,
                    Err(e) => undefined_on(e)?,
                }
            } else {
                None
            };
            Ok(Row { r, z, phi, psi, branch })
        })
        .collect()
}

fn num(v: Option<f64>) -> String {
    match v {
        Some(x) if !x.is_nan() => x.to_string(),
        _ => "nan".to_string(),
    }
}

pub const CSV_HEADER: &str = "r,z,phi,psi,branch";

pub fn write_csv<W: Write>(mut w: W, rows: &[Row]) -> CliResult<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(w, "{},{},{},{},{}", row.r, row.z, num(row.phi), num(row.psi), row.branch)?;
    }
    Ok(())
}

#[cfg(test)]
pub fn read_csv(text: &str) -> CliResult<Vec<Row>> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(usage("missing CSV header"));
    }
    let field = |s: &str| -> CliResult<f64> { s.parse().map_err(|_| usage(format!("bad number {s:?}"))) };
    let opt = |s: &str| -> CliResult<Option<f64>> { if s == "nan" { Ok(None) } else { field(s).map(Some) } };
    lines
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != 5 {
                return Err(usage(format!("bad CSV row {line:?}")));
            }
            Ok(Row {
                r: field(f[0])?,
                z: field(f[1])?,
                phi: opt(f[2])?,
                psi: opt(f[3])?,
                branch: f[4].parse().map_err(|_| usage(format!("bad branch {:?}", f[4])))?,
            })
        })
        .collect()
}

pub fn write_json<W: Write>(w: W, spec: &GridSpec, rows: Vec<Row>) -> CliResult<()> {
    let out = GridOutput {
        meta: spec.clone(),
        rows,
    };
    serde_json::to_writer(w, &out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::BodyKind;

    fn spec(nr: usize, nz: usize) -> GridSpec {
        GridSpec {
            r_min: 0.0,
            r_max: 2.0,
            z_min: -1.5,
            z_max: 1.5,
            nr,
            nz,
            body: BodyArgs {
                body: BodyKind::Tube,
                radius: 1.0,
                half_height: Some(0.7),
                density: 1.0,
            },
            quantity: Quantity::Both,
            branches: vec![0],
        }
    }

    #[test]
    fn csv_round_trip() {
        let rows = compute(&spec(5, 7), &SeriesControl::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let back = read_csv(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(back, rows);
    }

    #[test]
    fn row_major_order_and_sheet_values() {
        let rows = compute(&spec(3, 2), &SeriesControl::default()).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!((rows[1].r, rows[1].z), (1.0, -1.5));
        assert_eq!((rows[3].r, rows[3].z), (0.0, 1.5));
        // r = R with |z| > Z lies off the sheet
        assert!(rows[4].psi.is_some());
    }

    #[test]
    fn sheet_points_are_undefined() {
        let mut s = spec(3, 3);
        s.z_min = -0.5;
        s.z_max = 0.5;
        let rows = compute(&s, &SeriesControl::default()).unwrap();
        // (1, 0) is on the tube: φ finite, ψ undefined
        let on = rows.iter().find(|w| w.r == 1.0 && w.z == 0.0).unwrap();
        assert!(on.phi.is_some() && on.psi.is_none());
    }

    #[test]
    fn validation() {
        assert!(spec(1, 3).validate().is_err());
        let mut s = spec(2, 2);
        s.r_min = -1.0;
        assert!(s.validate().is_err());
    }
}
