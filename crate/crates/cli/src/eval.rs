use appellfield::fields::{psi_cyl, psi_tube, Body, Psi};
use appellfield::SeriesControl;
use clap::Args;

use crate::body::{check_branch, BodyArgs, Quantity};
use crate::error::{usage, CliResult};

const UNITS: &str = "units=gaussian(4*pi*eps0=1)";

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub body: BodyArgs,
    #[arg(long)]
    pub r: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub z: f64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub branch: i64,
    #[arg(long, value_enum, default_value_t = Quantity::Both)]
    pub quantity: Quantity,
}

pub fn psi_at(body: &Body, r: f64, z: f64, branch: i64, ctl: &SeriesControl) -> CliResult<Psi> {
    Ok(match body {
        Body::Cylinder(c) => psi_cyl(r, z, c, ctl)?,
        Body::Tube(t) => Psi::Value(psi_tube(r, z, t, branch, ctl)?),
        Body::Disk(_) => return Err(usage("psi is not available for the disk")),
    })
}

/// The printed records, one line per quantity.
pub fn eval_lines(args: &EvalArgs, ctl: &SeriesControl) -> CliResult<Vec<String>> {
    let body = args.body.build()?;
    check_branch(&body, args.branch)?;
    let mut out = Vec::new();
    if args.quantity.phi() {
        let v = body.phi(args.r, args.z, ctl)?;
        out.push(format!("phi={v} {UNITS} branch={}", args.branch));
    }
    if args.quantity.psi() {
        let v = match psi_at(&body, args.r, args.z, args.branch, ctl)? {
            Psi::Value(v) => v.to_string(),
            Psi::InsideCharge => "undefined(inside-charge)".to_string(),
        };
        out.push(format!("psi={v} {UNITS} branch={}", args.branch));
    }
    Ok(out)
}
