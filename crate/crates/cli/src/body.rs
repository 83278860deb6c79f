use appellfield::fields::{Body, CylinderSpec, DiskSpec, TubeSpec};
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{usage, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BodyKind {
    Cyl,
    Tube,
    Disk,
}

/// Body flags shared by `eval` and `grid`.
#[derive(Debug, Clone, Args, Serialize, Deserialize, PartialEq)]
pub struct BodyArgs {
    #[arg(long, value_enum)]
    pub body: BodyKind,
    /// Radius.
    #[arg(long = "R")]
    #[serde(rename = "R")]
    pub radius: f64,
    /// Half-height; ignored for the disk.
    #[arg(long = "Z")]
    #[serde(rename = "Z")]
    pub half_height: Option<f64>,
    /// Volume density for the cylinder, surface density otherwise.
    #[arg(long, default_value_t = 1.0)]
    pub density: f64,
}

impl BodyArgs {
    pub fn build(&self) -> CliResult<Body> {
        let z = || {
            let name = format!("{:?}", self.body).to_lowercase();
            self.half_height
                .ok_or_else(|| usage(format!("--Z is required for --body {name}")))
        };
        Ok(match self.body {
            BodyKind::Cyl => Body::Cylinder(CylinderSpec::new(self.radius, z()?, self.density)?),
            BodyKind::Tube => Body::Tube(TubeSpec::new(self.radius, z()?, self.density)?),
            BodyKind::Disk => Body::Disk(DiskSpec::new(self.radius, self.density)?),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Phi,
    Psi,
    Both,
}

impl Quantity {
    pub fn phi(self) -> bool {
        self != Quantity::Psi
    }

    pub fn psi(self) -> bool {
        self != Quantity::Phi
    }
}

/// Branches other than 0 exist only for the tube.
pub fn check_branch(body: &Body, branch: i64) -> CliResult<()> {
    if branch != 0 && !matches!(body, Body::Tube(_)) {
        return Err(usage("--branch applies only to --body tube"));
    }
    Ok(())
}
