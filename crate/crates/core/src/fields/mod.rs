//! Closed-form potentials φ and field-line potentials ψ of uniformly
//! charged bodies, in units with 4πε0 = 1.

pub mod aux;
pub mod cylinder;
pub mod disk;
pub mod point;
pub mod tube;

use crate::error::{Error, Result};

pub use aux::{pi_identity_residual, AuxGeometry, Branch};
pub use cylinder::{
    i_cyl_ell, i_cyl_hyg, i_cyl_trig, j_cyl_ell, j_cyl_trig, phi_cyl, phi_cyl_parts, psi_cyl, CylinderPhiParts,
};
pub use disk::{phi_disk, DiskForm};
pub use point::{psi_point, psi_point_charges};
pub use tube::{i_tube, j_tube, phi_tube, psi_tube, topological_charge};

/// Terms with a `z` or `z^2` prefactor vanish below this multiple of the
/// radial scale.
pub const Z_ZERO_REL: f64 = 1e-12;
/// Observation radii below this multiple of the body radius count as the axis.
pub const AXIS_REL: f64 = 1e-12;
/// Exclusion radius around edge circles, relative to the body radius.
pub const EDGE_REL: f64 = 1e-9;
/// Tolerance for "on the charged sheet", relative to the body radius.
pub const SURFACE_REL: f64 = 1e-12;

/// Heaviside step with H(0) = 1/2.
pub fn heaviside(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        0.0
    } else {
        0.5
    }
}

/// sgn with sgn(0) = 0.
pub fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Solid cylinder `r <= radius`, `|z| <= half_height` with uniform volume density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderSpec {
    pub radius: f64,
    pub half_height: f64,
    pub density: f64,
}

/// Thin tube `r = radius`, `|z| <= half_height` with uniform surface density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeSpec {
    pub radius: f64,
    pub half_height: f64,
    pub density: f64,
}

/// Thin disk `r <= radius`, `z = 0` with uniform surface density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskSpec {
    pub radius: f64,
    pub density: f64,
}

fn check_body(radius: f64, half_height: f64, density: f64) -> Result<()> {
    if !(radius.is_finite() && radius > 0.0 && half_height.is_finite() && half_height > 0.0 && density.is_finite()) {
        return Err(Error::DegenerateGeometry(format!(
            "radius {radius} and half-height {half_height} must be finite and positive, density finite"
        )));
    }
    Ok(())
}

impl CylinderSpec {
    pub fn new(radius: f64, half_height: f64, density: f64) -> Result<Self> {
        check_body(radius, half_height, density)?;
        Ok(CylinderSpec {
            radius,
            half_height,
            density,
        })
    }

    pub fn total_charge(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.radius * self.radius * self.half_height * self.density
    }

    /// Closed solid, boundary included.
    pub fn contains(&self, r: f64, z: f64) -> bool {
        r <= self.radius && z.abs() <= self.half_height
    }
}

impl TubeSpec {
    pub fn new(radius: f64, half_height: f64, density: f64) -> Result<Self> {
        check_body(radius, half_height, density)?;
        Ok(TubeSpec {
            radius,
            half_height,
            density,
        })
    }

    pub fn total_charge(&self) -> f64 {
        4.0 * std::f64::consts::PI * self.radius * self.half_height * self.density
    }
}

impl DiskSpec {
    pub fn new(radius: f64, density: f64) -> Result<Self> {
        check_body(radius, 1.0, density)?;
        Ok(DiskSpec { radius, density })
    }

    pub fn total_charge(&self) -> f64 {
        std::f64::consts::PI * self.radius * self.radius * self.density
    }
}

/// Field-line potential value, or the marker for points inside the charge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Psi {
    Value(f64),
    InsideCharge,
}

impl Psi {
    pub fn value(self) -> Option<f64> {
        match self {
            Psi::Value(v) => Some(v),
            Psi::InsideCharge => None,
        }
    }
}

/// φ and ψ at one observation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub phi: f64,
    pub psi: Psi,
    pub branch: i64,
}

/// A charged body, for code that handles all shapes uniformly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Body {
    Cylinder(CylinderSpec),
    Tube(TubeSpec),
    Disk(DiskSpec),
}

impl Body {
    pub fn total_charge(&self) -> f64 {
        match self {
            Body::Cylinder(c) => c.total_charge(),
            Body::Tube(t) => t.total_charge(),
            Body::Disk(d) => d.total_charge(),
        }
    }

    pub fn radius(&self) -> f64 {
        match self {
            Body::Cylinder(c) => c.radius,
            Body::Tube(t) => t.radius,
            Body::Disk(d) => d.radius,
        }
    }

    /// φ at `(r, z)`.
    pub fn phi(&self, r: f64, z: f64, ctl: &crate::SeriesControl) -> Result<f64> {
        match self {
            Body::Cylinder(c) => phi_cyl(r, z, c, ctl),
            Body::Tube(t) => phi_tube(r, z, t, ctl),
            Body::Disk(d) => phi_disk(r, z, d, DiskForm::Compact),
        }
    }

    /// φ, ψ and branch at `(r, z)`. ψ is not provided for the disk.
    pub fn sample(&self, r: f64, z: f64, branch: i64, ctl: &crate::SeriesControl) -> Result<FieldSample> {
        let phi = self.phi(r, z, ctl)?;
        let (psi, branch) = match self {
            Body::Cylinder(c) => (psi_cyl(r, z, c, ctl)?, 0),
            Body::Tube(t) => (Psi::Value(psi_tube(r, z, t, branch, ctl)?), branch),
            Body::Disk(_) => {
                return Err(crate::error::domain("sample", "psi is not implemented for the disk"));
            }
        };
        Ok(FieldSample { phi, psi, branch })
    }
}
