//! Uniformly charged thin tube (open cylindrical sheet).

use std::f64::consts::PI;

use crate::control::SeriesControl;
use crate::elliptic::{ellip_e, ellip_f, ellip_pi};
use crate::error::{domain, Error, Result};
use crate::hypergeom::ihyg::{i_hyg, i_hyg_pi_exact, IhygArgs};

use super::aux::AuxGeometry;
use super::{heaviside, sgn, TubeSpec, AXIS_REL, EDGE_REL, SURFACE_REL, Z_ZERO_REL};

/// Double antiderivative of 1/L over theta and z: I(m, A; theta).
pub fn i_tube(r: f64, theta: f64, z: f64, r0: f64, ctl: &SeriesControl) -> Result<f64> {
    let g = AuxGeometry::new(r, z, r0)?;
    if theta.abs() == PI {
        return Ok(theta.signum() * i_hyg_pi_exact(g.m, g.m_complement, g.a, g.gap, ctl)?);
    }
    i_hyg(IhygArgs::new(g.m, g.a, theta), ctl)
}

fn j_tube_geometry(g: &AuxGeometry, theta: f64) -> Result<f64> {
    let (r, r0, l0) = (g.r, g.r0, g.l0);
    let z = if g.z.abs() < Z_ZERO_REL * (r + r0) { 0.0 } else { g.z };
    let (f, e, diag) = if theta.abs() == PI {
        let s = theta.signum();
        let diag = if z == 0.0 { 0.0 } else { g.diagonal_pi_term()? };
        (s * g.k()?, s * g.e()?, s * diag)
    } else {
        let phi = 0.5 * theta;
        let ratio = (r - r0) / (r + r0);
        let diag = if z == 0.0 || ratio == 0.0 {
            0.0
        } else {
            ratio * ellip_pi(g.diagonal_characteristic(), phi, g.m)?
        };
        (ellip_f(phi, g.m)?, ellip_e(phi, g.m)?, diag)
    };
    Ok((r * r - r0 * r0) / l0 * f - l0 * e + z * z / l0 * diag)
}

/// Double antiderivative of the ψ kernel over theta and z.
pub fn j_tube(r: f64, theta: f64, z: f64, r0: f64) -> Result<f64> {
    if !(theta.is_finite() && theta.abs() <= PI) {
        return Err(domain("j_tube", format!("theta = {theta} outside [-pi, pi]")));
    }
    let g = AuxGeometry::new(r, z, r0)?;
    if g.m_complement == 0.0 {
        return Err(Error::EdgeProximity { r: r0, z });
    }
    j_tube_geometry(&g, theta)
}

/// Jump of ψ between neighbouring branches, 8π R Z σ0 = 2Q.
pub fn topological_charge(spec: &TubeSpec) -> f64 {
    8.0 * PI * spec.radius * spec.half_height * spec.density
}

fn check_point(r: f64, z: f64) -> Result<()> {
    if !(r.is_finite() && z.is_finite()) || r < 0.0 {
        return Err(domain("tube", format!("observation point ({r}, {z}) needs r >= 0")));
    }
    Ok(())
}

/// Potential φ of the tube; finite and continuous everywhere, including the sheet.
pub fn phi_tube(r: f64, z: f64, spec: &TubeSpec, ctl: &SeriesControl) -> Result<f64> {
    check_point(r, z)?;
    let (big_r, big_z, sigma) = (spec.radius, spec.half_height, spec.density);
    if r < AXIS_REL * big_r {
        return Ok(2.0 * PI * sigma * big_r * (((z + big_z) / big_r).asinh() - ((z - big_z) / big_r).asinh()));
    }
    let mut sum = 0.0;
    for beta in [1.0, -1.0] {
        let zz = beta * big_z - z;
        if zz.abs() < Z_ZERO_REL * (big_r + r) {
            continue;
        }
        let g = AuxGeometry::new(big_r, zz, r)?;
        sum += 2.0 * beta * i_hyg_pi_exact(g.m, g.m_complement, g.a, g.gap, ctl)?;
    }
    Ok(sigma * big_r * sum)
}

/// Field-line potential ψ of the tube on sheet `branch`.
///
/// Branch 0 has its cut on the disk `z = 0`, `r < R`; each branch adds the
/// topological charge.
pub fn psi_tube(r: f64, z: f64, spec: &TubeSpec, branch: i64, _ctl: &SeriesControl) -> Result<f64> {
    check_point(r, z)?;
    let (big_r, big_z, sigma) = (spec.radius, spec.half_height, spec.density);
    if (r - big_r).hypot(z.abs() - big_z) < EDGE_REL * big_r {
        return Err(Error::EdgeProximity { r, z });
    }
    if (r - big_r).abs() <= SURFACE_REL * big_r && z.abs() < big_z {
        return Err(Error::OnSurface { r, z });
    }
    let shift = branch as f64 * topological_charge(spec);
    if r < AXIS_REL * big_r {
        return Ok(spec.total_charge() * sgn(z) + shift);
    }
    let mut sum = 0.0;
    for beta in [1.0, -1.0] {
        let g = AuxGeometry::new(big_r, beta * big_z - z, r)?;
        sum += 2.0 * beta * j_tube_geometry(&g, PI)?;
    }
    let corr = 4.0 * PI * sigma * big_r * big_z * sgn(z) * heaviside(big_r - r);
    Ok(sigma * big_r * sum + corr + shift)
}
