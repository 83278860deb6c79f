//! Brute-force source integrals for φ and ψ.
//!
//! These integrate the Coulomb kernel over the charge directly and share no
//! code with the closed forms beyond the quadrature rule.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::fields::{heaviside, sgn, Body, CylinderSpec, DiskSpec, TubeSpec};

use super::quad::{quad_1d, quad_2d, quad_3d, QuadratureSpec};

/// Minimum distance from the charge, relative to the body radius, at which
/// the brute-force integrals are trusted.
pub const MIN_CLEARANCE: f64 = 0.05;

fn dist_to_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let t = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
    (p.0 - a.0 - t * dx).hypot(p.1 - a.1 - t * dy)
}

/// Distance from `(r, z)` to the charge support in the meridian half plane.
pub fn clearance(body: &Body, r: f64, z: f64) -> f64 {
    match body {
        Body::Cylinder(c) => {
            let dr = (r - c.radius).max(0.0);
            let dz = (z.abs() - c.half_height).max(0.0);
            if dr == 0.0 && dz == 0.0 {
                -(c.radius - r).min(c.half_height - z.abs())
            } else {
                dr.hypot(dz)
            }
        }
        Body::Tube(t) => dist_to_segment((r, z), (t.radius, -t.half_height), (t.radius, t.half_height)),
        Body::Disk(d) => dist_to_segment((r, z), (0.0, 0.0), (d.radius, 0.0)),
    }
}

fn check_clearance(body: &Body, r: f64, z: f64) -> Result<()> {
    if !(r >= 0.0 && z.is_finite()) {
        return Err(domain("brute", format!("bad point ({r}, {z})")));
    }
    let c = clearance(body, r, z);
    if c < MIN_CLEARANCE * body.radius() {
        return Err(domain(
            "brute",
            format!("point ({r}, {z}) has clearance {c}, below {MIN_CLEARANCE} R"),
        ));
    }
    Ok(())
}

fn coulomb(r: f64, z: f64, rs: f64, zs: f64, theta: f64) -> f64 {
    1.0 / (r * r + rs * rs + 2.0 * r * rs * theta.cos() + (z - zs) * (z - zs)).sqrt()
}

/// φ of the solid cylinder by 3-D quadrature of ρ dV / L.
pub fn brute_phi_cylinder(r: f64, z: f64, spec: &CylinderSpec, q: &QuadratureSpec) -> Result<f64> {
    check_clearance(&Body::Cylinder(*spec), r, z)?;
    let (big_r, big_z) = (spec.radius, spec.half_height);
    let v = quad_3d(
        |zs, rs, t| rs * coulomb(r, z, rs, zs, t),
        [(-big_z, big_z), (0.0, big_r), (0.0, PI)],
        q,
    )?;
    Ok(2.0 * spec.density * v)
}

/// φ of the tube by 2-D quadrature.
pub fn brute_phi_tube(r: f64, z: f64, spec: &TubeSpec, q: &QuadratureSpec) -> Result<f64> {
    check_clearance(&Body::Tube(*spec), r, z)?;
    let (big_r, big_z) = (spec.radius, spec.half_height);
    let v = quad_2d(|zs, t| coulomb(r, z, big_r, zs, t), [(-big_z, big_z), (0.0, PI)], q)?;
    Ok(2.0 * spec.density * big_r * v)
}

/// φ of the disk by 2-D quadrature.
pub fn brute_phi_disk(r: f64, z: f64, spec: &DiskSpec, q: &QuadratureSpec) -> Result<f64> {
    check_clearance(&Body::Disk(*spec), r, z)?;
    let v = quad_2d(|rs, t| rs * coulomb(r, z, rs, 0.0, t), [(0.0, spec.radius), (0.0, PI)], q)?;
    Ok(2.0 * spec.density * v)
}

/// Ring factor r (r + r' cos θ) / s^2 with s^2 = r^2 + r'^2 + 2 r r' cos θ.
fn ring_factor(r: f64, rs: f64, theta: f64) -> (f64, f64) {
    let c = theta.cos();
    let s2 = r * r + rs * rs + 2.0 * r * rs * c;
    (r * (r + rs * c) / s2, s2)
}

/// ∫ over z' in [-Z, Z] of (z - z') / L.
fn column(s2: f64, z: f64, big_z: f64) -> f64 {
    (s2 + (z + big_z) * (z + big_z)).sqrt() - (s2 + (z - big_z) * (z - big_z)).sqrt()
}

/// Integral over `r'` with a breakpoint at the observation radius, where
/// the θ-integrated kernel jumps.
fn radial_split<F: Fn(f64, f64) -> f64>(f: F, r: f64, r_hi: f64, q: &QuadratureSpec) -> Result<f64> {
    if r > 0.0 && r < r_hi {
        Ok(quad_2d(&f, [(0.0, r), (0.0, PI)], q)? + quad_2d(&f, [(r, r_hi), (0.0, PI)], q)?)
    } else {
        quad_2d(f, [(0.0, r_hi), (0.0, PI)], q)
    }
}

/// ψ at `(r, z)` from the field-line kernel integrated over the charge.
///
/// The kernel determines ψ only up to a constant on each coaxial ring of
/// charge. Each ring of charge `dq` and radius `r'` contributes
/// `dq sgn(z)` when `r' > r` and nothing otherwise, which is the value that
/// makes ψ tend to `Q z / sqrt(r^2 + z^2)` far away and on the axis.
pub fn brute_psi(r: f64, z: f64, body: &Body, q: &QuadratureSpec) -> Result<f64> {
    check_clearance(body, r, z)?;
    if r == 0.0 {
        // every ring encloses the axis
        return Ok(brute_psi_axis(z, body));
    }
    match body {
        Body::Cylinder(c) => {
            let (big_r, big_z, rho) = (c.radius, c.half_height, c.density);
            let v = radial_split(
                |rs, t| {
                    let (f, s2) = ring_factor(r, rs, t);
                    rs * f * column(s2, z, big_z)
                },
                r,
                big_r,
                q,
            )?;
            let inner = r.min(big_r);
            Ok(2.0 * rho * v + sgn(z) * rho * 2.0 * big_z * PI * (big_r * big_r - inner * inner))
        }
        Body::Tube(t) => {
            let (big_r, big_z, sigma) = (t.radius, t.half_height, t.density);
            let (v, _) = quad_1d(
                |th| {
                    let (f, s2) = ring_factor(r, big_r, th);
                    f * column(s2, z, big_z)
                },
                0.0,
                PI,
                q,
            )?;
            Ok(2.0 * sigma * big_r * v + sgn(z) * t.total_charge() * heaviside(big_r - r))
        }
        Body::Disk(d) => {
            let (big_r, sigma) = (d.radius, d.density);
            let v = radial_split(
                |rs, t| {
                    let (f, s2) = ring_factor(r, rs, t);
                    rs * f * z / (s2 + z * z).sqrt()
                },
                r,
                big_r,
                q,
            )?;
            let inner = r.min(big_r);
            Ok(2.0 * sigma * v + sgn(z) * sigma * PI * (big_r * big_r - inner * inner))
        }
    }
}

fn brute_psi_axis(z: f64, body: &Body) -> f64 {
    body.total_charge() * sgn(z)
}
