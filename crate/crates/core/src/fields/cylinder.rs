//! Uniformly charged solid cylinder.

use std::f64::consts::PI;

use crate::control::SeriesControl;
use crate::elliptic::{ellip_e, ellip_f, ellip_pi};
use crate::error::{domain, Error, Result};
use crate::hypergeom::ihyg::{i_hyg, i_hyg_pi_exact, IhygArgs};

use super::aux::{AuxGeometry, Branch};
use super::{heaviside, sgn, CylinderSpec, Psi, AXIS_REL, EDGE_REL, Z_ZERO_REL};

fn z_negligible(g: &AuxGeometry) -> bool {
    g.z.abs() < Z_ZERO_REL * (g.r + g.r0)
}

fn check_ring(r: f64, theta: f64, r0: f64) -> Result<()> {
    if !(r > 0.0 && r0 > 0.0) {
        return Err(domain("cylinder integral", "radii must be positive"));
    }
    if !(theta.is_finite() && theta.abs() <= PI) {
        return Err(domain("cylinder integral", format!("theta = {theta} outside [-pi, pi]")));
    }
    Ok(())
}

/// (r^2/2) I(m, A; theta).
pub fn i_cyl_hyg(r: f64, theta: f64, z: f64, r0: f64, ctl: &SeriesControl) -> Result<f64> {
    let g = AuxGeometry::new(r, z, r0)?;
    let i = if theta.abs() == PI {
        theta.signum() * i_hyg_pi_exact(g.m, g.m_complement, g.a, g.gap, ctl)?
    } else {
        i_hyg(IhygArgs::new(g.m, g.a, theta), ctl)?
    };
    Ok(0.5 * r * r * i)
}

/// Elementary part of the triple antiderivative of r/L; zero at theta = pi.
pub fn i_cyl_trig(r: f64, theta: f64, z: f64, r0: f64) -> Result<f64> {
    check_ring(r, theta, r0)?;
    let g = AuxGeometry::new(r, z, r0)?;
    let l = g.l(theta);
    let (s, c) = theta.sin_cos();
    let w = r + r0 * c;
    Ok(-r0 * r0 * (2.0 * theta).sin() / 4.0 * (z / l).atanh() - z * r0 * s * (w / l).atanh()
        + r0 * r0 * (2.0 * theta).cos() / 4.0 * (l * r0 * s / (z * w)).atan())
}

/// Elementary part of the antiderivative of the ψ kernel; zero at theta = pi.
pub fn j_cyl_trig(r: f64, theta: f64, z: f64, r0: f64) -> Result<f64> {
    check_ring(r, theta, r0)?;
    let g = AuxGeometry::new(r, z, r0)?;
    let l = g.l(theta);
    let (s, c) = theta.sin_cos();
    let w = r + r0 * c;
    let r03 = r0 * r0 * r0;
    Ok(((3.0 * r03 - 4.0 * r0 * z * z) * s - r03 * (3.0 * theta).sin()) / 8.0 * (w / l).atanh()
        - r0 * r0 * z * (2.0 * theta).sin() / 2.0 * (z / l).atanh()
        + r0 * r0 * z * (2.0 * theta).cos() / 2.0 * (l * r0 * s / (z * w)).atan()
        + l * r0 * s * (-r + 3.0 * r0 * c) / 6.0)
}

// The elliptic integrals at amplitude theta/2 needed by both ell parts.
struct EllipticSet {
    f: f64,
    e: f64,
    // ((r - r0)/(r + r0)) Pi(4 r r0/(r + r0)^2; .|m)
    diag: f64,
    // sum of prefactor * Pi(n_alpha; .|m); zero when z is negligible
    branch: f64,
}

fn elliptic_set(g: &AuxGeometry, theta: f64) -> Result<EllipticSet> {
    let zero_z = z_negligible(g);
    if theta.abs() == PI {
        let sign = theta.signum();
        return Ok(EllipticSet {
            f: sign * g.k()?,
            e: sign * g.e()?,
            diag: sign * g.diagonal_pi_term()?,
            branch: if zero_z { 0.0 } else { sign * g.branch_sum()? },
        });
    }
    let phi = 0.5 * theta;
    let ratio = (g.r - g.r0) / (g.r + g.r0);
    let diag = if ratio == 0.0 {
        0.0
    } else {
        ratio * ellip_pi(g.diagonal_characteristic(), phi, g.m)?
    };
    let branch = if zero_z {
        0.0
    } else {
        let mut s = 0.0;
        for b in [Branch::Plus, Branch::Minus] {
            s += g.prefactor(b) * ellip_pi(g.n(b), phi, g.m)?;
        }
        s
    };
    Ok(EllipticSet {
        f: ellip_f(phi, g.m)?,
        e: ellip_e(phi, g.m)?,
        diag,
        branch,
    })
}

fn i_ell_from(g: &AuxGeometry, s: &EllipticSet) -> f64 {
    if z_negligible(g) {
        return 0.0;
    }
    let (r, z, r0, l0) = (g.r, g.z, g.r0, g.l0);
    -3.0 * z * (r0 * r0 + z * z) / (4.0 * l0) * s.f + 3.0 * z * l0 / 4.0 * s.e + z * r * r / (4.0 * l0) * s.diag
        + z * (2.0 * z * z - r0 * r0) / (4.0 * l0) * s.branch
}

fn j_ell_from(g: &AuxGeometry, s: &EllipticSet) -> f64 {
    let (r, r0, l0) = (g.r, g.r0, g.l0);
    let z = if z_negligible(g) { 0.0 } else { g.z };
    let z2 = z * z;
    let d = r * r - r0 * r0;
    let mut v = l0 * (z2 - 2.0 * (r * r + r0 * r0)) / 6.0 * s.e
        + (2.0 * d * d + z2 * (r0 * r0 - 2.0 * r * r - z2)) / (6.0 * l0) * s.f;
    if z != 0.0 {
        v += z2 * r * r / (2.0 * l0) * s.diag - r0 * r0 * z2 / (2.0 * l0) * s.branch;
    }
    v
}

/// Elliptic part of the triple antiderivative of r/L.
pub fn i_cyl_ell(r: f64, theta: f64, z: f64, r0: f64) -> Result<f64> {
    check_ring(r, theta, r0)?;
    let g = AuxGeometry::new(r, z, r0)?;
    Ok(i_ell_from(&g, &elliptic_set(&g, theta)?))
}

/// Elliptic part of the antiderivative of the ψ kernel.
pub fn j_cyl_ell(r: f64, theta: f64, z: f64, r0: f64) -> Result<f64> {
    check_ring(r, theta, r0)?;
    let g = AuxGeometry::new(r, z, r0)?;
    Ok(j_ell_from(&g, &elliptic_set(&g, theta)?))
}

/// The three pieces of φ for the cylinder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderPhiParts {
    pub hyg: f64,
    pub ell: f64,
    pub corr: f64,
}

impl CylinderPhiParts {
    pub fn total(&self) -> f64 {
        self.hyg + self.ell + self.corr
    }
}

fn check_point(r: f64, z: f64, spec: &CylinderSpec) -> Result<()> {
    if !(r.is_finite() && z.is_finite()) || r < 0.0 {
        return Err(domain("cylinder", format!("observation point ({r}, {z}) needs r >= 0")));
    }
    if (r - spec.radius).hypot(z.abs() - spec.half_height) < EDGE_REL * spec.radius {
        return Err(Error::EdgeProximity { r, z });
    }
    Ok(())
}

/// φ split into its hypergeometric, elliptic and correction pieces.
pub fn phi_cyl_parts(r: f64, z: f64, spec: &CylinderSpec, ctl: &SeriesControl) -> Result<CylinderPhiParts> {
    check_point(r, z, spec)?;
    let (big_r, big_z, rho) = (spec.radius, spec.half_height, spec.density);
    let mut hyg = 0.0;
    let mut ell = 0.0;
    for beta in [1.0, -1.0] {
        let g = AuxGeometry::new(big_r, beta * big_z - z, r)?;
        if z_negligible(&g) {
            // A = 0 and every elliptic term carries a z factor
            continue;
        }
        hyg += 2.0 * beta * 0.5 * big_r * big_r * i_hyg_pi_exact(g.m, g.m_complement, g.a, g.gap, ctl)?;
        ell += 2.0 * beta * i_ell_from(&g, &elliptic_set(&g, PI)?);
    }
    let corr = PI * rho * (r * r * heaviside(r - big_r) - 2.0 * (z * z + big_z * big_z)) * heaviside(big_z - z.abs())
        - 4.0 * PI * rho * big_z * z.abs() * heaviside(z.abs() - big_z);
    Ok(CylinderPhiParts {
        hyg: rho * hyg,
        ell: rho * ell,
        corr,
    })
}

// 2π ρ0 [G(z + Z) - G(z - Z)], the potential on the axis
fn phi_cyl_axis(z: f64, spec: &CylinderSpec) -> f64 {
    let big_r = spec.radius;
    let g = |u: f64| 0.5 * (u * (big_r * big_r + u * u).sqrt() + big_r * big_r * (u / big_r).asinh()) - 0.5 * u * u.abs();
    2.0 * PI * spec.density * (g(z + spec.half_height) - g(z - spec.half_height))
}

/// Potential φ of the cylinder at `(r, z)`.
pub fn phi_cyl(r: f64, z: f64, spec: &CylinderSpec, ctl: &SeriesControl) -> Result<f64> {
    check_point(r, z, spec)?;
    if r < AXIS_REL * spec.radius {
        return Ok(phi_cyl_axis(z, spec));
    }
    Ok(phi_cyl_parts(r, z, spec, ctl)?.total())
}

/// Field-line potential ψ of the cylinder; the marker inside the closed solid.
pub fn psi_cyl(r: f64, z: f64, spec: &CylinderSpec, _ctl: &SeriesControl) -> Result<Psi> {
    check_point(r, z, spec)?;
    if spec.contains(r, z) {
        return Ok(Psi::InsideCharge);
    }
    let (big_r, big_z, rho) = (spec.radius, spec.half_height, spec.density);
    if r < AXIS_REL * big_r {
        return Ok(Psi::Value(spec.total_charge() * sgn(z)));
    }
    let mut ell = 0.0;
    for beta in [1.0, -1.0] {
        let g = AuxGeometry::new(big_r, beta * big_z - z, r)?;
        ell += 2.0 * beta * j_ell_from(&g, &elliptic_set(&g, PI)?);
    }
    let corr = -2.0 * PI * rho * r * r * z * heaviside(big_z - z.abs())
        + 2.0 * PI * rho * big_z * sgn(z) * (-r * r + big_r * big_r * heaviside(big_r - r)) * heaviside(z.abs() - big_z);
    Ok(Psi::Value(rho * ell + corr))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    fn reference_cylinder() -> CylinderSpec {
        CylinderSpec::new(1.0, 0.7, 1.0).unwrap()
    }

    // mpmath: 3-D quadrature of the Coulomb integral and of the ψ kernel
    #[test]
    fn reference_points() {
        let c = ctl();
        let s = reference_cylinder();
        let phi = phi_cyl(1.5, 0.3, &s, &c).unwrap();
        assert!((phi - 2.91176150833313).abs() < 1e-11, "{phi}");
        let psi = psi_cyl(1.5, 0.3, &s, &c).unwrap().value().unwrap();
        assert!((psi - 0.8840207581183).abs() < 1e-11, "{psi}");
        let s = CylinderSpec::new(1.3, 0.7, 1.0).unwrap();
        let phi = phi_cyl(0.5, 1.2, &s, &c).unwrap();
        let psi = psi_cyl(0.5, 1.2, &s, &c).unwrap().value().unwrap();
        assert!((phi - 5.05145240866).abs() < 1e-9);
        assert!((psi - 7.0597218127).abs() < 1e-9);
        let phi = phi_cyl(2.0, -1.5, &s, &c).unwrap();
        let psi = psi_cyl(2.0, -1.5, &s, &c).unwrap().value().unwrap();
        assert!((phi - 2.96887309015).abs() < 1e-9);
        assert!((psi + 4.639045523).abs() < 1e-8);
    }

    #[test]
    fn inside_marker_and_edge() {
        let s = reference_cylinder();
        assert_eq!(psi_cyl(0.5, 0.0, &s, &ctl()).unwrap(), Psi::InsideCharge);
        assert_eq!(psi_cyl(1.0, 0.7, &s, &ctl()).err(), Some(Error::EdgeProximity { r: 1.0, z: 0.7 }));
        assert!(phi_cyl(1.0, -0.7, &s, &ctl()).is_err());
    }

    #[test]
    fn axis_route_matches_generic_assembly() {
        let s = reference_cylinder();
        for &z in &[0.0, 0.3, 1.5, -4.0] {
            let axis = phi_cyl(0.0, z, &s, &ctl()).unwrap();
            let near = phi_cyl_parts(1e-7, z, &s, &ctl()).unwrap().total();
            assert!((axis - near).abs() < 1e-9, "{z}: {axis} vs {near}");
        }
    }

    #[test]
    fn continuous_across_side_and_caps() {
        let s = reference_cylinder();
        let c = ctl();
        for &(r, z, dr, dz) in &[(1.0, 0.3, 1e-9, 0.0), (0.4, 0.7, 0.0, 1e-9)] {
            let a = phi_cyl(r - dr, z - dz, &s, &c).unwrap();
            let on = phi_cyl(r, z, &s, &c).unwrap();
            let b = phi_cyl(r + dr, z + dz, &s, &c).unwrap();
            assert!((a - on).abs() < 1e-7 && (b - on).abs() < 1e-7, "{a} {on} {b}");
        }
    }

    #[test]
    fn trig_parts_vanish_at_half_turn() {
        assert!(i_cyl_trig(1.2, PI, 0.4, 0.8).unwrap().abs() < 1e-15);
        assert!(j_cyl_trig(1.2, PI, 0.4, 0.8).unwrap().abs() < 1e-15);
    }

    // third mixed difference of the antiderivatives against the integrands
    #[test]
    fn antiderivatives_reproduce_integrands() {
        let (r, th, z, r0) = (1.1, 1.3, 0.6, 0.8);
        let h = 2e-3;
        let c = ctl();
        let i = |r: f64, th: f64, z: f64| {
            i_cyl_trig(r, th, z, r0).unwrap() + i_cyl_ell(r, th, z, r0).unwrap() + i_cyl_hyg(r, th, z, r0, &c).unwrap()
        };
        let j = |r: f64, th: f64, z: f64| j_cyl_trig(r, th, z, r0).unwrap() + j_cyl_ell(r, th, z, r0).unwrap();
        let mixed = |f: &dyn Fn(f64, f64, f64) -> f64| {
            let mut s = 0.0;
            for (a, sa) in [(1.0, 1.0), (-1.0, -1.0)] {
                for (b, sb) in [(1.0, 1.0), (-1.0, -1.0)] {
                    for (d, sd) in [(1.0, 1.0), (-1.0, -1.0)] {
                        s += sa * sb * sd * f(r + a * h, th + b * h, z + d * h);
                    }
                }
            }
            s / (8.0 * h * h * h)
        };
        let l = AuxGeometry::new(r, z, r0).unwrap().l(th);
        let want_i = r / l;
        let want_j = -r0 * z * (r0 + r * th.cos()) * r / (l * (l * l - z * z));
        assert!((mixed(&i) - want_i).abs() < 1e-5, "{} vs {want_i}", mixed(&i));
        assert!((mixed(&j) - want_j).abs() < 1e-5, "{} vs {want_j}", mixed(&j));
    }
}
