//! Uniformly charged thin disk, in two equivalent closed forms.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

use super::aux::AuxGeometry;
use super::{heaviside, DiskSpec, AXIS_REL, EDGE_REL, Z_ZERO_REL};

/// Which closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskForm {
    /// Single Pi term with characteristic 4rR/(r+R)^2.
    Compact,
    /// Two Pi terms with the characteristics n_plus, n_minus.
    Cylindrical,
}

/// Potential of the disk at `(r, z)`.
pub fn phi_disk(r: f64, z: f64, spec: &DiskSpec, form: DiskForm) -> Result<f64> {
    if !(r.is_finite() && z.is_finite()) || r < 0.0 {
        return Err(domain("phi_disk", format!("observation point ({r}, {z}) needs r >= 0")));
    }
    let (big_r, sigma) = (spec.radius, spec.density);
    if (r - big_r).hypot(z) < EDGE_REL * big_r {
        return Err(Error::EdgeProximity { r, z });
    }
    if r < AXIS_REL * big_r {
        return Ok(2.0 * PI * sigma * ((big_r * big_r + z * z).sqrt() - z.abs()));
    }
    let g = AuxGeometry::new(big_r, z, r)?;
    let zero_z = z.abs() < Z_ZERO_REL * (big_r + r);
    let l0 = g.l0;
    let (k, e) = (g.k()?, g.e()?);
    let v = match form {
        DiskForm::Cylindrical => {
            let tail = if zero_z { 0.0 } else { z * z * g.branch_sum()? };
            2.0 / l0 * (l0 * l0 * e + (big_r * big_r - r * r - z * z) * k + tail) - 2.0 * PI * z.abs()
        }
        DiskForm::Compact => {
            let tail = if zero_z { 0.0 } else { z * z * g.diagonal_pi_term()? };
            2.0 / l0 * (l0 * l0 * e + (big_r * big_r - r * r) * k + tail) - 2.0 * PI * z.abs() * heaviside(big_r - r)
        }
    };
    Ok(sigma * v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> DiskSpec {
        DiskSpec::new(1.0, 1.0).unwrap()
    }

    // mpmath 2-D quadrature of σ ∬ r' dr' dθ / L
    #[test]
    fn reference_points() {
        for form in [DiskForm::Compact, DiskForm::Cylindrical] {
            let v = phi_disk(1.3, 0.4, &unit(), form).unwrap();
            assert!((v - 2.4250626624705).abs() < 1e-12, "{form:?}: {v}");
            let v = phi_disk(0.5, 0.4, &unit(), form).unwrap();
            assert!((v - 3.9364296373086484).abs() < 1e-12, "{form:?}: {v}");
        }
    }

    #[test]
    fn axis_and_edge() {
        let v = phi_disk(0.0, 0.5, &unit(), DiskForm::Cylindrical).unwrap();
        assert!((v - 2.0 * PI * (1.25f64.sqrt() - 0.5)).abs() < 1e-15);
        assert!(matches!(phi_disk(1.0, 0.0, &unit(), DiskForm::Compact), Err(Error::EdgeProximity { .. })));
        let inside = phi_disk(0.5, 0.0, &unit(), DiskForm::Cylindrical).unwrap();
        let lb = phi_disk(0.5, 0.0, &unit(), DiskForm::Compact).unwrap();
        assert_eq!(inside, lb);
    }
}
