//! Point charges on the axis.

use crate::error::{domain, Error, Result};

use super::sgn;

/// ψ = q z' / sqrt(r^2 + z'^2) with z' = z - z_offset.
pub fn psi_point(r: f64, z: f64, q: f64, z_offset: f64) -> Result<f64> {
    if !(r.is_finite() && z.is_finite() && q.is_finite() && z_offset.is_finite()) || r < 0.0 {
        return Err(domain("psi_point", "arguments must be finite with r >= 0"));
    }
    let dz = z - z_offset;
    if r == 0.0 {
        if dz == 0.0 {
            return Err(Error::CoincidentPoint);
        }
        return Ok(q * sgn(dz));
    }
    Ok(q * dz / r.hypot(dz))
}

/// Superposition of `psi_point` over `(charge, z_offset)` pairs.
pub fn psi_point_charges(r: f64, z: f64, charges: &[(f64, f64)]) -> Result<f64> {
    charges.iter().map(|&(q, off)| psi_point(r, z, q, off)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_charge() {
        assert_eq!(psi_point(0.0, 1.0, 1.0, 0.0).unwrap(), 1.0);
        assert_eq!(psi_point(1.0, 0.0, 1.0, 0.0).unwrap(), 0.0);
        assert_eq!(psi_point(0.0, 2.0, 1.0, 2.0), Err(Error::CoincidentPoint));
    }

    #[test]
    fn dipole_superposition() {
        let (a, r, z) = (0.5, 1.2, 0.3);
        let v = psi_point_charges(r, z, &[(1.0, a), (-1.0, -a)]).unwrap();
        let want = (z - a) / r.hypot(z - a) - (z + a) / r.hypot(z + a);
        assert!((v - want).abs() < 1e-15);
    }
}
