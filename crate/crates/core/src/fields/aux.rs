//! Geometry shared by the ring, tube, cylinder and disk kernels.

use std::f64::consts::PI;

use crate::elliptic::{carlson_rd, carlson_rf, comp_pi_complement};
use crate::error::{Error, Result};

use super::{heaviside, sgn};

/// Sign of the `n_plus` / `n_minus` branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Derived quantities for the kernel `1/L` with
/// `L = sqrt(r^2 + r0^2 + 2 r r0 cos(theta) + z^2)`.
///
/// `r` is the integration radius and `r0` the second radius; in the field
/// assemblies these are the source radius and the observation radius.
/// Complements such as `1 - m` are stored separately because they are exact
/// ratios of squares and lose accuracy when formed by subtraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxGeometry {
    pub r: f64,
    pub z: f64,
    pub r0: f64,
    /// sqrt((r + r0)^2 + z^2)
    pub l0: f64,
    /// 4 r r0 / l0^2
    pub m: f64,
    /// 1 - m
    pub m_complement: f64,
    /// z / l0
    pub a: f64,
    /// 1 - m - a^2 = (r - r0)^2 / l0^2
    pub gap: f64,
    pub n_plus: f64,
    pub n_minus: f64,
    /// 1 - n_plus
    pub n_plus_complement: f64,
    /// sgn(sqrt(r0^2 + z^2) - r)
    pub s_plus: f64,
    /// sgn(sqrt(r0^2 + z^2) + r)
    pub s_minus: f64,
}

impl AuxGeometry {
    pub fn new(r: f64, z: f64, r0: f64) -> Result<Self> {
        if !(r.is_finite() && z.is_finite() && r0.is_finite()) || r < 0.0 || r0 < 0.0 {
            return Err(Error::DegenerateGeometry(format!(
                "radii must be finite and nonnegative, got r = {r}, r0 = {r0}"
            )));
        }
        if r == 0.0 && r0 == 0.0 && z == 0.0 {
            return Err(Error::DegenerateGeometry("r = r0 = z = 0".into()));
        }
        let l0_sq = (r + r0) * (r + r0) + z * z;
        let l0 = l0_sq.sqrt();
        let dr = r - r0;
        let q = (r0 * r0 + z * z).sqrt();
        let (n_plus, n_plus_complement, n_minus) = if z == 0.0 {
            (1.0, 0.0, f64::NEG_INFINITY)
        } else if r0 == 0.0 {
            (0.0, 1.0, 0.0)
        } else {
            let d = q + r0;
            (2.0 * r0 / d, z * z / (d * d), -2.0 * r0 * d / (z * z))
        };
        Ok(AuxGeometry {
            r,
            z,
            r0,
            l0,
            m: 4.0 * r * r0 / l0_sq,
            m_complement: (dr * dr + z * z) / l0_sq,
            a: z / l0,
            gap: dr * dr / l0_sq,
            n_plus,
            n_minus,
            n_plus_complement,
            s_plus: sgn(q - r),
            s_minus: sgn(q + r),
        })
    }

    /// Kernel distance L at angle `theta`.
    pub fn l(&self, theta: f64) -> f64 {
        (self.r * self.r + self.r0 * self.r0 + 2.0 * self.r * self.r0 * theta.cos() + self.z * self.z).sqrt()
    }

    pub fn n(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Plus => self.n_plus,
            Branch::Minus => self.n_minus,
        }
    }

    /// 1 - (n/2)(1 + r/r0).
    pub fn prefactor(&self, branch: Branch) -> f64 {
        1.0 - 0.5 * self.n(branch) * (1.0 + self.r / self.r0)
    }

    /// (l0 / 2 r0) s sqrt(n (n - m)), equal to `prefactor`.
    pub fn prefactor_alt(&self, branch: Branch) -> f64 {
        let (n, s) = match branch {
            Branch::Plus => (self.n_plus, self.s_plus),
            Branch::Minus => (self.n_minus, self.s_minus),
        };
        // n - m = 2 r0 (q -+ r)^2 / ((r0 +- q) l0^2), free of cancellation
        let q = self.r0.hypot(self.z);
        let (d, w) = match branch {
            Branch::Plus => (q - self.r, self.r0 + q),
            Branch::Minus => (q + self.r, self.r0 - q),
        };
        let n_minus_m = 2.0 * self.r0 * d * d / (w * self.l0 * self.l0);
        self.l0 / (2.0 * self.r0) * s * (n * n_minus_m).sqrt()
    }

    /// K(m).
    pub fn k(&self) -> Result<f64> {
        carlson_rf(0.0, self.m_complement, 1.0)
    }

    /// E(m).
    pub fn e(&self) -> Result<f64> {
        if self.m_complement == 0.0 {
            return Ok(1.0);
        }
        let y = self.m_complement;
        Ok(carlson_rf(0.0, y, 1.0)? - self.m / 3.0 * carlson_rd(0.0, y, 1.0)?)
    }

    /// Characteristic 4 r r0 / (r + r0)^2 of the diagonal Pi term.
    pub fn diagonal_characteristic(&self) -> f64 {
        4.0 * self.r * self.r0 / ((self.r + self.r0) * (self.r + self.r0))
    }

    /// ((r - r0)/(r + r0)) Pi(4 r r0/(r + r0)^2 | m).
    ///
    /// The one-sided limits at r = r0 are opposite, so the value there is
    /// taken as their mean, zero.
    pub fn diagonal_pi_term(&self) -> Result<f64> {
        let dr = self.r - self.r0;
        if dr == 0.0 {
            return Ok(0.0);
        }
        let ratio = dr / (self.r + self.r0);
        let n = self.diagonal_characteristic();
        Ok(ratio * comp_pi_complement(n, ratio * ratio, self.m, self.m_complement)?)
    }

    /// Pi(n_alpha | m).
    pub fn pi_branch(&self, branch: Branch) -> Result<f64> {
        match branch {
            Branch::Plus => comp_pi_complement(self.n_plus, self.n_plus_complement, self.m, self.m_complement),
            Branch::Minus => comp_pi_complement(self.n_minus, 1.0 - self.n_minus, self.m, self.m_complement),
        }
    }

    /// Sum over both branches of prefactor times Pi(n_alpha | m).
    ///
    /// Needs `r0 > 0` and `z != 0`; on the axis the closed right-hand side of
    /// the identity is used, which is the limit of the sum.
    pub fn branch_sum(&self) -> Result<f64> {
        if self.r0 == 0.0 {
            return self.branch_sum_identity();
        }
        if self.z == 0.0 {
            return Err(Error::SingularCharacteristic {
                func: "branch_sum",
                value: 1.0,
            });
        }
        let mut s = 0.0;
        for b in [Branch::Plus, Branch::Minus] {
            s += self.prefactor(b) * self.pi_branch(b)?;
        }
        Ok(s)
    }

    /// K(m) + ((r - r0)/(r + r0)) Pi(4 r r0/(r + r0)^2 | m) + (pi l0/|z|) H(r0 - r).
    pub fn branch_sum_identity(&self) -> Result<f64> {
        if self.z == 0.0 {
            return Err(Error::SingularCharacteristic {
                func: "branch_sum",
                value: 1.0,
            });
        }
        Ok(self.k()? + self.diagonal_pi_term()? + PI * self.l0 / self.z.abs() * heaviside(self.r0 - self.r))
    }
}

/// |direct branch sum - closed right-hand side| for the identity between the
/// two branch-Pi terms and K plus the diagonal Pi term.
pub fn pi_identity_residual(r: f64, r0: f64, z: f64) -> Result<f64> {
    if z == 0.0 {
        return Err(crate::error::domain("pi_identity_residual", "z must be nonzero"));
    }
    if r == r0 {
        return Err(crate::error::domain("pi_identity_residual", "r must differ from r0"));
    }
    if r0 <= 0.0 {
        return Err(crate::error::domain("pi_identity_residual", "r0 must be positive"));
    }
    let g = AuxGeometry::new(r, z, r0)?;
    Ok((g.branch_sum()? - g.branch_sum_identity()?).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_point() {
        let g = AuxGeometry::new(0.0, 1.0, 1.0).unwrap();
        assert_eq!(g.m, 0.0);
        assert!((g.a - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!((g.n_plus - 2.0 / (1.0 + 2f64.sqrt())).abs() < 1e-15);
        assert!(AuxGeometry::new(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn boundary_identity_at_equal_radii() {
        let g = AuxGeometry::new(1.0, 0.7, 1.0).unwrap();
        assert!((g.m + g.a * g.a - 1.0).abs() < 1e-15);
        assert_eq!(g.gap, 0.0);
    }

    #[test]
    fn characteristic_ranges() {
        let g = AuxGeometry::new(0.8, 0.3, 1.4).unwrap();
        assert!(g.n_plus > 0.0 && g.n_plus < 1.0);
        assert!(g.n_minus < 0.0);
        assert!((g.n_plus_complement - (1.0 - g.n_plus)).abs() < 1e-15);
    }

    #[test]
    fn alternate_prefactor() {
        for &(r, z, r0) in &[(0.8, 0.3, 1.4), (2.0, -1.1, 0.5), (1.0, 0.01, 1.0), (3.0, 4.0, 0.2)] {
            let g = AuxGeometry::new(r, z, r0).unwrap();
            for b in [Branch::Plus, Branch::Minus] {
                let d = g.prefactor(b) - g.prefactor_alt(b);
                assert!(d.abs() < 1e-12 * g.prefactor(b).abs().max(1.0), "{r} {z} {r0} {b:?}");
            }
        }
    }

    // mpmath, 20 digits
    #[test]
    fn identity_reference_values() {
        let g = AuxGeometry::new(2.0, 0.5, 1.0).unwrap();
        assert!((g.branch_sum().unwrap() - 5.58155037472129).abs() < 1e-12);
        let g = AuxGeometry::new(1.0, 0.5, 2.0).unwrap();
        assert!((g.branch_sum().unwrap() - 18.40268539).abs() < 1e-7);
        assert!(pi_identity_residual(2.0, 1.0, 0.5).unwrap() < 1e-12);
        assert!(pi_identity_residual(1.0, 2.0, 0.5).unwrap() < 1e-12);
        assert!(pi_identity_residual(1.0, 1.0, 0.5).is_err());
    }
}
