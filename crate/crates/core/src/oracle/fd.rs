//! Five-point finite-difference operators in the meridian half plane.

use crate::error::{Error, Result};

/// A line segment across which the probed function is not smooth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Surface {
    /// `r = r`, `z_lo <= z <= z_hi` (side of a cylinder or tube).
    Radial { r: f64, z_lo: f64, z_hi: f64 },
    /// `z = z`, `r_lo <= r <= r_hi` (cap or disk).
    Axial { z: f64, r_lo: f64, r_hi: f64 },
}

impl Surface {
    fn crossed_by(&self, r: f64, z: f64, h: f64) -> bool {
        match *self {
            Surface::Radial { r: rs, z_lo, z_hi } => {
                let horizontal = (r - h..=r + h).contains(&rs) && (z_lo..=z_hi).contains(&z);
                let vertical = r == rs && z + h >= z_lo && z - h <= z_hi;
                horizontal || vertical
            }
            Surface::Axial { z: zs, r_lo, r_hi } => {
                let vertical = (z - h..=z + h).contains(&zs) && (r_lo..=r_hi).contains(&r);
                let horizontal = z == zs && r + h >= r_lo && r - h <= r_hi;
                vertical || horizontal
            }
        }
    }
}

/// The surfaces of a solid or hollow cylinder of radius `radius` and
/// half-height `half_height`.
pub fn cylinder_surfaces(radius: f64, half_height: f64) -> Vec<Surface> {
    vec![
        Surface::Radial {
            r: radius,
            z_lo: -half_height,
            z_hi: half_height,
        },
        Surface::Axial {
            z: half_height,
            r_lo: 0.0,
            r_hi: radius,
        },
        Surface::Axial {
            z: -half_height,
            r_lo: 0.0,
            r_hi: radius,
        },
    ]
}

fn check_stencil(r: f64, z: f64, h: f64, surfaces: &[Surface]) -> Result<()> {
    if !(h > 0.0) || r - h <= 0.0 || surfaces.iter().any(|s| s.crossed_by(r, z, h)) {
        return Err(Error::StencilCrossesBoundary { r, z, h });
    }
    Ok(())
}

struct Stencil {
    c: f64,
    rp: f64,
    rm: f64,
    zp: f64,
    zm: f64,
}

fn stencil<F: Fn(f64, f64) -> Result<f64>>(f: &F, r: f64, z: f64, h: f64, surfaces: &[Surface]) -> Result<Stencil> {
    check_stencil(r, z, h, surfaces)?;
    Ok(Stencil {
        c: f(r, z)?,
        rp: f(r + h, z)?,
        rm: f(r - h, z)?,
        zp: f(r, z + h)?,
        zm: f(r, z - h)?,
    })
}

/// f_rr + f_r / r + f_zz.
pub fn fd_laplacian_cyl<F: Fn(f64, f64) -> Result<f64>>(
    f: F,
    r: f64,
    z: f64,
    h: f64,
    surfaces: &[Surface],
) -> Result<f64> {
    let s = stencil(&f, r, z, h, surfaces)?;
    let h2 = h * h;
    Ok((s.rp - 2.0 * s.c + s.rm) / h2 + (s.rp - s.rm) / (2.0 * h * r) + (s.zp - 2.0 * s.c + s.zm) / h2)
}

/// f_rr - f_r / r + f_zz.
pub fn fd_psi_operator<F: Fn(f64, f64) -> Result<f64>>(
    f: F,
    r: f64,
    z: f64,
    h: f64,
    surfaces: &[Surface],
) -> Result<f64> {
    let s = stencil(&f, r, z, h, surfaces)?;
    let h2 = h * h;
    Ok((s.rp - 2.0 * s.c + s.rm) / h2 - (s.rp - s.rm) / (2.0 * h * r) + (s.zp - 2.0 * s.c + s.zm) / h2)
}

/// Central-difference gradient `(f_r, f_z)`.
pub fn fd_gradient<F: Fn(f64, f64) -> Result<f64>>(
    f: F,
    r: f64,
    z: f64,
    h: f64,
    surfaces: &[Surface],
) -> Result<(f64, f64)> {
    check_stencil(r, z, h, surfaces)?;
    Ok((
        (f(r + h, z)? - f(r - h, z)?) / (2.0 * h),
        (f(r, z + h)? - f(r, z - h)?) / (2.0 * h),
    ))
}

/// Convergence order from errors at step `h` and `h/2`.
///
/// When both errors are already below `floor` the difference is rounding
/// noise, and the order is reported as infinite.
pub fn observed_order(err_h: f64, err_half: f64, floor: f64) -> f64 {
    let (a, b) = (err_h.abs(), err_half.abs());
    if b <= floor && a <= floor {
        return f64::INFINITY;
    }
    (a / b).log2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        let lap = fd_laplacian_cyl(|r, _| Ok(r * r), 1.0, 0.0, 1e-3, &[]).unwrap();
        assert!((lap - 4.0).abs() < 1e-8);
        let lap = fd_laplacian_cyl(|_, z| Ok(z), 1.0, 0.3, 1e-3, &[]).unwrap();
        assert!(lap.abs() < 1e-8);
        // r^2 is annihilated by the ψ operator
        let op = fd_psi_operator(|r, _| Ok(r * r), 0.7, 0.0, 1e-3, &[]).unwrap();
        assert!(op.abs() < 1e-7);
    }

    #[test]
    fn second_order_convergence() {
        let f = |r: f64, z: f64| Ok((2.0 * r).sin() * z.exp());
        // exact Laplacian: (-4 sin 2r + 2 cos 2r / r + sin 2r) e^z
        let (r, z) = (0.8f64, 0.2f64);
        let exact = (-3.0 * (2.0 * r).sin() + 2.0 * (2.0 * r).cos() / r) * z.exp();
        let e1 = fd_laplacian_cyl(f, r, z, 1e-2, &[]).unwrap() - exact;
        let e2 = fd_laplacian_cyl(f, r, z, 5e-3, &[]).unwrap() - exact;
        let p = observed_order(e1, e2, 1e-12);
        assert!((1.8..=2.2).contains(&p), "{p}");
    }

    #[test]
    fn boundary_crossing_rejected() {
        let s = cylinder_surfaces(1.0, 0.7);
        let f = |_: f64, _: f64| Ok(0.0);
        assert!(fd_laplacian_cyl(f, 0.995, 0.0, 0.01, &s).is_err());
        assert!(fd_laplacian_cyl(f, 0.5, 0.695, 0.01, &s).is_err());
        assert!(fd_laplacian_cyl(f, 0.005, 2.0, 0.01, &s).is_err());
        assert!(fd_laplacian_cyl(f, 1.2, 0.695, 0.01, &s).is_ok());
    }
}
