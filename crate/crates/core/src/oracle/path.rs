//! Line integrals of gradients around closed polygons in the meridian plane.

use crate::error::{Error, Result};

use super::fd::fd_gradient;

/// ∮ g · dl around the closed polygon `vertices` (last joined to first),
/// with the composite trapezoid rule on `samples_per_edge` intervals per
/// edge.
pub fn loop_integral<G: Fn(f64, f64) -> Result<(f64, f64)>>(
    grad: G,
    vertices: &[(f64, f64)],
    samples_per_edge: usize,
) -> Result<f64> {
    if vertices.len() < 3 || samples_per_edge == 0 {
        return Err(crate::error::domain("loop_integral", "need 3 vertices and at least one sample"));
    }
    let mut total = 0.0;
    for (i, &a) in vertices.iter().enumerate() {
        let b = vertices[(i + 1) % vertices.len()];
        let (dr, dz) = (b.0 - a.0, b.1 - a.1);
        let n = samples_per_edge;
        let mut edge = 0.0;
        for k in 0..=n {
            let t = k as f64 / n as f64;
            let (r, z) = (a.0 + t * dr, a.1 + t * dz);
            let (gr, gz) = grad(r, z).map_err(|_| Error::PathSingularity { r, z })?;
            if !(gr.is_finite() && gz.is_finite()) {
                return Err(Error::PathSingularity { r, z });
            }
            let w = if k == 0 || k == n { 0.5 } else { 1.0 };
            edge += w * (gr * dr + gz * dz);
        }
        total += edge / n as f64;
    }
    Ok(total)
}

/// ∮ ∇f · dl with a central-difference gradient of step `h`.
pub fn loop_integral_grad<F: Fn(f64, f64) -> Result<f64>>(
    f: F,
    vertices: &[(f64, f64)],
    h: f64,
    samples_per_edge: usize,
) -> Result<f64> {
    loop_integral(|r, z| fd_gradient(&f, r, z, h, &[]), vertices, samples_per_edge)
}

/// `(r φ_z, -r φ_r)` by central differences: the gradient of the
/// field-line potential conjugate to `phi`, which stays single valued
/// where ψ itself has a cut.
pub fn conjugate_gradient<F: Fn(f64, f64) -> Result<f64>>(phi: F, r: f64, z: f64, h: f64) -> Result<(f64, f64)> {
    let (pr, pz) = fd_gradient(phi, r, z, h, &[])?;
    Ok((r * pz, -r * pr))
}

/// Axis-aligned rectangle `[r0, r1] x [z0, z1]`, counter-clockwise.
pub fn rectangle(r0: f64, r1: f64, z0: f64, z1: f64) -> [(f64, f64); 4] {
    [(r0, z0), (r1, z0), (r1, z1), (r0, z1)]
}
