//! The acceptance battery: closed forms checked against the independent
//! oracles, with tolerances fixed here.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::control::SeriesControl;
use crate::elliptic::{comp_e, comp_k};
use crate::error::{Error, Result};
use crate::fields::{
    phi_cyl, phi_cyl_parts, phi_disk, phi_tube, pi_identity_residual, psi_cyl, psi_tube, topological_charge, Body,
    CylinderSpec, DiskForm, DiskSpec, Psi, TubeSpec,
};
use crate::hypergeom::{
    appell_f2, di_hyg_da, di_hyg_dm, gauss_2f1, i_hyg, i_hyg_alt, i_hyg_pi, i_hyg_surface,
    i_hyg_surface_quadrature, lauricella_f11_triple, F2Params, IhygArgs,
};
use crate::jacobi::{int_z_sc, int_z_sc_jump, jacobi_cn, jacobi_dn, jacobi_sc, jacobi_sn, jacobi_zeta, natural_branch};
use crate::oracle::{
    brute_phi_cylinder, brute_psi, clearance, conjugate_gradient, cylinder_surfaces, fd_gradient, fd_laplacian_cyl,
    fd_psi_operator, loop_integral, quad_1d, rectangle, QuadratureSpec, Surface,
};

/// Which criteria to run. `Full` adds the slow 3-D quadrature check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Fast,
    Full,
}

/// How a residual is compared with its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// residual < tolerance
    Below,
    /// residual >= tolerance
    AtLeast,
}

/// Outcome of one criterion. The `Display` line leaves out the elapsed
/// time so that a fixed seed gives an identical table.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
    pub relation: Relation,
    pub elapsed: Duration,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.relation {
            Relation::Below => "<",
            Relation::AtLeast => ">=",
        };
        write!(
            f,
            "{} {:>3} {:<34} residual {:.3e} {} {:.1e}  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.residual,
            op,
            self.tolerance,
            self.detail
        )
    }
}

/// What a check measured: the worst residual, and a note for the report.
struct Measured {
    residual: f64,
    detail: String,
}

impl Measured {
    fn new(residual: f64, detail: impl Into<String>) -> Self {
        Measured {
            residual,
            detail: detail.into(),
        }
    }
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    tolerance: f64,
    relation: Relation,
    time_limit: Option<Duration>,
    full_only: bool,
    run: fn(&mut Ctx) -> Result<Measured>,
}

struct Ctx {
    rng: ChaCha8Rng,
    ctl: SeriesControl,
}

/// Residuals below this are treated as converged when measuring orders.
const ORDER_FLOOR: f64 = 1e-10;

fn criteria() -> Vec<Criterion> {
    use Relation::*;
    let c = |id, name, tolerance, relation, run| Criterion {
        id,
        name,
        tolerance,
        relation,
        time_limit: None,
        full_only: false,
        run,
    };
    vec![
        Criterion {
            time_limit: Some(Duration::from_secs(60)),
            ..c("1", "i_hyg vs quadrature", 1e-8, Below, check_ihyg_grid)
        },
        c("2", "definite integral reduction", 1e-12, Below, check_definite),
        c("3a", "surface value forms agree", 1e-8, Below, check_surface_forms),
        c("3b", "surface value limit m -> 1", 1e-4, Below, check_surface_limit),
        c("4", "Z sc integral and jump", 1e-7, Below, check_z_sc),
        c("5", "parameter derivative order", 1.9, AtLeast, check_derivatives),
        c("6", "triple sum and series variants", 1e-8, Below, check_variants),
        c("7", "Pi identity residual", 1e-9, Below, check_pi_identity),
        Criterion {
            time_limit: Some(Duration::from_secs(300)),
            full_only: true,
            ..c("8", "cylinder phi vs 3-D quadrature", 1e-5, Below, check_cylinder_oracle)
        },
        c("9", "far field", 1e-3, Below, check_far_field),
        c("10", "PDE residual order", 1.8, AtLeast, check_pde),
        c("11", "conjugacy and psi PDE order", 1.8, AtLeast, check_conjugacy),
        c("12", "topological charge loop", 1e-3, Below, check_loop),
        c("13", "disk forms", 1e-10, Below, check_disk),
        c("14", "psi vs brute-force kernel", 1e-4, Below, check_psi_oracle),
        Criterion {
            time_limit: Some(Duration::from_secs(10)),
            ..c("15", "special-function identities", 1e-12, Below, check_special)
        },
    ]
}

/// Runs the battery. Each criterion draws from its own stream of the seeded
/// generator, so results do not depend on which other criteria run.
pub fn run(suite: Suite, seed: u64, ctl: &SeriesControl) -> Vec<CheckResult> {
    criteria()
        .into_iter()
        .enumerate()
        .filter(|(_, c)| suite == Suite::Full || !c.full_only)
        .map(|(i, c)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let mut ctx = Ctx { rng, ctl: *ctl };
            let start = Instant::now();
            let outcome = (c.run)(&mut ctx);
            let elapsed = start.elapsed();
            let (residual, mut detail) = match outcome {
                Ok(m) => (m.residual, m.detail),
                Err(e) => (f64::NAN, format!("error: {e}")),
            };
            let mut passed = match c.relation {
                Relation::Below => residual < c.tolerance,
                Relation::AtLeast => residual >= c.tolerance,
            };
            if let Some(limit) = c.time_limit {
                if elapsed > limit {
                    passed = false;
                    detail.push_str(&format!(" [over time limit {} s]", limit.as_secs()));
                }
            }
            CheckResult {
                id: c.id,
                name: c.name,
                passed,
                residual,
                tolerance: c.tolerance,
                relation: c.relation,
                elapsed,
                detail,
            }
        })
        .collect()
}

fn ihyg_integrand(m: f64, a: f64) -> impl Fn(f64) -> f64 {
    move |t: f64| {
        let s = (0.5 * t).sin();
        (a / (1.0 - m * s * s).sqrt()).atanh()
    }
}

fn ihyg_quadrature(m: f64, a: f64, theta: f64) -> Result<f64> {
    Ok(quad_1d(ihyg_integrand(m, a), 0.0, theta, &QuadratureSpec::with_tol(1e-15, 1e-13))?.0)
}

// (0, 0.95) x (-0.9, 0.9) x (0.1, pi], cell midpoints, theta grid ending at pi
fn check_ihyg_grid(ctx: &mut Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    let mut at = (0.0, 0.0, 0.0);
    let mut count = 0;
    for i in 0..10 {
        let m = 0.95 * (i as f64 + 0.5) / 10.0;
        for j in 0..10 {
            let a = -0.9 + 1.8 * (j as f64 + 0.5) / 10.0;
            if m + a * a >= 0.98 {
                continue;
            }
            for k in 0..10 {
                let theta = 0.1 + (PI - 0.1) * (k as f64 + 1.0) / 10.0;
                let v = i_hyg(IhygArgs::new(m, a, theta), &ctx.ctl)?;
                let q = ihyg_quadrature(m, a, theta)?;
                let e = (v - q).abs() / v.abs().max(1e-3);
                count += 1;
                if e > worst {
                    worst = e;
                    at = (m, a, theta);
                }
            }
        }
    }
    Ok(Measured::new(
        worst,
        format!("{count} points, worst at (m, A, theta) = ({:.3}, {:.3}, {:.3})", at.0, at.1, at.2),
    ))
}

fn random_interior(rng: &mut ChaCha8Rng, m_max: f64, min_gap: f64) -> (f64, f64) {
    loop {
        let m: f64 = rng.gen_range(0.01..m_max);
        let a: f64 = rng.gen_range(-0.95..0.95);
        if 1.0 - m - a * a > min_gap {
            return (m, a);
        }
    }
}

// exact at theta = pi, and against the general-theta sum just below pi
fn check_definite(ctx: &mut Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (m, a) = random_interior(&mut ctx.rng, 0.95, 0.02);
        let pi_val = i_hyg_pi(m, a, &ctx.ctl)?;
        let at_pi = i_hyg(IhygArgs::new(m, a, PI), &ctx.ctl)?;
        let theta = PI - 1e-14;
        let below = i_hyg(IhygArgs::new(m, a, theta), &ctx.ctl)?;
        // I changes by about dtheta * integrand(pi) over the last step
        let slope = ihyg_integrand(m, a)(PI);
        let e = (pi_val - at_pi).abs().max((pi_val - below - (PI - theta) * slope).abs());
        worst = worst.max(e / pi_val.abs().max(1.0));
    }
    Ok(Measured::new(worst, "100 random points"))
}

fn check_surface_forms(_: &mut Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    for i in 1..=9 {
        let m = i as f64 / 10.0;
        worst = worst.max((i_hyg_surface(m)? - i_hyg_surface_quadrature(m)?).abs());
    }
    Ok(Measured::new(worst, "m = 0.1, ..., 0.9"))
}

fn check_surface_limit(_: &mut Ctx) -> Result<Measured> {
    let m = 1.0 - 1e-6;
    let v = i_hyg_surface(m)?;
    let q = i_hyg_surface_quadrature(m)?;
    Ok(Measured::new(
        v.abs(),
        format!("I_surface(1 - 1e-6) = {v:.6e}, quadrature {q:.6e}; the value decays like sqrt(1-m) ln(1/(1-m))"),
    ))
}

fn z_sc_quadrature(m: f64, u0: f64, u1: f64) -> Result<f64> {
    let f = |t: f64| match (jacobi_zeta(t, m), jacobi_sc(t, m)) {
        (Ok(z), Ok(s)) => z * s,
        _ => f64::NAN,
    };
    let (v, _) = quad_1d(f, u0, u1, &QuadratureSpec::with_tol(1e-14, 1e-12))?;
    if !v.is_finite() {
        return Err(Error::Pole { func: "z_sc_quadrature", u: u1 });
    }
    Ok(v)
}

// residual: worst of the absolute closed-form error and the relative jump
// error scaled to the 0.5% bound, so both share the 1e-7 tolerance slot
fn check_z_sc(ctx: &mut Ctx) -> Result<Measured> {
    let mut worst_value: f64 = 0.0;
    let mut worst_jump: f64 = 0.0;
    let mut notes = Vec::new();
    for &m in &[0.85, 0.3, 0.6, 0.99] {
        let k = comp_k(m)?;
        for i in 0..=20 {
            let u = -k + 0.05 + (2.0 * k - 0.1) * i as f64 / 20.0;
            let closed = int_z_sc(u, m, natural_branch(u, m)?, &ctx.ctl)?;
            let quad = z_sc_quadrature(m, 0.0, u)?;
            worst_value = worst_value.max((closed - quad).abs());
        }
        let (u1, u2) = (k - 0.05, k + 0.03);
        let measured =
            z_sc_quadrature(m, u1, u2)? - (int_z_sc(u2, m, 0, &ctx.ctl)? - int_z_sc(u1, m, 0, &ctx.ctl)?);
        let predicted = int_z_sc_jump(m)?;
        let mut rel = (measured / predicted - 1.0).abs();
        if m == 0.85 {
            rel = rel.max((measured / 5.33 - 1.0).abs());
        }
        worst_jump = worst_jump.max(rel);
        notes.push(format!("m={m}: jump {measured:.4}"));
    }
    let residual = worst_value.max(worst_jump / 5e-3 * 1e-7);
    Ok(Measured::new(
        residual,
        format!("value err {worst_value:.2e}, jump rel err {worst_jump:.2e}; {}", notes.join(", ")),
    ))
}

fn check_derivatives(ctx: &mut Ctx) -> Result<Measured> {
    let mut worst = f64::INFINITY;
    let h = 1e-2;
    for _ in 0..50 {
        let (m, a) = loop {
            let (m, a) = random_interior(&mut ctx.rng, 0.85, 0.1);
            if m > 0.05 && a.abs() > 0.05 {
                break (m, a);
            }
        };
        let theta: f64 = ctx.rng.gen_range(0.2..3.0);
        let c = &ctx.ctl;
        let fa = |a: f64| i_hyg(IhygArgs::new(m, a, theta), c);
        let fm = |m: f64| i_hyg(IhygArgs::new(m, a, theta), c);
        let da = di_hyg_da(m, a, theta)?;
        let dm = di_hyg_dm(m, a, theta)?;
        for (f, exact, x) in [(&fa as &dyn Fn(f64) -> Result<f64>, da, a), (&fm, dm, m)] {
            let e1 = (f(x + h)? - f(x - h)?) / (2.0 * h) - exact;
            let e2 = (f(x + h / 2.0)? - f(x - h / 2.0)?) / h - exact;
            worst = worst.min(crate::oracle::observed_order(e1, e2, ORDER_FLOOR));
        }
    }
    Ok(Measured::new(worst, "50 random points, h = 1e-2 and 5e-3, lowest order"))
}

fn check_variants(ctx: &mut Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let m: f64 = ctx.rng.gen_range(0.0..0.5);
        let a: f64 = ctx.rng.gen_range(-0.5..0.5);
        let s: f64 = ctx.rng.gen_range(0.01..0.5);
        let c = &ctx.ctl;
        let vals = [
            i_hyg(IhygArgs::new(m, a, 2.0 * s.asin()), c)?,
            lauricella_f11_triple(m, a, s, c)?,
            i_hyg_alt(1, m, a, s, c)?,
            i_hyg_alt(2, m, a, s, c)?,
            i_hyg_alt(3, m, a, s, c)?,
        ];
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                worst = worst.max((vals[i] - vals[j]).abs());
            }
        }
    }
    Ok(Measured::new(worst, "20 points, 5 evaluations each, pairwise"))
}

fn check_pi_identity(_: &mut Ctx) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    let (mut above, mut below) = (0, 0);
    for i in 0..20 {
        let r = 0.2 + 2.8 * (i as f64 + 0.5) / 20.0;
        for j in 0..20 {
            // offset grid so that r0 never equals r
            let r0 = 0.2 + 2.8 * (j as f64 + 0.25) / 20.0;
            if r0 > r {
                above += 1;
            } else {
                below += 1;
            }
            for &z in &[0.3, 1.0, 4.0] {
                worst = worst.max(pi_identity_residual(r, r0, z)?);
            }
        }
    }
    Ok(Measured::new(worst, format!("{} points, r0 > r at {above}, r0 < r at {below}", 400 * 3)))
}

fn reference_cylinder() -> CylinderSpec {
    CylinderSpec::new(1.0, 0.7, 1.0).expect("valid cylinder")
}

fn reference_tube() -> TubeSpec {
    TubeSpec::new(1.0, 0.7, 1.0).expect("valid tube")
}

fn random_exterior(rng: &mut ChaCha8Rng, body: &Body, min_clearance: f64, extent: f64) -> (f64, f64) {
    loop {
        let r: f64 = rng.gen_range(0.0..extent);
        let z: f64 = rng.gen_range(-extent..extent);
        let outside = match body {
            Body::Cylinder(c) => !c.contains(r, z),
            _ => true,
        };
        if outside && clearance(body, r, z) >= min_clearance {
            return (r, z);
        }
    }
}

fn check_cylinder_oracle(ctx: &mut Ctx) -> Result<Measured> {
    let spec = reference_cylinder();
    let body = Body::Cylinder(spec);
    let q = QuadratureSpec::with_tol(1e-10, 1e-8);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let (r, z) = random_exterior(&mut ctx.rng, &body, 0.05 * spec.radius, 2.5);
        let v = phi_cyl(r, z, &spec, &ctx.ctl)?;
        let b = brute_phi_cylinder(r, z, &spec, &q)?;
        worst = worst.max((v - b).abs() / b.abs());
    }
    Ok(Measured::new(worst, "20 exterior points, clearance >= 0.05 R"))
}

fn check_far_field(ctx: &mut Ctx) -> Result<Measured> {
    let cyl = reference_cylinder();
    let tube = reference_tube();
    let d = 100.0 * cyl.radius.max(cyl.half_height);
    let mut worst: f64 = 0.0;
    for k in 0..8 {
        let alpha = (k as f64 + 0.5) * PI / 8.0;
        let (r, z) = (d * alpha.sin(), d * alpha.cos());
        let c = phi_cyl(r, z, &cyl, &ctx.ctl)? * d / cyl.total_charge();
        let t = phi_tube(r, z, &tube, &ctx.ctl)? * d / tube.total_charge();
        worst = worst.max((c - 1.0).abs()).max((t - 1.0).abs());
    }
    Ok(Measured::new(worst, "8 rays at distance 100 max(R, Z)"))
}

fn order_at<F: Fn(f64) -> Result<f64>>(residual: F, h: f64) -> Result<f64> {
    Ok(crate::oracle::observed_order(residual(h)?, residual(h / 2.0)?, ORDER_FLOOR))
}

/// Planes and cylinder containing the faces of the solid, extended to the
/// whole half plane: the individual φ pieces are not smooth across them.
fn extended_surfaces(radius: f64, half_height: f64, extent: f64) -> Vec<Surface> {
    vec![
        Surface::Radial {
            r: radius,
            z_lo: -extent,
            z_hi: extent,
        },
        Surface::Axial {
            z: half_height,
            r_lo: 0.0,
            r_hi: extent,
        },
        Surface::Axial {
            z: -half_height,
            r_lo: 0.0,
            r_hi: extent,
        },
    ]
}

fn check_pde(ctx: &mut Ctx) -> Result<Measured> {
    let spec = reference_cylinder();
    let body = Body::Cylinder(spec);
    let c = ctx.ctl;
    let h = 0.04;
    let source = -4.0 * PI * spec.density;
    let faces = cylinder_surfaces(spec.radius, spec.half_height);
    let planes = extended_surfaces(spec.radius, spec.half_height, 10.0);
    let phi = |r: f64, z: f64| phi_cyl(r, z, &spec, &c);
    let piece = |which: u8| {
        move |r: f64, z: f64| {
            let p = phi_cyl_parts(r, z, &spec, &c)?;
            Ok(match which {
                0 => p.hyg,
                1 => p.ell,
                _ => p.corr,
            })
        }
    };
    let mut points = Vec::new();
    while points.len() < 10 {
        let (r, z) = random_exterior(&mut ctx.rng, &body, 0.15, 2.5);
        if r > 0.15 && fd_laplacian_cyl(|_, _| Ok(0.0), r, z, h, &planes).is_ok() {
            points.push((r, z, 0.0));
        }
    }
    for _ in 0..10 {
        let r: f64 = ctx.rng.gen_range(0.15..spec.radius - 0.15);
        let z: f64 = ctx.rng.gen_range(-spec.half_height + 0.15..spec.half_height - 0.15);
        points.push((r, z, source));
    }
    let mut worst_order = f64::INFINITY;
    let mut worst_corr: f64 = 0.0;
    for &(r, z, target) in &points {
        worst_order = worst_order.min(order_at(|h| Ok(fd_laplacian_cyl(phi, r, z, h, &faces)? - target), h)?);
        for which in 0..2 {
            worst_order = worst_order.min(order_at(|h| fd_laplacian_cyl(piece(which), r, z, h, &planes), h)?);
        }
        // the correction is piecewise quadratic, so its stencil is exact
        worst_corr = worst_corr.max((fd_laplacian_cyl(piece(2), r, z, h, &planes)? - target).abs());
    }
    if worst_corr > 1e-9 {
        return Ok(Measured::new(
            0.0,
            format!("correction piece misses the source term by {worst_corr:.2e}"),
        ));
    }
    Ok(Measured::new(
        worst_order,
        format!("10 exterior + 10 interior points, h = {h} and {}; pieces harmonic, correction exact", h / 2.0),
    ))
}

fn psi_value(body: &Body, r: f64, z: f64, ctl: &SeriesControl) -> Result<f64> {
    match body {
        Body::Cylinder(c) => match psi_cyl(r, z, c, ctl)? {
            Psi::Value(v) => Ok(v),
            Psi::InsideCharge => Err(Error::OnSurface { r, z }),
        },
        Body::Tube(t) => psi_tube(r, z, t, 0, ctl),
        Body::Disk(_) => Err(crate::error::domain("psi_value", "no disk psi")),
    }
}

fn check_conjugacy(ctx: &mut Ctx) -> Result<Measured> {
    let c = ctx.ctl;
    let h = 0.04;
    let mut worst = f64::INFINITY;
    let tube = reference_tube();
    let cyl = reference_cylinder();
    for body in [Body::Cylinder(cyl), Body::Tube(tube)] {
        let mut surfaces = cylinder_surfaces(body.radius(), 0.7);
        if let Body::Tube(_) = body {
            // sheet plus the branch cut of psi; no caps
            surfaces = vec![
                surfaces[0],
                Surface::Axial {
                    z: 0.0,
                    r_lo: 0.0,
                    r_hi: tube.radius,
                },
            ];
        }
        let phi = |r: f64, z: f64| body.phi(r, z, &c);
        let psi = |r: f64, z: f64| psi_value(&body, r, z, &c);
        let mut n = 0;
        while n < 20 {
            let (r, z) = random_exterior(&mut ctx.rng, &body, 0.15, 2.5);
            if r < 0.15 || fd_psi_operator(|_, _| Ok(0.0), r, z, h, &surfaces).is_err() {
                continue;
            }
            n += 1;
            let conj = |h: f64, k: usize| -> Result<f64> {
                let (pr, pz) = fd_gradient(psi, r, z, h, &surfaces)?;
                let (fr, fz) = fd_gradient(phi, r, z, h, &surfaces)?;
                Ok(if k == 0 { pr - r * fz } else { pz + r * fr })
            };
            worst = worst.min(order_at(|h| conj(h, 0), h)?);
            worst = worst.min(order_at(|h| conj(h, 1), h)?);
            worst = worst.min(order_at(|h| fd_psi_operator(psi, r, z, h, &surfaces), h)?);
        }
    }
    Ok(Measured::new(worst, "20 points per body, h = 0.04 and 0.02, lowest order"))
}

fn check_loop(ctx: &mut Ctx) -> Result<Measured> {
    let tube = reference_tube();
    let c = ctx.ctl;
    let phi = |r: f64, z: f64| phi_tube(r, z, &tube, &c);
    let grad = |r: f64, z: f64| conjugate_gradient(phi, r, z, 1e-4);
    let delta = topological_charge(&tube);
    let threading = loop_integral(grad, &rectangle(0.5, 1.5, -1.0, 1.0), 400)?;
    let outside = loop_integral(grad, &rectangle(1.2, 2.0, -1.0, 1.0), 400)?;
    let e = (threading.abs() / delta - 1.0).abs().max(outside.abs() / delta);
    Ok(Measured::new(
        e,
        format!("threading {threading:.6} vs {delta:.6}, non-threading {outside:.2e}"),
    ))
}

fn check_disk(_: &mut Ctx) -> Result<Measured> {
    let spec = DiskSpec::new(1.0, 1.0)?;
    let mut worst: f64 = 0.0;
    for i in 0..=20 {
        let r = 3.0 * i as f64 / 20.0;
        if (r - spec.radius).abs() < 1e-12 {
            continue;
        }
        for j in 0..=20 {
            let z = -2.0 + 4.0 * j as f64 / 20.0;
            if z.abs() < 1e-12 {
                continue;
            }
            let a = phi_disk(r, z, &spec, DiskForm::Compact)?;
            let b = phi_disk(r, z, &spec, DiskForm::Cylindrical)?;
            worst = worst.max((a - b).abs());
        }
    }
    for &z in &[0.1, 0.5, -1.0, 3.0] {
        let exact = 2.0 * PI * spec.density * ((spec.radius * spec.radius + z * z).sqrt() - z.abs());
        let v = phi_disk(0.0, z, &spec, DiskForm::Cylindrical)?;
        worst = worst.max((v - exact).abs() * 1e-10 / 1e-12);
    }
    Ok(Measured::new(worst, "21 x 21 grid off z = 0 and r = R; axis formula (scaled to 1e-12)"))
}

fn check_psi_oracle(ctx: &mut Ctx) -> Result<Measured> {
    let q = QuadratureSpec::with_tol(1e-11, 1e-9);
    let mut worst: f64 = 0.0;
    for body in [Body::Tube(reference_tube()), Body::Cylinder(reference_cylinder())] {
        let mut n = 0;
        while n < 10 {
            let (r, z) = random_exterior(&mut ctx.rng, &body, 0.1, 2.5);
            if z.abs() < 0.05 {
                continue;
            }
            n += 1;
            let v = psi_value(&body, r, z, &ctx.ctl)?;
            let b = brute_psi(r, z, &body, &q)?;
            worst = worst.max((v - b).abs() / b.abs().max(1e-3));
        }
    }
    Ok(Measured::new(worst, "10 points each for tube and cylinder"))
}

fn check_special(ctx: &mut Ctx) -> Result<Measured> {
    let c = &ctx.ctl;
    let mut worst: f64 = 0.0;
    for &m in &[0.1, 0.3, 0.5, 0.7, 0.9] {
        let (k, e) = (comp_k(m)?, comp_e(m)?);
        let (kp, ep) = (comp_k(1.0 - m)?, comp_e(1.0 - m)?);
        worst = worst.max((e * kp + ep * k - k * kp - FRAC_PI_2).abs());
        // descending Landen: K(m) = (1 + k1) K(k1^2)
        let kc = (1.0 - m).sqrt();
        let k1 = (1.0 - kc) / (1.0 + kc);
        worst = worst.max((k - (1.0 + k1) * comp_k(k1 * k1)?).abs() / k);
    }
    for &(x, y) in &[(0.2, 0.3), (0.4, -0.1), (-0.3, 0.25)] {
        let p = F2Params::new(0.7, 0.4, 1.3, 1.6, 2.1);
        let q = F2Params::new(0.7, 1.3, 0.4, 2.1, 1.6);
        worst = worst.max((appell_f2(p, x, y, c)? - appell_f2(q, y, x, c)?).abs());
        let collapse = appell_f2(p, x, 0.0, c)? - gauss_2f1(0.7, 0.4, 1.6, x, c)?;
        worst = worst.max(collapse.abs());
    }
    for &m in &[0.2, 0.7, 0.95] {
        let k = comp_k(m)?;
        for &(u, v) in &[(0.3, 0.9), (1.7, -0.4), (-2.2, 3.1)] {
            let (sn, cn, dn) = (jacobi_sn(u, m)?, jacobi_cn(u, m)?, jacobi_dn(u, m)?);
            worst = worst.max((sn * sn + cn * cn - 1.0).abs());
            worst = worst.max((dn * dn + m * sn * sn - 1.0).abs());
            let add = jacobi_zeta(u + v, m)?
                - jacobi_zeta(u, m)?
                - jacobi_zeta(v, m)?
                + m * sn * jacobi_sn(v, m)? * jacobi_sn(u + v, m)?;
            worst = worst.max(add.abs());
            worst = worst.max((jacobi_zeta(u + 2.0 * k, m)? - jacobi_zeta(u, m)?).abs());
        }
    }
    Ok(Measured::new(
        worst,
        "Legendre, Landen, F2 swap and collapse, sn/cn/dn, zeta addition and period",
    ))
}
