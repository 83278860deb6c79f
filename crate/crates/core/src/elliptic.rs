//! Legendre elliptic integrals in the parameter convention (`m = k^2`),
//! evaluated through Carlson's symmetric forms.
//!
//! Every public function takes the parameter `m`, never the modulus `k`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, Error, Result};

const DUP_TOL: f64 = 1e-16;
const MAX_DUP: usize = 200;

/// Characteristics within this distance below 1 are treated as singular.
pub const CHARACTERISTIC_GUARD: f64 = 1e-12;

/// Argument triple for the Legendre integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticArgs {
    /// characteristic
    pub n: f64,
    /// amplitude in radians
    pub phi: f64,
    /// parameter
    pub m: f64,
}

impl EllipticArgs {
    pub fn f(&self) -> Result<f64> {
        ellip_f(self.phi, self.m)
    }
    pub fn e(&self) -> Result<f64> {
        ellip_e(self.phi, self.m)
    }
    pub fn pi(&self) -> Result<f64> {
        ellip_pi(self.n, self.phi, self.m)
    }
}

fn check_nonneg(func: &'static str, v: &[f64]) -> Result<()> {
    if v.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(domain(func, format!("arguments {v:?} must be finite and nonnegative")));
    }
    Ok(())
}

fn non_convergence(func: &'static str) -> Error {
    Error::NonConvergence {
        func,
        terms: MAX_DUP,
    }
}

/// Carlson's R_F(x, y, z).
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64> {
    check_nonneg("carlson_rf", &[x, y, z])?;
    if [x, y, z].iter().filter(|v| **v == 0.0).count() > 1 {
        return Err(domain("carlson_rf", "at most one argument may be zero"));
    }
    let (x0, y0) = (x, y);
    let a0 = (x + y + z) / 3.0;
    let q = (3.0 * DUP_TOL).powf(-1.0 / 6.0)
        * (a0 - x).abs().max((a0 - y).abs()).max((a0 - z).abs());
    let (mut x, mut y, mut z, mut a) = (x, y, z, a0);
    let mut pow4 = 1.0;
    let mut n = 0;
    while pow4 * q >= a.abs() {
        if n == MAX_DUP {
            return Err(non_convergence("carlson_rf"));
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sx * sz + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = 0.25 * (a + lam);
        pow4 *= 0.25;
        n += 1;
    }
    let xx = (a0 - x0) * pow4 / a;
    let yy = (a0 - y0) * pow4 / a;
    let zz = -xx - yy;
    let e2 = xx * yy - zz * zz;
    let e3 = xx * yy * zz;
    Ok((1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt())
}

/// Carlson's R_D(x, y, z) = R_J(x, y, z, z).
pub fn carlson_rd(x: f64, y: f64, z: f64) -> Result<f64> {
    check_nonneg("carlson_rd", &[x, y, z])?;
    if z == 0.0 || (x == 0.0 && y == 0.0) {
        return Err(domain("carlson_rd", "z must be positive and x + y nonzero"));
    }
    let (x0, y0) = (x, y);
    let a0 = (x + y + 3.0 * z) / 5.0;
    let q = (0.25 * DUP_TOL).powf(-1.0 / 6.0)
        * (a0 - x).abs().max((a0 - y).abs()).max((a0 - z).abs());
    let (mut x, mut y, mut z, mut a) = (x, y, z, a0);
    let mut pow4 = 1.0;
    let mut sum = 0.0;
    let mut n = 0;
    while pow4 * q >= a.abs() {
        if n == MAX_DUP {
            return Err(non_convergence("carlson_rd"));
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sx * sz + sy * sz;
        sum += pow4 / (sz * (z + lam));
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = 0.25 * (a + lam);
        pow4 *= 0.25;
        n += 1;
    }
    let xx = (a0 - x0) * pow4 / a;
    let yy = (a0 - y0) * pow4 / a;
    let zz = -(xx + yy) / 3.0;
    let xy = xx * yy;
    let z2 = zz * zz;
    let e2 = xy - 6.0 * z2;
    let e3 = (3.0 * xy - 8.0 * z2) * zz;
    let e4 = 3.0 * (xy - z2) * z2;
    let e5 = xy * z2 * zz;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    Ok(pow4 * series / (a * a.sqrt()) + 3.0 * sum)
}

/// Carlson's R_C(x, y). Negative `y` returns the Cauchy principal value.
pub fn carlson_rc(x: f64, y: f64) -> Result<f64> {
    if !x.is_finite() || !y.is_finite() || x < 0.0 || y == 0.0 {
        return Err(domain("carlson_rc", format!("need x >= 0, y != 0, got ({x}, {y})")));
    }
    if y < 0.0 {
        return Ok((x / (x - y)).sqrt() * rc_positive(x - y, -y)?);
    }
    rc_positive(x, y)
}

fn rc_positive(x: f64, y: f64) -> Result<f64> {
    let a0 = (x + 2.0 * y) / 3.0;
    let q = (3.0 * DUP_TOL).powf(-1.0 / 8.0) * (a0 - x).abs();
    let (mut x, mut y, mut a) = (x, y, a0);
    let y0 = y;
    let mut pow4 = 1.0;
    let mut n = 0;
    while pow4 * q >= a.abs() {
        if n == MAX_DUP {
            return Err(non_convergence("carlson_rc"));
        }
        let lam = 2.0 * x.sqrt() * y.sqrt() + y;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        a = 0.25 * (a + lam);
        pow4 *= 0.25;
        n += 1;
    }
    let s = (y0 - a0) * pow4 / a;
    let s2 = s * s;
    let poly = 1.0
        + s2 * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * 1.125)))));
    Ok(poly / a.sqrt())
}

/// Carlson's R_J(x, y, z, p). Negative `p` returns the Cauchy principal value.
pub fn carlson_rj(x: f64, y: f64, z: f64, p: f64) -> Result<f64> {
    check_nonneg("carlson_rj", &[x, y, z])?;
    if !p.is_finite() || p == 0.0 {
        return Err(domain("carlson_rj", "p must be finite and nonzero"));
    }
    if [x, y, z].iter().filter(|v| **v == 0.0).count() > 1 {
        return Err(domain("carlson_rj", "at most one of x, y, z may be zero"));
    }
    if p > 0.0 {
        return rj_positive(x, y, z, p);
    }
    let mut v = [x, y, z];
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let (xt, yt, zt) = (v[0], v[1], v[2]);
    let a = 1.0 / (yt - p);
    let b = a * (zt - yt) * (yt - xt);
    let pt = yt + b;
    let rho = xt * zt / yt;
    let tau = p * pt / yt;
    let rj = rj_positive(xt, yt, zt, pt)?;
    let rc = carlson_rc(rho, tau)?;
    let rf = carlson_rf(xt, yt, zt)?;
    Ok(a * (b * rj + 3.0 * (rc - rf)))
}

fn rj_positive(x: f64, y: f64, z: f64, p: f64) -> Result<f64> {
    let (x0, y0, z0) = (x, y, z);
    let a0 = (x + y + z + 2.0 * p) / 5.0;
    let delta = (p - x) * (p - y) * (p - z);
    let q = (0.25 * DUP_TOL).powf(-1.0 / 6.0)
        * (a0 - x)
            .abs()
            .max((a0 - y).abs())
            .max((a0 - z).abs())
            .max((a0 - p).abs());
    let (mut x, mut y, mut z, mut p, mut a) = (x, y, z, p, a0);
    let mut pow4 = 1.0;
    let mut sum = 0.0;
    let mut n = 0;
    while pow4 * q >= a.abs() {
        if n == MAX_DUP {
            return Err(non_convergence("carlson_rj"));
        }
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lam = sx * sy + sx * sz + sy * sz;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = pow4 * pow4 * pow4 * delta / (d * d);
        sum += pow4 / d * rc_one_plus(e)?;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
        a = 0.25 * (a + lam);
        pow4 *= 0.25;
        n += 1;
    }
    let xx = (a0 - x0) * pow4 / a;
    let yy = (a0 - y0) * pow4 / a;
    let zz = (a0 - z0) * pow4 / a;
    let pp = -(xx + yy + zz) / 2.0;
    let p2 = pp * pp;
    let xyz = xx * yy * zz;
    let e2 = xx * yy + xx * zz + yy * zz - 3.0 * p2;
    let e3 = xyz + 2.0 * e2 * pp + 4.0 * p2 * pp;
    let e4 = (2.0 * xyz + e2 * pp + 3.0 * p2 * pp) * pp;
    let e5 = xyz * p2;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    Ok(pow4 * series / (a * a.sqrt()) + 6.0 * sum)
}

// R_C(1, 1 + e), with the small-e series to avoid the 0/0 in the closed forms.
fn rc_one_plus(e: f64) -> Result<f64> {
    if e.abs() < 1e-4 {
        return Ok(1.0 - e / 3.0 + e * e / 5.0 - e * e * e / 7.0);
    }
    if e > 0.0 {
        let s = e.sqrt();
        return Ok(s.atan() / s);
    }
    if e > -1.0 {
        let s = (-e).sqrt();
        return Ok(s.atanh() / s);
    }
    carlson_rc(1.0, 1.0 + e)
}

/// Splits an amplitude into `k*pi + r` with `|r| <= pi/2`.
fn reduce_amplitude(phi: f64) -> (f64, f64) {
    let k = (phi / PI).round();
    (k, phi - k * PI)
}

/// Incomplete integral of the first kind F(phi|m).
pub fn ellip_f(phi: f64, m: f64) -> Result<f64> {
    if !phi.is_finite() || !m.is_finite() {
        return Err(domain("ellip_f", "non-finite argument"));
    }
    if phi < 0.0 {
        return ellip_f(-phi, m).map(|v| -v);
    }
    let (k, r) = reduce_amplitude(phi);
    let base = f_principal(r, m)?;
    if k == 0.0 {
        return Ok(base);
    }
    Ok(2.0 * k * comp_k(m)? + base)
}

fn f_principal(phi: f64, m: f64) -> Result<f64> {
    let (s, c) = phi.sin_cos();
    let ms2 = m * s * s;
    if ms2 > 1.0 {
        return Err(domain("ellip_f", format!("m*sin^2(phi) = {ms2} > 1")));
    }
    if s == 0.0 {
        return Ok(0.0);
    }
    let c2 = c * c;
    let d2 = 1.0 - ms2;
    if c2 == 0.0 && d2 <= 0.0 {
        return Err(domain("ellip_f", "logarithmic divergence at phi = pi/2, m = 1"));
    }
    Ok(s * carlson_rf(c2, d2.max(0.0), 1.0)?)
}

/// Incomplete integral of the second kind E(phi|m).
pub fn ellip_e(phi: f64, m: f64) -> Result<f64> {
    if !phi.is_finite() || !m.is_finite() {
        return Err(domain("ellip_e", "non-finite argument"));
    }
    if phi < 0.0 {
        return ellip_e(-phi, m).map(|v| -v);
    }
    let (k, r) = reduce_amplitude(phi);
    let base = e_principal(r, m)?;
    if k == 0.0 {
        return Ok(base);
    }
    Ok(2.0 * k * comp_e(m)? + base)
}

fn e_principal(phi: f64, m: f64) -> Result<f64> {
    let (s, c) = phi.sin_cos();
    let ms2 = m * s * s;
    if ms2 > 1.0 {
        return Err(domain("ellip_e", format!("m*sin^2(phi) = {ms2} > 1")));
    }
    if s == 0.0 {
        return Ok(0.0);
    }
    if m == 1.0 {
        return Ok(s.abs() * s.signum());
    }
    let c2 = c * c;
    let d2 = (1.0 - ms2).max(0.0);
    if c2 == 0.0 && d2 == 0.0 {
        return Ok(s);
    }
    let s3 = s * s * s;
    Ok(s * carlson_rf(c2, d2, 1.0)? - m / 3.0 * s3 * carlson_rd(c2, d2, 1.0)?)
}

/// Incomplete integral of the third kind Pi(n; phi|m).
pub fn ellip_pi(n: f64, phi: f64, m: f64) -> Result<f64> {
    if !phi.is_finite() || !m.is_finite() || !n.is_finite() {
        return Err(domain("ellip_pi", "non-finite argument"));
    }
    if phi < 0.0 {
        return ellip_pi(n, -phi, m).map(|v| -v);
    }
    let (k, r) = reduce_amplitude(phi);
    if k != 0.0 && n >= 1.0 - CHARACTERISTIC_GUARD {
        return Err(Error::SingularCharacteristic {
            func: "ellip_pi",
            value: n,
        });
    }
    let base = pi_principal(n, r, m, true)?;
    if k == 0.0 {
        return Ok(base);
    }
    Ok(2.0 * k * comp_pi(n, m)? + base)
}

fn pi_principal(n: f64, phi: f64, m: f64, guard: bool) -> Result<f64> {
    let (s, c) = phi.sin_cos();
    let s2 = s * s;
    let ms2 = m * s2;
    if ms2 > 1.0 {
        return Err(domain("ellip_pi", format!("m*sin^2(phi) = {ms2} > 1")));
    }
    let ns2 = n * s2;
    let singular = if guard {
        ns2 >= 1.0 - CHARACTERISTIC_GUARD
    } else {
        ns2 >= 1.0
    };
    if singular {
        return Err(Error::SingularCharacteristic {
            func: "ellip_pi",
            value: ns2,
        });
    }
    if s == 0.0 {
        return Ok(0.0);
    }
    let c2 = c * c;
    let d2 = (1.0 - ms2).max(0.0);
    if c2 == 0.0 && d2 == 0.0 {
        return Err(domain("ellip_pi", "divergent at phi = pi/2, m = 1"));
    }
    let p = 1.0 - ns2;
    let rf = carlson_rf(c2, d2, 1.0)?;
    if n == 0.0 {
        return Ok(s * rf);
    }
    Ok(s * rf + n / 3.0 * s * s2 * carlson_rj(c2, d2, 1.0, p)?)
}

/// Complete integral of the first kind K(m).
pub fn comp_k(m: f64) -> Result<f64> {
    if !m.is_finite() || m >= 1.0 {
        return Err(domain("comp_k", format!("requires m < 1, got {m}")));
    }
    carlson_rf(0.0, 1.0 - m, 1.0)
}

/// Complete integral of the second kind E(m); E(1) = 1.
pub fn comp_e(m: f64) -> Result<f64> {
    if !m.is_finite() || m > 1.0 {
        return Err(domain("comp_e", format!("requires m <= 1, got {m}")));
    }
    if m == 1.0 {
        return Ok(1.0);
    }
    let y = 1.0 - m;
    Ok(carlson_rf(0.0, y, 1.0)? - m / 3.0 * carlson_rd(0.0, y, 1.0)?)
}

/// Complete integral of the third kind Pi(n|m).
pub fn comp_pi(n: f64, m: f64) -> Result<f64> {
    if !m.is_finite() || m >= 1.0 {
        return Err(domain("comp_pi", format!("requires m < 1, got {m}")));
    }
    if !n.is_finite() || n >= 1.0 - CHARACTERISTIC_GUARD {
        return Err(Error::SingularCharacteristic {
            func: "comp_pi",
            value: n,
        });
    }
    comp_pi_raw(n, m)
}

/// Complete Pi(n|m) given `p = 1 - n` and `y = 1 - m` separately, so
/// arguments just below 1 keep full relative accuracy; no guard band.
pub(crate) fn comp_pi_complement(n: f64, p: f64, m: f64, y: f64) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::SingularCharacteristic {
            func: "comp_pi",
            value: n,
        });
    }
    if n < -0.5 {
        let lead = FRAC_PI_2 * (n / (p * (n - m))).sqrt();
        if m == 0.0 {
            return Ok(lead);
        }
        return Ok(lead - m / (3.0 * n) * carlson_rj(0.0, y, 1.0, 1.0 - m / n)?);
    }
    let rf = carlson_rf(0.0, y, 1.0)?;
    if n == 0.0 {
        return Ok(rf);
    }
    Ok(rf + n / 3.0 * carlson_rj(0.0, y, 1.0, p)?)
}

fn comp_pi_raw(n: f64, m: f64) -> Result<f64> {
    let y = 1.0 - m;
    if n < -0.5 {
        // large negative characteristic: the direct form cancels, use the
        // reciprocal-characteristic identity instead
        let lead = FRAC_PI_2 * (n / ((1.0 - n) * (n - m))).sqrt();
        if m == 0.0 {
            return Ok(lead);
        }
        return Ok(lead - m / (3.0 * n) * carlson_rj(0.0, y, 1.0, 1.0 - m / n)?);
    }
    let rf = carlson_rf(0.0, y, 1.0)?;
    if n == 0.0 {
        return Ok(rf);
    }
    Ok(rf + n / 3.0 * carlson_rj(0.0, y, 1.0, 1.0 - n)?)
}
