//! Jacobi amplitude and elliptic functions, the zeta function, the scaled
//! theta functions and the closed-form integral of Z·sc.

use std::f64::consts::PI;

use crate::control::SeriesControl;
use crate::elliptic::{comp_e, comp_k, ellip_e};
use crate::error::{domain, Error, Result};
use crate::hypergeom::appell::{appell_f2, F2Params};

/// Distance from an odd multiple of K inside which sc is treated as infinite.
pub const POLE_GUARD: f64 = 1e-12;

const LANDEN_DEPTH: usize = 40;

/// A point `(u, m)` at which Jacobi functions are evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiPoint {
    pub u: f64,
    pub m: f64,
}

/// Values of the amplitude and the three basic functions at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiValues {
    pub am: f64,
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

impl JacobiPoint {
    pub fn new(u: f64, m: f64) -> Result<Self> {
        check_param("JacobiPoint", m)?;
        if !u.is_finite() {
            return Err(domain("JacobiPoint", "u must be finite"));
        }
        Ok(JacobiPoint { u, m })
    }

    pub fn eval(&self) -> Result<JacobiValues> {
        let am = jacobi_am(self.u, self.m)?;
        let (sn, cn) = am.sin_cos();
        Ok(JacobiValues {
            am,
            sn,
            cn,
            dn: (1.0 - self.m * sn * sn).sqrt(),
        })
    }
}

fn check_param(func: &'static str, m: f64) -> Result<()> {
    if !(0.0..1.0).contains(&m) {
        return Err(domain(func, format!("m = {m} outside [0, 1)")));
    }
    Ok(())
}

// u = u_r + 2kK with u_r in [-K, K]
fn reduce(u: f64, k: f64) -> (f64, f64) {
    let n = (u / (2.0 * k)).round();
    (u - 2.0 * n * k, n)
}

// descending Landen (AGM) for |u| <= K
fn am_reduced(u: f64, m: f64) -> f64 {
    if m == 0.0 || u == 0.0 {
        return u;
    }
    let mut a = [0.0; LANDEN_DEPTH + 1];
    let mut c = [0.0; LANDEN_DEPTH + 1];
    a[0] = 1.0;
    let mut b = (1.0 - m).sqrt();
    c[0] = m.sqrt();
    let mut n = 0;
    while c[n].abs() > f64::EPSILON * a[n] && n < LANDEN_DEPTH {
        let an = a[n];
        a[n + 1] = 0.5 * (an + b);
        c[n + 1] = 0.5 * (an - b);
        b = (an * b).sqrt();
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).asin());
    }
    phi
}

/// Jacobi amplitude am(u|m); continuous in u with am(u + 2K) = am(u) + pi.
pub fn jacobi_am(u: f64, m: f64) -> Result<f64> {
    check_param("jacobi_am", m)?;
    if !u.is_finite() {
        return Err(domain("jacobi_am", "u must be finite"));
    }
    if m == 0.0 {
        return Ok(u);
    }
    let k = comp_k(m)?;
    let (ur, n) = reduce(u, k);
    Ok(am_reduced(ur, m) + n * PI)
}

pub fn jacobi_sn(u: f64, m: f64) -> Result<f64> {
    Ok(jacobi_am(u, m)?.sin())
}

pub fn jacobi_cn(u: f64, m: f64) -> Result<f64> {
    Ok(jacobi_am(u, m)?.cos())
}

pub fn jacobi_dn(u: f64, m: f64) -> Result<f64> {
    let s = jacobi_sn(u, m)?;
    Ok((1.0 - m * s * s).sqrt())
}

fn near_pole(u: f64, k: f64) -> bool {
    let d = (u - k).rem_euclid(2.0 * k);
    d.min(2.0 * k - d) < POLE_GUARD
}

/// sc(u|m) = sn/cn, rejecting points within `POLE_GUARD` of (2k+1)K.
pub fn jacobi_sc(u: f64, m: f64) -> Result<f64> {
    check_param("jacobi_sc", m)?;
    let k = comp_k(m)?;
    if near_pole(u, k) {
        return Err(Error::Pole { func: "jacobi_sc", u });
    }
    Ok(jacobi_am(u, m)?.tan())
}

/// Jacobi zeta Z(u|m) = E(am u|m) - u E(m)/K(m).
pub fn jacobi_zeta(u: f64, m: f64) -> Result<f64> {
    check_param("jacobi_zeta", m)?;
    if m == 0.0 || u == 0.0 {
        return Ok(0.0);
    }
    let k = comp_k(m)?;
    let (ur, _) = reduce(u, k);
    let phi = am_reduced(ur, m);
    Ok(ellip_e(phi, m)? - ur * comp_e(m)? / k)
}

/// Nome q = exp(-pi K(1-m)/K(m)).
pub fn nome(m: f64) -> Result<f64> {
    if !(m > 0.0 && m < 1.0) {
        return Err(domain("nome", format!("m = {m} outside (0, 1)")));
    }
    Ok((-PI * comp_k(1.0 - m)? / comp_k(m)?).exp())
}

/// Scaled theta function: the classical theta_i(pi u / (2K), q).
pub fn theta(i: u8, u: f64, m: f64, ctl: &SeriesControl) -> Result<f64> {
    if !(1..=4).contains(&i) {
        return Err(domain("theta", format!("index {i} not in 1..=4")));
    }
    let q = nome(m)?;
    let z = PI * u / (2.0 * comp_k(m)?);
    let mut sum = match i {
        1 | 2 => 0.0,
        _ => 1.0,
    };
    for n in 0..ctl.max_terms {
        let nf = n as f64;
        let (t, expo) = match i {
            1 => {
                let s = if n % 2 == 0 { 2.0 } else { -2.0 };
                (s * ((2.0 * nf + 1.0) * z).sin(), (nf + 0.5) * (nf + 0.5))
            }
            2 => (2.0 * ((2.0 * nf + 1.0) * z).cos(), (nf + 0.5) * (nf + 0.5)),
            3 => (2.0 * (2.0 * (nf + 1.0) * z).cos(), (nf + 1.0) * (nf + 1.0)),
            _ => {
                let s = if n % 2 == 0 { -2.0 } else { 2.0 };
                (s * (2.0 * (nf + 1.0) * z).cos(), (nf + 1.0) * (nf + 1.0))
            }
        };
        let w = q.powf(expo);
        sum += w * t;
        // remaining weights fall off faster than geometrically with ratio q
        if 2.0 * w * q / (1.0 - q) <= ctl.rel_tol * sum.abs().max(f64::MIN_POSITIVE) || w == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        func: "theta",
        terms: ctl.max_terms,
    })
}

/// Jump of the closed form of the Z·sc integral across u = (2n+1)K.
pub fn int_z_sc_jump(m: f64) -> Result<f64> {
    if !(m > 0.0 && m < 1.0) {
        return Err(domain("int_z_sc", format!("m = {m} outside (0, 1)")));
    }
    Ok(PI * PI / (2.0 * comp_k(m)? * (1.0 - m).sqrt()))
}

/// Branch index that makes `int_z_sc` continuous in u: the n with
/// u in ((2n-1)K, (2n+1)K).
pub fn natural_branch(u: f64, m: f64) -> Result<i64> {
    check_param("natural_branch", m)?;
    Ok(reduce(u, comp_k(m)?).1 as i64)
}

/// int_0^u Z(t|m) sc(t|m) dt in closed form, plus `branch` times the jump.
///
/// Branch 0 is the integral itself on (-K, K); with `natural_branch(u, m)`
/// the result is the continuous integral for any u off the poles.
pub fn int_z_sc(u: f64, m: f64, branch: i64, ctl: &SeriesControl) -> Result<f64> {
    if !(m > 0.0 && m < 1.0) {
        return Err(domain("int_z_sc", format!("m = {m} outside (0, 1)")));
    }
    if u == 0.0 {
        return Ok(branch as f64 * int_z_sc_jump(m)?);
    }
    let k = comp_k(m)?;
    if near_pole(u, k) {
        return Err(Error::Pole { func: "int_z_sc", u });
    }
    let am = jacobi_am(u, m)?;
    let sc = am.tan();
    let p = F2Params::new(0.5, 0.5, 1.0, 1.0, 1.5);
    let f2 = appell_f2(p, m, (m - 1.0) * sc * sc, ctl)?;
    Ok(-am + PI * sc / (2.0 * k) * f2 + branch as f64 * int_z_sc_jump(m)?)
}

/// The Euler-transformed product sc·|cd|·F2(1/2; 1/2, 1/2; 1, 3/2; m cd^2, (1-m) sd^2),
/// equal to sc·F2(1/2; 1/2, 1; 1, 3/2; m, (m-1) sc^2).
pub fn sc_f2_euler(u: f64, m: f64, ctl: &SeriesControl) -> Result<f64> {
    let v = JacobiPoint::new(u, m)?.eval()?;
    if v.cn.abs() < POLE_GUARD {
        return Err(Error::Pole { func: "sc_f2_euler", u });
    }
    let (cd, sd) = (v.cn / v.dn, v.sn / v.dn);
    let p = F2Params::new(0.5, 0.5, 0.5, 1.0, 1.5);
    Ok(v.sn / v.cn * cd.abs() * appell_f2(p, m * cd * cd, (1.0 - m) * sd * sd, ctl)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn degenerate_parameter() {
        for &u in &[0.3, -2.0, 7.5] {
            assert_eq!(jacobi_sn(u, 0.0).unwrap(), u.sin());
        }
        assert_eq!(jacobi_dn(0.0, 0.7).unwrap(), 1.0);
        assert!(jacobi_am(1.0, 1.0).is_err());
    }

    // mpmath ellipfun at 25 digits
    #[test]
    fn reference_values() {
        let v = JacobiPoint::new(2.0, 0.7).unwrap().eval().unwrap();
        assert!((v.sn - 0.9991470517177337).abs() < 1e-14);
        assert!((v.cn - 0.04129369254208582).abs() < 1e-14);
        assert!((v.dn - 0.5488110953056910).abs() < 1e-14);
        let v = JacobiPoint::new(-13.0, 0.99).unwrap().eval().unwrap();
        assert!((v.sn - 0.9468380779010324).abs() < 1e-12);
        assert!((v.cn - 0.3217105130962904).abs() < 1e-12);
        assert!((v.dn - 0.3353545552013744).abs() < 1e-12);
        assert!((jacobi_sc(1.0, 0.85).unwrap() - 1.2235495251841479).abs() < 1e-14);
        assert!((jacobi_zeta(0.7, 0.85).unwrap() - 0.28269006353134067).abs() < 1e-14);
    }

    #[test]
    fn amplitude_period_shift() {
        let m = 0.6;
        let k = comp_k(m).unwrap();
        for &u in &[0.2, -0.9, 1.7] {
            let d = jacobi_am(u + 2.0 * k, m).unwrap() - jacobi_am(u, m).unwrap();
            assert!((d - PI).abs() < 1e-13);
        }
    }

    #[test]
    fn sc_pole_guard() {
        let m = 0.85;
        let k = comp_k(m).unwrap();
        assert!(matches!(jacobi_sc(k, m), Err(Error::Pole { .. })));
        assert!(matches!(jacobi_sc(-3.0 * k, m), Err(Error::Pole { .. })));
        assert!(jacobi_sc(k - 1e-6, m).unwrap() > 1e5);
    }

    #[test]
    fn zeta_zeros() {
        for &m in &[0.2, 0.85] {
            let k = comp_k(m).unwrap();
            assert_eq!(jacobi_zeta(0.0, m).unwrap(), 0.0);
            assert!(jacobi_zeta(k, m).unwrap().abs() < 1e-15);
        }
    }

    #[test]
    fn theta_reference_values() {
        let c = ctl();
        assert_eq!(theta(1, 0.0, 0.4, &c).unwrap(), 0.0);
        let expect = [0.442124776770683717, 0.796656231317087775, 1.04547631505618326, 0.954517460730419334];
        for (i, e) in expect.iter().enumerate() {
            let v = theta(i as u8 + 1, 0.6, 0.5, &c).unwrap();
            assert!((v - e).abs() < 1e-15, "theta{}: {v}", i + 1);
        }
        assert!((theta(4, 0.0, 0.3, &c).unwrap() - 0.955445620281628656).abs() < 1e-15);
        assert!(theta(5, 0.0, 0.3, &c).is_err());
    }

    #[test]
    fn zeta_is_log_derivative_of_theta4() {
        let (u, m) = (0.5, 0.5);
        let c = ctl();
        let z = jacobi_zeta(u, m).unwrap();
        let fd = |h: f64| {
            ((theta(4, u + h, m, &c).unwrap()).ln() - (theta(4, u - h, m, &c).unwrap()).ln()) / (2.0 * h)
        };
        // Richardson step on two central differences
        let (d1, d2) = (fd(1e-3), fd(5e-4));
        let d = (4.0 * d2 - d1) / 3.0;
        assert!((d - z).abs() < 1e-10, "{d} vs {z}");
    }

    #[test]
    fn int_z_sc_values() {
        let c = ctl();
        assert_eq!(int_z_sc(0.0, 0.5, 0, &c).unwrap(), 0.0);
        let v = int_z_sc(1.5, 0.85, 0, &c).unwrap();
        assert!((v - 0.4037322023824837).abs() < 1e-13, "{v}");
        let jump = int_z_sc_jump(0.85).unwrap();
        assert!((jump - 5.333410031264383).abs() < 1e-12);
        // continuous integral past the first pole, mpmath quadrature
        let k = comp_k(0.85).unwrap();
        let u = k + 0.3;
        let b = natural_branch(u, 0.85).unwrap();
        assert_eq!(b, 1);
        let v = int_z_sc(u, 0.85, b, &c).unwrap();
        assert!((v - 1.348001197425633).abs() < 1e-12, "{v}");
        assert!(matches!(int_z_sc(k, 0.85, 0, &c), Err(Error::Pole { .. })));
    }

    #[test]
    fn euler_form_matches() {
        let c = ctl();
        for &(u, m) in &[(0.4, 0.3), (1.5, 0.85), (-1.0, 0.6), (2.9, 0.5)] {
            let sc = jacobi_sc(u, m).unwrap();
            let p = F2Params::new(0.5, 0.5, 1.0, 1.0, 1.5);
            let direct = crate::hypergeom::appell::appell_f2_double_series(p, m, (m - 1.0) * sc * sc, &c).map(|f| sc * f);
            let e = sc_f2_euler(u, m, &c).unwrap();
            if let Ok(d) = direct {
                assert!((d - e).abs() < 1e-10 * e.abs().max(1.0));
            }
            let g = int_z_sc(u, m, 0, &c).unwrap() + jacobi_am(u, m).unwrap();
            assert!((g - PI / (2.0 * comp_k(m).unwrap()) * e).abs() < 1e-12);
        }
    }
}
