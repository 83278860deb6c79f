//! The integral I(m, A; theta) = int_0^theta atanh(A / sqrt(1 - m sin^2(t/2))) dt
//! and its closed forms.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use crate::control::SeriesControl;
use crate::elliptic::{carlson_rf, carlson_rj, ellip_f, ellip_pi};
use crate::error::{domain, Error, Result};
use crate::oracle::quad::{quad_1d, QuadratureSpec};

use super::appell::{appell_f1, appell_f2, F2Params};
use super::series::{gauss_2f1, pfq_4f3, Contiguous};

/// Gap `1 - m - A^2` below which the definite integral is taken from the
/// surface value instead of the series.
pub const NEAR_BOUNDARY_GAP: f64 = 1e-4;
/// Public entry points reject gaps in `(EXACT_BOUNDARY_GAP, BOUNDARY_GAP)`.
pub const BOUNDARY_GAP: f64 = 1e-9;
/// Gaps this small are treated as lying on the boundary.
pub const EXACT_BOUNDARY_GAP: f64 = 1e-15;
/// Below this |sin(theta/2)| the small-angle series replaces the main sum.
pub const SMALL_ANGLE: f64 = 0.05;

/// Arguments of I(m, A; theta).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IhygArgs {
    pub m: f64,
    pub a: f64,
    pub theta: f64,
}

impl IhygArgs {
    pub fn new(m: f64, a: f64, theta: f64) -> Self {
        IhygArgs { m, a, theta }
    }

    fn validate(&self, func: &'static str) -> Result<()> {
        let IhygArgs { m, a, theta } = *self;
        if !(m.is_finite() && a.is_finite() && theta.is_finite()) {
            return Err(domain(func, "non-finite argument"));
        }
        if !(0.0..=1.0).contains(&m) {
            return Err(domain(func, format!("m = {m} outside [0, 1]")));
        }
        if a.abs() >= 1.0 {
            return Err(domain(func, format!("|A| = {} must be below 1", a.abs())));
        }
        if theta.abs() > PI {
            return Err(domain(func, format!("theta = {theta} outside [-pi, pi]")));
        }
        if a * a > 1.0 - m + EXACT_BOUNDARY_GAP {
            return Err(domain(func, format!("A^2 = {} exceeds 1 - m = {}", a * a, 1.0 - m)));
        }
        Ok(())
    }
}

fn gap(m: f64, a: f64) -> f64 {
    (1.0 - m) - a * a
}

/// I(m, A; theta) for theta in [-pi, pi].
pub fn i_hyg(args: IhygArgs, ctl: &SeriesControl) -> Result<f64> {
    args.validate("i_hyg")?;
    let IhygArgs { m, a, theta } = args;
    if a == 0.0 || theta == 0.0 {
        return Ok(0.0);
    }
    if theta.abs() == PI {
        return Ok(theta.signum() * i_hyg_pi(m, a, ctl)?);
    }
    let g = gap(m, a);
    if g < BOUNDARY_GAP {
        return Err(Error::Boundary {
            func: "i_hyg",
            sum: m + a * a,
        });
    }
    let s = (0.5 * theta).sin();
    if s.abs() < SMALL_ANGLE {
        return small_angle_series(m, a, s, ctl);
    }
    collapsed_sum(m, a, theta, ctl)
}

/// I(m, A; pi), the definite integral over the full half-turn.
pub fn i_hyg_pi(m: f64, a: f64, ctl: &SeriesControl) -> Result<f64> {
    IhygArgs::new(m, a, PI).validate("i_hyg_pi")?;
    let g = gap(m, a);
    if g > EXACT_BOUNDARY_GAP && g < BOUNDARY_GAP {
        return Err(Error::Boundary {
            func: "i_hyg_pi",
            sum: m + a * a,
        });
    }
    i_hyg_pi_unguarded(m, a, ctl)
}

/// I(m, A; pi) without the rejection band below the boundary.
pub(crate) fn i_hyg_pi_unguarded(m: f64, a: f64, ctl: &SeriesControl) -> Result<f64> {
    let g = gap(m, a);
    if g <= EXACT_BOUNDARY_GAP {
        return i_hyg_pi_exact(m, 1.0 - m, a, 0.0, ctl);
    }
    i_hyg_pi_exact(m, 1.0 - m, a, g, ctl)
}

/// I(m, A; pi) for callers that know `1 - m` and the gap `1 - m - A^2`
/// exactly (the field assemblies, where both are ratios of squares).
/// A zero gap means the boundary itself.
pub(crate) fn i_hyg_pi_exact(m: f64, one_minus_m: f64, a: f64, gap: f64, ctl: &SeriesControl) -> Result<f64> {
    if a == 0.0 {
        return Ok(0.0);
    }
    if gap <= 0.0 {
        if m == 0.0 {
            return Err(domain("i_hyg_pi", "A = 1 at m = 0 is divergent"));
        }
        return Ok(a.signum() * i_hyg_surface(m)?);
    }
    if gap < NEAR_BOUNDARY_GAP && m > 0.0 {
        return near_boundary_pi(m, one_minus_m, a, gap);
    }
    let (first, _) = collapsed_parts(m, a.abs(), false, 1.0, 0.0, ctl)?;
    Ok(PI * a * first)
}

/// Both sums of the collapsed representation, already divided by the
/// scale factors. The second is skipped unless `want_second`.
fn collapsed_parts(m: f64, a_abs: f64, want_second: bool, s_abs: f64, cs: f64, ctl: &SeriesControl) -> Result<(f64, f64)> {
    let y = a_abs * a_abs;
    let w = 1.0 - y;
    let sw = w.sqrt();
    let c = m / w;
    // g_j = (1-y)^(j+1/2) 2F1(1/2 + j, 1; 3/2; y)
    let mut g = Contiguous::new(0.5, 1.0, 1.5, y, sw * a_abs.atanh() / a_abs, sw);
    // h_j = s^(2j) 2F1(j, 1; 3/2; cos^2(theta/2)); start at j = 1
    let h1 = if cs == 0.0 { 1.0 } else { s_abs * cs.asin() / cs };
    let mut h = Contiguous::new(0.0, 1.0, 1.5, cs * cs, 1.0, h1);
    h.advance();

    let mut first = 0.0;
    let mut second = 0.0;
    let mut p = 1.0; // (1/2)_j / j!
    let mut cj = 1.0;
    let mut last = (f64::INFINITY, f64::INFINITY);
    for j in 0..ctl.max_terms {
        let gj = g.value();
        let t1 = p * p * cj * gj;
        let t2 = if want_second { p * cj * gj * h.value() } else { 0.0 };
        first += t1;
        second += t2;
        let r1 = (t1 / last.0).max(c);
        let r2 = if want_second { (t2 / last.1).max(c) } else { 0.0 };
        last = (t1, t2);
        let ok1 = r1 < 1.0 && t1 * r1 / (1.0 - r1) <= ctl.rel_tol * first;
        let ok2 = !want_second || (r2 < 1.0 && t2 * r2 / (1.0 - r2) <= ctl.rel_tol * second);
        if j > 0 && ok1 && ok2 {
            return Ok((first / sw, second / (sw * s_abs * s_abs)));
        }
        if t1 == 0.0 && t2 == 0.0 {
            return Ok((first / sw, second / (sw * s_abs * s_abs)));
        }
        let jf = j as f64;
        p *= (jf + 0.5) / (jf + 1.0);
        cj *= c;
        g.advance();
        if want_second {
            h.advance();
        }
    }
    Err(Error::NonConvergence {
        func: "i_hyg",
        terms: ctl.max_terms,
    })
}

fn collapsed_sum(m: f64, a: f64, theta: f64, ctl: &SeriesControl) -> Result<f64> {
    let s = (0.5 * theta).sin();
    let cs = (0.5 * theta).cos();
    let (first, second) = collapsed_parts(m, a.abs(), true, s.abs(), cs, ctl)?;
    Ok(PI * a * s.signum() * first - 2.0 * a * s * cs * second)
}

/// Series in `m s^2` with one 2F1 in `A^2` and one in `s^2` per term;
/// fast when `s` is small.
fn small_angle_series(m: f64, a: f64, s: f64, ctl: &SeriesControl) -> Result<f64> {
    if s == 0.0 {
        return Ok(0.0);
    }
    let aa = a.abs();
    let y = aa * aa;
    let w = 1.0 - y;
    let sw = w.sqrt();
    let s2 = s * s;
    let rho = m * s2 / w;
    let mut g = Contiguous::new(0.5, 1.0, 1.5, y, sw * aa.atanh() / aa, sw);
    let mut sum = 0.0;
    let mut p = 1.0; // (1/2)_l / l!
    let mut rl = 1.0;
    let mut last = f64::INFINITY;
    for l in 0..ctl.max_terms {
        let lf = l as f64;
        let inner = gauss_2f1(0.5, 0.5 + lf, 1.5 + lf, s2, ctl)?;
        let t = p / (2.0 * lf + 1.0) * rl * g.value() * inner;
        sum += t;
        let r = (t / last).max(rho);
        last = t;
        if t == 0.0 || (r < 1.0 && t * r / (1.0 - r) <= ctl.rel_tol * sum) {
            return Ok(2.0 * a * s * sum / sw);
        }
        p *= (lf + 0.5) / (lf + 1.0);
        rl *= rho;
        g.advance();
    }
    Err(Error::NonConvergence {
        func: "i_hyg",
        terms: ctl.max_terms,
    })
}

// d/dA I(m, a; pi) written in terms of tau with a = a_b - tau^2, where
// a_b = sqrt(1 - m); returns 2 tau * dI/dA, which stays finite at tau = 0.
fn weighted_slope(m: f64, y: f64, a_b: f64, tau: f64) -> Result<f64> {
    let a = a_b - tau * tau;
    let one_minus_a2 = 1.0 - a * a;
    // 1 - n with n = m / (1 - a^2), computed without cancellation
    let p = tau * tau * (a_b + a) / one_minus_a2;
    let n = m / one_minus_a2;
    let rf = carlson_rf(0.0, y, 1.0)?;
    if tau == 0.0 {
        // 2 tau * Pi(n|m) -> limit of the 1/sqrt(1 - n) part
        let coef = 2.0 * a * a / one_minus_a2;
        let lead = FRAC_PI_2 * (n / (n - m)).sqrt() / ((a_b + a) / one_minus_a2).sqrt();
        return Ok(2.0 * coef * lead);
    }
    let pi_n = rf + n / 3.0 * carlson_rj(0.0, y, 1.0, p)?;
    Ok(2.0 * tau * (2.0 * rf + 2.0 * a * a / one_minus_a2 * pi_n))
}

fn near_boundary_pi(m: f64, y: f64, a: f64, gap: f64) -> Result<f64> {
    let a_b = y.sqrt();
    let surface = i_hyg_surface(m)?;
    // a_b - |a| = gap / (a_b + |a|)
    let tau_max = (gap / (a_b + a.abs())).sqrt();
    let failure = std::cell::Cell::new(None);
    let f = |tau: f64| match weighted_slope(m, y, a_b, tau) {
        Ok(v) => v,
        Err(e) => {
            failure.set(Some(e));
            0.0
        }
    };
    let (corr, _) = quad_1d(f, 0.0, tau_max, &QuadratureSpec::with_tol(1e-16, 1e-13))?;
    if let Some(e) = failure.take() {
        return Err(e);
    }
    Ok(a.signum() * (surface - corr))
}

/// Surface value I(m, sqrt(1 - m); pi) for m in (0, 1).
///
/// For m <= 1/3 this is `-(pi mu / 8) 4F3(1,1,3/2,3/2; 2,2,2; mu) - (pi/2) ln(-mu/16)`
/// with mu = m/(m-1); above that the same function is summed as its
/// expansion about m = 1, which converges like (1-m)^n.
pub fn i_hyg_surface(m: f64) -> Result<f64> {
    if !(m > 0.0 && m < 1.0) {
        return Err(domain("i_hyg_surface", format!("m = {m} outside (0, 1)")));
    }
    if m <= 1.0 / 3.0 {
        surface_4f3(m)
    } else {
        surface_log_series(m)
    }
}

fn surface_4f3(m: f64) -> Result<f64> {
    let mu = m / (m - 1.0);
    let ctl = SeriesControl::default();
    let f = pfq_4f3([1.0, 1.0, 1.5, 1.5], [2.0, 2.0, 2.0], mu, &ctl)?;
    Ok(-PI * mu / 8.0 * f - FRAC_PI_2 * (-mu / 16.0).ln())
}

// K(t) = sum_j a_j u^j (d_j - ln(u)/2) with u = 1 - t, a_j = ((1/2)_j / j!)^2,
// d_0 = 2 ln 2; integrating against du / ((1 - u) sqrt(u)) from 0 to 1 - m.
fn surface_log_series(m: f64) -> Result<f64> {
    let x = 1.0 - m;
    let lnx = x.ln();
    let mut a_j = 1.0;
    let mut d_j = 2.0 * LN_2;
    let mut sum_a = 0.0;
    let mut sum_ad = 0.0;
    let mut xp = x.sqrt();
    let mut total = 0.0;
    for n in 0..10_000 {
        let nf = n as f64;
        sum_a += a_j;
        sum_ad += a_j * d_j;
        let p = nf + 0.5;
        let t = xp * (sum_ad / p - 0.5 * sum_a * (lnx / p - 1.0 / (p * p)));
        total += t;
        if n > 2 && t.abs() * x / (1.0 - x) <= 1e-16 * total.abs() {
            return Ok(total);
        }
        let r = (nf + 0.5) / (nf + 1.0);
        a_j *= r * r;
        d_j -= 1.0 / ((nf + 1.0) * (2.0 * nf + 1.0));
        xp *= x;
    }
    Err(Error::NonConvergence {
        func: "i_hyg_surface",
        terms: 10_000,
    })
}

/// Surface value by adaptive quadrature of int_m^1 K(t) / (t sqrt(1 - t)) dt.
pub fn i_hyg_surface_quadrature(m: f64) -> Result<f64> {
    if !(m > 0.0 && m < 1.0) {
        return Err(domain("i_hyg_surface", format!("m = {m} outside (0, 1)")));
    }
    // t = 1 - u^2 removes the inverse square root at t = 1; K(t) = R_F(0, u^2, 1)
    let f = |u: f64| {
        let t = 1.0 - u * u;
        2.0 * carlson_rf(0.0, u * u, 1.0).unwrap_or(f64::NAN) / t
    };
    let (v, _) = quad_1d(f, 0.0, (1.0 - m).sqrt(), &QuadratureSpec::with_tol(1e-15, 1e-13))?;
    Ok(v)
}

/// dI/dA = 2 F(theta/2|m) + (2A^2 / (1 - A^2)) Pi(m / (1 - A^2); theta/2|m).
pub fn di_hyg_da(m: f64, a: f64, theta: f64) -> Result<f64> {
    if a.abs() >= 1.0 {
        return Err(domain("di_hyg_dA", "|A| must be below 1"));
    }
    let phi = 0.5 * theta;
    let f = ellip_f(phi, m)?;
    if a == 0.0 {
        return Ok(2.0 * f);
    }
    let w = 1.0 - a * a;
    Ok(2.0 * f + 2.0 * a * a / w * ellip_pi(m / w, phi, m)?)
}

/// dI/dm = (A/m) [Pi(m / (1 - A^2); theta/2|m) - F(theta/2|m)].
pub fn di_hyg_dm(m: f64, a: f64, theta: f64) -> Result<f64> {
    if !(m > 0.0 && m < 1.0) {
        return Err(domain("di_hyg_dm", format!("m = {m} outside (0, 1)")));
    }
    if a.abs() >= 1.0 {
        return Err(domain("di_hyg_dm", "|A| must be below 1"));
    }
    let phi = 0.5 * theta;
    let w = 1.0 - a * a;
    Ok(a / m * (ellip_pi(m / w, phi, m)? - ellip_f(phi, m)?))
}

/// Truncated triple sum in (m s^2, A^2, s^2) for I(m, A; theta) with s = sin(theta/2).
pub fn lauricella_f11_triple(m: f64, a: f64, s: f64, ctl: &SeriesControl) -> Result<f64> {
    if s == 0.0 || a == 0.0 {
        return Ok(0.0);
    }
    let x = m * s * s;
    let y = a * a;
    let z = s * s;
    if x.abs() >= 1.0 || y >= 1.0 || z >= 1.0 {
        return Err(Error::NonConvergence {
            func: "lauricella_f11_triple",
            terms: 0,
        });
    }
    let tol = ctl.rel_tol;
    let cap = ctl.max_terms.min(4000);
    let mut total = 0.0;
    // t(l, 0, 0)
    let mut tl = 1.0;
    let mut plane_last = f64::INFINITY;
    for l in 0..cap {
        let lf = l as f64;
        let mut plane = 0.0;
        let mut tj = tl;
        let mut row_last = f64::INFINITY;
        for j in 0..cap {
            let jf = j as f64;
            let mut tk = tj;
            let mut row = 0.0;
            for k in 0..cap {
                let kf = k as f64;
                row += tk;
                let r = (0.5 + kf) * (0.5 + lf + kf) / ((1.5 + lf + kf) * (kf + 1.0)) * z;
                tk *= r;
                let rb = r.max(z);
                if tk * rb / (1.0 - rb) <= tol * row.abs().max(f64::MIN_POSITIVE) {
                    row += tk;
                    break;
                }
            }
            plane += row;
            let rr = (row / row_last).max(y);
            row_last = row;
            if j > 0 && row * rr / (1.0 - rr) <= tol * plane {
                break;
            }
            tj *= (1.0 + jf) * (0.5 + lf + jf) / ((1.5 + jf) * (jf + 1.0)) * y;
        }
        total += plane;
        let rp = (plane / plane_last).max(x);
        plane_last = plane;
        if l > 0 && (plane == 0.0 || (rp < 1.0 && plane * rp / (1.0 - rp) <= tol * total)) {
            return Ok(2.0 * a * s * total);
        }
        tl *= (0.5 + lf) * (0.5 + lf) / ((1.5 + lf) * (lf + 1.0)) * x;
    }
    Err(Error::NonConvergence {
        func: "lauricella_f11_triple",
        terms: cap,
    })
}

/// The three single-sum rearrangements of the triple series.
///
/// * variant 1: sum over the `m s^2` index with two 2F1 factors;
/// * variant 2: sum over the `A^2` index with an Appell F1 factor;
/// * variant 3: sum over the `s^2` index with an Appell F2 factor.
pub fn i_hyg_alt(variant: u8, m: f64, a: f64, s: f64, ctl: &SeriesControl) -> Result<f64> {
    if a == 0.0 || s == 0.0 {
        return Ok(0.0);
    }
    match variant {
        1 => small_angle_series(m, a, s, ctl),
        2 => {
            let y = a * a;
            let (x1, x2) = (m * s * s, s * s);
            let mut sum = 0.0;
            let mut c = 1.0; // (1/2)_j / (3/2)_j * y^j
            let mut last = f64::INFINITY;
            for j in 0..ctl.max_terms {
                let jf = j as f64;
                let t = c * appell_f1(0.5, 0.5 + jf, 0.5, 1.5, x1, x2, ctl)?;
                sum += t;
                let r = (t / last).max(y);
                last = t;
                if r < 1.0 && t * r / (1.0 - r) <= ctl.rel_tol * sum {
                    return Ok(2.0 * a * s * sum);
                }
                c *= (0.5 + jf) / (1.5 + jf) * y;
            }
            Err(Error::NonConvergence {
                func: "i_hyg_alt",
                terms: ctl.max_terms,
            })
        }
        3 => {
            let z = s * s;
            let mut sum = 0.0;
            let mut c = 1.0; // (1/2)_k^2 / ((3/2)_k k!) * z^k
            let mut last = f64::INFINITY;
            for k in 0..ctl.max_terms {
                let kf = k as f64;
                let p = F2Params::new(0.5, 0.5 + kf, 1.0, 1.5 + kf, 1.5);
                let t = c * appell_f2(p, m * z, a * a, ctl)?;
                sum += t;
                let r = (t / last).max(z);
                last = t;
                if r < 1.0 && t * r / (1.0 - r) <= ctl.rel_tol * sum {
                    return Ok(2.0 * a * s * sum);
                }
                c *= (0.5 + kf) * (0.5 + kf) / ((1.5 + kf) * (kf + 1.0)) * z;
            }
            Err(Error::NonConvergence {
                func: "i_hyg_alt",
                terms: ctl.max_terms,
            })
        }
        _ => Err(domain("i_hyg_alt", format!("variant {variant} not in 1..=3"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    fn quad_ref(m: f64, a: f64, theta: f64) -> f64 {
        let f = |t: f64| (a / (1.0 - m * (0.5 * t).sin().powi(2)).sqrt()).atanh();
        quad_1d(f, 0.0, theta, &QuadratureSpec::with_tol(1e-16, 1e-14)).unwrap().0
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(i_hyg(IhygArgs::new(0.4, 0.0, 2.0), &ctl()).unwrap(), 0.0);
        let v = i_hyg(IhygArgs::new(0.0, 0.6, 2.0), &ctl()).unwrap();
        assert!((v - 2.0 * 0.6f64.atanh()).abs() < 1e-14);
        let v = i_hyg_pi(0.0, 0.6, &ctl()).unwrap();
        assert!((v - PI * 0.6f64.atanh()).abs() < 1e-14);
        assert_eq!(i_hyg_pi(0.3, 0.0, &ctl()).unwrap(), 0.0);
    }

    // 30-digit quadrature of the defining integral
    #[test]
    fn reference_values() {
        let v = i_hyg(IhygArgs::new(0.5, 0.3, 2.0), &ctl()).unwrap();
        assert!((v - 0.674784536677021828).abs() < 1e-14, "{v}");
        let v = i_hyg_pi(0.6, 0.25, &ctl()).unwrap();
        assert!((v - 1.011150368790427519).abs() < 1e-14, "{v}");
    }

    #[test]
    fn matches_quadrature_across_regimes() {
        for &(m, a, th) in &[
            (0.5, 0.3, 2.0),
            (0.9, 0.2, 0.1),
            (0.3, 0.8, 0.05),
            (0.94, 0.1, 3.0),
            (0.49, 0.7, 0.3),
            (0.5, -0.3, -1.0),
            (0.2, 0.85, 0.099),
            (0.7, 0.5, 3.1),
        ] {
            let v = i_hyg(IhygArgs::new(m, a, th), &ctl()).unwrap();
            let q = quad_ref(m, a, th);
            assert!((v - q).abs() < 1e-12 * q.abs().max(1e-3), "{m} {a} {th}: {v} vs {q}");
        }
    }

    #[test]
    fn surface_forms_agree() {
        for i in 1..10 {
            let m = i as f64 / 10.0;
            let s = i_hyg_surface(m).unwrap();
            let q = i_hyg_surface_quadrature(m).unwrap();
            assert!((s - q).abs() < 1e-11 * q, "{m}: {s} vs {q}");
        }
        // both sides of the switch between the two series
        let lo = surface_4f3(1.0 / 3.0).unwrap();
        let hi = surface_log_series(1.0 / 3.0).unwrap();
        assert!((lo - hi).abs() < 1e-13);
    }

    #[test]
    fn near_boundary_route_is_continuous() {
        let m = 0.6;
        let a_b = (1.0f64 - m).sqrt();
        for &g in &[2e-4, 8e-5, 3e-5] {
            let a = (1.0 - m - g).sqrt();
            let plain = PI * a * collapsed_parts(m, a, false, 1.0, 0.0, &ctl()).unwrap().0;
            let routed = near_boundary_pi(m, 1.0 - m, a, g).unwrap();
            assert!((plain - routed).abs() < 1e-11, "{g}: {plain} vs {routed}");
        }
        let at = i_hyg_pi_unguarded(m, a_b, &ctl()).unwrap();
        assert!((at - i_hyg_surface(m).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn boundary_band_rejected() {
        let m = 0.5;
        let a = (0.5f64 - 1e-11).sqrt();
        assert!(matches!(i_hyg_pi(m, a, &ctl()), Err(Error::Boundary { .. })));
        assert!(i_hyg_pi_unguarded(m, a, &ctl()).is_ok());
    }

    #[test]
    fn derivatives_match_reference() {
        // central differences of the defining integral at 30 digits
        let da = di_hyg_da(0.5, 0.3, 2.0).unwrap();
        let dm = di_hyg_dm(0.5, 0.3, 2.0).unwrap();
        assert!((da - 2.426969451714723896).abs() < 1e-13, "{da}");
        assert!((dm - 0.140362184566870875).abs() < 1e-13, "{dm}");
        assert_eq!(di_hyg_da(0.4, 0.0, 1.0).unwrap(), 2.0 * ellip_f(0.5, 0.4).unwrap());
    }

    #[test]
    fn series_variants_agree() {
        let (m, a, s) = (0.3, 0.2, 0.4f64);
        let expect = 0.16829161546277278;
        let th = 2.0 * s.asin();
        let main = i_hyg(IhygArgs::new(m, a, th), &ctl()).unwrap();
        assert!((main - expect).abs() < 1e-14);
        let tri = lauricella_f11_triple(m, a, s, &ctl()).unwrap();
        assert!((tri - expect).abs() < 1e-13, "{tri}");
        for v in 1..=3 {
            let alt = i_hyg_alt(v, m, a, s, &ctl()).unwrap();
            assert!((alt - expect).abs() < 1e-13, "variant {v}: {alt}");
        }
        assert!(i_hyg_alt(4, m, a, s, &ctl()).is_err());
    }
}
