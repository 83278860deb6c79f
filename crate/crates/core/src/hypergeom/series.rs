//! Single-variable hypergeometric series.

use std::f64::consts::FRAC_2_PI;

use crate::control::SeriesControl;
use crate::elliptic::comp_k;
use crate::error::{domain, Error, Result};

/// Rising factorial (x)_k.
pub fn pochhammer(x: f64, k: usize) -> f64 {
    let mut p = 1.0;
    for i in 0..k {
        p *= x + i as f64;
    }
    p
}

fn is_nonpositive_integer(c: f64) -> bool {
    c <= 0.0 && c.fract() == 0.0
}

/// Sums `sum_k t_k` where `t_{k+1} = t_k * ratio(k)`, stopping on a
/// geometric tail bound with limiting ratio `limit`.
pub(crate) fn sum_ratio_series(
    func: &'static str,
    limit: f64,
    ctl: &SeriesControl,
    mut ratio: impl FnMut(usize) -> f64,
) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..ctl.max_terms {
        let r = ratio(k);
        term *= r;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        let rho = r.abs().max(limit);
        if rho < 1.0 && term.abs() * rho / (1.0 - rho) <= ctl.rel_tol * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        func,
        terms: ctl.max_terms,
    })
}

/// Gauss hypergeometric function 2F1(a, b; c; x) for real x < 1.
///
/// Known elementary and elliptic cases are returned in closed form; other
/// arguments below -1/2 go through the Pfaff transformation.
pub fn gauss_2f1(a: f64, b: f64, c: f64, x: f64, ctl: &SeriesControl) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(domain("gauss_2f1", format!("c = {c} is a nonpositive integer")));
    }
    if !x.is_finite() || x >= 1.0 {
        return Err(Error::NonConvergence {
            func: "gauss_2f1",
            terms: 0,
        });
    }
    if x == 0.0 || a == 0.0 || b == 0.0 {
        return Ok(1.0);
    }
    if let Some(v) = closed_form(a, b, c, x)? {
        return Ok(v);
    }
    if x < -0.5 {
        let w = 1.0 - x;
        let inner = gauss_2f1_series(a, c - b, c, x / (x - 1.0), ctl)?;
        return Ok(w.powf(-a) * inner);
    }
    gauss_2f1_series(a, b, c, x, ctl)
}

/// Plain power series of 2F1, no transformations.
pub fn gauss_2f1_series(a: f64, b: f64, c: f64, x: f64, ctl: &SeriesControl) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(domain("gauss_2f1", format!("c = {c} is a nonpositive integer")));
    }
    if x.abs() >= 1.0 {
        return Err(Error::NonConvergence {
            func: "gauss_2f1",
            terms: 0,
        });
    }
    sum_ratio_series("gauss_2f1", x.abs(), ctl, |k| {
        let k = k as f64;
        (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x
    })
}

fn closed_form(a: f64, b: f64, c: f64, x: f64) -> Result<Option<f64>> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if b == c {
        return Ok(Some((1.0 - x).powf(-a)));
    }
    if a == c {
        return Ok(Some((1.0 - x).powf(-b)));
    }
    if c != 1.5 && !(a == 0.5 && b == 0.5 && c == 1.0) {
        return Ok(None);
    }
    let v = match (a, b, c) {
        (0.5, 1.0, 1.5) => {
            if x > 0.0 {
                let s = x.sqrt();
                s.atanh() / s
            } else {
                let s = (-x).sqrt();
                s.atan() / s
            }
        }
        (0.5, 0.5, 1.5) => {
            if x > 0.0 {
                let s = x.sqrt();
                s.asin() / s
            } else {
                let s = (-x).sqrt();
                s.asinh() / s
            }
        }
        (1.0, 1.0, 1.5) => {
            if x > 0.0 {
                x.sqrt().asin() / (x * (1.0 - x)).sqrt()
            } else {
                (-x).sqrt().asinh() / (-x * (1.0 - x)).sqrt()
            }
        }
        (0.5, 0.5, 1.0) => FRAC_2_PI * comp_k(x)?,
        _ => return Ok(None),
    };
    Ok(Some(v))
}

/// Scaled contiguous sequence `f_k = (1-x)^k * 2F1(a0 + k, b; c; x)`,
/// generated by the three-term relation in the first parameter.
#[derive(Debug, Clone)]
pub(crate) struct Contiguous {
    a: f64,
    b: f64,
    c: f64,
    x: f64,
    prev: f64,
    cur: f64,
}

impl Contiguous {
    /// Starts at index 0 with scaled seeds for `a0` and `a0 + 1`.
    pub(crate) fn new(a0: f64, b: f64, c: f64, x: f64, f0: f64, f1: f64) -> Self {
        Contiguous {
            a: a0,
            b,
            c,
            x,
            prev: f0,
            cur: f1,
        }
    }

    /// Value at the current index.
    pub(crate) fn value(&self) -> f64 {
        self.prev
    }

    /// Moves to the next index.
    pub(crate) fn advance(&mut self) {
        let a = self.a + 1.0;
        let w = 1.0 - self.x;
        let next =
            ((self.c - a) * w * self.prev + (2.0 * a - self.c + (self.b - a) * self.x) * self.cur) / a;
        self.prev = self.cur;
        self.cur = next;
        self.a = a;
    }
}

/// Generalised hypergeometric series pFq(a; b; x).
pub fn pfq(a: &[f64], b: &[f64], x: f64, ctl: &SeriesControl) -> Result<f64> {
    if b.iter().any(|&c| is_nonpositive_integer(c)) {
        return Err(domain("pfq", "lower parameter is a nonpositive integer"));
    }
    let terminating = a.iter().any(|&v| is_nonpositive_integer(v));
    let limit = match a.len().cmp(&(b.len() + 1)) {
        std::cmp::Ordering::Less => 0.0,
        std::cmp::Ordering::Equal => {
            if x.abs() >= 1.0 && !terminating {
                return Err(Error::NonConvergence { func: "pfq", terms: 0 });
            }
            x.abs()
        }
        std::cmp::Ordering::Greater => {
            if !terminating {
                return Err(Error::NonConvergence { func: "pfq", terms: 0 });
            }
            0.0
        }
    };
    sum_ratio_series("pfq", limit, ctl, |k| {
        let k = k as f64;
        let num: f64 = a.iter().map(|v| v + k).product();
        let den: f64 = b.iter().map(|v| v + k).product();
        num / den * x / (k + 1.0)
    })
}

/// 4F3(a1..a4; b1..b3; x) as a power series (|x| < 1).
pub fn pfq_4f3(a: [f64; 4], b: [f64; 3], x: f64, ctl: &SeriesControl) -> Result<f64> {
    pfq(&a, &b, x, ctl)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
        assert_eq!(pochhammer(0.5, 3), 15.0 / 8.0);
    }

    #[test]
    fn closed_forms_agree_with_series() {
        for &(a, b, c) in &[(0.5, 1.0, 1.5), (0.5, 0.5, 1.5), (1.0, 1.0, 1.5), (0.5, 0.5, 1.0), (0.7, 1.3, 1.3)] {
            for &x in &[-0.4, -0.1, 0.2, 0.6] {
                let cf = gauss_2f1(a, b, c, x, &ctl()).unwrap();
                let s = gauss_2f1_series(a, b, c, x, &ctl()).unwrap();
                assert!((cf - s).abs() < 1e-14 * s.abs(), "{a} {b} {c} {x}: {cf} vs {s}");
            }
        }
    }

    #[test]
    fn pfaff_branch() {
        // 2F1(1, 1; 2; x) = -ln(1 - x) / x
        let x = -3.0;
        let v = gauss_2f1(1.0, 1.0, 2.0, x, &ctl()).unwrap();
        assert!((v - (-(1.0 - x).ln() / x)).abs() < 1e-14);
    }

    #[test]
    fn contiguous_matches_direct() {
        let (b, c, x) = (1.0, 1.5, 0.45);
        let w = 1.0 - x;
        let f0 = gauss_2f1_series(0.5, b, c, x, &ctl()).unwrap();
        let f1 = w * gauss_2f1_series(1.5, b, c, x, &ctl()).unwrap();
        let mut it = Contiguous::new(0.5, b, c, x, f0, f1);
        for k in 0..40usize {
            if [5usize, 20, 39].contains(&k) {
                let direct = w.powi(k as i32) * gauss_2f1_series(0.5 + k as f64, b, c, x, &ctl()).unwrap();
                assert!((it.value() - direct).abs() < 1e-12 * direct.abs());
            }
            it.advance();
        }
    }

    #[test]
    fn pfq_reduces_to_exp() {
        let v = pfq(&[], &[], 1.5, &ctl()).unwrap();
        assert!((v - 1.5f64.exp()).abs() < 1e-14);
        assert!(pfq(&[1.0, 1.0], &[], 0.1, &ctl()).is_err());
        assert_eq!(pfq_4f3([1.0, 1.0, 1.5, 1.5], [2.0, 2.0, 2.0], 0.0, &ctl()).unwrap(), 1.0);
    }

    #[test]
    fn divergent_arguments_rejected() {
        assert!(matches!(
            gauss_2f1(0.5, 0.5, 1.0, 1.0, &ctl()),
            Err(Error::NonConvergence { .. })
        ));
        assert!(gauss_2f1(0.5, 0.5, -2.0, 0.1, &ctl()).is_err());
    }
}
