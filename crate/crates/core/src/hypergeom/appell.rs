//! Appell F1 and F2 double series.

use crate::control::SeriesControl;
use crate::error::{domain, Error, Result};

use super::series::{gauss_2f1, Contiguous};

/// Parameters of Appell's F2(alpha; beta, beta2; gamma, gamma2; x, y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F2Params {
    pub alpha: f64,
    pub beta: f64,
    pub beta2: f64,
    pub gamma: f64,
    pub gamma2: f64,
}

impl F2Params {
    pub fn new(alpha: f64, beta: f64, beta2: f64, gamma: f64, gamma2: f64) -> Self {
        F2Params {
            alpha,
            beta,
            beta2,
            gamma,
            gamma2,
        }
    }

    fn swapped(self) -> Self {
        F2Params {
            beta: self.beta2,
            beta2: self.beta,
            gamma: self.gamma2,
            gamma2: self.gamma,
            ..self
        }
    }
}

// Below this |x| + |y| the antidiagonal double sum is used directly.
const DIRECT_RADIUS: f64 = 0.5;

/// Appell's F2.
///
/// Negative arguments are mapped into [0, 1) by the Euler-type
/// transformation; nonnegative arguments with `x + y < 1` are summed either
/// directly along antidiagonals or, closer to the boundary, as a single sum
/// over one index with the inner 2F1 generated by a contiguous recurrence.
pub fn appell_f2(p: F2Params, x: f64, y: f64, ctl: &SeriesControl) -> Result<f64> {
    if !x.is_finite() || !y.is_finite() {
        return Err(domain("appell_f2", "non-finite argument"));
    }
    if x == 0.0 && y == 0.0 {
        return Ok(1.0);
    }
    if y < 0.0 {
        let w = 1.0 - y;
        let q = F2Params {
            beta2: p.gamma2 - p.beta2,
            ..p
        };
        return Ok(w.powf(-p.alpha) * appell_f2(q, x / w, y / (y - 1.0), ctl)?);
    }
    if x < 0.0 {
        let w = 1.0 - x;
        let q = F2Params {
            beta: p.gamma - p.beta,
            ..p
        };
        return Ok(w.powf(-p.alpha) * appell_f2(q, x / (x - 1.0), y / w, ctl)?);
    }
    if x + y >= 1.0 {
        return Err(Error::NonConvergence {
            func: "appell_f2",
            terms: 0,
        });
    }
    if x + y <= DIRECT_RADIUS {
        return appell_f2_double_series(p, x, y, ctl);
    }
    // pick the orientation whose single-sum ratio is smaller
    if x / (1.0 - y) <= y / (1.0 - x) {
        f2_single_sum(p, x, y, ctl)
    } else {
        f2_single_sum(p.swapped(), y, x, ctl)
    }
}

/// F2 by direct summation along antidiagonals `j + l = n`.
///
/// Stops after three consecutive antidiagonals whose absolute sum is below
/// `rel_tol` times the running total.
pub fn appell_f2_double_series(p: F2Params, x: f64, y: f64, ctl: &SeriesControl) -> Result<f64> {
    if x.abs() + y.abs() >= 1.0 {
        return Err(Error::NonConvergence {
            func: "appell_f2",
            terms: 0,
        });
    }
    antidiagonal_sum("appell_f2", ctl, |n, j| {
        // ratio t(j, n-j) / t(j-1, n-j) for j >= 1, t(0, n) / t(0, n-1) for j = 0
        let nf = (n - 1) as f64;
        if j == 0 {
            (p.alpha + nf) * (p.beta2 + nf) / ((n as f64) * (p.gamma2 + nf)) * y
        } else {
            let jf = (j - 1) as f64;
            (p.alpha + nf) * (p.beta + jf) / ((j as f64) * (p.gamma + jf)) * x
        }
    })
}

/// Generic antidiagonal summation; `ratio(n, j)` links the term at
/// `(j, n - j)` to its neighbour on antidiagonal `n - 1`.
fn antidiagonal_sum(func: &'static str, ctl: &SeriesControl, ratio: impl Fn(usize, usize) -> f64) -> Result<f64> {
    let mut prev = vec![1.0];
    let mut total = 1.0;
    let mut quiet = 0;
    for n in 1..ctl.max_terms {
        let mut cur = Vec::with_capacity(n + 1);
        cur.push(prev[0] * ratio(n, 0));
        for j in 1..=n {
            cur.push(prev[j - 1] * ratio(n, j));
        }
        let diag: f64 = cur.iter().sum();
        let mag: f64 = cur.iter().map(|t| t.abs()).sum();
        total += diag;
        if mag <= ctl.rel_tol * total.abs() {
            quiet += 1;
            if quiet == 3 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
        if !total.is_finite() {
            break;
        }
        prev = cur;
    }
    Err(Error::NonConvergence {
        func,
        terms: ctl.max_terms,
    })
}

/// F2 = sum_j (alpha)_j (beta)_j / ((gamma)_j j!) x^j 2F1(alpha + j, beta2; gamma2; y)
/// for `x, y >= 0`, `x + y < 1`; the term ratio tends to `x / (1 - y)`.
fn f2_single_sum(p: F2Params, x: f64, y: f64, ctl: &SeriesControl) -> Result<f64> {
    let w = 1.0 - y;
    let f0 = gauss_2f1(p.alpha, p.beta2, p.gamma2, y, ctl)?;
    let f1 = w * gauss_2f1(p.alpha + 1.0, p.beta2, p.gamma2, y, ctl)?;
    let inner = Contiguous::new(p.alpha, p.beta2, p.gamma2, y, f0, f1);
    let coef = |j: f64| (p.alpha + j) * (p.beta + j) / ((p.gamma + j) * (j + 1.0));
    single_sum("appell_f2", x / w, ctl, inner, coef)
}

/// Sums `sum_j c_j rho^j f_j` where `c_{j+1} = c_j * coef(j)` and `f_j` is a
/// scaled contiguous sequence.
pub(crate) fn single_sum(
    func: &'static str,
    rho: f64,
    ctl: &SeriesControl,
    mut inner: Contiguous,
    coef: impl Fn(f64) -> f64,
) -> Result<f64> {
    let mut c = 1.0;
    let mut sum = inner.value();
    let mut last = sum.abs();
    for j in 0..ctl.max_terms {
        c *= coef(j as f64) * rho;
        inner.advance();
        let t = c * inner.value();
        sum += t;
        let r = if last > 0.0 { t.abs() / last } else { 0.0 };
        last = t.abs();
        let bound = r.max(rho);
        if t == 0.0 || (bound < 1.0 && t.abs() * bound / (1.0 - bound) <= ctl.rel_tol * sum.abs()) {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        func,
        terms: ctl.max_terms,
    })
}

/// Appell's F1(alpha; beta, beta2; gamma; x, y) for |x|, |y| < 1.
pub fn appell_f1(alpha: f64, beta: f64, beta2: f64, gamma: f64, x: f64, y: f64, ctl: &SeriesControl) -> Result<f64> {
    if x.abs() >= 1.0 || y.abs() >= 1.0 {
        return Err(Error::NonConvergence {
            func: "appell_f1",
            terms: 0,
        });
    }
    if x == 0.0 && y == 0.0 {
        return Ok(1.0);
    }
    antidiagonal_sum("appell_f1", ctl, |n, j| {
        let nf = (n - 1) as f64;
        let common = (alpha + nf) / (gamma + nf);
        if j == 0 {
            common * (beta2 + nf) / (n as f64) * y
        } else {
            let jf = (j - 1) as f64;
            common * (beta + jf) / (j as f64) * x
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::series::gauss_2f1_series;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    const P: F2Params = F2Params {
        alpha: 0.5,
        beta: 0.5,
        beta2: 1.0,
        gamma: 1.0,
        gamma2: 1.5,
    };

    #[test]
    fn origin_is_one() {
        assert_eq!(appell_f2(P, 0.0, 0.0, &ctl()).unwrap(), 1.0);
        assert_eq!(appell_f1(0.5, 0.5, 1.0, 1.5, 0.0, 0.0, &ctl()).unwrap(), 1.0);
    }

    #[test]
    fn collapse_to_gauss() {
        let v = appell_f2(P, 0.3, 0.0, &ctl()).unwrap();
        let g = gauss_2f1_series(0.5, 0.5, 1.0, 0.3, &ctl()).unwrap();
        assert!((v - g).abs() < 1e-14);
        let v = appell_f1(0.5, 0.3, 0.9, 1.7, 0.4, 0.4, &ctl()).unwrap();
        let g = gauss_2f1_series(0.5, 1.2, 1.7, 0.4, &ctl()).unwrap();
        assert!((v - g).abs() < 1e-14);
    }

    // F2(1/2; 1/2, 1; 1, 3/2; 0.3, 0.4), independent 30-digit double sum
    #[test]
    fn reference_point() {
        let expect = 1.3487116403196524;
        let a = appell_f2(P, 0.3, 0.4, &ctl()).unwrap();
        let b = appell_f2_double_series(P, 0.3, 0.4, &ctl()).unwrap();
        assert!((a - expect).abs() < 1e-13, "{a}");
        assert!((b - expect).abs() < 1e-13, "{b}");
    }

    #[test]
    fn single_sum_matches_double_sum_both_orientations() {
        for &(x, y) in &[(0.2, 0.6), (0.55, 0.3), (0.05, 0.8)] {
            let d = appell_f2_double_series(P, x, y, &ctl()).unwrap();
            let s1 = f2_single_sum(P, x, y, &ctl()).unwrap();
            let s2 = f2_single_sum(P.swapped(), y, x, &ctl()).unwrap();
            assert!((d - s1).abs() < 1e-13 * d, "{x} {y}");
            assert!((d - s2).abs() < 1e-13 * d, "{x} {y}");
        }
    }

    #[test]
    fn euler_transform_consistent() {
        // both arguments small enough that the raw series also converges
        let (x, y) = (0.3, -0.4);
        let d = appell_f2_double_series(P, x, y, &ctl()).unwrap();
        let t = appell_f2(P, x, y, &ctl()).unwrap();
        assert!((d - t).abs() < 1e-13);
        let (x, y) = (-0.35, 0.3);
        let d = appell_f2_double_series(P, x, y, &ctl()).unwrap();
        let t = appell_f2(P, x, y, &ctl()).unwrap();
        assert!((d - t).abs() < 1e-13);
    }

    #[test]
    fn outside_every_region_is_an_error() {
        assert!(matches!(
            appell_f2(P, 0.6, 0.5, &ctl()),
            Err(Error::NonConvergence { .. })
        ));
    }
}
