//! Adaptive Gauss–Kronrod (7/15) quadrature in one dimension, and iterated
//! versions for rectangles and boxes.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{domain, Error, Result};

/// Tolerances and limits for the adaptive rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// `[lower, upper]`: endpoints carrying an integrable singularity.
    pub singular_endpoints: [bool; 2],
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
            singular_endpoints: [false, false],
        }
    }
}

impl QuadratureSpec {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        QuadratureSpec {
            abs_tol,
            rel_tol,
            ..Default::default()
        }
    }

    pub fn singular(mut self, lower: bool, upper: bool) -> Self {
        self.singular_endpoints = [lower, upper];
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) || self.max_subdivisions < 32 {
            return Err(domain("QuadratureSpec", format!("{self:?}")));
        }
        Ok(())
    }
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Piece {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kron += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = kron * 0.5;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kron * h;
    let resasc = asc * h.abs();
    let mut err = ((kron - gauss) * h).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if !value.is_finite() {
        err = f64::INFINITY;
    }
    (value, err)
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    if a == b {
        return Ok((0.0, 0.0));
    }
    let (v, e) = gk15(f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value: v, err: e });
    let mut total = v;
    let mut total_err = e;
    let mut n = 1;
    loop {
        if total_err <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
            break;
        }
        if n >= spec.max_subdivisions {
            return Err(Error::SubdivisionExhausted(spec.max_subdivisions));
        }
        let worst = heap.pop().expect("non-empty heap");
        let mid = 0.5 * (worst.a + worst.b);
        if mid == worst.a || mid == worst.b {
            return Err(Error::SubdivisionExhausted(n));
        }
        let (v1, e1) = gk15(f, worst.a, mid);
        let (v2, e2) = gk15(f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        heap.push(Piece { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Piece { a: mid, b: worst.b, value: v2, err: e2 });
        n += 1;
        if n % 64 == 0 {
            // re-sum to shed accumulated rounding in the running totals
            total = heap.iter().map(|p| p.value).sum();
            total_err = heap.iter().map(|p| p.err).sum();
        }
    }
    if !total.is_finite() {
        return Err(domain("quad_1d", "integrand produced a non-finite value"));
    }
    Ok((total, total_err))
}

/// Adaptive integral of `f` over `[a, b]`; returns `(value, error_estimate)`.
///
/// Flagged endpoints are treated with `x = a + t^2` (or `b - t^2`), which
/// removes inverse-square-root singularities.
pub fn quad_1d<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    spec.validate()?;
    if !a.is_finite() || !b.is_finite() {
        return Err(domain("quad_1d", "limits must be finite"));
    }
    if b < a {
        return quad_1d(f, b, a, &spec.singular(spec.singular_endpoints[1], spec.singular_endpoints[0]))
            .map(|(v, e)| (-v, e));
    }
    match spec.singular_endpoints {
        [false, false] => adapt(&f, a, b, spec),
        [true, false] => {
            let g = |t: f64| 2.0 * t * f(a + t * t);
            adapt(&g, 0.0, (b - a).sqrt(), spec)
        }
        [false, true] => {
            let g = |t: f64| 2.0 * t * f(b - t * t);
            adapt(&g, 0.0, (b - a).sqrt(), spec)
        }
        [true, true] => {
            let c = 0.5 * (a + b);
            let h = (c - a).sqrt();
            let lo = |t: f64| 2.0 * t * f(a + t * t);
            let hi = |t: f64| 2.0 * t * f(b - t * t);
            let lo = adapt(&lo, 0.0, h, spec)?;
            let hi = adapt(&hi, 0.0, h, spec)?;
            Ok((lo.0 + hi.0, lo.1 + hi.1))
        }
    }
}

/// Iterated integral over the rectangle `x in [x0, x1]`, `y in [y0, y1]`,
/// with `y` innermost.
pub fn quad_2d<F: Fn(f64, f64) -> f64>(f: F, domain: [(f64, f64); 2], spec: &QuadratureSpec) -> Result<f64> {
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let inner_spec = QuadratureSpec {
        abs_tol: spec.abs_tol * 0.1,
        rel_tol: spec.rel_tol * 0.1,
        ..*spec
    };
    let outer = |x: f64| match quad_1d(|y| f(x, y), domain[1].0, domain[1].1, &inner_spec) {
        Ok((v, _)) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            0.0
        }
    };
    let outer_spec = QuadratureSpec {
        singular_endpoints: [false, false],
        ..*spec
    };
    let (v, _) = quad_1d(outer, domain[0].0, domain[0].1, &outer_spec)?;
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(v),
    }
}

/// Iterated integral over a box, innermost variable last.
pub fn quad_3d<F: Fn(f64, f64, f64) -> f64>(
    f: F,
    domain: [(f64, f64); 3],
    spec: &QuadratureSpec,
) -> Result<f64> {
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let inner_spec = QuadratureSpec {
        abs_tol: spec.abs_tol * 0.1,
        rel_tol: spec.rel_tol * 0.1,
        ..*spec
    };
    let outer = |x: f64| match quad_2d(|y, z| f(x, y, z), [domain[1], domain[2]], &inner_spec) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            0.0
        }
    };
    let (v, _) = quad_1d(outer, domain[0].0, domain[0].1, spec)?;
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sine_over_half_period() {
        let (v, e) = quad_1d(f64::sin, 0.0, PI, &QuadratureSpec::default()).unwrap();
        assert!((v - 2.0).abs() < 1e-14);
        assert!(e < 1e-12);
    }

    #[test]
    fn inverse_sqrt_with_flag() {
        let spec = QuadratureSpec::default().singular(true, false);
        let (v, _) = quad_1d(|x| 1.0 / x.sqrt(), 0.0, 1.0, &spec).unwrap();
        assert!((v - 2.0).abs() < 1e-13);
        let spec = QuadratureSpec::default().singular(false, true);
        let (v, _) = quad_1d(|x| 1.0 / (1.0 - x).sqrt(), 0.0, 1.0, &spec).unwrap();
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let (v, _) = quad_1d(|x| x * x, 1.0, 0.0, &QuadratureSpec::default()).unwrap();
        assert!((v + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn unit_cube() {
        let v = quad_3d(|_, _, _| 1.0, [(0.0, 1.0); 3], &QuadratureSpec::default()).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gaussian_square() {
        let v = quad_2d(
            |x, y| (-(x * x + y * y)).exp(),
            [(-6.0, 6.0), (-6.0, 6.0)],
            &QuadratureSpec::default(),
        )
        .unwrap();
        assert!((v - PI).abs() < 1e-11);
    }

    #[test]
    fn exhaustion_reported() {
        let spec = QuadratureSpec {
            max_subdivisions: 32,
            ..QuadratureSpec::default()
        };
        let r = quad_1d(|x| (1.0 / x).sin(), 1e-8, 1.0, &spec);
        assert!(matches!(r, Err(Error::SubdivisionExhausted(_))));
    }

    #[test]
    fn error_estimate_tracks_tolerance() {
        let f = |x: f64| (3.0 * x).cos() * (-x).exp() + x.sqrt();
        let loose = QuadratureSpec::with_tol(1e-30, 1e-6);
        let tight = QuadratureSpec::with_tol(1e-30, 0.25e-6);
        let (_, e1) = quad_1d(f, 0.5, 4.0, &loose).unwrap();
        let (_, e2) = quad_1d(f, 0.5, 4.0, &tight).unwrap();
        assert!(e2 <= e1);
    }
}
