use crate::error::{domain, Result};

/// Environment variable that overrides [`SeriesControl::max_terms`].
pub const MAX_TERMS_ENV: &str = "APPELLFIELD_MAX_TERMS";

/// Truncation policy shared by every infinite series in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// Stop once the tail estimate drops below `rel_tol * |partial sum|`.
    pub rel_tol: f64,
    /// Hard cap on the number of terms per summation index.
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-15,
            max_terms: 1_000_000,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-4) {
            return Err(domain("SeriesControl", format!("rel_tol {rel_tol} not in (0, 1e-4]")));
        }
        if max_terms < 64 {
            return Err(domain("SeriesControl", format!("max_terms {max_terms} < 64")));
        }
        Ok(SeriesControl { rel_tol, max_terms })
    }

    /// Defaults, with `max_terms` taken from `APPELLFIELD_MAX_TERMS` when set.
    pub fn from_env() -> Result<Self> {
        let mut ctl = SeriesControl::default();
        if let Ok(v) = std::env::var(MAX_TERMS_ENV) {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| domain("SeriesControl", format!("{MAX_TERMS_ENV}={v:?} is not an integer")))?;
            ctl = SeriesControl::new(ctl.rel_tol, n)?;
        }
        Ok(ctl)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_values() {
        assert!(SeriesControl::new(0.0, 100).is_err());
        assert!(SeriesControl::new(1e-3, 100).is_err());
        assert!(SeriesControl::new(1e-10, 10).is_err());
        assert!(SeriesControl::new(1e-10, 64).is_ok());
    }
}
