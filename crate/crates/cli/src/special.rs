use std::f64::consts::PI;

use appellfield::elliptic::{comp_e, comp_k, comp_pi, ellip_e, ellip_f, ellip_pi};
use appellfield::hypergeom::{appell_f2, gauss_2f1, i_hyg, i_hyg_pi, i_hyg_surface, F2Params, IhygArgs};
use appellfield::jacobi::{int_z_sc, jacobi_cn, jacobi_dn, jacobi_sn, jacobi_zeta, natural_branch, nome};
use appellfield::SeriesControl;

use crate::error::{usage, CliResult};

/// Names accepted by `special --fn`, with their argument lists.
pub const FUNCTIONS: &[(&str, &str)] = &[
    ("comp_k", "m"),
    ("comp_e", "m"),
    ("comp_pi", "n m"),
    ("ellip_f", "phi m"),
    ("ellip_e", "phi m"),
    ("ellip_pi", "n phi m | n m"),
    ("jacobi_sn", "u m"),
    ("jacobi_cn", "u m"),
    ("jacobi_dn", "u m"),
    ("jacobi_zeta", "u m"),
    ("nome", "m"),
    ("gauss_2f1", "a b c x"),
    ("appell_f2", "alpha beta beta2 gamma gamma2 x y"),
    ("i_hyg", "m A theta"),
    ("i_hyg_pi", "m A"),
    ("i_hyg_surface", "m"),
    ("int_z_sc", "u m [branch]"),
];

fn arity(name: &str, args: &[f64], allowed: &[usize]) -> CliResult<()> {
    if allowed.contains(&args.len()) {
        return Ok(());
    }
    let sig = FUNCTIONS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s).unwrap_or("");
    Err(usage(format!("{name} takes arguments: {sig}; got {}", args.len())))
}

pub fn evaluate(name: &str, a: &[f64], ctl: &SeriesControl) -> CliResult<f64> {
    let one = |f: fn(f64) -> appellfield::Result<f64>| -> CliResult<f64> {
        arity(name, a, &[1])?;
        Ok(f(a[0])?)
    };
    let two = |f: fn(f64, f64) -> appellfield::Result<f64>| -> CliResult<f64> {
        arity(name, a, &[2])?;
        Ok(f(a[0], a[1])?)
    };
    match name {
        "comp_k" => one(comp_k),
        "comp_e" => one(comp_e),
        "nome" => one(nome),
        "i_hyg_surface" => one(i_hyg_surface),
        "comp_pi" => two(comp_pi),
        "ellip_f" => two(ellip_f),
        "ellip_e" => two(ellip_e),
        "jacobi_sn" => two(jacobi_sn),
        "jacobi_cn" => two(jacobi_cn),
        "jacobi_dn" => two(jacobi_dn),
        "jacobi_zeta" => two(jacobi_zeta),
        "ellip_pi" => {
            arity(name, a, &[2, 3])?;
            Ok(if a.len() == 2 {
                ellip_pi(a[0], PI / 2.0, a[1])?
            } else {
                ellip_pi(a[0], a[1], a[2])?
            })
        }
        "gauss_2f1" => {
            arity(name, a, &[4])?;
            Ok(gauss_2f1(a[0], a[1], a[2], a[3], ctl)?)
        }
        "appell_f2" => {
            arity(name, a, &[7])?;
            let p = F2Params::new(a[0], a[1], a[2], a[3], a[4]);
            Ok(appell_f2(p, a[5], a[6], ctl)?)
        }
        "i_hyg" => {
            arity(name, a, &[3])?;
            Ok(i_hyg(IhygArgs::new(a[0], a[1], a[2]), ctl)?)
        }
        "i_hyg_pi" => {
            arity(name, a, &[2])?;
            Ok(i_hyg_pi(a[0], a[1], ctl)?)
        }
        "int_z_sc" => {
            arity(name, a, &[2, 3])?;
            let branch = match a.get(2) {
                Some(&b) if b.fract() == 0.0 => b as i64,
                Some(&b) => return Err(usage(format!("branch {b} is not an integer"))),
                None => natural_branch(a[0], a[1])?,
            };
            Ok(int_z_sc(a[0], a[1], branch, ctl)?)
        }
        _ => {
            let known: Vec<&str> = FUNCTIONS.iter().map(|(n, _)| *n).collect();
            Err(usage(format!("unknown function {name:?}; known: {}", known.join(", "))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_dispatches() {
        let c = SeriesControl::default();
        for (name, _) in FUNCTIONS {
            let err = evaluate(name, &[], &c).unwrap_err().to_string();
            assert!(!err.contains("unknown function"), "{name}: {err}");
        }
    }

    #[test]
    fn values() {
        let c = SeriesControl::default();
        assert!((evaluate("comp_k", &[0.85], &c).unwrap() - 2.389_016_486_325_58).abs() < 1e-6);
        assert_eq!(evaluate("appell_f2", &[0.5, 0.5, 1.0, 1.0, 1.5, 0.0, 0.0], &c).unwrap(), 1.0);
        assert!(evaluate("nope", &[1.0], &c).is_err());
        assert!(evaluate("int_z_sc", &[0.3, 0.5, 0.5], &c).is_err());
    }
}
