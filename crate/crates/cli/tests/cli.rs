use std::f64::consts::PI;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_appellfield"));
    c.env_remove("APPELLFIELD_MAX_TERMS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn record(out: &str, name: &str) -> String {
    let line = out.lines().find(|l| l.starts_with(&format!("{name}="))).expect("record present");
    line[name.len() + 1..].split(' ').next().unwrap().to_string()
}

const TUBE: [&str; 8] = ["--body", "tube", "--R", "1", "--Z", "0.7", "--density", "1"];

#[test]
fn eval_tube_on_axis() {
    let mut args = vec!["eval"];
    args.extend(TUBE);
    args.extend(["--r", "0", "--z", "5", "--quantity", "phi"]);
    let o = run(&args);
    assert!(o.status.success());
    let v: f64 = record(&stdout(&o), "phi").parse().unwrap();
    let exact = 2.0 * PI * ((5.7f64).asinh() - (4.3f64).asinh());
    assert!((v - exact).abs() < 1e-12);
    // close to the point-charge value Q / 5
    assert!((v / (4.0 * PI * 0.7 / 5.0) - 1.0).abs() < 0.02);
}

#[test]
fn eval_inside_cylinder_prints_marker() {
    let o = run(&["eval", "--body", "cyl", "--R", "1", "--Z", "0.7", "--r", "0.5", "--z", "0", "--quantity", "psi"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("psi=undefined(inside-charge)"));
}

#[test]
fn eval_branch_adds_topological_charge() {
    let psi = |branch: &str| {
        let mut args = vec!["eval"];
        args.extend(TUBE);
        args.extend(["--r", "1.5", "--z", "-0.3", "--quantity", "psi", "--branch", branch]);
        let o = run(&args);
        assert!(o.status.success());
        record(&stdout(&o), "psi").parse::<f64>().unwrap()
    };
    let d = psi("1") - psi("0");
    assert!((d - 8.0 * PI * 0.7).abs() < 1e-12);
}

#[test]
fn eval_errors_exit_2() {
    let mut args = vec!["eval"];
    args.extend(TUBE);
    args.extend(["--r", "1", "--z", "0.2", "--quantity", "psi"]);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(run(&["eval", "--body", "cyl", "--R", "1", "--r", "1", "--z", "0"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--body", "sphere"]).status.code(), Some(2));
}

#[test]
fn special_functions() {
    let val = |args: &[&str]| -> f64 {
        let mut all = vec!["special", "--fn"];
        all.extend(args);
        let o = run(&all);
        assert!(o.status.success(), "{args:?}");
        stdout(&o).trim().parse().unwrap()
    };
    assert!((val(&["comp_k", "0.85"]) - 2.39).abs() < 5e-3);
    assert_eq!(val(&["appell_f2", "0.5", "0.5", "1", "1", "1.5", "0", "0"]), 1.0);
    // quadrature of the defining integral, mpmath
    assert!((val(&["i_hyg", "0.5", "0.3", "2.0"]) - 0.674784536677021828).abs() < 1e-13);
    assert!(val(&["int_z_sc", "-0.3", "0.85"]).is_finite());
    assert_eq!(run(&["special", "--fn", "nope", "1"]).status.code(), Some(2));
    assert_eq!(run(&["special", "--fn", "comp_k", "2.0"]).status.code(), Some(2));
}

#[test]
fn max_terms_override() {
    let o = bin()
        .env("APPELLFIELD_MAX_TERMS", "100")
        .args(["special", "--fn", "i_hyg", "0.9", "0.3", "2.0"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = bin()
        .env("APPELLFIELD_MAX_TERMS", "10")
        .args(["special", "--fn", "comp_k", "0.5"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(run(&["special", "--fn", "i_hyg", "0.9", "0.3", "2.0"]).status.success());
}

fn grid_to_file(extra: &[&str], dir: &tempfile::TempDir, name: &str) -> String {
    let path = dir.path().join(name);
    let mut args = vec!["grid", "--out", path.to_str().unwrap()];
    args.extend(extra);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::read_to_string(path).unwrap()
}

const REFERENCE_GRID: [&str; 20] = [
    "--body", "cyl", "--R", "1", "--Z", "0.7", "--density", "1", "--r-min", "0", "--r-max", "3", "--z-min", "-3",
    "--z-max", "3", "--nr", "61", "--nz", "121",
];

fn parse_csv(text: &str) -> Vec<[f64; 5]> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,z,phi,psi,branch"));
    lines
        .map(|l| {
            let f: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            [f[0], f[1], f[2], f[3], f[4]]
        })
        .collect()
}

#[test]
fn cylinder_grid_csv() {
    let dir = tempfile::tempdir().unwrap();
    let a = grid_to_file(&REFERENCE_GRID, &dir, "a.csv");
    let b = grid_to_file(&REFERENCE_GRID, &dir, "b.csv");
    assert_eq!(a, b, "identical flags give identical bytes");
    let rows = parse_csv(&a);
    assert_eq!(rows.len(), 61 * 121);
    let at = |ir: usize, iz: usize| rows[iz * 61 + ir];
    // far-field decay along z = 0 outside the body and along the axis above it
    for ir in 21..60 {
        assert!(at(ir, 60)[2] > at(ir + 1, 60)[2]);
    }
    for iz in 75..120 {
        assert!(at(0, iz)[2] > at(0, iz + 1)[2]);
    }
    // ψ undefined inside, defined outside
    assert!(at(5, 60)[3].is_nan());
    assert!(!at(40, 60)[3].is_nan());
}

#[test]
fn degenerate_grid_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = vec!["--r-max", "2", "--z-min", "-1", "--z-max", "1", "--nr", "2", "--nz", "2"];
    args.extend(TUBE);
    let csv = grid_to_file(&args, &dir, "g.csv");
    assert_eq!(csv.lines().count(), 5);
    args.extend(["--format", "json"]);
    let json = grid_to_file(&args, &dir, "g.json");
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["meta"]["nr"], 2);
    assert_eq!(v["meta"]["body"]["body"], "tube");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    // same numbers as the CSV, bit for bit
    for (row, line) in rows.iter().zip(csv.lines().skip(1)) {
        let phi: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert_eq!(row["phi"].as_f64().unwrap(), phi);
    }
}

#[test]
fn tube_grid_three_sheets() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = vec!["--r-max", "3", "--z-min", "-3", "--z-max", "3", "--nr", "7", "--nz", "9"];
    args.extend(TUBE);
    args.extend(["--branch", "-1", "--branch", "0", "--branch", "1"]);
    let rows = parse_csv(&grid_to_file(&args, &dir, "t.csv"));
    assert_eq!(rows.len(), 3 * 63);
    for k in 0..63 {
        let (lo, mid, hi) = (rows[k], rows[63 + k], rows[126 + k]);
        assert_eq!((lo[4], mid[4], hi[4]), (-1.0, 0.0, 1.0));
        if !mid[3].is_nan() {
            assert!((hi[3] - mid[3] - 8.0 * PI * 0.7).abs() < 1e-9);
            assert!((mid[3] - lo[3] - 8.0 * PI * 0.7).abs() < 1e-9);
        }
    }
}

#[test]
fn verify_is_reproducible() {
    let a = run(&["verify", "--suite", "fast", "--seed", "42"]);
    let b = run(&["verify", "--suite", "fast", "--seed", "42"]);
    assert_eq!(stdout(&a), stdout(&b));
    let out = stdout(&a);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 15);
    // exit 1 exactly when some criterion fails
    let any_fail = out.lines().any(|l| l.starts_with("FAIL"));
    assert_eq!(a.status.code(), Some(if any_fail { 1 } else { 0 }));
}
