//! Acceptance battery: one PASS/FAIL line per criterion.
//!
//! `APPELLFIELD_SUITE=full` adds the 3-D quadrature check; `APPELLFIELD_SEED`
//! changes the random points.

use appellfield::verify::{run, Suite};
use appellfield::SeriesControl;

fn main() {
    let suite = match std::env::var("APPELLFIELD_SUITE").as_deref() {
        Ok("full") => Suite::Full,
        _ => Suite::Fast,
    };
    let seed = std::env::var("APPELLFIELD_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(42);
    let results = run(suite, seed, &SeriesControl::default());
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let secs: f64 = results.iter().map(|r| r.elapsed.as_secs_f64()).sum();
    println!(
        "{} passed, {failed} failed (suite {suite:?}, seed {seed}, {secs:.1} s)",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
