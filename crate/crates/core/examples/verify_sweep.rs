//! Runs every structural check over all F(d, l) with d up to a bound.
//!
//!     cargo run --release --example verify_sweep -- 10

fn main() {
    let max_d = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let report = bihomogeneous::verify::run(max_d);
    for s in &report.summaries {
        println!("{:<22} {}/{}", s.kind.name(), s.passed, s.total);
    }
    for f in &report.failures {
        println!("FAILED {} on {}: {:?}", f.kind.name(), f.subject, f.detail);
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
