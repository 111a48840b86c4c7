//! Spectrum of T on F(d, l), with the index sequence and Young diagram behind
//! each eigenvalue.
//!
//!     cargo run --example spectrum -- 12 4

use bihomogeneous::spectrum;

fn main() -> bihomogeneous::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (d, l) = match args[..] {
        [d, l] => (d, l),
        _ => (12, 4),
    };

    let report = spectrum(d, l)?;
    println!("F({d},{l}) has dimension {}", report.entries.len());
    println!("eigenvalues: {:?}", report.eigenvalues());
    for entry in &report.entries {
        let seq: Vec<String> = entry.sequence.iter().map(|(d, l)| format!("({d},{l})")).collect();
        println!("{:>4}  {:<24} {}", entry.eigenvalue, seq.join(""), entry.diagram);
    }
    println!("dominant eigenvalue {}, zero eigenvalue: {}", report.dominant, report.has_zero);

    // Each entry carries an eigenvector; the first one is checked directly.
    let v = &report.entries[0].eigenvector.polynomial;
    let tv = bihomogeneous::apply_t(v);
    assert_eq!(tv, v.scale(&bihomogeneous::rational::int(report.entries[0].eigenvalue as i64)));
    println!("T v = {} v for v = {v}", report.entries[0].eigenvalue);
    Ok(())
}
