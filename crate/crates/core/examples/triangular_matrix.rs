//! Matrix of T in the monomial basis and in the basis S(d, l). The second is
//! upper triangular, with the eigenvalues on the diagonal.
//!
//!     cargo run --example triangular_matrix -- 6 3

use bihomogeneous::spectral::{char_poly_check, t_matrix, BasisKind};

fn main() -> bihomogeneous::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (d, l) = match args[..] {
        [d, l] => (d, l),
        _ => (6, 3),
    };

    for kind in [BasisKind::Monomial, BasisKind::GBasis] {
        let m = t_matrix(d, l, kind)?;
        println!("{kind:?} basis:");
        for (label, row) in m.labels.iter().zip(m.matrix.to_rows()) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
            println!("  {:<16} {}", label.to_string(), cells.join(""));
        }
        println!("  upper triangular: {}", m.matrix.is_upper_triangular());
    }

    let check = char_poly_check(d, l)?;
    let coeffs: Vec<String> = check.characteristic.iter().map(ToString::to_string).collect();
    println!("characteristic polynomial (constant term first): {}", coeffs.join(", "));
    println!("matches the product over the diagonal: {}", check.matches());
    Ok(())
}
