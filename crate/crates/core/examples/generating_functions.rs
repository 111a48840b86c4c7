//! The functions g(d, l), their products, and the decompositions of the
//! complete and elementary symmetric functions.

use bihomogeneous::genfun::{complete_symmetric, elementary_symmetric, expand_in_gbasis, s_basis};
use bihomogeneous::{g_poly, GProduct, Monomial, Polynomial};
use bihomogeneous::rational::int;

fn main() -> bihomogeneous::Result<()> {
    for (d, l) in [(1, 1), (4, 2), (6, 3), (2, 3)] {
        println!("g({d},{l}) = {}", g_poly(d, l));
    }
    let p = GProduct::from_pairs(&[(2, 2), (3, 1)]);
    println!("{p} = {}", p.expand());

    for k in 1..=4 {
        println!("h_{k} = {}", complete_symmetric(k));
        println!("e_{k} = {}", elementary_symmetric(k));
    }

    // Coordinates of x2^2 in the basis S(4,2).
    let f = Polynomial::monomial(Monomial::from_pairs([(2, 2)]), int(1));
    let coords = expand_in_gbasis(&f, 4, 2)?;
    for (b, c) in s_basis(4, 2).iter().zip(&coords) {
        println!("  {c:>3} * {b}");
    }
    Ok(())
}
