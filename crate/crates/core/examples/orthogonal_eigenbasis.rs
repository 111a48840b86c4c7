//! An orthogonal eigenbasis of F(d, l) for the inner product in which
//! x_k and d/dx_k are adjoint.

use bihomogeneous::inner_product;
use bihomogeneous::rational::int;
use bihomogeneous::spectral::orthogonal_eigenbasis;

fn main() -> bihomogeneous::Result<()> {
    let (d, l) = (6, 2);
    let basis = orthogonal_eigenbasis(d, l)?;
    for v in &basis {
        println!("{:>3}  |v|^2 = {:<8} v = {}", v.eigenvalue, v.norm_squared.to_string(), v.polynomial);
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            assert_eq!(inner_product(&a.polynomial, &b.polynomial), int(0));
        }
    }
    println!("{} vectors, pairwise orthogonal", basis.len());
    Ok(())
}
