//! Rewriting a product g(d1,l1) g(d2,l2) as a combination of regular pairs,
//! and the action of T on products via the structural formula.

use bihomogeneous::operator::{apply_t_structural, is_regular_pair, straighten_pair};
use bihomogeneous::{apply_t, g_poly, GProduct};

fn main() -> bihomogeneous::Result<()> {
    for (d1, l1, d2, l2) in [(2, 1, 2, 1), (3, 2, 2, 1), (4, 2, 3, 2), (5, 1, 1, 1)] {
        let comb = straighten_pair(d1, l1, d2, l2)?;
        let tag = if is_regular_pair(d1, l1, d2, l2) { "regular" } else { "irregular" };
        println!("g({d1},{l1})g({d2},{l2}) [{tag}] = {comb}");
        assert_eq!(comb.expand(), &g_poly(d1, l1) * &g_poly(d2, l2));
    }

    // Both factor orders give different combinations with the same value.
    for pairs in [[(2, 2), (3, 1)], [(3, 1), (2, 2)]] {
        let p = GProduct::from_pairs(&pairs);
        let image = apply_t_structural(&p)?;
        println!("T {p} = {image}");
        assert_eq!(image.expand(), apply_t(&p.expand()));
    }
    Ok(())
}
