//! Hook and leg numbers along the diagonal of a Young diagram, and the
//! inverse map back to the partition.
//!
//!     cargo run --example hooks -- 7,7,5,4,3,2

use bihomogeneous::{hook_leg_profile, profile_to_partition, Partition};

fn main() -> bihomogeneous::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "7,7,5,4,3,2".into());
    let p: Partition = arg.parse()?;
    println!("{p}, size {}, length {}", p.size(), p.len());
    println!("{}", p.young_diagram());

    let profile = hook_leg_profile(&p)?;
    println!("{:>6} {:>6} {:>10}", "hook", "leg", "increment");
    for b in &profile.boxes {
        println!("{:>6} {:>6} {:>10}", b.hook, b.leg, b.increment);
    }

    let seq = profile.hook_increment_pairs();
    let back = profile_to_partition(&seq)?;
    println!("sequence {seq:?} maps back to {back}");
    assert_eq!(back, p);
    Ok(())
}
