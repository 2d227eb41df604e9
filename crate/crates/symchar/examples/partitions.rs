//! Partitions and Young-diagram combinatorics: conjugation, padding,
//! rim-hook enumeration, and centralizer orders.
//!
//! ```bash
//! cargo run --example partitions
//! ```

use symchar::partition::{partitions_of, Partition};

fn main() {
    let lam = Partition::of(&[5, 4, 1]);
    println!("lambda            = {lam}");
    println!("size, length      = {}, {}", lam.size(), lam.length());
    println!("conjugate         = {}", lam.conjugate());
    println!("conjugate twice   = {}", lam.conjugate().conjugate());

    // padding prepends a first row of the right length
    let core = Partition::of(&[2, 2]);
    println!("\n{} padded to 10   = {}", core, core.pad(10).unwrap());
    match core.pad(5) {
        Ok(p) => println!("{} padded to 5    = {}", core, p),
        Err(e) => println!("{} padded to 5    -> {e}", core),
    }

    // all ways to remove a rim hook (border strip) of size 2, with heights
    let padded = core.pad(10).unwrap();
    println!("\nrim hooks of size 2 removable from {padded}:");
    for hook in padded.remove_rim_hooks(2) {
        println!("  -> {} (height {})", hook.shape, hook.height);
    }
    println!("rim hooks of size 3 addable to []:");
    for hook in Partition::empty().add_rim_hooks(3) {
        println!("  -> {} (height {})", hook.shape, hook.height);
    }

    // z_lambda = prod m_i! i^{m_i} is the centralizer order of the class
    println!("\ncycle types of S_4 with centralizer orders and class sizes:");
    for rho in partitions_of(4) {
        let z = rho.z();
        let class_size = 24 / &z;
        println!("  {rho}: z = {z}, class size = {class_size}");
    }
}
