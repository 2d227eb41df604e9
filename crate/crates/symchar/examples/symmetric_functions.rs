//! Symmetric functions in the power-sum, complete, and Schur bases:
//! exact conversions, products, the Hall inner product, truncated series,
//! and evaluation at the eigenvalues of a permutation.
//!
//! ```bash
//! cargo run --example symmetric_functions
//! ```

use symchar::partition::{partitions_of, Partition};
use symchar::symfunc::{h_series, lyndon_series, Basis, SymFunc};

fn main() {
    let s11 = SymFunc::elem(Basis::Schur, Partition::of(&[1, 1]));
    println!("s[1,1] in power sums: {}", s11.to_basis(Basis::PowerSum).unwrap());
    let h2 = SymFunc::elem(Basis::Complete, Partition::of(&[2]));
    println!("h[2] in Schur basis : {}", h2.to_basis(Basis::Schur).unwrap());

    let s1 = SymFunc::elem(Basis::Schur, Partition::of(&[1]));
    println!("\ns[1] * s[1]         = {}", s1.multiply(&s1));

    // Schur functions are orthonormal for the Hall inner product
    println!("\nHall pairings on partitions of 3:");
    for a in partitions_of(3) {
        for b in partitions_of(3) {
            let fa = SymFunc::elem(Basis::Schur, a.clone());
            let fb = SymFunc::elem(Basis::Schur, b.clone());
            print!("  <s{a}, s{b}> = {}", fa.hall_inner(&fb));
        }
        println!();
    }
    let p2 = SymFunc::elem(Basis::PowerSum, Partition::of(&[2]));
    println!("<p[2], p[2]> = z_(2) = {}", p2.hall_inner(&p2));

    println!("\nh-series to degree 2: {}", h_series(2));
    println!("Lyndon series to degree 3: {}", lyndon_series(3));

    // evaluating at a cycle type gives the trace of the permutation on the
    // corresponding module; p_1 counts fixed points
    let p1 = SymFunc::elem(Basis::PowerSum, Partition::of(&[1]));
    let s2 = SymFunc::elem(Basis::Schur, Partition::of(&[2]));
    println!("\nevaluations at cycle types:");
    for rho in ["[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"] {
        let rho: Partition = rho.parse().unwrap();
        println!(
            "  rho = {rho}: fixed points = {}, trace on Sym^2 = {}",
            p1.eval_at_cycle_type(&rho),
            s2.eval_at_cycle_type(&rho)
        );
    }
}
