//! The brute-force side of the library: symmetric-group characters by
//! the Murnaghan–Nakayama recursion, product cycle types, restriction
//! multiplicity tables, and general-linear restriction multiplicities.
//!
//! ```bash
//! cargo run --example character_oracle
//! ```

use symchar::oracle::{
    character, dimension, gl_restriction_multiplicity, restriction_table, tensor_cycle_type,
};
use symchar::partition::{partitions_of, Partition};

fn main() {
    // the character table of S_5
    let parts = partitions_of(5);
    println!("character table of S_5 (rows: shapes, columns: cycle types):");
    print!("{:>12}", "");
    for rho in &parts {
        print!("{:>10}", rho.to_string());
    }
    println!();
    for lam in &parts {
        print!("{:>12}", lam.to_string());
        for rho in &parts {
            print!("{:>10}", character(lam, rho).unwrap().to_string());
        }
        println!();
    }

    // cycle type of a product permutation acting on a grid: each pair of
    // cycle lengths (a, b) contributes gcd(a,b) cycles of length lcm(a,b)
    println!("\nproduct cycle types on [m] x [n]:");
    for (r, s) in [("[2]", "[2]"), ("[2]", "[3]"), ("[3,1]", "[2,2]")] {
        let rho: Partition = r.parse().unwrap();
        let sigma: Partition = s.parse().unwrap();
        println!("  {rho} x {sigma} -> {}", tensor_cycle_type(&rho, &sigma));
    }

    // restriction of an irreducible of S_16 to S_4 x S_4, as a class sum
    let lam = Partition::of(&[15, 1]);
    println!("\nrestriction of the irreducible {lam} of S_16 to S_4 x S_4:");
    let mut total = num_bigint::BigInt::from(0);
    for ((mu, nu), v) in restriction_table(&lam, 4, 4).unwrap() {
        println!("  {mu} (x) {nu} with multiplicity {v}");
        total += v * dimension(&mu) * dimension(&nu);
    }
    println!("dimension check: {total} == {}", dimension(&lam));

    // multiplicities of symmetric-group irreducibles inside polynomial
    // general-linear modules restricted to permutation matrices
    println!("\nSym^2 of the permutation module of S_n, decomposed:");
    let n = 6usize;
    for core in partitions_of(1).into_iter().chain(partitions_of(2)) {
        let mu = core.pad(n).unwrap();
        let v = gl_restriction_multiplicity(&Partition::of(&[2]), &mu, n).unwrap();
        println!("  multiplicity of {mu} in Sym^2(C^{n}) = {v}");
    }
    let triv = Partition::empty().pad(n).unwrap();
    let v = gl_restriction_multiplicity(&Partition::of(&[2]), &triv, n).unwrap();
    println!("  multiplicity of {triv} in Sym^2(C^{n}) = {v}");
}
