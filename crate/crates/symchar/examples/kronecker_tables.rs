//! Kronecker coefficients, their stable (reduced) limits, and the
//! structure constants of the Kronecker comultiplication on the stable
//! basis, cross-checked against brute-force restriction multiplicities.
//!
//! ```bash
//! cargo run --example kronecker_tables
//! ```

use symchar::kronecker::{kronecker, r_table, reduced_kronecker_table};
use symchar::oracle::restriction_multiplicity;
use symchar::partition::{partitions_of, Partition};

fn main() {
    // the full Kronecker table of S_4: multiplicities in tensor products
    println!("Kronecker coefficients k(lambda; mu, nu) for S_4, lambda = [2,1,1]:");
    let lam = Partition::of(&[2, 1, 1]);
    for mu in partitions_of(4) {
        for nu in partitions_of(4) {
            let k = kronecker(&lam, &mu, &nu).unwrap();
            if !k.to_string().eq("0") {
                println!("  k({lam}; {mu}, {nu}) = {k}");
            }
        }
    }

    // reduced Kronecker coefficients: structure constants of the stable
    // basis under multiplication, i.e. stable limits of padded Kroneckers
    println!("\nreduced Kronecker table of st[1] * st[1]:");
    for (lam, v) in reduced_kronecker_table(&Partition::of(&[1]), &Partition::of(&[1])).unwrap() {
        println!("  coefficient of st{lam} = {v}");
    }

    // the Kronecker comultiplication of a stable function: entries are
    // restriction multiplicities from S_{mn} to S_m x S_n for large m, n
    let lam = Partition::of(&[1]);
    let table = r_table(&lam).unwrap();
    println!("\nR-table of st{lam}:");
    for ((mu, nu), v) in &table.entries {
        println!("  ({mu}, {nu}) -> {v}");
    }

    // cross-check against the character oracle at m = n = 4: the entry at
    // (mu, nu) is the multiplicity of the padded pair in the restriction
    // of the padded irreducible of S_16
    let m = 4usize;
    println!("\noracle comparison at m = n = {m} (S_16 restricted to S_4 x S_4):");
    let padded = lam.pad(m * m).unwrap();
    for ((mu, nu), v) in &table.entries {
        let oracle = restriction_multiplicity(
            &padded,
            &mu.pad(m).unwrap(),
            &nu.pad(m).unwrap(),
        )
        .unwrap();
        assert_eq!(&oracle, v);
        println!("  ({mu}, {nu}): table {v} == oracle {oracle}");
    }
}
