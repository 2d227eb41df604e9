//! The stable Schur basis: inhomogeneous symmetric functions whose
//! evaluations at permutation eigenvalues are irreducible symmetric-group
//! characters of padded partitions. Built along two independent routes
//! and expanded back and forth against the ordinary Schur basis.
//!
//! ```bash
//! cargo run --example stable_basis
//! ```

use symchar::oracle::character;
use symchar::partition::{partitions_of, partitions_up_to, Partition};
use symchar::stable::{
    diffop_contributions, expand_in_stable, stable_schur, stable_schur_via_diffops,
    stable_to_schur,
};
use symchar::symfunc::{Basis, SymFunc};

fn main() {
    println!("stable Schur functions in the Schur basis:");
    for lam in partitions_up_to(3) {
        println!("  st{lam} = {}", stable_schur(&lam));
    }

    // the two construction routes agree
    let lam = Partition::of(&[2, 1]);
    assert_eq!(stable_schur(&lam), stable_schur_via_diffops(&lam));
    println!("\nboth construction routes agree on {lam}");
    println!("per-nu contributions of the operator route at {lam}:");
    for (nu, part) in diffop_contributions(&lam) {
        println!("  nu = {nu}: {part}");
    }

    // evaluating at a cycle type of S_n gives the character of the padded
    // irreducible once n >= 2|lam|
    let st = stable_schur(&Partition::of(&[2]));
    println!("\nevaluations of st[2] against characters of padded shapes:");
    for n in [4usize, 5, 6] {
        let padded = Partition::of(&[2]).pad(n).unwrap();
        for rho in partitions_of(n) {
            let via_eval = st.eval_at_cycle_type(&rho);
            let via_char = character(&padded, &rho).unwrap();
            assert_eq!(via_eval, via_char.clone().into());
        }
        println!("  n = {n}: all {} cycle types match chi^{padded}", partitions_of(n).len());
    }

    // expanding Schur functions in the stable basis and back
    let s2 = SymFunc::elem(Basis::Schur, Partition::of(&[2]));
    let expanded = expand_in_stable(&s2).unwrap();
    println!("\ns[2] in the stable basis: {expanded}");
    let back = stable_to_schur(&expanded).unwrap();
    assert_eq!(back, s2);
    println!("round trip returns s[2] exactly");
}
