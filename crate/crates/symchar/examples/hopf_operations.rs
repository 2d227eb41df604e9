//! The Hopf-algebra toolbox: both comultiplications, the antipode, perp
//! operators, plethysm, and adjoint plethysm.
//!
//! ```bash
//! cargo run --example hopf_operations
//! ```

use symchar::hopf::{
    adjoint_plethysm, antipode, coproduct, kronecker_coproduct, lyndon_skew, perp_apply, plethysm,
};
use symchar::partition::Partition;
use symchar::symfunc::{lyndon_series, Basis, SymFunc};

fn selem(parts: &[usize]) -> SymFunc {
    SymFunc::elem(Basis::Schur, Partition::of(parts))
}

fn pelem(parts: &[usize]) -> SymFunc {
    SymFunc::elem(Basis::PowerSum, Partition::of(parts))
}

fn main() {
    // power sums are primitive for the ordinary coproduct...
    println!("coproduct of p[2]:");
    for ((l, r), c) in coproduct(&pelem(&[2])).terms() {
        println!("  {c} * p{l} (x) p{r}");
    }
    // ...and grouplike for the Kronecker coproduct; on Schur functions the
    // latter produces Kronecker coefficients
    println!("Kronecker coproduct of s[2]:");
    for ((l, r), c) in kronecker_coproduct(&selem(&[2])).terms() {
        println!("  {c} * s{l} (x) s{r}");
    }

    println!("\nantipode of s[2,1]  = {}", antipode(&selem(&[2, 1])));
    println!("antipode of p[2,1]  = {}", antipode(&pelem(&[2, 1])));

    // perp removes rim hooks with signs
    println!("\np[1]-perp of s[2]   = {}", perp_apply(&pelem(&[1]), &selem(&[2])));
    println!("p[2]-perp of s[1,1] = {}", perp_apply(&pelem(&[2]), &selem(&[1, 1])));

    // plethysm substitutes monomials; on power sums it multiplies indices
    println!("\np[2][p[3]]          = {}", plethysm(&pelem(&[2]), &pelem(&[3])));
    let shifted = &pelem(&[1]) + &SymFunc::one(Basis::PowerSum);
    println!("s[2][p[1] + 1]      = {}", plethysm(&selem(&[2]), &shifted));

    // the adjoint of plethysm under the Hall pairing; the adjoint of
    // index-multiplication picks up the z-weight ratio
    let v = adjoint_plethysm(&pelem(&[6]), &pelem(&[2]), 6).unwrap();
    println!("\np[6][p[2]-perp]     = {v}");

    // skewing by the Lyndon series: the linear slot acts as the identity
    let f = selem(&[2, 1]);
    let skew = lyndon_skew(&f);
    println!("s[2,1][L-perp]      = {skew}");
    // the defining adjunction: <f[L-perp], h> = <f, h[L]>
    let h = selem(&[1]);
    let lhs = skew.hall_inner(&h);
    let rhs = f.hall_inner(&plethysm(&h, &lyndon_series(3)));
    println!("adjunction check against s[1]: {lhs} == {rhs}");
}
