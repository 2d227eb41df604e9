//! Two-row stability: transition coefficients between padded Schur and
//! stable functions settle once the padding is long enough, and entries
//! of padded Kronecker-comultiplication tables settle in turn. The
//! stabilization onset is measured, not assumed.
//!
//! ```bash
//! cargo run --example two_row_stability
//! ```

use symchar::kronecker::{stability_scan, stable_r_limit};
use symchar::partition::Partition;
use symchar::stable::{m_coefficient, n_coefficient, stable_m, stable_n};

fn main() {
    let empty = Partition::empty();
    let one = Partition::of(&[1]);

    // M coefficients: Schur expansions of padded stable functions; the
    // value at (lambda, mu, i) freezes for n >= 2|lambda| + 3i
    println!("M([], [], i=1) over n, freezing at the bound n >= 3:");
    for n in 1..=8i64 {
        println!("  n = {n}: {}", m_coefficient(&empty, &empty, 1, n).unwrap());
    }
    let cert = stable_m(&empty, &empty, 1).unwrap();
    println!(
        "certified stable value {} at n = {} (window {})",
        cert.value, cert.certified_n, cert.window
    );

    // N coefficients: the inverse expansion, freezing for n >= 2|lambda| + 7i;
    // certification additionally cross-checks a power-series inversion of M
    println!("\nN([1], [1], i=1) over n:");
    for n in 2..=12i64 {
        println!("  n = {n}: {}", n_coefficient(&one, &one, 1, n).unwrap());
    }
    let cert = stable_n(&one, &one, 1).unwrap();
    println!(
        "certified stable value {} at n = {} (window {})",
        cert.value, cert.certified_n, cert.window
    );

    // entries of padded Kronecker-comultiplication tables stabilize too;
    // the scan reports the measured onset and compares the plateau with
    // the closed-form limit over M, reduced Kronecker, and N values
    println!("\nscan of the padded table entry for lambda=[1], mu=nu=[1], a=b=1:");
    let report = stability_scan(&one, &one, &one, 1, 1, 10).unwrap();
    for (n, v) in &report.values {
        println!("  n = {n}: {v}");
    }
    println!(
        "onset = {:?}, plateau value = {:?}, limit = {}, agrees = {}",
        report.onset, report.stable_value, report.limit, report.agrees
    );

    let lim = stable_r_limit(&empty, &one, &one, 0, 0).unwrap();
    println!("\nat a = b = 0 the limit collapses to a reduced Kronecker value: {lim}");
}
