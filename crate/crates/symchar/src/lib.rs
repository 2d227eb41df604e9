//! Exact computations around symmetric functions and symmetric-group
//! characters: the stable Schur basis, both Hopf comultiplications with
//! their structure constants (Kronecker, reduced Kronecker, and
//! restriction tables for `S_m x S_n` inside `S_{mn}`), transition
//! coefficients with certified stability windows, and an independent
//! brute-force character oracle that cross-validates all of it.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision
//! rationals, character values and multiplicities arbitrary-precision
//! integers. Quantities that must be integral are checked, never rounded.
//!
//! Start with the runnable examples (`cargo run --example <name>`), one
//! per capability:
//!
//! * `partitions` — diagrams, rim hooks, padding, cycle-type arithmetic
//! * `symmetric_functions` — bases, conversions, Hall pairing, evaluation
//! * `hopf_operations` — coproducts, antipode, perp, plethysm
//! * `stable_basis` — the stable Schur functions along both routes
//! * `kronecker_tables` — Kronecker and reduced Kronecker coefficients
//! * `character_oracle` — characters and brute-force restriction tables
//! * `two_row_stability` — M/N windows, padded scans, and limits
//!
//! The same functionality is scriptable through the `symchar` binary; see
//! the README for the subcommand list.

pub mod cli;
pub mod emit;
pub mod error;
pub mod hopf;
pub mod kronecker;
pub mod oracle;
pub mod partition;
pub mod stable;
pub mod symfunc;

pub use error::{Error, Result};
pub use hopf::TensorSymFunc;
pub use partition::{Partition, RimHookResult};
pub use symfunc::{Basis, SymFunc};
