//! JSON and CSV emission for every table the library produces.
//!
//! JSON is the canonical format: coefficients appear as decimal strings
//! under `num`/`den` so no reader ever rounds them. CSV is a projection
//! with nothing quoted; partition cells use spaces instead of commas
//! (`[2 1]`) to keep rows comma-free.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::hopf::TensorSymFunc;
use crate::kronecker::{RTable, ScanReport};
use crate::partition::Partition;
use crate::stable::CoeffRecord;
use crate::symfunc::SymFunc;

pub fn partition_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

/// Partition in the comma-free CSV cell form, e.g. `[2 1]`.
pub fn partition_csv(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

pub fn symfunc_json(f: &SymFunc) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(lam, c)| {
            json!({
                "partition": partition_json(lam),
                "num": c.numer().to_string(),
                "den": c.denom().to_string(),
            })
        })
        .collect();
    json!({ "basis": f.basis().name(), "terms": terms })
}

pub fn symfunc_csv(f: &SymFunc) -> String {
    let mut out = String::from("partition,num,den\n");
    for (lam, c) in f.terms() {
        out.push_str(&format!(
            "{},{},{}\n",
            partition_csv(lam),
            c.numer(),
            c.denom()
        ));
    }
    out
}

pub fn tensor_json(t: &TensorSymFunc) -> Value {
    let name = t.basis().name();
    let terms: Vec<Value> = t
        .terms()
        .map(|((l, r), c)| {
            json!({
                "left": partition_json(l),
                "right": partition_json(r),
                "num": c.numer().to_string(),
                "den": c.denom().to_string(),
            })
        })
        .collect();
    json!({ "bases": [name, name], "terms": terms })
}

pub fn rtable_json(t: &RTable) -> Value {
    let entries: Vec<Value> = t
        .entries
        .iter()
        .map(|((mu, nu), v)| {
            json!({
                "mu": partition_json(mu),
                "nu": partition_json(nu),
                "value": v.to_string(),
            })
        })
        .collect();
    json!({ "lambda": partition_json(&t.lambda), "entries": entries })
}

pub fn pair_table_csv(entries: &BTreeMap<(Partition, Partition), BigInt>) -> String {
    let mut out = String::from("mu,nu,value\n");
    for ((mu, nu), v) in entries {
        out.push_str(&format!(
            "{},{},{}\n",
            partition_csv(mu),
            partition_csv(nu),
            v
        ));
    }
    out
}

pub fn multiplicity_table_json(
    lambda: &Partition,
    m: usize,
    n: usize,
    entries: &BTreeMap<(Partition, Partition), BigInt>,
) -> Value {
    let rows: Vec<Value> = entries
        .iter()
        .map(|((mu, nu), v)| {
            json!({
                "mu": partition_json(mu),
                "nu": partition_json(nu),
                "value": v.to_string(),
            })
        })
        .collect();
    json!({
        "lambda": partition_json(lambda),
        "m": m,
        "n": n,
        "entries": rows,
    })
}

pub fn value_json(v: &BigInt) -> Value {
    json!({ "value": v.to_string() })
}

pub fn value_csv(v: &BigInt) -> String {
    format!("value\n{}\n", v)
}

/// One table cell in the JSON-lines record format of the coefficient
/// families.
pub fn coeff_record_json(r: &CoeffRecord) -> Value {
    json!({
        "kind": r.kind.name(),
        "lambda": partition_json(&r.lambda),
        "mu": partition_json(&r.mu),
        "i": r.i,
        "n": r.n,
        "value": r.value.to_string(),
        "stable": r.stable,
    })
}

pub fn coeff_record_csv(r: &CoeffRecord) -> String {
    format!(
        "kind,lambda,mu,i,n,value,stable\n{},{},{},{},{},{},{}\n",
        r.kind.name(),
        partition_csv(&r.lambda),
        partition_csv(&r.mu),
        r.i,
        r.n,
        r.value,
        r.stable
    )
}

pub fn scan_json(r: &ScanReport) -> Value {
    let values: Vec<Value> = r
        .values
        .iter()
        .map(|(n, v)| json!({ "n": n, "value": v.to_string() }))
        .collect();
    json!({
        "lambda": partition_json(&r.lambda),
        "mu": partition_json(&r.mu),
        "nu": partition_json(&r.nu),
        "a": r.a,
        "b": r.b,
        "values": values,
        "onset": r.onset,
        "stable_value": r.stable_value.as_ref().map(|v| v.to_string()),
        "limit": r.limit.to_string(),
        "agrees": r.agrees,
    })
}

pub fn scan_csv(r: &ScanReport) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in &r.values {
        out.push_str(&format!("{},{}\n", n, v));
    }
    out
}
