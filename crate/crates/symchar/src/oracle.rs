//! Independent ground truth for the algebraic machinery: irreducible
//! symmetric-group characters by the Murnaghan–Nakayama recursion, cycle
//! types for the product embedding `S_m x S_n -> S_{mn}`, and brute-force
//! restriction multiplicities evaluated as class sums.
//!
//! Everything here depends only on `partition` primitives, except
//! [`gl_restriction_multiplicity`], which by construction is the
//! plethysm/inner-product formula and therefore uses the algebra modules.
//!
//! The character memo is shared with the Schur <-> power-sum conversions
//! and supports an optional on-disk JSON-lines cache.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{as_integer, h_series, qbig, Basis, SymFunc};

static CHAR_MEMO: Lazy<DashMap<(Partition, Partition), BigInt>> = Lazy::new(DashMap::new);
static DISK: Lazy<Mutex<Option<DiskCache>>> = Lazy::new(|| Mutex::new(None));

struct DiskCache {
    path: PathBuf,
    loaded: bool,
}

/// File name used inside the cache directory.
const CACHE_FILE: &str = "characters.jsonl";

/// Points the character memo at a directory holding a `characters.jsonl`
/// cache. Existing records are loaded lazily on first use; new values are
/// appended one record per line.
pub fn attach_cache_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut guard = DISK.lock().expect("cache lock");
    *guard = Some(DiskCache {
        path: dir.join(CACHE_FILE),
        loaded: false,
    });
    Ok(())
}

fn record_line(lam: &Partition, rho: &Partition, value: &BigInt) -> String {
    let ps = |p: &Partition| {
        let v: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
        format!("[{}]", v.join(","))
    };
    format!(
        "{{\"lambda\":{},\"rho\":{},\"value\":\"{}\"}}\n",
        ps(lam),
        ps(rho),
        value
    )
}

fn parse_record(line: &str) -> Option<(Partition, Partition, BigInt)> {
    let v: serde_json::Value = serde_json::from_str(line).ok()?;
    let to_partition = |val: &serde_json::Value| -> Option<Partition> {
        let arr = val.as_array()?;
        let parts: Option<Vec<usize>> =
            arr.iter().map(|x| x.as_u64().map(|u| u as usize)).collect();
        Partition::new(parts?).ok()
    };
    let lam = to_partition(v.get("lambda")?)?;
    let rho = to_partition(v.get("rho")?)?;
    let value: BigInt = v.get("value")?.as_str()?.parse().ok()?;
    Some((lam, rho, value))
}

fn disk_load_if_needed() {
    let mut guard = DISK.lock().expect("cache lock");
    if let Some(cache) = guard.as_mut() {
        if !cache.loaded {
            cache.loaded = true;
            if let Ok(text) = fs::read_to_string(&cache.path) {
                for line in text.lines() {
                    if let Some((lam, rho, value)) = parse_record(line) {
                        CHAR_MEMO.insert((lam, rho), value);
                    }
                }
            }
        }
    }
}

fn disk_append(lam: &Partition, rho: &Partition, value: &BigInt) {
    let guard = DISK.lock().expect("cache lock");
    if let Some(cache) = guard.as_ref() {
        if let Ok(mut file) = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&cache.path)
        {
            // one write call per record keeps appends atomic enough for
            // a single-machine cache
            let _ = file.write_all(record_line(lam, rho, value).as_bytes());
        }
    }
}

fn disk_enabled() -> bool {
    DISK.lock().expect("cache lock").is_some()
}

/// Irreducible character value `chi^lambda(rho)` as an exact integer.
///
/// Recursion removes rim hooks matching the largest remaining cycle first;
/// results are memoized on `(lambda, remaining cycle type)`.
pub fn character(lam: &Partition, rho: &Partition) -> Result<BigInt> {
    if lam.size() != rho.size() {
        return Err(Error::SizeMismatch {
            lambda: lam.to_string(),
            rho: rho.to_string(),
        });
    }
    disk_load_if_needed();
    Ok(char_rec(lam, rho))
}

fn char_rec(lam: &Partition, rho: &Partition) -> BigInt {
    if lam.is_empty() {
        return BigInt::one();
    }
    let key = (lam.clone(), rho.clone());
    if let Some(hit) = CHAR_MEMO.get(&key) {
        return hit.clone();
    }
    let r = rho.parts()[0];
    let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix stays sorted");
    let mut acc = BigInt::zero();
    for hook in lam.remove_rim_hooks(r) {
        let sub = char_rec(&hook.shape, &rest);
        if hook.height % 2 == 0 {
            acc += sub;
        } else {
            acc -= sub;
        }
    }
    if disk_enabled() {
        disk_append(lam, rho, &acc);
    }
    CHAR_MEMO.insert(key, acc.clone());
    acc
}

/// Dimension of the irreducible labelled by `lam` (character at the identity).
pub fn dimension(lam: &Partition) -> BigInt {
    let n = lam.size();
    let identity = Partition::new(vec![1; n]).expect("all-ones");
    character(lam, &identity).expect("sizes match")
}

/// Cycle type of the product permutation acting on an m x n grid: every
/// pair of cycles `(a, b)` contributes `gcd(a,b)` cycles of length
/// `lcm(a,b)`.
pub fn tensor_cycle_type(rho: &Partition, sigma: &Partition) -> Partition {
    let mut parts = Vec::new();
    for &a in rho.parts() {
        for &b in sigma.parts() {
            let g = a.gcd(&b);
            let l = a / g * b;
            for _ in 0..g {
                parts.push(l);
            }
        }
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted positive parts")
}

/// Multiplicity of the irreducible `mu x nu` of `S_m x S_n` in the
/// restriction of the irreducible `lam` of `S_{mn}`, by the class sum
/// `sum chi^lam(t(rho,sigma)) chi^mu(rho) chi^nu(sigma) / (z_rho z_sigma)`.
pub fn restriction_multiplicity(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigInt> {
    let m = mu.size();
    let n = nu.size();
    if lam.size() != m * n {
        return Err(Error::SizeMismatch {
            lambda: lam.to_string(),
            rho: format!("{}x{}", mu, nu),
        });
    }
    let mut acc = BigRational::zero();
    for rho in partitions_of(m) {
        let chi_mu = character(mu, &rho)?;
        if chi_mu.is_zero() {
            continue;
        }
        for sigma in partitions_of(n) {
            let chi_nu = character(nu, &sigma)?;
            if chi_nu.is_zero() {
                continue;
            }
            let t = tensor_cycle_type(&rho, &sigma);
            let chi_lam = character(lam, &t)?;
            if chi_lam.is_zero() {
                continue;
            }
            acc += qbig(chi_lam * &chi_mu * &chi_nu) / qbig(rho.z() * sigma.z());
        }
    }
    match as_integer(&acc) {
        Some(v) if !v.is_negative() => Ok(v),
        _ => Err(Error::NonIntegralMultiplicity(acc.to_string())),
    }
}

/// All nonzero restriction multiplicities of `lam` over pairs
/// `(mu |- m, nu |- n)`.
pub fn restriction_table(
    lam: &Partition,
    m: usize,
    n: usize,
) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    if lam.size() != m * n {
        return Err(Error::SizeMismatch {
            lambda: lam.to_string(),
            rho: format!("{}*{}", m, n),
        });
    }
    let mut out = BTreeMap::new();
    for mu in partitions_of(m) {
        for nu in partitions_of(n) {
            let v = restriction_multiplicity(lam, &mu, &nu)?;
            if !v.is_zero() {
                out.insert((mu.clone(), nu.clone()), v);
            }
        }
    }
    Ok(out)
}

/// Multiplicity of the symmetric-group irreducible `mu` (a partition of
/// `n`) in the restriction of the general-linear Schur-functor module for
/// `lam` to permutation matrices: the Hall pairing of `s_lam` with the
/// degree-`|lam|` part of `s_mu[1 + h_1 + h_2 + ...]`.
pub fn gl_restriction_multiplicity(lam: &Partition, mu: &Partition, n: usize) -> Result<BigInt> {
    if mu.size() != n || n < lam.size() {
        return Err(Error::InvalidArgument(format!(
            "need |mu| = n >= |lam|, got |{}| and n = {} with lam = {}",
            mu, n, lam
        )));
    }
    let cap = lam.size();
    let smu = SymFunc::elem(Basis::Schur, mu.clone());
    let series = h_series(cap);
    let pleth = crate::hopf::plethysm_truncated(&smu, &series, Some(cap));
    let comp = pleth.homogeneous_component(cap);
    let slam = SymFunc::elem(Basis::Schur, lam.clone());
    let value = slam.hall_inner(&comp);
    match as_integer(&value) {
        Some(v) if !v.is_negative() => Ok(v),
        _ => Err(Error::NonIntegralMultiplicity(value.to_string())),
    }
}
