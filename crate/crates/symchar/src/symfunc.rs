//! Sparse symmetric functions over exact rationals.
//!
//! A [`SymFunc`] is a basis-tagged sparse map from partitions to
//! `BigRational` coefficients. Supported named bases: power sums `p`,
//! complete homogeneous `h`, Schur `s`, and the stable basis (produced
//! and consumed only by the `stable` module). Conversions are exact:
//! `h <-> p` through Newton's identities, `s <-> p` through the
//! character table of the symmetric group, which is shared with the
//! `oracle` module.

use std::collections::BTreeMap;
use std::fmt;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::oracle;
use crate::partition::{partitions_of, Partition};

pub(crate) type TermMap = BTreeMap<Partition, BigRational>;

/// Basis tag carried by every [`SymFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    PowerSum,
    Complete,
    Schur,
    Stable,
}

impl Basis {
    /// Name used in JSON output.
    pub fn name(self) -> &'static str {
        match self {
            Basis::PowerSum => "powersum",
            Basis::Complete => "complete",
            Basis::Schur => "schur",
            Basis::Stable => "stable",
        }
    }

    fn letter(self) -> &'static str {
        match self {
            Basis::PowerSum => "p",
            Basis::Complete => "h",
            Basis::Schur => "s",
            Basis::Stable => "st",
        }
    }

    pub fn parse(s: &str) -> Option<Basis> {
        match s {
            "powersum" => Some(Basis::PowerSum),
            "complete" => Some(Basis::Complete),
            "schur" => Some(Basis::Schur),
            "stable" => Some(Basis::Stable),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// rational helpers
// ---------------------------------------------------------------------------

pub(crate) fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn qbig(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

pub(crate) fn qinv(n: BigInt) -> BigRational {
    BigRational::new(BigInt::one(), n)
}

/// The integer value of `q`, if it has denominator one.
pub(crate) fn as_integer(q: &BigRational) -> Option<BigInt> {
    if q.is_integer() {
        Some(q.to_integer())
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// SymFunc
// ---------------------------------------------------------------------------

/// A sparse symmetric function: a basis tag plus a map from partitions to
/// nonzero exact rational coefficients. Immutable in all public operations.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: TermMap,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: TermMap::new(),
        }
    }

    pub fn constant(basis: Basis, c: BigRational) -> Self {
        let mut f = SymFunc::zero(basis);
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn one(basis: Basis) -> Self {
        SymFunc::constant(basis, BigRational::one())
    }

    /// A single basis element, e.g. `p_[2,1]` or `s_[3]`.
    pub fn elem(basis: Basis, lam: Partition) -> Self {
        let mut f = SymFunc::zero(basis);
        f.add_term(lam, BigRational::one());
        f
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut f = SymFunc::zero(basis);
        for (lam, c) in terms {
            f.add_term(lam, c);
        }
        f
    }

    pub(crate) fn from_map(basis: Basis, terms: TermMap) -> Self {
        let mut f = SymFunc { basis, terms };
        f.terms.retain(|_, c| !c.is_zero());
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub(crate) fn term_map(&self) -> &TermMap {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given partition (zero when absent).
    pub fn coeff(&self, lam: &Partition) -> BigRational {
        self.terms.get(lam).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Max |lambda| over stored terms; `None` for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|k| k.size())
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| k.size())
    }

    /// Adds `c` to the coefficient of `lam`, dropping exact zeros.
    pub fn add_term(&mut self, lam: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lam) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &SymFunc, c: &BigRational) {
        debug_assert_eq!(self.basis, other.basis);
        for (lam, d) in &other.terms {
            self.add_term(lam.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// The degree-`d` homogeneous part.
    pub fn homogeneous_component(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Keeps only terms of degree `<= d`.
    pub fn truncate_above(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() <= d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Keeps only terms of degree `>= d`.
    pub fn truncate_below(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() >= d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    // -----------------------------------------------------------------------
    // basis conversion
    // -----------------------------------------------------------------------

    /// Re-expresses the same element in another named basis; exact.
    /// The stable basis is owned by the `stable` module and rejected here.
    pub fn to_basis(&self, target: Basis) -> Result<SymFunc> {
        if self.basis == Basis::Stable || target == Basis::Stable {
            return Err(Error::UnsupportedBasis(Basis::Stable));
        }
        if self.basis == target {
            return Ok(self.clone());
        }
        let mut out = TermMap::new();
        for (lam, c) in &self.terms {
            for (mu, d) in elem_expansion(self.basis, lam, target).iter() {
                add_into(&mut out, mu.clone(), c * d);
            }
        }
        Ok(SymFunc::from_map(target, out))
    }

    pub(crate) fn to_powersum(&self) -> SymFunc {
        self.to_basis(Basis::PowerSum)
            .expect("conversion to power sums must be supported")
    }

    // -----------------------------------------------------------------------
    // ring operations
    // -----------------------------------------------------------------------

    /// Product, returned in the basis of `self`. Power-sum and complete
    /// monomials multiply freely; everything else routes through `p`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        self.multiply_truncated(other, None)
    }

    /// Product with an optional degree cap applied while accumulating.
    pub(crate) fn multiply_truncated(&self, other: &SymFunc, cap: Option<usize>) -> SymFunc {
        assert!(
            self.basis != Basis::Stable && other.basis != Basis::Stable,
            "stable-basis products are owned by the stable module"
        );
        if self.basis == other.basis
            && matches!(self.basis, Basis::PowerSum | Basis::Complete)
        {
            return SymFunc::from_map(
                self.basis,
                map_mul(&self.terms, &other.terms, cap),
            );
        }
        let a = self.to_powersum();
        let b = other.to_powersum();
        let prod = SymFunc::from_map(Basis::PowerSum, map_mul(&a.terms, &b.terms, cap));
        prod.to_basis(self.basis)
            .expect("power-sum result converts back")
    }

    /// Hall inner product; diagonal with weights `z_mu` on power sums.
    pub fn hall_inner(&self, other: &SymFunc) -> BigRational {
        let a = self.to_powersum();
        let b = other.to_powersum();
        let mut acc = BigRational::zero();
        // iterate over the smaller support
        let (small, large) = if a.terms.len() <= b.terms.len() {
            (&a.terms, &b.terms)
        } else {
            (&b.terms, &a.terms)
        };
        for (mu, c) in small {
            if let Some(d) = large.get(mu) {
                acc += c * d * qbig(mu.z());
            }
        }
        acc
    }

    /// Value of `self` at the eigenvalue multiset of a permutation with the
    /// given cycle type: `p_r` evaluates to the number of fixed points of
    /// the r-th power, `sum of parts c of rho with c | r`.
    pub fn eval_at_cycle_type(&self, rho: &Partition) -> BigRational {
        let f = self.to_powersum();
        let mut acc = BigRational::zero();
        for (mu, c) in &f.terms {
            let mut term = c.clone();
            for &r in mu.parts() {
                let fixed: usize = rho.parts().iter().filter(|&&c| r % c == 0).sum();
                term *= qi(fixed as i64);
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            if lam.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}{}", letter, lam)?;
            } else {
                write!(f, "{}*{}{}", mag, letter, lam)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::ops::Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, rhs.basis, "basis mismatch in +");
        let mut out = self.clone();
        out.add_scaled(rhs, &BigRational::one());
        out
    }
}

impl std::ops::Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, rhs.basis, "basis mismatch in -");
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigRational::one());
        out
    }
}

impl std::ops::Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&-BigRational::one())
    }
}

// ---------------------------------------------------------------------------
// term-map plumbing
// ---------------------------------------------------------------------------

pub(crate) fn add_into(map: &mut TermMap, key: Partition, c: BigRational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Free-monomial product: partitions multiply by merging their parts.
pub(crate) fn monomial_mul(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("merged parts stay weakly decreasing")
}

pub(crate) fn map_mul(a: &TermMap, b: &TermMap, cap: Option<usize>) -> TermMap {
    let mut out = TermMap::new();
    for (ka, ca) in a {
        if let Some(cap) = cap {
            if ka.size() > cap {
                continue;
            }
        }
        for (kb, cb) in b {
            if let Some(cap) = cap {
                if ka.size() + kb.size() > cap {
                    continue;
                }
            }
            add_into(&mut out, monomial_mul(ka, kb), ca * cb);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// single-element expansions between bases (memoized)
// ---------------------------------------------------------------------------

static H_TO_P: Lazy<DashMap<usize, TermMap>> = Lazy::new(DashMap::new);
static P_TO_H: Lazy<DashMap<usize, TermMap>> = Lazy::new(DashMap::new);
static SCHUR_TO_P: Lazy<DashMap<Partition, TermMap>> = Lazy::new(DashMap::new);
static P_TO_SCHUR: Lazy<DashMap<Partition, TermMap>> = Lazy::new(DashMap::new);

/// `h_r` in power sums: `sum over rho |- r of p_rho / z_rho`.
fn h_to_p_row(r: usize) -> TermMap {
    if let Some(hit) = H_TO_P.get(&r) {
        return hit.clone();
    }
    let mut out = TermMap::new();
    for rho in partitions_of(r) {
        let z = rho.z();
        out.insert(rho, qinv(z));
    }
    H_TO_P.insert(r, out.clone());
    out
}

/// `p_r` in complete homogeneous monomials, by Newton's identity
/// `p_r = r h_r - sum_{i=1}^{r-1} h_i p_{r-i}`.
fn p_to_h_row(r: usize) -> TermMap {
    if let Some(hit) = P_TO_H.get(&r) {
        return hit.clone();
    }
    let mut out = TermMap::new();
    if r == 0 {
        out.insert(Partition::empty(), BigRational::one());
    } else {
        out.insert(Partition::single(r), qi(r as i64));
        for i in 1..r {
            let tail = p_to_h_row(r - i);
            let hi = Partition::single(i);
            for (mu, c) in tail {
                add_into(&mut out, monomial_mul(&hi, &mu), -c);
            }
        }
    }
    P_TO_H.insert(r, out.clone());
    out
}

/// `s_lam` in power sums: `sum over rho of chi^lam(rho) p_rho / z_rho`.
fn schur_to_p_row(lam: &Partition) -> TermMap {
    if let Some(hit) = SCHUR_TO_P.get(lam) {
        return hit.clone();
    }
    let mut out = TermMap::new();
    for rho in partitions_of(lam.size()) {
        let chi = oracle::character(lam, &rho).expect("sizes match by construction");
        if !chi.is_zero() {
            let z = rho.z();
            out.insert(rho, qbig(chi) / qbig(z));
        }
    }
    SCHUR_TO_P.insert(lam.clone(), out.clone());
    out
}

/// `p_rho` in Schur functions: `sum over lam of chi^lam(rho) s_lam`.
fn p_to_schur_row(rho: &Partition) -> TermMap {
    if let Some(hit) = P_TO_SCHUR.get(rho) {
        return hit.clone();
    }
    let mut out = TermMap::new();
    for lam in partitions_of(rho.size()) {
        let chi = oracle::character(&lam, rho).expect("sizes match by construction");
        if !chi.is_zero() {
            out.insert(lam, qbig(chi));
        }
    }
    P_TO_SCHUR.insert(rho.clone(), out.clone());
    out
}

/// Expansion of a single basis element in another basis.
pub(crate) fn elem_expansion(from: Basis, lam: &Partition, to: Basis) -> TermMap {
    assert!(from != Basis::Stable && to != Basis::Stable);
    if from == to {
        let mut out = TermMap::new();
        out.insert(lam.clone(), BigRational::one());
        return out;
    }
    match (from, to) {
        (Basis::Complete, Basis::PowerSum) => {
            let mut acc = unit_map();
            for &r in lam.parts() {
                acc = map_mul(&acc, &h_to_p_row(r), None);
            }
            acc
        }
        (Basis::PowerSum, Basis::Complete) => {
            let mut acc = unit_map();
            for &r in lam.parts() {
                acc = map_mul(&acc, &p_to_h_row(r), None);
            }
            acc
        }
        (Basis::Schur, Basis::PowerSum) => schur_to_p_row(lam),
        (Basis::PowerSum, Basis::Schur) => p_to_schur_row(lam),
        // route everything else through power sums
        (from, to) => {
            let via = elem_expansion(from, lam, Basis::PowerSum);
            let mut out = TermMap::new();
            for (rho, c) in via {
                for (mu, d) in elem_expansion(Basis::PowerSum, &rho, to) {
                    add_into(&mut out, mu, &c * d);
                }
            }
            out
        }
    }
}

fn unit_map() -> TermMap {
    let mut m = TermMap::new();
    m.insert(Partition::empty(), BigRational::one());
    m
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

/// `1 + h_1 + ... + h_D`: the degree-`D` truncation of the complete series.
pub fn h_series(degree: usize) -> SymFunc {
    let mut f = SymFunc::one(Basis::Complete);
    for i in 1..=degree {
        f.add_term(Partition::single(i), BigRational::one());
    }
    f
}

/// `L_1 + ... + L_D` with `L_n = (1/n) sum_{d|n} moebius(d) p_d^{n/d}`,
/// each `L_n` homogeneous of degree `n`; `L_1 = p_1`.
pub fn lyndon_series(degree: usize) -> SymFunc {
    let mut f = SymFunc::zero(Basis::PowerSum);
    for n in 1..=degree {
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let mu = moebius(d);
            if mu == 0 {
                continue;
            }
            let key = Partition::new(vec![d; n / d]).expect("constant parts");
            f.add_term(key, qi(mu) / qi(n as i64));
        }
    }
    f
}

/// Moebius function by trial division; arguments here stay tiny.
pub(crate) fn moebius(n: usize) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut primes = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}
