//! The stable Schur basis and its transition coefficients.
//!
//! `stable_schur(lam)` builds the inhomogeneous symmetric function whose
//! evaluation at the eigenvalues of a permutation of `S_n` (for
//! `n >= 2|lam|`) is the irreducible character indexed by the padded
//! partition `lam[n]`. Two independent constructions are provided:
//!
//! * the direct route, pairing `s_{lam'}` against `s_{mu'}[L] H` over the
//!   truncated Lyndon and complete series, and
//! * the differential-operator route, which conjugates by the antipode
//!   and assembles the result from factors `j_nu` applied through
//!   rim-hook moves on the Schur expansion.
//!
//! The second route only needs `nu` with `|nu| <= 2i` to produce the
//! component `i` degrees below the top. That makes top components of
//! `stable_schur` for large padded partitions cheap, which is what the
//! M/N transition tables and the padded Kronecker tables run on.

use std::collections::BTreeMap;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::hopf::{
    adjoint_plethysm, antipode, mn_mul_parts, mn_perp_parts, perp_apply, plethysm_truncated,
};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::symfunc::{
    as_integer, h_series, lyndon_series, qbig, qinv, Basis, SymFunc, TermMap,
};

/// Default width of the verification window used when certifying that a
/// transition coefficient has reached its limiting value.
pub const DEFAULT_WINDOW: usize = 4;

static STABLE_MEMO: Lazy<DashMap<Partition, SymFunc>> = Lazy::new(DashMap::new);
static PLETH_LH_MEMO: Lazy<DashMap<Partition, (usize, TermMap)>> = Lazy::new(DashMap::new);
static DIFFOP_FACTOR_MEMO: Lazy<DashMap<Partition, SymFunc>> = Lazy::new(DashMap::new);
static TOP_MEMO: Lazy<DashMap<(Partition, usize), SymFunc>> = Lazy::new(DashMap::new);
static ROW_MEMO: Lazy<DashMap<Partition, BTreeMap<Partition, BigRational>>> =
    Lazy::new(DashMap::new);
static INV_N_MEMO: Lazy<DashMap<(Partition, Partition, i64), BigInt>> = Lazy::new(DashMap::new);

// ---------------------------------------------------------------------------
// construction of the stable basis
// ---------------------------------------------------------------------------

/// `s_{mu'}[L] H` in the power-sum basis, truncated at degree `cap`,
/// with both series cut at `cap`. Recomputed only when a larger cap is
/// requested.
fn pleth_lh(mu: &Partition, cap: usize) -> TermMap {
    if let Some(hit) = PLETH_LH_MEMO.get(mu) {
        if hit.0 >= cap {
            return hit.1.clone();
        }
    }
    let l = lyndon_series(cap);
    let smuc = SymFunc::elem(Basis::Schur, mu.conjugate()).to_powersum();
    let pl = plethysm_truncated(&smuc, &l, Some(cap));
    let h = h_series(cap).to_powersum();
    let prod = pl.multiply_truncated(&h, Some(cap));
    let map = prod.term_map().clone();
    PLETH_LH_MEMO.insert(mu.clone(), (cap, map.clone()));
    map
}

/// The stable Schur function indexed by `lam`, expressed in the Schur
/// basis: coefficient of `s_mu` is
/// `(-1)^{|lam|-|mu|} < s_{lam'}, s_{mu'}[L] H >` over `|mu| <= |lam|`.
pub fn stable_schur(lam: &Partition) -> SymFunc {
    if let Some(hit) = STABLE_MEMO.get(lam) {
        return hit.clone();
    }
    let d = lam.size();
    let s_lamc = SymFunc::elem(Basis::Schur, lam.conjugate()).to_powersum();
    let mut out = SymFunc::zero(Basis::Schur);
    for mu in partitions_up_to(d) {
        let lh = pleth_lh(&mu, d);
        let mut coeff = BigRational::zero();
        for (rho, c) in s_lamc.terms() {
            if let Some(v) = lh.get(rho) {
                coeff += c * v * qbig(rho.z());
            }
        }
        if coeff.is_zero() {
            continue;
        }
        if (d - mu.size()) % 2 == 1 {
            coeff = -coeff;
        }
        assert!(
            coeff.is_integer(),
            "stable basis coefficient must be integral, got {coeff} at {mu} in {lam}"
        );
        out.add_term(mu, coeff);
    }
    debug_assert!(out.coeff(lam).is_one(), "leading term must be s_{lam}");
    STABLE_MEMO.insert(lam.clone(), out.clone());
    out
}

/// `j_nu = (H^perp p_nu / z_nu)[L_{>=2}^perp]`: the degree-at-most-`|nu|/2`
/// factor attached to `nu` in the differential-operator route.
fn j_nu(nu: &Partition) -> SymFunc {
    let d = nu.size();
    let hp = h_series(d).to_powersum();
    let pn = SymFunc::elem(Basis::PowerSum, nu.clone());
    let hperp = perp_apply(&hp, &pn);
    let lge2 = lyndon_series(d).truncate_below(2);
    let adj = adjoint_plethysm(&hperp, &lge2, d).expect("cap equals the input degree");
    adj.scale(&qinv(nu.z()))
}

/// `(-1)^{l(nu)} S(j_nu)` in the power-sum basis, cached per `nu`.
fn diffop_factor(nu: &Partition) -> SymFunc {
    if let Some(hit) = DIFFOP_FACTOR_MEMO.get(nu) {
        return hit.clone();
    }
    let mut f = antipode(&j_nu(nu));
    if nu.length() % 2 == 1 {
        f = f.scale(&-BigRational::one());
    }
    DIFFOP_FACTOR_MEMO.insert(nu.clone(), f.clone());
    f
}

/// The components of `stable_schur(lam)` of degree at least
/// `|lam| - depth`, assembled from the differential-operator route. Only
/// `nu` with `|nu| <= 2*depth` can contribute there, so this stays cheap
/// for large thin `lam`.
pub fn stable_schur_top_components(lam: &Partition, depth: usize) -> SymFunc {
    let key = (lam.clone(), depth);
    if let Some(hit) = TOP_MEMO.get(&key) {
        return hit.clone();
    }
    let nsize = lam.size();
    let floor = nsize.saturating_sub(depth);
    let mut acc = SymFunc::zero(Basis::Schur);
    let numax = (2 * depth).min(nsize);
    let slam = SymFunc::elem(Basis::Schur, lam.clone());
    for nu in partitions_up_to(numax) {
        let removed = mn_perp_parts(nu.parts(), &slam);
        if removed.is_zero() {
            continue;
        }
        let factor = diffop_factor(&nu);
        for (alpha, c) in factor.terms() {
            if nsize - nu.size() + alpha.size() < floor {
                continue;
            }
            let product = mn_mul_parts(alpha.parts(), &removed);
            acc.add_scaled(&product, c);
        }
    }
    let acc = acc.truncate_below(floor);
    TOP_MEMO.insert(key, acc.clone());
    acc
}

/// The stable Schur function along the antipode route; must agree exactly
/// with [`stable_schur`].
pub fn stable_schur_via_diffops(lam: &Partition) -> SymFunc {
    stable_schur_top_components(lam, lam.size())
}

/// Per-`nu` contributions of the differential-operator route, for
/// instrumentation: the full function is the sum of the returned parts.
pub fn diffop_contributions(lam: &Partition) -> Vec<(Partition, SymFunc)> {
    let nsize = lam.size();
    let slam = SymFunc::elem(Basis::Schur, lam.clone());
    let mut out = Vec::new();
    for nu in partitions_up_to(nsize) {
        let removed = mn_perp_parts(nu.parts(), &slam);
        if removed.is_zero() {
            continue;
        }
        let factor = diffop_factor(&nu);
        let mut acc = SymFunc::zero(Basis::Schur);
        for (alpha, c) in factor.terms() {
            acc.add_scaled(&mn_mul_parts(alpha.parts(), &removed), c);
        }
        if !acc.is_zero() {
            out.push((nu, acc));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// expansion in the stable basis
// ---------------------------------------------------------------------------

/// Stable-basis coefficients of a single Schur function, by
/// degree-descending elimination: peel the leading stable term, recurse on
/// the lower-degree remainder. Rows are memoized and combined linearly.
pub(crate) fn expansion_row(zeta: &Partition) -> BTreeMap<Partition, BigRational> {
    if let Some(hit) = ROW_MEMO.get(zeta) {
        return hit.clone();
    }
    let tilde = stable_schur(zeta);
    let mut row = BTreeMap::new();
    row.insert(zeta.clone(), BigRational::one());
    // s_zeta = st_zeta + (s_zeta - st_zeta); the remainder has lower degree
    for (kappa, c) in tilde.terms() {
        if kappa == zeta {
            continue;
        }
        // coefficient of the remainder s_zeta - st_zeta at kappa is -c
        for (idx, v) in expansion_row(kappa) {
            let e = row.entry(idx).or_insert_with(BigRational::zero);
            *e += -c * v;
        }
    }
    row.retain(|_, v| !v.is_zero());
    ROW_MEMO.insert(zeta.clone(), row.clone());
    row
}

/// Expands `f` in the stable basis; returns a `Stable`-tagged function.
/// Only indices with `|lam| <= deg f` occur.
pub fn expand_in_stable(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() == Basis::Stable {
        return Ok(f.clone());
    }
    let fs = f.to_basis(Basis::Schur)?;
    let mut out = SymFunc::zero(Basis::Stable);
    for (zeta, c) in fs.terms() {
        for (idx, v) in expansion_row(zeta) {
            out.add_term(idx, c * v);
        }
    }
    Ok(out)
}

/// Inverse of [`expand_in_stable`]: maps a `Stable`-tagged function back to
/// the Schur basis.
pub fn stable_to_schur(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::Stable {
        return Err(Error::UnsupportedBasis(f.basis()));
    }
    let mut out = SymFunc::zero(Basis::Schur);
    for (lam, c) in f.terms() {
        out.add_scaled(&stable_schur(lam), c);
    }
    Ok(out)
}

/// Stable coefficients of `f` (Schur basis) restricted to index sizes in
/// `[deg f - depth, deg f]`. Subtracts only top components of the stable
/// functions involved, so it works for large padded inputs.
pub(crate) fn expand_in_stable_top(
    f: &SymFunc,
    depth: usize,
) -> BTreeMap<Partition, BigRational> {
    debug_assert_eq!(f.basis(), Basis::Schur);
    let mut out = BTreeMap::new();
    let Some(top) = f.degree() else {
        return out;
    };
    let floor = top.saturating_sub(depth);
    let mut rem = f.truncate_below(floor);
    let mut d = top;
    loop {
        let comp = rem.homogeneous_component(d);
        for (kappa, c) in comp.terms() {
            out.insert(kappa.clone(), c.clone());
            if d > floor {
                let tops = stable_schur_top_components(kappa, d - floor);
                rem.add_scaled(&tops, &-c.clone());
            } else {
                rem.add_term(kappa.clone(), -c.clone());
            }
        }
        if d == floor {
            break;
        }
        d -= 1;
    }
    debug_assert!(rem.is_zero(), "elimination must clear the window");
    out
}

// ---------------------------------------------------------------------------
// M and N transition coefficients
// ---------------------------------------------------------------------------

/// Which family a table holds: `M` writes stable functions of padded
/// partitions in padded Schur functions, `N` inverts that.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    M,
    N,
}

impl CoeffKind {
    pub fn name(self) -> &'static str {
        match self {
            CoeffKind::M => "M",
            CoeffKind::N => "N",
        }
    }
}

/// A limiting coefficient value together with the point and window at
/// which constancy was verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedValue {
    pub value: BigInt,
    pub certified_n: usize,
    pub window: usize,
}

/// One table cell in the JSON-lines dump.
#[derive(Clone, Debug)]
pub struct CoeffRecord {
    pub kind: CoeffKind,
    pub lambda: Partition,
    pub mu: Partition,
    pub i: i64,
    pub n: i64,
    pub value: BigInt,
    pub stable: bool,
}

/// Append-only table of M or N coefficients with stability metadata.
/// Entries are immutable once written; concurrent duplicate computation of
/// a cell produces identical values.
pub struct CoeffFamily {
    kind: CoeffKind,
    entries: DashMap<(Partition, Partition, i64, i64), BigInt>,
    stable_entries: DashMap<(Partition, Partition, i64), CertifiedValue>,
}

impl CoeffFamily {
    pub fn new(kind: CoeffKind) -> Self {
        CoeffFamily {
            kind,
            entries: DashMap::new(),
            stable_entries: DashMap::new(),
        }
    }

    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    /// Smallest `n` from which the cell `(lambda, mu, i)` is guaranteed
    /// constant: `2|lambda| + 3i` for M, `2|lambda| + 7i` for N.
    pub fn stability_bound(&self, lambda: &Partition, i: usize) -> usize {
        match self.kind {
            CoeffKind::M => 2 * lambda.size() + 3 * i,
            CoeffKind::N => 2 * lambda.size() + 7 * i,
        }
    }

    /// The cell value at finite `n`; zero whenever a padding is undefined
    /// or `i < 0`.
    pub fn entry(&self, lambda: &Partition, mu: &Partition, i: i64, n: i64) -> Result<BigInt> {
        let key = (lambda.clone(), mu.clone(), i, n);
        if let Some(hit) = self.entries.get(&key) {
            return Ok(hit.clone());
        }
        let value = match self.kind {
            CoeffKind::M => m_coefficient_raw(lambda, mu, i, n)?,
            CoeffKind::N => n_coefficient_raw(mu, lambda, i, n)?,
        };
        self.entries.insert(key, value.clone());
        Ok(value)
    }

    /// The limiting value: computed at the stability bound and certified
    /// constant across a window of the given width. The table trusts the
    /// bound only after the window check passes.
    pub fn stable(
        &self,
        lambda: &Partition,
        mu: &Partition,
        i: i64,
        window: usize,
    ) -> Result<CertifiedValue> {
        if i < 0 {
            return Ok(CertifiedValue {
                value: BigInt::zero(),
                certified_n: 0,
                window,
            });
        }
        let key = (lambda.clone(), mu.clone(), i);
        if let Some(hit) = self.stable_entries.get(&key) {
            if hit.window >= window {
                return Ok(hit.clone());
            }
        }
        let n0 = self.stability_bound(lambda, i as usize);
        let value = self.entry(lambda, mu, i, n0 as i64)?;
        for n in (n0 + 1)..=(n0 + window) {
            let v = self.entry(lambda, mu, i, n as i64)?;
            if v != value {
                return Err(Error::StabilityViolation(format!(
                    "{}({}, {}, i={}) changed from {} at n={} to {} at n={}",
                    self.kind.name(),
                    lambda,
                    mu,
                    i,
                    value,
                    n0,
                    v,
                    n
                )));
            }
        }
        if self.kind == CoeffKind::N {
            let inv = stable_n_via_inversion(mu, lambda, i)?;
            if inv != value {
                return Err(Error::StabilityViolation(format!(
                    "N({}, {}, i={}) window value {} disagrees with series inversion {}",
                    lambda, mu, i, value, inv
                )));
            }
        }
        let certified = CertifiedValue {
            value,
            certified_n: n0,
            window,
        };
        self.stable_entries.insert(key, certified.clone());
        Ok(certified)
    }

    /// All computed cells in canonical order, for the JSON-lines dump.
    pub fn records(&self) -> Vec<CoeffRecord> {
        let mut recs: Vec<CoeffRecord> = self
            .entries
            .iter()
            .map(|e| {
                let (lambda, mu, i, n) = e.key().clone();
                let stable = self
                    .stable_entries
                    .get(&(lambda.clone(), mu.clone(), i))
                    .map(|s| {
                        n >= self.stability_bound(&lambda, i.max(0) as usize) as i64
                            && s.value == *e.value()
                    })
                    .unwrap_or(false);
                CoeffRecord {
                    kind: self.kind,
                    lambda,
                    mu,
                    i,
                    n,
                    value: e.value().clone(),
                    stable,
                }
            })
            .collect();
        recs.sort_by(|a, b| {
            (&a.lambda, &a.mu, a.i, a.n).cmp(&(&b.lambda, &b.mu, b.i, b.n))
        });
        recs
    }
}

static M_FAMILY: Lazy<CoeffFamily> = Lazy::new(|| CoeffFamily::new(CoeffKind::M));
static N_FAMILY: Lazy<CoeffFamily> = Lazy::new(|| CoeffFamily::new(CoeffKind::N));

/// Shared M table used by the free functions and the CLI.
pub fn m_family() -> &'static CoeffFamily {
    &M_FAMILY
}

/// Shared N table used by the free functions and the CLI.
pub fn n_family() -> &'static CoeffFamily {
    &N_FAMILY
}

fn m_coefficient_raw(lam: &Partition, mu: &Partition, i: i64, n: i64) -> Result<BigInt> {
    if i < 0 || n < 0 || n < i {
        return Ok(BigInt::zero());
    }
    let Ok(padded) = lam.pad(n as usize) else {
        return Ok(BigInt::zero());
    };
    let Ok(target) = mu.pad((n - i) as usize) else {
        return Ok(BigInt::zero());
    };
    let tops = stable_schur_top_components(&padded, i as usize);
    let c = tops.coeff(&target);
    as_integer(&c).ok_or_else(|| {
        Error::NonIntegralCoefficient(c.to_string(), format!("M({lam},{mu},{i},{n})"))
    })
}

fn n_coefficient_raw(mu: &Partition, lam: &Partition, i: i64, n: i64) -> Result<BigInt> {
    if i < 0 || n < 0 || n < i {
        return Ok(BigInt::zero());
    }
    let Ok(padded) = mu.pad(n as usize) else {
        return Ok(BigInt::zero());
    };
    let Ok(target) = lam.pad((n - i) as usize) else {
        return Ok(BigInt::zero());
    };
    let coeffs = expand_in_stable_top(&SymFunc::elem(Basis::Schur, padded), i as usize);
    let c = coeffs
        .get(&target)
        .cloned()
        .unwrap_or_else(BigRational::zero);
    as_integer(&c).ok_or_else(|| {
        Error::NonIntegralCoefficient(c.to_string(), format!("N({mu},{lam},{i},{n})"))
    })
}

/// `M^{(i)}` at finite `n`: the coefficient of the padded Schur function
/// `mu[n-i]` in the stable function of `lam[n]`; zero when a padding is
/// undefined.
pub fn m_coefficient(lam: &Partition, mu: &Partition, i: i64, n: i64) -> Result<BigInt> {
    M_FAMILY.entry(lam, mu, i, n)
}

/// `N^{(i)}` at finite `n`: the coefficient of the stable function
/// `lam[n-i]` in the padded Schur function `mu[n]`; zero when a padding is
/// undefined.
pub fn n_coefficient(mu: &Partition, lam: &Partition, i: i64, n: i64) -> Result<BigInt> {
    N_FAMILY.entry(lam, mu, i, n)
}

/// Limiting M value, certified over the default window.
pub fn stable_m(lam: &Partition, mu: &Partition, i: i64) -> Result<CertifiedValue> {
    M_FAMILY.stable(lam, mu, i, DEFAULT_WINDOW)
}

/// Limiting N value, certified over the default window and cross-checked
/// against power-series inversion of the stable M matrix.
pub fn stable_n(mu: &Partition, lam: &Partition, i: i64) -> Result<CertifiedValue> {
    N_FAMILY.stable(lam, mu, i, DEFAULT_WINDOW)
}

/// Solves `sum_{i+j=k} N^{(i)} M^{(j)} = delta_{k,0} Id` for the stable N
/// values, using only stable M values. Kept independent of the window
/// route so the two can cross-check each other.
fn stable_n_via_inversion(mu: &Partition, nu: &Partition, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Ok(BigInt::zero());
    }
    if k == 0 {
        return Ok(if mu == nu {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    let key = (mu.clone(), nu.clone(), k);
    if let Some(hit) = INV_N_MEMO.get(&key) {
        return Ok(hit.clone());
    }
    let mut acc = BigInt::zero();
    for j in 1..=k {
        let i = k - j;
        // intermediate kappa obeys ||kappa| - |mu|| <= 2i
        let lo = mu.size().saturating_sub(2 * i as usize);
        let hi = mu.size() + 2 * i as usize;
        for kappa_size in lo..=hi {
            for kappa in partitions_of(kappa_size) {
                let nv = stable_n_via_inversion(mu, &kappa, i)?;
                if nv.is_zero() {
                    continue;
                }
                let mv = M_FAMILY.stable(&kappa, nu, j, DEFAULT_WINDOW)?.value;
                if mv.is_zero() {
                    continue;
                }
                acc -= nv * mv;
            }
        }
    }
    INV_N_MEMO.insert(key, acc.clone());
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::qi;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    fn sf(terms: &[(&[usize], i64)]) -> SymFunc {
        SymFunc::from_terms(
            Basis::Schur,
            terms.iter().map(|(ps, c)| (p(ps), qi(*c))),
        )
    }

    #[test]
    fn stable_schur_small_values() {
        assert_eq!(stable_schur(&p(&[])), SymFunc::one(Basis::Schur));
        assert_eq!(stable_schur(&p(&[1])), sf(&[(&[1], 1), (&[], -1)]));
        assert_eq!(stable_schur(&p(&[2])), sf(&[(&[2], 1), (&[1], -2)]));
        assert_eq!(
            stable_schur(&p(&[3])),
            sf(&[(&[3], 1), (&[2], -2), (&[1, 1], -1), (&[1], 1)])
        );
    }

    #[test]
    fn stable_schur_evaluates_to_padded_characters() {
        // the permutation-module identities pin the small stable functions:
        // eval of st_[1] is fix(g) - 1, eval of st_[2] counts fixed
        // 2-subsets minus fixed points
        for n in [4usize, 5] {
            for rho in partitions_of(n) {
                let st1 = stable_schur(&p(&[1]));
                let fix = SymFunc::elem(Basis::PowerSum, p(&[1])).eval_at_cycle_type(&rho);
                assert_eq!(st1.eval_at_cycle_type(&rho), &fix - &qi(1));
                let st2 = stable_schur(&p(&[2]));
                let chi = crate::oracle::character(&p(&[2]).pad(n).unwrap(), &rho).unwrap();
                assert_eq!(st2.eval_at_cycle_type(&rho), qbig(chi));
            }
        }
        // dimension check for st_[3] at the identity of S_6
        let st3 = stable_schur(&p(&[3]));
        let id6 = Partition::new(vec![1; 6]).unwrap();
        assert_eq!(st3.eval_at_cycle_type(&id6), qi(5));
    }

    #[test]
    fn diffop_route_agrees() {
        for size in 0..=4usize {
            for lam in partitions_of(size) {
                assert_eq!(
                    stable_schur_via_diffops(&lam),
                    stable_schur(&lam),
                    "lam = {lam}"
                );
            }
        }
    }

    #[test]
    fn diffop_contributions_obey_degree_support() {
        // the component i degrees below the top only receives nu with
        // i <= |nu| <= 2i
        for size in 0..=4usize {
            for lam in partitions_of(size) {
                for (nu, contribution) in diffop_contributions(&lam) {
                    for (kappa, _) in contribution.terms() {
                        let i = lam.size() - kappa.size();
                        assert!(
                            nu.size() >= i && nu.size() <= 2 * i,
                            "lam={lam} nu={nu} wrote to degree offset {i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn expand_round_trips() {
        for size in 0..=5usize {
            for lam in partitions_of(size) {
                let tilde = stable_schur(&lam);
                let exp = expand_in_stable(&tilde).unwrap();
                assert_eq!(exp, SymFunc::elem(Basis::Stable, lam.clone()));
                let back = stable_to_schur(&exp).unwrap();
                assert_eq!(back, tilde);
            }
        }
    }

    #[test]
    fn expand_schur_examples() {
        let e1 = expand_in_stable(&SymFunc::elem(Basis::Schur, p(&[1]))).unwrap();
        assert_eq!(
            e1,
            SymFunc::from_terms(
                Basis::Stable,
                [(p(&[1]), qi(1)), (p(&[]), qi(1))]
            )
        );
        let e2 = expand_in_stable(&SymFunc::elem(Basis::Schur, p(&[2]))).unwrap();
        assert_eq!(
            e2,
            SymFunc::from_terms(
                Basis::Stable,
                [(p(&[2]), qi(1)), (p(&[1]), qi(2)), (p(&[]), qi(2))]
            )
        );
    }

    #[test]
    fn depth_limited_expansion_matches_full() {
        for size in 2..=5usize {
            for lam in partitions_of(size) {
                let f = stable_schur(&lam);
                let full = expand_in_stable(&f).unwrap();
                for depth in 0..=2usize {
                    let top = expand_in_stable_top(&f.to_basis(Basis::Schur).unwrap(), depth);
                    for (idx, v) in top {
                        assert_eq!(v, full.coeff(&idx), "lam={lam} idx={idx}");
                    }
                }
            }
        }
    }

    #[test]
    fn m_coefficient_examples() {
        // delta at i = 0 once n clears the bound
        for lam in partitions_up_to(3) {
            for mu in partitions_up_to(3) {
                let n = (2 * lam.size()).max(lam.size() + lam.part(0)) as i64;
                let expect = if lam == mu { 1 } else { 0 };
                assert_eq!(
                    m_coefficient(&lam, &mu, 0, n).unwrap(),
                    BigInt::from(expect),
                    "lam={lam} mu={mu}"
                );
            }
        }
        assert_eq!(m_coefficient(&p(&[]), &p(&[]), 1, 3).unwrap(), BigInt::from(-2));
        assert_eq!(m_coefficient(&p(&[]), &p(&[1]), 1, 3).unwrap(), BigInt::from(-1));
        assert_eq!(m_coefficient(&p(&[]), &p(&[]), 2, 3).unwrap(), BigInt::one());
        // negative i vanishes
        assert_eq!(m_coefficient(&p(&[1]), &p(&[]), -1, 5).unwrap(), BigInt::zero());
    }

    #[test]
    fn n_coefficient_examples() {
        for mu in partitions_up_to(2) {
            for lam in partitions_up_to(2) {
                let n = (2 * mu.size()).max(mu.size() + mu.part(0)) as i64;
                let expect = if lam == mu { 1 } else { 0 };
                assert_eq!(
                    n_coefficient(&mu, &lam, 0, n).unwrap(),
                    BigInt::from(expect)
                );
            }
        }
        assert_eq!(n_coefficient(&p(&[]), &p(&[]), 1, 2).unwrap(), BigInt::from(2));
        assert_eq!(n_coefficient(&p(&[]), &p(&[]), 2, 2).unwrap(), BigInt::from(2));
        assert_eq!(n_coefficient(&p(&[]), &p(&[]), -1, 2).unwrap(), BigInt::zero());
    }

    #[test]
    fn stable_values_and_inversion() {
        for lam in partitions_up_to(2) {
            let v = stable_m(&lam, &lam, 0).unwrap();
            assert_eq!(v.value, BigInt::one());
        }
        assert_eq!(stable_m(&p(&[]), &p(&[]), 1).unwrap().value, BigInt::from(-2));
        // convolution: sum over kappa, i+j = k of N M = delta
        for mu in partitions_up_to(2) {
            for nu in partitions_up_to(2) {
                for k in 0..=2i64 {
                    let mut acc = BigInt::zero();
                    for i in 0..=k {
                        let j = k - i;
                        let lo = mu.size().saturating_sub(2 * i as usize);
                        let hi = mu.size() + 2 * i as usize;
                        for ks in lo..=hi {
                            for kappa in partitions_of(ks) {
                                let nv = stable_n(&mu, &kappa, i).unwrap().value;
                                if nv.is_zero() {
                                    continue;
                                }
                                let mv = stable_m(&kappa, &nu, j).unwrap().value;
                                acc += nv * mv;
                            }
                        }
                    }
                    let expect = if k == 0 && mu == nu { 1 } else { 0 };
                    assert_eq!(acc, BigInt::from(expect), "mu={mu} nu={nu} k={k}");
                }
            }
        }
    }

    #[test]
    fn shape_constraints_hold() {
        // entries vanish unless ||mu| - |lam|| <= 2i
        for lam in partitions_up_to(2) {
            for mu in partitions_up_to(4) {
                for i in 0..=1i64 {
                    if (mu.size() as i64 - lam.size() as i64).abs() > 2 * i {
                        let n = M_FAMILY.stability_bound(&lam, i as usize) as i64;
                        assert_eq!(
                            m_coefficient(&lam, &mu, i, n).unwrap(),
                            BigInt::zero(),
                            "M lam={lam} mu={mu} i={i}"
                        );
                        let nb = N_FAMILY.stability_bound(&lam, i as usize) as i64;
                        assert_eq!(
                            n_coefficient(&mu, &lam, i, nb).unwrap(),
                            BigInt::zero(),
                            "N mu={mu} lam={lam} i={i}"
                        );
                    }
                }
            }
        }
    }
}
