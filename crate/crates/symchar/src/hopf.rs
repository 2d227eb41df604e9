//! Hopf-algebra structure on symmetric functions: both comultiplications,
//! counits, the antipode, adjoint multiplication (perp) operators,
//! plethysm, and adjoint plethysm.
//!
//! Power sums are primitive for the ordinary coproduct and grouplike for
//! the Kronecker coproduct, so everything here is computed on power-sum
//! monomials and converted back to the caller's basis at the end. The one
//! exception is `perp` acting on Schur expansions, which walks rim hooks
//! directly; this keeps large thin shapes cheap.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::symfunc::{
    add_into, lyndon_series, map_mul, monomial_mul, qbig, qinv, Basis, SymFunc, TermMap,
};

// ---------------------------------------------------------------------------
// tensors
// ---------------------------------------------------------------------------

/// Sparse element of the tensor square: both legs carry the same named
/// basis, so mixed-basis pairings cannot be expressed by accident.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorSymFunc {
    basis: Basis,
    terms: BTreeMap<(Partition, Partition), BigRational>,
}

impl TensorSymFunc {
    pub fn zero(basis: Basis) -> Self {
        TensorSymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Partition, right: &Partition) -> BigRational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, left: Partition, right: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
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

    pub fn swap_legs(&self) -> TensorSymFunc {
        let mut out = TensorSymFunc::zero(self.basis);
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Re-expresses both legs in another named basis, one leg at a time.
    pub fn to_basis(&self, target: Basis) -> Result<TensorSymFunc> {
        if self.basis == Basis::Stable || target == Basis::Stable {
            return Err(Error::UnsupportedBasis(Basis::Stable));
        }
        if self.basis == target {
            return Ok(self.clone());
        }
        let mut row_cache: HashMap<Partition, TermMap> = HashMap::new();
        let expand = |lam: &Partition, cache: &mut HashMap<Partition, TermMap>| {
            cache
                .entry(lam.clone())
                .or_insert_with(|| crate::symfunc::elem_expansion(self.basis, lam, target))
                .clone()
        };
        // left pass
        let mut mid: BTreeMap<(Partition, Partition), BigRational> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            for (l2, d) in expand(l, &mut row_cache) {
                let key = (l2, r.clone());
                let v = mid.entry(key).or_insert_with(BigRational::zero);
                *v += c * &d;
            }
        }
        mid.retain(|_, v| !v.is_zero());
        // right pass
        let mut out = TensorSymFunc::zero(target);
        for ((l, r), c) in &mid {
            for (r2, d) in expand(r, &mut row_cache) {
                out.add_term(l.clone(), r2, c * &d);
            }
        }
        Ok(out)
    }

    /// `< self, f (x) g >` extending `<a (x) b, c (x) d> = <a,c><b,d>`.
    pub fn pair_inner(&self, f: &SymFunc, g: &SymFunc) -> BigRational {
        let mut left_cache: HashMap<Partition, BigRational> = HashMap::new();
        let mut right_cache: HashMap<Partition, BigRational> = HashMap::new();
        let mut acc = BigRational::zero();
        for ((l, r), c) in &self.terms {
            let lv = left_cache
                .entry(l.clone())
                .or_insert_with(|| SymFunc::elem(self.basis, l.clone()).hall_inner(f))
                .clone();
            if lv.is_zero() {
                continue;
            }
            let rv = right_cache
                .entry(r.clone())
                .or_insert_with(|| SymFunc::elem(self.basis, r.clone()).hall_inner(g))
                .clone();
            acc += c * lv * rv;
        }
        acc
    }
}

impl fmt::Debug for TensorSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor[{}](", self.basis)?;
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*({}(x){})", c, l, r)?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// perp on power-sum monomials
// ---------------------------------------------------------------------------

/// `p_mu^perp p_rho`: zero unless `mu` is a sub-multiset of `rho`;
/// otherwise the remaining monomial with factor
/// `prod_v v^{m_v(mu)} * m_v(rho) (m_v(rho)-1) ... (m_v(rho)-m_v(mu)+1)`.
fn perp_p_monomial(mu: &Partition, rho: &Partition) -> Option<(Partition, BigInt)> {
    let mut factor = BigInt::one();
    let mut remaining: Vec<usize> = Vec::with_capacity(rho.length());
    let mut mu_iter = mu.parts().iter().peekable();
    let mut i = 0;
    let rp = rho.parts();
    while i < rp.len() {
        let v = rp[i];
        let mut run = 0;
        while i < rp.len() && rp[i] == v {
            run += 1;
            i += 1;
        }
        let mut take = 0;
        while let Some(&&m) = mu_iter.peek() {
            if m == v {
                take += 1;
                mu_iter.next();
            } else if m > v {
                // mu holds a part absent from rho
                return None;
            } else {
                break;
            }
        }
        if take > run {
            return None;
        }
        for k in 0..take {
            factor *= BigInt::from(v) * BigInt::from(run - k);
        }
        for _ in 0..(run - take) {
            remaining.push(v);
        }
    }
    if mu_iter.next().is_some() {
        return None;
    }
    Some((
        Partition::new(remaining).expect("sub-multiset stays sorted"),
        factor,
    ))
}

/// `f^perp` applied to a power-sum term map.
fn perp_on_powersum_map(fp: &SymFunc, gmap: &TermMap) -> TermMap {
    let mut out = TermMap::new();
    for (mu, c) in fp.terms() {
        for (rho, d) in gmap {
            if let Some((rem, factor)) = perp_p_monomial(mu, rho) {
                add_into(&mut out, rem, c * d * qbig(factor));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama moves on Schur expansions
// ---------------------------------------------------------------------------

/// Applies `p_{r_1}^perp p_{r_2}^perp ...` to a Schur expansion by removing
/// rim hooks with sign `(-1)^height`.
pub(crate) fn mn_perp_parts(parts: &[usize], g: &SymFunc) -> SymFunc {
    debug_assert_eq!(g.basis(), Basis::Schur);
    let mut cur = g.clone();
    for &r in parts {
        let mut next = SymFunc::zero(Basis::Schur);
        for (kappa, c) in cur.terms() {
            for hook in kappa.remove_rim_hooks(r) {
                let v = if hook.height % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                next.add_term(hook.shape, v);
            }
        }
        cur = next;
        if cur.is_zero() {
            break;
        }
    }
    cur
}

/// Multiplies a Schur expansion by `p_{r_1} p_{r_2} ...` by adding rim
/// hooks with sign `(-1)^height`.
pub(crate) fn mn_mul_parts(parts: &[usize], g: &SymFunc) -> SymFunc {
    debug_assert_eq!(g.basis(), Basis::Schur);
    let mut cur = g.clone();
    for &r in parts {
        let mut next = SymFunc::zero(Basis::Schur);
        for (kappa, c) in cur.terms() {
            for hook in kappa.add_rim_hooks(r) {
                let v = if hook.height % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                next.add_term(hook.shape, v);
            }
        }
        cur = next;
        if cur.is_zero() {
            break;
        }
    }
    cur
}

// ---------------------------------------------------------------------------
// comultiplications, counits, antipode
// ---------------------------------------------------------------------------

fn reject_stable(basis: Basis, what: &str) {
    assert!(
        basis != Basis::Stable,
        "{what} on the stable basis is owned by the stable module"
    );
}

/// The ordinary coproduct, `Delta(f) = sum_mu p_mu^perp f (x) p_mu / z_mu`;
/// power sums are primitive. Both legs come back in the basis of `f`.
pub fn coproduct(f: &SymFunc) -> TensorSymFunc {
    reject_stable(f.basis(), "coproduct");
    let fp = f.to_powersum();
    coproduct_powersum(&fp)
        .to_basis(f.basis())
        .expect("named basis conversion")
}

pub(crate) fn coproduct_powersum(fp: &SymFunc) -> TensorSymFunc {
    let mut t = TensorSymFunc::zero(Basis::PowerSum);
    let Some(d) = fp.degree() else {
        return t;
    };
    for mu in partitions_up_to(d) {
        let left = perp_on_powersum_map(&SymFunc::elem(Basis::PowerSum, mu.clone()), fp.term_map());
        if left.is_empty() {
            continue;
        }
        let zinv = qinv(mu.z());
        for (alpha, c) in left {
            t.add_term(alpha, mu.clone(), c * &zinv);
        }
    }
    t
}

/// The Kronecker coproduct: power sums are grouplike,
/// `Delta*(p_mu) = p_mu (x) p_mu`.
pub fn kronecker_coproduct(f: &SymFunc) -> TensorSymFunc {
    reject_stable(f.basis(), "kronecker_coproduct");
    let fp = f.to_powersum();
    let mut t = TensorSymFunc::zero(Basis::PowerSum);
    for (mu, c) in fp.terms() {
        t.add_term(mu.clone(), mu.clone(), c.clone());
    }
    t.to_basis(f.basis()).expect("named basis conversion")
}

/// Counit of the ordinary coproduct: the constant term.
pub fn counit(f: &SymFunc) -> BigRational {
    reject_stable(f.basis(), "counit");
    f.to_powersum().coeff(&Partition::empty())
}

/// Counit of the Kronecker coproduct: every `p_mu` maps to one.
pub fn counit_star(f: &SymFunc) -> BigRational {
    reject_stable(f.basis(), "counit_star");
    f.to_powersum().terms().map(|(_, c)| c).sum()
}

/// The antipode: `S(p_mu) = (-1)^{l(mu)} p_mu`, equivalently
/// `S(s_lam) = (-1)^{|lam|} s_{lam'}`; an involution and an isometry.
pub fn antipode(f: &SymFunc) -> SymFunc {
    match f.basis() {
        Basis::PowerSum => SymFunc::from_terms(
            Basis::PowerSum,
            f.terms().map(|(mu, c)| {
                let v = if mu.length() % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                (mu.clone(), v)
            }),
        ),
        Basis::Schur => SymFunc::from_terms(
            Basis::Schur,
            f.terms().map(|(lam, c)| {
                let v = if lam.size() % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                (lam.conjugate(), v)
            }),
        ),
        Basis::Complete => antipode(&f.to_powersum())
            .to_basis(Basis::Complete)
            .expect("named basis conversion"),
        Basis::Stable => panic!("antipode on the stable basis is owned by the stable module"),
    }
}

/// `f^perp(g)`, the adjoint of multiplication by `f`, returned in the
/// basis of `g`. On Schur expansions this removes rim hooks; elsewhere it
/// differentiates power-sum monomials.
pub fn perp_apply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    reject_stable(f.basis(), "perp_apply");
    let fp = f.to_powersum();
    match g.basis() {
        Basis::Schur => {
            let mut acc = SymFunc::zero(Basis::Schur);
            for (mu, c) in fp.terms() {
                acc.add_scaled(&mn_perp_parts(mu.parts(), g), c);
            }
            acc
        }
        Basis::PowerSum | Basis::Complete => {
            let gp = g.to_powersum();
            let out = perp_on_powersum_map(&fp, gp.term_map());
            SymFunc::from_map(Basis::PowerSum, out)
                .to_basis(g.basis())
                .expect("named basis conversion")
        }
        Basis::Stable => panic!("perp_apply on the stable basis is owned by the stable module"),
    }
}

// ---------------------------------------------------------------------------
// plethysm
// ---------------------------------------------------------------------------

/// Multiplies every part of every index partition by `r`; the unique
/// algebra-map extension of `p_i -> p_{ri}`. Constants pass through.
fn scale_indices(map: &TermMap, r: usize) -> TermMap {
    map.iter()
        .map(|(k, v)| {
            let parts: Vec<usize> = k.parts().iter().map(|&p| p * r).collect();
            (Partition::new(parts).expect("scaled parts"), v.clone())
        })
        .collect()
}

/// Plethysm `f[g]`, computed in the power-sum basis by substituting
/// `p_i -> p_{ri}` into `g` for every part `r` of each monomial of `f`;
/// returned in the basis of `f`.
pub fn plethysm(f: &SymFunc, g: &SymFunc) -> SymFunc {
    plethysm_truncated(f, g, None)
}

/// Plethysm with an optional degree cap applied while accumulating; the
/// kept degrees are exactly those of the uncapped result.
pub(crate) fn plethysm_truncated(f: &SymFunc, g: &SymFunc, cap: Option<usize>) -> SymFunc {
    reject_stable(f.basis(), "plethysm");
    reject_stable(g.basis(), "plethysm");
    let fp = f.to_powersum();
    let gp = g.to_powersum();
    let mut scaled: HashMap<usize, TermMap> = HashMap::new();
    let mut acc = TermMap::new();
    for (mu, c) in fp.terms() {
        let mut prod = unit_map();
        for &r in mu.parts() {
            let gr = scaled
                .entry(r)
                .or_insert_with(|| scale_indices(gp.term_map(), r));
            prod = map_mul(&prod, gr, cap);
            if prod.is_empty() {
                break;
            }
        }
        for (k, v) in prod {
            add_into(&mut acc, k, c * v);
        }
    }
    SymFunc::from_map(Basis::PowerSum, acc)
        .to_basis(f.basis())
        .expect("named basis conversion")
}

fn unit_map() -> TermMap {
    let mut m = TermMap::new();
    m.insert(Partition::empty(), BigRational::one());
    m
}

// ---------------------------------------------------------------------------
// adjoint plethysm
// ---------------------------------------------------------------------------

/// Splits the multiset of parts of `rho` into `slots` ordered slots in all
/// ways, with multinomial multiplicities. Slots with `allowed = false` are
/// forced empty.
fn distribute(
    rho: &Partition,
    slots: usize,
    allowed: &[bool],
) -> Vec<(Vec<Partition>, BigInt)> {
    debug_assert_eq!(allowed.len(), slots);
    // run-length encode the parts
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &v in rho.parts() {
        match groups.last_mut() {
            Some((val, m)) if *val == v => *m += 1,
            _ => groups.push((v, 1)),
        }
    }
    let mut acc: Vec<(Vec<Vec<usize>>, BigInt)> =
        vec![(vec![Vec::new(); slots], BigInt::one())];
    for (value, mult) in groups {
        let comps = compositions(mult, slots, allowed);
        let mut next = Vec::with_capacity(acc.len() * comps.len());
        for (assign, c) in &acc {
            for (comp, w) in &comps {
                let mut assign2 = assign.clone();
                for (j, &cnt) in comp.iter().enumerate() {
                    for _ in 0..cnt {
                        assign2[j].push(value);
                    }
                }
                next.push((assign2, c * w));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(assign, c)| {
            let parts = assign
                .into_iter()
                .map(|v| Partition::new(v).expect("descending pushes"))
                .collect();
            (parts, c)
        })
        .collect()
}

/// Compositions of `m` into `slots` non-negative parts with multinomial
/// weights `m! / prod k_j!`; disallowed slots receive zero.
fn compositions(m: usize, slots: usize, allowed: &[bool]) -> Vec<(Vec<usize>, BigInt)> {
    fn binom(n: usize, k: usize) -> BigInt {
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; slots];
    fn rec(
        j: usize,
        left: usize,
        weight: BigInt,
        cur: &mut Vec<usize>,
        allowed: &[bool],
        out: &mut Vec<(Vec<usize>, BigInt)>,
    ) {
        if j + 1 == cur.len() {
            if left > 0 && !allowed[j] {
                return;
            }
            cur[j] = left;
            out.push((cur.clone(), weight));
            cur[j] = 0;
            return;
        }
        let top = if allowed[j] { left } else { 0 };
        for k in 0..=top {
            cur[j] = k;
            let w = &weight * binom(left, k);
            rec(j + 1, left - k, w, cur, allowed, out);
        }
        cur[j] = 0;
    }
    rec(0, m, BigInt::one(), &mut cur, allowed, &mut out);
    out
}

/// `p_alpha[g^perp]` for homogeneous `g` of degree `j >= 1`, by the
/// inner-product characterization over the orthogonal power-sum basis:
/// the coefficient of `p_beta` is `<p_alpha, p_beta[g]> / z_beta`.
fn adjoint_homogeneous_elem(alpha: &Partition, gmap: &TermMap, j: usize) -> TermMap {
    if alpha.is_empty() {
        return unit_map();
    }
    let asize = alpha.size();
    if asize % j != 0 {
        return TermMap::new();
    }
    let za = qbig(alpha.z());
    let mut out = TermMap::new();
    for beta in partitions_of(asize / j) {
        let mut prod = unit_map();
        for &r in beta.parts() {
            prod = map_mul(&prod, &scale_indices(gmap, r), None);
        }
        if let Some(c) = prod.get(alpha) {
            add_into(&mut out, beta.clone(), c * &za / qbig(beta.z()));
        }
    }
    out
}

/// The slot operators of the factorized adjoint-plethysm formula: one per
/// nonzero homogeneous component of `g`.
enum SlotOp {
    /// degree-zero component `c`: constants pass and pick up the series
    /// `sum_beta c^{l(beta)} p_beta / z_beta`, truncated at the cap
    Constant(BigRational),
    /// positive-degree homogeneous component
    Homogeneous(usize, TermMap),
}

/// Adjoint plethysm `f[g^perp]`, the adjoint of `h -> h[g]` under the Hall
/// inner product, characterized by `<f[g^perp], h> = <f, h[g]>`.
///
/// Computed by the factorized route: split `g` into nonzero homogeneous
/// components, Sweedler-split `f` across one slot per component, apply the
/// homogeneous adjoint in each slot, and multiply. When `g` has a nonzero
/// constant term the result is a series; `degree_cap` truncates it (and
/// must be at least `deg f`).
pub fn adjoint_plethysm(f: &SymFunc, g: &SymFunc, degree_cap: usize) -> Result<SymFunc> {
    reject_stable(f.basis(), "adjoint_plethysm");
    reject_stable(g.basis(), "adjoint_plethysm");
    let fp = f.to_powersum();
    let Some(fdeg) = fp.degree() else {
        return Ok(SymFunc::zero(f.basis()));
    };
    if degree_cap < fdeg {
        return Err(Error::TruncationTooSmall {
            degree: degree_cap,
            needed: fdeg,
        });
    }
    let gp = g.to_powersum();
    // nonzero homogeneous components of g, one slot each
    let mut ops: Vec<SlotOp> = Vec::new();
    if let Some(gdeg) = gp.degree() {
        for d in 0..=gdeg {
            let comp = gp.homogeneous_component(d);
            if comp.is_zero() {
                continue;
            }
            if d == 0 {
                ops.push(SlotOp::Constant(comp.coeff(&Partition::empty())));
            } else {
                ops.push(SlotOp::Homogeneous(d, comp.term_map().clone()));
            }
        }
    }
    if ops.is_empty() {
        // plethysm by zero keeps constants only; so does its adjoint
        let c = fp.coeff(&Partition::empty());
        return Ok(SymFunc::constant(f.basis(), c));
    }
    let k = ops.len();
    let allowed: Vec<bool> = ops
        .iter()
        .map(|op| !matches!(op, SlotOp::Constant(_)))
        .collect();
    let mut slot_memo: Vec<HashMap<Partition, TermMap>> = vec![HashMap::new(); k];
    let mut constant_series: Option<TermMap> = None;
    let mut acc = TermMap::new();
    for (rho, c) in fp.terms() {
        'assignment: for (slots, w) in distribute(rho, k, &allowed) {
            let mut prod = unit_map();
            for (j, alpha) in slots.iter().enumerate() {
                let opmap = match &ops[j] {
                    SlotOp::Constant(c0) => constant_series
                        .get_or_insert_with(|| {
                            let mut series = TermMap::new();
                            for beta in partitions_up_to(degree_cap) {
                                let mut v = qinv(beta.z());
                                for _ in 0..beta.length() {
                                    v *= c0;
                                }
                                series.insert(beta, v);
                            }
                            series
                        })
                        .clone(),
                    SlotOp::Homogeneous(d, gmap) => slot_memo[j]
                        .entry(alpha.clone())
                        .or_insert_with(|| adjoint_homogeneous_elem(alpha, gmap, *d))
                        .clone(),
                };
                if opmap.is_empty() {
                    continue 'assignment;
                }
                prod = map_mul(&prod, &opmap, Some(degree_cap));
                if prod.is_empty() {
                    continue 'assignment;
                }
            }
            let cw = c * qbig(w);
            for (key, v) in prod {
                add_into(&mut acc, key, &cw * v);
            }
        }
    }
    SymFunc::from_map(Basis::PowerSum, acc).to_basis(f.basis())
}

/// `f[L^perp]` for the total Lyndon symmetric function truncated at
/// `deg f`: splits off the linear slot, which acts as the identity, so
/// `f[L^perp] = sum f^(0) * (f^(1)[L_{>=2}^perp])` over the coproduct.
pub fn lyndon_skew(f: &SymFunc) -> SymFunc {
    reject_stable(f.basis(), "lyndon_skew");
    if f.is_zero() {
        return f.clone();
    }
    let fp = f.to_powersum();
    let d = fp.degree().expect("nonzero");
    if d == 0 {
        return f.clone();
    }
    let lge2 = lyndon_series(d).truncate_below(2);
    let t = coproduct_powersum(&fp);
    let mut memo: HashMap<Partition, TermMap> = HashMap::new();
    let mut acc = TermMap::new();
    for ((alpha, beta), c) in t.terms() {
        let w = memo.entry(beta.clone()).or_insert_with(|| {
            let pb = SymFunc::elem(Basis::PowerSum, beta.clone());
            adjoint_plethysm(&pb, &lge2, beta.size())
                .expect("cap equals degree")
                .term_map()
                .clone()
        });
        for (k, v) in w.iter() {
            add_into(&mut acc, monomial_mul(alpha, k), c * v);
        }
    }
    SymFunc::from_map(Basis::PowerSum, acc)
        .to_basis(f.basis())
        .expect("named basis conversion")
}

// ---------------------------------------------------------------------------
// iterated coproducts (for coassociativity checks)
// ---------------------------------------------------------------------------

pub type TripleTensor = BTreeMap<(Partition, Partition, Partition), BigRational>;

/// Both nestings of the square of a coproduct applied to `f`, in the
/// power-sum basis: `(Delta (x) Id) Delta f` and `(Id (x) Delta) Delta f`.
/// With `star` set, the Kronecker coproduct is used instead.
pub fn coassociativity_pair(f: &SymFunc, star: bool) -> (TripleTensor, TripleTensor) {
    let fp = f.to_powersum();
    let split2 = |rho: &Partition| -> Vec<(Partition, Partition, BigRational)> {
        if star {
            vec![(rho.clone(), rho.clone(), BigRational::one())]
        } else {
            distribute(rho, 2, &[true, true])
                .into_iter()
                .map(|(mut pair, w)| {
                    let b = pair.pop().expect("two slots");
                    let a = pair.pop().expect("two slots");
                    (a, b, qbig(w))
                })
                .collect()
        }
    };
    let mut left_nested = TripleTensor::new();
    let mut right_nested = TripleTensor::new();
    for (rho, c) in fp.terms() {
        for (a, b, w1) in split2(rho) {
            for (x, y, w2) in split2(&a) {
                let key = (x, y, b.clone());
                let v = left_nested.entry(key).or_insert_with(BigRational::zero);
                *v += c * &w1 * &w2;
            }
            for (x, y, w2) in split2(&b) {
                let key = (a.clone(), x, y);
                let v = right_nested.entry(key).or_insert_with(BigRational::zero);
                *v += c * &w1 * &w2;
            }
        }
    }
    left_nested.retain(|_, v| !v.is_zero());
    right_nested.retain(|_, v| !v.is_zero());
    (left_nested, right_nested)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::qi;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    fn pelem(parts: &[usize]) -> SymFunc {
        SymFunc::elem(Basis::PowerSum, p(parts))
    }

    fn selem(parts: &[usize]) -> SymFunc {
        SymFunc::elem(Basis::Schur, p(parts))
    }

    #[test]
    fn coproduct_examples() {
        // primitive generator
        let t = coproduct(&pelem(&[2]));
        assert_eq!(t.coeff(&p(&[2]), &p(&[])), qi(1));
        assert_eq!(t.coeff(&p(&[]), &p(&[2])), qi(1));
        assert_eq!(t.num_terms(), 2);
        // unit
        let t = coproduct(&SymFunc::one(Basis::PowerSum));
        assert_eq!(t.coeff(&p(&[]), &p(&[])), qi(1));
        assert_eq!(t.num_terms(), 1);
        // s_[1,1]: s11 (x) 1 + s1 (x) s1 + 1 (x) s11
        let t = coproduct(&selem(&[1, 1]));
        assert_eq!(t.coeff(&p(&[1, 1]), &p(&[])), qi(1));
        assert_eq!(t.coeff(&p(&[1]), &p(&[1])), qi(1));
        assert_eq!(t.coeff(&p(&[]), &p(&[1, 1])), qi(1));
        assert_eq!(t.num_terms(), 3);
    }

    #[test]
    fn coproduct_matches_binomial_splitting() {
        // Delta is an algebra map on primitives; the perp-based formula must
        // match splitting the monomial multiset with binomial weights
        for size in 0..=6usize {
            for rho in partitions_of(size) {
                let t = coproduct(&SymFunc::elem(Basis::PowerSum, rho.clone()));
                let mut expect = TensorSymFunc::zero(Basis::PowerSum);
                for (pair, w) in distribute(&rho, 2, &[true, true]) {
                    expect.add_term(pair[0].clone(), pair[1].clone(), qbig(w));
                }
                assert_eq!(t, expect, "rho = {rho}");
            }
        }
    }

    #[test]
    fn kronecker_coproduct_examples() {
        let t = kronecker_coproduct(&pelem(&[2, 1]));
        assert_eq!(t.coeff(&p(&[2, 1]), &p(&[2, 1])), qi(1));
        assert_eq!(t.num_terms(), 1);
        // s_2 kron-coproducts to s2(x)s2 + s11(x)s11
        let t = kronecker_coproduct(&selem(&[2]));
        assert_eq!(t.coeff(&p(&[2]), &p(&[2])), qi(1));
        assert_eq!(t.coeff(&p(&[1, 1]), &p(&[1, 1])), qi(1));
        assert_eq!(t.num_terms(), 2);
    }

    #[test]
    fn counit_star_collapses_one_leg() {
        // applying the Kronecker counit to one leg of Delta* returns f
        for f in [
            selem(&[2, 1]),
            &selem(&[3]) - &selem(&[1, 1, 1]).scale(&qi(2)),
        ] {
            let t = kronecker_coproduct(&f);
            let mut back = SymFunc::zero(f.basis());
            for ((l, r), c) in t.terms() {
                let e = counit_star(&SymFunc::elem(f.basis(), l.clone()));
                back.add_scaled(&SymFunc::elem(f.basis(), r.clone()), &(c * e));
            }
            assert_eq!(back, f);
        }
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&selem(&[2, 1])), selem(&[2, 1]).scale(&qi(-1)));
        assert_eq!(antipode(&pelem(&[2, 1])), pelem(&[2, 1]));
        // involution on a mixed element
        let f = &selem(&[3, 1]) - &selem(&[2]).scale(&qi(5));
        assert_eq!(antipode(&antipode(&f)), f);
        // isometry
        let g = &selem(&[2, 1, 1]) + &selem(&[4]);
        assert_eq!(
            antipode(&f).hall_inner(&antipode(&g)),
            f.hall_inner(&g)
        );
    }

    #[test]
    fn perp_examples() {
        assert_eq!(perp_apply(&pelem(&[2]), &pelem(&[2])), SymFunc::constant(Basis::PowerSum, qi(2)));
        assert_eq!(perp_apply(&pelem(&[1]), &selem(&[2])), selem(&[1]));
        assert_eq!(
            perp_apply(&pelem(&[2]), &selem(&[1, 1])),
            SymFunc::constant(Basis::Schur, qi(-1))
        );
    }

    #[test]
    fn perp_is_adjoint_to_multiplication() {
        for fsize in 1..=3usize {
            for f in partitions_of(fsize) {
                let fe = pelem(f.parts());
                for gsize in 0..=4usize {
                    for g in partitions_of(gsize) {
                        let ge = selem(g.parts());
                        for hsize in 0..=4usize {
                            if gsize != hsize + fsize {
                                continue;
                            }
                            for h in partitions_of(hsize) {
                                let he = selem(h.parts());
                                let lhs = perp_apply(&fe, &ge).hall_inner(&he);
                                let rhs = ge.hall_inner(&fe.multiply(&he.to_powersum()));
                                assert_eq!(lhs, rhs, "f={f} g={g} h={h}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(plethysm(&pelem(&[2]), &pelem(&[3])), pelem(&[6]));
        let f = &selem(&[2, 1]) - &selem(&[1]).scale(&qi(3));
        assert_eq!(plethysm(&f, &pelem(&[1])), f);
        // s_2[p_1 + 1] = s_2 + s_1 + 1
        let g = &pelem(&[1]) + &SymFunc::one(Basis::PowerSum);
        let got = plethysm(&selem(&[2]), &g);
        let want = &(&selem(&[2]) + &selem(&[1])) + &SymFunc::one(Basis::Schur);
        assert_eq!(got, want);
    }

    #[test]
    fn plethysm_degree_multiplies() {
        let f = selem(&[2, 1]);
        let g = pelem(&[2, 2]);
        assert_eq!(plethysm(&f, &g).degree(), Some(3 * 4));
    }

    /// Brute-force adjoint by expanding over Schur functions of degree at
    /// most `cap`; the defining adjunction, kept independent of the
    /// production path.
    fn adjoint_by_adjunction(f: &SymFunc, g: &SymFunc, cap: usize) -> SymFunc {
        let mut out = SymFunc::zero(Basis::Schur);
        for lam in partitions_up_to(cap) {
            let h = SymFunc::elem(Basis::Schur, lam.clone());
            let c = f.hall_inner(&plethysm(&h, g));
            out.add_term(lam, c);
        }
        out
    }

    #[test]
    fn adjoint_plethysm_identity_leg() {
        let f = &selem(&[2, 1]) + &selem(&[1]).scale(&qi(2));
        assert_eq!(adjoint_plethysm(&f, &pelem(&[1]), 3).unwrap(), f);
    }

    #[test]
    fn adjoint_plethysm_power_substitution() {
        // the adjoint of p_2-substitution divides indices, with the z-weight
        // ratio as multiplicity: on p_6 it gives 2 p_3 (checked against the
        // defining adjunction below)
        let got = adjoint_plethysm(&pelem(&[6]), &pelem(&[2]), 6).unwrap();
        assert_eq!(got, pelem(&[3]).scale(&qi(2)));
        let oracle = adjoint_by_adjunction(&pelem(&[6]).to_basis(Basis::Schur).unwrap(), &pelem(&[2]), 3);
        assert_eq!(got.to_basis(Basis::Schur).unwrap(), oracle);
    }

    #[test]
    fn adjoint_plethysm_matches_adjunction_oracle() {
        let lge2 = lyndon_series(4).truncate_below(2);
        let h4 = crate::symfunc::h_series(4);
        for fsize in 0..=4usize {
            for lam in partitions_of(fsize) {
                let f = selem(lam.parts());
                for g in [&lge2, &h4] {
                    let got = adjoint_plethysm(&f, g, 4).unwrap().to_basis(Basis::Schur).unwrap();
                    let want = adjoint_by_adjunction(&f, g, 4);
                    assert_eq!(got, want, "lam = {lam}");
                }
            }
        }
    }

    #[test]
    fn adjoint_plethysm_degree_bound() {
        // no terms of degree < 2 in g forces deg(f[g^perp]) <= deg(f)/2
        let g = lyndon_series(6).truncate_below(2);
        for fsize in 1..=6usize {
            for lam in partitions_of(fsize) {
                let f = selem(lam.parts());
                let out = adjoint_plethysm(&f, &g, fsize).unwrap();
                if let Some(d) = out.degree() {
                    assert!(d <= fsize / 2, "lam = {lam}, got degree {d}");
                }
            }
        }
    }

    #[test]
    fn truncation_too_small_is_reported() {
        let f = selem(&[2, 1]);
        assert!(matches!(
            adjoint_plethysm(&f, &pelem(&[1]), 2),
            Err(Error::TruncationTooSmall { degree: 2, needed: 3 })
        ));
    }

    #[test]
    fn lyndon_skew_examples() {
        assert_eq!(
            lyndon_skew(&SymFunc::one(Basis::PowerSum)),
            SymFunc::one(Basis::PowerSum)
        );
        // the defining adjunction fixes p_1[L^perp] = p_1: testing against
        // h of degree <= 1, <p_1[L^perp], 1> = <p_1, 1[L]> = <p_1, 1> = 0
        // and <p_1[L^perp], p_1> = <p_1, L> = 1
        assert_eq!(lyndon_skew(&pelem(&[1])), pelem(&[1]));
    }

    #[test]
    fn lyndon_skew_matches_adjunction() {
        for fsize in 0..=4usize {
            for lam in partitions_of(fsize) {
                let f = selem(lam.parts());
                let got = lyndon_skew(&f);
                let l = lyndon_series(fsize.max(1));
                let want = adjoint_by_adjunction(&f, &l, fsize);
                assert_eq!(got, want, "lam = {lam}");
            }
        }
    }

    #[test]
    fn hopf_pairing_on_elements() {
        for fsize in 0..=5usize {
            for f in partitions_of(fsize) {
                let fe = selem(f.parts());
                let t = coproduct(&fe);
                for gsize in 0..=fsize {
                    for g in partitions_of(gsize) {
                        for h in partitions_of(fsize - gsize) {
                            let ge = selem(g.parts());
                            let he = selem(h.parts());
                            let lhs = fe.hall_inner(&ge.multiply(&he));
                            let rhs = t.pair_inner(&ge, &he);
                            assert_eq!(lhs, rhs, "f={f} g={g} h={h}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coassociativity_small() {
        for f in [
            selem(&[2, 1]),
            &selem(&[3, 1]) - &selem(&[2, 2]).scale(&qi(3)),
            pelem(&[2, 2, 1]),
        ] {
            for star in [false, true] {
                let (l, r) = coassociativity_pair(&f, star);
                assert_eq!(l, r);
            }
        }
    }
}
