//! Integer partitions and Young-diagram combinatorics.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers.
//! It indexes irreducible representations and doubles as a cycle type.
//! Rim-hook (border-strip) removal and addition are implemented on the
//! beta-set (first-column hook lengths), where a size-`r` hook move is a
//! bead shift by `r` and the height is the number of beads jumped over.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; `[]` is the empty
/// partition. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Outcome of adding or removing one rim hook: the resulting shape and the
/// height of the hook (rows spanned minus one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookResult {
    pub shape: Partition,
    pub height: usize,
}

impl Partition {
    /// Builds a partition, rejecting non-positive or increasing part lists.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Like [`Partition::new`] but panics; for literals known to be valid.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("literal partition must be valid")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(r)`; `r` must be positive.
    pub fn single(r: usize) -> Self {
        assert!(r > 0, "single part must be positive");
        Partition { parts: vec![r] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |lambda|, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// l(lambda), the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// m_i(lambda): the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// The transpose diagram: `conjugate()_i = #{j : lambda_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.length()).all(|i| self.part(i) >= other.part(i))
    }

    /// `lambda[n] = (n - |lambda|, lambda)`, defined when the new top row is
    /// at least as long as the old one. `pad([], 0) = []`.
    pub fn pad(&self, n: usize) -> Result<Partition> {
        let size = self.size();
        if n < size || n - size < self.part(0) {
            return Err(Error::UndefinedPadding {
                core: self.to_string(),
                n: n as i64,
            });
        }
        let top = n - size;
        if top == 0 {
            // only reachable for the empty partition
            return Ok(Partition::empty());
        }
        let mut parts = Vec::with_capacity(self.length() + 1);
        parts.push(top);
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// Splits off the first row: `(lambda_1, rest)`. `None` for `[]`.
    /// The rest is the "core" recovered from a padded partition.
    pub fn split_first_row(&self) -> Option<(usize, Partition)> {
        self.parts.split_first().map(|(&top, rest)| {
            (
                top,
                Partition {
                    parts: rest.to_vec(),
                },
            )
        })
    }

    /// z_lambda = prod_i m_i! i^{m_i}; the centralizer order of the cycle type.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0usize;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
            }
            for k in 1..=m {
                acc *= BigInt::from(k);
            }
            for _ in 0..m {
                acc *= BigInt::from(p);
            }
        }
        acc
    }

    /// Beta-set with `rows` beads: `beta_i = lambda_i + (rows - 1 - i)`,
    /// strictly decreasing. Requires `rows >= length()`.
    fn beta_set(&self, rows: usize) -> Vec<usize> {
        debug_assert!(rows >= self.length());
        (0..rows).map(|i| self.part(i) + (rows - 1 - i)).collect()
    }

    fn from_beta_set(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let rows = beta.len();
        let parts: Vec<usize> = beta
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (rows - 1 - i))
            .take_while(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// All shapes obtained by removing one rim hook of size `r`, with
    /// heights, ordered by lexicographically decreasing shape.
    pub fn remove_rim_hooks(&self, r: usize) -> Vec<RimHookResult> {
        assert!(r >= 1, "rim hook size must be positive");
        let rows = self.length();
        let beta = self.beta_set(rows);
        let mut out = Vec::new();
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let height = beta.iter().filter(|&&x| b - r < x && x < b).count();
            let mut moved = beta.clone();
            moved[i] = b - r;
            out.push(RimHookResult {
                shape: Partition::from_beta_set(moved),
                height,
            });
        }
        out.sort_by(|a, b| b.shape.parts.cmp(&a.shape.parts));
        out
    }

    /// All shapes obtained by adding one rim hook of size `r`, with heights,
    /// ordered by lexicographically decreasing shape.
    pub fn add_rim_hooks(&self, r: usize) -> Vec<RimHookResult> {
        assert!(r >= 1, "rim hook size must be positive");
        // r extra zero rows suffice: a size-r hook adds at most r new rows
        let rows = self.length() + r;
        let beta = self.beta_set(rows);
        let mut out = Vec::new();
        for (i, &b) in beta.iter().enumerate() {
            if beta.contains(&(b + r)) {
                continue;
            }
            let height = beta.iter().filter(|&&x| b < x && x < b + r).count();
            let mut moved = beta.clone();
            moved[i] = b + r;
            out.push(RimHookResult {
                shape: Partition::from_beta_set(moved),
                height,
            });
        }
        out.sort_by(|a, b| b.shape.parts.cmp(&a.shape.parts));
        out
    }
}

impl Ord for Partition {
    /// Canonical total order: by size, then reverse-lexicographic, so that
    /// within one size `[n]` comes first and `[1,...,1]` last.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// The canonical text form, e.g. `[6,2,2]`; the empty partition is `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::ParsePartition(s.to_string()))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = max.min(n);
        for k in (1..=top).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every size in `0..=n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}
