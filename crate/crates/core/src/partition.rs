//! Integer partitions, beta-sets (first column hook lengths) and the core and
//! spacing predicates built on them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

/// Strictly decreasing set of positive integers: the first column hook
/// lengths of a partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaSet {
    hooks: Vec<u64>,
}

impl Partition {
    /// Rejects unsorted or nonpositive input instead of normalising it.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a nonpositive part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .expect("partition size overflows u64")
    }

    /// First column hook lengths `λ_i + r - i` where `r` is the number of parts.
    pub fn to_beta(&self) -> BetaSet {
        let r = self.parts.len() as u64;
        BetaSet {
            hooks: self
                .parts
                .iter()
                .zip(1..)
                .map(|(&p, i)| p + r - i)
                .collect(),
        }
    }

    pub fn from_beta(beta: &BetaSet) -> Self {
        let r = beta.hooks.len() as u64;
        Self {
            parts: beta
                .hooks
                .iter()
                .zip(1..)
                .map(|(&h, i)| h - (r - i))
                .collect(),
        }
    }

    /// The conjugate partition, used for explicit hook lengths.
    fn conjugate(&self) -> Vec<u64> {
        let Some(&first) = self.parts.first() else {
            return Vec::new();
        };
        (0..first)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count() as u64)
            .collect()
    }

    /// Iterates over every hook length of the Young diagram.
    pub fn hook_lengths(&self) -> impl Iterator<Item = u64> + '_ {
        let conj = self.conjugate();
        self.parts.iter().enumerate().flat_map(move |(i, &row)| {
            let conj = conj.clone();
            (0..row).map(move |j| {
                let arm = row - j - 1;
                let leg = conj[j as usize] - i as u64 - 1;
                arm + leg + 1
            })
        })
    }

    /// `t`-core test by computing the hook length of every cell.
    pub fn is_t_core_direct(&self, t: u64) -> bool {
        assert!(t >= 1, "t must be positive");
        self.hook_lengths().all(|h| h != t)
    }

    /// `t`-core test on the beta-set: every hook `h >= t` must have `h - t`
    /// in the set as well (0 is never in the set, which rules out multiples
    /// of `t`).
    pub fn is_t_core_beta(&self, t: u64) -> bool {
        assert!(t >= 1, "t must be positive");
        self.to_beta().is_t_closed(t)
    }

    /// Consecutive parts differ by at least `d`.
    pub fn is_d_distinct(&self, d: u64) -> bool {
        self.parts.windows(2).all(|w| w[0] - w[1] >= d)
    }

    /// `λ_1 - λ_2`.
    pub fn initial_gap(&self) -> Result<u64> {
        match self.parts.as_slice() {
            [a, b, ..] => Ok(a - b),
            _ => Err(Error::Undefined),
        }
    }

    /// Largest hook length, `λ_1 + n(λ) - 1` (0 for the empty partition).
    pub fn max_hook(&self) -> u64 {
        match self.parts.first() {
            Some(&first) => first + self.parts.len() as u64 - 1,
            None => 0,
        }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u64) -> Vec<Partition> {
        fn rec(remaining: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(remaining)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl BetaSet {
    pub fn new(hooks: Vec<u64>) -> Result<Self> {
        if hooks.contains(&0) {
            return Err(Error::InvalidBetaSet(format!("{hooks:?} contains 0")));
        }
        if hooks.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBetaSet(format!(
                "{hooks:?} is not strictly decreasing"
            )));
        }
        Ok(Self { hooks })
    }

    /// From positions in any order (duplicates rejected).
    pub fn from_positions(positions: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut hooks: Vec<u64> = positions.into_iter().collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(hooks)
    }

    pub fn hooks(&self) -> &[u64] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn contains(&self, h: u64) -> bool {
        self.hooks.binary_search_by(|x| h.cmp(x)).is_ok()
    }

    /// Size of the encoded partition: `sum(hooks) - r(r-1)/2`.
    pub fn partition_size(&self) -> u64 {
        let r = self.hooks.len() as u64;
        self.hooks.iter().sum::<u64>() - r * r.saturating_sub(1) / 2
    }

    fn is_t_closed(&self, t: u64) -> bool {
        self.hooks
            .iter()
            .filter(|&&h| h >= t)
            .all(|&h| h > t && self.contains(h - t))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::InvalidPartition(format!("{x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, h) in self.hooks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str("}")
    }
}
