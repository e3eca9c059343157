//! Compositions of `s` versus `(s, 2s - 1)`-core partitions into distinct
//! parts, and the maximal-initial-gap correspondence.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::abacus::{Abacus, Params};
use crate::enumerate::{correspondence_holds, enumerate_family};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// All `2^(n-1)` compositions of `n >= 1`, ordered by the binary word of
    /// cut points.
    pub fn all_of(n: u64) -> Vec<Composition> {
        assert!(
            (1..64).contains(&n),
            "compositions are listed for 1 <= n < 64"
        );
        (0..1u64 << (n - 1))
            .map(|cuts| {
                let mut parts = Vec::new();
                let mut run = 1;
                for i in 0..n - 1 {
                    if cuts >> i & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                Composition { parts }
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::InvalidComposition(format!("{x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// The family `(s, 2s - 1)`-core into distinct parts, as abacus parameters.
fn distinct_family(s: u64) -> Result<Params> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be >= 1".into()));
    }
    Params::new(s as i64, 2, -1, 1)
}

fn encode(a: &Abacus) -> Composition {
    let s = a.columns();
    let mut heights = vec![0u8; s as usize];
    for &p in a.beads() {
        heights[(p % s) as usize] += 1;
    }
    let empty_after =
        |c: u64| -> u64 { (c + 1..s).take_while(|&x| heights[x as usize] == 0).count() as u64 };
    let mut parts = vec![a.beads().first().map_or(s, |&p| p % s)];
    for &p in a.beads() {
        let c = p % s;
        parts.push(match (heights[c as usize], p < s) {
            (1, _) => 1 + empty_after(c),
            (_, true) => 1,
            (_, false) => empty_after(c),
        });
    }
    Composition { parts }
}

/// Reads `p` on the `s`-abacus: the first part counts the empty columns
/// before the first bead, then each bead in position order contributes one
/// part.
pub fn partition_to_composition(p: &Partition, s: u64) -> Result<Composition> {
    let family = distinct_family(s)?;
    let a = Abacus::from_partition(p, s);
    if !a.in_family(&family) {
        return Err(Error::NotInFamily(format!(
            "{p} is not a ({s}, {})-core into distinct parts",
            2 * s - 1
        )));
    }
    Ok(encode(&a))
}

/// Rebuilds the abacus when the first `lower` bead parts belong to row 0.
fn decode_with_split(c: &Composition, s: u64, lower: usize) -> Option<Abacus> {
    let (first, beads) = c.parts.split_first()?;
    let (row0, row1) = beads.split_at(lower);
    let mut upper = row1.iter();
    let mut positions = Vec::new();
    let mut col = *first;
    for &x in row0 {
        if col >= s {
            return None;
        }
        positions.push(col);
        col += if x == 1 && col + 1 < s {
            positions.push(s + col);
            1 + upper.next()?
        } else {
            x
        };
    }
    if col != s || upper.next().is_some() {
        return None;
    }
    Abacus::new(s, positions).ok()
}

/// Inverse of [`partition_to_composition`].
pub fn composition_to_partition(c: &Composition, s: u64) -> Result<Partition> {
    if c.is_empty() || c.size() != s {
        return Err(Error::NotACompositionOf {
            s: s as i64,
            detail: format!("{c} has size {}", c.size()),
        });
    }
    let family = distinct_family(s)?;
    (0..c.len())
        .filter_map(|lower| decode_with_split(c, s, lower))
        .find(|a| a.in_family(&family) && encode(a) == *c)
        .map(|a| a.to_partition())
        .ok_or_else(|| Error::NotACompositionOf {
            s: s as i64,
            detail: format!("no preimage for {c}"),
        })
}

fn has_maximal_gap(p: &Partition, s: i64) -> bool {
    p.is_empty() || p.initial_gap().is_ok_and(|g| g as i64 == s - 1)
}

fn in_core_family(p: &Partition, params: &Params) -> bool {
    let (s, t, d) = (params.s, params.t(), params.d);
    if s < 1 || t < 1 {
        return false;
    }
    if s.gcd(&t) == 1 || s == 1 {
        p.is_t_core_direct(s as u64) && p.is_t_core_direct(t as u64) && p.is_d_distinct(d as u64)
    } else {
        Abacus::from_partition(p, s as u64).in_family(params)
    }
}

/// The empty partition together with the members of the family whose
/// second part exists and lies exactly `s - 1` below the first.
pub fn maximal_gap_members(params: &Params) -> Result<Vec<Partition>> {
    Ok(enumerate_family(params)?
        .into_iter()
        .filter(|p| has_maximal_gap(p, params.s))
        .collect())
}

/// Drops the first part of a maximal-gap member, landing in the family with
/// `m` lowered by one. The map is onto that family only when `s > d`; for
/// `s <= d` a gap of `s - 1` is too small for `d`-distinct parts.
pub fn gap_correspondence(p: &Partition, params: &Params) -> Result<Partition> {
    if !correspondence_holds(params) {
        return Err(Error::CorrespondenceNotGuaranteed {
            r: params.r,
            d: params.d,
        });
    }
    if !in_core_family(p, params) || !has_maximal_gap(p, params.s) {
        return Err(Error::NotInFamily(format!(
            "{p} has no maximal initial gap in {params}"
        )));
    }
    Partition::new(p.parts().iter().skip(1).copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn params(s: i64, m: i64, r: i64, d: i64) -> Params {
        Params::new(s, m, r, d).unwrap()
    }

    fn binom(n: u64, k: u64) -> usize {
        num_integer::binomial(n, k) as usize
    }

    #[test]
    fn forward_examples() {
        assert_eq!(
            partition_to_composition(&Partition::empty(), 3),
            Ok(comp("(3)"))
        );
        assert_eq!(partition_to_composition(&part("1"), 3), Ok(comp("(1,2)")));
        assert_eq!(
            partition_to_composition(&part("3,1"), 3),
            Ok(comp("(1,1,1)"))
        );
        assert_eq!(partition_to_composition(&part("2"), 3), Ok(comp("(2,1)")));
        assert!(matches!(
            partition_to_composition(&part("4,1"), 3),
            Err(Error::NotInFamily(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            composition_to_partition(&comp("(3)"), 3),
            Ok(Partition::empty())
        );
        assert_eq!(composition_to_partition(&comp("(2,1)"), 3), Ok(part("2")));
        assert_eq!(
            composition_to_partition(&comp("(1,1,1)"), 3),
            Ok(part("3,1"))
        );
        assert!(matches!(
            composition_to_partition(&comp("(1,1)"), 3),
            Err(Error::NotACompositionOf { s: 3, .. })
        ));
    }

    #[test]
    fn composition_parsing() {
        assert_eq!(comp("(1,2)").parts(), &[1, 2]);
        assert_eq!(comp("4").parts(), &[4]);
        assert!("(1,0)".parse::<Composition>().is_err());
        assert_eq!(comp("(1,2)").to_string(), "(1,2)");
        assert_eq!(Composition::all_of(4).len(), 8);
    }

    #[test]
    fn bijection_is_exhaustive() {
        for s in 1..=10u64 {
            let family = enumerate_family(&distinct_family(s).unwrap()).unwrap();
            assert_eq!(family.len(), 1 << (s - 1));
            let mut images = BTreeSet::new();
            for p in &family {
                let c = partition_to_composition(p, s).unwrap();
                assert_eq!(c.size(), s);
                assert_eq!(c.len(), p.num_parts() + 1);
                assert_eq!(composition_to_partition(&c, s).as_ref(), Ok(p));
                images.insert(c);
            }
            assert_eq!(images.len(), family.len());
            for c in Composition::all_of(s) {
                let p = composition_to_partition(&c, s).unwrap();
                assert_eq!(partition_to_composition(&p, s), Ok(c));
            }
            for k in 1..=s {
                let with_k = images.iter().filter(|c| c.len() as u64 == k).count();
                assert_eq!(with_k, binom(s - 1, k - 1));
            }
        }
    }

    #[test]
    fn maximal_gap_examples() {
        let g = maximal_gap_members(&params(4, 3, -1, 1)).unwrap();
        assert!(g.contains(&Partition::empty()));
        for p in ["5,2", "6,3", "8,5,2"] {
            assert!(g.contains(&part(p)), "{p}");
        }
        assert!(!g.contains(&part("3")));
        assert_eq!(
            gap_correspondence(&part("8,5,2"), &params(4, 3, -1, 1)),
            Ok(part("5,2"))
        );
        assert_eq!(
            gap_correspondence(&part("6,3"), &params(4, 3, -1, 1)),
            Ok(part("3"))
        );
        assert_eq!(
            gap_correspondence(&Partition::empty(), &params(4, 3, -1, 1)),
            Ok(Partition::empty())
        );
        assert!(matches!(
            gap_correspondence(&part("5,1"), &params(4, 3, -1, 1)),
            Err(Error::NotInFamily(_))
        ));
        assert_eq!(
            gap_correspondence(&Partition::empty(), &params(4, 3, -2, 1)),
            Err(Error::CorrespondenceNotGuaranteed { r: -2, d: 1 })
        );
    }

    #[test]
    fn maximal_gap_counts_match_smaller_family() {
        for d in 1..=3 {
            for m in 2..=3 {
                for s in d + 1..=10 {
                    for r in (-1..=d).filter(|&r| r != 0) {
                        let big = params(s, m, r, d);
                        let small = params(s, m - 1, r, d);
                        let g = maximal_gap_members(&big).unwrap();
                        let target: BTreeSet<Partition> =
                            enumerate_family(&small).unwrap().into_iter().collect();
                        let image: BTreeSet<Partition> = g
                            .iter()
                            .map(|p| gap_correspondence(p, &big).unwrap())
                            .collect();
                        assert_eq!(image.len(), g.len(), "{big}");
                        assert_eq!(image, target, "{big}");
                    }
                }
            }
        }
    }

    #[test]
    fn maximal_gap_needs_more_columns_than_spacing() {
        // A gap of s - 1 < d is not d-distinct, so only the empty partition
        // survives while the smaller family still has (1).
        let g = maximal_gap_members(&params(2, 2, 1, 2)).unwrap();
        assert_eq!(g, vec![Partition::empty()]);
        assert_eq!(enumerate_family(&params(2, 1, 1, 2)).unwrap().len(), 2);
    }

    #[test]
    fn maximal_gap_parts_are_binomial() {
        for s in 2..=10i64 {
            let g = maximal_gap_members(&params(s, 3, -1, 1)).unwrap();
            for k in 2..=s as u64 {
                let with_k = g.iter().filter(|p| p.num_parts() as u64 == k).count();
                assert_eq!(with_k, binom(s as u64 - 1, k - 1), "s={s} k={k}");
            }
        }
    }
}
