//! Exhaustive oracles: abacus families, core partitions into `d`-distinct
//! parts, the Frobenius gap set and all `(s, t)`-core partitions.
//!
//! Every list returned here is in the same deterministic order: by number of
//! parts (beads), then lexicographically on the ascending position list.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::abacus::{Abacus, Params};
use crate::error::{Error, Result};
use crate::partition::{BetaSet, Partition};
use crate::poly::QPolynomial;

pub const DEFAULT_BUDGET: usize = 40;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "COREAB_BUDGET";

/// Largest gap set an exhaustive downset enumeration may walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_gaps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_gaps: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(max_gaps: usize) -> Result<Self> {
        if max_gaps == 0 {
            return Err(Error::InvalidParameter("budget must be >= 1".into()));
        }
        Ok(Self { max_gaps })
    }

    /// [`BUDGET_ENV`] if set, the default otherwise.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => {
                let n = v.trim().parse().map_err(|_| {
                    Error::InvalidParameter(format!("{BUDGET_ENV}={v:?} is not a positive integer"))
                })?;
                Self::new(n)
            }
            Err(_) => Ok(Self::default()),
        }
    }

    fn check(&self, needed: usize) -> Result<()> {
        if needed > self.max_gaps {
            Err(Error::BudgetExceeded {
                needed,
                budget: self.max_gaps,
            })
        } else {
            Ok(())
        }
    }
}

/// Number of beads first, then lexicographic on ascending positions.
pub fn position_order(a: &[u64], b: &[u64]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// [`position_order`] applied to beta-sets.
pub fn partition_order(a: &Partition, b: &Partition) -> Ordering {
    let asc = |p: &Partition| {
        let mut h = p.to_beta().hooks().to_vec();
        h.reverse();
        h
    };
    position_order(&asc(a), &asc(b))
}

/// Walks every `s`-core abacus with spacing `d` and positions below `limit`.
///
/// Columns are filled left to right, each with a bead prefix of some height;
/// a new bead is only checked against beads already placed, which covers
/// every pair exactly once. The visitor sees positions in column-major order.
fn visit_abaci(s: u64, limit: i64, d: u64, visit: &mut impl FnMut(&[u64])) {
    let size = limit.max(0) as u64;
    let heights: Vec<u64> = (0..s)
        .map(|c| {
            if c == 0 || c >= size {
                0
            } else {
                (size - 1 - c) / s + 1
            }
        })
        .collect();
    let mut occupied = vec![false; size as usize];
    let mut beads = Vec::new();

    fn conflicts(occupied: &[bool], p: u64, d: u64) -> bool {
        let lo = p.saturating_sub(d) as usize;
        let hi = ((p + d) as usize).min(occupied.len() - 1);
        (lo..=hi).any(|q| q != p as usize && occupied[q])
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        col: u64,
        s: u64,
        d: u64,
        heights: &[u64],
        occupied: &mut [bool],
        beads: &mut Vec<u64>,
        visit: &mut impl FnMut(&[u64]),
    ) {
        if col == s {
            visit(beads);
            return;
        }
        rec(col + 1, s, d, heights, occupied, beads, visit);
        let mark = beads.len();
        for k in 0..heights[col as usize] {
            let p = col + k * s;
            if conflicts(occupied, p, d) {
                break;
            }
            occupied[p as usize] = true;
            beads.push(p);
            rec(col + 1, s, d, heights, occupied, beads, visit);
        }
        for &p in &beads[mark..] {
            occupied[p as usize] = false;
        }
        beads.truncate(mark);
    }

    rec(0, s, d, &heights, &mut occupied, &mut beads, visit);
}

/// All members of the abacus family for `params`, including the empty abacus.
pub fn enumerate_abaci(params: &Params) -> Result<Vec<Abacus>> {
    if params.s < 1 {
        return Err(Error::InvalidParameter(format!(
            "s must be >= 1, got {}",
            params.s
        )));
    }
    let s = params.s as u64;
    let mut found: Vec<Vec<u64>> = Vec::new();
    visit_abaci(s, params.limit(), params.d as u64, &mut |beads| {
        let mut b = beads.to_vec();
        b.sort_unstable();
        found.push(b);
    });
    found.sort_by(|a, b| position_order(a, b));
    Ok(found
        .into_iter()
        .map(|b| Abacus::new(s, b).expect("enumerated beads are distinct"))
        .collect())
}

/// Bead-count generating polynomial of the abacus family with `s` columns,
/// positions below `limit` and spacing `d`, by exhaustive enumeration.
///
/// Follows the conventions that the family is empty (polynomial 0) for
/// `s < 0` and holds only the empty abacus (polynomial 1) for `s = 0`.
pub fn bead_poly_bruteforce(s: i64, limit: i64, d: i64) -> QPolynomial {
    assert!(d >= 1, "spacing must be >= 1");
    match s.cmp(&0) {
        Ordering::Less => return QPolynomial::zero(),
        Ordering::Equal => return QPolynomial::one(),
        Ordering::Greater => {}
    }
    let mut counts: Vec<u64> = Vec::new();
    visit_abaci(s as u64, limit, d as u64, &mut |beads| {
        let n = beads.len();
        if counts.len() <= n {
            counts.resize(n + 1, 0);
        }
        counts[n] += 1;
    });
    QPolynomial::from_counts(&counts)
}

pub fn abacus_poly_bruteforce(params: &Params) -> QPolynomial {
    bead_poly_bruteforce(params.s, params.limit(), params.d)
}

fn check_core_params(s: i64, t: i64) -> Result<(u64, u64)> {
    if s < 1 || t < 1 {
        return Err(Error::InvalidParameter(format!(
            "core parameters must be positive, got ({s}, {t})"
        )));
    }
    if s.gcd(&t) != 1 {
        return Err(Error::NonCoprime { s, t });
    }
    Ok((s as u64, t as u64))
}

/// Positive integers that are not nonnegative combinations of `s` and `t`,
/// ascending. Empty when either parameter is 1.
pub fn frobenius_gaps(s: i64, t: i64) -> Result<Vec<u64>> {
    let (s, t) = check_core_params(s, t)?;
    if s == 1 || t == 1 {
        return Ok(Vec::new());
    }
    let frobenius = s * t - s - t;
    let mut representable = vec![false; frobenius as usize + 1];
    representable[0] = true;
    for n in 1..=frobenius {
        representable[n as usize] = (n >= s && representable[(n - s) as usize])
            || (n >= t && representable[(n - t) as usize]);
    }
    Ok((1..=frobenius)
        .filter(|&n| !representable[n as usize])
        .collect())
}

/// Walks every subset of the gap set closed under subtracting `s` and `t`
/// whose elements differ by more than `min_gap`. Elements are decided in
/// increasing order, so each partial choice is final for smaller values and
/// every node of the search extends to at least one visited subset.
fn visit_closed_subsets(
    gaps: &[u64],
    s: u64,
    t: u64,
    min_gap: u64,
    visit: &mut impl FnMut(&[u64]),
) {
    let top = gaps.last().map_or(0, |&g| g as usize);
    let mut walk = ClosedSubsetWalk {
        gaps,
        s,
        t,
        min_gap,
        chosen: vec![false; top + 1],
        stack: Vec::new(),
    };
    walk.rec(0, visit);
}

struct ClosedSubsetWalk<'a> {
    gaps: &'a [u64],
    s: u64,
    t: u64,
    min_gap: u64,
    chosen: Vec<bool>,
    stack: Vec<u64>,
}

impl ClosedSubsetWalk<'_> {
    fn rec(&mut self, i: usize, visit: &mut impl FnMut(&[u64])) {
        let Some(&h) = self.gaps.get(i) else {
            visit(&self.stack);
            return;
        };
        self.rec(i + 1, visit);
        let (s, t) = (self.s, self.t);
        let closed =
            (h < s || self.chosen[(h - s) as usize]) && (h < t || self.chosen[(h - t) as usize]);
        let spaced = self
            .stack
            .last()
            .is_none_or(|&last| h - last > self.min_gap);
        if closed && spaced {
            self.chosen[h as usize] = true;
            self.stack.push(h);
            self.rec(i + 1, visit);
            self.stack.pop();
            self.chosen[h as usize] = false;
        }
    }
}

fn closed_subsets_as_partitions(gaps: &[u64], s: u64, t: u64, min_gap: u64) -> Vec<Partition> {
    let mut sets: Vec<Vec<u64>> = Vec::new();
    visit_closed_subsets(gaps, s, t, min_gap, &mut |set| sets.push(set.to_vec()));
    sets.sort_by(|a, b| position_order(a, b));
    sets.into_iter()
        .map(|set| {
            Partition::from_beta(&BetaSet::from_positions(set).expect("gap elements are distinct"))
        })
        .collect()
}

/// All `(s, t)`-core partitions into `d`-distinct parts.
///
/// Each result is re-checked with the explicit hook-length and distinctness
/// predicates before it is returned.
pub fn enumerate_core_distinct(s: i64, t: i64, d: i64) -> Result<Vec<Partition>> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be >= 1, got {d}")));
    }
    let (su, tu) = check_core_params(s, t)?;
    let gaps = frobenius_gaps(s, t)?;
    let found = closed_subsets_as_partitions(&gaps, su, tu, d as u64);
    for p in &found {
        assert!(
            p.is_t_core_direct(su) && p.is_t_core_direct(tu) && p.is_d_distinct(d as u64),
            "{p} failed the direct ({s}, {t})-core / {d}-distinct check"
        );
    }
    Ok(found)
}

/// Part-count generating polynomial of `(s, t)`-core partitions into
/// `d`-distinct parts, by exhaustive enumeration.
pub fn core_parts_poly_bruteforce(s: i64, t: i64, d: i64) -> Result<QPolynomial> {
    Ok(parts_poly(&enumerate_core_distinct(s, t, d)?))
}

/// `sum q^{n(λ)}` over a list of partitions.
pub fn parts_poly(partitions: &[Partition]) -> QPolynomial {
    let mut counts: Vec<u64> = Vec::new();
    for p in partitions {
        let n = p.num_parts();
        if counts.len() <= n {
            counts.resize(n + 1, 0);
        }
        counts[n] += 1;
    }
    QPolynomial::from_counts(&counts)
}

/// All `(s, t)`-core partitions, without any distinctness restriction.
pub fn enumerate_all_core(s: i64, t: i64, budget: Budget) -> Result<Vec<Partition>> {
    let (su, tu) = check_core_params(s, t)?;
    let gaps = frobenius_gaps(s, t)?;
    budget.check(gaps.len())?;
    let found = closed_subsets_as_partitions(&gaps, su, tu, 0);
    for p in &found {
        assert!(
            p.is_t_core_direct(su) && p.is_t_core_direct(tu),
            "{p} failed the direct ({s}, {t})-core check"
        );
    }
    Ok(found)
}

/// Whether the abacus family for `params` is known to be in bijection with
/// `(s, ms + r)`-core partitions into `d`-distinct parts.
pub fn correspondence_holds(params: &Params) -> bool {
    (1..=params.d).contains(&params.r) || params.r == -1
}

/// The partitions `(s, ms + r)`-core into `d`-distinct parts.
///
/// Coprime parameters use the downset oracle. Otherwise the family is only
/// finite through the abacus correspondence, so it is read off the abacus
/// family when [`correspondence_holds`], and rejected as [`Error::NonCoprime`]
/// when it does not.
pub fn enumerate_family(params: &Params) -> Result<Vec<Partition>> {
    let (s, t) = (params.s, params.t());
    if s < 1 {
        return Err(Error::InvalidParameter(format!("s must be >= 1, got {s}")));
    }
    if s == 1 {
        // Only the empty partition is 1-core.
        return Ok(vec![Partition::empty()]);
    }
    if t < 1 {
        return Err(Error::InvalidParameter(format!(
            "m*s + r must be >= 1, got {t}"
        )));
    }
    if s.gcd(&t) == 1 {
        return enumerate_core_distinct(s, t, params.d);
    }
    if !correspondence_holds(params) {
        return Err(Error::NonCoprime { s, t });
    }
    let mut found: Vec<Partition> = enumerate_abaci(params)?
        .iter()
        .map(Abacus::to_partition)
        .collect();
    found.sort_by(partition_order);
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: i64, m: i64, r: i64, d: i64) -> Params {
        Params::new(s, m, r, d).unwrap()
    }

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.iter().copied())
    }

    /// Subset oracle: every subset of `{1, ..., limit - 1}` tested against
    /// the defining predicates.
    fn family_by_subsets(s: u64, limit: i64, d: u64) -> Vec<Vec<u64>> {
        let n = (limit - 1).max(0) as u32;
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            let beads: Vec<u64> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i as u64 + 1)
                .collect();
            let a = Abacus::new(s, beads.clone()).unwrap();
            if a.is_core() && a.has_spacing(d) {
                out.push(beads);
            }
        }
        out.sort_by(|a, b| position_order(a, b));
        out
    }

    #[test]
    fn abacus_enumeration_matches_subset_oracle() {
        for s in 1..=6u64 {
            for m in 1..=3 {
                for r in -(s as i64)..=(s as i64) {
                    for d in 1..=3 {
                        let p = params(s as i64, m, r, d);
                        if p.limit() > 16 {
                            continue;
                        }
                        let got: Vec<Vec<u64>> = enumerate_abaci(&p)
                            .unwrap()
                            .into_iter()
                            .map(|a| a.beads().to_vec())
                            .collect();
                        assert_eq!(got, family_by_subsets(s, p.limit(), d as u64), "{p}");
                    }
                }
            }
        }
    }

    #[test]
    fn abacus_enumeration_examples() {
        let fam = enumerate_abaci(&params(4, 3, -1, 1)).unwrap();
        assert_eq!(fam.len(), 15);
        assert!(fam.iter().all(|a| a.in_family(&params(4, 3, -1, 1))));
        assert_eq!(
            enumerate_abaci(&params(1, 5, 0, 2)).unwrap(),
            vec![Abacus::empty(1)]
        );
        assert_eq!(enumerate_abaci(&params(5, 1, 1, 1)).unwrap().len(), 8);
        assert!(enumerate_abaci(&params(0, 1, 1, 1)).is_err());
    }

    #[test]
    fn bruteforce_polynomials() {
        assert_eq!(
            abacus_poly_bruteforce(&params(4, 3, -1, 1)),
            poly(&[1, 3, 4, 4, 2, 1])
        );
        assert_eq!(
            abacus_poly_bruteforce(&params(2, 3, 1, 1)),
            poly(&[1, 1, 1, 1])
        );
        assert_eq!(bead_poly_bruteforce(0, 5, 1), QPolynomial::one());
        assert_eq!(bead_poly_bruteforce(-1, 5, 1), QPolynomial::zero());
        assert_eq!(bead_poly_bruteforce(4, -3, 1), QPolynomial::one());
    }

    #[test]
    fn gap_sets() {
        assert_eq!(frobenius_gaps(4, 5).unwrap(), vec![1, 2, 3, 6, 7, 11]);
        assert_eq!(frobenius_gaps(4, 11).unwrap().len(), 15);
        assert_eq!(frobenius_gaps(2, 3).unwrap(), vec![1]);
        assert_eq!(frobenius_gaps(4, 6), Err(Error::NonCoprime { s: 4, t: 6 }));
        assert!(frobenius_gaps(1, 7).unwrap().is_empty());
        for s in 2..12i64 {
            for t in 2..12i64 {
                if s.gcd(&t) == 1 {
                    let g = frobenius_gaps(s, t).unwrap();
                    assert_eq!(g.len() as i64, (s - 1) * (t - 1) / 2);
                    assert_eq!(*g.last().unwrap() as i64, s * t - s - t);
                }
            }
        }
    }

    #[test]
    fn core_distinct_examples() {
        let listed: Vec<Partition> = [
            "()",
            "1",
            "2",
            "3",
            "2,1",
            "4,1",
            "5,2",
            "6,3",
            "3,2,1",
            "5,2,1",
            "7,4,1",
            "8,5,2",
            "4,3,2,1",
            "6,3,2,1",
            "5,4,3,2,1",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        assert_eq!(enumerate_core_distinct(4, 11, 1).unwrap(), listed);

        let small: Vec<Partition> = ["()", "1", "2", "3,1"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(enumerate_core_distinct(3, 5, 1).unwrap(), small);
        assert_eq!(enumerate_core_distinct(6, 7, 1).unwrap().len(), 13);
        assert_eq!(
            enumerate_core_distinct(4, 6, 1),
            Err(Error::NonCoprime { s: 4, t: 6 })
        );
    }

    #[test]
    fn core_parts_polynomials() {
        assert_eq!(
            core_parts_poly_bruteforce(4, 11, 1).unwrap(),
            poly(&[1, 3, 4, 4, 2, 1])
        );
        assert_eq!(
            core_parts_poly_bruteforce(4, 7, 1).unwrap(),
            poly(&[1, 3, 3, 1])
        );
        assert_eq!(core_parts_poly_bruteforce(2, 3, 1).unwrap(), poly(&[1, 1]));
    }

    #[test]
    fn all_core_counts() {
        let b = Budget::default();
        assert_eq!(enumerate_all_core(4, 5, b).unwrap().len(), 14);
        assert_eq!(enumerate_all_core(2, 3, b).unwrap().len(), 2);
        assert_eq!(enumerate_all_core(5, 6, b).unwrap().len(), 42);
        assert_eq!(
            enumerate_all_core(9, 13, b),
            Err(Error::BudgetExceeded {
                needed: 48,
                budget: 40
            })
        );
        assert!(enumerate_all_core(9, 13, Budget::new(48).unwrap()).is_ok());
        assert!(Budget::new(0).is_err());
    }

    #[test]
    fn all_core_matches_filtered_partitions() {
        // Every (s, t)-core has size at most (s^2 - 1)(t^2 - 1)/24, so the
        // partitions up to that size contain the whole family.
        for (s, t) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)] {
            let bound = (s * s - 1) * (t * t - 1) / 24;
            let mut expected: Vec<Partition> = (0..=bound)
                .flat_map(Partition::all_of_size)
                .filter(|p| p.is_t_core_direct(s) && p.is_t_core_direct(t))
                .collect();
            expected.sort_by(partition_order);
            assert_eq!(
                enumerate_all_core(s as i64, t as i64, Budget::default()).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn family_enumeration_handles_non_coprime_in_correspondence_range() {
        // (4, 6)-core partitions into 2-distinct parts: finite by the
        // maximum-hook bound.
        let fam = enumerate_family(&params(4, 1, 2, 2)).unwrap();
        let bound = 6; // hooks < 6
        let mut expected: Vec<Partition> = (0..=15)
            .flat_map(Partition::all_of_size)
            .filter(|p| p.is_t_core_direct(4) && p.is_t_core_direct(6) && p.is_d_distinct(2))
            .collect();
        expected.sort_by(partition_order);
        assert!(expected.iter().all(|p| p.max_hook() < bound));
        assert_eq!(fam, expected);
        assert_eq!(
            enumerate_family(&params(4, 1, 4, 1)),
            Err(Error::NonCoprime { s: 4, t: 8 })
        );
        assert_eq!(
            enumerate_family(&params(1, 3, -1, 1)).unwrap(),
            vec![Partition::empty()]
        );
    }
}
