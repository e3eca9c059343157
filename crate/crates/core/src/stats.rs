//! Extremal and average statistics: maximum number of parts, sizes of
//! `(s, t)`-cores, and factorial moments of the number of parts.
//!
//! Averages are exact rationals throughout.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::abacus::Params;
use crate::enumerate::{enumerate_all_core, enumerate_core_distinct, frobenius_gaps, Budget};
use crate::error::{Error, Result};
use crate::recurrence::{abacus_poly, core_poly, AbacusPolys};

/// Fibonacci numbers with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Maximum number of parts of `(s, ms + r)`-core partitions into
/// `d`-distinct parts, for `1 <= r <= d` with `s > 1`, or `r = -1` with
/// `s > 2`.
pub fn max_parts_formula(s: i64, m: i64, r: i64, d: i64) -> Result<i64> {
    if m < 1 || d < 1 {
        return Err(Error::InvalidParameter(format!(
            "need m, d >= 1, got m = {m}, d = {d}"
        )));
    }
    let base = s / (d + 1) * m;
    let residue = s % (d + 1);
    if (1..=d).contains(&r) && s > 1 {
        let extra = if r == 1 && residue <= 1 { 0 } else { 1 };
        Ok(base + extra)
    } else if r == -1 && s > 2 {
        let extra = if d == 1 && s % 2 == 0 {
            -1
        } else if residue <= 2 {
            0
        } else {
            1
        };
        Ok(base + extra)
    } else {
        Err(Error::OutOfRange(format!(
            "max-parts formula needs 1 <= r <= d with s > 1, or r = -1 with s > 2 (s = {s}, r = {r}, d = {d})"
        )))
    }
}

/// Maximum number of beads of an abacus in `𝒜^d_{s,m,r}`, for `s >= r >= 1`.
pub fn max_beads_formula(s: i64, m: i64, r: i64, d: i64) -> Result<i64> {
    if m < 1 || d < 1 {
        return Err(Error::InvalidParameter(format!(
            "need m, d >= 1, got m = {m}, d = {d}"
        )));
    }
    if !(r >= 1 && s >= r) {
        return Err(Error::OutOfRange(format!(
            "max-beads formula needs s >= r >= 1 (s = {s}, r = {r})"
        )));
    }
    let base = s / (d + 1) * m;
    if r == 1 {
        Ok(base + if s % (d + 1) <= 1 { 0 } else { 1 })
    } else {
        Ok(base + (r - 2) / (d + 1) + 1)
    }
}

/// `(s - 1)(t - 1) / 2`, the maximum number of parts of an `(s, t)`-core.
pub fn max_parts_unrestricted(s: i64, t: i64) -> Result<u64> {
    if s <= 1 || t <= 1 {
        return Err(Error::InvalidParameter(format!(
            "need s, t > 1, got ({s}, {t})"
        )));
    }
    if s.gcd(&t) != 1 {
        return Err(Error::NonCoprime { s, t });
    }
    Ok(((s - 1) * (t - 1) / 2) as u64)
}

/// Which polynomial a moment report is computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyMode {
    /// Core partitions; only offsets with the abacus correspondence.
    Core,
    /// The abacus family, for any offset.
    Abacus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    pub params: Params,
    /// `n_s = f(1)`.
    pub count: BigInt,
    /// `p_s = f'(1)`.
    pub total_parts: BigInt,
    /// `p_s / n_s`.
    pub average: BigRational,
    /// `f^(k)(1)` for `k = 1..=K`.
    pub factorial_moments: Vec<BigInt>,
}

pub fn moment_report(params: &Params, moments: usize, mode: FamilyMode) -> Result<MomentReport> {
    let f = match mode {
        FamilyMode::Core => core_poly(params.s, params.m, params.r, params.d)?,
        FamilyMode::Abacus => abacus_poly(params),
    };
    let count = f.eval_at_one();
    if count.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "{params}: empty family has no average"
        )));
    }
    let total_parts = f.factorial_moment(1);
    Ok(MomentReport {
        params: *params,
        average: BigRational::new(total_parts.clone(), count.clone()),
        factorial_moments: (1..=moments).map(|k| f.factorial_moment(k)).collect(),
        count,
        total_parts,
    })
}

/// Whether the Fibonacci-like recurrence in `s` is proved for the core
/// family `(s, ms + r)` with `d`-distinct parts.
pub fn core_recurrence_applies(p: &Params) -> bool {
    if p.m < 1 || p.d < 1 {
        return false;
    }
    if (1..=p.d).contains(&p.r) {
        p.s > p.d + 1
    } else if p.r == -1 {
        if p.d == 1 {
            p.s > 2
        } else {
            p.s > 2 * p.d + 1
        }
    } else {
        false
    }
}

/// Checks `p_s = p_{s-1} + m p_{s-d-1} + C(m+1, 2) n_{s-d-1}` where the core
/// recurrence is proved; `None` outside that range.
pub fn check_parts_recurrence(p: &Params) -> Option<bool> {
    if !core_recurrence_applies(p) {
        return None;
    }
    let mut polys = AbacusPolys::new(p.d);
    let at = |polys: &mut AbacusPolys, s: i64| {
        let f = polys.get(s, p.m, p.r);
        (f.eval_at_one(), f.factorial_moment(1))
    };
    let (_, p_s) = at(&mut polys, p.s);
    let (_, p_prev) = at(&mut polys, p.s - 1);
    let (n_back, p_back) = at(&mut polys, p.s - p.d - 1);
    let m = BigInt::from(p.m);
    let pairs = binomial(BigInt::from(p.m + 1), BigInt::from(2));
    Some(p_s == p_prev + &m * p_back + pairs * n_back)
}

/// `(sum_{i+j=s} F_i F_j, (2s F_{s+1} - (s+1) F_s) / 5)`: two routes to the
/// total number of parts of `(s, s+1)`-core partitions into distinct parts.
/// The closed form is only an integer when the identity holds; it is
/// returned as the floor of the quotient.
pub fn fib_parts_identity(s: u64) -> (BigInt, BigInt) {
    let convolution: BigInt = (1..s).map(|i| fibonacci(i) * fibonacci(s - i)).sum();
    let numerator = BigInt::from(2 * s) * fibonacci(s + 1) - BigInt::from(s + 1) * fibonacci(s);
    (convolution, numerator.div_floor(&BigInt::from(5)))
}

/// `sum_{i+j+k=n, i,j,k>=1} F_i F_j F_k`.
pub fn triple_fibonacci_convolution(n: u64) -> BigInt {
    let mut total = BigInt::zero();
    for i in 1..n {
        for j in 1..n - i {
            let k = n - i - j;
            total += fibonacci(i) * fibonacci(j) * fibonacci(k);
        }
    }
    total
}

/// `(triple Fibonacci convolution at s + 1, brute-force total size of the
/// (s, s+1)-core partitions into distinct parts)`.
pub fn size_sum_identity(s: u64, budget: Budget) -> Result<(BigInt, BigInt)> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be >= 1".into()));
    }
    let (si, ti) = (s as i64, s as i64 + 1);
    let needed = frobenius_gaps(si, ti)?.len();
    if needed > budget.max_gaps {
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget.max_gaps,
        });
    }
    let total: u64 = enumerate_core_distinct(si, ti, 1)?
        .iter()
        .map(|p| p.size())
        .sum();
    Ok((triple_fibonacci_convolution(s + 1), BigInt::from(total)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSizeExtremes {
    pub count: BigInt,
    pub max_size: BigInt,
    pub average_size: BigRational,
    /// Largest number of parts.
    pub max_parts: u64,
}

/// Statistics over all `(s, t)`-core partitions, by enumeration.
pub fn core_size_extremes(s: i64, t: i64, budget: Budget) -> Result<CoreSizeExtremes> {
    let cores = enumerate_all_core(s, t, budget)?;
    let count = BigInt::from(cores.len());
    let total: BigInt = cores.iter().map(|p| BigInt::from(p.size())).sum();
    Ok(CoreSizeExtremes {
        max_size: cores
            .iter()
            .map(|p| BigInt::from(p.size()))
            .max()
            .unwrap_or_default(),
        average_size: BigRational::new(total, count.clone()),
        max_parts: cores
            .iter()
            .map(|p| p.num_parts() as u64)
            .max()
            .unwrap_or(0),
        count,
    })
}

/// Closed forms the enumerated core statistics are compared against.
pub mod closed_forms {
    use super::*;

    /// Number of `(s, t)`-cores: `C(s + t, s) / (s + t)`.
    pub fn core_count(s: i64, t: i64) -> BigRational {
        BigRational::new(
            binomial(BigInt::from(s + t), BigInt::from(s)),
            BigInt::from(s + t),
        )
    }

    /// Largest size of an `(s, t)`-core: `(s^2 - 1)(t^2 - 1) / 24`.
    pub fn max_core_size(s: i64, t: i64) -> BigRational {
        BigRational::new(BigInt::from((s * s - 1) * (t * t - 1)), BigInt::from(24))
    }

    /// Average size of an `(s, t)`-core: `(s - 1)(t - 1)(s + t + 1) / 24`.
    pub fn average_core_size(s: i64, t: i64) -> BigRational {
        BigRational::new(
            BigInt::from((s - 1) * (t - 1) * (s + t + 1)),
            BigInt::from(24),
        )
    }

    /// Total size of the `(s, s+1)`-core partitions into distinct parts in
    /// the form `((5s + 7) s F_{s+1} - 6 (s + 1) F_s) / 50`.
    pub fn distinct_size_sum(s: u64) -> BigRational {
        let num = BigInt::from((5 * s + 7) * s) * fibonacci(s + 1)
            - BigInt::from(6 * (s + 1)) * fibonacci(s);
        BigRational::new(num, BigInt::from(50))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{abacus_poly_bruteforce, core_parts_poly_bruteforce};

    fn params(s: i64, m: i64, r: i64, d: i64) -> Params {
        Params::new(s, m, r, d).unwrap()
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(int(n), int(d))
    }

    #[test]
    fn fibonacci_convention() {
        let f: Vec<BigInt> = (0..8).map(fibonacci).collect();
        assert_eq!(f, [0, 1, 1, 2, 3, 5, 8, 13].map(int));
    }

    #[test]
    fn max_parts_examples() {
        assert_eq!(max_parts_formula(4, 3, -1, 1), Ok(5));
        assert_eq!(max_parts_formula(5, 2, 1, 1), Ok(4));
        assert_eq!(max_beads_formula(7, 2, 3, 2), Ok(5));
        assert!(matches!(
            max_parts_formula(2, 3, -1, 1),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            max_parts_formula(4, 3, 2, 1),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            max_beads_formula(2, 3, 3, 1),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn max_parts_formulas_match_bruteforce_degrees() {
        for d in 1..=3 {
            for m in 1..=3 {
                for s in 1..=10 {
                    for r in -1..=s {
                        if let Ok(expected) = max_parts_formula(s, m, r, d) {
                            let t = m * s + r;
                            let deg = if s.gcd(&t) == 1 {
                                core_parts_poly_bruteforce(s, t, d).unwrap().degree()
                            } else {
                                abacus_poly_bruteforce(&params(s, m, r, d)).degree()
                            };
                            assert_eq!(deg, Some(expected as usize), "4.1 s={s} m={m} r={r} d={d}");
                        }
                        if let Ok(expected) = max_beads_formula(s, m, r, d) {
                            let deg = abacus_poly_bruteforce(&params(s, m, r, d)).degree();
                            assert_eq!(deg, Some(expected as usize), "4.2 s={s} m={m} r={r} d={d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unrestricted_max_parts() {
        assert_eq!(max_parts_unrestricted(4, 5), Ok(6));
        assert_eq!(max_parts_unrestricted(2, 3), Ok(1));
        assert_eq!(max_parts_unrestricted(5, 7), Ok(12));
        assert_eq!(
            max_parts_unrestricted(4, 6),
            Err(Error::NonCoprime { s: 4, t: 6 })
        );
    }

    #[test]
    fn moment_report_examples() {
        let r = moment_report(&params(4, 2, -1, 1), 3, FamilyMode::Core).unwrap();
        assert_eq!((r.count.clone(), r.total_parts.clone()), (int(8), int(12)));
        assert_eq!(r.average, ratio(3, 2));
        // (1 + q)^3: f'' (1) = 12, f'''(1) = 6
        assert_eq!(r.factorial_moments, vec![int(12), int(12), int(6)]);

        let r = moment_report(&params(5, 1, -1, 1), 1, FamilyMode::Core).unwrap();
        assert_eq!(r.count, int(5));

        let r = moment_report(&params(2, 1, 1, 1), 1, FamilyMode::Core).unwrap();
        assert_eq!(
            (r.count.clone(), r.total_parts.clone(), r.average.clone()),
            (int(2), int(1), ratio(1, 2))
        );

        assert!(moment_report(&params(6, 1, -2, 3), 1, FamilyMode::Core).is_err());
        assert!(moment_report(&params(6, 1, -2, 3), 1, FamilyMode::Abacus).is_ok());
    }

    #[test]
    fn parts_recurrence() {
        for d in 1..=3 {
            for m in 1..=4 {
                for s in 1..=16 {
                    for r in (-1..=d).filter(|&r| r != 0) {
                        let p = params(s, m, r, d);
                        assert_ne!(check_parts_recurrence(&p), Some(false), "{p}");
                    }
                }
            }
        }
        assert_eq!(check_parts_recurrence(&params(2, 1, -1, 1)), None);
    }

    #[test]
    fn fibonacci_parts_identity() {
        assert_eq!(fib_parts_identity(4), (int(5), int(5)));
        assert_eq!(fib_parts_identity(1), (int(0), int(0)));
        assert_eq!(fib_parts_identity(6), (int(20), int(20)));
    }

    #[test]
    fn size_sum_examples() {
        let b = Budget::default();
        assert_eq!(size_sum_identity(2, b), Ok((int(1), int(1))));
        assert_eq!(size_sum_identity(1, b), Ok((int(0), int(0))));
        // (3,4)-cores into distinct parts: (), (1), (2)
        assert_eq!(size_sum_identity(3, b), Ok((int(3), int(3))));
        assert!(matches!(
            size_sum_identity(10, b),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn distinct_size_closed_form() {
        for s in 1..=12 {
            assert_eq!(
                closed_forms::distinct_size_sum(s),
                BigRational::from_integer(triple_fibonacci_convolution(s + 1))
            );
        }
    }

    #[test]
    fn core_size_examples() {
        let b = Budget::default();
        let e = core_size_extremes(4, 5, b).unwrap();
        assert_eq!(
            (e.max_size.clone(), e.average_size.clone(), e.count.clone()),
            (int(15), ratio(5, 1), int(14))
        );
        let e = core_size_extremes(2, 3, b).unwrap();
        assert_eq!(
            (e.max_size.clone(), e.average_size.clone(), e.count.clone()),
            (int(1), ratio(1, 2), int(2))
        );
        let e = core_size_extremes(3, 5, b).unwrap();
        assert_eq!(
            (e.max_size.clone(), e.average_size.clone(), e.count.clone()),
            (int(8), ratio(3, 1), int(7))
        );
        assert_eq!(
            core_size_extremes(3, 6, b),
            Err(Error::NonCoprime { s: 3, t: 6 })
        );
    }
}
