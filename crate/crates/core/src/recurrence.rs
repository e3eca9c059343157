//! Closed computation of the abacus polynomials `A^d_{s,m,r}(q)` for every
//! parameter choice, and brute-force harnesses for the recurrence identities
//! these polynomials satisfy.
//!
//! Computation goes: canonicalize `(s, m, r)` to `0 <= r < s`, use the
//! explicit initial conditions for `s <= d + 1`, and otherwise descend with
//!
//! ```text
//! f_s = f_{s-1} + (q + q^2 + ... + q^m) f_{s-d-1}        (s > d + 1, s > r >= 0)
//! ```
//!
//! re-canonicalizing at each step. The negative-offset recurrences are not
//! needed for computation and only appear as checkable identities.

use std::collections::HashMap;

use crate::abacus::Params;
use crate::enumerate::{bead_poly_bruteforce, correspondence_holds};
use crate::error::{Error, Result};
use crate::poly::QPolynomial;

/// Parameters reduced so that the recurrence applies directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalParams {
    /// `s < 0`: the polynomial is 0 by convention.
    Zero,
    /// Only the empty abacus fits: `s = 0` or `m s + r <= 0`.
    One,
    /// Same family as the input, with `m >= 1` and `0 <= r < s`.
    Reduced { s: i64, m: i64, r: i64 },
}

pub fn canonicalize(params: &Params) -> CanonicalParams {
    canonical(params.s, params.limit())
}

/// The family only depends on `s` and the position bound `m s + r`.
fn canonical(s: i64, limit: i64) -> CanonicalParams {
    if s < 0 {
        CanonicalParams::Zero
    } else if s == 0 || limit <= 0 {
        CanonicalParams::One
    } else if limit < s {
        // Everything sits in the first row, so the abacus may as well have
        // `limit` columns.
        CanonicalParams::Reduced {
            s: limit,
            m: 1,
            r: 0,
        }
    } else {
        CanonicalParams::Reduced {
            s,
            m: limit / s,
            r: limit % s,
        }
    }
}

/// Explicit `A^d_{s,m,r}(q)` for `1 <= s <= d + 1`, where an abacus holds at
/// most one bead (`s <= d`) or at most one full column (`s = d + 1`).
pub fn initial_poly(s: i64, m: i64, r: i64, d: i64) -> Result<QPolynomial> {
    if d < 1 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "need m, d >= 1, got m = {m}, d = {d}"
        )));
    }
    if !(1..=d + 1).contains(&s) {
        return Err(Error::OutOfRange(format!(
            "initial conditions need 1 <= s <= d + 1, got s = {s}, d = {d}"
        )));
    }
    Ok(initial_poly_unchecked(s, m, r, d))
}

fn initial_poly_unchecked(s: i64, m: i64, r: i64, d: i64) -> QPolynomial {
    if s <= d {
        let singles = (s - 1).min(m * s + r - 1).max(0);
        return &QPolynomial::one() + &QPolynomial::monomial(1, singles);
    }
    let (rows, r0) = (m + r.div_euclid(s), r.rem_euclid(s));
    if rows < 0 {
        return QPolynomial::one();
    }
    let rows = rows as usize;
    let full_columns = &QPolynomial::geometric(1, rows) * &QPolynomial::constant(d);
    let overhang = QPolynomial::monomial(rows + 1, (r0 - 1).max(0));
    &(&QPolynomial::one() + &full_columns) + &overhang
}

/// Memoized evaluator of `A^d_{s,m,r}(q)` for one spacing `d`.
///
/// The cache is keyed on canonical `(s, m, r)`, so a single evaluator can be
/// reused across many queries with the same `d`.
#[derive(Debug)]
pub struct AbacusPolys {
    d: i64,
    memo: HashMap<(i64, i64, i64), QPolynomial>,
}

impl AbacusPolys {
    pub fn new(d: i64) -> Self {
        assert!(d >= 1, "spacing must be >= 1");
        Self {
            d,
            memo: HashMap::new(),
        }
    }

    pub fn spacing(&self) -> i64 {
        self.d
    }

    /// `A^d_{s,m,r}(q)` for arbitrary integers; only `m s + r` matters.
    pub fn get(&mut self, s: i64, m: i64, r: i64) -> QPolynomial {
        self.by_limit(s, m * s + r)
    }

    fn by_limit(&mut self, s: i64, limit: i64) -> QPolynomial {
        match canonical(s, limit) {
            CanonicalParams::Zero => QPolynomial::zero(),
            CanonicalParams::One => QPolynomial::one(),
            CanonicalParams::Reduced { s, m, r } => self.reduced(s, m, r),
        }
    }

    fn reduced(&mut self, s: i64, m: i64, r: i64) -> QPolynomial {
        if let Some(p) = self.memo.get(&(s, m, r)) {
            return p.clone();
        }
        let d = self.d;
        let value = if s <= d + 1 {
            initial_poly_unchecked(s, m, r, d)
        } else {
            let shorter = self.by_limit(s - 1, m * (s - 1) + r);
            let narrower = self.by_limit(s - d - 1, m * (s - d - 1) + r);
            &shorter + &(&QPolynomial::geometric(1, m as usize) * &narrower)
        };
        self.memo.insert((s, m, r), value.clone());
        value
    }
}

/// `A^d_{s,m,r}(q)` for any parameters.
pub fn abacus_poly(params: &Params) -> QPolynomial {
    AbacusPolys::new(params.d).get(params.s, params.m, params.r)
}

/// `C^d_{s,m,r}(q)`, the part-count polynomial of `(s, ms + r)`-core
/// partitions into `d`-distinct parts, for the offsets where it coincides
/// with the abacus polynomial.
pub fn core_poly(s: i64, m: i64, r: i64, d: i64) -> Result<QPolynomial> {
    let params = Params::new(s, m, r, d)?;
    if s < 1 {
        return Err(Error::InvalidParameter(format!("s must be >= 1, got {s}")));
    }
    if !correspondence_holds(&params) {
        return Err(Error::CorrespondenceNotGuaranteed { r, d });
    }
    Ok(abacus_poly(&params))
}

/// Which proved hypothesis a recurrence check is run under. Offsets are
/// written `r` for the family bound `m s + r`; for the negative rules `ρ = -r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecurrenceRule {
    /// `r >= 0`, `s > d + 1` and `s > r`.
    NonNegativeOffset,
    /// `r < 0` and `s > 2d + ρ`.
    NegativeOffset,
    /// `r = -1` and `s = 2d + 2` exactly.
    UnitNegativeBoundary,
    /// `1 <= ρ <= d + 1` and `s > 2d + 1`.
    SmallNegativeOffset,
    /// `d = 1`, `ρ >= 1` and `s > ρ + 1`.
    UnitSpacingNegativeOffset,
}

impl RecurrenceRule {
    pub const ALL: [RecurrenceRule; 5] = [
        RecurrenceRule::NonNegativeOffset,
        RecurrenceRule::NegativeOffset,
        RecurrenceRule::UnitNegativeBoundary,
        RecurrenceRule::SmallNegativeOffset,
        RecurrenceRule::UnitSpacingNegativeOffset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RecurrenceRule::NonNegativeOffset => "non-negative offset (s > d+1, s > r >= 0)",
            RecurrenceRule::NegativeOffset => "negative offset (s > 2d + rho)",
            RecurrenceRule::UnitNegativeBoundary => "unit negative offset at s = 2d + 2",
            RecurrenceRule::SmallNegativeOffset => "small negative offset (rho <= d+1, s > 2d + 1)",
            RecurrenceRule::UnitSpacingNegativeOffset => {
                "unit spacing negative offset (d = 1, s > rho + 1)"
            }
        }
    }

    pub fn applies(self, p: &Params) -> bool {
        let (s, r, d) = (p.s, p.r, p.d);
        if p.m < 1 || d < 1 {
            return false;
        }
        let rho = -r;
        match self {
            RecurrenceRule::NonNegativeOffset => r >= 0 && s > d + 1 && s > r,
            RecurrenceRule::NegativeOffset => rho > 0 && s > 2 * d + rho,
            RecurrenceRule::UnitNegativeBoundary => rho == 1 && s == 2 * d + 2,
            RecurrenceRule::SmallNegativeOffset => (1..=d + 1).contains(&rho) && s > 2 * d + 1,
            RecurrenceRule::UnitSpacingNegativeOffset => d == 1 && rho >= 1 && s > rho + 1,
        }
    }
}

/// Brute-force abacus polynomials, cached by `(s, m s + r, d)`.
///
/// Identity checks run through this type so that they never touch the
/// recurrence evaluator they are meant to validate.
#[derive(Debug, Default)]
pub struct IdentityChecker {
    cache: HashMap<(i64, i64, i64), QPolynomial>,
}

impl IdentityChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn brute(&mut self, s: i64, m: i64, r: i64, d: i64) -> QPolynomial {
        let key = (s, m * s + r, d);
        if let Some(p) = self.cache.get(&key) {
            return p.clone();
        }
        let p = bead_poly_bruteforce(key.0, key.1, key.2);
        self.cache.insert(key, p.clone());
        p
    }

    /// Evaluates `f_s = f_{s-1} + (q + ... + q^m) f_{s-d-1}` for fixed
    /// `(m, r, d)`, regardless of any hypothesis.
    pub fn recurrence_identity_holds(&mut self, p: &Params) -> bool {
        let (s, m, r, d) = (p.s, p.m, p.r, p.d);
        let lhs = self.brute(s, m, r, d);
        let rhs = &self.brute(s - 1, m, r, d)
            + &(&QPolynomial::geometric(1, m as usize) * &self.brute(s - d - 1, m, r, d));
        lhs == rhs
    }

    pub fn check_recurrence(&mut self, p: &Params, rule: RecurrenceRule) -> Result<bool> {
        if !rule.applies(p) {
            return Err(Error::PreconditionViolated(format!(
                "{p} does not satisfy the hypothesis of the {} rule",
                rule.name()
            )));
        }
        Ok(self.recurrence_identity_holds(p))
    }

    /// `A_{s,m} = A_{s,m,-r} + q^m sum_{k=1}^{r} A_{s-k-1,m} A_{k-1,m-1}` at
    /// spacing 1.
    pub fn rneg_decomposition(&mut self, s: i64, m: i64, r: i64) -> Result<bool> {
        if m < 1 || r < 1 || s < r {
            return Err(Error::PreconditionViolated(format!(
                "need m, r >= 1 and s >= r, got s = {s}, m = {m}, r = {r}"
            )));
        }
        let lhs = self.brute(s, m, 0, 1);
        let mut sum = QPolynomial::zero();
        for k in 1..=r {
            sum += &(&self.brute(s - k - 1, m, 0, 1) * &self.brute(k - 1, m - 1, 0, 1));
        }
        let rhs = &self.brute(s, m, -r, 1) + &(&QPolynomial::monomial(m as usize, 1) * &sum);
        Ok(lhs == rhs)
    }

    /// `A^d_{t,m,-r} = A^d_{t,m-1,t-r}`.
    pub fn rnegpos_identity(&mut self, t: i64, m: i64, r: i64, d: i64) -> Result<bool> {
        if t < 0 || m < 2 || r < 1 || d < 1 {
            return Err(Error::PreconditionViolated(format!(
                "need t >= 0, m >= 2, r >= 1, d >= 1, got t = {t}, m = {m}, r = {r}, d = {d}"
            )));
        }
        Ok(self.brute(t, m, -r, d) == self.brute(t, m - 1, t - r, d))
    }
}

/// Brute-force check of the recurrence under `rule`'s hypothesis.
pub fn check_recurrence(params: &Params, rule: RecurrenceRule) -> Result<bool> {
    IdentityChecker::new().check_recurrence(params, rule)
}

pub fn rneg_decomposition_check(s: i64, m: i64, r: i64) -> Result<bool> {
    IdentityChecker::new().rneg_decomposition(s, m, r)
}

pub fn rnegpos_identity_check(t: i64, m: i64, r: i64, d: i64) -> Result<bool> {
    IdentityChecker::new().rnegpos_identity(t, m, r, d)
}

/// Where the negative-offset recurrence starts holding for one `(d, ρ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSweepRow {
    pub d: i64,
    /// The offset magnitude: the family bound is `m s - rho`.
    pub rho: i64,
    /// Smallest `s0` such that the identity held for every `s` in
    /// `s0..=s_max` and every tested `m`.
    pub observed_from: i64,
    /// Smallest `s` from which a proved rule covers every larger `s`.
    pub proved_from: i64,
    /// Smallest `s` of the numerically suggested optimal bound.
    pub suggested_from: i64,
    pub s_max: i64,
}

/// Proved half-line start for the negative-offset recurrence.
pub fn proved_negative_bound(d: i64, rho: i64) -> i64 {
    let mut from = 2 * d + rho + 1;
    if rho <= d + 1 {
        from = from.min(2 * d + 2);
    }
    if d == 1 {
        from = from.min(rho + 2);
    }
    from
}

/// The conjectured optimal half-line start.
pub fn suggested_negative_bound(d: i64, rho: i64) -> i64 {
    let offset = if d == 1 {
        rho - 1
    } else if rho > d + 1 {
        rho
    } else {
        1
    };
    2 * d + offset + 1
}

/// Reports, for each `1 <= d <= d_max` and `1 <= ρ <= rho_max`, from which `s`
/// the recurrence holds for `A^d_{s,m,-ρ}` over every `m` in `ms`. The sweep
/// window extends a few columns past both the proved and suggested bounds.
/// Nothing is asserted here.
pub fn negative_offset_bound_sweep(d_max: i64, rho_max: i64, ms: &[i64]) -> Vec<BoundSweepRow> {
    let mut checker = IdentityChecker::new();
    let mut rows = Vec::new();
    for d in 1..=d_max {
        for rho in 1..=rho_max {
            let proved_from = proved_negative_bound(d, rho);
            let suggested_from = suggested_negative_bound(d, rho);
            let s_max = proved_from.max(suggested_from) + 3;
            let mut observed_from = s_max + 1;
            for s in (1..=s_max).rev() {
                let ok = ms
                    .iter()
                    .all(|&m| checker.recurrence_identity_holds(&Params { s, m, r: -rho, d }));
                if !ok {
                    break;
                }
                observed_from = s;
            }
            rows.push(BoundSweepRow {
                d,
                rho,
                observed_from,
                proved_from,
                suggested_from,
                s_max,
            });
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::abacus_poly_bruteforce;

    fn params(s: i64, m: i64, r: i64, d: i64) -> Params {
        Params::new(s, m, r, d).unwrap()
    }

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            canonicalize(&params(4, 3, -1, 1)),
            CanonicalParams::Reduced { s: 4, m: 2, r: 3 }
        );
        assert_eq!(
            canonicalize(&params(5, 1, 7, 1)),
            CanonicalParams::Reduced { s: 5, m: 2, r: 2 }
        );
        assert_eq!(
            canonicalize(&params(3, 1, -2, 1)),
            CanonicalParams::Reduced { s: 1, m: 1, r: 0 }
        );
        assert_eq!(canonicalize(&params(3, 1, -3, 1)), CanonicalParams::One);
        assert_eq!(canonicalize(&params(3, 1, -9, 1)), CanonicalParams::One);
        assert_eq!(canonicalize(&params(0, 1, 5, 1)), CanonicalParams::One);
        assert_eq!(canonicalize(&params(-2, 1, 5, 1)), CanonicalParams::Zero);
    }

    #[test]
    fn canonical_form_is_reduced_and_preserves_the_bound() {
        for s in 1..20 {
            for m in 1..5 {
                for r in -3 * s..3 * s {
                    let p = params(s, m, r, 1);
                    if let CanonicalParams::Reduced {
                        s: s2,
                        m: m2,
                        r: r2,
                    } = canonicalize(&p)
                    {
                        assert!(m2 >= 1 && (0..s2).contains(&r2));
                        assert!(s2 <= s);
                        assert_eq!(m2 * s2 + r2, p.limit());
                    } else {
                        assert!(p.limit() <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn initial_poly_examples() {
        assert_eq!(initial_poly(2, 3, 1, 1).unwrap(), poly(&[1, 1, 1, 1]));
        for m in 1..4 {
            for r in -3..4 {
                assert_eq!(initial_poly(1, m, r, 1).unwrap(), QPolynomial::one());
            }
        }
        assert_eq!(initial_poly(3, 2, 1, 2).unwrap(), poly(&[1, 2, 2]));
        assert!(matches!(
            initial_poly(4, 2, 1, 2),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn initial_poly_matches_bruteforce() {
        for d in 1..=4 {
            for s in 1..=d + 1 {
                for m in 1..=4 {
                    for r in -3 * s..=3 * s {
                        assert_eq!(
                            initial_poly(s, m, r, d).unwrap(),
                            abacus_poly_bruteforce(&params(s, m, r, d)),
                            "s={s} m={m} r={r} d={d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn two_column_closed_form() {
        // A_{2,m,r} = 1 + q + ... + q^{m + floor(r/2)} at spacing 1.
        for m in 1i64..5 {
            for r in -2 * m + 1..6 {
                let top = m + r.div_euclid(2);
                let expected = if top < 0 {
                    QPolynomial::one()
                } else {
                    QPolynomial::geometric(0, top as usize)
                };
                assert_eq!(abacus_poly(&params(2, m, r, 1)), expected, "m={m} r={r}");
            }
        }
    }

    #[test]
    fn abacus_poly_examples() {
        assert_eq!(abacus_poly(&params(4, 3, -1, 1)), poly(&[1, 3, 4, 4, 2, 1]));
        assert_eq!(abacus_poly(&params(7, 1, -1, 1)).eval_at_one(), 13.into());
        assert_eq!(abacus_poly(&params(6, 2, -1, 1)), poly(&[1, 1]).pow(5));
        assert_eq!(
            abacus_poly(&Params {
                s: 0,
                m: 1,
                r: 0,
                d: 1
            }),
            QPolynomial::one()
        );
        assert_eq!(
            abacus_poly(&Params {
                s: -1,
                m: 1,
                r: 0,
                d: 1
            }),
            QPolynomial::zero()
        );
    }

    #[test]
    fn abacus_poly_matches_bruteforce_small_grid() {
        for d in 1..=3 {
            let mut polys = AbacusPolys::new(d);
            for s in 1..=9 {
                for m in 1..=3 {
                    for r in -s + 1..=s {
                        assert_eq!(
                            polys.get(s, m, r),
                            abacus_poly_bruteforce(&params(s, m, r, d)),
                            "s={s} m={m} r={r} d={d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn core_poly_examples() {
        assert_eq!(core_poly(4, 3, -1, 1).unwrap(), poly(&[1, 3, 4, 4, 2, 1]));
        for m in 1..6 {
            assert_eq!(core_poly(2, m, -1, 1).unwrap().eval_at_one(), m.into());
            assert_eq!(core_poly(2, m, 1, 1).unwrap().eval_at_one(), (m + 1).into());
        }
        assert_eq!(
            core_poly(6, 1, -2, 3),
            Err(Error::CorrespondenceNotGuaranteed { r: -2, d: 3 })
        );
        assert!(core_poly(5, 1, 2, 1).is_err());
        assert!(core_poly(5, 1, 2, 2).is_ok());
    }

    #[test]
    fn recurrence_check_examples() {
        use RecurrenceRule::*;
        assert_eq!(
            check_recurrence(&params(7, 2, -1, 2), SmallNegativeOffset),
            Ok(true)
        );
        assert_eq!(
            check_recurrence(&params(6, 1, -3, 1), UnitSpacingNegativeOffset),
            Ok(true)
        );
        assert_eq!(
            check_recurrence(&params(4, 2, 0, 1), NonNegativeOffset),
            Ok(true)
        );
        assert_eq!(
            check_recurrence(&params(6, 2, -1, 2), UnitNegativeBoundary),
            Ok(true)
        );
        assert!(check_recurrence(&params(2, 2, 0, 1), NonNegativeOffset).is_err());
        assert!(check_recurrence(&params(5, 2, -1, 2), SmallNegativeOffset).is_err());
    }

    #[test]
    fn rneg_decomposition_examples() {
        assert_eq!(rneg_decomposition_check(5, 2, 2), Ok(true));
        assert_eq!(rneg_decomposition_check(3, 1, 3), Ok(true));
        assert_eq!(rneg_decomposition_check(4, 3, 1), Ok(true));
        assert!(rneg_decomposition_check(2, 1, 3).is_err());
    }

    #[test]
    fn rnegpos_identity_examples() {
        assert_eq!(rnegpos_identity_check(6, 2, 1, 1), Ok(true));
        assert_eq!(rnegpos_identity_check(0, 2, 1, 1), Ok(true));
        assert_eq!(rnegpos_identity_check(0, 5, 4, 3), Ok(true));
        assert_eq!(rnegpos_identity_check(7, 3, 2, 2), Ok(true));
        assert!(rnegpos_identity_check(7, 1, 2, 2).is_err());
    }

    #[test]
    fn bound_sweep_never_contradicts_proved_bounds() {
        for row in negative_offset_bound_sweep(3, 4, &[1, 2]) {
            assert!(row.observed_from <= row.proved_from, "{row:?}");
        }
    }
}
