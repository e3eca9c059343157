//! Verification suites: every check compares a computed value with an
//! independent oracle or closed form and reports the first counterexample.

use std::fmt::Write as _;

use coreab_core::bijection::composition_to_partition;
use coreab_core::recurrence::{negative_offset_bound_sweep, IdentityChecker};
use coreab_core::stats::{self, closed_forms};
use coreab_core::{
    abacus_poly, abacus_poly_bruteforce, core_parts_poly_bruteforce, core_poly,
    enumerate_core_distinct, enumerate_family, gap_correspondence, maximal_gap_members,
    partition_to_composition, Budget, Composition, Params, QPolynomial, RecurrenceRule,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde_json::json;

use crate::{Format, Report, Suite};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            cases: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(context());
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Every `(s, m, r, d)` with `1 <= s <= max_s`, `m, d <= 3`, `-s < r <= s`.
pub fn parameter_grid(max_s: i64, max_m: i64, max_d: i64) -> Vec<Params> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for m in 1..=max_m {
            for s in 1..=max_s {
                for r in -s + 1..=s {
                    out.push(Params::new(s, m, r, d).expect("grid parameters are valid"));
                }
            }
        }
    }
    out
}

pub fn recurrence_checks(max_s: i64) -> Vec<Check> {
    let grid = parameter_grid(max_s, 3, 3);
    let mut oracle = Check::new("recurrence polynomial equals brute force");
    for p in &grid {
        oracle.record(abacus_poly(p) == abacus_poly_bruteforce(p), || {
            p.to_string()
        });
    }
    let mut checks = vec![oracle];
    let mut identities = IdentityChecker::new();
    for rule in RecurrenceRule::ALL {
        let mut c = Check::new(format!("recurrence under {} hypothesis", rule.name()));
        for p in grid.iter().filter(|p| rule.applies(p)) {
            c.record(identities.check_recurrence(p, rule) == Ok(true), || {
                p.to_string()
            });
        }
        checks.push(c);
    }

    let mut counts = Check::new("counts for t = ms -/+ 1 follow C(s) = C(s-1) + m C(s-2)");
    for m in 1..=4 {
        for sign in [-1, 1] {
            let seq: Vec<BigInt> = (1..=max_s.max(3))
                .map(|s| {
                    core_poly(s, m, sign, 1)
                        .map(|f| f.eval_at_one())
                        .unwrap_or_default()
                })
                .collect();
            let c2 = BigInt::from(if sign < 0 { m } else { m + 1 });
            counts.record(seq[0].is_one() && seq[1] == c2, || {
                format!("initial values m={m} r={sign}")
            });
            for i in 2..seq.len() {
                let expected = &seq[i - 1] + BigInt::from(m) * &seq[i - 2];
                counts.record(seq[i] == expected, || format!("s={} m={m} r={sign}", i + 1));
            }
        }
    }
    checks.push(counts);

    let mut sweep = Check::new("negative-offset sweep never contradicts the proved bounds");
    for row in negative_offset_bound_sweep(3, 4, &[1, 2, 3]) {
        sweep.record(row.observed_from <= row.proved_from, || format!("{row:?}"));
    }
    checks.push(sweep);
    checks
}

pub fn identity_checks(max_s: i64) -> Vec<Check> {
    let mut identities = IdentityChecker::new();
    let mut decomposition = Check::new("spacing-1 decomposition by the last r positions");
    for s in 1..=max_s {
        for m in 1..=3 {
            for r in 1..=s {
                decomposition.record(identities.rneg_decomposition(s, m, r) == Ok(true), || {
                    format!("s={s} m={m} r={r}")
                });
            }
        }
    }
    let mut shift = Check::new("negative offset equals shifted positive offset");
    for d in 1..=3 {
        for t in 0..=max_s {
            for m in 2..=3 {
                for r in 1..=max_s {
                    shift.record(identities.rnegpos_identity(t, m, r, d) == Ok(true), || {
                        format!("t={t} m={m} r={r} d={d}")
                    });
                }
            }
        }
    }
    let mut binomial = Check::new("(s, 2s-1)-core distinct polynomial is (1+q)^(s-1)");
    let one_plus_q = QPolynomial::geometric(0, 1);
    for s in 2..=max_s {
        binomial.record(
            core_poly(s, 2, -1, 1).ok() == Some(one_plus_q.pow(s as u32 - 1)),
            || format!("s={s}"),
        );
    }
    let mut divisible =
        Check::new("(s, ms-1)-core distinct polynomial divisible by 1 + q + ... + q^(m-1)");
    for s in 2..=max_s {
        for m in 1..=4 {
            let ok = core_poly(s, m, -1, 1).is_ok_and(|f| {
                f.exact_div(&QPolynomial::geometric(0, m as usize - 1))
                    .is_some()
            });
            divisible.record(ok, || format!("s={s} m={m}"));
        }
    }
    let mut doubling = Check::new("(s, s+2)-core distinct count is 2^(s-1) for odd s");
    for s in (1..=max_s).step_by(2) {
        let n = enumerate_core_distinct(s, s + 2, 1).map(|v| v.len());
        doubling.record(n == Ok(1 << (s - 1)), || format!("s={s}: {n:?}"));
    }
    vec![decomposition, shift, binomial, divisible, doubling]
}

pub fn stats_checks(max_s: i64, max_st: i64) -> Vec<Check> {
    let mut parts = Check::new("max parts formula equals core polynomial degree");
    let mut beads = Check::new("max beads formula equals abacus polynomial degree");
    for p in parameter_grid(max_s, 3, 3) {
        let (s, m, r, d) = (p.s, p.m, p.r, p.d);
        if let Ok(expected) = stats::max_parts_formula(s, m, r, d) {
            let t = p.t();
            let deg = if s.gcd(&t) == 1 {
                core_parts_poly_bruteforce(s, t, d)
                    .ok()
                    .and_then(|f| f.degree())
            } else {
                abacus_poly_bruteforce(&p).degree()
            };
            parts.record(deg == Some(expected as usize), || {
                format!("{p}: degree {deg:?}, formula {expected}")
            });
        }
        if let Ok(expected) = stats::max_beads_formula(s, m, r, d) {
            let deg = abacus_poly_bruteforce(&p).degree();
            beads.record(deg == Some(expected as usize), || {
                format!("{p}: degree {deg:?}, formula {expected}")
            });
        }
    }

    let mut sizes =
        Check::new("(s, t)-core count, max size, average size and max parts match closed forms");
    let wide = Budget::new(usize::MAX).expect("nonzero budget");
    for s in 1..max_st {
        for t in s..=max_st - s {
            if s.gcd(&t) != 1 {
                continue;
            }
            let ok = stats::core_size_extremes(s, t, wide).is_ok_and(|e| {
                let half = (s - 1) * (t - 1) / 2;
                closed_forms::core_count(s, t) == e.count.clone().into()
                    && closed_forms::max_core_size(s, t) == e.max_size.clone().into()
                    && closed_forms::average_core_size(s, t) == e.average_size
                    && e.max_parts as i64 == half
            });
            sizes.record(ok, || format!("s={s} t={t}"));
        }
    }

    let mut recurrence =
        Check::new("total parts follow p(s) = p(s-1) + m p(s-d-1) + C(m+1,2) n(s-d-1)");
    for d in 1..=3 {
        for m in 1..=4 {
            for s in 1..=max_s + 6 {
                for r in (-1..=d).filter(|&r| r != 0) {
                    let p = Params::new(s, m, r, d).expect("valid parameters");
                    if let Some(ok) = stats::check_parts_recurrence(&p) {
                        recurrence.record(ok, || p.to_string());
                    }
                }
            }
        }
    }

    let mut fib = Check::new(
        "(s, s+1)-core distinct total parts equals the Fibonacci convolution and closed form",
    );
    for s in 1..=max_s + 5 {
        let (conv, closed) = stats::fib_parts_identity(s as u64);
        let total = core_poly(s, 1, 1, 1)
            .map(|f| f.factorial_moment(1))
            .unwrap_or_default();
        fib.record(conv == closed && conv == total, || {
            format!("s={s}: {conv} {closed} {total}")
        });
    }

    let mut doubling = Check::new("(s, 2s-1)-core distinct total parts is (s-1) 2^(s-2)");
    for s in 2..=max_s {
        let total = core_poly(s, 2, -1, 1)
            .map(|f| f.factorial_moment(1))
            .unwrap_or_default();
        doubling.record(total == BigInt::from(s - 1) << (s - 2) as usize, || {
            format!("s={s}: {total}")
        });
    }

    let mut size =
        Check::new("(s, s+1)-core distinct total size is the triple Fibonacci convolution");
    for s in 1..=max_s {
        let r = stats::size_sum_identity(s as u64, wide);
        size.record(r.as_ref().is_ok_and(|(a, b)| a == b), || {
            format!("s={s}: {r:?}")
        });
    }
    vec![parts, beads, sizes, recurrence, fib, doubling, size]
}

pub fn bijection_checks(max_s: i64) -> Vec<Check> {
    let mut compositions =
        Check::new("compositions of s correspond to (s, 2s-1)-cores into distinct parts");
    for s in 1..=max_s {
        let su = s as u64;
        let family = match Params::new(s, 2, -1, 1).and_then(|p| enumerate_family(&p)) {
            Ok(f) => f,
            Err(e) => {
                compositions.record(false, || format!("s={s}: {e}"));
                continue;
            }
        };
        compositions.record(family.len() == 1 << (s - 1), || {
            format!("s={s}: {} partitions", family.len())
        });
        for p in &family {
            let back =
                partition_to_composition(p, su).and_then(|c| composition_to_partition(&c, su));
            compositions.record(back.as_ref() == Ok(p), || format!("s={s} {p}"));
        }
        let mut by_parts = vec![0usize; su as usize + 1];
        for c in Composition::all_of(su) {
            let round =
                composition_to_partition(&c, su).and_then(|p| partition_to_composition(&p, su));
            compositions.record(round.as_ref() == Ok(&c), || format!("s={s} {c}"));
            by_parts[c.len()] += 1;
        }
        for (k, &n) in by_parts.iter().enumerate().skip(1) {
            let expected = num_integer::binomial(su - 1, k as u64 - 1) as usize;
            compositions.record(n == expected, || format!("s={s} k={k}"));
        }
    }

    let mut gaps = Check::new("maximal-gap members correspond to the family with m - 1 (s > d)");
    for d in 1..=3 {
        for m in 2..=3 {
            for s in d + 1..=max_s {
                for r in (-1..=d).filter(|&r| r != 0) {
                    let big = Params::new(s, m, r, d).expect("valid parameters");
                    let small = Params::new(s, m - 1, r, d).expect("valid parameters");
                    let ok = (|| {
                        let g = maximal_gap_members(&big).ok()?;
                        let mut image = g
                            .iter()
                            .map(|p| gap_correspondence(p, &big).ok())
                            .collect::<Option<Vec<_>>>()?;
                        let mut target = enumerate_family(&small).ok()?;
                        image.sort();
                        target.sort();
                        Some(image == target)
                    })();
                    gaps.record(ok == Some(true), || big.to_string());
                }
            }
        }
    }

    let mut counted =
        Check::new("(s, 3s-1)-core distinct maximal-gap members with k parts number C(s-1, k-1)");
    for s in 2..=max_s {
        let g = maximal_gap_members(&Params::new(s, 3, -1, 1).expect("valid parameters"))
            .unwrap_or_default();
        for k in 2..=s as usize {
            let n = g.iter().filter(|p| p.num_parts() == k).count();
            let expected = num_integer::binomial(s as u64 - 1, k as u64 - 1) as usize;
            counted.record(n == expected, || format!("s={s} k={k}: {n}"));
        }
    }
    vec![compositions, gaps, counted]
}

pub fn checks_for(suite: Suite, max_s: i64, max_st: i64) -> Vec<Check> {
    match suite {
        Suite::Recurrences => recurrence_checks(max_s),
        Suite::Identities => identity_checks(max_s),
        Suite::Stats => stats_checks(max_s, max_st),
        Suite::Bijections => bijection_checks(max_s),
        Suite::All => [
            Suite::Recurrences,
            Suite::Identities,
            Suite::Stats,
            Suite::Bijections,
        ]
        .into_iter()
        .flat_map(|s| checks_for(s, max_s, max_st))
        .collect(),
    }
}

pub fn run_suite(suite: Suite, max_s: i64, max_st: i64, format: Format) -> Report {
    let checks = checks_for(suite, max_s.max(1), max_st.max(2));
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("check,cases,passed,failure\n");
    }
    for c in &checks {
        match format {
            Format::Text => {
                let verdict = if c.passed() { "PASS" } else { "FAIL" };
                write!(out, "{verdict}  {}  [{} cases]", c.name, c.cases).unwrap();
                if let Some(f) = &c.failure {
                    write!(out, "  first failure: {f}").unwrap();
                }
                out.push('\n');
            }
            Format::Json => {
                let rec = json!({ "check": c.name, "cases": c.cases, "passed": c.passed(), "failure": c.failure });
                writeln!(out, "{rec}").unwrap();
            }
            Format::Csv => {
                let failure = c.failure.as_deref().unwrap_or("").replace(',', ";");
                writeln!(
                    out,
                    "{},{},{},{failure}",
                    c.name.replace(',', ";"),
                    c.cases,
                    c.passed()
                )
                .unwrap();
            }
        }
    }
    Report {
        ok: checks.iter().all(Check::passed),
        output: out,
    }
}
