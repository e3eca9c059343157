//! Coefficient table of the part-count polynomial of `(s, s+2)`-core
//! partitions into distinct parts, for odd `s`.
//!
//! Each column `c_n(s)` is run through repeated differences over the odd
//! `s >= n` in range; the table reports the order at which the differences
//! become constant, without asserting it.

use std::fmt::Write as _;

use coreab_core::{core_parts_poly_bruteforce, Error, QPolynomial, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::{big, poly_json, Format, IntRange, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub s: i64,
    pub poly: QPolynomial,
    pub sum: BigInt,
    pub sum_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnDegree {
    pub n: usize,
    pub samples: usize,
    /// Smallest order whose differences are constant over at least two
    /// entries.
    pub apparent_degree: Option<usize>,
}

pub fn rows(s: IntRange) -> Result<Vec<Row>> {
    let odd: Vec<i64> = s
        .iter()
        .filter(|s| s.rem_euclid(2) == 1 && *s >= 1)
        .collect();
    if odd.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "no odd s >= 1 in {}..{}",
            s.lo, s.hi
        )));
    }
    odd.into_iter()
        .map(|s| {
            let poly = core_parts_poly_bruteforce(s, s + 2, 1)?;
            let sum = poly.eval_at_one();
            let sum_ok = sum == BigInt::from(1) << (s - 1) as usize;
            Ok(Row {
                s,
                poly,
                sum,
                sum_ok,
            })
        })
        .collect()
}

pub fn column_degrees(rows: &[Row]) -> Vec<ColumnDegree> {
    let width = rows
        .iter()
        .map(|r| r.poly.coeffs().len())
        .max()
        .unwrap_or(0);
    (0..width)
        .map(|n| {
            let mut diffs: Vec<BigInt> = rows
                .iter()
                .filter(|r| r.s >= n as i64)
                .map(|r| r.poly.coeff(n))
                .collect();
            let samples = diffs.len();
            let mut apparent_degree = None;
            for order in 0.. {
                if diffs.len() < 2 {
                    break;
                }
                if diffs.windows(2).all(|w| w[0] == w[1]) {
                    apparent_degree = Some(order);
                    break;
                }
                diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
            }
            ColumnDegree {
                n,
                samples,
                apparent_degree,
            }
        })
        .filter(|c| c.samples > 0)
        .collect()
}

pub fn run(s: IntRange, format: Format) -> Result<Report> {
    let rows = rows(s)?;
    let degrees = column_degrees(&rows);
    let ok = rows.iter().all(|r| r.sum_ok);
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "s\tsum\tsum=2^(s-1)\tc_0 c_1 ...").unwrap();
            for r in &rows {
                let coeffs: Vec<String> = r.poly.coeffs().iter().map(|c| c.to_string()).collect();
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    r.s,
                    r.sum,
                    if r.sum_ok { "ok" } else { "FAIL" },
                    coeffs.join(" ")
                )
                .unwrap();
            }
            writeln!(out).unwrap();
            writeln!(out, "n\tsamples\tapparent degree in s").unwrap();
            for d in &degrees {
                let deg = d.apparent_degree.map_or("?".to_string(), |x| x.to_string());
                writeln!(out, "{}\t{}\t{deg}", d.n, d.samples).unwrap();
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "s": r.s, "poly": poly_json(&r.poly), "sum": big(&r.sum), "sum_ok": r.sum_ok }))
                .collect();
            let degrees: Vec<Value> = degrees
                .iter()
                .map(|d| json!({ "n": d.n, "samples": d.samples, "apparent_degree": d.apparent_degree }))
                .collect();
            writeln!(out, "{}", json!({ "rows": rows, "columns": degrees })).unwrap();
        }
        Format::Csv => {
            writeln!(out, "s,sum,sum_ok,coefficients").unwrap();
            for r in &rows {
                let coeffs: Vec<String> = r.poly.coeffs().iter().map(|c| c.to_string()).collect();
                writeln!(out, "{},{},{},{}", r.s, r.sum, r.sum_ok, coeffs.join("|")).unwrap();
            }
        }
    }
    Ok(Report { output: out, ok })
}
