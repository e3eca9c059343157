//! Command-line front end: argument model, command dispatch and rendering.
//!
//! [`run`] returns the full rendered output together with a verdict, so the
//! binary only has to pick an exit code.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coreab_core::enumerate::{correspondence_holds, parts_poly, BUDGET_ENV, DEFAULT_BUDGET};
use coreab_core::stats::{self, closed_forms, FamilyMode};
use coreab_core::{
    abacus_poly, abacus_poly_bruteforce, enumerate_abaci, enumerate_core_distinct,
    enumerate_family, partition_to_composition, Budget, Error, Params, Partition, QPolynomial,
    Result,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub mod explore;
pub mod verify;

/// Inclusive integer range written `a` or `a..b`; negative bounds allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn single(v: i64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn iter(self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Self { lo, hi })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Brute,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Recurrences,
    Identities,
    Stats,
    Bijections,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Core,
    Abacus,
}

#[derive(Parser, Debug)]
#[command(
    name = "coreab",
    version,
    about = "Core partitions into d-distinct parts and their abaci"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest gap set an exhaustive core enumeration may walk.
    #[arg(long, global = true, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

/// `--s`, `--m`, `--r`, `--d`, each a value or an inclusive range.
#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub s: IntRange,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<IntRange>,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub d: IntRange,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bead-count polynomial of the abacus family (s, m, r, d).
    Poly {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
    },
    /// List (s, t)-core partitions into d-distinct parts, or the abaci of a
    /// family with --abaci.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        abaci: bool,
    },
    /// Run a verification suite against the brute-force oracles.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        max_s: i64,
        #[arg(long, default_value_t = 12)]
        max_st: i64,
    },
    /// Counts, parts and moments of a family (with --m/--r), or size
    /// statistics of all (s, t)-cores (with --t).
    Stats {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 2)]
        moments: usize,
        #[arg(long, value_enum, default_value_t = Mode::Core)]
        mode: Mode,
    },
    /// Partition to composition table for (s, 2s-1)-cores into distinct parts.
    Bijection {
        #[arg(long, allow_hyphen_values = true)]
        s: IntRange,
    },
    /// Coefficients of the (s, s+2)-core distinct-parts polynomial for odd s.
    ExploreQ {
        #[arg(long, allow_hyphen_values = true, default_value = "1..15")]
        s: IntRange,
    },
}

/// Rendered output plus whether every check in it passed.
#[derive(Debug, Default)]
pub struct Report {
    pub output: String,
    pub ok: bool,
}

pub const EXIT_VERIFICATION: u8 = 3;

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => 4,
        Error::NonCoprime { .. } => 5,
        _ => 2,
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    let budget = Budget::new(cli.budget as usize)?;
    match &cli.command {
        Command::Poly { family, method } => cmd_poly(family, *method, cli.format),
        Command::Enumerate { family, abaci } => cmd_enumerate(family, *abaci, cli.format),
        Command::Verify {
            suite,
            max_s,
            max_st,
        } => Ok(verify::run_suite(*suite, *max_s, *max_st, cli.format)),
        Command::Stats {
            family,
            moments,
            mode,
        } => cmd_stats(family, *moments, *mode, budget, cli.format),
        Command::Bijection { s } => cmd_bijection(*s, cli.format),
        Command::ExploreQ { s } => explore::run(*s, cli.format),
    }
}

pub fn big(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse()
            .expect("integers are valid JSON numbers"),
    )
}

pub fn poly_json(p: &QPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

fn params_json(p: &Params) -> Value {
    json!({ "s": p.s, "m": p.m, "r": p.r, "d": p.d })
}

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn pipe_list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("|")
}

fn require(range: Option<IntRange>, name: &str) -> Result<IntRange> {
    range.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required here")))
}

fn family_grid(f: &FamilyArgs) -> Result<Vec<Params>> {
    if f.t.is_some() {
        return Err(Error::InvalidParameter(
            "--t does not apply here; give --m and --r".into(),
        ));
    }
    let (m, r) = (require(f.m, "m")?, require(f.r, "r")?);
    let mut out = Vec::new();
    for s in f.s.iter() {
        for m in m.iter() {
            for r in r.iter() {
                for d in f.d.iter() {
                    out.push(Params::new(s, m, r, d)?);
                }
            }
        }
    }
    Ok(out)
}

fn cmd_poly(family: &FamilyArgs, method: Method, format: Format) -> Result<Report> {
    let mut report = Report {
        ok: true,
        ..Default::default()
    };
    let out = &mut report.output;
    if format == Format::Csv {
        out.push_str("s,m,r,d,degree,count,coefficients\n");
    }
    for p in family_grid(family)? {
        let (poly, equal) = match method {
            Method::Recurrence => (abacus_poly(&p), None),
            Method::Brute => (abacus_poly_bruteforce(&p), None),
            Method::Both => {
                let rec = abacus_poly(&p);
                let eq = rec == abacus_poly_bruteforce(&p);
                (rec, Some(eq))
            }
        };
        if equal == Some(false) {
            report.ok = false;
        }
        let count = poly.eval_at_one();
        match format {
            Format::Text => {
                write!(out, "{p}  count={count}  poly={poly}").unwrap();
                if let Some(eq) = equal {
                    write!(out, "  equal={eq}").unwrap();
                }
                out.push('\n');
            }
            Format::Json => {
                let mut rec = json!({ "params": params_json(&p), "count": big(&count), "poly": poly_json(&poly) });
                if let Some(eq) = equal {
                    rec["equal"] = json!(eq);
                }
                writeln!(out, "{rec}").unwrap();
            }
            Format::Csv => {
                let degree = poly.degree().map_or(String::new(), |d| d.to_string());
                writeln!(
                    out,
                    "{},{},{},{},{degree},{count},{}",
                    p.s,
                    p.m,
                    p.r,
                    p.d,
                    pipe_list(poly.coeffs())
                )
                .unwrap();
            }
        }
    }
    Ok(report)
}

/// `(s, t)`-core partitions into `d`-distinct parts; non-coprime `t` is read
/// through the abacus family when some way of writing `t = ms + r` has the
/// correspondence.
fn core_family_by_t(s: i64, t: i64, d: i64) -> Result<Vec<Partition>> {
    match enumerate_core_distinct(s, t, d) {
        Err(Error::NonCoprime { .. }) => {
            let (m, r) = (t.div_euclid(s), t.rem_euclid(s));
            [(m, r), (m + 1, r - s)]
                .into_iter()
                .filter(|&(m, _)| m >= 1)
                .filter_map(|(m, r)| Params::new(s, m, r, d).ok())
                .find(correspondence_holds)
                .map_or(Err(Error::NonCoprime { s, t }), |p| enumerate_family(&p))
        }
        other => other,
    }
}

fn cmd_enumerate(family: &FamilyArgs, abaci: bool, format: Format) -> Result<Report> {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str(if abaci {
            "s,m,r,d,index,beads\n"
        } else {
            "s,t,d,index,parts\n"
        });
    }
    if abaci {
        for p in family_grid(family)? {
            let list = enumerate_abaci(&p)?;
            match format {
                Format::Text => {
                    writeln!(out, "# {p} count={}", list.len()).unwrap();
                    for a in &list {
                        writeln!(out, "beads {}", pipe_list(a.beads())).unwrap();
                        out.push_str(&a.render());
                    }
                }
                Format::Json => {
                    let items: Vec<Value> = list.iter().map(|a| json!(a.beads())).collect();
                    let counts: Vec<u64> = bead_counts(list.iter().map(|a| a.bead_count()));
                    writeln!(
                        out,
                        "{}",
                        json!({ "params": params_json(&p), "count": list.len(),
                                "poly": poly_json(&QPolynomial::from_counts(&counts)), "items": items })
                    )
                    .unwrap();
                }
                Format::Csv => {
                    for (i, a) in list.iter().enumerate() {
                        writeln!(
                            out,
                            "{},{},{},{},{i},{}",
                            p.s,
                            p.m,
                            p.r,
                            p.d,
                            pipe_list(a.beads())
                        )
                        .unwrap();
                    }
                }
            }
        }
        return Ok(Report {
            output: out,
            ok: true,
        });
    }

    let mut tuples = Vec::new();
    match family.t {
        Some(t) => {
            if family.m.is_some() || family.r.is_some() {
                return Err(Error::InvalidParameter(
                    "give either --t or --m with --r, not both".into(),
                ));
            }
            for s in family.s.iter() {
                for t in t.iter() {
                    for d in family.d.iter() {
                        tuples.push((s, t, d, core_family_by_t(s, t, d)?));
                    }
                }
            }
        }
        None => {
            for p in family_grid(family)? {
                tuples.push((p.s, p.t(), p.d, enumerate_family(&p)?));
            }
        }
    }
    for (s, t, d, list) in tuples {
        match format {
            Format::Text => {
                writeln!(out, "# s={s} t={t} d={d} count={}", list.len()).unwrap();
                for p in &list {
                    writeln!(out, "{p}").unwrap();
                }
            }
            Format::Json => {
                let items: Vec<Value> = list.iter().map(parts_json).collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "params": { "s": s, "t": t, "d": d }, "count": list.len(),
                            "poly": poly_json(&parts_poly(&list)), "items": items })
                )
                .unwrap();
            }
            Format::Csv => {
                for (i, p) in list.iter().enumerate() {
                    writeln!(out, "{s},{t},{d},{i},{}", pipe_list(p.parts())).unwrap();
                }
            }
        }
    }
    Ok(Report {
        output: out,
        ok: true,
    })
}

fn bead_counts(counts: impl Iterator<Item = usize>) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for n in counts {
        if out.len() <= n {
            out.resize(n + 1, 0);
        }
        out[n] += 1;
    }
    out
}

fn cmd_stats(
    family: &FamilyArgs,
    moments: usize,
    mode: Mode,
    budget: Budget,
    format: Format,
) -> Result<Report> {
    let mut out = String::new();
    if let Some(t) = family.t {
        if family.m.is_some() || family.r.is_some() {
            return Err(Error::InvalidParameter(
                "give either --t or --m with --r, not both".into(),
            ));
        }
        if format == Format::Csv {
            out.push_str("s,t,count,max_size,average_size,max_parts\n");
        }
        for s in family.s.iter() {
            for t in t.iter() {
                let e = stats::core_size_extremes(s, t, budget)?;
                match format {
                    Format::Text => {
                        writeln!(out, "s={s} t={t}").unwrap();
                        writeln!(
                            out,
                            "  count        {}  (closed form {})",
                            e.count,
                            closed_forms::core_count(s, t)
                        )
                        .unwrap();
                        writeln!(
                            out,
                            "  max size     {}  (closed form {})",
                            e.max_size,
                            closed_forms::max_core_size(s, t)
                        )
                        .unwrap();
                        writeln!(
                            out,
                            "  average size {}  (closed form {})",
                            e.average_size,
                            closed_forms::average_core_size(s, t)
                        )
                        .unwrap();
                        writeln!(out, "  max parts    {}", e.max_parts).unwrap();
                    }
                    Format::Json => {
                        writeln!(
                            out,
                            "{}",
                            json!({ "params": { "s": s, "t": t }, "count": big(&e.count), "max_size": big(&e.max_size),
                                    "average_size": e.average_size.to_string(), "max_parts": e.max_parts })
                        )
                        .unwrap();
                    }
                    Format::Csv => {
                        writeln!(
                            out,
                            "{s},{t},{},{},{},{}",
                            e.count, e.max_size, e.average_size, e.max_parts
                        )
                        .unwrap();
                    }
                }
            }
        }
        return Ok(Report {
            output: out,
            ok: true,
        });
    }

    let family_mode = match mode {
        Mode::Core => FamilyMode::Core,
        Mode::Abacus => FamilyMode::Abacus,
    };
    if format == Format::Csv {
        out.push_str("s,m,r,d,count,total_parts,average,factorial_moments\n");
    }
    for p in family_grid(family)? {
        let rep = stats::moment_report(&p, moments, family_mode)?;
        let bound = match mode {
            Mode::Core => stats::max_parts_formula(p.s, p.m, p.r, p.d).ok(),
            Mode::Abacus => stats::max_beads_formula(p.s, p.m, p.r, p.d).ok(),
        };
        match format {
            Format::Text => {
                writeln!(out, "{p}").unwrap();
                writeln!(out, "  count        {}", rep.count).unwrap();
                writeln!(out, "  total parts  {}", rep.total_parts).unwrap();
                writeln!(out, "  average      {}", rep.average).unwrap();
                for (k, v) in rep.factorial_moments.iter().enumerate() {
                    writeln!(out, "  moment {}     {v}", k + 1).unwrap();
                }
                if let Some(b) = bound {
                    writeln!(out, "  max parts    {b}").unwrap();
                }
            }
            Format::Json => {
                let moments: Vec<Value> = rep.factorial_moments.iter().map(big).collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "params": params_json(&p), "count": big(&rep.count), "total_parts": big(&rep.total_parts),
                            "average": rep.average.to_string(), "factorial_moments": moments, "max_parts": bound })
                )
                .unwrap();
            }
            Format::Csv => {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    p.s,
                    p.m,
                    p.r,
                    p.d,
                    rep.count,
                    rep.total_parts,
                    rep.average,
                    pipe_list(&rep.factorial_moments)
                )
                .unwrap();
            }
        }
    }
    Ok(Report {
        output: out,
        ok: true,
    })
}

fn cmd_bijection(s: IntRange, format: Format) -> Result<Report> {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("s,partition,composition\n");
    }
    for s in s.iter() {
        if s < 1 {
            return Err(Error::InvalidParameter(format!("s must be >= 1, got {s}")));
        }
        let family = enumerate_family(&Params::new(s, 2, -1, 1)?)?;
        let rows = family
            .iter()
            .map(|p| Ok((p, partition_to_composition(p, s as u64)?)))
            .collect::<Result<Vec<_>>>()?;
        match format {
            Format::Text => {
                writeln!(out, "# s={s} count={}", rows.len()).unwrap();
                for (p, c) in &rows {
                    writeln!(out, "{p} -> {c}").unwrap();
                }
            }
            Format::Json => {
                let items: Vec<Value> = rows
                    .iter()
                    .map(|(p, c)| json!({ "partition": p.parts(), "composition": c.parts() }))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "params": { "s": s }, "count": rows.len(), "items": items })
                )
                .unwrap();
            }
            Format::Csv => {
                for (p, c) in &rows {
                    writeln!(out, "{s},{},{}", pipe_list(p.parts()), pipe_list(c.parts())).unwrap();
                }
            }
        }
    }
    Ok(Report {
        output: out,
        ok: true,
    })
}
