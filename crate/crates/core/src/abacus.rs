//! The `s`-abacus: a sparse set of bead positions on an array with `s`
//! columns, where position `p` sits in row `p / s` and column `p % s`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{BetaSet, Partition};

/// The quadruple `(s, m, r, d)` indexing the abacus family of `s`-core abaci
/// with spacing `d` and every bead position strictly below `m s + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub s: i64,
    pub m: i64,
    pub r: i64,
    pub d: i64,
}

impl Params {
    pub fn new(s: i64, m: i64, r: i64, d: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidParameter(format!("m must be >= 1, got {m}")));
        }
        if d < 1 {
            return Err(Error::InvalidParameter(format!("d must be >= 1, got {d}")));
        }
        m.checked_mul(s)
            .and_then(|ms| ms.checked_add(r))
            .ok_or_else(|| Error::InvalidParameter("m*s + r overflows".into()))?;
        Ok(Self { s, m, r, d })
    }

    /// Exclusive upper bound `m s + r` on bead positions.
    pub fn limit(&self) -> i64 {
        self.m * self.s + self.r
    }

    /// The second core parameter `t = m s + r`.
    pub fn t(&self) -> i64 {
        self.limit()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} m={} r={} d={}", self.s, self.m, self.r, self.d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abacus {
    columns: u64,
    /// Ascending, distinct.
    beads: Vec<u64>,
}

impl Abacus {
    pub fn new(columns: u64, beads: impl IntoIterator<Item = u64>) -> Result<Self> {
        if columns == 0 {
            return Err(Error::InvalidParameter(
                "an abacus needs at least one column".into(),
            ));
        }
        let mut beads: Vec<u64> = beads.into_iter().collect();
        beads.sort_unstable();
        if beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "repeated bead in {beads:?}"
            )));
        }
        Ok(Self { columns, beads })
    }

    pub fn empty(columns: u64) -> Self {
        assert!(columns >= 1, "an abacus needs at least one column");
        Self {
            columns,
            beads: Vec::new(),
        }
    }

    /// Places the first column hook lengths of `p` on an `s`-abacus.
    pub fn from_partition(p: &Partition, s: u64) -> Self {
        assert!(s >= 1, "an abacus needs at least one column");
        let mut beads = p.to_beta().hooks().to_vec();
        beads.reverse();
        Self { columns: s, beads }
    }

    pub fn to_partition(&self) -> Partition {
        // Position 0 has no partition meaning; core abaci never use it.
        let beta = BetaSet::from_positions(self.beads.iter().copied())
            .expect("bead at position 0 cannot be read as a partition");
        Partition::from_beta(&beta)
    }

    pub fn columns(&self) -> u64 {
        self.columns
    }

    pub fn beads(&self) -> &[u64] {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    pub fn max_position(&self) -> Option<u64> {
        self.beads.last().copied()
    }

    pub fn has_bead(&self, p: u64) -> bool {
        self.beads.binary_search(&p).is_ok()
    }

    /// Number of beads in column `c`.
    pub fn column_height(&self, c: u64) -> usize {
        self.beads
            .iter()
            .filter(|&&p| p % self.columns == c)
            .count()
    }

    /// Empty first column and no spacer below a bead.
    pub fn is_core(&self) -> bool {
        let s = self.columns;
        self.beads
            .iter()
            .all(|&p| p % s != 0 && (p < s || self.has_bead(p - s)))
    }

    /// All pairs of bead positions differ by more than `d`.
    pub fn has_spacing(&self, d: u64) -> bool {
        self.beads.windows(2).all(|w| w[1] - w[0] > d)
    }

    pub fn in_family(&self, params: &Params) -> bool {
        if params.s != self.columns as i64 {
            return false;
        }
        let below_limit = match self.max_position() {
            None => true,
            Some(p) => (p as i64) < params.limit(),
        };
        self.is_core() && self.has_spacing(params.d as u64) && below_limit
    }

    /// Deletes `count` consecutive columns starting at `first` and re-reads the
    /// remaining beads row-major on the narrower abacus.
    pub fn delete_columns(&self, first: u64, count: u64) -> Result<Abacus> {
        let s = self.columns;
        if count == 0 || first + count > s || count >= s {
            return Err(Error::PreconditionViolated(format!(
                "cannot delete columns {first}..{} of a {s}-abacus",
                first + count
            )));
        }
        let narrow = s - count;
        let beads = self
            .beads
            .iter()
            .filter_map(|&p| {
                let (row, col) = (p / s, p % s);
                if (first..first + count).contains(&col) {
                    None
                } else {
                    let col = if col < first { col } else { col - count };
                    Some(row * narrow + col)
                }
            })
            .collect();
        Ok(Abacus {
            columns: narrow,
            beads,
        })
    }

    /// Removes the last `d + 1` columns (not all empty) of an `s`-core abacus
    /// with spacing `d`; the result is an `(s - d - 1)`-core abacus with
    /// spacing `d`.
    pub fn remove_last_columns(&self, d: u64) -> Result<Abacus> {
        let s = self.columns;
        if s <= d + 1 {
            return Err(Error::PreconditionViolated(format!(
                "need s > d + 1, got s = {s}, d = {d}"
            )));
        }
        if !self.is_core() || !self.has_spacing(d) {
            return Err(Error::PreconditionViolated(
                "input must be a core abacus with the given spacing".into(),
            ));
        }
        let first = s - d - 1;
        if !self.beads.iter().any(|&p| p % s >= first) {
            return Err(Error::PreconditionViolated(format!(
                "the last {} columns are all empty",
                d + 1
            )));
        }
        self.delete_columns(first, d + 1)
    }

    /// One line per row, `.` for a spacer and `o` for a bead. The highest row
    /// is printed first, so row 0 is the bottom line.
    pub fn render(&self) -> String {
        let s = self.columns;
        let rows = self.max_position().map_or(1, |p| p / s + 1);
        let mut out = String::with_capacity((rows * (s + 1)) as usize);
        for row in (0..rows).rev() {
            for col in 0..s {
                out.push(if self.has_bead(row * s + col) {
                    'o'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
