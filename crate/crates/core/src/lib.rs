//! Generating polynomials, enumeration and bijections for `(s, ms + r)`-core
//! partitions into `d`-distinct parts and their `s`-core abaci.
//!
//! Every count is exact: polynomials carry arbitrary-precision coefficients
//! and averages are rationals.

pub mod abacus;
pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod partition;
pub mod poly;
pub mod recurrence;
pub mod stats;

pub use abacus::{Abacus, Params};
pub use bijection::{
    composition_to_partition, gap_correspondence, maximal_gap_members, partition_to_composition,
    Composition,
};
pub use enumerate::{
    abacus_poly_bruteforce, core_parts_poly_bruteforce, enumerate_abaci, enumerate_all_core,
    enumerate_core_distinct, enumerate_family, Budget,
};
pub use error::{Error, Result};
pub use partition::{BetaSet, Partition};
pub use poly::QPolynomial;
pub use recurrence::{
    abacus_poly, canonicalize, check_recurrence, core_poly, initial_poly, rneg_decomposition_check,
    rnegpos_identity_check, AbacusPolys, CanonicalParams, RecurrenceRule,
};
pub use stats::{moment_report, FamilyMode, MomentReport};
