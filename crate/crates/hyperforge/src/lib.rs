//! Incidence geometries, coset enumeration and the halving operation on
//! regular hypertopes.
//!
//! The crate is organised bottom-up:
//!
//! * [`incidence`] — incidence geometries and their structural operations
//!   (residues, chambers, residual connectedness, isomorphism, diagrams).
//! * [`group`] — presentations by involutions, Todd–Coxeter enumeration,
//!   permutation groups, coset geometries and halving subgroups.
//! * [`constructions`] — parity classes, partitioned neighbourhood
//!   geometries and the combinatorial halving constructions.
//! * [`toroid`] — the cubic toroid family, its halved presentations and the
//!   family verification driver.
//! * [`io`] — DOT output for diagrams.

pub mod constructions;
pub mod error;
pub mod group;
pub mod incidence;
pub mod io;
pub mod toroid;

pub use error::{Error, Result};
pub use group::{PermGroup, Presentation};
pub use incidence::IncidenceGeometry;

/// Environment variable overriding the default coset ceiling.
pub const MAX_COSETS_ENV: &str = "HYPERFORGE_MAX_COSETS";

/// Ceilings guarding the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of simultaneously defined cosets.
    pub max_cosets: usize,
    /// Maximum number of flags visited by flag scans.
    pub max_flags: usize,
    /// Maximum number of chambers enumerated.
    pub max_chambers: usize,
}

impl Default for Limits {
    /// Five million cosets (or the value of `HYPERFORGE_MAX_COSETS`), one
    /// million flags and eight million chambers.
    fn default() -> Self {
        let max_cosets = std::env::var(MAX_COSETS_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(5_000_000);
        Limits { max_cosets, max_flags: 1_000_000, max_chambers: 8_000_000 }
    }
}
