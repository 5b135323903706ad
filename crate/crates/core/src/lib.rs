//! Combinatorics of regular Hessenberg varieties.
//!
//! Root systems of types A–G ([`rootsys`]), their Weyl groups ([`weyl`]),
//! Hessenberg spaces and subsets of Weyl type ([`hessenberg`]), Betti
//! numbers from cell counts ([`betti`]), the witness bijections behind
//! palindromicity ([`bijection`]), and an exhaustive verification sweep
//! ([`sweep`]).

pub mod betti;
pub mod bijection;
pub mod error;
pub mod hessenberg;
pub mod mask;
pub mod rootsys;
pub mod sweep;
pub mod weyl;

pub use betti::{BettiProfile, WitnessPartition};
pub use bijection::{BijectionRecord, Bijector};
pub use error::{Error, Result};
pub use hessenberg::{HessenbergSpace, WeylTypeSubset};
pub use mask::RootMask;
pub use rootsys::{parse_system_label, RootIndex, RootSystem, RootType, SimpleSubset};
pub use sweep::{run_sweep, CaseRecord, SweepConfig, SweepReport, Violation};
pub use weyl::{ParabolicData, WeylElement, WeylGroup, DEFAULT_GROUP_BUDGET};
