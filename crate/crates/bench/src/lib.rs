//! Shared fixtures for the criterion benchmarks.

use hessenberg_core::{RootSystem, RootType, WeylGroup, DEFAULT_GROUP_BUDGET};

/// Builds the Weyl group of a valid finite type, panicking otherwise.
pub fn group(kind: RootType, rank: usize) -> WeylGroup {
    let rs = RootSystem::new(kind, rank).expect("valid type");
    WeylGroup::generate(rs, DEFAULT_GROUP_BUDGET).expect("within budget")
}
