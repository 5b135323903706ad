//! Exhaustive verification over root systems, Hessenberg spaces and subsets
//! `J ⊆ Δ`.
//!
//! Every check is named; a failing check appends a [`Violation`] instead of
//! aborting, so one run reports every counterexample it meets. Work is split
//! across Hessenberg spaces and collected in canonical order, so the report
//! does not depend on the worker count.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{
    betti_profile, cell_dimension, cell_nonempty, hessenberg_dimension, witness_partition,
    WitnessPartition,
};
use crate::bijection::{coset_transfer, dual_subset, nilpotent_complement, Bijector};
use crate::error::{Error, Result};
use crate::hessenberg::{
    enumerate_hessenberg_spaces, from_type_a_function, levi_hessenberg, to_type_a_function,
    validate_mask, weyl_type_subsets, weyl_type_subsets_brute_force, HessenbergSpace,
    DEFAULT_SPACE_BUDGET,
};
use crate::mask::RootMask;
use crate::rootsys::{expected_positive_roots, RootIndex, RootSystem, RootType, SimpleSubset};
use crate::weyl::{expected_order, WeylElement, WeylGroup, DEFAULT_GROUP_BUDGET};

pub const REPORT_SCHEMA: &str = "hessenberg-verify/1";
pub const DEFAULT_RANK_CAP: usize = 6;
pub const DEFAULT_ORACLE_MAX_M_H: usize = 12;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_rank: usize,
    /// Types to include; empty means all.
    pub types: Vec<RootType>,
    /// Systems added regardless of `max_rank` and `types`.
    pub extra_systems: Vec<(RootType, usize)>,
    pub jobs: usize,
    pub group_budget: usize,
    pub rank_cap: usize,
    /// Spaces with `m_H` up to this get the brute-force Weyl-type oracle.
    pub oracle_max_m_h: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_rank: 3,
            types: Vec::new(),
            extra_systems: Vec::new(),
            jobs: 1,
            group_budget: DEFAULT_GROUP_BUDGET,
            rank_cap: DEFAULT_RANK_CAP,
            oracle_max_m_h: DEFAULT_ORACLE_MAX_M_H,
        }
    }
}

impl SweepConfig {
    /// The systems to sweep, sorted by type then rank, after budget checks.
    pub fn systems(&self) -> Result<Vec<(RootType, usize)>> {
        let types: &[RootType] = if self.types.is_empty() {
            &RootType::ALL
        } else {
            &self.types
        };
        let mut out: BTreeSet<(RootType, usize)> = types
            .iter()
            .flat_map(|&t| t.ranks_up_to(self.max_rank).map(move |r| (t, r)))
            .collect();
        for &(t, r) in &self.extra_systems {
            t.check_rank(r).map_err(|c| Error::InvalidType {
                label: t.to_string(),
                rank: r,
                constraint: c.to_string(),
            })?;
            out.insert((t, r));
        }
        for &(t, r) in &out {
            if r > self.rank_cap {
                return Err(Error::BudgetExceeded {
                    what: format!("rank {r} of {t}{r}"),
                    cap: self.rank_cap,
                });
            }
            if expected_order(t, r) > self.group_budget as u64 {
                return Err(Error::BudgetExceeded {
                    what: format!("Weyl group order {} of {t}{r}", expected_order(t, r)),
                    cap: self.group_budget,
                });
            }
        }
        Ok(out.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub system: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<Vec<Vec<i32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<usize>>,
    pub check: String,
    pub detail: String,
}

/// One `(system, H, J)` case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub system: String,
    pub space: Vec<Vec<i32>>,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
    pub m_h: usize,
    pub counts: Vec<u64>,
    pub palindromic: bool,
    pub irreducible: bool,
    pub weyl_type_subsets: usize,
    /// How many `w` return to themselves under the forward map followed by
    /// the map for `(K, Sᶜ)`. Recorded, never asserted.
    pub round_trip_fixed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SystemSummary {
    pub label: String,
    pub rank: usize,
    pub roots: usize,
    pub weyl_order: usize,
    pub hessenberg_spaces: usize,
    pub cases: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub max_rank: usize,
    pub types: String,
    pub systems: Vec<String>,
    pub group_budget: usize,
    pub rank_cap: usize,
    pub oracle_max_m_h: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub config: ConfigEcho,
    pub systems: Vec<SystemSummary>,
    pub cases_checked: usize,
    /// Number of times each named check was evaluated.
    pub checks: BTreeMap<String, u64>,
    pub violations: Vec<Violation>,
    pub cases: Vec<CaseRecord>,
    /// Excluded from serialization so reports stay byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Violations of checks whose name is in `names`.
    pub fn violations_of<'a>(&'a self, names: &'a [&str]) -> impl Iterator<Item = &'a Violation> {
        self.violations
            .iter()
            .filter(move |v| names.contains(&v.check.as_str()))
    }

    pub fn check_count(&self, name: &str) -> u64 {
        self.checks.get(name).copied().unwrap_or(0)
    }
}

/// Collects check outcomes under a fixed context.
struct Checker {
    system: String,
    space: Option<Vec<Vec<i32>>>,
    j: Option<Vec<usize>>,
    violations: Vec<Violation>,
    counts: BTreeMap<&'static str, u64>,
}

impl Checker {
    fn new(system: String) -> Self {
        Checker {
            system,
            space: None,
            j: None,
            violations: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        *self.counts.entry(name).or_insert(0) += 1;
        if !ok {
            self.violations.push(Violation {
                system: self.system.clone(),
                space: self.space.clone(),
                j: self.j.clone(),
                check: name.to_string(),
                detail: detail(),
            });
        }
        ok
    }

    fn fail(&mut self, name: &'static str, err: Error) {
        self.check(name, false, || err.to_string());
    }

    fn absorb(&mut self, other: Checker) {
        self.violations.extend(other.violations);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let systems = config.systems()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;

    let mut summaries = Vec::new();
    let mut cases = Vec::new();
    let mut all = Checker::new(String::new());

    for &(kind, rank) in &systems {
        let rs = RootSystem::new(kind, rank)?;
        let group = WeylGroup::generate(rs, config.group_budget)?;
        let label = group.root_system().label();
        let spaces = enumerate_hessenberg_spaces(group.root_system(), DEFAULT_SPACE_BUDGET)?;

        let (sys_checks, space_results) = pool.install(|| {
            let sys = {
                let mut c = Checker::new(label.clone());
                structural_checks(&group, &mut c);
                decomposition_checks(&group, &mut c);
                c
            };
            let per_space: Vec<(Vec<CaseRecord>, Checker)> = spaces
                .par_iter()
                .map(|space| space_task(&group, space, config))
                .collect();
            (sys, per_space)
        });
        all.absorb(sys_checks);

        let mut n_cases = 0;
        for (recs, checker) in space_results {
            n_cases += recs.len();
            cases.extend(recs);
            all.absorb(checker);
        }
        let expected_cases = spaces.len() << rank;
        let mut c = Checker::new(label.clone());
        c.check("case-count", n_cases == expected_cases, || {
            format!("{n_cases} cases, expected {expected_cases}")
        });
        all.absorb(c);

        summaries.push(SystemSummary {
            label,
            rank,
            roots: group.root_system().len(),
            weyl_order: group.order(),
            hessenberg_spaces: spaces.len(),
            cases: n_cases,
        });
    }

    let types = if config.types.is_empty() {
        RootType::ALL.iter().map(|t| t.letter()).collect()
    } else {
        config.types.iter().map(|t| t.letter()).collect()
    };
    Ok(SweepReport {
        schema: REPORT_SCHEMA,
        tool_version: env!("CARGO_PKG_VERSION"),
        config: ConfigEcho {
            max_rank: config.max_rank,
            types,
            systems: systems.iter().map(|(t, r)| format!("{t}{r}")).collect(),
            group_budget: config.group_budget,
            rank_cap: config.rank_cap,
            oracle_max_m_h: config.oracle_max_m_h,
        },
        cases_checked: cases.len(),
        systems: summaries,
        checks: all
            .counts
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        violations: all.violations,
        cases,
        wall_time: start.elapsed(),
    })
}

/// Root table and group invariants.
fn structural_checks(group: &WeylGroup, c: &mut Checker) {
    let rs = group.root_system();
    let (kind, rank) = (rs.kind(), rs.rank());
    let npos = rs.num_positive();
    let n = rs.len();

    let expected_pos = expected_positive_roots(kind, rank);
    c.check("root-count", npos == expected_pos && n == 2 * npos, || {
        format!("|Φ⁺| = {npos}, |Φ| = {n}, expected |Φ⁺| = {expected_pos}")
    });
    let expected_w = expected_order(kind, rank);
    c.check("weyl-order", group.order() as u64 == expected_w, || {
        format!("|W| = {}, expected {expected_w}", group.order())
    });

    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        c.check(
            "simple-roots-first",
            rs.coefficients(rs.simple(i)) == e,
            || format!("root {i} is {:?}", rs.coefficients(rs.simple(i))),
        );
    }
    let distinct: HashSet<&[i32]> = rs.roots().iter().map(Vec::as_slice).collect();
    c.check(
        "root-table",
        distinct.len() == n && rs.roots().iter().all(|v| v.iter().any(|&x| x != 0)),
        || "duplicate or zero root".into(),
    );
    for a in (0..n).map(|a| RootIndex(a as u8)) {
        let neg: Vec<i32> = rs.coefficients(a).iter().map(|x| -x).collect();
        let signs_ok = if rs.is_positive(a) {
            rs.coefficients(a).iter().all(|&x| x >= 0)
        } else {
            rs.coefficients(a).iter().all(|&x| x <= 0)
        };
        c.check(
            "negation-closed",
            rs.coefficients(rs.negate(a)) == neg.as_slice() && signs_ok,
            || format!("root {:?}", rs.coefficients(a)),
        );
    }
    for k in rank..npos {
        let g = RootIndex(k as u8);
        let ok = (0..rank).any(|i| {
            rs.root_sum(g, rs.negate(rs.simple(i)))
                .is_some_and(|p| rs.is_positive(p))
        });
        c.check("height-induction", ok, || {
            format!("{:?} has no positive predecessor", rs.coefficients(g))
        });
    }

    let mut sum_triples = Vec::new();
    for a in (0..n).map(|a| RootIndex(a as u8)) {
        for b in (0..n).map(|b| RootIndex(b as u8)) {
            let s = rs.root_sum(a, b);
            let neg_ok = match s {
                Some(x) => rs.root_sum(rs.negate(a), rs.negate(b)) == Some(rs.negate(x)),
                None => true,
            };
            if !c.check(
                "root-sum-symmetry",
                s == rs.root_sum(b, a) && neg_ok,
                || format!("{:?} + {:?}", rs.coefficients(a), rs.coefficients(b)),
            ) {
                continue;
            }
            if let Some(x) = s {
                sum_triples.push((a, b, x));
            }
        }
    }
    for j in SimpleSubset::all(rank) {
        let ok = sum_triples.iter().all(|&(a, b, x)| {
            !(rs.supported_on(a, j) && rs.supported_on(b, j)) || rs.supported_on(x, j)
        });
        c.check("subsystem-closed", ok, || format!("Φ_J for J = {j}"));
    }

    let mut masks = HashSet::new();
    for w in group.elements() {
        let perm_neg = (0..n).all(|a| {
            let a = RootIndex(a as u8);
            group.apply(w, rs.negate(a)) == rs.negate(group.apply(w, a))
        });
        c.check("perm-negation", perm_neg, || group.format_word(w));
        let perm_sum = sum_triples.iter().all(|&(a, b, x)| {
            rs.root_sum(group.apply(w, a), group.apply(w, b)) == Some(group.apply(w, x))
        });
        c.check("perm-sum", perm_sum, || group.format_word(w));
        let len = group.length(w);
        c.check(
            "length-inversions",
            len == group.inversions(w).len() && len == group.inversions(group.inverse(w)).len(),
            || format!("{}: ℓ = {len}", group.format_word(w)),
        );
        masks.insert(group.inversions(w));
    }
    c.check("inversion-injective", masks.len() == group.order(), || {
        format!(
            "{} distinct inversion sets for |W| = {}",
            masks.len(),
            group.order()
        )
    });
    c.check(
        "longest-element",
        group.inversions(group.longest_element()) == rs.all_positive(),
        || group.format_word(group.longest_element()),
    );
}

/// Parabolic decompositions, root-set identities and coset transfer, for
/// every `J` and `w`.
fn decomposition_checks(group: &WeylGroup, c: &mut Checker) {
    let rs = group.root_system();
    let npos = rs.num_positive();
    let w0 = group.longest_element();

    for j in SimpleSubset::all(rs.rank()) {
        c.j = Some(j.one_based());
        let par = group.parabolic(j);
        let phi_j = rs.subsystem_mask(j);
        let mut in_wj = vec![false; group.order()];
        for &y in &par.elements {
            in_wj[y.idx()] = true;
        }
        let mut in_min = vec![false; group.order()];
        for &v in &par.min_reps {
            in_min[v.idx()] = true;
        }

        c.check(
            "parabolic-order",
            par.elements.len() * par.min_reps.len() == group.order(),
            || {
                format!(
                    "|W_J| = {}, |Wᴶ| = {}",
                    par.elements.len(),
                    par.min_reps.len()
                )
            },
        );
        for &v in &par.min_reps {
            let shortest = par
                .elements
                .iter()
                .all(|&y| group.length(group.compose(y, v)) >= group.length(v));
            c.check("min-coset-shortest", shortest, || group.format_word(v));
        }
        for &y in &par.elements {
            for &v in &par.min_reps {
                let w = group.compose(y, v);
                c.check("decompose-unique", group.decompose(w, j) == (y, v), || {
                    format!("{}·{}", group.format_word(y), group.format_word(v))
                });
            }
            // W_J permutes Φ⁻ − Φ_J⁻
            let stable = (0..npos).filter(|&k| !phi_j.contains(k)).all(|k| {
                let img = group.apply(y, rs.neg_of(k));
                !rs.is_positive(img) && !phi_j.contains(rs.position(img))
            });
            c.check("parabolic-stability", stable, || group.format_word(y));
        }

        for w in group.elements() {
            let (y, v) = group.decompose(w, j);
            c.check(
                "decompose-product",
                group.compose(y, v) == w && in_wj[y.idx()] && in_min[v.idx()],
                || group.format_word(w),
            );
            c.check(
                "length-additivity",
                group.length(w) == group.length(y) + group.length(v),
                || group.format_word(w),
            );
            // N⁻(yv) = N⁻(v) ⊔ v⁻¹N⁻(y)
            let vinv = group.inverse(v);
            let mut moved = RootMask::EMPTY;
            let mut all_negative = true;
            for k in group.inversions(y).iter() {
                let img = group.apply(vinv, rs.neg_of(k));
                all_negative &= !rs.is_positive(img);
                moved.insert(rs.position(img));
            }
            let nv = group.inversions(v);
            c.check(
                "inversion-disjoint-union",
                all_negative
                    && nv.intersection(moved).is_empty()
                    && nv.union(moved) == group.inversions(w),
                || group.format_word(w),
            );
        }

        let k = dual_subset(group, j);
        let mut transfers: HashMap<WeylElement, WeylElement> = HashMap::new();
        for &v_j in &par.min_reps {
            match coset_transfer(group, j, v_j) {
                Ok(v_k) => {
                    let back = coset_transfer(group, k, v_k);
                    c.check(
                        "coset-transfer-symmetric",
                        back.as_ref() == Ok(&v_j),
                        || {
                            format!(
                                "{} ↦ {} ↦ {:?}",
                                group.format_word(v_j),
                                group.format_word(v_k),
                                back.map(|b| group.format_word(b))
                            )
                        },
                    );
                    transfers.insert(v_j, v_k);
                }
                Err(e) => c.fail("coset-transfer-symmetric", e),
            }
        }
        for w in group.elements() {
            let v_j = group.decompose(w, j).1;
            let v_k = group.decompose(group.compose(w0, w), k).1;
            c.check(
                "coset-transfer-consistent",
                transfers.get(&v_j) == Some(&v_k),
                || group.format_word(w),
            );
        }
    }
    c.j = None;
}

fn space_task(
    group: &WeylGroup,
    space: &HessenbergSpace,
    config: &SweepConfig,
) -> (Vec<CaseRecord>, Checker) {
    let rs = group.root_system();
    let rank = rs.rank();
    let label = rs.label();
    let coeffs = space.coefficient_vectors(rs);
    let mut c = Checker::new(label.clone());
    c.space = Some(coeffs.clone());
    let m_h = space.m_h();
    let neg = space.neg_mask();
    let delta = SimpleSubset::full(rank);
    let is_full = neg == rs.all_positive();

    c.check("hessenberg-closure", validate_mask(rs, neg).is_ok(), || {
        "enumerated space fails validation".into()
    });
    if let Some(h) = to_type_a_function(rs, space) {
        c.check(
            "type-a-round-trip",
            from_type_a_function(rs, &h).as_ref() == Ok(space),
            || format!("h = {h:?}"),
        );
    }

    // subsets of Weyl type
    let wt = weyl_type_subsets(group, space);
    let wt_set: BTreeSet<RootMask> = wt.iter().map(|s| s.members).collect();
    for s in &wt {
        c.check(
            "weyl-type-image",
            crate::hessenberg::is_weyl_type(rs, space, s.members).unwrap_or(false),
            || format!("{:?}", s.members),
        );
        c.check(
            "weyl-type-complement",
            wt_set.contains(&neg.difference(s.members)),
            || format!("{:?}", s.members),
        );
    }
    if m_h <= config.oracle_max_m_h {
        match weyl_type_subsets_brute_force(rs, space) {
            Ok(brute) => {
                c.check("weyl-type-oracle", brute == wt, || {
                    format!("{} by brute force, {} as images", brute.len(), wt.len())
                });
            }
            Err(e) => c.fail("weyl-type-oracle", e),
        }
    }
    if is_full {
        c.check("full-space-weyl-type", wt.len() == group.order(), || {
            format!("|𝒲ᴴ| = {} for H = 𝔤", wt.len())
        });
    }

    let partitions: Vec<WitnessPartition> = SimpleSubset::all(rank)
        .map(|j| witness_partition(group, j, space))
        .collect();

    // unique Δ-admissible representative per S
    let nil = &partitions[delta.0 as usize];
    let keys: BTreeSet<RootMask> = nil.blocks.keys().copied().collect();
    c.check("unique-rep-exists", keys == wt_set, || {
        format!(
            "{} subsets realized by Δ-admissible elements of {}",
            keys.len(),
            wt_set.len()
        )
    });
    for (s, block) in &nil.blocks {
        c.check("unique-rep-unique", block.len() == 1, || {
            format!("{} representatives for {s:?}", block.len())
        });
    }

    for block in nil.blocks.values() {
        let w = block[0];
        match nilpotent_complement(group, space, w) {
            Ok(wbar) => {
                let back = nilpotent_complement(group, space, wbar);
                c.check("nilpotent-involution", back.as_ref() == Ok(&w), || {
                    format!("{} ↦ {}", group.format_word(w), group.format_word(wbar))
                });
                c.check(
                    "nilpotent-dimension",
                    cell_dimension(group, wbar, space) == m_h - cell_dimension(group, w, space),
                    || group.format_word(w),
                );
            }
            Err(e) => c.fail("nilpotent-involution", e),
        }
    }

    let w_h = match hessenberg_dimension(group, space) {
        Ok((m, w_h)) => {
            c.check("hessenberg-dimension", m == m_h, || format!("m = {m}"));
            Some(w_h)
        }
        Err(e) => {
            c.fail("hessenberg-dimension", e);
            None
        }
    };

    let length_hist = {
        let mut h = vec![0u64; rs.num_positive() + 1];
        for w in group.elements() {
            h[group.length(w)] += 1;
        }
        h
    };

    let mut records = Vec::new();
    for j in SimpleSubset::all(rank) {
        c.j = Some(j.one_based());
        let k = dual_subset(group, j);
        let part = &partitions[j.0 as usize];
        let part_k = &partitions[k.0 as usize];
        let profile = betti_profile(group, j, space);
        let counts = &profile.counts;
        let counts_k = betti_profile(group, k, space).counts;

        c.check(
            "profile-shape",
            counts.len() == m_h + 1
                && profile.total_cells()
                    == group
                        .elements()
                        .filter(|&w| cell_nonempty(group, w, j, space))
                        .count() as u64,
            || format!("{counts:?}"),
        );
        c.check(
            "block-aggregation",
            part.betti_counts(m_h) == *counts,
            || {
                format!(
                    "blocks give {:?}, profile {counts:?}",
                    part.betti_counts(m_h)
                )
            },
        );
        c.check("palindrome", profile.is_palindromic(), || {
            format!("{counts:?}")
        });
        c.check(
            "dual-betti",
            counts.iter().rev().eq(counts_k.iter()),
            || format!("β(J) = {counts:?}, β(K) = {counts_k:?} for K = {k}"),
        );
        c.check("equal-betti", *counts == counts_k, || {
            format!("β(J) = {counts:?}, β(K) = {counts_k:?} for K = {k}")
        });

        c.check("max-cell", counts[m_h] >= 1, || format!("{counts:?}"));
        if let Some(w_h) = w_h {
            c.check(
                "max-cell-witness",
                cell_nonempty(group, w_h, j, space) && cell_dimension(group, w_h, space) == m_h,
                || group.format_word(w_h),
            );
        }
        let irreducible = space.contains_simple_negatives();
        if irreducible {
            c.check("irreducible-top-cell", counts[m_h] == 1, || {
                format!("{counts:?}")
            });
        }
        if is_full {
            c.check("full-space-profile", counts[..] == length_hist[..], || {
                format!("{counts:?} vs length histogram {length_hist:?}")
            });
        }
        if m_h == 0 && j == delta {
            c.check("borel-nilpotent", *counts == [1], || format!("{counts:?}"));
        }

        for (s, block) in &part.blocks {
            let members_ok = block.iter().all(|&w| {
                cell_nonempty(group, w, j, space) && group.inversions(w).intersection(neg) == *s
            });
            c.check("block-membership", members_ok, || format!("{s:?}"));
            let cosets: HashSet<WeylElement> =
                block.iter().map(|&w| group.decompose(w, j).1).collect();
            c.check("distinct-cosets", cosets.len() == block.len(), || {
                format!(
                    "{} elements share {} cosets for S = {s:?}",
                    block.len(),
                    cosets.len()
                )
            });
        }

        levi_checks(group, space, j, &mut c);

        // the bijection W(J, S) → W(K, Sᶜ)
        let mut forward = Bijector::new(group, space, j);
        let mut backward = Bijector::new(group, space, k);
        let mut round_trip_fixed = 0u64;
        for s in &wt_set {
            let block = part.block(*s);
            let image_block = part_k.block(neg.difference(*s));
            c.check(
                "bijection-cardinality",
                block.len() == image_block.len(),
                || {
                    format!(
                        "|W(J,S)| = {}, |W(K,Sᶜ)| = {} for S = {s:?}",
                        block.len(),
                        image_block.len()
                    )
                },
            );
            let mut targets = HashSet::new();
            for &w in block {
                let rec = match forward.map(w) {
                    Ok(rec) => rec,
                    Err(e) => {
                        c.fail("bijection-total", e);
                        continue;
                    }
                };
                c.check("bijection-total", true, String::new);
                c.check("bijection-lands", image_block.contains(&rec.target), || {
                    format!(
                        "{} ↦ {}",
                        group.format_word(w),
                        group.format_word(rec.target)
                    )
                });
                c.check("bijection-injective", targets.insert(rec.target), || {
                    format!(
                        "{} repeats target {}",
                        group.format_word(w),
                        group.format_word(rec.target)
                    )
                });
                if j == delta {
                    let nc = nilpotent_complement(group, space, w);
                    c.check(
                        "bijection-nilpotent-agreement",
                        nc.as_ref() == Ok(&rec.target),
                        || {
                            format!(
                                "{} ↦ {} vs {:?}",
                                group.format_word(w),
                                group.format_word(rec.target),
                                nc
                            )
                        },
                    );
                }
                if backward.map(rec.target).is_ok_and(|r| r.target == w) {
                    round_trip_fixed += 1;
                }
            }
        }

        records.push(CaseRecord {
            system: label.clone(),
            space: coeffs.clone(),
            j: j.one_based(),
            k: k.one_based(),
            m_h,
            counts: counts.clone(),
            palindromic: profile.is_palindromic(),
            irreducible,
            weyl_type_subsets: wt.len(),
            round_trip_fixed,
        });
    }
    c.j = None;
    (records, c)
}

/// For every `w = y·v` (`y ∈ W_J`, `v ∈ Wᴶ`): `H_v` is a Hessenberg space of
/// `Φ_J`, the cell of `w` for `H` is nonempty iff that of `y` for `H_v` is,
/// and `N⁻(w) ∩ Φ_H⁻ = (N⁻(v) ∩ Φ_H⁻) ⊔ v⁻¹(N⁻(y) ∩ Φ_{H_v}⁻)`.
fn levi_checks(group: &WeylGroup, space: &HessenbergSpace, j: SimpleSubset, c: &mut Checker) {
    let rs = group.root_system();
    let neg = space.neg_mask();
    let mut levi: HashMap<WeylElement, Option<HessenbergSpace>> = HashMap::new();
    for &v in &group.parabolic(j).min_reps {
        let hv = levi_hessenberg(group, space, v, j);
        c.check("levi-hessenberg", hv.is_ok(), || {
            format!("{:?}", hv.as_ref().err())
        });
        levi.insert(v, hv.ok());
    }
    for w in group.elements() {
        let (y, v) = group.decompose(w, j);
        let Some(Some(hv)) = levi.get(&v) else {
            continue;
        };
        c.check(
            "levi-nonempty-equivalence",
            cell_nonempty(group, w, j, space) == cell_nonempty(group, y, j, hv),
            || group.format_word(w),
        );
        let vinv = group.inverse(v);
        let mut moved = RootMask::EMPTY;
        for p in group.inversions(y).intersection(hv.neg_mask()).iter() {
            moved.insert(rs.position(group.apply(vinv, rs.neg_of(p))));
        }
        let left = group.inversions(v).intersection(neg);
        c.check(
            "levi-cut-decomposition",
            left.intersection(moved).is_empty()
                && moved.is_subset(neg)
                && left.union(moved) == group.inversions(w).intersection(neg),
            || group.format_word(w),
        );
    }
}
