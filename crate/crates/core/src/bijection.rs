//! Explicit bijections between witness sets.
//!
//! For `K = −w_0(J)` and `S ∈ 𝒲ᴴ`, the map `W(J, S) → W(K, Sᶜ)` sends `w` to
//! `w̄ = ȳ·v`, where `w_0 w = y·v` with `y ∈ W_K`, `v ∈ Wᴷ`, and `ȳ` is the
//! unique element of `W_K` that is admissible for the restricted space
//! `H_v` and cuts `Φ_{H_v}⁻` in the same set as `y`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::betti::cell_nonempty;
use crate::error::{Error, Result};
use crate::hessenberg::{is_weyl_type, levi_hessenberg, HessenbergSpace};
use crate::mask::RootMask;
use crate::rootsys::{RootIndex, SimpleSubset};
use crate::weyl::{WeylElement, WeylGroup};

/// `K = −w_0(J)`.
pub fn dual_subset(group: &WeylGroup, j: SimpleSubset) -> SimpleSubset {
    let rs = group.root_system();
    let w0 = group.longest_element();
    SimpleSubset::from_zero_based(j.iter().map(|i| {
        let image = rs.negate(group.apply(w0, rs.simple(i)));
        assert!(
            image.idx() < rs.rank(),
            "−w_0 does not permute the simple roots"
        );
        image.idx()
    }))
}

/// The unique `w` with `N⁻(w) ∩ Φ_H⁻ = S` and `w⁻¹(Δ) ⊆ Φ_H`.
pub fn unique_weyl_rep(
    group: &WeylGroup,
    space: &HessenbergSpace,
    s: RootMask,
) -> Result<WeylElement> {
    let rs = group.root_system();
    if !is_weyl_type(rs, space, s)? {
        return Err(Error::Precondition(format!("{s:?} is not of Weyl type")));
    }
    let delta = SimpleSubset::full(rs.rank());
    let mut found = group.elements().filter(|&w| {
        group.inversions(w).intersection(space.neg_mask()) == s
            && cell_nonempty(group, w, delta, space)
    });
    match (found.next(), found.next()) {
        (Some(w), None) => Ok(w),
        (None, _) => Err(Error::Invariant(format!(
            "no Δ-admissible element realizes the Weyl-type subset {s:?}"
        ))),
        (Some(a), Some(b)) => Err(Error::Invariant(format!(
            "Weyl-type subset {s:?} has several Δ-admissible representatives: {} and {}",
            group.format_word(a),
            group.format_word(b)
        ))),
    }
}

/// The Δ-admissible element whose cut of `Φ_H⁻` is the complement of `w`'s.
pub fn nilpotent_complement(
    group: &WeylGroup,
    space: &HessenbergSpace,
    w: WeylElement,
) -> Result<WeylElement> {
    let delta = SimpleSubset::full(group.root_system().rank());
    if !cell_nonempty(group, w, delta, space) {
        return Err(Error::Precondition(format!(
            "{} does not satisfy w⁻¹(Δ) ⊆ Φ_H",
            group.format_word(w)
        )));
    }
    let s = group.inversions(w).intersection(space.neg_mask());
    unique_weyl_rep(group, space, space.neg_mask().difference(s))
}

/// Sends `v_J ∈ Wᴶ` to the `v_K ∈ Wᴷ` with
/// `N(v_K) = v_J⁻¹(Φ⁺ − Φ_J⁺) ∩ Φ⁺`.
pub fn coset_transfer(group: &WeylGroup, j: SimpleSubset, v_j: WeylElement) -> Result<WeylElement> {
    if !group.is_min_coset_rep(v_j, j) {
        return Err(Error::Precondition(format!(
            "{} is not a minimal coset representative for J = {j}",
            group.format_word(v_j)
        )));
    }
    let rs = group.root_system();
    let k = dual_subset(group, j);
    let outside_j = rs.all_positive().difference(rs.subsystem_mask(j));
    let target: RootMask = (0..rs.num_positive())
        .filter(|&p| {
            let image = group.apply(v_j, RootIndex(p as u8));
            rs.is_positive(image) && outside_j.contains(image.idx())
        })
        .collect();
    let v_k = group.by_inversions(target).ok_or_else(|| {
        Error::Invariant(format!(
            "no element has inversion set {target:?} (transfer of {})",
            group.format_word(v_j)
        ))
    })?;
    if !group.is_min_coset_rep(v_k, k) {
        return Err(Error::Invariant(format!(
            "transfer of {} is {}, which is not in Wᴷ for K = {k}",
            group.format_word(v_j),
            group.format_word(v_k)
        )));
    }
    Ok(v_k)
}

/// Certificate for one application of the witness bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BijectionRecord {
    pub source: WeylElement,
    pub target: WeylElement,
    pub j_set: SimpleSubset,
    pub k_set: SimpleSubset,
    /// `S = N⁻(w) ∩ Φ_H⁻`.
    pub subset: RootMask,
    pub w0w: WeylElement,
    pub y: WeylElement,
    pub v: WeylElement,
    /// `Φ_{H_v}⁻` inside `Φ_K`.
    pub levi_space: HessenbergSpace,
    pub y_bar: WeylElement,
}

/// Runs [`Bijector::map`] once.
pub fn theorem_bijection(
    group: &WeylGroup,
    space: &HessenbergSpace,
    j: SimpleSubset,
    w: WeylElement,
) -> Result<BijectionRecord> {
    Bijector::new(group, space, j).map(w)
}

/// The map `W(J, S) → W(K, Sᶜ)` for a fixed `(H, J)`, caching the
/// representatives of each restricted space `H_v` it meets.
pub struct Bijector<'g> {
    group: &'g WeylGroup,
    space: HessenbergSpace,
    j: SimpleSubset,
    k: SimpleSubset,
    /// `Φ_{H_v}⁻` ↦ (cut of `Φ_{H_v}⁻` ↦ admissible element of `W_K`).
    reps: HashMap<RootMask, HashMap<RootMask, WeylElement>>,
}

impl<'g> Bijector<'g> {
    pub fn new(group: &'g WeylGroup, space: &HessenbergSpace, j: SimpleSubset) -> Self {
        Bijector {
            group,
            space: *space,
            j,
            k: dual_subset(group, j),
            reps: HashMap::new(),
        }
    }

    pub fn k_set(&self) -> SimpleSubset {
        self.k
    }

    /// Admissible elements of `W_K` for `H_v`, keyed by their cut. A repeated
    /// key means uniqueness fails inside the Levi subsystem.
    fn levi_reps(&mut self, levi: &HessenbergSpace) -> Result<&HashMap<RootMask, WeylElement>> {
        let group = self.group;
        let k = self.k;
        match self.reps.entry(levi.neg_mask()) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => {
                let mut table = HashMap::new();
                for &y in &group.parabolic(k).elements {
                    if !cell_nonempty(group, y, k, levi) {
                        continue;
                    }
                    let cut = group.inversions(y).intersection(levi.neg_mask());
                    if let Some(prev) = table.insert(cut, y) {
                        return Err(Error::Invariant(format!(
                            "{} and {} in W_K (K = {k}) are both admissible for H_v with cut {cut:?}",
                            group.format_word(prev),
                            group.format_word(y)
                        )));
                    }
                }
                Ok(e.insert(table))
            }
        }
    }

    pub fn map(&mut self, w: WeylElement) -> Result<BijectionRecord> {
        let group = self.group;
        let space = self.space;
        if !cell_nonempty(group, w, self.j, &space) {
            return Err(Error::Precondition(format!(
                "{} is not in W(J, S) for J = {}",
                group.format_word(w),
                self.j
            )));
        }
        let subset = group.inversions(w).intersection(space.neg_mask());
        let w0w = group.compose(group.longest_element(), w);
        let (y, v) = group.decompose(w0w, self.k);
        let levi_space = levi_hessenberg(group, &space, v, self.k)?;
        let cut = group.inversions(y).intersection(levi_space.neg_mask());
        let k = self.k;
        let y_bar = *self.levi_reps(&levi_space)?.get(&cut).ok_or_else(|| {
            Error::Invariant(format!(
                "no admissible element of W_K (K = {k}) has cut {cut:?} for H_v"
            ))
        })?;
        let target = group.compose(y_bar, v);

        let complement = space.neg_mask().difference(subset);
        if group.inversions(target).intersection(space.neg_mask()) != complement
            || !cell_nonempty(group, target, k, &space)
        {
            return Err(Error::Invariant(format!(
                "image {} of {} is not in W(K, Sᶜ)",
                group.format_word(target),
                group.format_word(w)
            )));
        }
        Ok(BijectionRecord {
            source: w,
            target,
            j_set: self.j,
            k_set: k,
            subset,
            w0w,
            y,
            v,
            levi_space,
            y_bar,
        })
    }
}
