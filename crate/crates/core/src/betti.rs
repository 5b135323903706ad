//! Cell counts of the affine paving of `ℬ(x_J, H)`.
//!
//! The cell indexed by `w` is nonempty iff `w⁻¹(J) ⊆ Φ_H` and then has
//! complex dimension `|N⁻(w) ∩ Φ_H⁻|`. `β_i(J)` counts nonempty cells of
//! dimension `i`; the cohomological degree is `2i`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergSpace;
use crate::mask::RootMask;
use crate::rootsys::SimpleSubset;
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    /// `counts[i] = β_i(J)`, length `m_H + 1`.
    pub counts: Vec<u64>,
    pub j_set: SimpleSubset,
    pub space: HessenbergSpace,
}

impl BettiProfile {
    pub fn m_h(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total_cells(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        is_palindromic(&self.counts)
    }

    /// Poincaré polynomial in `q` with `β_i` on `q^{2i}`, e.g.
    /// `1 + 2q^2 + q^4`.
    pub fn poincare_polynomial(&self) -> String {
        let terms: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (2 * i, c) {
                (0, c) => c.to_string(),
                (d, 1) => format!("q^{d}"),
                (d, c) => format!("{c}q^{d}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

pub fn is_palindromic(counts: &[u64]) -> bool {
    counts.iter().eq(counts.iter().rev())
}

/// `w⁻¹(J) ⊆ Φ_H`.
#[inline]
pub fn cell_nonempty(
    group: &WeylGroup,
    w: WeylElement,
    j: SimpleSubset,
    space: &HessenbergSpace,
) -> bool {
    let rs = group.root_system();
    let winv = group.inverse(w);
    j.iter()
        .all(|a| space.contains(rs, group.apply(winv, rs.simple(a))))
}

/// `|N⁻(w) ∩ Φ_H⁻|`.
#[inline]
pub fn cell_dimension(group: &WeylGroup, w: WeylElement, space: &HessenbergSpace) -> usize {
    group.inversions(w).intersection(space.neg_mask()).len()
}

/// `β(J)` in one pass over `W`.
pub fn betti_profile(group: &WeylGroup, j: SimpleSubset, space: &HessenbergSpace) -> BettiProfile {
    let mut counts = vec![0u64; space.m_h() + 1];
    for w in group.elements() {
        if cell_nonempty(group, w, j, space) {
            counts[cell_dimension(group, w, space)] += 1;
        }
    }
    BettiProfile {
        counts,
        j_set: j,
        space: *space,
    }
}

/// `m_H` together with `w_H`, the longest element of the parabolic subgroup
/// generated by `Δ_H = {α ∈ Δ : −α ∈ Φ_H⁻}`. Fails if the cell of `w_H` does
/// not reach dimension `m_H` or is empty for some `J`.
pub fn hessenberg_dimension(
    group: &WeylGroup,
    space: &HessenbergSpace,
) -> Result<(usize, WeylElement)> {
    let rank = group.root_system().rank();
    let delta_h =
        SimpleSubset::from_zero_based((0..rank).filter(|&i| space.neg_mask().contains(i)));
    let w_h = group.parabolic(delta_h).longest;
    let m_h = space.m_h();
    let dim = cell_dimension(group, w_h, space);
    if dim != m_h {
        return Err(Error::Invariant(format!(
            "cell of w_H = {} has dimension {dim}, expected m_H = {m_h}",
            group.format_word(w_h)
        )));
    }
    if !cell_nonempty(group, w_h, SimpleSubset::full(rank), space) {
        return Err(Error::Invariant(format!(
            "cell of w_H = {} is empty for J = Δ",
            group.format_word(w_h)
        )));
    }
    Ok((m_h, w_h))
}

/// `W(J, S)` for every `S` that occurs, keyed by `S` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPartition {
    pub blocks: BTreeMap<RootMask, Vec<WeylElement>>,
}

impl WitnessPartition {
    /// Re-aggregates block sizes by `|S|`.
    pub fn betti_counts(&self, m_h: usize) -> Vec<u64> {
        let mut counts = vec![0u64; m_h + 1];
        for (s, ws) in &self.blocks {
            counts[s.len()] += ws.len() as u64;
        }
        counts
    }

    pub fn block(&self, s: RootMask) -> &[WeylElement] {
        self.blocks.get(&s).map(Vec::as_slice).unwrap_or(&[])
    }
}

pub fn witness_partition(
    group: &WeylGroup,
    j: SimpleSubset,
    space: &HessenbergSpace,
) -> WitnessPartition {
    let mut blocks: BTreeMap<RootMask, Vec<WeylElement>> = BTreeMap::new();
    for w in group.elements() {
        if cell_nonempty(group, w, j, space) {
            let s = group.inversions(w).intersection(space.neg_mask());
            blocks.entry(s).or_default().push(w);
        }
    }
    WitnessPartition { blocks }
}

/// Whether `−Δ ⊆ Φ_H⁻`. When it holds, also checks that every `J` has a
/// single cell of top dimension `m_H`.
pub fn irreducibility_criterion(group: &WeylGroup, space: &HessenbergSpace) -> Result<bool> {
    if !space.contains_simple_negatives() {
        return Ok(false);
    }
    for j in SimpleSubset::all(group.root_system().rank()) {
        let p = betti_profile(group, j, space);
        let top = p.counts[space.m_h()];
        if top != 1 {
            return Err(Error::Invariant(format!(
                "−Δ ⊆ Φ_H⁻ but J = {j} has {top} cells of top dimension"
            )));
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::{from_type_a_function, validate_hessenberg};
    use crate::rootsys::{RootSystem, RootType};
    use crate::weyl::DEFAULT_GROUP_BUDGET;

    fn a2() -> WeylGroup {
        WeylGroup::generate(
            RootSystem::new(RootType::A, 2).unwrap(),
            DEFAULT_GROUP_BUDGET,
        )
        .unwrap()
    }

    fn peterson(g: &WeylGroup) -> HessenbergSpace {
        from_type_a_function(g.root_system(), &[2, 3, 3]).unwrap()
    }

    fn el(g: &WeylGroup, w: &[usize]) -> WeylElement {
        g.from_word_one_based(w).unwrap()
    }

    #[test]
    fn nonempty_examples() {
        let g = a2();
        let p = peterson(&g);
        let full = HessenbergSpace::full(g.root_system());
        for w in g.elements() {
            assert!(cell_nonempty(&g, w, SimpleSubset::EMPTY, &p));
            for j in SimpleSubset::all(2) {
                assert!(cell_nonempty(&g, w, j, &full));
            }
        }
        assert!(!cell_nonempty(&g, el(&g, &[1, 2]), SimpleSubset(0b01), &p));
    }

    #[test]
    fn dimension_examples() {
        let g = a2();
        let p = peterson(&g);
        assert_eq!(cell_dimension(&g, g.identity(), &p), 0);
        assert_eq!(cell_dimension(&g, el(&g, &[2, 1]), &p), 1);
        assert_eq!(cell_dimension(&g, g.longest_element(), &p), 2);
    }

    #[test]
    fn profile_examples() {
        let g = a2();
        let p = peterson(&g);
        assert_eq!(
            betti_profile(&g, SimpleSubset(0b11), &p).counts,
            vec![1, 2, 1]
        );
        assert_eq!(
            betti_profile(&g, SimpleSubset::EMPTY, &p).counts,
            vec![1, 4, 1]
        );
        assert_eq!(
            betti_profile(&g, SimpleSubset(0b01), &p).counts,
            vec![1, 3, 1]
        );
        let borel = HessenbergSpace::borel(g.root_system());
        assert_eq!(
            betti_profile(&g, SimpleSubset(0b11), &borel).counts,
            vec![1]
        );
    }

    #[test]
    fn poincare_rendering() {
        let g = a2();
        let p = betti_profile(&g, SimpleSubset(0b11), &peterson(&g));
        assert_eq!(p.poincare_polynomial(), "1 + 2q^2 + q^4");
        let full = betti_profile(
            &g,
            SimpleSubset::EMPTY,
            &HessenbergSpace::full(g.root_system()),
        );
        assert_eq!(full.poincare_polynomial(), "1 + 2q^2 + 2q^4 + q^6");
    }

    #[test]
    fn hessenberg_dimension_examples() {
        let g = a2();
        let rs = g.root_system();
        assert_eq!(
            hessenberg_dimension(&g, &HessenbergSpace::borel(rs)).unwrap(),
            (0, g.identity())
        );
        assert_eq!(
            hessenberg_dimension(&g, &peterson(&g)).unwrap(),
            (2, g.longest_element())
        );
        let h1 = validate_hessenberg(rs, &[rs.index_of(&[-1, 0]).unwrap()]).unwrap();
        assert_eq!(hessenberg_dimension(&g, &h1).unwrap(), (1, el(&g, &[1])));
    }

    #[test]
    fn palindrome_predicate() {
        assert!(is_palindromic(&[1, 2, 1]));
        assert!(is_palindromic(&[1, 3, 1]));
        assert!(!is_palindromic(&[1, 2]));
        assert!(is_palindromic(&[7]));
    }

    #[test]
    fn witness_examples() {
        let g = a2();
        let rs = g.root_system();
        let p = peterson(&g);
        let part = witness_partition(&g, SimpleSubset(0b01), &p);
        let m1 = RootMask::singleton(0);
        let m2 = RootMask::singleton(1);
        assert_eq!(part.block(m1), &[el(&g, &[1]), el(&g, &[2, 1])]);
        assert_eq!(part.block(m2), &[el(&g, &[2])]);
        assert_eq!(part.betti_counts(2), vec![1, 3, 1]);

        let nil = witness_partition(&g, SimpleSubset(0b11), &p);
        assert!(nil.blocks.values().all(|b| b.len() == 1));

        let borel = witness_partition(&g, SimpleSubset(0b11), &HessenbergSpace::borel(rs));
        assert_eq!(borel.blocks.len(), 1);
        assert!(borel.blocks.contains_key(&RootMask::EMPTY));
    }

    #[test]
    fn irreducibility_examples() {
        let g = a2();
        let rs = g.root_system();
        assert!(!irreducibility_criterion(&g, &HessenbergSpace::borel(rs)).unwrap());
        assert!(irreducibility_criterion(&g, &peterson(&g)).unwrap());
        let h1 = validate_hessenberg(rs, &[rs.index_of(&[-1, 0]).unwrap()]).unwrap();
        assert!(!irreducibility_criterion(&g, &h1).unwrap());
    }
}
