//! Hessenberg spaces as sets of negative roots, and their subsets of Weyl
//! type.
//!
//! A Hessenberg space `H ⊇ 𝔟` is recorded by `Φ_H⁻`, the negative roots whose
//! root spaces it contains. `Φ_H = Φ⁺ ∪ Φ_H⁻`. Stability under `𝔟` becomes:
//! whenever `γ ∈ Φ_H⁻`, `α ∈ Φ⁺` and `γ + α ∈ Φ⁻`, then `γ + α ∈ Φ_H⁻`.
//!
//! Spaces may live in a Levi subsystem `Φ_K`, in which case every root
//! involved is supported on `K`.

use crate::error::{Error, Result};
use crate::mask::RootMask;
use crate::rootsys::{RootIndex, RootSystem, RootType, SimpleSubset};
use crate::weyl::{WeylElement, WeylGroup};

/// Largest `m_H` the brute-force Weyl-type oracle accepts.
pub const BRUTE_FORCE_MAX_M_H: usize = 20;

/// Cap on the number of spaces [`enumerate_hessenberg_spaces`] will produce.
pub const DEFAULT_SPACE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HessenbergSpace {
    /// `Φ_H⁻`: bit `k` set iff `−γ_k ∈ Φ_H⁻`.
    neg: RootMask,
    /// Simple roots of the ambient (sub)system.
    levi: SimpleSubset,
}

impl HessenbergSpace {
    /// `H = 𝔟`.
    pub fn borel(rs: &RootSystem) -> Self {
        HessenbergSpace {
            neg: RootMask::EMPTY,
            levi: SimpleSubset::full(rs.rank()),
        }
    }

    /// `H = 𝔤`.
    pub fn full(rs: &RootSystem) -> Self {
        HessenbergSpace {
            neg: rs.all_positive(),
            levi: SimpleSubset::full(rs.rank()),
        }
    }

    pub fn neg_mask(&self) -> RootMask {
        self.neg
    }

    pub fn levi(&self) -> SimpleSubset {
        self.levi
    }

    /// `m_H = |Φ_H⁻|`.
    pub fn m_h(&self) -> usize {
        self.neg.len()
    }

    pub fn neg_roots(&self, rs: &RootSystem) -> Vec<RootIndex> {
        self.neg.iter().map(|k| rs.neg_of(k)).collect()
    }

    /// `γ ∈ Φ_H`.
    #[inline]
    pub fn contains(&self, rs: &RootSystem, gamma: RootIndex) -> bool {
        rs.is_positive(gamma) || self.neg.contains(rs.position(gamma))
    }

    /// Coefficient vectors of `Φ_H⁻`, sorted.
    pub fn coefficient_vectors(&self, rs: &RootSystem) -> Vec<Vec<i32>> {
        let mut v: Vec<Vec<i32>> = self
            .neg_roots(rs)
            .into_iter()
            .map(|a| rs.coefficients(a).to_vec())
            .collect();
        v.sort();
        v
    }

    /// `−Δ ⊆ Φ_H⁻` (relative to the ambient simple roots).
    pub fn contains_simple_negatives(&self) -> bool {
        self.levi.iter().all(|i| self.neg.contains(i))
    }
}

/// First `(γ, α, γ + α)` with `γ ∈ neg`, `α ∈ Φ_K⁺`, `γ + α ∈ Φ_K⁻ − neg`.
/// Checks every positive root of the subsystem, not only simple ones.
fn closure_witness(
    rs: &RootSystem,
    neg: RootMask,
    levi: SimpleSubset,
) -> Option<(RootIndex, RootIndex, RootIndex)> {
    let phi_k = rs.subsystem_mask(levi);
    for k in neg.iter() {
        let gamma = rs.neg_of(k);
        for a in phi_k.iter() {
            let alpha = RootIndex(a as u8);
            if let Some(sum) = rs.root_sum(gamma, alpha) {
                if !rs.is_positive(sum) && !neg.contains(rs.position(sum)) {
                    return Some((gamma, alpha, sum));
                }
            }
        }
    }
    None
}

fn check_closure(rs: &RootSystem, neg: RootMask, levi: SimpleSubset) -> Result<()> {
    match closure_witness(rs, neg, levi) {
        None => Ok(()),
        Some((g, a, s)) => Err(Error::ClosureViolation {
            gamma: rs.coefficients(g).to_vec(),
            alpha: rs.coefficients(a).to_vec(),
            sum: rs.coefficients(s).to_vec(),
        }),
    }
}

/// Validates a set of negative roots as `Φ_H⁻`.
pub fn validate_hessenberg(rs: &RootSystem, neg_roots: &[RootIndex]) -> Result<HessenbergSpace> {
    let mut neg = RootMask::EMPTY;
    for &g in neg_roots {
        if g.idx() >= rs.len() {
            return Err(Error::Precondition(format!(
                "root index {} out of range",
                g.idx()
            )));
        }
        if rs.is_positive(g) {
            return Err(Error::Precondition(format!(
                "{:?} is a positive root; only negative roots may be listed",
                rs.coefficients(g)
            )));
        }
        neg.insert(rs.position(g));
    }
    validate_mask(rs, neg)
}

/// As [`validate_hessenberg`], from a mask over positive positions.
pub fn validate_mask(rs: &RootSystem, neg: RootMask) -> Result<HessenbergSpace> {
    if !neg.is_subset(rs.all_positive()) {
        return Err(Error::Precondition(
            "mask has bits beyond the root table".into(),
        ));
    }
    let levi = SimpleSubset::full(rs.rank());
    check_closure(rs, neg, levi)?;
    Ok(HessenbergSpace { neg, levi })
}

/// Type-A Hessenberg function `h: {1..n} → {1..n}` to a space in `A_{n−1}`.
/// Matrix position `(j, i)` below the diagonal is included iff `j ≤ h(i)`.
pub fn from_type_a_function(rs: &RootSystem, h: &[usize]) -> Result<HessenbergSpace> {
    if rs.kind() != RootType::A {
        return Err(Error::InvalidHessenbergFunction(format!(
            "Hessenberg functions describe type A only, got {}",
            rs.label()
        )));
    }
    let n = rs.rank() + 1;
    if h.len() != n {
        return Err(Error::InvalidHessenbergFunction(format!(
            "{} needs {n} entries, got {}",
            rs.label(),
            h.len()
        )));
    }
    for (i0, &hi) in h.iter().enumerate() {
        let i = i0 + 1;
        if hi < i {
            return Err(Error::InvalidHessenbergFunction(format!(
                "h({i}) = {hi} < {i}"
            )));
        }
        if hi > n {
            return Err(Error::InvalidHessenbergFunction(format!(
                "h({i}) = {hi} > {n}"
            )));
        }
        if i0 > 0 && hi < h[i0 - 1] {
            return Err(Error::InvalidHessenbergFunction(format!(
                "h is not nondecreasing at {i}: {} > {hi}",
                h[i0 - 1]
            )));
        }
    }
    let mut neg = RootMask::EMPTY;
    for i in 1..=n {
        for j in i + 1..=h[i - 1] {
            neg.insert(rs.position(type_a_root(rs, i, j)));
        }
    }
    validate_mask(rs, neg)
}

/// `α_i + … + α_{j−1}` in `A_{n−1}`, 1-based `i < j ≤ n`.
fn type_a_root(rs: &RootSystem, i: usize, j: usize) -> RootIndex {
    let mut v = vec![0; rs.rank()];
    for c in &mut v[i - 1..j - 1] {
        *c = 1;
    }
    rs.index_of(&v).expect("type A interval root")
}

/// Inverse of [`from_type_a_function`]: `h(i) = max{ j : (j, i) included }`.
pub fn to_type_a_function(rs: &RootSystem, space: &HessenbergSpace) -> Option<Vec<usize>> {
    if rs.kind() != RootType::A {
        return None;
    }
    let n = rs.rank() + 1;
    Some(
        (1..=n)
            .map(|i| {
                (i + 1..=n)
                    .filter(|&j| space.neg.contains(rs.position(type_a_root(rs, i, j))))
                    .max()
                    .unwrap_or(i)
            })
            .collect(),
    )
}

/// `{γ ∈ Φ⁻ : |height(γ)| ≤ cutoff}`.
pub fn height_cutoff(rs: &RootSystem, cutoff: usize) -> Result<HessenbergSpace> {
    let neg = (0..rs.num_positive())
        .filter(|&k| rs.height(RootIndex(k as u8)) as usize <= cutoff)
        .collect();
    validate_mask(rs, neg)
}

/// Every Hessenberg space of `rs`, ordered by `m_H` then lexicographically.
///
/// `{γ : −γ ∈ Φ_H⁻}` is a lower order ideal of `Φ⁺`, so candidates are grown
/// in height order, admitting `γ` only when each `γ − α_i ∈ Φ⁺` is already
/// in. Every candidate is then validated against the literal closure rule.
pub fn enumerate_hessenberg_spaces(rs: &RootSystem, budget: usize) -> Result<Vec<HessenbergSpace>> {
    let npos = rs.num_positive();
    let rank = rs.rank();
    // predecessors by one simple root
    let preds: Vec<RootMask> = (0..npos)
        .map(|k| {
            let g = RootIndex(k as u8);
            (0..rank)
                .filter_map(|i| rs.root_sum(g, rs.negate(rs.simple(i))))
                .filter(|&p| rs.is_positive(p))
                .map(|p| p.idx())
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut stack = vec![(0usize, RootMask::EMPTY)];
    while let Some((k, ideal)) = stack.pop() {
        if k == npos {
            if out.len() >= budget {
                return Err(Error::BudgetExceeded {
                    what: format!("number of Hessenberg spaces of {}", rs.label()),
                    cap: budget,
                });
            }
            out.push(ideal);
            continue;
        }
        stack.push((k + 1, ideal));
        if preds[k].is_subset(ideal) {
            let mut with = ideal;
            with.insert(k);
            stack.push((k + 1, with));
        }
    }
    out.sort();
    out.into_iter()
        .map(|neg| {
            validate_mask(rs, neg).map_err(|e| {
                Error::Invariant(format!("order ideal failed Hessenberg validation: {e}"))
            })
        })
        .collect()
}

/// Brute force over all `2^|Φ⁻|` subsets with the closure filter. Test oracle
/// for [`enumerate_hessenberg_spaces`].
pub fn enumerate_hessenberg_spaces_brute_force(rs: &RootSystem) -> Result<Vec<HessenbergSpace>> {
    let npos = rs.num_positive();
    if npos > BRUTE_FORCE_MAX_M_H {
        return Err(Error::BudgetExceeded {
            what: format!("brute-force space enumeration over 2^{npos} subsets"),
            cap: BRUTE_FORCE_MAX_M_H,
        });
    }
    let mut out: Vec<HessenbergSpace> = (0..1u64 << npos)
        .filter_map(|b| validate_mask(rs, RootMask(b as u128)).ok())
        .collect();
    out.sort_by_key(|s| s.neg);
    Ok(out)
}

/// `S ⊆ Φ_H⁻` is `Φ_H⁻`-closed.
pub fn is_closed(rs: &RootSystem, space: &HessenbergSpace, subset: RootMask) -> Result<bool> {
    if !subset.is_subset(space.neg) {
        return Err(Error::Precondition(
            "subset is not contained in Φ_H⁻".into(),
        ));
    }
    Ok(closed_unchecked(rs, space.neg, subset))
}

/// Negative roots add like positive ones: `−γ_p + −γ_q = −γ_r`.
#[inline]
fn closed_unchecked(rs: &RootSystem, ambient: RootMask, subset: RootMask) -> bool {
    rs.positive_sum_triples().iter().all(|&(p, q, r)| {
        !(subset.contains(p as usize) && subset.contains(q as usize))
            || !ambient.contains(r as usize)
            || subset.contains(r as usize)
    })
}

/// Both `S` and `Sᶜ = Φ_H⁻ − S` are `Φ_H⁻`-closed.
pub fn is_weyl_type(rs: &RootSystem, space: &HessenbergSpace, subset: RootMask) -> Result<bool> {
    Ok(is_closed(rs, space, subset)?
        && closed_unchecked(rs, space.neg, space.neg.difference(subset)))
}

/// A subset `S ⊆ Φ_H⁻` of Weyl type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylTypeSubset {
    pub members: RootMask,
}

impl WeylTypeSubset {
    pub fn complement(&self, space: &HessenbergSpace) -> WeylTypeSubset {
        WeylTypeSubset {
            members: space.neg.difference(self.members),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `𝒲ᴴ` as the image `{N⁻(w) ∩ Φ_H⁻ : w ∈ W}`, canonically ordered.
pub fn weyl_type_subsets(group: &WeylGroup, space: &HessenbergSpace) -> Vec<WeylTypeSubset> {
    let mut masks: Vec<RootMask> = group
        .elements()
        .map(|w| group.inversions(w).intersection(space.neg))
        .collect();
    masks.sort();
    masks.dedup();
    masks
        .into_iter()
        .map(|members| WeylTypeSubset { members })
        .collect()
}

/// `𝒲ᴴ` by filtering all `2^{m_H}` subsets with [`is_weyl_type`].
pub fn weyl_type_subsets_brute_force(
    rs: &RootSystem,
    space: &HessenbergSpace,
) -> Result<Vec<WeylTypeSubset>> {
    let m = space.m_h();
    if m > BRUTE_FORCE_MAX_M_H {
        return Err(Error::BudgetExceeded {
            what: format!("brute-force Weyl-type enumeration with m_H = {m}"),
            cap: BRUTE_FORCE_MAX_M_H,
        });
    }
    let members: Vec<usize> = space.neg.iter().collect();
    let mut out = Vec::new();
    for dense in 0..1u64 << m {
        let s = RootMask::deposit(dense, &members);
        if is_weyl_type(rs, space, s)? {
            out.push(WeylTypeSubset { members: s });
        }
    }
    out.sort();
    Ok(out)
}

/// `H_v = v·H ∩ 𝔪_K`: `Φ_{H_v}⁻ = {γ ∈ Φ_K⁻ : v⁻¹(γ) ∈ Φ_H}`, checked to be a
/// Hessenberg space of the Levi subsystem `Φ_K`.
pub fn levi_hessenberg(
    group: &WeylGroup,
    space: &HessenbergSpace,
    v: WeylElement,
    k: SimpleSubset,
) -> Result<HessenbergSpace> {
    if !group.is_min_coset_rep(v, k) {
        return Err(Error::Precondition(format!(
            "{} is not a minimal coset representative for K = {k}",
            group.format_word(v)
        )));
    }
    let levi = levi_space_unchecked(group, space, v, k);
    check_closure(group.root_system(), levi.neg, k).map_err(|e| {
        Error::Invariant(format!(
            "restriction of H along {} to K = {k} is not a Hessenberg space: {e}",
            group.format_word(v)
        ))
    })?;
    Ok(levi)
}

pub(crate) fn levi_space_unchecked(
    group: &WeylGroup,
    space: &HessenbergSpace,
    v: WeylElement,
    k: SimpleSubset,
) -> HessenbergSpace {
    let rs = group.root_system();
    let vinv = group.inverse(v);
    let neg = rs
        .subsystem_mask(k)
        .iter()
        .filter(|&p| space.contains(rs, group.apply(vinv, rs.neg_of(p))))
        .collect();
    HessenbergSpace { neg, levi: k }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_GROUP_BUDGET;

    fn rs(t: RootType, r: usize) -> RootSystem {
        RootSystem::new(t, r).unwrap()
    }

    fn neg(rs: &RootSystem, vs: &[&[i32]]) -> Vec<RootIndex> {
        vs.iter().map(|v| rs.index_of(v).unwrap()).collect()
    }

    fn mask(rs: &RootSystem, vs: &[&[i32]]) -> RootMask {
        neg(rs, vs).into_iter().map(|a| rs.position(a)).collect()
    }

    #[test]
    fn validate_examples() {
        let a2 = rs(RootType::A, 2);
        assert_eq!(validate_hessenberg(&a2, &[]).unwrap().m_h(), 0);
        let peterson = validate_hessenberg(&a2, &neg(&a2, &[&[-1, 0], &[0, -1]])).unwrap();
        assert_eq!(peterson.m_h(), 2);
        match validate_hessenberg(&a2, &neg(&a2, &[&[-1, -1]])) {
            Err(Error::ClosureViolation { gamma, alpha, sum }) => {
                assert_eq!(gamma, vec![-1, -1]);
                assert_eq!(alpha, vec![1, 0]);
                assert_eq!(sum, vec![0, -1]);
            }
            other => panic!("expected closure violation, got {other:?}"),
        }
        assert!(matches!(
            validate_hessenberg(&a2, &neg(&a2, &[&[1, 0]])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn type_a_function_examples() {
        let a2 = rs(RootType::A, 2);
        assert_eq!(from_type_a_function(&a2, &[1, 2, 3]).unwrap().m_h(), 0);
        let p = from_type_a_function(&a2, &[2, 3, 3]).unwrap();
        assert_eq!(p.coefficient_vectors(&a2), vec![vec![-1, 0], vec![0, -1]]);
        assert_eq!(from_type_a_function(&a2, &[3, 3, 3]).unwrap().m_h(), 3);
    }

    #[test]
    fn type_a_function_errors() {
        let a2 = rs(RootType::A, 2);
        for bad in [&[2, 3][..], &[1, 1, 3], &[3, 2, 3], &[2, 3, 4], &[0, 2, 3]] {
            assert!(
                matches!(
                    from_type_a_function(&a2, bad),
                    Err(Error::InvalidHessenbergFunction(_))
                ),
                "{bad:?}"
            );
        }
        assert!(from_type_a_function(&rs(RootType::B, 2), &[2, 3, 3]).is_err());
    }

    #[test]
    fn space_counts() {
        let n = |t, r| {
            enumerate_hessenberg_spaces(&rs(t, r), DEFAULT_SPACE_BUDGET)
                .unwrap()
                .len()
        };
        assert_eq!(n(RootType::A, 1), 2);
        assert_eq!(n(RootType::A, 2), 5);
        assert_eq!(n(RootType::A, 3), 14);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (t, r) in [
            (RootType::A, 1),
            (RootType::A, 2),
            (RootType::A, 3),
            (RootType::A, 4),
            (RootType::B, 2),
            (RootType::G, 2),
            (RootType::B, 3),
            (RootType::C, 3),
        ] {
            let rs = rs(t, r);
            let fast = enumerate_hessenberg_spaces(&rs, DEFAULT_SPACE_BUDGET).unwrap();
            let slow = enumerate_hessenberg_spaces_brute_force(&rs).unwrap();
            assert_eq!(fast, slow, "{t}{r}");
        }
    }

    #[test]
    fn enumeration_order_and_budget() {
        let a2 = rs(RootType::A, 2);
        let all = enumerate_hessenberg_spaces(&a2, DEFAULT_SPACE_BUDGET).unwrap();
        assert_eq!(all[0].m_h(), 0);
        assert_eq!(all.last().unwrap().m_h(), 3);
        assert!(all.windows(2).all(|w| w[0].neg < w[1].neg));
        assert!(matches!(
            enumerate_hessenberg_spaces(&a2, 3),
            Err(Error::BudgetExceeded { cap: 3, .. })
        ));
    }

    #[test]
    fn height_cutoff_is_valid() {
        let f4 = rs(RootType::F, 4);
        for h in 0..=12 {
            assert!(height_cutoff(&f4, h).is_ok());
        }
        assert_eq!(height_cutoff(&f4, 1).unwrap().m_h(), 4);
        assert_eq!(height_cutoff(&f4, 11).unwrap().m_h(), 24);
    }

    #[test]
    fn closed_examples() {
        let a2 = rs(RootType::A, 2);
        let full = HessenbergSpace::full(&a2);
        assert!(is_closed(&a2, &full, RootMask::EMPTY).unwrap());
        assert!(is_closed(&a2, &full, full.neg_mask()).unwrap());
        assert!(!is_closed(&a2, &full, mask(&a2, &[&[-1, 0], &[0, -1]])).unwrap());
        let b = HessenbergSpace::borel(&a2);
        assert!(matches!(
            is_closed(&a2, &b, RootMask(1)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn weyl_type_examples() {
        let a2 = rs(RootType::A, 2);
        let full = HessenbergSpace::full(&a2);
        assert!(is_weyl_type(&a2, &full, RootMask::EMPTY).unwrap());
        assert!(is_weyl_type(&a2, &full, mask(&a2, &[&[-1, 0]])).unwrap());
        assert!(!is_weyl_type(&a2, &full, mask(&a2, &[&[-1, -1]])).unwrap());
    }

    #[test]
    fn weyl_type_subset_examples() {
        let a2 = rs(RootType::A, 2);
        let g = WeylGroup::generate(a2.clone(), DEFAULT_GROUP_BUDGET).unwrap();
        let borel = HessenbergSpace::borel(&a2);
        assert_eq!(
            weyl_type_subsets(&g, &borel),
            vec![WeylTypeSubset {
                members: RootMask::EMPTY
            }]
        );
        let p = from_type_a_function(&a2, &[2, 3, 3]).unwrap();
        assert_eq!(weyl_type_subsets(&g, &p).len(), 4);
        assert_eq!(
            weyl_type_subsets(&g, &p),
            weyl_type_subsets_brute_force(&a2, &p).unwrap()
        );
        assert_eq!(weyl_type_subsets(&g, &HessenbergSpace::full(&a2)).len(), 6);
    }

    #[test]
    fn levi_examples() {
        let a2 = rs(RootType::A, 2);
        let g = WeylGroup::generate(a2.clone(), DEFAULT_GROUP_BUDGET).unwrap();
        let p = from_type_a_function(&a2, &[2, 3, 3]).unwrap();
        let k2 = SimpleSubset(0b10);

        let id = levi_hessenberg(&g, &p, g.identity(), k2).unwrap();
        assert_eq!(
            id.neg_mask(),
            p.neg_mask().intersection(a2.subsystem_mask(k2))
        );

        let v = g.from_word_one_based(&[1, 2]).unwrap();
        let hv = levi_hessenberg(&g, &p, v, k2).unwrap();
        assert_eq!(hv.coefficient_vectors(&a2), vec![vec![0, -1]]);
        assert_eq!(hv.levi(), k2);

        let e = levi_hessenberg(&g, &p, g.identity(), SimpleSubset::EMPTY).unwrap();
        assert_eq!(e.m_h(), 0);

        let not_min = g.from_word_one_based(&[2]).unwrap();
        assert!(matches!(
            levi_hessenberg(&g, &p, not_min, k2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn type_a_round_trip() {
        for r in 1..=5 {
            let rs = rs(RootType::A, r);
            for s in enumerate_hessenberg_spaces(&rs, DEFAULT_SPACE_BUDGET).unwrap() {
                let h = to_type_a_function(&rs, &s).unwrap();
                assert_eq!(from_type_a_function(&rs, &h).unwrap(), s);
            }
        }
    }
}
