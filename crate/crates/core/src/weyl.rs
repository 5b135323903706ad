//! Weyl group of a [`RootSystem`], materialized as permutations of the root
//! table.
//!
//! Elements are discovered breadth-first from the identity under right
//! multiplication by simple reflections, so every stored word is reduced and
//! the element list is sorted by length and then by word. Elements are
//! addressed by [`WeylElement`] handles into the owning [`WeylGroup`].

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::mask::RootMask;
use crate::rootsys::{RootIndex, RootSystem, RootType, SimpleSubset};

/// Default cap on `|W|`. Admits everything through `E_6`, rejects `E_7`.
pub const DEFAULT_GROUP_BUDGET: usize = 100_000;

/// Closed-form `|W|`.
pub fn expected_order(kind: RootType, rank: usize) -> u64 {
    let fact = |n: u64| (1..=n).product::<u64>();
    let n = rank as u64;
    match kind {
        RootType::A => fact(n + 1),
        RootType::B | RootType::C => (1u64 << n) * fact(n),
        RootType::D => (1u64 << (n - 1)) * fact(n),
        RootType::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        RootType::F => 1_152,
        RootType::G => 12,
    }
}

/// Handle of a group element. Handle order is the generation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub u32);

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement(0);

    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// `W_J` and the minimal right coset representatives `Wᴶ` of `W_J \ W`.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    pub generators: SimpleSubset,
    pub elements: Vec<WeylElement>,
    pub min_reps: Vec<WeylElement>,
    /// Longest element of `W_J`.
    pub longest: WeylElement,
}

#[derive(Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    nroots: usize,
    /// Flat `|W| × |Φ|` table: `perms[w * nroots + γ] = w(γ)`.
    perms: Vec<u8>,
    words: Vec<Vec<u8>>,
    inversions: Vec<RootMask>,
    inverse: Vec<u32>,
    right_mul: Vec<u32>,
    left_mul: Vec<u32>,
    by_inversions: HashMap<RootMask, WeylElement>,
    longest: WeylElement,
    parabolics: Vec<OnceLock<ParabolicData>>,
}

impl WeylGroup {
    /// Generates `W` by breadth-first closure, failing once more than
    /// `budget` elements have been found.
    pub fn generate(rs: RootSystem, budget: usize) -> Result<WeylGroup> {
        let nroots = rs.len();
        let npos = rs.num_positive();
        let rank = rs.rank();

        let mut perms: Vec<u8> = (0..nroots as u8).collect();
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut right_mul: Vec<u32> = Vec::new();
        let mut lookup: HashMap<Vec<u8>, u32> = HashMap::new();
        lookup.insert(perms[..npos].to_vec(), 0);

        let mut queue = VecDeque::from([0u32]);
        let mut scratch = vec![0u8; nroots];
        while let Some(w) = queue.pop_front() {
            let base = w as usize * nroots;
            let row_start = right_mul.len();
            right_mul.resize(row_start + rank, u32::MAX);
            for j in 0..rank {
                let s = rs.reflection(j);
                for g in 0..nroots {
                    scratch[g] = perms[base + s[g] as usize];
                }
                let id = match lookup.get(&scratch[..npos]) {
                    Some(&id) => id,
                    None => {
                        let id = words.len() as u32;
                        if words.len() >= budget {
                            return Err(Error::BudgetExceeded {
                                what: format!("Weyl group order of {}", rs.label()),
                                cap: budget,
                            });
                        }
                        perms.extend_from_slice(&scratch);
                        let mut word = words[w as usize].clone();
                        word.push(j as u8);
                        words.push(word);
                        lookup.insert(scratch[..npos].to_vec(), id);
                        queue.push_back(id);
                        id
                    }
                };
                right_mul[row_start + j] = id;
            }
        }
        drop(lookup);

        let order = words.len();
        let inversions: Vec<RootMask> = (0..order)
            .map(|w| {
                let p = &perms[w * nroots..w * nroots + npos];
                (0..npos).filter(|&k| (p[k] as usize) >= npos).collect()
            })
            .collect();

        let mut inverse = vec![0u32; order];
        for (w, word) in words.iter().enumerate() {
            let mut x = 0u32;
            for &j in word.iter().rev() {
                x = right_mul[x as usize * rank + j as usize];
            }
            inverse[w] = x;
        }
        let mut left_mul = vec![0u32; order * rank];
        for w in 0..order {
            for j in 0..rank {
                let t = right_mul[inverse[w] as usize * rank + j];
                left_mul[w * rank + j] = inverse[t as usize];
            }
        }

        let by_inversions: HashMap<RootMask, WeylElement> = inversions
            .iter()
            .enumerate()
            .map(|(w, &m)| (m, WeylElement(w as u32)))
            .collect();
        let full = RootMask::full(npos);
        let longest = *by_inversions
            .get(&full)
            .ok_or_else(|| Error::Invariant("no element inverts every positive root".into()))?;

        Ok(WeylGroup {
            parabolics: (0..1usize << rank).map(|_| OnceLock::new()).collect(),
            rs,
            nroots,
            perms,
            words,
            inversions,
            inverse,
            right_mul,
            left_mul,
            by_inversions,
            longest,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + Clone {
        (0..self.words.len() as u32).map(WeylElement)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::IDENTITY
    }

    /// `s_j` for 0-based `j`.
    pub fn simple_reflection(&self, j: usize) -> WeylElement {
        WeylElement(self.right_mul[j])
    }

    /// Builds an element from a 0-based word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let rank = self.rs.rank();
        let mut w = 0u32;
        for &j in word {
            if j >= rank {
                return Err(Error::Parse(format!(
                    "reflection index {} out of range",
                    j + 1
                )));
            }
            w = self.right_mul[w as usize * rank + j];
        }
        Ok(WeylElement(w))
    }

    /// Builds an element from a 1-based word such as `[1, 2, 1]`.
    pub fn from_word_one_based(&self, word: &[usize]) -> Result<WeylElement> {
        if word.contains(&0) {
            return Err(Error::Parse("reflection indices are 1-based".into()));
        }
        let zero: Vec<usize> = word.iter().map(|&j| j - 1).collect();
        self.from_word(&zero)
    }

    pub fn perm(&self, w: WeylElement) -> &[u8] {
        &self.perms[w.idx() * self.nroots..(w.idx() + 1) * self.nroots]
    }

    /// Reduced word, 0-based.
    pub fn word(&self, w: WeylElement) -> &[u8] {
        &self.words[w.idx()]
    }

    pub fn word_one_based(&self, w: WeylElement) -> Vec<usize> {
        self.words[w.idx()]
            .iter()
            .map(|&j| j as usize + 1)
            .collect()
    }

    /// `e` for the identity, otherwise e.g. `s1s2s1`.
    pub fn format_word(&self, w: WeylElement) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|j| format!("s{}", j + 1)).collect()
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.words[w.idx()].len()
    }

    #[inline]
    pub fn apply(&self, w: WeylElement, gamma: RootIndex) -> RootIndex {
        RootIndex(self.perms[w.idx() * self.nroots + gamma.idx()])
    }

    #[inline]
    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverse[w.idx()])
    }

    /// The product `w·x`, acting as `x` first.
    pub fn compose(&self, w: WeylElement, x: WeylElement) -> WeylElement {
        let rank = self.rs.rank();
        let mut out = w.0;
        for &j in &self.words[x.idx()] {
            out = self.right_mul[out as usize * rank + j as usize];
        }
        WeylElement(out)
    }

    /// `w·s_j`.
    #[inline]
    pub fn mul_simple_right(&self, w: WeylElement, j: usize) -> WeylElement {
        WeylElement(self.right_mul[w.idx() * self.rs.rank() + j])
    }

    /// `s_j·w`.
    #[inline]
    pub fn mul_simple_left(&self, j: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left_mul[w.idx() * self.rs.rank() + j])
    }

    /// `N(w) = {γ ∈ Φ⁺ : w(γ) ∈ Φ⁻}` as a positive-position mask. Read as a
    /// set of negative roots the same mask is `N⁻(w) = −N(w)`.
    #[inline]
    pub fn inversions(&self, w: WeylElement) -> RootMask {
        self.inversions[w.idx()]
    }

    /// `N⁻(w) = {γ ∈ Φ⁻ : w(γ) ∈ Φ⁺}` as explicit negative root indices.
    pub fn inversion_neg(&self, w: WeylElement) -> Vec<RootIndex> {
        self.inversions(w)
            .iter()
            .map(|k| self.rs.neg_of(k))
            .collect()
    }

    /// The element whose inversion set is exactly `mask`, if any.
    pub fn by_inversions(&self, mask: RootMask) -> Option<WeylElement> {
        self.by_inversions.get(&mask).copied()
    }

    /// `w_0`, the unique element with `N⁻(w_0) = Φ⁻`.
    pub fn longest_element(&self) -> WeylElement {
        self.longest
    }

    /// `W_J` and `Wᴶ`, computed once per `J` and cached.
    pub fn parabolic(&self, j: SimpleSubset) -> &ParabolicData {
        self.parabolics[j.0 as usize].get_or_init(|| self.compute_parabolic(j))
    }

    fn compute_parabolic(&self, j: SimpleSubset) -> ParabolicData {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut elements = vec![WeylElement::IDENTITY];
        let mut cursor = 0;
        while cursor < elements.len() {
            let w = elements[cursor];
            cursor += 1;
            for g in j.iter() {
                let x = self.mul_simple_right(w, g);
                if !seen[x.idx()] {
                    seen[x.idx()] = true;
                    elements.push(x);
                }
            }
        }
        elements.sort();
        let phi_j = self.rs.subsystem_mask(j);
        let min_reps = self
            .elements()
            .filter(|&v| {
                self.inversions(self.inverse(v))
                    .intersection(phi_j)
                    .is_empty()
            })
            .collect();
        let longest = *elements
            .iter()
            .max_by_key(|&&w| (self.length(w), std::cmp::Reverse(w)))
            .expect("W_J contains the identity");
        ParabolicData {
            generators: j,
            elements,
            min_reps,
            longest,
        }
    }

    /// Whether `v ∈ Wᴶ`, i.e. `N(v⁻¹) ⊆ Φ⁺ − Φ_J⁺`.
    pub fn is_min_coset_rep(&self, v: WeylElement, j: SimpleSubset) -> bool {
        let phi_j = self.rs.subsystem_mask(j);
        self.inversions(self.inverse(v))
            .intersection(phi_j)
            .is_empty()
    }

    /// Splits `w = y·v` with `y ∈ W_J`, `v ∈ Wᴶ` by peeling left factors
    /// `s_α` (`α ∈ J`) while they shorten the remainder.
    pub fn decompose(&self, w: WeylElement, j: SimpleSubset) -> (WeylElement, WeylElement) {
        let npos = self.rs.num_positive();
        let mut y = WeylElement::IDENTITY;
        let mut v = w;
        'outer: loop {
            let vinv = self.inverse(v);
            for a in j.iter() {
                // ℓ(s_α v) < ℓ(v) iff v⁻¹(α) < 0
                if self.apply(vinv, self.rs.simple(a)).idx() >= npos {
                    v = self.mul_simple_left(a, v);
                    y = self.mul_simple_right(y, a);
                    continue 'outer;
                }
            }
            break;
        }
        (y, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootType;

    fn group(t: RootType, r: usize) -> WeylGroup {
        WeylGroup::generate(RootSystem::new(t, r).unwrap(), DEFAULT_GROUP_BUDGET).unwrap()
    }

    fn el(g: &WeylGroup, word: &[usize]) -> WeylElement {
        g.from_word_one_based(word).unwrap()
    }

    fn coeff_set(g: &WeylGroup, roots: &[RootIndex]) -> Vec<Vec<i32>> {
        let mut v: Vec<_> = roots
            .iter()
            .map(|&a| g.root_system().coefficients(a).to_vec())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn small_orders() {
        assert_eq!(group(RootType::A, 1).order(), 2);
        assert_eq!(group(RootType::A, 2).order(), 6);
        assert_eq!(group(RootType::G, 2).order(), 12);
    }

    #[test]
    fn generation_order_is_length_then_word() {
        let g = group(RootType::A, 2);
        let words: Vec<String> = g.elements().map(|w| g.format_word(w)).collect();
        assert_eq!(words, ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]);
    }

    #[test]
    fn budget_is_enforced() {
        let rs = RootSystem::new(RootType::A, 3).unwrap();
        match WeylGroup::generate(rs, 10) {
            Err(Error::BudgetExceeded { cap, .. }) => assert_eq!(cap, 10),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn apply_examples() {
        let g = group(RootType::A, 2);
        let rs = g.root_system();
        let a1 = rs.simple(0);
        let a2 = rs.simple(1);
        assert_eq!(g.apply(g.identity(), a1), a1);
        assert_eq!(rs.coefficients(g.apply(el(&g, &[1]), a2)), &[1, 1]);
        for w in g.elements() {
            assert_eq!(g.compose(w, g.inverse(w)), g.identity());
        }
    }

    #[test]
    fn inversion_examples() {
        let g = group(RootType::A, 2);
        assert!(g.inversion_neg(g.identity()).is_empty());
        assert_eq!(
            coeff_set(&g, &g.inversion_neg(el(&g, &[1]))),
            vec![vec![-1, 0]]
        );
        assert_eq!(
            coeff_set(&g, &g.inversion_neg(el(&g, &[2, 1]))),
            vec![vec![-1, -1], vec![-1, 0]]
        );
    }

    #[test]
    fn longest_examples() {
        let g = group(RootType::A, 1);
        assert_eq!(g.longest_element(), el(&g, &[1]));
        let g = group(RootType::A, 2);
        assert_eq!(g.word_one_based(g.longest_element()), vec![1, 2, 1]);
        assert_eq!(g.length(g.longest_element()), 3);
        let g = group(RootType::B, 2);
        let rs = g.root_system();
        let w0 = g.longest_element();
        for a in 0..rs.len() {
            let a = RootIndex(a as u8);
            assert_eq!(g.apply(w0, a), rs.negate(a));
        }
    }

    #[test]
    fn parabolic_examples() {
        let g = group(RootType::A, 2);
        let p = g.parabolic(SimpleSubset(0b01));
        let fmt = |v: &[WeylElement]| v.iter().map(|&w| g.format_word(w)).collect::<Vec<_>>();
        assert_eq!(fmt(&p.elements), ["e", "s1"]);
        assert_eq!(fmt(&p.min_reps), ["e", "s2", "s2s1"]);

        let p = g.parabolic(SimpleSubset::EMPTY);
        assert_eq!(fmt(&p.elements), ["e"]);
        assert_eq!(p.min_reps.len(), 6);

        let p = g.parabolic(SimpleSubset::full(2));
        assert_eq!(p.elements.len(), 6);
        assert_eq!(fmt(&p.min_reps), ["e"]);
        assert_eq!(p.longest, g.longest_element());
    }

    #[test]
    fn decompose_examples() {
        let g = group(RootType::A, 2);
        let (y, v) = g.decompose(g.longest_element(), SimpleSubset(0b01));
        assert_eq!(
            (g.format_word(y), g.format_word(v)),
            ("s1".into(), "s2s1".into())
        );
        for j in SimpleSubset::all(2) {
            assert_eq!(g.decompose(g.identity(), j), (g.identity(), g.identity()));
        }
        let (y, v) = g.decompose(el(&g, &[1, 2]), SimpleSubset(0b10));
        assert_eq!((y, v), (g.identity(), el(&g, &[1, 2])));
    }

    #[test]
    fn left_and_right_tables_agree_with_compose() {
        let g = group(RootType::B, 3);
        for w in g.elements() {
            for j in 0..3 {
                let s = g.simple_reflection(j);
                assert_eq!(g.mul_simple_right(w, j), g.compose(w, s));
                assert_eq!(g.mul_simple_left(j, w), g.compose(s, w));
            }
        }
    }

    #[test]
    fn bad_words_rejected() {
        let g = group(RootType::A, 2);
        assert!(g.from_word_one_based(&[0]).is_err());
        assert!(g.from_word_one_based(&[3]).is_err());
    }
}
