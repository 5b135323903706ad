//! Finite reduced root systems built from Cartan data.
//!
//! Roots are integer coefficient vectors over the simple roots. Positive
//! roots occupy indices `0..N` ordered by height and then by coefficient
//! vector, largest first, so `α_1, …, α_n` are indices `0..n`. The negative
//! of root `k` sits at `k + N`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mask::RootMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub const ALL: [RootType; 7] = [
        RootType::A,
        RootType::B,
        RootType::C,
        RootType::D,
        RootType::E,
        RootType::F,
        RootType::G,
    ];

    pub fn letter(self) -> char {
        match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<RootType> {
        RootType::ALL
            .into_iter()
            .find(|t| t.letter() == c.to_ascii_uppercase())
    }

    /// Checks the finite-type table. `Err` carries the violated constraint.
    pub fn check_rank(self, rank: usize) -> std::result::Result<(), &'static str> {
        let ok = match self {
            RootType::A => rank >= 1,
            RootType::B => rank >= 2,
            RootType::C => rank >= 3,
            RootType::D => rank >= 4,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        };
        if ok {
            return Ok(());
        }
        Err(match self {
            RootType::A => "type A needs rank >= 1",
            RootType::B => "type B needs rank >= 2",
            RootType::C => "type C needs rank >= 3 (C2 is B2)",
            RootType::D => "type D needs rank >= 4 (D3 is A3)",
            RootType::E => "type E exists only in ranks 6, 7, 8",
            RootType::F => "type F exists only in rank 4",
            RootType::G => "type G exists only in rank 2",
        })
    }

    /// Every valid rank of this type up to `max_rank`.
    pub fn ranks_up_to(self, max_rank: usize) -> impl Iterator<Item = usize> {
        (1..=max_rank).filter(move |&r| self.check_rank(r).is_ok())
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Parses labels such as `A2`, `f4`, `E6`.
pub fn parse_system_label(label: &str) -> Result<(RootType, usize)> {
    let mut chars = label.trim().chars();
    let kind = chars
        .next()
        .and_then(RootType::from_letter)
        .ok_or_else(|| {
            Error::Parse(format!(
                "unknown root system `{label}`, expected e.g. A2 or F4"
            ))
        })?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("missing or invalid rank in `{label}`")))?;
    kind.check_rank(rank).map_err(|c| Error::InvalidType {
        label: kind.to_string(),
        rank,
        constraint: c.to_string(),
    })?;
    Ok((kind, rank))
}

/// Position in [`RootSystem::roots`]. At most 240 roots (`E_8`) exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIndex(pub u8);

impl RootIndex {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// A subset `J` of the simple roots, stored 0-based. Displayed 1-based.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset(pub u16);

impl SimpleSubset {
    pub const EMPTY: SimpleSubset = SimpleSubset(0);

    pub fn full(rank: usize) -> Self {
        SimpleSubset(((1u32 << rank) - 1) as u16)
    }

    /// From 1-based simple-root labels.
    pub fn from_one_based(labels: &[usize], rank: usize) -> Result<Self> {
        let mut bits = 0u16;
        for &i in labels {
            if i == 0 || i > rank {
                return Err(Error::Parse(format!(
                    "simple root index {i} out of range 1..={rank}"
                )));
            }
            bits |= 1 << (i - 1);
        }
        Ok(SimpleSubset(bits))
    }

    pub fn from_zero_based<I: IntoIterator<Item = usize>>(members: I) -> Self {
        SimpleSubset(members.into_iter().fold(0, |b, i| b | 1 << i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    /// 0-based members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&i| self.contains(i))
    }

    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of `{0, …, rank−1}`, in increasing bit order.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSubset> {
        (0..1u32 << rank).map(|b| SimpleSubset(b as u16))
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Symmetric Gram matrix of the simple roots, scaled to integers.
fn gram_matrix(kind: RootType, rank: usize) -> Vec<Vec<i32>> {
    let mut g = vec![vec![0i32; rank]; rank];
    let bond = |g: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
        g[i][j] = v;
        g[j][i] = v;
    };
    let diagonal = |g: &mut Vec<Vec<i32>>, v: i32| {
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = v;
        }
    };
    match kind {
        RootType::A => {
            diagonal(&mut g, 2);
            for i in 1..rank {
                bond(&mut g, i - 1, i, -1);
            }
        }
        RootType::B => {
            // long roots squared length 4, α_n short with 2
            diagonal(&mut g, 4);
            g[rank - 1][rank - 1] = 2;
            for i in 1..rank {
                bond(&mut g, i - 1, i, -2);
            }
        }
        RootType::C => {
            // short roots squared length 2, α_n long with 4
            diagonal(&mut g, 2);
            g[rank - 1][rank - 1] = 4;
            for i in 1..rank - 1 {
                bond(&mut g, i - 1, i, -1);
            }
            bond(&mut g, rank - 2, rank - 1, -2);
        }
        RootType::D => {
            diagonal(&mut g, 2);
            for i in 1..rank - 1 {
                bond(&mut g, i - 1, i, -1);
            }
            bond(&mut g, rank - 3, rank - 1, -1);
        }
        RootType::E => {
            diagonal(&mut g, 2);
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
            bond(&mut g, 0, 2, -1);
            bond(&mut g, 1, 3, -1);
            for i in 3..rank {
                bond(&mut g, i - 1, i, -1);
            }
        }
        RootType::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            bond(&mut g, 0, 1, -2);
            bond(&mut g, 1, 2, -2);
            bond(&mut g, 2, 3, -1);
        }
        RootType::G => {
            // α_1 short, α_2 long
            g[0][0] = 2;
            g[1][1] = 6;
            bond(&mut g, 0, 1, -3);
        }
    }
    g
}

/// Cartan matrix with `A[i][j] = ⟨α_i, α_j∨⟩ = 2(α_i, α_j)/(α_j, α_j)`.
pub fn cartan_matrix(kind: RootType, rank: usize) -> Vec<Vec<i32>> {
    let g = gram_matrix(kind, rank);
    (0..rank)
        .map(|i| (0..rank).map(|j| 2 * g[i][j] / g[j][j]).collect())
        .collect()
}

/// Closed-form `|Φ⁺|`.
pub fn expected_positive_roots(kind: RootType, rank: usize) -> usize {
    let n = rank;
    match kind {
        RootType::A => n * (n + 1) / 2,
        RootType::B | RootType::C => n * n,
        RootType::D => n * (n - 1),
        RootType::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        RootType::F => 24,
        RootType::G => 6,
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Vec<i32>>,
    index_of: HashMap<Vec<i32>, RootIndex>,
    n_pos: usize,
    /// `sums[a * len + b]` is the index of `roots[a] + roots[b]` if a root.
    sums: Vec<Option<RootIndex>>,
    /// Positive triples `(p, q, r)` with `p < q` and `γ_p + γ_q = γ_r`.
    pos_triples: Vec<(u8, u8, u8)>,
    /// Permutation of root indices induced by each simple reflection.
    reflections: Vec<Vec<u8>>,
    /// `Φ_J⁺` for every `J`, indexed by the subset bits.
    subsystem_masks: Vec<RootMask>,
}

impl RootSystem {
    /// Builds `Φ` by closing the simple roots under simple reflections
    /// `s_j(α) = α − ⟨α, α_j∨⟩ α_j`.
    pub fn new(kind: RootType, rank: usize) -> Result<RootSystem> {
        kind.check_rank(rank).map_err(|c| Error::InvalidType {
            label: kind.to_string(),
            rank,
            constraint: c.to_string(),
        })?;
        let cartan = cartan_matrix(kind, rank);

        let reflect = |v: &[i32], j: usize| -> Vec<i32> {
            let pairing: i32 = (0..rank).map(|i| v[i] * cartan[i][j]).sum();
            let mut out = v.to_vec();
            out[j] -= pairing;
            out
        };

        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            if seen.insert(e.clone(), ()).is_none() {
                queue.push_back(e);
            }
        }
        while let Some(v) = queue.pop_front() {
            for j in 0..rank {
                let r = reflect(&v, j);
                if !seen.contains_key(&r) {
                    seen.insert(r.clone(), ());
                    queue.push_back(r);
                }
            }
        }

        let mut positive: Vec<Vec<i32>> = seen
            .into_keys()
            .filter(|v| v.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| {
            let (ha, hb): (i32, i32) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(
            positive
                .iter()
                .map(|v| v.iter().map(|c| -c).collect::<Vec<_>>()),
        );
        assert!(roots.len() <= 256, "root table exceeds u8 indexing");

        let index_of: HashMap<Vec<i32>, RootIndex> = roots
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), RootIndex(i as u8)))
            .collect();

        let len = roots.len();
        let mut sums = vec![None; len * len];
        for a in 0..len {
            for b in 0..len {
                let s: Vec<i32> = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
                sums[a * len + b] = index_of.get(&s).copied();
            }
        }
        let mut pos_triples = Vec::new();
        for p in 0..n_pos {
            for q in p + 1..n_pos {
                if let Some(r) = sums[p * len + q] {
                    pos_triples.push((p as u8, q as u8, r.0));
                }
            }
        }

        let reflections = (0..rank)
            .map(|j| {
                roots
                    .iter()
                    .map(|v| index_of[&reflect(v, j)].0)
                    .collect::<Vec<u8>>()
            })
            .collect();

        let subsystem_masks = SimpleSubset::all(rank)
            .map(|j| {
                (0..n_pos)
                    .filter(|&k| {
                        roots[k]
                            .iter()
                            .enumerate()
                            .all(|(i, &c)| c == 0 || j.contains(i))
                    })
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            kind,
            rank,
            cartan,
            roots,
            index_of,
            n_pos,
            sums,
            pos_triples,
            reflections,
            subsystem_masks,
        })
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `|Φ⁺|`.
    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> &[Vec<i32>] {
        &self.roots
    }

    pub fn coefficients(&self, a: RootIndex) -> &[i32] {
        &self.roots[a.idx()]
    }

    pub fn index_of(&self, coeffs: &[i32]) -> Option<RootIndex> {
        self.index_of.get(coeffs).copied()
    }

    pub fn simple(&self, i: usize) -> RootIndex {
        debug_assert!(i < self.rank);
        RootIndex(i as u8)
    }

    pub fn height(&self, a: RootIndex) -> i32 {
        self.roots[a.idx()].iter().sum()
    }

    #[inline]
    pub fn is_positive(&self, a: RootIndex) -> bool {
        a.idx() < self.n_pos
    }

    #[inline]
    pub fn negate(&self, a: RootIndex) -> RootIndex {
        let k = a.idx();
        if k < self.n_pos {
            RootIndex((k + self.n_pos) as u8)
        } else {
            RootIndex((k - self.n_pos) as u8)
        }
    }

    /// The negative root `-γ_k` for positive position `k`.
    #[inline]
    pub fn neg_of(&self, k: usize) -> RootIndex {
        RootIndex((k + self.n_pos) as u8)
    }

    /// Position in `0..N` of `±γ`, i.e. the mask bit for this root's sign class.
    #[inline]
    pub fn position(&self, a: RootIndex) -> usize {
        a.idx() % self.n_pos
    }

    #[inline]
    pub fn root_sum(&self, a: RootIndex, b: RootIndex) -> Option<RootIndex> {
        self.sums[a.idx() * self.roots.len() + b.idx()]
    }

    pub fn positive_sum_triples(&self) -> &[(u8, u8, u8)] {
        &self.pos_triples
    }

    /// `s_j` as a permutation of root indices.
    pub fn reflection(&self, j: usize) -> &[u8] {
        &self.reflections[j]
    }

    /// Whether the root's support lies in `J`.
    pub fn supported_on(&self, a: RootIndex, j: SimpleSubset) -> bool {
        self.roots[a.idx()]
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || j.contains(i))
    }

    /// `Φ_J`: every root supported on `J`.
    pub fn subsystem(&self, j: SimpleSubset) -> Vec<RootIndex> {
        (0..self.roots.len())
            .map(|i| RootIndex(i as u8))
            .filter(|&a| self.supported_on(a, j))
            .collect()
    }

    /// `Φ_J⁺` as a mask over positive positions.
    pub fn subsystem_mask(&self, j: SimpleSubset) -> RootMask {
        self.subsystem_masks[j.0 as usize]
    }

    pub fn all_positive(&self) -> RootMask {
        RootMask::full(self.n_pos)
    }

    pub fn simple_mask(&self) -> RootMask {
        RootMask::full(self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(rs: &RootSystem, v: &[i32]) -> RootIndex {
        rs.index_of(v).unwrap()
    }

    #[test]
    fn a1_has_two_roots() {
        let rs = RootSystem::new(RootType::A, 1).unwrap();
        assert_eq!(rs.roots(), &[vec![1], vec![-1]]);
    }

    #[test]
    fn a2_positive_roots() {
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        assert_eq!(rs.len(), 6);
        assert_eq!(&rs.roots()[..3], &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_has_twelve_roots_and_highest_root() {
        let rs = RootSystem::new(RootType::G, 2).unwrap();
        assert_eq!(rs.len(), 12);
        assert_eq!(rs.roots()[5], vec![3, 2]);
    }

    #[test]
    fn b_and_c_are_transposed() {
        let b = RootSystem::new(RootType::B, 3).unwrap();
        let c = RootSystem::new(RootType::C, 3).unwrap();
        // highest roots: B3 = α1+2α2+2α3, C3 = 2α1+2α2+α3
        assert_eq!(b.roots()[b.num_positive() - 1], vec![1, 2, 2]);
        assert_eq!(c.roots()[c.num_positive() - 1], vec![2, 2, 1]);
        assert_eq!(b.cartan()[1][2], -2);
        assert_eq!(c.cartan()[2][1], -2);
    }

    #[test]
    fn invalid_types_are_rejected() {
        for (t, r) in [
            (RootType::A, 0),
            (RootType::B, 1),
            (RootType::C, 2),
            (RootType::D, 3),
            (RootType::E, 5),
            (RootType::E, 9),
            (RootType::F, 3),
            (RootType::G, 3),
        ] {
            match RootSystem::new(t, r) {
                Err(Error::InvalidType { constraint, .. }) => assert!(!constraint.is_empty()),
                other => panic!("{t}{r}: expected rejection, got {other:?}"),
            }
        }
    }

    #[test]
    fn label_parsing() {
        assert_eq!(parse_system_label("f4").unwrap(), (RootType::F, 4));
        assert_eq!(parse_system_label("A12").unwrap(), (RootType::A, 12));
        assert!(matches!(parse_system_label("X3"), Err(Error::Parse(_))));
        assert!(matches!(parse_system_label("A"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_system_label("C2"),
            Err(Error::InvalidType { .. })
        ));
    }

    #[test]
    fn root_sum_examples() {
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        let (a1, a2, a12) = (idx(&rs, &[1, 0]), idx(&rs, &[0, 1]), idx(&rs, &[1, 1]));
        assert_eq!(rs.root_sum(a1, a2), Some(a12));
        assert_eq!(rs.root_sum(a1, a1), None);
        assert_eq!(rs.root_sum(rs.negate(a1), a12), Some(a2));
        assert_eq!(rs.root_sum(a1, rs.negate(a1)), None);
    }

    #[test]
    fn negate_and_sign() {
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        let a1 = idx(&rs, &[1, 0]);
        assert_eq!(rs.coefficients(rs.negate(a1)), &[-1, 0]);
        assert!(rs.is_positive(idx(&rs, &[1, 1])));
        assert!(!rs.is_positive(idx(&rs, &[0, -1])));
    }

    #[test]
    fn subsystem_examples() {
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        let coeffs = |j| -> Vec<Vec<i32>> {
            rs.subsystem(j)
                .iter()
                .map(|&a| rs.coefficients(a).to_vec())
                .collect()
        };
        assert_eq!(coeffs(SimpleSubset(0b01)), vec![vec![1, 0], vec![-1, 0]]);
        assert!(coeffs(SimpleSubset::EMPTY).is_empty());
        assert_eq!(coeffs(SimpleSubset(0b11)).len(), 6);
    }

    #[test]
    fn simple_subset_labels() {
        let j = SimpleSubset::from_one_based(&[1, 3], 3).unwrap();
        assert_eq!(j.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(j.to_string(), "{1,3}");
        assert!(SimpleSubset::from_one_based(&[4], 3).is_err());
        assert!(SimpleSubset::from_one_based(&[0], 3).is_err());
        assert_eq!(SimpleSubset::all(3).count(), 8);
    }
}
