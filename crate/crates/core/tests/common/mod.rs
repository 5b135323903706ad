//! Type A in the permutation model, independent of the root tables.
//!
//! `A_{n−1}` has roots `e_a − e_b` (`a ≠ b`, 1-based), positive iff `a < b`,
//! simple roots `e_i − e_{i+1}`, and `W = S_n` acting by `e_a ↦ e_{σ(a)}`.
//! A Hessenberg function `h` puts the negative root `e_a − e_b` (`a > b`) in
//! `Φ_H⁻` iff `a ≤ h(b)`.

#![allow(dead_code)]

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// All Hessenberg functions on `{1..n}`.
pub fn hessenberg_functions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = prefix.len() + 1;
        if i > n {
            out.push(prefix.clone());
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1).max(i);
        for v in lo..=n {
            prefix.push(v);
            go(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// `(e_a − e_b) ∈ Φ_H`.
fn in_h(h: &[usize], a: usize, b: usize) -> bool {
    a < b || a <= h[b - 1]
}

/// Betti numbers for `h` and `J` (1-based simple indices), indexed by
/// complex dimension.
pub fn betti(h: &[usize], j: &[usize]) -> Vec<u64> {
    let n = h.len();
    let neg: Vec<(usize, usize)> = (1..=n)
        .flat_map(|b| (b + 1..=n).map(move |a| (a, b)))
        .filter(|&(a, b)| a <= h[b - 1])
        .collect();
    let mut counts = vec![0u64; neg.len() + 1];
    for sigma in permutations(n) {
        let mut inv = vec![0; n + 1];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i + 1;
        }
        // w⁻¹(e_i − e_{i+1}) = e_{σ⁻¹(i)} − e_{σ⁻¹(i+1)}
        if !j.iter().all(|&i| in_h(h, inv[i], inv[i + 1])) {
            continue;
        }
        let dim = neg
            .iter()
            .filter(|&&(a, b)| sigma[a - 1] < sigma[b - 1])
            .count();
        counts[dim] += 1;
    }
    counts
}

pub fn subsets(rank: usize) -> Vec<Vec<usize>> {
    (0..1u32 << rank)
        .map(|bits| (1..=rank).filter(|i| bits >> (i - 1) & 1 == 1).collect())
        .collect()
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// `(|Φ|, |W|)` from the classification.
pub fn closed_forms(letter: char, n: u64) -> (u64, u64) {
    match (letter, n) {
        ('A', n) => (n * (n + 1), factorial(n + 1)),
        ('B' | 'C', n) => (2 * n * n, (1 << n) * factorial(n)),
        ('D', n) => (2 * n * (n - 1), (1 << (n - 1)) * factorial(n)),
        ('E', 6) => (72, 51_840),
        ('E', 7) => (126, 2_903_040),
        ('E', 8) => (240, 696_729_600),
        ('F', 4) => (48, 1152),
        ('G', 2) => (12, 12),
        _ => panic!("no closed form for {letter}{n}"),
    }
}
