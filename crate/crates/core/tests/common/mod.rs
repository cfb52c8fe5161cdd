//! Brute-force oracles. None of these go through codes, codecs or the
//! counting engines they are used to check.

#![allow(dead_code)]

use catcodes_core::{DyckWord, Permutation, Step};

/// LIS by checking every subsequence.
pub fn lis_brute(values: &[u32]) -> usize {
    let n = values.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let picked: Vec<u32> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| values[i])
            .collect();
        if picked.windows(2).all(|w| w[0] < w[1]) {
            best = best.max(picked.len());
        }
    }
    best
}

/// Every permutation of `1..=n` via Heap's algorithm (order irrelevant).
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    fn heap(k: usize, a: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    let mut a: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Number of standard fillings of the two-row shape `(l1, l2)`: every
/// choice of `l1` entries for the first row, kept when both rows sorted
/// satisfy the column condition.
pub fn standard_fillings(l1: usize, l2: usize) -> u64 {
    let total = l1 + l2;
    let mut count = 0;
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != l1 {
            continue;
        }
        let top: Vec<usize> = (0..total).filter(|&i| mask >> i & 1 == 1).collect();
        let bottom: Vec<usize> = (0..total).filter(|&i| mask >> i & 1 == 0).collect();
        if bottom.iter().zip(&top).all(|(b, t)| t < b) {
            count += 1;
        }
    }
    count
}

/// Every word of length `2n` over {Up, Down} that parses as a Dyck word,
/// found by filtering all `4^n` words.
pub fn dyck_words_brute(n: usize) -> Vec<DyckWord> {
    let len = 2 * n;
    (0u32..(1 << len))
        .filter_map(|mask| {
            let steps: Vec<Step> = (0..len)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Step::Up
                    } else {
                        Step::Down
                    }
                })
                .collect();
            catcodes_core::validate_dyck(&steps).ok()
        })
        .collect()
}

/// 123-avoiding permutations by checking every triple of positions.
pub fn avoiding_perms_brute(n: usize) -> Vec<Permutation> {
    all_permutations(n)
        .into_iter()
        .filter(|p| {
            !(0..n).any(|i| (i + 1..n).any(|j| p[i] < p[j] && (j + 1..n).any(|k| p[j] < p[k])))
        })
        .map(|p| Permutation::new(p).unwrap())
        .collect()
}

/// Histogram of `values` over `0..=len-1`.
pub fn histogram(values: impl IntoIterator<Item = usize>, len: usize) -> Vec<u64> {
    let mut h = vec![0; len];
    for v in values {
        h[v] += 1;
    }
    h
}

/// `ballot_table` row `n` as `u64`s.
pub fn ballot_row(n: usize) -> Vec<u64> {
    catcodes_core::ballot_table(n)
        .row(n)
        .iter()
        .map(|v| u64::try_from(v).unwrap())
        .collect()
}
