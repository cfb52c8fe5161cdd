//! Exhaustive generation, lexicographic rank/unrank and exact-uniform
//! sampling of codes, plus the factorial filter for 123-avoiding
//! permutations.
//!
//! Ranking and sampling both run on [`ExtensionTable`]: `T(m, v)` counts the
//! ways to append `m` more letters to a code whose last letter is `v`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bijections::{chi_decode, Family, Object};
use crate::counting::catalan;
use crate::error::{Error, Result};
use crate::structures::{Code, Permutation};

/// Largest `n` for which [`enum_codes`] materializes the full list
/// (`C_15 = 9 694 845`). Use [`CodeIter`] beyond it.
pub const MAX_MATERIALIZED_N: usize = 15;

/// Largest `n` accepted by [`enum_avoiding_perms`] (`9! = 362 880`).
pub const MAX_ORACLE_N: usize = 9;

/// The generator behind every seeded operation.
pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTable {
    m_max: usize,
    v_max: usize,
    // rows[m][v - 1] = T(m, v), for v in 1..=v_max + (m_max - m)
    rows: Vec<Vec<BigUint>>,
}

impl ExtensionTable {
    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn v_max(&self) -> usize {
        self.v_max
    }

    /// `T(m, v)`. Defined for `m <= m_max` and `1 <= v <= v_max + (m_max - m)`.
    pub fn get(&self, m: usize, v: usize) -> &BigUint {
        self.try_get(m, v)
            .unwrap_or_else(|| panic!("T({m}, {v}) outside table ({}, {})", self.m_max, self.v_max))
    }

    pub fn try_get(&self, m: usize, v: usize) -> Option<&BigUint> {
        if v == 0 {
            return None;
        }
        self.rows.get(m)?.get(v - 1)
    }

    /// Table sized for codes of length `n`.
    pub fn for_length(n: usize) -> Self {
        extension_counts(n.saturating_sub(1), n.max(1))
    }
}

/// Builds `T(m, v)` from `T(0, v) = 1` and `T(m, v) = sum_{u=1..=v+1} T(m-1, u)`.
pub fn extension_counts(m_max: usize, v_max: usize) -> ExtensionTable {
    let width = |m: usize| v_max + (m_max - m);
    let mut rows = Vec::with_capacity(m_max + 1);
    rows.push(vec![BigUint::one(); width(0)]);
    for m in 1..=m_max {
        let prev: &Vec<BigUint> = &rows[m - 1];
        let mut row = Vec::with_capacity(width(m));
        // Running prefix sum: T(m, v) = T(m, v - 1) + T(m - 1, v + 1).
        let mut acc = prev[0].clone();
        for t in &prev[1..=width(m)] {
            acc += t;
            row.push(acc.clone());
        }
        rows.push(row);
    }
    ExtensionTable { m_max, v_max, rows }
}

/// Streams the codes of length `n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct CodeIter {
    next: Option<Vec<u32>>,
}

impl CodeIter {
    pub fn new(n: usize) -> Self {
        CodeIter {
            next: Some(vec![1; n]),
        }
    }
}

impl Iterator for CodeIter {
    type Item = Code;

    fn next(&mut self) -> Option<Code> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i] <= succ[i - 1]) {
            succ[i] += 1;
            succ[i + 1..].fill(1);
            self.next = Some(succ);
        }
        Some(Code::from_vec_unchecked(cur))
    }
}

/// All codes of length `n` in lexicographic order.
pub fn enum_codes(n: usize) -> Result<Vec<Code>> {
    if n > MAX_MATERIALIZED_N {
        return Err(Error::ResourceLimit(format!(
            "enum_codes materializes at most n = {MAX_MATERIALIZED_N}; stream with CodeIter for n = {n}"
        )));
    }
    Ok(CodeIter::new(n).collect())
}

/// All size-`n` objects of `family`, in the order induced by the codes.
pub fn enum_family(n: usize, family: Family) -> Result<Vec<Object>> {
    enum_codes(n)?
        .iter()
        .map(|c| chi_decode(c, family))
        .collect()
}

/// Streaming counterpart of [`enum_family`], unbounded in `n`.
pub fn family_iter(n: usize, family: Family) -> impl Iterator<Item = Result<Object>> {
    CodeIter::new(n).map(move |c| chi_decode(&c, family))
}

/// Rank and unrank against a prebuilt table for one code length.
#[derive(Clone, Debug)]
pub struct CodeRanker {
    n: usize,
    table: ExtensionTable,
}

impl CodeRanker {
    pub fn new(n: usize) -> Self {
        CodeRanker {
            n,
            table: ExtensionTable::for_length(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codes of this length, `T(n - 1, 1) = C_n`.
    pub fn count(&self) -> BigUint {
        if self.n == 0 {
            BigUint::one()
        } else {
            self.table.get(self.n - 1, 1).clone()
        }
    }

    pub fn rank(&self, c: &Code) -> Result<BigUint> {
        if c.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "code of length {} ranked against length {}",
                c.len(),
                self.n
            )));
        }
        let a = c.letters();
        let mut r = BigUint::zero();
        for (i, &letter) in a.iter().enumerate().skip(1) {
            let remaining = self.n - 1 - i;
            for u in 1..letter {
                r += self.table.get(remaining, u as usize);
            }
        }
        Ok(r)
    }

    pub fn unrank(&self, rank: &BigUint) -> Result<Code> {
        let count = self.count();
        if *rank >= count {
            return Err(Error::RankOutOfRange {
                rank: rank.to_string(),
                count: count.to_string(),
            });
        }
        let mut r = rank.clone();
        let mut letters = Vec::with_capacity(self.n);
        if self.n > 0 {
            letters.push(1u32);
        }
        for i in 1..self.n {
            let remaining = self.n - 1 - i;
            let prev = letters[i - 1];
            let mut chosen = prev + 1;
            for u in 1..=prev + 1 {
                let t = self.table.get(remaining, u as usize);
                if r < *t {
                    chosen = u;
                    break;
                }
                r -= t;
            }
            letters.push(chosen);
        }
        Ok(Code::from_vec_unchecked(letters))
    }
}

/// 0-based lexicographic index of `c` among codes of its length.
pub fn rank_code(c: &Code) -> BigUint {
    CodeRanker::new(c.len())
        .rank(c)
        .expect("ranker built for this length")
}

pub fn unrank_code(n: usize, rank: &BigUint) -> Result<Code> {
    CodeRanker::new(n).unrank(rank)
}

/// Uniform integer in `[0, bound)`: rejection sampling over `bound.bits()`
/// random bits, drawn as little-endian `u32` words from `next_u32`.
pub fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "empty range");
    let bits = bound.bits();
    let words = bits.div_ceil(32) as usize;
    let top_mask = match bits % 32 {
        0 => u32::MAX,
        r => (1u32 << r) - 1,
    };
    // Fast path: the common small case avoids allocating.
    if let Some(b) = bound.to_u64() {
        loop {
            let lo = u64::from(rng.next_u32());
            let x = if words == 2 {
                lo | (u64::from(rng.next_u32() & top_mask) << 32)
            } else {
                lo & u64::from(top_mask)
            };
            if x < b {
                return BigUint::from(x);
            }
        }
    }
    let mut digits = vec![0u32; words];
    loop {
        for d in digits.iter_mut() {
            *d = rng.next_u32();
        }
        digits[words - 1] &= top_mask;
        let x = BigUint::from_slice(&digits);
        if x < *bound {
            return x;
        }
    }
}

/// Exact-uniform sampler over codes of one length.
///
/// Each letter `u` following current letter `v` with `m` letters still to go
/// after it is drawn with probability `T(m, u) / T(m + 1, v)`; the product
/// telescopes to `1 / C_n`.
#[derive(Clone, Debug)]
pub struct CodeSampler {
    n: usize,
    table: ExtensionTable,
}

impl CodeSampler {
    pub fn new(n: usize) -> Self {
        CodeSampler {
            n,
            table: ExtensionTable::for_length(n),
        }
    }

    pub fn sample<R: RngCore + ?Sized>(&self, rng: &mut R) -> Code {
        let mut letters = Vec::with_capacity(self.n);
        if self.n == 0 {
            return Code::void();
        }
        letters.push(1u32);
        for i in 1..self.n {
            let remaining = self.n - 1 - i;
            let v = letters[i - 1];
            let mut x = uniform_below(rng, self.table.get(remaining + 1, v as usize));
            let mut chosen = v + 1;
            for u in 1..=v + 1 {
                let t = self.table.get(remaining, u as usize);
                if x < *t {
                    chosen = u;
                    break;
                }
                x -= t;
            }
            letters.push(chosen);
        }
        Code::from_vec_unchecked(letters)
    }
}

/// One uniform code of length `n`, deterministic in `seed`.
pub fn sample_code(n: usize, seed: u64) -> Code {
    CodeSampler::new(n).sample(&mut rng_from_seed(seed))
}

/// Filters all of `S_n` for 123-avoidance, in lexicographic order.
pub fn enum_avoiding_perms(n: usize) -> Result<Vec<Permutation>> {
    if n > MAX_ORACLE_N {
        return Err(Error::TooLargeForOracle(n));
    }
    let mut out = Vec::new();
    let mut cur = Some(Permutation::identity(n));
    while let Some(p) = cur {
        cur = p.next_lexicographic();
        if p.is_123_avoiding() {
            out.push(p);
        }
    }
    Ok(out)
}

/// `C_n` as a convenience for callers that only hold a length.
pub fn code_count(n: usize) -> BigUint {
    catalan(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Code {
        s.parse().unwrap()
    }

    #[test]
    fn extension_examples() {
        let t = extension_counts(3, 5);
        assert_eq!(*t.get(3, 1), BigUint::from(14u32));
        assert_eq!(*t.get(0, 5), BigUint::one());
        assert_eq!(*t.get(1, 2), BigUint::from(3u32));
        assert!(t.try_get(0, 0).is_none());
        for n in 1..=12 {
            let t = ExtensionTable::for_length(n);
            assert_eq!(*t.get(n - 1, 1), catalan(n as u64));
        }
    }

    #[test]
    fn codes_of_length_four() {
        let got: Vec<String> = enum_codes(4).unwrap().iter().map(Code::to_string).collect();
        assert_eq!(
            got,
            [
                "1111", "1112", "1121", "1122", "1123", "1211", "1212", "1221", "1222", "1223",
                "1231", "1232", "1233", "1234"
            ]
        );
        assert_eq!(enum_codes(0).unwrap(), vec![Code::void()]);
        assert_eq!(enum_codes(1).unwrap(), vec![c("1")]);
        assert!(matches!(enum_codes(16), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_code(&c("1111")), BigUint::zero());
        assert_eq!(rank_code(&c("1234")), BigUint::from(13u32));
        assert_eq!(rank_code(&c("1211")), BigUint::from(5u32));
        assert_eq!(rank_code(&Code::void()), BigUint::zero());
        assert_eq!(unrank_code(4, &BigUint::from(4u32)).unwrap(), c("1123"));
        assert_eq!(unrank_code(4, &BigUint::zero()).unwrap(), c("1111"));
        assert_eq!(unrank_code(5, &BigUint::from(41u32)).unwrap(), c("12345"));
        assert_eq!(unrank_code(0, &BigUint::zero()).unwrap(), Code::void());
        assert!(matches!(
            unrank_code(5, &BigUint::from(42u32)),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn sampler_basics() {
        for seed in 0..20 {
            assert_eq!(sample_code(1, seed), c("1"));
        }
        let a = sample_code(5, 0x5eed);
        assert_eq!(a, sample_code(5, 0x5eed));
        assert_eq!(a.len(), 5);
    }

    #[test]
    fn uniform_below_covers_range() {
        let mut rng = rng_from_seed(7);
        let mut hits = [0u32; 5];
        for _ in 0..5000 {
            let x = uniform_below(&mut rng, &BigUint::from(5u32))
                .to_usize()
                .unwrap();
            hits[x] += 1;
        }
        assert!(hits.iter().all(|&h| (850..1150).contains(&h)), "{hits:?}");
        let huge = catalan(60);
        for _ in 0..100 {
            assert!(uniform_below(&mut rng, &huge) < huge);
        }
    }

    #[test]
    fn avoiding_perm_filter() {
        assert_eq!(enum_avoiding_perms(0).unwrap().len(), 1);
        assert_eq!(enum_avoiding_perms(3).unwrap().len(), 5);
        assert!(!enum_avoiding_perms(3)
            .unwrap()
            .contains(&Permutation::identity(3)));
        assert_eq!(enum_avoiding_perms(10), Err(Error::TooLargeForOracle(10)));
    }
}
