use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation(Vec<u32>);

/// Checks that `raw` contains each of `1..=n` exactly once.
pub fn validate_permutation(raw: &[i64]) -> Result<Permutation> {
    let n = raw.len();
    let mut seen = vec![false; n];
    for (i, &v) in raw.iter().enumerate() {
        if v < 1 || v as u64 > n as u64 {
            return Err(Error::NotAPermutation(format!(
                "value {v} at position {} is outside 1..={n}",
                i + 1
            )));
        }
        let slot = &mut seen[v as usize - 1];
        if *slot {
            return Err(Error::NotAPermutation(format!(
                "value {v} repeated at position {}",
                i + 1
            )));
        }
        *slot = true;
    }
    Ok(Permutation(raw.iter().map(|&v| v as u32).collect()))
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn new(image: Vec<u32>) -> Result<Self> {
        let raw: Vec<i64> = image.iter().map(|&v| i64::from(v)).collect();
        validate_permutation(&raw)?;
        Ok(Permutation(image))
    }

    pub(crate) fn from_vec_unchecked(image: Vec<u32>) -> Self {
        Permutation(image)
    }

    pub fn image(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the longest strictly increasing subsequence (0 when empty),
    /// by patience sorting.
    pub fn lis_length(&self) -> usize {
        let mut tops: Vec<u32> = Vec::new();
        for &v in &self.0 {
            match tops.binary_search(&v) {
                Ok(_) => unreachable!("permutation values are distinct"),
                Err(i) if i == tops.len() => tops.push(v),
                Err(i) => tops[i] = v,
            }
        }
        tops.len()
    }

    pub fn is_123_avoiding(&self) -> bool {
        self.lis_length() <= 2
    }

    /// Largest `m` with `image[1] > … > image[m]`; 0 for the empty permutation.
    pub fn decreasing_prefix(&self) -> usize {
        if self.0.is_empty() {
            return 0;
        }
        1 + self.0.windows(2).take_while(|w| w[0] > w[1]).count()
    }

    pub fn last_letter(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Position (1-based) of the value `v`.
    pub fn position_of(&self, v: u32) -> Option<usize> {
        self.0.iter().position(|&x| x == v).map(|i| i + 1)
    }

    /// Lexicographically next permutation, or `None` after the last one.
    pub fn next_lexicographic(&self) -> Option<Permutation> {
        let mut v = self.0.clone();
        let i = v.windows(2).rposition(|w| w[0] < w[1])?;
        let j = v
            .iter()
            .rposition(|&x| x > v[i])
            .expect("pivot has a larger successor");
        v.swap(i, j);
        v[i + 1..].reverse();
        Some(Permutation(v))
    }
}

pub fn lis_length(p: &Permutation) -> usize {
    p.lis_length()
}

pub fn is_123_avoiding(p: &Permutation) -> bool {
    p.is_123_avoiding()
}

pub fn perm_decreasing_prefix(p: &Permutation) -> usize {
    p.decreasing_prefix()
}

/// Last letter of a nonempty permutation.
pub fn perm_last_letter(p: &Permutation) -> Result<u32> {
    p.last_letter().ok_or(Error::EmptyWord)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_letters(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        validate_permutation(&super::text::parse_letters(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lis_examples() {
        assert_eq!(p("53412").lis_length(), 2);
        assert_eq!(p("12345").lis_length(), 5);
        assert_eq!(p("321").lis_length(), 1);
        assert_eq!(Permutation::default().lis_length(), 0);
    }

    #[test]
    fn avoidance_examples() {
        assert!(p("3412").is_123_avoiding());
        assert!(!p("1234").is_123_avoiding());
        assert!(Permutation::default().is_123_avoiding());
    }

    #[test]
    fn prefix_and_last() {
        assert_eq!(p("312").decreasing_prefix(), 2);
        assert_eq!(p("321").decreasing_prefix(), 3);
        assert_eq!(p("12").decreasing_prefix(), 1);
        assert_eq!(perm_last_letter(&p("312")), Ok(2));
        assert_eq!(perm_last_letter(&p("1")), Ok(1));
    }

    #[test]
    fn validation() {
        assert!(matches!(
            "122".parse::<Permutation>(),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            "14".parse::<Permutation>(),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            "0".parse::<Permutation>(),
            Err(Error::NotAPermutation(_))
        ));
        let big = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }

    #[test]
    fn lexicographic_successor() {
        let mut cur = Some(Permutation::identity(3));
        let mut seen = Vec::new();
        while let Some(q) = cur {
            seen.push(q.to_string());
            cur = q.next_lexicographic();
        }
        assert_eq!(seen, ["123", "132", "213", "231", "312", "321"]);
    }
}
