use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A sequence `a_1 … a_n` of positive integers with `a_1 = 1` and
/// `a_{i+1} <= a_i + 1`. The void sequence is a valid code.
///
/// The derived ordering is lexicographic, which for codes of equal length is
/// the canonical enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Code(Vec<u32>);

impl Code {
    pub fn void() -> Self {
        Code(Vec::new())
    }

    /// Validates letters that are already known to be positive.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        check_letters(letters.iter().map(|&v| i64::from(v)))?;
        Ok(Code(letters))
    }

    /// Builds a code without checking. Callers must uphold the growth rule.
    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(check_letters(letters.iter().map(|&v| i64::from(v))).is_ok());
        Code(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The last letter `a_n`.
    pub fn last(&self) -> Result<u32> {
        self.0.last().copied().ok_or(Error::EmptyCode)
    }

    /// The code with its last letter removed (the void code stays void).
    pub fn truncated(&self) -> Code {
        let mut v = self.0.clone();
        v.pop();
        Code(v)
    }

    /// Appends `letter` if the growth rule allows it.
    pub fn extended(&self, letter: u32) -> Result<Code> {
        let bound = self.0.last().map_or(1, |&v| v + 1);
        if letter == 0 {
            return Err(Error::NonPositiveLetter(self.len() + 1));
        }
        if self.is_empty() && letter != 1 {
            return Err(Error::FirstLetterNotOne);
        }
        if letter > bound {
            return Err(Error::GrowthViolation(self.len() + 1));
        }
        let mut v = self.0.clone();
        v.push(letter);
        Ok(Code(v))
    }
}

fn check_letters(letters: impl Iterator<Item = i64>) -> Result<()> {
    let mut prev: Option<i64> = None;
    for (i, v) in letters.enumerate() {
        let pos = i + 1;
        if v < 1 {
            return Err(Error::NonPositiveLetter(pos));
        }
        match prev {
            None if v != 1 => return Err(Error::FirstLetterNotOne),
            Some(p) if v > p + 1 => return Err(Error::GrowthViolation(pos)),
            _ => {}
        }
        prev = Some(v);
    }
    Ok(())
}

/// Checks the code invariants on a raw integer sequence.
pub fn validate_code(raw: &[i64]) -> Result<Code> {
    check_letters(raw.iter().copied())?;
    let letters = raw
        .iter()
        .map(|&v| u32::try_from(v).map_err(|_| Error::OutOfRange(format!("letter {v} too large"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Code(letters))
}

/// Last letter of a nonempty code.
pub fn code_last(c: &Code) -> Result<u32> {
    c.last()
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_letters(f, &self.0)
    }
}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        validate_code(&super::text::parse_letters(s)?)
    }
}
