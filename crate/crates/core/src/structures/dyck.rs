use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Code;

/// One letter of a Dyck word: a north-east (`Up`) or south-east (`Down`) step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    /// Canonical letter: `a` for Up, `b` for Down.
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'a',
            Step::Down => 'b',
        }
    }

    /// Accepts `a`/`b`, `(`/`)` and `U`/`D`.
    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'a' | '(' | 'U' => Some(Step::Up),
            'b' | ')' | 'D' => Some(Step::Down),
            _ => None,
        }
    }
}

/// A balanced word over {Up, Down} in which every prefix has at least as many
/// Up as Down letters. `len()` counts letters; `semilength()` is half of it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckWord(Vec<Step>);

/// Checks the Dyck invariants on a raw letter sequence.
pub fn validate_dyck(raw: &[Step]) -> Result<DyckWord> {
    let mut height: i64 = 0;
    for (i, s) in raw.iter().enumerate() {
        height += match s {
            Step::Up => 1,
            Step::Down => -1,
        };
        if height < 0 {
            return Err(Error::PrefixViolation(i + 1));
        }
    }
    if height != 0 {
        return Err(Error::Unbalanced(height));
    }
    Ok(DyckWord(raw.to_vec()))
}

impl DyckWord {
    pub fn empty() -> Self {
        DyckWord(Vec::new())
    }

    pub(crate) fn from_vec_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(validate_dyck(&steps).is_ok());
        DyckWord(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    /// 1-based positions of the Up letters, in increasing order.
    pub fn up_positions(&self) -> Vec<u32> {
        self.positions_of(Step::Up)
    }

    /// 1-based positions of the Down letters, in increasing order.
    pub fn down_positions(&self) -> Vec<u32> {
        self.positions_of(Step::Down)
    }

    fn positions_of(&self, step: Step) -> Vec<u32> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == step)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// Height of the path after each Up step, in order.
    pub fn up_heights(&self) -> Vec<u32> {
        let mut height = 0u32;
        let mut out = Vec::with_capacity(self.semilength());
        for s in &self.0 {
            match s {
                Step::Up => {
                    height += 1;
                    out.push(height);
                }
                Step::Down => height -= 1,
            }
        }
        out
    }

    /// Builds the word whose Up steps end at the heights listed by `heights`,
    /// descending between consecutive Up steps and returning to 0 at the end.
    pub fn from_up_heights(heights: &Code) -> DyckWord {
        let mut steps = Vec::with_capacity(2 * heights.len());
        let mut height = 0u32;
        for &h in heights.letters() {
            for _ in h..=height {
                steps.push(Step::Down);
            }
            steps.push(Step::Up);
            height = h;
        }
        steps.extend(std::iter::repeat_n(Step::Down, height as usize));
        DyckWord::from_vec_unchecked(steps)
    }

    /// Number of Down letters at the end of the word.
    pub fn trailing_descents(&self) -> Result<u32> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(self
            .0
            .iter()
            .rev()
            .take_while(|&&s| s == Step::Down)
            .count() as u32)
    }

    /// Number of irreducible factors, i.e. returns of the path to height 0.
    pub fn irreducible_factors(&self) -> Result<u32> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut height = 0i64;
        let mut returns = 0;
        for s in &self.0 {
            height += if *s == Step::Up { 1 } else { -1 };
            if height == 0 {
                returns += 1;
            }
        }
        Ok(returns)
    }
}

pub fn dyck_trailing_descents(w: &DyckWord) -> Result<u32> {
    w.trailing_descents()
}

pub fn dyck_irreducible_factors(w: &DyckWord) -> Result<u32> {
    w.irreducible_factors()
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                Step::from_char(c).ok_or_else(|| {
                    Error::Parse(format!("unexpected letter {c:?} at position {}", i + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        validate_dyck(&steps)
    }
}
