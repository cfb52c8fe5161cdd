use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, Row};

/// A standard Young tableau of shape `(n, n)`, stored as its two rows.
/// `row1` is the row holding the entry 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TwoRowTableau {
    row1: Vec<u32>,
    row2: Vec<u32>,
}

/// Checks shape, content, row monotonicity and column order, in that order.
pub fn validate_tableau(row1: &[i64], row2: &[i64]) -> Result<TwoRowTableau> {
    if row1.len() != row2.len() {
        return Err(Error::ShapeMismatch(row1.len(), row2.len()));
    }
    let total = row1.len() + row2.len();
    let mut seen = vec![false; total];
    for &v in row1.iter().chain(row2) {
        if v < 1 || v as u64 > total as u64 || std::mem::replace(&mut seen[v as usize - 1], true) {
            return Err(Error::ContentNotPermutationOf1To2n);
        }
    }
    for (row, values) in [(Row::First, row1), (Row::Second, row2)] {
        if let Some(i) = values.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(row, i + 2));
        }
    }
    if let Some(i) = row1.iter().zip(row2).position(|(a, b)| a >= b) {
        return Err(Error::ColumnViolation(i + 1));
    }
    Ok(TwoRowTableau {
        row1: row1.iter().map(|&v| v as u32).collect(),
        row2: row2.iter().map(|&v| v as u32).collect(),
    })
}

impl TwoRowTableau {
    pub fn new(row1: Vec<u32>, row2: Vec<u32>) -> Result<Self> {
        let widen = |r: &[u32]| r.iter().map(|&v| i64::from(v)).collect::<Vec<_>>();
        validate_tableau(&widen(&row1), &widen(&row2))
    }

    pub(crate) fn from_rows_unchecked(row1: Vec<u32>, row2: Vec<u32>) -> Self {
        TwoRowTableau { row1, row2 }
    }

    pub fn row1(&self) -> &[u32] {
        &self.row1
    }

    pub fn row2(&self) -> &[u32] {
        &self.row2
    }

    /// Number of columns, `n` for shape `(n, n)`.
    pub fn n(&self) -> usize {
        self.row1.len()
    }

    /// `2n` minus the last entry of the row containing 1; 0 when empty.
    pub fn h(&self) -> u32 {
        self.row1
            .last()
            .map_or(0, |&k| 2 * self.row1.len() as u32 - k)
    }
}

pub fn tableau_h(t: &TwoRowTableau) -> u32 {
    t.h()
}

impl fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        if self.row1.is_empty() {
            f.write_str("/")
        } else {
            write!(f, "{} / {}", join(&self.row1), join(&self.row2))
        }
    }
}

impl FromStr for TwoRowTableau {
    type Err = Error;

    /// Parses `"1 2 4 / 3 5 6"`; the empty tableau is `"/"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("tableau {s:?} lacks the '/' row separator")))?;
        let row = |part: &str| {
            part.split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|e| Error::Parse(format!("tableau entry {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()
        };
        validate_tableau(&row(a)?, &row(b)?)
    }
}
