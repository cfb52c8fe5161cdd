//! Canonical text forms shared by codes, permutations and trajectories:
//! letters are concatenated as digits when every letter is at most 9,
//! otherwise they are comma-separated.

use crate::error::{Error, Result};

pub(crate) fn write_letters(f: &mut std::fmt::Formatter<'_>, letters: &[u32]) -> std::fmt::Result {
    if letters.iter().all(|&v| v <= 9) {
        for v in letters {
            write!(f, "{v}")?;
        }
    } else {
        for (i, v) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
    }
    Ok(())
}

/// Parses either the concatenated-digit form or the comma-separated form into
/// signed integers, so that sign errors surface in validation with a position.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<i64>> {
    if s.contains(',') {
        s.split(',')
            .enumerate()
            .map(|(i, field)| {
                if field.is_empty() || field.trim() != field {
                    return Err(Error::Parse(format!("malformed field {} in {s:?}", i + 1)));
                }
                field
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("field {} in {s:?}: {e}", i + 1)))
            })
            .collect()
    } else {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10).map(i64::from).ok_or_else(|| {
                    Error::Parse(format!("unexpected character {c:?} at position {}", i + 1))
                })
            })
            .collect()
    }
}
