use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Code;

/// Balance history `r_1 … r_n` of the reserve account: `r_1 = 0`,
/// `r_{i+1} <= r_i + 1`, never negative. Always nonempty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trajectory(Vec<u32>);

pub fn validate_trajectory(raw: &[i64]) -> Result<Trajectory> {
    if raw.is_empty() {
        return Err(Error::OutOfRange(
            "a trajectory has at least one tick".into(),
        ));
    }
    for (i, &r) in raw.iter().enumerate() {
        if r < 0 {
            return Err(Error::NegativeReserve(i + 1));
        }
        if i == 0 && r != 0 {
            return Err(Error::TrajectoryStart);
        }
        if i > 0 && r > raw[i - 1] + 1 {
            return Err(Error::GrowthViolation(i + 1));
        }
    }
    let values = raw
        .iter()
        .map(|&v| u32::try_from(v).map_err(|_| Error::OutOfRange(format!("reserve {v} too large"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Trajectory(values))
}

impl Trajectory {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let raw: Vec<i64> = values.iter().map(|&v| i64::from(v)).collect();
        validate_trajectory(&raw)
    }

    /// Zero-based view of a nonempty code: `r_i = a_i - 1`.
    pub fn from_code(c: &Code) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::EmptyCode);
        }
        Ok(Trajectory(c.letters().iter().map(|&a| a - 1).collect()))
    }

    /// One-based view: `a_i = r_i + 1`.
    pub fn to_code(&self) -> Code {
        Code::from_vec_unchecked(self.0.iter().map(|&r| r + 1).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn final_reserve(&self) -> u32 {
        *self.0.last().expect("trajectories are nonempty")
    }
}

impl fmt::Display for Trajectory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_letters(f, &self.0)
    }
}

impl FromStr for Trajectory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        validate_trajectory(&super::text::parse_letters(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(
            validate_trajectory(&[0, 1, 2, 0]).unwrap().final_reserve(),
            0
        );
        assert_eq!(validate_trajectory(&[1]), Err(Error::TrajectoryStart));
        assert_eq!(validate_trajectory(&[0, 2]), Err(Error::GrowthViolation(2)));
        assert_eq!(
            validate_trajectory(&[0, -1]),
            Err(Error::NegativeReserve(2))
        );
        assert!(validate_trajectory(&[]).is_err());
    }

    #[test]
    fn code_views() {
        let c: Code = "1231".parse().unwrap();
        let t = Trajectory::from_code(&c).unwrap();
        assert_eq!(t.values(), &[0, 1, 2, 0]);
        assert_eq!(t.to_code(), c);
        assert_eq!(t.to_string(), "0120");
        assert_eq!(Trajectory::from_code(&Code::void()), Err(Error::EmptyCode));
    }
}
