//! Exact counting: Catalan numbers, the ballot table `l(n, k)`, its
//! West + North companion table and the two-row standard tableau count.
//!
//! All counts are `BigUint`; closed forms multiply before dividing so every
//! division is exact.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // After step i the accumulator is binom(n - k + i, i), so each division is exact.
    (1..=k).fold(BigUint::one(), |acc, i| acc * (n - k + i) / i)
}

/// The n-th Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Triangular table of `l(n, k)`, the number of codes of length `n` whose
/// last letter is `k`, for `0 <= k <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallotTable {
    rows: Vec<Vec<BigUint>>,
}

impl BallotTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Row `n` as `l(n, 0), …, l(n, n)`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    /// `l(n, k)`; zero for `k > n`. Panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    /// Sum of row `n`.
    pub fn row_sum(&self, n: usize) -> BigUint {
        self.rows[n].iter().sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

/// Fills the ballot table by `l(0,0) = 1`, `l(n,0) = 0` for `n >= 1` and
/// `l(n,k) = sum_{j >= k-1} l(n-1, j)`: a code ending in `k` extends any code
/// ending in `j >= k - 1`. The void code counts as ending in 0, which is what
/// produces `l(1,1) = 1`.
pub fn ballot_table(n_max: usize) -> BallotTable {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        // suffix[j] = sum_{i >= j} prev[i]
        let mut suffix = vec![BigUint::zero(); prev.len() + 1];
        for j in (0..prev.len()).rev() {
            suffix[j] = &suffix[j + 1] + &prev[j];
        }
        let mut row = vec![BigUint::zero(); n + 1];
        for (k, cell) in row.iter_mut().enumerate().skip(1) {
            *cell = suffix.get(k - 1).cloned().unwrap_or_default();
        }
        rows.push(row);
    }
    BallotTable { rows }
}

/// Closed form `l(n, k) = k / (2n - k) * binom(2n - k, n)` for `1 <= k <= n`.
pub fn ballot_closed(n: u64, k: u64) -> Result<BigUint> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!(
            "ballot_closed needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let m = 2 * n - k;
    Ok(binomial(m, n) * k / m)
}

/// The West + North table: row `i` (1-based) has `i` cells, the first is 1
/// and each later cell is its western neighbour plus the cell above it
/// (zero above the diagonal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdiagonalTable {
    rows: Vec<Vec<BigUint>>,
}

impl SubdiagonalTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> &[BigUint] {
        &self.rows[i - 1]
    }

    /// Cell `(i, j)`, both 1-based; zero above the diagonal.
    pub fn cell(&self, i: usize, j: usize) -> BigUint {
        self.rows[i - 1].get(j - 1).cloned().unwrap_or_default()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

pub fn subdiagonal_table(rows: usize) -> SubdiagonalTable {
    let mut out: Vec<Vec<BigUint>> = Vec::with_capacity(rows);
    for i in 1..=rows {
        let mut row = Vec::with_capacity(i);
        row.push(BigUint::one());
        for j in 2..=i {
            let west = &row[j - 2];
            let north = out
                .last()
                .and_then(|r: &Vec<BigUint>| r.get(j - 1))
                .cloned()
                .unwrap_or_default();
            row.push(west + north);
        }
        out.push(row);
    }
    SubdiagonalTable { rows: out }
}

/// Number of standard Young tableaux of two-row shape `(l1, l2)`:
/// `(l1 - l2 + 1) / (l1 + 1) * binom(l1 + l2, l1)`.
pub fn two_row_count(l1: u64, l2: u64) -> Result<BigUint> {
    if l1 < l2 {
        return Err(Error::ShapeNotWeaklyDecreasing(l1, l2));
    }
    if l2 == 0 {
        return Err(Error::OutOfRange(format!(
            "two-row shape needs l2 > 0, got ({l1}, {l2})"
        )));
    }
    Ok(binomial(l1 + l2, l1) * (l1 - l2 + 1) / (l1 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn row(t: &BallotTable, n: usize) -> Vec<u64> {
        t.row(n).iter().map(|v| u64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(7), big(429));
        assert_eq!(catalan(8), big(1430));
        // First Catalan number above u64::MAX.
        assert!(catalan(36) < BigUint::from(u64::MAX));
        assert!(catalan(37) > BigUint::from(u64::MAX));
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 7), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(10, 3), big(120));
    }

    #[test]
    fn ballot_rows() {
        let t = ballot_table(7);
        assert_eq!(row(&t, 4), vec![0, 5, 5, 3, 1]);
        assert_eq!(row(&t, 7), vec![0, 132, 132, 90, 48, 20, 6, 1]);
        assert_eq!(t.get(1, 1), big(1));
        assert_eq!(t.get(0, 0), big(1));
        assert_eq!(t.get(3, 6), big(0));
        assert_eq!(ballot_table(0).n_max(), 0);
    }

    #[test]
    fn closed_form() {
        assert_eq!(ballot_closed(4, 1).unwrap(), big(5));
        assert_eq!(ballot_closed(7, 4).unwrap(), big(48));
        for n in 1..20 {
            assert_eq!(ballot_closed(n, n).unwrap(), big(1));
        }
        assert!(matches!(ballot_closed(3, 0), Err(Error::OutOfRange(_))));
        assert!(matches!(ballot_closed(3, 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn west_plus_north() {
        let s = subdiagonal_table(6);
        let rows: Vec<Vec<u64>> = s
            .rows()
            .map(|r| r.iter().map(|v| u64::try_from(v).unwrap()).collect())
            .collect();
        assert_eq!(rows[2], vec![1, 2, 2]);
        assert_eq!(rows[4], vec![1, 4, 9, 14, 14]);
        assert_eq!(s.cell(5, 3), big(9));
        assert_eq!(s.cell(4, 4), big(5));
        assert_eq!(s.cell(5, 4), big(14));
        assert_eq!(s.cell(2, 5), big(0));
    }

    #[test]
    fn two_row() {
        assert_eq!(two_row_count(1, 1).unwrap(), big(1));
        assert_eq!(two_row_count(4, 4).unwrap(), big(14));
        assert_eq!(two_row_count(4, 3).unwrap(), big(14));
        assert_eq!(
            two_row_count(2, 3),
            Err(Error::ShapeNotWeaklyDecreasing(2, 3))
        );
        assert!(two_row_count(3, 0).is_err());
    }
}
