//! Mixed-radix alphabet description shared by every module.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Per-column alphabet sizes of an array (factors of a design).
///
/// A homogeneous alphabet has all entries equal; heterogeneous systems such
/// as two qubits and one qutrit use `[2, 2, 3]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlphabetSpec {
    levels: Vec<u8>,
}

impl AlphabetSpec {
    pub fn new(levels: Vec<u8>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::domain("alphabet must have at least one column"));
        }
        if levels.iter().any(|&d| d < 2) {
            return Err(Error::domain("every alphabet size must be at least 2"));
        }
        Ok(AlphabetSpec { levels })
    }

    /// Homogeneous alphabet with `n` columns of `d` symbols.
    pub fn homogeneous(n: usize, d: u8) -> Result<Self> {
        AlphabetSpec::new(vec![d; n])
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    /// Number of columns (factors), the paper's N.
    pub fn n_columns(&self) -> usize {
        self.levels.len()
    }

    pub fn homogeneous_d(&self) -> Option<u8> {
        let d = self.levels[0];
        if self.levels.iter().all(|&x| x == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Size of the full factorial, prod_j d_j (the Eq. 11 run bound).
    pub fn full_factorial_size(&self) -> u64 {
        self.levels.iter().map(|&d| d as u64).product()
    }

    /// Product of alphabet sizes over a subset of columns.
    pub fn subset_size(&self, cols: &[usize]) -> u64 {
        cols.iter().map(|&j| self.levels[j] as u64).product()
    }

    /// Mixed-radix rank of a run: row-major with column 0 most significant.
    pub fn rank(&self, run: &[u8]) -> usize {
        debug_assert_eq!(run.len(), self.levels.len());
        let mut r = 0usize;
        for (j, &s) in run.iter().enumerate() {
            r = r * self.levels[j] as usize + s as usize;
        }
        r
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(&self, mut idx: usize) -> Vec<u8> {
        let n = self.levels.len();
        let mut run = vec![0u8; n];
        for j in (0..n).rev() {
            let d = self.levels[j] as usize;
            run[j] = (idx % d) as u8;
            idx /= d;
        }
        run
    }

    /// All runs of the full factorial in rank order.
    pub fn all_runs(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        (0..self.full_factorial_size() as usize).map(|i| self.unrank(i))
    }

    /// Validate a single run against the alphabet.
    pub fn check_run(&self, run: &[u8]) -> Result<()> {
        if run.len() != self.levels.len() {
            return Err(Error::domain(format!(
                "run has {} symbols, expected {}",
                run.len(),
                self.levels.len()
            )));
        }
        for (j, (&s, &d)) in run.iter().zip(self.levels.iter()).enumerate() {
            if s >= d {
                return Err(Error::domain(format!(
                    "symbol {s} out of range for column {j} (alphabet size {d})"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_roundtrip_mixed_radix() {
        let a = AlphabetSpec::new(vec![2, 3, 2]).unwrap();
        for i in 0..12 {
            assert_eq!(a.rank(&a.unrank(i)), i);
        }
        assert_eq!(a.full_factorial_size(), 12);
    }

    #[test]
    fn rejects_degenerate_alphabets() {
        assert!(AlphabetSpec::new(vec![]).is_err());
        assert!(AlphabetSpec::new(vec![2, 1]).is_err());
    }
}
