//! Orthogonal arrays over homogeneous or mixed-radix alphabets and their
//! purely combinatorial quality measures.

use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

/// An orthogonal array: a multiset of runs (rows) over a mixed-radix
/// alphabet.  Runs are stored sorted, so two arrays differing only by row
/// order compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrthogonalArray {
    alphabet: AlphabetSpec,
    runs: Vec<Vec<u8>>,
}

/// The occurrence-count view of an array: `counts[rank]` is the number of
/// times the corresponding run appears (the paper's c_{i1...iN}).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoefficientVector {
    alphabet: AlphabetSpec,
    counts: Vec<u64>,
}

impl OrthogonalArray {
    pub fn new(alphabet: AlphabetSpec, mut runs: Vec<Vec<u8>>) -> Result<Self> {
        for run in &runs {
            alphabet.check_run(run)?;
        }
        if runs.len() as u64 > alphabet.full_factorial_size() {
            return Err(Error::domain(format!(
                "run count {} exceeds full factorial size {}",
                runs.len(),
                alphabet.full_factorial_size()
            )));
        }
        runs.sort();
        Ok(OrthogonalArray { alphabet, runs })
    }

    /// The empty array: identity element of [`compose`](Self::compose).
    pub fn empty(alphabet: AlphabetSpec) -> Self {
        OrthogonalArray {
            alphabet,
            runs: Vec::new(),
        }
    }

    /// Full factorial F_{N,d} (all runs once).
    pub fn full_factorial(alphabet: &AlphabetSpec) -> Self {
        OrthogonalArray {
            alphabet: alphabet.clone(),
            runs: alphabet.all_runs().collect(),
        }
    }

    pub fn alphabet(&self) -> &AlphabetSpec {
        &self.alphabet
    }

    pub fn runs(&self) -> &[Vec<u8>] {
        &self.runs
    }

    /// Number of runs r.
    pub fn r(&self) -> usize {
        self.runs.len()
    }

    /// Number of columns N.
    pub fn n(&self) -> usize {
        self.alphabet.n_columns()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Largest k such that every k-column projection contains every tuple
    /// over those columns' alphabets equally often.  k = 0 always holds.
    ///
    /// Errors on the empty array ("undefined strength").
    pub fn strength(&self) -> Result<usize> {
        if self.runs.is_empty() {
            return Err(Error::domain("undefined strength: empty array"));
        }
        let n = self.n();
        let mut k = 0usize;
        for kk in 1..=n {
            if self.has_strength(kk) {
                k = kk;
            } else {
                break;
            }
        }
        Ok(k)
    }

    /// Whether every k-column projection is balanced (strength at least k).
    pub fn has_strength(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if k > self.n() || self.runs.is_empty() {
            return false;
        }
        for cols in (0..self.n()).combinations(k) {
            let cells = self.alphabet.subset_size(&cols) as usize;
            if self.runs.len() % cells != 0 {
                return false;
            }
            let lambda = self.runs.len() / cells;
            let mut counts = vec![0usize; cells];
            for run in &self.runs {
                let mut idx = 0usize;
                for &j in &cols {
                    idx = idx * self.alphabet.levels()[j] as usize + run[j] as usize;
                }
                counts[idx] += 1;
            }
            if counts.iter().any(|&c| c != lambda) {
                return false;
            }
        }
        true
    }

    /// Index lambda = r / prod_{j in I} d_j for any k columns.
    pub fn index(&self, k: usize) -> Result<u64> {
        let s = self.strength()?;
        if k > s {
            return Err(Error::domain(format!(
                "index undefined: k = {k} exceeds strength {s}"
            )));
        }
        if k == 0 {
            return Ok(self.runs.len() as u64);
        }
        // Well-defined for homogeneous alphabets; for mixed radix the
        // strength check already guarantees divisibility per column subset,
        // and the value r / prod d_j must agree across subsets.
        let cols: Vec<usize> = (0..k).collect();
        let cells = self.alphabet.subset_size(&cols);
        let lam = self.runs.len() as u64 / cells;
        for subset in (0..self.n()).combinations(k) {
            let c = self.alphabet.subset_size(&subset);
            if self.runs.len() as u64 / c != lam || self.runs.len() as u64 % c != 0 {
                return Err(Error::domain(
                    "index is not uniform across column subsets (mixed-radix)",
                ));
            }
        }
        Ok(lam)
    }

    /// True iff every (N-k)-column projection has pairwise distinct rows.
    pub fn is_irredundant(&self, k: usize) -> Result<bool> {
        let n = self.n();
        if k > n {
            return Err(Error::domain(format!("k = {k} exceeds column count {n}")));
        }
        let keep = n - k;
        if keep == 0 {
            // The 0-column projection of r >= 2 runs always repeats.
            return Ok(self.runs.len() <= 1);
        }
        for cols in (0..n).combinations(keep) {
            let mut seen: HashMap<Vec<u8>, ()> = HashMap::with_capacity(self.runs.len());
            for run in &self.runs {
                let proj: Vec<u8> = cols.iter().map(|&j| run[j]).collect();
                if seen.insert(proj, ()).is_some() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// MDS report: true iff the array is an index-unity irredundant OA of
    /// its strength k with k < N; equivalently all pairwise Hamming
    /// distances are at least N - k + 1 (and the minimum equals it).
    pub fn is_mds(&self) -> Result<MdsReport> {
        let d = self
            .alphabet
            .homogeneous_d()
            .ok_or_else(|| Error::domain("MDS check requires a homogeneous alphabet"))?;
        let k = self.strength()?;
        let n = self.n();
        let min_dist = self.min_hamming_distance();
        // MDS code matched to OA parameters: r = d^k codewords, strength k,
        // no repeated codewords in any N-k columns, and k < N (the full
        // factorial is not a code with redundancy).
        let r_match = (self.runs.len() as u64) == (d as u64).pow(k as u32);
        let irred = k <= n && self.is_irredundant(k)?;
        let dist_ok = min_dist.map(|m| m == n - k + 1).unwrap_or(false);
        Ok(MdsReport {
            is_mds: k < n && r_match && irred && dist_ok,
            k,
            min_distance: min_dist,
        })
    }

    /// Minimum pairwise Hamming distance over distinct rows; `None` when
    /// fewer than two rows, `Some(0)` when a row repeats.
    pub fn min_hamming_distance(&self) -> Option<usize> {
        if self.runs.len() < 2 {
            return None;
        }
        let mut min = usize::MAX;
        for i in 0..self.runs.len() {
            for j in (i + 1)..self.runs.len() {
                let d = self.runs[i]
                    .iter()
                    .zip(self.runs[j].iter())
                    .filter(|(a, b)| a != b)
                    .count();
                if d < min {
                    min = d;
                }
            }
        }
        Some(min)
    }

    /// Partial composition (multiset union of runs), defined only while the
    /// total run count stays within the full factorial size.
    pub fn compose(&self, other: &OrthogonalArray) -> Result<OrthogonalArray> {
        if self.alphabet != other.alphabet {
            return Err(Error::domain("composition requires identical alphabets"));
        }
        let total = self.runs.len() + other.runs.len();
        if total as u64 > self.alphabet.full_factorial_size() {
            return Err(Error::domain("composition exceeds full factorial size"));
        }
        let mut runs = self.runs.clone();
        runs.extend(other.runs.iter().cloned());
        OrthogonalArray::new(self.alphabet.clone(), runs)
    }

    /// Projection to a list of distinct columns, multiplicities preserved.
    pub fn column_project(&self, columns: &[usize]) -> Result<OrthogonalArray> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &j in columns {
            if j >= n {
                return Err(Error::domain(format!("column index {j} out of range")));
            }
            if seen[j] {
                return Err(Error::domain(format!("duplicate column index {j}")));
            }
            seen[j] = true;
        }
        if columns.is_empty() {
            return Err(Error::domain("projection needs at least one column"));
        }
        let levels: Vec<u8> = columns.iter().map(|&j| self.alphabet.levels()[j]).collect();
        let alphabet = AlphabetSpec::new(levels)?;
        let runs: Vec<Vec<u8>> = self
            .runs
            .iter()
            .map(|run| columns.iter().map(|&j| run[j]).collect())
            .collect();
        OrthogonalArray::new(alphabet, runs)
    }

    /// Apply a per-column symbol permutation and a column permutation,
    /// producing an isomorphic array.  `col_perm[j]` is the destination
    /// column of source column j; `sym_perms[j]` permutes the symbols of
    /// source column j before the move.
    pub fn relabel(&self, col_perm: &[usize], sym_perms: &[Vec<u8>]) -> Result<OrthogonalArray> {
        let n = self.n();
        if col_perm.len() != n || sym_perms.len() != n {
            return Err(Error::domain("permutation length mismatch"));
        }
        let mut new_levels = vec![0u8; n];
        for j in 0..n {
            new_levels[col_perm[j]] = self.alphabet.levels()[j];
        }
        let alphabet = AlphabetSpec::new(new_levels)?;
        let runs: Vec<Vec<u8>> = self
            .runs
            .iter()
            .map(|run| {
                let mut out = vec![0u8; n];
                for j in 0..n {
                    out[col_perm[j]] = sym_perms[j][run[j] as usize];
                }
                out
            })
            .collect();
        OrthogonalArray::new(alphabet, runs)
    }

    pub fn to_coefficient_vector(&self) -> CoefficientVector {
        let size = self.alphabet.full_factorial_size() as usize;
        let mut counts = vec![0u64; size];
        for run in &self.runs {
            counts[self.alphabet.rank(run)] += 1;
        }
        CoefficientVector {
            alphabet: self.alphabet.clone(),
            counts,
        }
    }

    /// Parse the text format: optional `# levels: d1 d2 ... dN` header,
    /// one whitespace-separated run per line, `#` comments and blank lines
    /// ignored.  Without a header the alphabet is homogeneous with
    /// d = max symbol + 1 (at least 2).
    pub fn parse_text(text: &str) -> Result<OrthogonalArray> {
        let mut levels: Option<Vec<u8>> = None;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if let Some(spec) = rest.strip_prefix("levels:") {
                    let parsed: Result<Vec<u8>> = spec
                        .split_whitespace()
                        .map(|t| {
                            t.parse::<u8>()
                                .map_err(|_| Error::io(format!("bad level '{t}' in header")))
                        })
                        .collect();
                    levels = Some(parsed?);
                }
                continue;
            }
            let row: Result<Vec<u8>> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u8>()
                        .map_err(|_| Error::io(format!("bad symbol '{t}'")))
                })
                .collect();
            rows.push(row?);
        }
        if rows.is_empty() && levels.is_none() {
            return Err(Error::io("no runs and no levels header"));
        }
        let levels = match levels {
            Some(l) => l,
            None => {
                let n = rows[0].len();
                if rows.iter().any(|r| r.len() != n) {
                    return Err(Error::io("rows of differing length"));
                }
                let d = rows
                    .iter()
                    .flat_map(|r| r.iter())
                    .copied()
                    .max()
                    .unwrap_or(1)
                    .max(1)
                    + 1;
                vec![d.max(2); n]
            }
        };
        OrthogonalArray::new(AlphabetSpec::new(levels)?, rows)
    }

    /// Emit the text format with sorted rows and a levels header.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# levels: {}",
            self.alphabet.levels().iter().map(|d| d.to_string()).join(" ")
        );
        for run in &self.runs {
            let _ = writeln!(out, "{}", run.iter().map(|s| s.to_string()).join(" "));
        }
        out
    }
}

/// Result of [`OrthogonalArray::is_mds`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsReport {
    pub is_mds: bool,
    pub k: usize,
    pub min_distance: Option<usize>,
}

impl CoefficientVector {
    pub fn new(alphabet: AlphabetSpec, counts: Vec<u64>) -> Result<Self> {
        if counts.len() as u64 != alphabet.full_factorial_size() {
            return Err(Error::domain(format!(
                "coefficient vector length {} does not match full factorial size {}",
                counts.len(),
                alphabet.full_factorial_size()
            )));
        }
        Ok(CoefficientVector { alphabet, counts })
    }

    pub fn zero(alphabet: AlphabetSpec) -> Self {
        let size = alphabet.full_factorial_size() as usize;
        CoefficientVector {
            alphabet,
            counts: vec![0; size],
        }
    }

    pub fn alphabet(&self) -> &AlphabetSpec {
        &self.alphabet
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn get(&self, run: &[u8]) -> u64 {
        self.counts[self.alphabet.rank(run)]
    }

    pub fn to_array(&self) -> OrthogonalArray {
        let mut runs = Vec::with_capacity(self.total() as usize);
        for (i, &c) in self.counts.iter().enumerate() {
            let run = self.alphabet.unrank(i);
            for _ in 0..c {
                runs.push(run.clone());
            }
        }
        OrthogonalArray {
            alphabet: self.alphabet.clone(),
            runs,
        }
    }

    /// Pointwise sum.
    pub fn add(&self, other: &CoefficientVector) -> Result<CoefficientVector> {
        if self.alphabet != other.alphabet {
            return Err(Error::domain("alphabet mismatch"));
        }
        let counts = self
            .counts
            .iter()
            .zip(other.counts.iter())
            .map(|(a, b)| a + b)
            .collect();
        Ok(CoefficientVector {
            alphabet: self.alphabet.clone(),
            counts,
        })
    }

    /// Pointwise difference if `other <= self` pointwise.
    pub fn checked_sub(&self, other: &CoefficientVector) -> Option<CoefficientVector> {
        if self.alphabet != other.alphabet {
            return None;
        }
        let mut counts = Vec::with_capacity(self.counts.len());
        for (a, b) in self.counts.iter().zip(other.counts.iter()) {
            if a < b {
                return None;
            }
            counts.push(a - b);
        }
        Some(CoefficientVector {
            alphabet: self.alphabet.clone(),
            counts,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oa(levels: Vec<u8>, rows: &[&[u8]]) -> OrthogonalArray {
        OrthogonalArray::new(
            AlphabetSpec::new(levels).unwrap(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn strength_of_full_factorial_is_maximal() {
        let a = OrthogonalArray::full_factorial(&AlphabetSpec::new(vec![2, 2]).unwrap());
        assert_eq!(a.strength().unwrap(), 2);
    }

    #[test]
    fn strength_of_mds_three_qubit_array() {
        // [PAPER Eq. (20)] rows {001,010,100,111} have strength exactly 2.
        let a = oa(vec![2, 2, 2], &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0], &[1, 1, 1]]);
        assert_eq!(a.strength().unwrap(), 2);
        assert_eq!(a.index(2).unwrap(), 1);
    }

    #[test]
    fn strength_of_ghz_array() {
        let a = oa(vec![2, 2, 2], &[&[0, 0, 0], &[1, 1, 1]]);
        assert_eq!(a.strength().unwrap(), 1);
        assert_eq!(a.index(1).unwrap(), 1);
    }

    #[test]
    fn index_of_six_run_array() {
        // [PAPER Eq. (28)] the 6-run strength-1 array has index 3.
        let a = oa(
            vec![2, 2, 2],
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[1, 0, 0],
                &[0, 1, 1],
                &[0, 1, 1],
                &[1, 1, 1],
            ],
        );
        assert_eq!(a.strength().unwrap(), 1);
        assert_eq!(a.index(1).unwrap(), 3);
    }

    #[test]
    fn irredundancy_examples() {
        let ghz = oa(vec![2, 2, 2], &[&[0, 0, 0], &[1, 1, 1]]);
        assert!(ghz.is_irredundant(1).unwrap());
        // [PAPER Eq. (39)] OA^(42)_{4,2,1} contains a doubled row 1111.
        let w = oa(
            vec![2, 2, 2, 2],
            &[
                &[0, 0, 0, 1],
                &[0, 0, 1, 0],
                &[0, 1, 0, 0],
                &[1, 0, 0, 0],
                &[1, 1, 1, 1],
                &[1, 1, 1, 1],
            ],
        );
        assert!(!w.is_irredundant(1).unwrap());
        let ff = OrthogonalArray::full_factorial(&AlphabetSpec::new(vec![2, 2, 2]).unwrap());
        assert!(!ff.is_irredundant(1).unwrap());
    }

    #[test]
    fn mds_examples() {
        let a = oa(vec![2, 2, 2], &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0], &[1, 1, 1]]);
        let rep = a.is_mds().unwrap();
        assert!(rep.is_mds);
        assert_eq!(rep.k, 2);
        assert_eq!(rep.min_distance, Some(2));

        let ghz = oa(vec![2, 2, 2], &[&[0, 0, 0], &[1, 1, 1]]);
        let rep = ghz.is_mds().unwrap();
        assert!(rep.is_mds);
        assert_eq!(rep.k, 1);
        assert_eq!(rep.min_distance, Some(3));

        let ff = OrthogonalArray::full_factorial(&AlphabetSpec::new(vec![2, 2]).unwrap());
        assert!(!ff.is_mds().unwrap().is_mds);
    }

    #[test]
    fn compose_identity_union_and_bound() {
        let alpha = AlphabetSpec::new(vec![2, 2]).unwrap();
        let bell = oa(vec![2, 2], &[&[0, 0], &[1, 1]]);
        let anti = oa(vec![2, 2], &[&[0, 1], &[1, 0]]);
        let empty = OrthogonalArray::empty(alpha.clone());
        assert_eq!(empty.compose(&bell).unwrap(), bell);
        let ff = bell.compose(&anti).unwrap();
        assert_eq!(ff, OrthogonalArray::full_factorial(&alpha));
        assert!(bell.compose(&bell).unwrap().compose(&anti).is_err());
    }

    #[test]
    fn column_project_examples() {
        let a = oa(vec![4, 4, 4, 4], &[&[0, 1, 2, 3]]);
        let p = a.column_project(&[1, 2]).unwrap();
        assert_eq!(p.runs(), &[vec![1, 2]]);
        let mds = oa(vec![2, 2, 2], &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0], &[1, 1, 1]]);
        for cols in [[0, 1], [0, 2], [1, 2]] {
            let proj = mds.column_project(&cols).unwrap();
            let ff = OrthogonalArray::full_factorial(proj.alphabet());
            assert_eq!(proj, ff);
        }
        assert_eq!(mds.column_project(&[0, 1, 2]).unwrap(), mds);
    }

    #[test]
    fn coefficient_vector_roundtrip() {
        let a = oa(
            vec![2, 2, 2],
            &[&[0, 0, 0], &[1, 0, 0], &[1, 0, 0], &[0, 1, 1], &[0, 1, 1], &[1, 1, 1]],
        );
        let cv = a.to_coefficient_vector();
        assert_eq!(cv.total(), 6);
        assert_eq!(cv.get(&[1, 0, 0]), 2);
        assert_eq!(cv.to_array(), a);
    }

    #[test]
    fn text_roundtrip() {
        let a = oa(vec![2, 3], &[&[0, 2], &[1, 0], &[0, 1], &[1, 1], &[0, 0], &[1, 2]]);
        let t = a.to_text();
        let b = OrthogonalArray::parse_text(&t).unwrap();
        assert_eq!(a, b);
        let c = OrthogonalArray::parse_text("0 0\n1 1\n").unwrap();
        assert_eq!(c.alphabet().levels(), &[2, 2]);
    }
}
