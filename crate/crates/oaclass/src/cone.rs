//! The linear constraint system of the OA cone, Hilbert bases, lattice-point
//! enumeration, decomposition over generators, nonexistence certificates,
//! and the Hilbert-basis structure conjecture for strength N-1.

use crate::alphabet::AlphabetSpec;
use crate::error::{Error, Result};
use crate::oa::{CoefficientVector, OrthogonalArray};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::time::Instant;

/// Resource budget for the completion solver and enumerators.  Exceeding a
/// budget is a hard error, never a silent truncation.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SolverBudget {
    /// Cap on processed frontier nodes.
    pub max_nodes: u64,
    /// Wall-clock cap in seconds.
    pub max_seconds: f64,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_nodes: 500_000_000,
            max_seconds: 1800.0,
        }
    }
}

/// Homogeneous linear constraint system of Prop. 1 over the c_{i1...iN}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstraintSystem {
    alphabet: AlphabetSpec,
    k: usize,
    /// Full audit list: one balance chain per column subset, Eq. (10) form.
    equations: Vec<Vec<i64>>,
    /// Linearly independent subset of `equations` used by the solver.
    reduced: Vec<Vec<i64>>,
    /// Total-count bound, prod d_j (Eq. 11).
    bound: u64,
}

impl ConstraintSystem {
    pub fn alphabet(&self) -> &AlphabetSpec {
        &self.alphabet
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }
    pub fn reduced(&self) -> &[Vec<i64>] {
        &self.reduced
    }
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Exact check that a coefficient vector solves every equation.
    pub fn is_solution(&self, cv: &CoefficientVector) -> bool {
        if cv.alphabet() != &self.alphabet {
            return false;
        }
        self.equations.iter().all(|eq| {
            eq.iter()
                .zip(cv.counts().iter())
                .map(|(&a, &c)| a as i128 * c as i128)
                .sum::<i128>()
                == 0
        })
    }
}

/// Builds the Eq. (10) balance equations: for every k-column subset and
/// every adjacent pair of tuples over those columns, the two marginal sums
/// are equal.  For homogeneous alphabets this yields (d^k - 1) * C(N, k)
/// equations before rank reduction.
pub fn build_constraints(alphabet: &AlphabetSpec, k: usize) -> Result<ConstraintSystem> {
    let n = alphabet.n_columns();
    if k == 0 || k > n {
        return Err(Error::domain(format!("strength k = {k} out of range 1..={n}")));
    }
    let size = alphabet.full_factorial_size() as usize;
    let mut equations = Vec::new();
    for cols in (0..n).combinations(k) {
        let cells = alphabet.subset_size(&cols) as usize;
        // marginal index of each full-factorial point for this subset
        let mut marg = vec![0usize; size];
        for x in 0..size {
            let run = alphabet.unrank(x);
            let mut idx = 0usize;
            for &j in &cols {
                idx = idx * alphabet.levels()[j] as usize + run[j] as usize;
            }
            marg[x] = idx;
        }
        for t in 0..cells - 1 {
            let mut eq = vec![0i64; size];
            for x in 0..size {
                if marg[x] == t {
                    eq[x] += 1;
                } else if marg[x] == t + 1 {
                    eq[x] -= 1;
                }
            }
            equations.push(eq);
        }
    }
    let reduced = independent_subset(&equations, size);
    Ok(ConstraintSystem {
        alphabet: alphabet.clone(),
        k,
        equations,
        reduced,
        bound: alphabet.full_factorial_size(),
    })
}

/// Selects a maximal linearly independent subset of integer rows by exact
/// fraction-free elimination (all arithmetic in i128; entries stay tiny for
/// the +-1 balance equations).
fn independent_subset(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut basis: Vec<Vec<i128>> = Vec::new(); // row-echelon workspace
    let mut pivots: Vec<usize> = Vec::new();
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    for row in rows {
        let mut w: Vec<i128> = row.iter().map(|&x| x as i128).collect();
        for (b, &p) in basis.iter().zip(pivots.iter()) {
            if w[p] != 0 {
                // w := w * b[p] - b * w[p]; then divide by gcd
                let (wp, bp) = (w[p], b[p]);
                for j in 0..ncols {
                    w[j] = w[j] * bp - b[j] * wp;
                }
                let g = w.iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x.abs()));
                if g > 1 {
                    for x in w.iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        if let Some(p) = w.iter().position(|&x| x != 0) {
            basis.push(w);
            pivots.push(p);
            chosen.push(row.clone());
        }
    }
    chosen
}

/// Hilbert basis of the cone, graded-lex sorted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HilbertBasis {
    system: ConstraintSystem,
    generators: Vec<CoefficientVector>,
}

impl HilbertBasis {
    pub fn system(&self) -> &ConstraintSystem {
        &self.system
    }
    pub fn generators(&self) -> &[CoefficientVector] {
        &self.generators
    }
    pub fn len(&self) -> usize {
        self.generators.len()
    }
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Minimum run count over the generators.
    pub fn min_runs(&self) -> Result<u64> {
        self.generators
            .iter()
            .map(|g| g.total())
            .min()
            .ok_or_else(|| Error::domain("empty Hilbert basis"))
    }
}

/// Graded-lexicographic order on coefficient vectors: by total count, then
/// lexicographically on the counts.
fn graded_lex(a: &CoefficientVector, b: &CoefficientVector) -> std::cmp::Ordering {
    a.total()
        .cmp(&b.total())
        .then_with(|| a.counts().cmp(b.counts()))
}

/// Computes the Hilbert basis of the monoid { c >= 0 integer : A c = 0 } by
/// the Contejean-Devie completion procedure: grow candidate vectors from the
/// unit vectors along directions that strictly decrease |A t|^2, record the
/// minimal solutions encountered, and prune every candidate dominated
/// pointwise by a recorded solution.  Level-synchronous processing in graded
/// order keeps the output deterministic.
pub fn hilbert_basis(system: &ConstraintSystem, budget: &SolverBudget) -> Result<HilbertBasis> {
    let nvars = system.bound as usize;
    let a_rows: Vec<Vec<i32>> = system
        .reduced
        .iter()
        .map(|r| r.iter().map(|&x| x as i32).collect())
        .collect();
    let m = a_rows.len();
    // Column view: acol[j][i] = A[i][j]
    let acol: Vec<Vec<i32>> = (0..nvars)
        .map(|j| (0..m).map(|i| a_rows[i][j]).collect())
        .collect();

    let start = Instant::now();
    let mut processed: u64 = 0;

    let mut minimal: Vec<Vec<u16>> = Vec::new();
    // Frontier nodes carry (coords, A*coords).
    let mut frontier: Vec<(Vec<u16>, Vec<i32>)> = (0..nvars)
        .map(|j| {
            let mut t = vec![0u16; nvars];
            t[j] = 1;
            (t, acol[j].clone())
        })
        .collect();

    let dominated = |t: &[u16], minimal: &[Vec<u16>]| -> bool {
        minimal
            .iter()
            .any(|s| s.iter().zip(t.iter()).all(|(a, b)| a <= b))
    };

    while !frontier.is_empty() {
        let mut next: Vec<(Vec<u16>, Vec<i32>)> = Vec::new();
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        // Deterministic processing order.
        frontier.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        for (t, at) in frontier.drain(..) {
            processed += 1;
            if processed > budget.max_nodes {
                return Err(Error::budget(format!(
                    "completion solver exceeded {} nodes (found {} minimal solutions so far)",
                    budget.max_nodes,
                    minimal.len()
                )));
            }
            if processed % 8192 == 0 && start.elapsed().as_secs_f64() > budget.max_seconds {
                return Err(Error::budget(format!(
                    "completion solver exceeded {:.0} s (found {} minimal solutions so far)",
                    budget.max_seconds,
                    minimal.len()
                )));
            }
            if at.iter().all(|&x| x == 0) {
                // A new solution on this level is minimal: every strictly
                // smaller solution would have pruned it already.
                minimal.push(t);
                continue;
            }
            for j in 0..nvars {
                // descend only along directions decreasing |A t|^2
                let dot: i64 = at
                    .iter()
                    .zip(acol[j].iter())
                    .map(|(&x, &y)| x as i64 * y as i64)
                    .sum();
                if dot >= 0 {
                    continue;
                }
                let mut child = t.clone();
                child[j] += 1;
                if seen.contains(&child) || dominated(&child, &minimal) {
                    continue;
                }
                let mut cat = at.clone();
                for i in 0..m {
                    cat[i] += acol[j][i];
                }
                seen.insert(child.clone());
                next.push((child, cat));
            }
        }
        // Solutions found on this level may dominate frontier candidates of
        // the next level; filter once more.
        next.retain(|(t, _)| !dominated(t, &minimal));
        frontier = next;
    }

    let mut generators: Vec<CoefficientVector> = minimal
        .into_iter()
        .map(|t| {
            CoefficientVector::new(
                system.alphabet.clone(),
                t.into_iter().map(|x| x as u64).collect(),
            )
            .expect("well-formed solution")
        })
        .collect();
    generators.sort_by(graded_lex);
    Ok(HilbertBasis {
        system: system.clone(),
        generators,
    })
}

/// Witness or certificate for the existence question OA(r, N, d, k).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum ExistenceOutcome {
    Witness(OrthogonalArray),
    Certificate(NonexistenceCertificate),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NonexistenceCertificate {
    pub r: u64,
    pub levels: Vec<u8>,
    pub k: usize,
    /// "min-runs" or "infeasible".
    pub reason: String,
    /// Minimum generator run count (for the min-runs reason).
    pub min_runs: Option<u64>,
    /// Run counts of the Hilbert-basis generators, the machine-checkable
    /// data behind the reachability argument.
    pub generator_runs: Vec<u64>,
}

/// Decides whether an OA(r, ...) of strength >= k exists, by Gordan's lemma:
/// every solution is a nonnegative integer combination of the Hilbert basis,
/// so r must be reachable as a sum of generator run counts.
pub fn prove_nonexistence(
    r: u64,
    alphabet: &AlphabetSpec,
    k: usize,
    budget: &SolverBudget,
) -> Result<ExistenceOutcome> {
    if r > alphabet.full_factorial_size() {
        return Err(Error::domain(format!(
            "r = {r} exceeds the full factorial bound {}",
            alphabet.full_factorial_size()
        )));
    }
    let system = build_constraints(alphabet, k)?;
    let basis = hilbert_basis(&system, budget)?;
    let runs: Vec<u64> = basis.generators().iter().map(|g| g.total()).collect();
    if basis.is_empty() {
        // The rational relaxation with a positive total is infeasible.
        return Ok(ExistenceOutcome::Certificate(NonexistenceCertificate {
            r,
            levels: alphabet.levels().to_vec(),
            k,
            reason: "infeasible".into(),
            min_runs: None,
            generator_runs: runs,
        }));
    }
    let min = basis.min_runs()?;
    if r < min {
        return Ok(ExistenceOutcome::Certificate(NonexistenceCertificate {
            r,
            levels: alphabet.levels().to_vec(),
            k,
            reason: "min-runs".into(),
            min_runs: Some(min),
            generator_runs: runs,
        }));
    }
    // Reachability of the exact run count as a bounded combination.
    if let Some(combo) = reach_combo(&runs, r) {
        let mut acc = CoefficientVector::zero(alphabet.clone());
        for (i, mult) in combo.iter().enumerate() {
            for _ in 0..*mult {
                acc = acc.add(&basis.generators()[i])?;
            }
        }
        return Ok(ExistenceOutcome::Witness(acc.to_array()));
    }
    Err(Error::domain(format!(
        "no generator combination reaches exactly r = {r} runs; existence undecided by the run-count test"
    )))
}

/// First (lexicographic over generator order, largest multiplicity first)
/// multiset of generator multiplicities whose run counts sum to target.
fn reach_combo(runs: &[u64], target: u64) -> Option<Vec<u64>> {
    fn go(runs: &[u64], i: usize, left: u64, acc: &mut Vec<u64>) -> bool {
        if left == 0 {
            for _ in i..runs.len() {
                acc.push(0);
            }
            return true;
        }
        if i >= runs.len() {
            return false;
        }
        let max_mult = left / runs[i];
        for mult in (0..=max_mult).rev() {
            acc.push(mult);
            if go(runs, i + 1, left - mult * runs[i], acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    if go(runs, 0, target, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

/// All nonnegative integer solutions with total count <= r_max, each exactly
/// once, generated as bounded combinations of the Hilbert basis (Prop. 3)
/// with canonical-byte deduplication, graded-lex sorted.
pub fn enumerate_lattice_points(
    basis: &HilbertBasis,
    r_max: u64,
    budget: &SolverBudget,
) -> Result<Vec<CoefficientVector>> {
    let r_max = r_max.min(basis.system.bound);
    let gens = basis.generators();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out: Vec<CoefficientVector> = Vec::new();
    let start = Instant::now();
    // Iterative DFS over generator multiplicities.
    fn go(
        gens: &[CoefficientVector],
        i: usize,
        acc: &CoefficientVector,
        left: u64,
        seen: &mut HashSet<Vec<u64>>,
        out: &mut Vec<CoefficientVector>,
        start: &Instant,
        budget: &SolverBudget,
    ) -> Result<()> {
        if start.elapsed().as_secs_f64() > budget.max_seconds {
            return Err(Error::budget("lattice enumeration exceeded time budget"));
        }
        if acc.total() > 0 && seen.insert(acc.counts().to_vec()) {
            out.push(acc.clone());
            if out.len() as u64 > budget.max_nodes {
                return Err(Error::budget("lattice enumeration exceeded node budget"));
            }
        } else if acc.total() > 0 {
            // Already seen this point via another decomposition; the whole
            // subtree acc + combinations(gens[i..]) was enumerated from its
            // first decomposition only if the generator suffix matches, so
            // do not prune here.
        }
        for j in i..gens.len() {
            let rj = gens[j].total();
            if rj <= left {
                let next = acc.add(&gens[j])?;
                go(gens, j, &next, left - rj, seen, out, start, budget)?;
            }
        }
        Ok(())
    }
    let zero = CoefficientVector::zero(basis.system.alphabet.clone());
    go(gens, 0, &zero, r_max, &mut seen, &mut out, &start, budget)?;
    out.sort_by(graded_lex);
    Ok(out)
}

/// One decomposition of `cv` over the basis: depth-first over canonically
/// sorted generators, largest multiplicity first, returning the first
/// complete decomposition (deterministic; decompositions are not unique).
pub fn decompose(
    cv: &CoefficientVector,
    basis: &HilbertBasis,
) -> Result<Vec<(usize, u64)>> {
    if !basis.system.is_solution(cv) {
        return Err(Error::domain("not an OA of this strength"));
    }
    fn go(
        gens: &[CoefficientVector],
        i: usize,
        rest: &CoefficientVector,
        acc: &mut Vec<(usize, u64)>,
    ) -> bool {
        if rest.total() == 0 {
            return true;
        }
        if i >= gens.len() {
            return false;
        }
        // Max multiplicity of generator i inside rest.
        let mut max_mult = u64::MAX;
        for (g, r) in gens[i].counts().iter().zip(rest.counts().iter()) {
            if *g > 0 {
                max_mult = max_mult.min(r / g);
            }
        }
        if max_mult == u64::MAX {
            max_mult = 0;
        }
        let mut reduced = rest.clone();
        let mut mult = 0u64;
        // Build rest - m * g incrementally from the largest m down.
        let mut stack: Vec<CoefficientVector> = vec![reduced.clone()];
        while mult < max_mult {
            reduced = reduced.checked_sub(&gens[i]).expect("bounded by max_mult");
            stack.push(reduced.clone());
            mult += 1;
        }
        for m in (0..=max_mult).rev() {
            if m > 0 {
                acc.push((i, m));
            }
            if go(gens, i + 1, &stack[m as usize], acc) {
                return true;
            }
            if m > 0 {
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    if go(basis.generators(), 0, cv, &mut acc) {
        Ok(acc)
    } else {
        Err(Error::domain(
            "no decomposition found (violates Gordan completeness; solver bug)",
        ))
    }
}

/// Transcript of a strength-(N-1) conjecture verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjectureTranscript {
    pub n: usize,
    pub holds: bool,
    pub basis_size: usize,
    /// Rank of the constraint matrix, certified exactly.
    pub rank: usize,
    /// Kernel dimension (2 when the conjecture holds).
    pub kernel_dim: usize,
    /// The two predicted generators as count vectors.
    pub predicted: Vec<Vec<u64>>,
    pub detail: String,
}

/// Hadamard-transformed GHZ construction of the conjectured generators.
///
/// g2 = H^{tensor N} |GHZ_N> with H = [[1,1],[1,-1]] has amplitude
/// 1 + (-1)^{parity(x)}, i.e. 2 on even-parity strings; after clearing the
/// gcd it is the indicator of the even-parity code.  g1 applies a symbol
/// flip on the last site, giving the odd-parity indicator.
pub fn conjecture_predicted(n: usize) -> Result<(CoefficientVector, CoefficientVector)> {
    let alphabet = AlphabetSpec::homogeneous(n, 2)?;
    let size = alphabet.full_factorial_size() as usize;
    let mut even = vec![0i64; size];
    for (x, item) in even.iter_mut().enumerate() {
        // amplitude of H^{tensor N} GHZ_N at basis state x:
        // <x|H^N|0..0> + <x|H^N|1..1> = 1 + (-1)^{weight(x)}
        let w = (x as u64).count_ones();
        *item = 1 + if w % 2 == 0 { 1 } else { -1 };
    }
    if even.iter().any(|&v| v < 0) {
        return Err(Error::domain("conjecture-format mismatch: negative coefficient"));
    }
    let g = even.iter().fold(0i64, |acc, &v| num_integer::gcd(acc, v));
    let g2: Vec<u64> = even.iter().map(|&v| (v / g.max(1)) as u64).collect();
    // sigma_x on the last site permutes basis index x -> x ^ 1.
    let mut g1 = vec![0u64; size];
    for x in 0..size {
        g1[x ^ 1] = g2[x];
    }
    Ok((
        CoefficientVector::new(alphabet.clone(), g1)?,
        CoefficientVector::new(alphabet, g2)?,
    ))
}

const RANK_PRIMES: [u64; 3] = [(1 << 61) - 1, 4611686018427387847, 2305843009213693951];

/// Rank of an integer matrix modulo a prime; always a lower bound for the
/// rational rank.
fn rank_mod_p(rows: &[Vec<i64>], ncols: usize, p: u64) -> usize {
    let p = p as i128;
    let mut mat: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| ((x as i128) % p + p) % p).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..mat.len()).find(|&i| mat[i][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mod_inv(mat[rank][col], p);
        for j in col..ncols {
            mat[rank][j] = mat[rank][j] * inv % p;
        }
        let pivot_row = mat[rank].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for j in col..ncols {
                    row[j] = ((row[j] - f * pivot_row[j]) % p + p) % p;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

fn mod_inv(a: i128, p: i128) -> i128 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: i128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mulmod(a: i128, b: i128, p: i128) -> i128 {
    // p < 2^62, so a, b < 2^62 and the product fits in i128.
    a * b % p
}

/// Verifies Conjecture 1 for strength N-1 on N qubits.
///
/// The certificate is exact: the two predicted vectors are verified to be
/// solutions with disjoint 0/1 supports, and the constraint matrix is shown
/// to have rank 2^N - 2 (mod-p rank is a lower bound; the two independent
/// solutions give the matching upper bound).  Kernel dimension 2 plus the
/// 0/1 disjoint-support structure forces every nonnegative integer solution
/// to be a nonnegative integer combination of the two predictions, so they
/// are exactly the Hilbert basis.
pub fn verify_conjecture(n: usize, budget: &SolverBudget) -> Result<ConjectureTranscript> {
    if n < 2 {
        return Err(Error::domain("conjecture needs N >= 2"));
    }
    if n > 16 {
        return Err(Error::budget(format!("N = {n} beyond supported range")));
    }
    let alphabet = AlphabetSpec::homogeneous(n, 2)?;
    let system = build_constraints(&alphabet, n - 1)?;
    let (g1, g2) = conjecture_predicted(n)?;
    let sols_ok = system.is_solution(&g1) && system.is_solution(&g2);
    let disjoint = g1
        .counts()
        .iter()
        .zip(g2.counts().iter())
        .all(|(&a, &b)| (a == 0 || b == 0) && a <= 1 && b <= 1);
    let ncols = system.bound() as usize;
    let target_rank = ncols - 2;
    let mut rank = 0usize;
    for p in RANK_PRIMES {
        rank = rank_mod_p(system.reduced(), ncols, p);
        if rank == target_rank {
            break;
        }
    }
    if n <= 12 && rank != target_rank && start_rank_exceeds(&system, target_rank) {
        return Err(Error::domain(
            "rank certificate inconsistent; exact recomputation disagrees",
        ));
    }
    let holds = sols_ok && disjoint && rank == target_rank;
    let mut transcript = ConjectureTranscript {
        n,
        holds,
        basis_size: if holds { 2 } else { 0 },
        rank,
        kernel_dim: ncols - rank,
        predicted: vec![g1.counts().to_vec(), g2.counts().to_vec()],
        detail: String::new(),
    };
    if holds {
        transcript.detail = format!(
            "kernel dimension 2 with disjoint 0/1 predicted supports; Hilbert basis = {{g1, g2}} for N = {n}"
        );
    } else {
        transcript.detail = format!(
            "verification incomplete: solutions_ok={sols_ok} disjoint={disjoint} rank={rank} (target {target_rank})"
        );
    }
    // Cross-check with the generic completion solver at small N.
    if n <= 4 {
        let basis = hilbert_basis(&system, budget)?;
        let mut got: Vec<Vec<u64>> = basis
            .generators()
            .iter()
            .map(|g| g.counts().to_vec())
            .collect();
        got.sort();
        let mut want = vec![g1.counts().to_vec(), g2.counts().to_vec()];
        want.sort();
        if got != want {
            transcript.holds = false;
            transcript.detail = "completion solver disagrees with predicted basis".into();
        } else {
            transcript.basis_size = basis.len();
        }
    }
    Ok(transcript)
}

/// Exact fallback guard for the rank certificate (kept trivial: the mod-p
/// rank can only underestimate, so a failed certificate is only an error if
/// an exact computation would exceed the target, which cannot happen when
/// two independent kernel vectors exist).
fn start_rank_exceeds(_system: &ConstraintSystem, _target: usize) -> bool {
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn homog(n: usize, d: u8) -> AlphabetSpec {
        AlphabetSpec::homogeneous(n, d).unwrap()
    }

    #[test]
    fn constraint_counts() {
        // [PAPER Eq. (8)]: N=2, d=2, k=1 -> 1 equation per column subset.
        let s = build_constraints(&homog(2, 2), 1).unwrap();
        assert_eq!(s.equations().len(), 2);
        // (N=3, d=2, k=2): (2^2 - 1) * C(3,2) = 9 equations.
        let s = build_constraints(&homog(3, 2), 2).unwrap();
        assert_eq!(s.equations().len(), 9);
        // (N=3, d=2, k=1): 3 balance constraints.
        let s = build_constraints(&homog(3, 2), 1).unwrap();
        assert_eq!(s.equations().len(), 3);
    }

    #[test]
    fn bell_basis() {
        // [PAPER Eq. (16)]: C(2,2,1) has exactly the two Bell arrays.
        let s = build_constraints(&homog(2, 2), 1).unwrap();
        let b = hilbert_basis(&s, &SolverBudget::default()).unwrap();
        assert_eq!(b.len(), 2);
        let counts: Vec<Vec<u64>> = b.generators().iter().map(|g| g.counts().to_vec()).collect();
        assert!(counts.contains(&vec![1, 0, 0, 1]));
        assert!(counts.contains(&vec![0, 1, 1, 0]));
        assert_eq!(b.min_runs().unwrap(), 2);
    }

    #[test]
    fn three_qubit_strength1_basis_has_six_generators() {
        // [PAPER Eq. (A2)]
        let s = build_constraints(&homog(3, 2), 1).unwrap();
        let b = hilbert_basis(&s, &SolverBudget::default()).unwrap();
        assert_eq!(b.len(), 6);
        assert_eq!(b.min_runs().unwrap(), 2);
    }

    #[test]
    fn three_qubit_strength2_basis() {
        // [PAPER Eq. (19)]
        let s = build_constraints(&homog(3, 2), 2).unwrap();
        let b = hilbert_basis(&s, &SolverBudget::default()).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.min_runs().unwrap(), 4);
    }

    #[test]
    fn nonexistence_of_oa_4422() {
        // [PAPER §3]: OA(4,4,2,2) does not exist; min generator runs is 8.
        match prove_nonexistence(4, &homog(4, 2), 2, &SolverBudget::default()).unwrap() {
            ExistenceOutcome::Certificate(c) => {
                assert_eq!(c.reason, "min-runs");
                assert_eq!(c.min_runs, Some(8));
            }
            _ => panic!("expected certificate"),
        }
    }

    #[test]
    fn witness_for_small_cases() {
        match prove_nonexistence(4, &homog(3, 2), 2, &SolverBudget::default()).unwrap() {
            ExistenceOutcome::Witness(w) => {
                assert_eq!(w.r(), 4);
                assert!(w.has_strength(2));
            }
            _ => panic!("expected witness"),
        }
        match prove_nonexistence(2, &homog(2, 2), 1, &SolverBudget::default()).unwrap() {
            ExistenceOutcome::Witness(w) => assert_eq!(w.r(), 2),
            _ => panic!("expected witness"),
        }
    }

    #[test]
    fn lattice_points_2_2_1() {
        let s = build_constraints(&homog(2, 2), 1).unwrap();
        let b = hilbert_basis(&s, &SolverBudget::default()).unwrap();
        let pts = enumerate_lattice_points(&b, 4, &SolverBudget::default()).unwrap();
        // {g1, g2, 2g1, g1+g2, 2g2}
        assert_eq!(pts.len(), 5);
    }

    #[test]
    fn decompose_full_factorial() {
        let s = build_constraints(&homog(2, 2), 1).unwrap();
        let b = hilbert_basis(&s, &SolverBudget::default()).unwrap();
        let ff = OrthogonalArray::full_factorial(&homog(2, 2)).to_coefficient_vector();
        let dec = decompose(&ff, &b).unwrap();
        let total: u64 = dec.iter().map(|(i, m)| b.generators()[*i].total() * m).sum();
        assert_eq!(total, 4);
        // Reconstruct.
        let mut acc = CoefficientVector::zero(homog(2, 2));
        for (i, m) in &dec {
            for _ in 0..*m {
                acc = acc.add(&b.generators()[*i]).unwrap();
            }
        }
        assert_eq!(acc, ff);
    }

    #[test]
    fn conjecture_small_n() {
        for n in 2..=5 {
            let t = verify_conjecture(n, &SolverBudget::default()).unwrap();
            assert!(t.holds, "conjecture failed at N = {n}: {}", t.detail);
            assert_eq!(t.kernel_dim, 2);
        }
    }
}
