//! The structured code family: parameters, the circulant geometry of `C`,
//! the circular distance `ell`, code sampling and syndrome computation.
//!
//! Convention used everywhere: `C` is indexed 0-based and column `j` of `C`
//! carries entries at rows `j` and `(j+1) mod m`. Codeword coordinates
//! `[0, m)` multiply `C`, coordinates `[m, n)` multiply `M`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// The `(n, m, r)` triple defining a structured code family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    /// Blocklength (count of code bits).
    pub n: usize,
    /// Number of parity checks (= columns of `C`).
    pub m: usize,
    /// Column weight of `M`.
    pub r: usize,
}

impl CodeParams {
    /// Checks the existence condition: `r >= 3`, `m >= r`, `(n-m)r >= m`
    /// and `n > m`.
    pub fn validate(n: usize, m: usize, r: usize) -> Result<CodeParams> {
        if r < 3 {
            return Err(Error::InvalidParams(format!("r = {r} < 3")));
        }
        if m < r {
            return Err(Error::InvalidParams(format!("m = {m} < r = {r}")));
        }
        if n <= m {
            return Err(Error::InvalidParams(format!("n = {n} <= m = {m}")));
        }
        if (n - m) * r < m {
            return Err(Error::InvalidParams(format!(
                "(n-m)*r = {} < m = {m}",
                (n - m) * r
            )));
        }
        Ok(CodeParams { n, m, r })
    }
}

/// Column-major sparse GF(2) matrix. Each column stores a strictly
/// ascending list of row indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseBinaryMatrix {
    pub rows: usize,
    pub cols: usize,
    col_supports: Vec<Vec<usize>>,
}

impl SparseBinaryMatrix {
    pub fn new(rows: usize, cols: usize, col_supports: Vec<Vec<usize>>) -> Result<Self> {
        if col_supports.len() != cols {
            return Err(Error::InvalidParams(format!(
                "expected {cols} columns, got {}",
                col_supports.len()
            )));
        }
        for (c, sup) in col_supports.iter().enumerate() {
            for w in sup.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidParams(format!(
                        "column {c} support not strictly ascending"
                    )));
                }
            }
            if let Some(&last) = sup.last() {
                if last >= rows {
                    return Err(Error::InvalidParams(format!(
                        "column {c} has row index {last} >= {rows}"
                    )));
                }
            }
        }
        Ok(SparseBinaryMatrix {
            rows,
            cols,
            col_supports,
        })
    }

    pub fn col(&self, j: usize) -> &[usize] {
        &self.col_supports[j]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[usize]> {
        self.col_supports.iter().map(|v| v.as_slice())
    }

    /// Number of stored entries.
    pub fn nnz(&self) -> usize {
        self.col_supports.iter().map(|c| c.len()).sum()
    }

    /// Row occupancy counts.
    pub fn row_weights(&self) -> Vec<usize> {
        let mut w = vec![0usize; self.rows];
        for sup in &self.col_supports {
            for &i in sup {
                w[i] += 1;
            }
        }
        w
    }

    /// Row-to-columns adjacency, used by the chain sampler.
    pub fn row_index(&self) -> Vec<Vec<usize>> {
        let mut idx = vec![Vec::new(); self.rows];
        for (j, sup) in self.col_supports.iter().enumerate() {
            for &i in sup {
                idx[i].push(j);
            }
        }
        idx
    }
}

/// Packed bit vector; coordinate `i` lives in word `i / 64`, bit `i % 64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = BitVector::zeros(len);
        for &i in support {
            v.flip(i);
        }
        v
    }
}

/// How row occupancies of the sampled `M` are balanced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowPolicy {
    /// Per-column uniform draws; zero rows repaired afterwards.
    AnyNonZero,
    /// Configuration-model assignment; row weights differ by at most 1.
    NearRegular,
}

/// A structured code `H = [C | M]`. `C` is implicit in the parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredCode {
    pub params: CodeParams,
    pub m_matrix: SparseBinaryMatrix,
}

impl StructuredCode {
    pub fn new(params: CodeParams, m_matrix: SparseBinaryMatrix) -> Result<Self> {
        if m_matrix.rows != params.m || m_matrix.cols != params.n - params.m {
            return Err(Error::InvalidParams(format!(
                "M must be {}x{}, got {}x{}",
                params.m,
                params.n - params.m,
                m_matrix.rows,
                m_matrix.cols
            )));
        }
        for (j, sup) in m_matrix.columns().enumerate() {
            if sup.len() != params.r {
                return Err(Error::InvalidParams(format!(
                    "column {j} of M has weight {} != r = {}",
                    sup.len(),
                    params.r
                )));
            }
        }
        if m_matrix.row_weights().iter().any(|&w| w == 0) {
            return Err(Error::InvalidParams("M has a zero row".into()));
        }
        Ok(StructuredCode { params, m_matrix })
    }

    /// Support of column `j` of the full `H`, `j` in `[0, n)`.
    pub fn h_column(&self, j: usize) -> Vec<usize> {
        let m = self.params.m;
        if j < m {
            let a = j;
            let b = (j + 1) % m;
            if a < b {
                vec![a, b]
            } else {
                vec![b, a]
            }
        } else {
            self.m_matrix.col(j - m).to_vec()
        }
    }
}

/// Circular distance on Z/mZ: the smallest `|y|` with `y ≡ x (mod m)`.
pub fn ell(x: i64, m: usize) -> usize {
    debug_assert!(m >= 1);
    let m = m as i64;
    let xm = x.rem_euclid(m);
    xm.min(m - xm) as usize
}

/// A run of `ell(i-j, m)` consecutive (mod m) columns of `C` whose GF(2)
/// sum has support exactly `{i, j}`.
///
/// The run is returned as column indices; when both arcs have the same
/// length (m even, distance m/2) the arc starting at `min(i, j)` and going
/// upward is chosen.
pub fn consecutive_run(i: usize, j: usize, m: usize) -> Result<Vec<usize>> {
    if i == j {
        return Err(Error::DegenerateRun);
    }
    debug_assert!(i < m && j < m);
    let len = ell(i as i64 - j as i64, m);
    // Upward from i reaches j iff (i + len) mod m == j.
    let start = if (i + len) % m == j {
        if (j + len) % m == i {
            i.min(j)
        } else {
            i
        }
    } else {
        j
    };
    let run: Vec<usize> = (0..len).map(|d| (start + d) % m).collect();
    // Internal verification by reconstruction.
    debug_assert_eq!(run_support(&run, m), {
        let mut s = vec![i, j];
        s.sort_unstable();
        s
    });
    Ok(run)
}

/// GF(2) support of a sum of C-columns.
pub fn run_support(run: &[usize], m: usize) -> Vec<usize> {
    let mut acc = vec![false; m];
    for &c in run {
        acc[c] = !acc[c];
        acc[(c + 1) % m] = !acc[(c + 1) % m];
    }
    (0..m).filter(|&i| acc[i]).collect()
}

const SAMPLE_RETRY_BUDGET: usize = 100;

/// Samples a structured code; deterministic given the seed.
pub fn sample_code(params: CodeParams, policy: RowPolicy, seed: u64) -> Result<StructuredCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_RETRY_BUDGET {
        let cols = match policy {
            RowPolicy::AnyNonZero => sample_any_nonzero(params, &mut rng),
            RowPolicy::NearRegular => sample_near_regular(params, &mut rng),
        };
        if let Some(cols) = cols {
            let m_matrix = SparseBinaryMatrix::new(params.m, params.n - params.m, cols)?;
            return StructuredCode::new(params, m_matrix);
        }
    }
    Err(Error::SamplingFailed(SAMPLE_RETRY_BUDGET))
}

fn sample_any_nonzero(params: CodeParams, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<usize>>> {
    let (m, r, w) = (params.m, params.r, params.n - params.m);
    let mut cols: Vec<Vec<usize>> = (0..w)
        .map(|_| {
            let mut sup = rand::seq::index::sample(rng, m, r).into_vec();
            sup.sort_unstable();
            sup
        })
        .collect();
    // Repair zero rows by relocating one entry out of the heaviest row.
    let mut weights = vec![0usize; m];
    for sup in &cols {
        for &i in sup {
            weights[i] += 1;
        }
    }
    loop {
        let Some(empty) = weights.iter().position(|&x| x == 0) else {
            return Some(cols);
        };
        let heavy = (0..m).max_by_key(|&i| weights[i]).unwrap();
        if weights[heavy] < 2 {
            return None;
        }
        // Find a column containing heavy but not empty.
        let donor = cols
            .iter()
            .position(|sup| sup.contains(&heavy) && !sup.contains(&empty))?;
        let sup = &mut cols[donor];
        sup.retain(|&i| i != heavy);
        sup.push(empty);
        sup.sort_unstable();
        weights[heavy] -= 1;
        weights[empty] += 1;
    }
}

fn sample_near_regular(params: CodeParams, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<usize>>> {
    let (m, r, w) = (params.m, params.r, params.n - params.m);
    let total = w * r;
    let base = total / m;
    let extra = total % m;
    let mut rows: Vec<usize> = (0..m).collect();
    rows.shuffle(rng);
    let mut stubs = Vec::with_capacity(total);
    for (pos, &row) in rows.iter().enumerate() {
        let copies = base + usize::from(pos < extra);
        stubs.extend(std::iter::repeat(row).take(copies));
    }
    stubs.shuffle(rng);
    let mut cols: Vec<Vec<usize>> = Vec::with_capacity(w);
    for _ in 0..w {
        let mut sup: Vec<usize> = Vec::with_capacity(r);
        let mut skipped: Vec<usize> = Vec::new();
        while sup.len() < r {
            let row = stubs.pop()?;
            if sup.contains(&row) {
                skipped.push(row);
            } else {
                sup.push(row);
            }
        }
        // Skipped stubs go back for later columns.
        for s in skipped.into_iter().rev() {
            let at = rng.gen_range(0..=stubs.len());
            stubs.insert(at, s);
        }
        sup.sort_unstable();
        cols.push(sup);
    }
    Some(cols)
}

/// Computes `H · wordᵀ` over GF(2).
pub fn syndrome(code: &StructuredCode, word: &BitVector) -> Result<BitVector> {
    let (n, m) = (code.params.n, code.params.m);
    if word.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: word.len(),
        });
    }
    let mut s = BitVector::zeros(m);
    for j in 0..m {
        if word.get(j) {
            s.flip(j);
            s.flip((j + 1) % m);
        }
    }
    for j in m..n {
        if word.get(j) {
            for &i in code.m_matrix.col(j - m) {
                s.flip(i);
            }
        }
    }
    Ok(s)
}
