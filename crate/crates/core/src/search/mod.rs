//! Randomized search for certified low-weight codewords. Chains of
//! quasi-colliding column sums are sampled, reduced by their built-in pairs,
//! and fed to a locality-sensitive index; every candidate collision is
//! verified exactly by bottleneck matching and, when it improves on the best
//! known weight, assembled into a codeword that is certified by a syndrome
//! check before being returned.

mod bucket;
mod pairing;

pub use bucket::BucketIndex;
pub use pairing::{bottleneck_pairing, bottleneck_width_brute_force, Pairing};

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds;
use crate::code::{consecutive_run, ell, syndrome, BitVector, StructuredCode};
use crate::gf2::DenseGf2;
use crate::{Error, Result};

/// The integer sum of k+1 distinct M-columns together with k built-in
/// quasi-colliding pairs. The length-m integer sum is stored sparsely as
/// sorted (coordinate, multiplicity) entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainVector {
    pub column_indices: Vec<usize>,
    pub int_sum: Vec<(usize, u32)>,
    /// k coordinate pairs (i, j) with ell(i-j) <= t, consuming pairwise
    /// disjoint multisupport positions of the integer sum.
    pub built_in_pairs: Vec<(usize, usize)>,
}

impl ChainVector {
    pub fn k(&self) -> usize {
        self.built_in_pairs.len()
    }

    pub fn total_weight(&self) -> usize {
        self.int_sum.iter().map(|&(_, c)| c as usize).sum()
    }
}

/// A chain after removing its built-in pairs: a sorted multisupport of
/// c = k(r-2)+r residues mod m, keeping the chain it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedVector {
    pub multisupport: Vec<usize>,
    pub origin: ChainVector,
}

/// Search parameters. `t = 0` selects the tolerance automatically from the
/// packing bound.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub k: usize,
    pub t: usize,
    pub max_chains: usize,
    pub seed: u64,
    pub bucket_offsets: usize,
}

impl SearchConfig {
    pub fn new(k: usize, t: usize, max_chains: usize, seed: u64) -> Result<Self> {
        if t != 0 && t <= 2 * k {
            return Err(Error::HypothesisViolated { t, limit: 2 * k });
        }
        if max_chains == 0 {
            return Err(Error::InvalidParams("max_chains must be positive".into()));
        }
        Ok(SearchConfig {
            k,
            t,
            max_chains,
            seed,
            bucket_offsets: 2,
        })
    }
}

/// One C-run in an assembled codeword: `len` consecutive (mod m) columns of
/// `C` starting at `start`, summing to support {i, j}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunDescriptor {
    pub i: usize,
    pub j: usize,
    pub start: usize,
    pub len: usize,
}

/// A certified nonzero codeword with full provenance.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub codeword: BitVector,
    pub weight: usize,
    /// Symmetric difference of the two chains' M-column sets.
    pub m_column_set: Vec<usize>,
    pub c_runs: Vec<RunDescriptor>,
    pub chains: (ChainVector, ChainVector),
    pub cross_pairing: Pairing,
    pub k: usize,
    pub t: usize,
}

/// Outcome of a search run: best certified result plus budget accounting.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub best: Option<SearchResult>,
    pub chains_used: usize,
    pub collisions_assembled: usize,
    pub t: usize,
}

const STEP_RETRY_BUDGET: usize = 200;

/// Samples one chain: a start column, then k quasi-collision extension
/// steps. Each step picks an unconsumed position j of the running sum, a row
/// i != j within circular distance t, and a column with an entry in row i;
/// if that column is already in the chain the quasi-collision already
/// present in the sum is recorded and any fresh column is taken instead.
pub fn build_chain(
    code: &StructuredCode,
    k: usize,
    t: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ChainVector> {
    let row_index = code.m_matrix.row_index();
    build_chain_with_index(code, &row_index, k, t, rng)
}

pub fn build_chain_with_index(
    code: &StructuredCode,
    row_index: &[Vec<usize>],
    k: usize,
    t: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ChainVector> {
    let m = code.params.m;
    let width = code.params.n - code.params.m;
    if t <= 2 * k {
        return Err(Error::HypothesisViolated { t, limit: 2 * k });
    }
    if width <= k {
        return Err(Error::InvalidParams(format!(
            "need more than k = {k} columns in M, have {width}"
        )));
    }

    let mut cols: Vec<usize> = Vec::with_capacity(k + 1);
    let mut col_set: HashSet<usize> = HashSet::new();
    // BTreeMaps keep the free-position ordering deterministic for a seed.
    let mut sum: BTreeMap<usize, u32> = BTreeMap::new();
    let mut consumed: BTreeMap<usize, u32> = BTreeMap::new();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(k);

    let add_column = |col: usize,
                          cols: &mut Vec<usize>,
                          col_set: &mut HashSet<usize>,
                          sum: &mut BTreeMap<usize, u32>| {
        cols.push(col);
        col_set.insert(col);
        for &row in code.m_matrix.col(col) {
            *sum.entry(row).or_insert(0) += 1;
        }
    };

    let start = rng.gen_range(0..width);
    add_column(start, &mut cols, &mut col_set, &mut sum);

    for _ in 0..k {
        let mut done = false;
        for _ in 0..STEP_RETRY_BUDGET {
            // Unconsumed multisupport positions of the running sum.
            let free: Vec<usize> = sum
                .iter()
                .flat_map(|(&coord, &cnt)| {
                    let used = consumed.get(&coord).copied().unwrap_or(0);
                    std::iter::repeat(coord).take((cnt - used) as usize)
                })
                .collect();
            if free.is_empty() {
                return Err(Error::ChainStuck);
            }
            let j = free[rng.gen_range(0..free.len())];
            let i = if 2 * t + 1 >= m {
                // Every row is within tolerance; pick any row != j.
                let mut i = rng.gen_range(0..m - 1);
                if i >= j {
                    i += 1;
                }
                i
            } else {
                let d = rng.gen_range(1..=t);
                if rng.gen() {
                    (j + d) % m
                } else {
                    (j + m - d) % m
                }
            };
            debug_assert!(i != j && ell(i as i64 - j as i64, m) <= t);
            let row_cols = &row_index[i];
            let col = row_cols[rng.gen_range(0..row_cols.len())];
            if col_set.contains(&col) {
                // The quasi-collision is already present in the running sum,
                // provided an unconsumed unit remains at row i.
                let at_i = sum.get(&i).copied().unwrap_or(0);
                let used_i = consumed.get(&i).copied().unwrap_or(0);
                if i == j || at_i <= used_i {
                    continue;
                }
                let fresh = loop {
                    let cand = rng.gen_range(0..width);
                    if !col_set.contains(&cand) {
                        break cand;
                    }
                };
                pairs.push((j, i));
                *consumed.entry(j).or_insert(0) += 1;
                *consumed.entry(i).or_insert(0) += 1;
                add_column(fresh, &mut cols, &mut col_set, &mut sum);
            } else {
                add_column(col, &mut cols, &mut col_set, &mut sum);
                pairs.push((j, i));
                *consumed.entry(j).or_insert(0) += 1;
                *consumed.entry(i).or_insert(0) += 1;
            }
            done = true;
            break;
        }
        if !done {
            return Err(Error::ChainStuck);
        }
    }

    let mut int_sum: Vec<(usize, u32)> = sum.into_iter().collect();
    int_sum.sort_unstable();
    Ok(ChainVector {
        column_indices: cols,
        int_sum,
        built_in_pairs: pairs,
    })
}

/// Independent chain validator used by tests and the acceptance suite.
pub fn validate_chain(
    code: &StructuredCode,
    chain: &ChainVector,
    t: usize,
) -> std::result::Result<(), String> {
    let m = code.params.m;
    let k = chain.k();
    if chain.column_indices.len() != k + 1 {
        return Err(format!(
            "expected {} columns, found {}",
            k + 1,
            chain.column_indices.len()
        ));
    }
    let distinct: HashSet<usize> = chain.column_indices.iter().copied().collect();
    if distinct.len() != k + 1 {
        return Err("columns are not distinct".into());
    }
    let mut expect: HashMap<usize, u32> = HashMap::new();
    for &col in &chain.column_indices {
        for &row in code.m_matrix.col(col) {
            *expect.entry(row).or_insert(0) += 1;
        }
    }
    let mut expect: Vec<(usize, u32)> = expect.into_iter().collect();
    expect.sort_unstable();
    if expect != chain.int_sum {
        return Err("integer sum does not match the column set".into());
    }
    if chain.total_weight() != (k + 1) * code.params.r {
        return Err("total weight is not (k+1)r".into());
    }
    let mut consumed: HashMap<usize, u32> = HashMap::new();
    for &(i, j) in &chain.built_in_pairs {
        if ell(i as i64 - j as i64, m) > t {
            return Err(format!("pair ({i},{j}) exceeds tolerance {t}"));
        }
        *consumed.entry(i).or_insert(0) += 1;
        *consumed.entry(j).or_insert(0) += 1;
    }
    for (&coord, &used) in &consumed {
        let avail = chain
            .int_sum
            .iter()
            .find(|&&(c, _)| c == coord)
            .map(|&(_, v)| v)
            .unwrap_or(0);
        if used > avail {
            return Err(format!(
                "pairs consume {used} units at {coord}, only {avail} available"
            ));
        }
    }
    Ok(())
}

/// Removes one unit at each coordinate consumed by each built-in pair,
/// leaving a multisupport of exactly c = k(r-2)+r residues.
pub fn reduce(chain: &ChainVector) -> ReducedVector {
    let mut consumed: HashMap<usize, u32> = HashMap::new();
    for &(i, j) in &chain.built_in_pairs {
        *consumed.entry(i).or_insert(0) += 1;
        *consumed.entry(j).or_insert(0) += 1;
    }
    let mut multisupport = Vec::new();
    for &(coord, cnt) in &chain.int_sum {
        let used = consumed.get(&coord).copied().unwrap_or(0);
        for _ in 0..(cnt - used) {
            multisupport.push(coord);
        }
    }
    ReducedVector {
        multisupport,
        origin: chain.clone(),
    }
}

/// Scans a pool of reduced vectors for the first verified pair admitting a
/// pairing of width strictly below t. Detection goes through the bucket
/// index; verification is exact.
pub fn find_collision(
    pool: &[ReducedVector],
    t: usize,
    m: usize,
) -> Option<(usize, usize, Pairing)> {
    let mut index = BucketIndex::new(m, t, 2);
    for (id, entry) in pool.iter().enumerate() {
        for cand in index.candidates(&entry.multisupport) {
            let other = &pool[cand as usize];
            let pairing = bottleneck_pairing(&entry.multisupport, &other.multisupport, m)
                .expect("pool entries share c");
            if pairing.width < t {
                return Some((cand as usize, id, pairing));
            }
        }
        index.insert(&entry.multisupport, id as u32);
    }
    None
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let sa: HashSet<usize> = a.iter().copied().collect();
    let sb: HashSet<usize> = b.iter().copied().collect();
    let mut out: Vec<usize> = sa.symmetric_difference(&sb).copied().collect();
    out.sort_unstable();
    out
}

/// Upper estimate of the assembled weight: M-column count plus the run
/// lengths of every pair, before any GF(2) cancellation between runs.
fn estimate_weight(u: &ChainVector, v: &ChainVector, cross: &Pairing, m: usize) -> usize {
    let columns = symmetric_difference(&u.column_indices, &v.column_indices).len();
    let run_total: usize = u
        .built_in_pairs
        .iter()
        .chain(&v.built_in_pairs)
        .chain(&cross.pairs)
        .map(|&(i, j)| ell(i as i64 - j as i64, m))
        .sum();
    columns + run_total
}

/// Builds the codeword whose M-part is the symmetric difference of the two
/// chains' column sets and whose C-part is the GF(2) sum of the consecutive
/// runs of every built-in and cross pair, then certifies it.
pub fn assemble_codeword(
    code: &StructuredCode,
    chain_u: &ChainVector,
    chain_v: &ChainVector,
    cross_pairing: &Pairing,
    t: usize,
) -> Result<SearchResult> {
    let (n, m, r) = (code.params.n, code.params.m, code.params.r);
    let k = chain_u.k();
    if cross_pairing.width >= t {
        return Err(Error::InvalidParams(format!(
            "cross pairing width {} is not below t = {t}",
            cross_pairing.width
        )));
    }
    let m_column_set = symmetric_difference(&chain_u.column_indices, &chain_v.column_indices);
    let mut word = BitVector::zeros(n);
    let mut c_runs = Vec::new();
    for &(i, j) in chain_u
        .built_in_pairs
        .iter()
        .chain(&chain_v.built_in_pairs)
        .chain(&cross_pairing.pairs)
    {
        if i == j {
            continue; // self-pairs contribute no C-columns
        }
        let run = consecutive_run(i, j, m)?;
        c_runs.push(RunDescriptor {
            i,
            j,
            start: run[0],
            len: run.len(),
        });
        for &col in &run {
            word.flip(col);
        }
    }
    for &col in &m_column_set {
        word.flip(m + col);
    }
    if word.is_zero() {
        return Err(Error::DegenerateZero);
    }
    let s = syndrome(code, &word)?;
    if !s.is_zero() {
        return Err(Error::CertificationFailed(
            "assembled word has nonzero syndrome".into(),
        ));
    }
    let weight = word.weight();
    let bound = bounds::weight_bound(t, k, r);
    if weight > bound {
        return Err(Error::CertificationFailed(format!(
            "weight {weight} exceeds the bound {bound}"
        )));
    }
    Ok(SearchResult {
        codeword: word,
        weight,
        m_column_set,
        c_runs,
        chains: (chain_u.clone(), chain_v.clone()),
        cross_pairing: cross_pairing.clone(),
        k,
        t,
    })
}

fn consider_collision(
    code: &StructuredCode,
    red: &ReducedVector,
    other: &ReducedVector,
    t: usize,
    best: &mut Option<SearchResult>,
    assembled: &mut usize,
) {
    let m = code.params.m;
    let Ok(pairing) = bottleneck_pairing(&red.multisupport, &other.multisupport, m) else {
        return;
    };
    if pairing.width >= t {
        return;
    }
    // Skip assembly when the pre-cancellation estimate cannot improve.
    let est = estimate_weight(&red.origin, &other.origin, &pairing, m);
    if let Some(b) = best {
        if est >= b.weight {
            return;
        }
    }
    match assemble_codeword(code, &other.origin, &red.origin, &pairing, t) {
        Ok(result) => {
            *assembled += 1;
            if best.as_ref().map_or(true, |b| result.weight < b.weight) {
                *best = Some(result);
            }
        }
        Err(Error::DegenerateZero) => {}
        Err(Error::CertificationFailed(msg)) => {
            panic!("certification failed, implementation bug: {msg}")
        }
        Err(e) => panic!("unexpected assembly error: {e}"),
    }
}

/// Fingerprint for duplicate-chain suppression. A chain identical in
/// columns, pairs and reduced multisupport adds no pairs the original did
/// not already probe, so re-inserting it only wastes budget.
fn chain_fingerprint(red: &ReducedVector) -> u64 {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};
    let mut cols = red.origin.column_indices.clone();
    cols.sort_unstable();
    let mut h = DefaultHasher::new();
    cols.hash(&mut h);
    red.origin.built_in_pairs.hash(&mut h);
    red.multisupport.hash(&mut h);
    h.finish()
}

/// Single-threaded search; deterministic given the seed. Samples up to
/// `max_chains` chains, verifies every bucketed collision candidate, and
/// keeps the minimum-weight certified result.
pub fn search_min_weight(code: &StructuredCode, config: &SearchConfig) -> SearchOutcome {
    let m = code.params.m;
    let t = if config.t == 0 {
        bounds::choose_t(m, code.params.r, config.k)
    } else {
        config.t
    };
    let row_index = code.m_matrix.row_index();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut index = BucketIndex::new(m, t, config.bucket_offsets);
    let mut pool: Vec<ReducedVector> = Vec::new();
    let mut best: Option<SearchResult> = None;
    let mut assembled = 0usize;
    let mut chains_used = 0usize;
    let mut seen: HashSet<u64> = HashSet::new();
    for _ in 0..config.max_chains {
        let chain = match build_chain_with_index(code, &row_index, config.k, t, &mut rng) {
            Ok(chain) => chain,
            Err(Error::ChainStuck) => continue,
            Err(e) => panic!("chain sampling failed: {e}"),
        };
        chains_used += 1;
        let red = reduce(&chain);
        if !seen.insert(chain_fingerprint(&red)) {
            continue;
        }
        for cand in index.candidates(&red.multisupport) {
            consider_collision(code, &red, &pool[cand as usize], t, &mut best, &mut assembled);
        }
        index.insert(&red.multisupport, pool.len() as u32);
        pool.push(red);
    }
    SearchOutcome {
        best,
        chains_used,
        collisions_assembled: assembled,
        t,
    }
}

/// Parallel search: workers own independent seeded generator streams and
/// share the bucket index behind a mutex. Correctness (exact certification)
/// is preserved; run-to-run determinism is not.
pub fn search_min_weight_parallel(
    code: &StructuredCode,
    config: &SearchConfig,
    threads: usize,
) -> SearchOutcome {
    if threads <= 1 {
        return search_min_weight(code, config);
    }
    let m = code.params.m;
    let t = if config.t == 0 {
        bounds::choose_t(m, code.params.r, config.k)
    } else {
        config.t
    };
    let row_index = code.m_matrix.row_index();
    struct Shared {
        index: BucketIndex,
        pool: Vec<ReducedVector>,
        best: Option<SearchResult>,
        assembled: usize,
        seen: HashSet<u64>,
    }
    let shared = Mutex::new(Shared {
        index: BucketIndex::new(m, t, config.bucket_offsets),
        pool: Vec::new(),
        best: None,
        assembled: 0,
        seen: HashSet::new(),
    });
    let counter = AtomicUsize::new(0);
    let chains_used = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for worker in 0..threads {
            let shared = &shared;
            let counter = &counter;
            let chains_used = &chains_used;
            let row_index = &row_index;
            scope.spawn(move || {
                let mut rng = ChaCha8Rng::seed_from_u64(
                    config.seed ^ (worker as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
                );
                loop {
                    if counter.fetch_add(1, Ordering::Relaxed) >= config.max_chains {
                        break;
                    }
                    let chain =
                        match build_chain_with_index(code, row_index, config.k, t, &mut rng) {
                            Ok(chain) => chain,
                            Err(Error::ChainStuck) => continue,
                            Err(e) => panic!("chain sampling failed: {e}"),
                        };
                    chains_used.fetch_add(1, Ordering::Relaxed);
                    let red = reduce(&chain);
                    let fingerprint = chain_fingerprint(&red);
                    let mut guard = shared.lock().unwrap();
                    if !guard.seen.insert(fingerprint) {
                        continue;
                    }
                    let cands = guard.index.candidates(&red.multisupport);
                    for cand in cands {
                        let other = guard.pool[cand as usize].clone();
                        let Shared {
                            best, assembled, ..
                        } = &mut *guard;
                        consider_collision(code, &red, &other, t, best, assembled);
                    }
                    let id = guard.pool.len() as u32;
                    guard.index.insert(&red.multisupport, id);
                    guard.pool.push(red);
                }
            });
        }
    });
    let shared = shared.into_inner().unwrap();
    SearchOutcome {
        best: shared.best,
        chains_used: chains_used.load(Ordering::Relaxed),
        collisions_assembled: shared.assembled,
        t,
    }
}

const EXACT_DIMENSION_GUARD: usize = 24;

/// Minimum Hamming weight over all nonzero codewords, by Gray-code
/// enumeration of the kernel of H. Guarded to dimension 24.
pub fn exact_min_distance(code: &StructuredCode) -> Result<usize> {
    let basis = DenseGf2::from_code(code).kernel_basis();
    let dim = basis.len();
    if dim > EXACT_DIMENSION_GUARD {
        return Err(Error::TooLarge(dim, EXACT_DIMENSION_GUARD));
    }
    if dim == 0 {
        return Err(Error::InvalidParams("code has no nonzero codeword".into()));
    }
    let mut current = BitVector::zeros(code.params.n);
    let mut min_weight = usize::MAX;
    for g in 1u64..(1u64 << dim) {
        let idx = g.trailing_zeros() as usize;
        current.xor_assign(&basis[idx]);
        min_weight = min_weight.min(current.weight());
    }
    Ok(min_weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{sample_code, CodeParams, RowPolicy, SparseBinaryMatrix};

    fn small_code(seed: u64) -> StructuredCode {
        let params = CodeParams::validate(60, 24, 3).unwrap();
        sample_code(params, RowPolicy::NearRegular, seed).unwrap()
    }

    #[test]
    fn chain_base_case_is_one_column() {
        let code = small_code(1);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let chain = build_chain(&code, 0, 5, &mut rng).unwrap();
        assert_eq!(chain.column_indices.len(), 1);
        assert!(chain.built_in_pairs.is_empty());
        assert_eq!(chain.total_weight(), 3);
        validate_chain(&code, &chain, 5).unwrap();
    }

    #[test]
    fn chain_with_k2_passes_validator() {
        let code = small_code(2);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let chain = build_chain(&code, 2, 7, &mut rng).unwrap();
            assert_eq!(chain.column_indices.len(), 3);
            assert_eq!(chain.built_in_pairs.len(), 2);
            validate_chain(&code, &chain, 7).unwrap();
        }
    }

    #[test]
    fn chain_fallback_fires_on_duplicated_columns() {
        // Two identical columns: the row picked often hits the column
        // already in the chain, exercising the fallback branch.
        let params = CodeParams::validate(8, 4, 3).unwrap();
        let m = SparseBinaryMatrix::new(
            4,
            4,
            vec![vec![0, 1, 2], vec![0, 1, 2], vec![1, 2, 3], vec![0, 2, 3]],
        )
        .unwrap();
        let code = StructuredCode::new(params, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let chain = build_chain(&code, 1, 3, &mut rng).unwrap();
            validate_chain(&code, &chain, 3).unwrap();
        }
    }

    #[test]
    fn reduce_drops_two_units_per_pair() {
        let code = small_code(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 0..3 {
            let chain = build_chain(&code, k, 7, &mut rng).unwrap();
            let red = reduce(&chain);
            // k(r-2)+r residues survive, i.e. (k+1)r minus two per pair.
            assert_eq!(red.multisupport.len(), k + 3);
            assert_eq!(red.multisupport.len(), (k + 1) * 3 - 2 * k);
        }
    }

    #[test]
    fn find_collision_identity_and_strictness() {
        let chain = ChainVector {
            column_indices: vec![0],
            int_sum: vec![(0, 1), (5, 1), (9, 1)],
            built_in_pairs: vec![],
        };
        let chain2 = ChainVector {
            column_indices: vec![1],
            int_sum: vec![(0, 1), (5, 1), (9, 1)],
            built_in_pairs: vec![],
        };
        let a = reduce(&chain);
        let b = reduce(&chain2);
        let found = find_collision(&[a.clone(), b.clone()], 3, 10).unwrap();
        assert_eq!(found.2.width, 0);
        assert!(find_collision(&[a], 3, 10).is_none());
        // Only pair has bottleneck width exactly t = 3: strict inequality.
        let u = ChainVector {
            column_indices: vec![0],
            int_sum: vec![(0, 1), (5, 1)],
            built_in_pairs: vec![],
        };
        let v = ChainVector {
            column_indices: vec![1],
            int_sum: vec![(2, 1), (8, 1)],
            built_in_pairs: vec![],
        };
        assert!(find_collision(&[reduce(&u), reduce(&v)], 3, 10).is_none());
        // A nearby pair that the shifted grid does catch.
        let w = ChainVector {
            column_indices: vec![2],
            int_sum: vec![(0, 1), (6, 1)],
            built_in_pairs: vec![],
        };
        let found = find_collision(&[reduce(&u), reduce(&w)], 4, 10).unwrap();
        assert!(found.2.width < 4);
    }

    #[test]
    fn identical_chains_assemble_to_degenerate_zero() {
        let code = small_code(4);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let chain = build_chain(&code, 0, 9, &mut rng).unwrap();
        let red = reduce(&chain);
        let pairing =
            bottleneck_pairing(&red.multisupport, &red.multisupport, code.params.m).unwrap();
        assert!(matches!(
            assemble_codeword(&code, &chain, &chain, &pairing, 9),
            Err(Error::DegenerateZero)
        ));
    }

    #[test]
    fn search_single_chain_returns_none() {
        let code = small_code(5);
        let config = SearchConfig::new(0, 0, 1, 1).unwrap();
        let outcome = search_min_weight(&code, &config);
        assert!(outcome.best.is_none());
    }

    #[test]
    fn search_finds_certified_codeword_on_small_code() {
        let code = small_code(6);
        let config = SearchConfig::new(0, 0, 5000, 42).unwrap();
        let outcome = search_min_weight(&code, &config);
        let res = outcome.best.expect("collision expected at this budget");
        assert!(!res.codeword.is_zero());
        assert!(syndrome(&code, &res.codeword).unwrap().is_zero());
        assert!(res.weight <= bounds::weight_bound(outcome.t, 0, 3));
    }

    #[test]
    fn search_is_deterministic_single_threaded() {
        let code = small_code(7);
        let config = SearchConfig::new(1, 0, 2000, 9).unwrap();
        let a = search_min_weight(&code, &config);
        let b = search_min_weight(&code, &config);
        assert_eq!(
            a.best.as_ref().map(|r| (r.weight, r.codeword.clone())),
            b.best.as_ref().map(|r| (r.weight, r.codeword.clone()))
        );
        assert_eq!(a.chains_used, b.chains_used);
    }

    #[test]
    fn parallel_search_results_are_certified() {
        let code = small_code(8);
        let config = SearchConfig::new(0, 0, 4000, 11).unwrap();
        let outcome = search_min_weight_parallel(&code, &config, 4);
        if let Some(res) = outcome.best {
            assert!(syndrome(&code, &res.codeword).unwrap().is_zero());
            assert!(!res.codeword.is_zero());
        }
    }

    #[test]
    fn exact_min_distance_bounds_search_results() {
        let params = CodeParams::validate(72, 54, 3).unwrap();
        let code = sample_code(params, RowPolicy::NearRegular, 12).unwrap();
        let dim = crate::encoder::code_dimension(&code);
        assert!(dim <= 24);
        let exact = exact_min_distance(&code).unwrap();
        let config = SearchConfig::new(0, 0, 3000, 13).unwrap();
        let outcome = search_min_weight(&code, &config);
        if let Some(res) = outcome.best {
            assert!(exact <= res.weight);
        }
    }

    #[test]
    fn exact_min_distance_guard() {
        let params = CodeParams::validate(120, 60, 3).unwrap();
        let code = sample_code(params, RowPolicy::NearRegular, 14).unwrap();
        assert!(matches!(
            exact_min_distance(&code),
            Err(Error::TooLarge(_, _))
        ));
    }
}
