//! Bottleneck pairing between two multisupports: a bijection minimizing the
//! maximum circular distance over matched pairs. Binary search over the
//! candidate widths, feasibility by bipartite maximum matching. The
//! multisupport size c is a small constant so the O(c^3 log c) cost is
//! negligible.

use crate::code::ell;
use crate::{Error, Result};

/// A bijection between two multisupports together with its width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    /// Ordered pairs (i, f(i)); first components are a permutation of
    /// multisupport A, second components of multisupport B.
    pub pairs: Vec<(usize, usize)>,
    /// max over pairs of ell(i - j, m).
    pub width: usize,
}

fn try_match(dist: &[Vec<usize>], limit: usize) -> Option<Vec<usize>> {
    let c = dist.len();
    let mut matched_b: Vec<Option<usize>> = vec![None; c];
    fn augment(
        a: usize,
        dist: &[Vec<usize>],
        limit: usize,
        seen: &mut [bool],
        matched_b: &mut [Option<usize>],
    ) -> bool {
        for b in 0..dist.len() {
            if dist[a][b] <= limit && !seen[b] {
                seen[b] = true;
                if matched_b[b].is_none()
                    || augment(matched_b[b].unwrap(), dist, limit, seen, matched_b)
                {
                    matched_b[b] = Some(a);
                    return true;
                }
            }
        }
        false
    }
    for a in 0..c {
        let mut seen = vec![false; c];
        if !augment(a, dist, limit, &mut seen, &mut matched_b) {
            return None;
        }
    }
    Some(matched_b.iter().map(|x| x.unwrap()).collect())
}

/// Minimum-width bijection between the multisupports `a` and `b`.
pub fn bottleneck_pairing(a: &[usize], b: &[usize], m: usize) -> Result<Pairing> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    let c = a.len();
    if c == 0 {
        return Ok(Pairing {
            pairs: Vec::new(),
            width: 0,
        });
    }
    let dist: Vec<Vec<usize>> = a
        .iter()
        .map(|&x| b.iter().map(|&y| ell(x as i64 - y as i64, m)).collect())
        .collect();
    let mut widths: Vec<usize> = dist.iter().flatten().copied().collect();
    widths.sort_unstable();
    widths.dedup();
    // Smallest candidate width admitting a perfect matching.
    let mut lo = 0;
    let mut hi = widths.len() - 1;
    while lo < hi {
        let mid = (lo + hi) / 2;
        if try_match(&dist, widths[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let width = widths[lo];
    let matched_b = try_match(&dist, width).expect("feasible at the selected width");
    let mut pairs: Vec<(usize, usize)> = vec![(0, 0); c];
    for (bi, &ai) in matched_b.iter().enumerate() {
        pairs[ai] = (a[ai], b[bi]);
    }
    let width = pairs
        .iter()
        .map(|&(x, y)| ell(x as i64 - y as i64, m))
        .max()
        .unwrap_or(0);
    Ok(Pairing { pairs, width })
}

/// Factorial brute force over all bijections; test oracle.
pub fn bottleneck_width_brute_force(a: &[usize], b: &[usize], m: usize) -> usize {
    assert_eq!(a.len(), b.len());
    let c = a.len();
    let mut perm: Vec<usize> = (0..c).collect();
    let mut best = usize::MAX;
    // Heap's algorithm.
    fn visit(perm: &[usize], a: &[usize], b: &[usize], m: usize, best: &mut usize) {
        let w = perm
            .iter()
            .enumerate()
            .map(|(i, &p)| ell(a[i] as i64 - b[p] as i64, m))
            .max()
            .unwrap_or(0);
        *best = (*best).min(w);
    }
    fn heaps(
        k: usize,
        perm: &mut Vec<usize>,
        a: &[usize],
        b: &[usize],
        m: usize,
        best: &mut usize,
    ) {
        if k <= 1 {
            visit(perm, a, b, m, best);
            return;
        }
        for i in 0..k {
            heaps(k - 1, perm, a, b, m, best);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    if c == 0 {
        return 0;
    }
    heaps(c, &mut perm, a, b, m, &mut best);
    best
}
