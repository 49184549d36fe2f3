//! Locality-sensitive bucketing of reduced multisupports. Coordinates are
//! quantized to cells of size max(1, t/2) on a number of shifted grids;
//! vectors sharing a quantized key on any grid become candidates. Candidates
//! are always verified exactly by bottleneck matching, so the index can only
//! produce false rejects, never false accepts.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

pub struct BucketIndex {
    m: usize,
    cell: usize,
    offsets: usize,
    buckets: HashMap<u64, Vec<u32>>,
}

impl BucketIndex {
    pub fn new(m: usize, t: usize, offsets: usize) -> Self {
        BucketIndex {
            m,
            cell: (t / 2).max(1),
            offsets: offsets.max(1),
            buckets: HashMap::new(),
        }
    }

    fn key(&self, multisupport: &[usize], grid: usize) -> u64 {
        let shift = grid * self.cell / self.offsets;
        let mut cells: Vec<u32> = multisupport
            .iter()
            .map(|&x| (((x + shift) % self.m) / self.cell) as u32)
            .collect();
        cells.sort_unstable();
        let mut h = DefaultHasher::new();
        grid.hash(&mut h);
        cells.hash(&mut h);
        h.finish()
    }

    /// Previously inserted entries sharing a bucket on any grid.
    pub fn candidates(&self, multisupport: &[usize]) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.offsets)
            .filter_map(|g| self.buckets.get(&self.key(multisupport, g)))
            .flatten()
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn insert(&mut self, multisupport: &[usize], id: u32) {
        for g in 0..self.offsets {
            let key = self.key(multisupport, g);
            self.buckets.entry(key).or_default().push(id);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_vectors_share_a_bucket() {
        let mut idx = BucketIndex::new(100, 10, 2);
        idx.insert(&[3, 40, 77], 0);
        assert_eq!(idx.candidates(&[3, 40, 77]), vec![0]);
    }

    #[test]
    fn nearby_vectors_collide_on_some_grid() {
        // Straddling a cell boundary of the unshifted grid.
        let mut idx = BucketIndex::new(100, 10, 2);
        idx.insert(&[4], 0);
        assert_eq!(idx.candidates(&[5]), vec![0]);
    }

    #[test]
    fn far_vectors_do_not_collide() {
        let mut idx = BucketIndex::new(100, 10, 2);
        idx.insert(&[10], 0);
        assert!(idx.candidates(&[60]).is_empty());
    }
}
