//! Dense GF(2) elimination over bit-packed rows. Test-oracle machinery:
//! no sparsity tricks, intended for small instances only.

use crate::code::{BitVector, StructuredCode};

/// Dense row-major GF(2) matrix backed by 64-bit words.
#[derive(Debug, Clone)]
pub struct DenseGf2 {
    pub rows: usize,
    pub cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl DenseGf2 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        DenseGf2 {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn from_code(code: &StructuredCode) -> Self {
        let (n, m) = (code.params.n, code.params.m);
        let mut h = DenseGf2::zeros(m, n);
        for j in 0..n {
            for i in code.h_column(j) {
                h.set(i, j, true);
            }
        }
        h
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.data[i * self.words_per_row + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        let w = self.words_per_row;
        let (t, s) = (target * w, source * w);
        for k in 0..w {
            let v = self.data[s + k];
            self.data[t + k] ^= v;
        }
    }

    /// Row-reduces in place; returns the pivot column of each pivot row.
    pub fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| self.get(i, col)) else {
                continue;
            };
            if p != row {
                self.xor_rows(row, p);
                self.xor_rows(p, row);
                self.xor_rows(row, p);
            }
            for i in 0..self.rows {
                if i != row && self.get(i, col) {
                    self.xor_rows(i, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.reduce().len()
    }

    /// Basis of the right kernel: one vector per free column.
    pub fn kernel_basis(mut self) -> Vec<BitVector> {
        let pivots = self.reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = BitVector::zeros(self.cols);
            v.set(free, true);
            for (row, &pc) in pivots.iter().enumerate() {
                if self.get(row, free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}
