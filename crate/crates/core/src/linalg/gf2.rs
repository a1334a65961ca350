//! Word-parallel elimination for `p = 2`: rows are packed 64 entries per word
//! and row operations are XORs.

use alloc::vec;
use alloc::vec::Vec;

use super::MatrixFp;

struct BitRows {
    words: usize,
    data: Vec<u64>,
}

impl BitRows {
    fn pack(m: &MatrixFp) -> Self {
        let words = m.cols().div_ceil(64).max(1);
        let mut data = vec![0u64; words * m.rows()];
        for i in 0..m.rows() {
            for (j, &x) in m.row(i).iter().enumerate() {
                if x & 1 == 1 {
                    data[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Self { words, data }
    }

    #[inline]
    fn bit(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    fn swap(&mut self, a: usize, b: usize) {
        for w in 0..self.words {
            self.data.swap(a * self.words + w, b * self.words + w);
        }
    }

    /// `row[dst] ^= row[src]`, starting from word `from`.
    #[inline]
    fn xor_into(&mut self, dst: usize, src: usize, from: usize) {
        let w = self.words;
        for k in from..w {
            let s = self.data[src * w + k];
            self.data[dst * w + k] ^= s;
        }
    }

    /// Eliminates in place; returns pivot columns. `reduce_above` gives the
    /// fully reduced form.
    fn eliminate(&mut self, rows: usize, cols: usize, reduce_above: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.bit(i, c)) else {
                continue;
            };
            if pr != r {
                self.swap(pr, r);
            }
            let from = c / 64;
            let start = if reduce_above { 0 } else { r + 1 };
            for i in start..rows {
                if i != r && self.bit(i, c) {
                    self.xor_into(i, r, from);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

pub(super) fn rank(m: &MatrixFp) -> usize {
    let mut bits = BitRows::pack(m);
    bits.eliminate(m.rows(), m.cols(), false).len()
}

pub(super) fn rref(m: &MatrixFp) -> (MatrixFp, Vec<usize>) {
    let mut bits = BitRows::pack(m);
    let pivots = bits.eliminate(m.rows(), m.cols(), true);
    let out = MatrixFp::from_fn(m.field(), m.rows(), m.cols(), |i, j| bits.bit(i, j) as u32);
    (out, pivots)
}
