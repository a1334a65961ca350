use alloc::vec;
use alloc::vec::Vec;

use super::Subspace;
use crate::field::PrimeField;

const NO_PIVOT: u32 = u32::MAX;

/// Incrementally accumulates the span of a stream of vectors.
///
/// Rows are kept in reduced echelon form throughout, so reducing a new vector
/// only needs its original entries at pivot columns and the subtraction can
/// be accumulated lazily in `u64` with a single reduction per entry.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: PrimeField,
    m: usize,
    rows: Vec<Vec<u32>>,
    pivot_cols: Vec<usize>,
    pivot_row: Vec<u32>,
    scratch: Vec<u64>,
}

impl SpanBuilder {
    pub fn new(field: PrimeField, m: usize) -> Self {
        Self {
            field,
            m,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            pivot_row: vec![NO_PIVOT; m],
            scratch: vec![0; m],
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The residue of `v` modulo the current span (zero iff `v` is in it).
    pub fn reduce(&mut self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.m, "vector length must match the ambient dimension");
        let f = self.field;
        let p = f.p() as u64;
        let budget = f.lazy_budget();
        let acc = &mut self.scratch;
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = x as u64;
        }
        let mut pending = 0usize;
        for (c, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let r = self.pivot_row[c];
            if r == NO_PIVOT {
                continue;
            }
            let coef = p - x as u64;
            let row = &self.rows[r as usize];
            for (a, &y) in acc[c..].iter_mut().zip(&row[c..]) {
                *a += coef * y as u64;
            }
            pending += 1;
            if pending + 2 >= budget {
                for a in acc.iter_mut() {
                    *a = f.reduce_u64(*a) as u64;
                }
                pending = 0;
            }
        }
        acc.iter().map(|&a| f.reduce_u64(a)).collect()
    }

    pub fn contains(&mut self, v: &[u32]) -> bool {
        if self.is_full() {
            return true;
        }
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        if self.is_full() {
            return false;
        }
        let mut w = self.reduce(v);
        let Some(lead) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(w[lead]);
        if inv != 1 {
            for x in w[lead..].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let p = f.p() as u64;
        for row in self.rows.iter_mut() {
            let coef = row[lead];
            if coef == 0 {
                continue;
            }
            let neg = p - coef as u64;
            for (x, &y) in row[lead..].iter_mut().zip(&w[lead..]) {
                *x = f.reduce_u64(*x as u64 + neg * y as u64);
            }
        }
        self.pivot_row[lead] = self.rows.len() as u32;
        self.pivot_cols.push(lead);
        self.rows.push(w);
        true
    }

    pub fn extend<'a>(&mut self, vs: impl IntoIterator<Item = &'a [u32]>) {
        for v in vs {
            if self.is_full() {
                break;
            }
            self.insert(v);
        }
    }

    pub fn into_subspace(self) -> Subspace {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivot_cols[i]);
        let pivots = order.iter().map(|&i| self.pivot_cols[i]).collect();
        let mut rows = self.rows;
        let basis = order.iter().map(|&i| core::mem::take(&mut rows[i])).collect();
        Subspace::from_parts(self.field, self.m, basis, pivots)
    }
}
