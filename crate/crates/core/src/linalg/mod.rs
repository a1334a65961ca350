//! Exact linear algebra over `F_p`.
//!
//! Dense row-major matrices, rank and kernel by Gaussian elimination, and
//! subspaces kept in fully reduced row echelon form so that two subspaces are
//! equal exactly when their representations are equal. Characteristic 2 takes
//! a bit-packed elimination path.

mod gf2;
mod matrix;
mod span;
mod subspace;

pub use matrix::MatrixFp;
pub use span::SpanBuilder;
pub use subspace::{random_subspace, Subspace};

use crate::field::PrimeField;
use rand::Rng;

/// A uniformly random vector of `F_p^m`.
pub fn random_vector<R: Rng + ?Sized>(field: &PrimeField, m: usize, rng: &mut R) -> alloc::vec::Vec<u32> {
    let p = field.p();
    (0..m).map(|_| rng.random_range(0..p)).collect()
}

/// Standard dot product of two residue vectors.
pub fn dot(field: &PrimeField, a: &[u32], b: &[u32]) -> u32 {
    let mut acc = 0u64;
    let budget = field.lazy_budget();
    let mut pending = 0usize;
    for (&x, &y) in a.iter().zip(b) {
        acc += x as u64 * y as u64;
        pending += 1;
        if pending + 1 >= budget {
            acc = field.reduce_u64(acc) as u64;
            pending = 0;
        }
    }
    field.reduce_u64(acc)
}
