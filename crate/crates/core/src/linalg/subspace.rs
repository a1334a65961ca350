use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{random_vector, MatrixFp, SpanBuilder};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A subspace of `F_p^m` stored as its reduced row echelon basis.
///
/// The representation is canonical: equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub(super) fn from_parts(field: PrimeField, ambient: usize, basis: Vec<Vec<u32>>, pivots: Vec<usize>) -> Self {
        Self {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self::from_parts(field, ambient, Vec::new(), Vec::new())
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self::from_parts(field, ambient, basis, (0..ambient).collect())
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn from_vectors<'a>(
        field: PrimeField,
        ambient: usize,
        vectors: impl IntoIterator<Item = &'a [u32]>,
    ) -> Result<Self> {
        let mut b = SpanBuilder::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if v.iter().any(|&x| x >= field.p()) {
                let reduced: Vec<u32> = v.iter().map(|&x| field.reduce(x)).collect();
                b.insert(&reduced);
            } else {
                b.insert(v);
            }
        }
        Ok(b.into_subspace())
    }

    /// Span of unit vectors at the given coordinates.
    pub fn coordinate(field: PrimeField, ambient: usize, coords: &[usize]) -> Self {
        let vs: Vec<Vec<u32>> = coords
            .iter()
            .map(|&c| {
                let mut v = vec![0; ambient];
                v[c] = 1;
                v
            })
            .collect();
        Self::from_vectors(field, ambient, vs.iter().map(|v| v.as_slice())).expect("unit vectors")
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    #[inline]
    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn to_matrix(&self) -> MatrixFp {
        MatrixFp::from_rows(self.field, self.ambient, &self.basis).expect("basis rows have ambient length")
    }

    fn builder(&self) -> SpanBuilder {
        let mut b = SpanBuilder::new(self.field, self.ambient);
        b.extend(self.basis.iter().map(|v| v.as_slice()));
        b
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.ambient && self.builder().contains(v)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        let mut b = other.builder();
        Ok(self.basis.iter().all(|v| b.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut b = self.builder();
        b.extend(other.basis.iter().map(|v| v.as_slice()));
        Ok(b.into_subspace())
    }

    /// Orthogonal complement for the standard dot product: the null space of
    /// the basis matrix.
    pub fn orthogonal_complement(&self) -> Subspace {
        let f = self.field;
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let mut vs = Vec::with_capacity(self.codim());
        for free in (0..self.ambient).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.ambient];
            v[free] = 1;
            for (k, &pc) in self.pivots.iter().enumerate() {
                v[pc] = f.neg(self.basis[k][free]);
            }
            vs.push(v);
        }
        Subspace::from_vectors(f, self.ambient, vs.iter().map(|v| v.as_slice())).expect("ambient length")
    }

    /// `A ∩ B = (A^⊥ + B^⊥)^⊥`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self
            .orthogonal_complement()
            .sum(&other.orthogonal_complement())?
            .orthogonal_complement())
    }

    /// The vector `Σ c_i b_i`.
    pub fn combination(&self, coeffs: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u64; self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(b) {
                *o = f.reduce_u64(*o + *c as u64 * x as u64) as u64;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        let coeffs = random_vector(&self.field, self.dim(), rng);
        self.combination(&coeffs)
    }
}

/// A uniformly random `d`-dimensional subspace of `F_p^m`: the row space of a
/// random `d x m` matrix, redrawn until it has rank `d`.
pub fn random_subspace<R: Rng + ?Sized>(field: PrimeField, m: usize, d: usize, rng: &mut R) -> Result<Subspace> {
    if d > m {
        return Err(Error::DimensionTooLarge { dim: d, ambient: m });
    }
    loop {
        let mut b = SpanBuilder::new(field, m);
        for _ in 0..d {
            let v = random_vector(&field, m, rng);
            b.insert(&v);
        }
        if b.dim() == d {
            return Ok(b.into_subspace());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Every vector of F_p^m, for exhaustive membership oracles.
    fn all_vectors(p: u32, m: usize) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..m {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..p).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// The set of all elements of a span, by enumerating coefficient vectors.
    fn elements(s: &Subspace) -> alloc::collections::BTreeSet<Vec<u32>> {
        let p = s.field().p();
        all_vectors(p, s.dim()).iter().map(|c| s.combination(c)).collect()
    }

    #[test]
    fn trivial_identities() {
        let field = f(3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random_subspace(field, 6, 3, &mut rng).unwrap();
        let zero = Subspace::zero(field, 6);
        let full = Subspace::full(field, 6);
        assert_eq!(a.sum(&zero).unwrap(), a);
        assert_eq!(a.intersect(&full).unwrap(), a);
        let b = a.sum(&random_subspace(field, 6, 2, &mut rng).unwrap()).unwrap();
        assert!(a.is_subspace_of(&b).unwrap());
        assert_eq!(a.sum(&b).unwrap(), b);
        assert_eq!(random_subspace(field, 6, 0, &mut rng).unwrap(), zero);
        assert_eq!(random_subspace(field, 6, 6, &mut rng).unwrap(), full);
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let a = Subspace::full(f(2), 3);
        let b = Subspace::full(f(2), 4);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(random_subspace(f(2), 3, 4, &mut ChaCha8Rng::seed_from_u64(0)).is_err());
    }

    #[test]
    fn sum_and_intersection_match_membership_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for (p, m) in [(2u32, 8usize), (3, 5), (2, 6)] {
            let field = f(p);
            for _ in 0..12 {
                let da = rng.random_range(0..=m.min(4));
                let db = rng.random_range(0..=m.min(4));
                let a = random_subspace(field, m, da, &mut rng).unwrap();
                let b = random_subspace(field, m, db, &mut rng).unwrap();
                let s = a.sum(&b).unwrap();
                let i = a.intersect(&b).unwrap();
                assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
                let ea = elements(&a);
                let eb = elements(&b);
                let expected_i: alloc::collections::BTreeSet<_> = ea.intersection(&eb).cloned().collect();
                assert_eq!(elements(&i), expected_i);
                let mut expected_s = alloc::collections::BTreeSet::new();
                for x in &ea {
                    for y in &eb {
                        expected_s.insert(x.iter().zip(y).map(|(u, v)| (u + v) % p).collect::<Vec<_>>());
                    }
                }
                assert_eq!(elements(&s), expected_s);
                for v in all_vectors(p, m).iter().step_by(7) {
                    assert_eq!(a.contains(v), ea.contains(v));
                }
            }
        }
    }

    #[test]
    fn random_subspaces_have_requested_dimension() {
        let field = f(3);
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..1000 {
            assert_eq!(random_subspace(field, 8, 4, &mut rng).unwrap().dim(), 4);
        }
    }

    #[test]
    fn random_subspace_is_deterministic_per_seed() {
        let field = f(5);
        let a = random_subspace(field, 9, 4, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
        let b = random_subspace(field, 9, 4, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn complement_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for p in [2u32, 5] {
            let a = random_subspace(f(p), 9, 4, &mut rng).unwrap();
            let c = a.orthogonal_complement();
            assert_eq!(c.dim(), 5);
            assert_eq!(c.orthogonal_complement(), a);
        }
    }
}
