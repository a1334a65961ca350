//! Chevalley Lie algebras over `F_p`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{MatrixFp, SpanBuilder, Subspace};
use crate::roots::RootSystem;
use crate::structure::{ChevalleyStructure, Flavor};

/// The reduction mod `p` of a Chevalley basis, in either flavor.
///
/// Basis vectors are indexed as in [`ChevalleyStructure`]: Cartan elements
/// (`h_i` or `y_i`) first, then root vectors.
#[derive(Clone, Debug)]
pub struct LieAlgebraFp {
    cs: Arc<ChevalleyStructure>,
    field: PrimeField,
    flavor: Flavor,
    offsets: Vec<u32>,
    entries: Vec<(u32, u32)>,
}

impl LieAlgebraFp {
    pub fn instantiate(cs: Arc<ChevalleyStructure>, p: u32, flavor: Flavor) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let table = cs.table(flavor);
        let m = table.dim();
        let mut offsets = Vec::with_capacity(m * m + 1);
        let mut entries = Vec::with_capacity(table.nnz());
        offsets.push(0);
        for a in 0..m {
            for b in 0..m {
                for &(c, v) in table.get(a, b) {
                    let r = field.reduce_i64(v);
                    if r != 0 {
                        entries.push((c, r));
                    }
                }
                offsets.push(entries.len() as u32);
            }
        }
        Ok(Self {
            cs,
            field,
            flavor,
            offsets,
            entries,
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.cs.dim()
    }

    pub fn rank(&self) -> usize {
        self.cs.rank()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn structure(&self) -> &Arc<ChevalleyStructure> {
        &self.cs
    }

    pub fn root_system(&self) -> &RootSystem {
        self.cs.root_system()
    }

    /// `[b_a, b_b]` as a sparse list of `(index, coefficient)`.
    #[inline]
    pub fn basis_bracket(&self, a: usize, b: usize) -> &[(u32, u32)] {
        let k = a * self.dim() + b;
        &self.entries[self.offsets[k] as usize..self.offsets[k + 1] as usize]
    }

    pub fn basis_vector(&self, a: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[a] = 1;
        v
    }

    /// Basis vector of the root vector `e_α` for root index `k`.
    pub fn root_vector(&self, k: usize) -> Vec<u32> {
        self.basis_vector(self.cs.root_basis(k))
    }

    pub fn bracket(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let m = self.dim();
        assert_eq!(x.len(), m, "vector length must match the algebra dimension");
        assert_eq!(y.len(), m, "vector length must match the algebra dimension");
        let xs = nonzeros(x);
        let ys = nonzeros(y);
        self.bracket_sparse(&xs, &ys)
    }

    /// Bracket of two vectors given by their nonzero entries.
    pub fn bracket_sparse(&self, xs: &[(u32, u32)], ys: &[(u32, u32)]) -> Vec<u32> {
        let f = self.field;
        let m = self.dim();
        let mut out = vec![0u32; m];
        for &(a, xa) in xs {
            for &(b, yb) in ys {
                let s = f.mul(xa, yb);
                for &(c, v) in self.basis_bracket(a as usize, b as usize) {
                    let slot = &mut out[c as usize];
                    *slot = f.add(*slot, f.mul(s, v));
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)`: column `b` holds `[x, b_b]`.
    pub fn ad_matrix(&self, x: &[u32]) -> MatrixFp {
        let m = self.dim();
        assert_eq!(x.len(), m, "vector length must match the algebra dimension");
        let f = self.field;
        let mut acc = vec![0u64; m * m];
        let lazy = m < f.lazy_budget();
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for b in 0..m {
                for &(c, v) in self.basis_bracket(a, b) {
                    let slot = &mut acc[c as usize * m + b];
                    if lazy {
                        *slot += xa as u64 * v as u64;
                    } else {
                        *slot = f.add(*slot as u32, f.mul(xa, v)) as u64;
                    }
                }
            }
        }
        MatrixFp::from_fn(f, m, m, |i, j| f.reduce_u64(acc[i * m + j]))
    }

    pub fn centralizer_dim(&self, x: &[u32]) -> usize {
        self.dim() - self.ad_matrix(x).rank()
    }

    pub fn centralizer(&self, x: &[u32]) -> Subspace {
        self.ad_matrix(x).kernel()
    }

    /// Common centralizer of a list of vectors.
    pub fn centralizer_of<'a>(&self, xs: impl IntoIterator<Item = &'a [u32]>) -> Subspace {
        let m = self.dim();
        let f = self.field;
        let mut current = Subspace::full(f, m);
        for x in xs {
            if current.is_zero() {
                break;
            }
            // Relations among [k_s, x] for the current basis k_s.
            let images: Vec<Vec<u32>> = current.basis().iter().map(|k| self.bracket(k, x)).collect();
            let t = images.len();
            let relation_matrix = MatrixFp::from_fn(f, m, t, |i, s| images[s][i]);
            let relations = relation_matrix.kernel();
            let next: Vec<Vec<u32>> = relations.basis().iter().map(|c| current.combination(c)).collect();
            current = Subspace::from_vectors(f, m, next.iter().map(|v| v.as_slice())).expect("ambient matches");
        }
        current
    }

    /// `{x : [x, y] = 0 for all y}`, the kernel of `x ↦ ad(x)` as a map
    /// into `m × m` matrices, computed one basis element at a time.
    pub fn center(&self) -> Subspace {
        let basis: Vec<Vec<u32>> = (0..self.dim()).map(|a| self.basis_vector(a)).collect();
        self.centralizer_of(basis.iter().map(|v| v.as_slice()))
    }

    /// `[g, g]`, the span of all basis brackets.
    pub fn derived_subalgebra(&self) -> Subspace {
        let m = self.dim();
        let mut span = SpanBuilder::new(self.field, m);
        let mut v = vec![0u32; m];
        'outer: for a in 0..m {
            for b in a + 1..m {
                let entries = self.basis_bracket(a, b);
                if entries.is_empty() {
                    continue;
                }
                for &(c, x) in entries {
                    v[c as usize] = x;
                }
                span.insert(&v);
                for &(c, _) in entries {
                    v[c as usize] = 0;
                }
                if span.is_full() {
                    break 'outer;
                }
            }
        }
        span.into_subspace()
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_generated_by(&self, s: &Subspace) -> Result<Subspace> {
        let m = self.dim();
        if s.ambient() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: s.ambient(),
            });
        }
        let mut span = SpanBuilder::new(self.field, m);
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in s.basis() {
            if span.insert(v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            if span.is_full() {
                break;
            }
            let xs = nonzeros(&v);
            for b in 0..m {
                let w = self.bracket_sparse(&xs, &[(b as u32, 1)]);
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        Ok(span.into_subspace())
    }

    /// Centralizer dimension of a Cartan element given by its coordinates in
    /// the Cartan basis (coweights `y_j` for the adjoint flavor).
    pub fn semisimple_centralizer_dim(&self, coords: &[u32]) -> Result<usize> {
        let l = self.rank();
        if coords.len() != l {
            return Err(Error::DimensionMismatch {
                expected: l,
                found: coords.len(),
            });
        }
        let mut x = vec![0u32; self.dim()];
        for (slot, &c) in x.iter_mut().zip(coords) {
            *slot = self.field.reduce(c);
        }
        Ok(self.centralizer_dim(&x))
    }

    /// Checks Jacobi mod `p` on all basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let m = self.dim();
        let f = self.field;
        let mut acc = vec![0u32; m];
        let mut touched: Vec<u32> = Vec::new();
        let add = |acc: &mut [u32], touched: &mut Vec<u32>, outer: &[(u32, u32)], z: usize| {
            for &(t, c) in outer {
                for &(u, d) in self.basis_bracket(t as usize, z) {
                    touched.push(u);
                    acc[u as usize] = f.add(acc[u as usize], f.mul(c, d));
                }
            }
        };
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    add(&mut acc, &mut touched, self.basis_bracket(x, y), z);
                    add(&mut acc, &mut touched, self.basis_bracket(y, z), x);
                    add(&mut acc, &mut touched, self.basis_bracket(z, x), y);
                    let mut bad = false;
                    for &u in &touched {
                        bad |= acc[u as usize] != 0;
                        acc[u as usize] = 0;
                    }
                    touched.clear();
                    if bad {
                        return Err(Error::JacobiViolation(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }

    /// Root index of a basis element, `None` for Cartan elements.
    pub fn weight(&self, a: usize) -> Option<usize> {
        self.cs.basis_root(a)
    }

    pub fn label(&self, a: usize) -> String {
        let l = self.rank();
        if a < l {
            let prefix = match self.flavor {
                Flavor::SimplyConnected => 'h',
                Flavor::Adjoint => 'y',
            };
            return format!("{prefix}{}", a + 1);
        }
        let rs = self.root_system();
        let k = a - l;
        let sign = if rs.is_positive(k) { "" } else { "-" };
        let coeffs = rs.root(if rs.is_positive(k) { k } else { rs.negative(k) });
        let digits: String = coeffs.iter().map(|c| format!("{c}")).collect();
        format!("e{sign}{digits}")
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|a| self.label(a)).collect()
    }
}

/// Nonzero entries of a vector.
pub fn nonzeros(x: &[u32]) -> Vec<(u32, u32)> {
    x.iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(i, &v)| (i as u32, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{Family, RootSystemSpec};

    fn alg(f: Family, l: usize, p: u32, flavor: Flavor) -> LieAlgebraFp {
        let rs = RootSystem::new(RootSystemSpec::new(f, l).unwrap());
        let cs = Arc::new(ChevalleyStructure::new(rs).unwrap());
        LieAlgebraFp::instantiate(cs, p, flavor).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(alg(Family::A, 2, 5, Flavor::SimplyConnected).dim(), 8);
        assert_eq!(alg(Family::C, 2, 3, Flavor::SimplyConnected).dim(), 10);
        assert_eq!(alg(Family::G, 2, 2, Flavor::SimplyConnected).dim(), 14);
    }

    #[test]
    fn jacobi_mod_p() {
        for (f, l, p) in [(Family::A, 2, 3), (Family::G, 2, 2), (Family::B, 3, 2), (Family::C, 3, 3)] {
            alg(f, l, p, Flavor::SimplyConnected).check_jacobi().unwrap();
            alg(f, l, p, Flavor::Adjoint).check_jacobi().unwrap();
        }
    }

    #[test]
    fn centralizer_of_highest_root_vector() {
        let a2 = alg(Family::A, 2, 5, Flavor::SimplyConnected);
        let theta = a2.root_system().highest_root();
        assert_eq!(a2.centralizer_dim(&a2.root_vector(theta)), 4);
        let c2 = alg(Family::C, 2, 3, Flavor::SimplyConnected);
        let long_simple = c2.root_system().simple(1);
        assert_eq!(c2.centralizer_dim(&c2.root_vector(long_simple)), 6);
    }

    #[test]
    fn centers() {
        assert_eq!(alg(Family::A, 2, 3, Flavor::SimplyConnected).center().dim(), 1);
        assert_eq!(alg(Family::A, 2, 5, Flavor::SimplyConnected).center().dim(), 0);
        assert_eq!(alg(Family::D, 4, 2, Flavor::SimplyConnected).center().dim(), 2);
        assert_eq!(alg(Family::G, 2, 5, Flavor::SimplyConnected).center().dim(), 0);
    }

    #[test]
    fn central_elements_have_full_centralizer() {
        let a2 = alg(Family::A, 2, 3, Flavor::SimplyConnected);
        let z = a2.center();
        assert_eq!(a2.centralizer_dim(&z.basis()[0]), 8);
    }

    #[test]
    fn derived_and_ideals() {
        let a2 = alg(Family::A, 2, 5, Flavor::SimplyConnected);
        assert!(a2.derived_subalgebra().is_full());
        let zero = Subspace::zero(a2.field(), 8);
        assert!(a2.ideal_generated_by(&zero).unwrap().is_zero());

        let b3 = alg(Family::B, 3, 2, Flavor::SimplyConnected);
        let rs = b3.root_system().clone();
        let short: Vec<Vec<u32>> = (0..rs.num_roots())
            .filter(|&k| rs.length_class(k) == crate::roots::LengthClass::Short)
            .map(|k| b3.root_vector(k))
            .collect();
        let s = Subspace::from_vectors(b3.field(), b3.dim(), short.iter().map(|v| v.as_slice())).unwrap();
        let ideal = b3.ideal_generated_by(&s).unwrap();
        let center = b3.center();
        assert!(!ideal.is_full());
        assert!(!ideal.is_subspace_of(&center).unwrap());
    }

    #[test]
    fn labels_are_distinct() {
        let g2 = alg(Family::G, 2, 5, Flavor::Adjoint);
        let labels = g2.labels();
        assert_eq!(labels[0], "y1");
        assert_eq!(labels[2], "e10");
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), labels.len());
    }
}
