//! The canonical map from the simply connected algebra to the adjoint one.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::LieAlgebraFp;
use crate::error::{Error, Result};
use crate::linalg::{MatrixFp, Subspace};
use crate::structure::Flavor;

/// Which way the Cartan matrix is read when writing `φ(h_i)` in coweights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanConvention {
    /// `φ(h_i) = Σ_j c_{ij} y_j` with `c_{ij} = α_j(h_i)`.
    Rows,
    /// `φ(h_i) = Σ_j c_{ji} y_j`.
    Columns,
}

impl CartanConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            CartanConvention::Rows => "rows",
            CartanConvention::Columns => "columns",
        }
    }
}

/// `φ: g → g♭`, identity on root spaces.
#[derive(Clone, Debug)]
pub struct CanonicalMap {
    matrix: MatrixFp,
    convention: CartanConvention,
    rejected: Vec<CartanConvention>,
}

impl CanonicalMap {
    /// Column `a` is `φ(b_a)`.
    pub fn matrix(&self) -> &MatrixFp {
        &self.matrix
    }

    pub fn convention(&self) -> CartanConvention {
        self.convention
    }

    /// Conventions tried first that failed the homomorphism check.
    pub fn rejected(&self) -> &[CartanConvention] {
        &self.rejected
    }

    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(x)
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.column_space()
    }
}

fn build(g: &LieAlgebraFp, convention: CartanConvention) -> MatrixFp {
    let m = g.dim();
    let l = g.rank();
    let f = g.field();
    let cartan = g.root_system().cartan();
    let mut mat = MatrixFp::zeros(f, m, m);
    for i in 0..l {
        for j in 0..l {
            let c = match convention {
                CartanConvention::Rows => cartan[i][j],
                CartanConvention::Columns => cartan[j][i],
            };
            mat.set(j, i, f.reduce_i64(c));
        }
    }
    for a in l..m {
        mat.set(a, a, 1);
    }
    mat
}

fn is_homomorphism(g: &LieAlgebraFp, gflat: &LieAlgebraFp, phi: &MatrixFp) -> bool {
    let m = g.dim();
    let images: Vec<Vec<u32>> = (0..m).map(|a| phi.column(a)).collect();
    let mut lhs = vec![0u32; m];
    let f = g.field();
    for a in 0..m {
        for b in 0..m {
            lhs.iter_mut().for_each(|x| *x = 0);
            for &(c, v) in g.basis_bracket(a, b) {
                for (slot, &w) in lhs.iter_mut().zip(&images[c as usize]) {
                    *slot = f.add(*slot, f.mul(v, w));
                }
            }
            if gflat.bracket(&images[a], &images[b]) != lhs {
                return false;
            }
        }
    }
    true
}

/// Builds `φ` and checks that it is a Lie homomorphism; if the first
/// Cartan-matrix reading fails, the transposed reading is tried.
pub fn canonical_map(g: &LieAlgebraFp, gflat: &LieAlgebraFp) -> Result<CanonicalMap> {
    if g.flavor() != Flavor::SimplyConnected || gflat.flavor() != Flavor::Adjoint {
        return Err(Error::Precondition {
            check: "canonical_map",
            requirement: "a simply connected source and an adjoint target".into(),
        });
    }
    if g.p() != gflat.p() {
        return Err(Error::FieldMismatch(g.p(), gflat.p()));
    }
    if g.root_system().spec() != gflat.root_system().spec() {
        return Err(Error::Invalid("source and target have different root systems".into()));
    }
    let mut rejected = Vec::new();
    for convention in [CartanConvention::Rows, CartanConvention::Columns] {
        let matrix = build(g, convention);
        if is_homomorphism(g, gflat, &matrix) {
            return Ok(CanonicalMap {
                matrix,
                convention,
                rejected,
            });
        }
        rejected.push(convention);
    }
    Err(Error::CanonicalMapNotHomomorphism)
}

/// Whether the transposed reading also gives a homomorphism (it does only
/// when it coincides with the accepted one modulo `p`).
pub fn convention_is_forced(g: &LieAlgebraFp, gflat: &LieAlgebraFp, accepted: CartanConvention) -> bool {
    let other = match accepted {
        CartanConvention::Rows => CartanConvention::Columns,
        CartanConvention::Columns => CartanConvention::Rows,
    };
    let a = build(g, accepted);
    let b = build(g, other);
    a == b || !is_homomorphism(g, gflat, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{Family, RootSystem, RootSystemSpec};
    use crate::structure::ChevalleyStructure;
    use alloc::sync::Arc;

    fn pair(f: Family, l: usize, p: u32) -> (LieAlgebraFp, LieAlgebraFp) {
        let cs = Arc::new(ChevalleyStructure::new(RootSystem::new(RootSystemSpec::new(f, l).unwrap())).unwrap());
        (
            LieAlgebraFp::instantiate(cs.clone(), p, Flavor::SimplyConnected).unwrap(),
            LieAlgebraFp::instantiate(cs, p, Flavor::Adjoint).unwrap(),
        )
    }

    #[test]
    fn kernel_is_center_and_image_is_derived() {
        for (f, l, p) in [(Family::A, 2, 3), (Family::A, 3, 2), (Family::B, 3, 3), (Family::C, 3, 5), (Family::D, 4, 2), (Family::G, 2, 2)] {
            let (g, gf) = pair(f, l, p);
            let phi = canonical_map(&g, &gf).unwrap();
            assert_eq!(phi.kernel(), g.center(), "{f}{l} p={p}");
            assert_eq!(phi.image(), gf.derived_subalgebra(), "{f}{l} p={p}");
        }
    }

    #[test]
    fn identity_on_root_spaces() {
        let (g, gf) = pair(Family::G, 2, 5);
        let phi = canonical_map(&g, &gf).unwrap();
        for k in 0..g.root_system().num_roots() {
            let e = g.root_vector(k);
            assert_eq!(phi.apply(&e), e);
        }
    }

    #[test]
    fn very_good_primes_give_isomorphisms() {
        let (g, gf) = pair(Family::A, 2, 5);
        let phi = canonical_map(&g, &gf).unwrap();
        assert!(phi.kernel().is_zero());
        assert!(phi.image().is_full());
        assert_eq!(phi.matrix().rank(), 8);
    }

    #[test]
    fn row_reading_is_the_one_that_works() {
        for (f, l) in [(Family::B, 3), (Family::C, 2), (Family::G, 2), (Family::F, 4)] {
            let (g, gf) = pair(f, l, 7);
            let phi = canonical_map(&g, &gf).unwrap();
            assert_eq!(phi.convention(), CartanConvention::Rows);
            assert!(convention_is_forced(&g, &gf, phi.convention()));
        }
    }
}
