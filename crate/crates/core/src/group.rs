//! Root-subgroup automorphisms `x_α(t) = Σ_k t^k (ad e_α)^k / k!`.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::LieAlgebraFp;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::MatrixFp;
use crate::structure::{ChevalleyStructure, Flavor};

/// A square integer matrix stored by columns, each a list of nonzeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMatrix {
    fn identity(m: usize) -> Self {
        Self {
            cols: (0..m).map(|j| vec![(j as u32, 1)]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cols[j].iter().find(|e| e.0 as usize == i).map_or(0, |e| e.1)
    }
}

/// `M_k = (ad e_α)^k / k!` over the integers for `k = 0..=k_max`, where
/// `M_{k_max + 1} = 0`.
#[derive(Clone, Debug)]
pub struct DividedPowerFamily {
    root: usize,
    powers: Vec<SparseIntMatrix>,
}

impl DividedPowerFamily {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn k_max(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn power(&self, k: usize) -> Option<&SparseIntMatrix> {
        self.powers.get(k)
    }
}

/// Divided powers of `ad(e_α)` in the given flavor, with exact division.
pub fn divided_powers(cs: &ChevalleyStructure, flavor: Flavor, root: usize) -> Result<DividedPowerFamily> {
    let table = cs.table(flavor);
    let m = table.dim();
    let ea = cs.root_basis(root);
    let ad = SparseIntMatrix {
        cols: (0..m).map(|b| table.get(ea, b).to_vec()).collect(),
    };
    let mut powers = vec![SparseIntMatrix::identity(m)];
    let mut acc = vec![0i64; m];
    let mut touched: Vec<u32> = Vec::new();
    for k in 1.. {
        let prev = &powers[k - 1];
        let mut cols = Vec::with_capacity(m);
        for b in 0..m {
            // Column b of prev · ad.
            for &(t, v) in ad.column(b) {
                for &(c, w) in prev.column(t as usize) {
                    if acc[c as usize] == 0 {
                        touched.push(c);
                    }
                    acc[c as usize] += v * w;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut col = Vec::new();
            for &c in &touched {
                let x = acc[c as usize];
                acc[c as usize] = 0;
                if x == 0 {
                    continue;
                }
                if x % k as i64 != 0 {
                    return Err(Error::NonIntegralDividedPower { root, power: k });
                }
                col.push((c, x / k as i64));
            }
            touched.clear();
            cols.push(col);
        }
        let next = SparseIntMatrix { cols };
        if next.is_zero() {
            break;
        }
        powers.push(next);
    }
    Ok(DividedPowerFamily { root, powers })
}

/// `x_α(t)` as a matrix over `F_p`.
#[derive(Clone, Debug)]
pub struct RootAutomorphism {
    pub root: usize,
    pub t: u32,
    pub matrix: MatrixFp,
}

type SparseColumns = Vec<Vec<(u32, u32)>>;

/// Divided powers of every root, reduced mod `p`, for acting on an algebra.
#[derive(Clone, Debug)]
pub struct AdjointGroup {
    field: PrimeField,
    m: usize,
    n_roots: usize,
    n_pos: usize,
    /// `reduced[root][k]` holds the columns of `M_k` mod `p`, `k >= 1`.
    reduced: Vec<Vec<SparseColumns>>,
}

impl AdjointGroup {
    pub fn new(l: &LieAlgebraFp) -> Result<Self> {
        let cs = l.structure();
        let f = l.field();
        let rs = cs.root_system();
        let mut reduced = Vec::with_capacity(rs.num_roots());
        for k in 0..rs.num_roots() {
            let fam = divided_powers(cs, l.flavor(), k)?;
            let mats = fam.powers[1..]
                .iter()
                .map(|mat| {
                    mat.cols
                        .iter()
                        .map(|col| {
                            col.iter()
                                .filter_map(|&(c, v)| {
                                    let r = f.reduce_i64(v);
                                    (r != 0).then_some((c, r))
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect();
            reduced.push(mats);
        }
        Ok(Self {
            field: f,
            m: l.dim(),
            n_roots: rs.num_roots(),
            n_pos: rs.num_positive(),
            reduced,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `x_α(t) v`.
    pub fn apply(&self, root: usize, t: u32, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = v.to_vec();
        let mut tk = 1u32;
        for mat in &self.reduced[root] {
            tk = f.mul(tk, t);
            if tk == 0 {
                break;
            }
            for (b, &vb) in v.iter().enumerate() {
                if vb == 0 {
                    continue;
                }
                let s = f.mul(tk, vb);
                for &(c, w) in &mat[b] {
                    out[c as usize] = f.add(out[c as usize], f.mul(s, w));
                }
            }
        }
        out
    }

    pub fn root_automorphism(&self, root: usize, t: u32) -> RootAutomorphism {
        let f = self.field;
        let t = f.reduce(t);
        let mut matrix = MatrixFp::identity(f, self.m);
        let mut tk = 1u32;
        for mat in &self.reduced[root] {
            tk = f.mul(tk, t);
            for (b, col) in mat.iter().enumerate() {
                for &(c, w) in col {
                    let x = matrix.get(c as usize, b);
                    matrix.set(c as usize, b, f.add(x, f.mul(tk, w)));
                }
            }
        }
        RootAutomorphism { root, t, matrix }
    }

    /// A random word of `n` factors `(root, t)`, alternating between
    /// positive and negative roots.
    pub fn random_word<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<(usize, u32)> {
        (0..n)
            .map(|i| {
                let k = rng.random_range(0..self.n_pos);
                let root = if i % 2 == 0 { k } else { k + self.n_pos };
                debug_assert!(root < self.n_roots);
                (root, rng.random_range(0..self.field.p()))
            })
            .collect()
    }

    /// Applies a word, last factor first.
    pub fn apply_word(&self, word: &[(usize, u32)], v: &[u32]) -> Vec<u32> {
        word.iter().rev().fold(v.to_vec(), |acc, &(root, t)| self.apply(root, t, &acc))
    }

    /// Matrix of a random product of `n_factors` root automorphisms.
    pub fn random_element<R: Rng + ?Sized>(&self, n_factors: usize, rng: &mut R) -> MatrixFp {
        let word = self.random_word(n_factors, rng);
        let cols: Vec<Vec<u32>> = (0..self.m)
            .map(|b| {
                let mut e = vec![0u32; self.m];
                e[b] = 1;
                self.apply_word(&word, &e)
            })
            .collect();
        MatrixFp::from_fn(self.field, self.m, self.m, |i, j| cols[j][i])
    }
}

/// `x_α(t)` on an algebra.
pub fn root_automorphism(l: &LieAlgebraFp, root: usize, t: u32) -> Result<RootAutomorphism> {
    Ok(AdjointGroup::new(l)?.root_automorphism(root, t))
}

/// A seeded random product of `n_factors` root automorphisms.
pub fn random_group_element<R: Rng + ?Sized>(l: &LieAlgebraFp, n_factors: usize, rng: &mut R) -> Result<MatrixFp> {
    Ok(AdjointGroup::new(l)?.random_element(n_factors, rng))
}

/// Sizes of an exhaustive automorphism check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutomorphismCheck {
    pub roots: usize,
    pub parameters: usize,
    pub bracket_pairs: u64,
    pub products: u64,
}

/// Checks, for every root `α` and all `s, t ∈ F_p`, that `x_α(t)` preserves
/// the bracket on every pair of basis vectors and that
/// `x_α(s) x_α(t) = x_α(s + t)`.
pub fn check_automorphisms(l: &LieAlgebraFp) -> Result<AutomorphismCheck> {
    let grp = AdjointGroup::new(l)?;
    let f = l.field();
    let (m, p) = (l.dim(), f.p());
    let n_roots = l.root_system().num_roots();
    let mut check = AutomorphismCheck {
        roots: n_roots,
        parameters: p as usize,
        bracket_pairs: 0,
        products: 0,
    };
    for root in 0..n_roots {
        let mats: Vec<MatrixFp> = (0..p).map(|t| grp.root_automorphism(root, t).matrix).collect();
        for (t, x) in mats.iter().enumerate() {
            let images: Vec<Vec<(u32, u32)>> = (0..m).map(|b| crate::algebra::nonzeros(&x.column(b))).collect();
            for a in 0..m {
                for b in 0..m {
                    let mut lhs = vec![0u32; m];
                    for &(c, v) in l.basis_bracket(a, b) {
                        for &(r, w) in &images[c as usize] {
                            let r = r as usize;
                            lhs[r] = f.add(lhs[r], f.mul(v, w));
                        }
                    }
                    if lhs != l.bracket_sparse(&images[a], &images[b]) {
                        return Err(Error::AutomorphismFailure {
                            root,
                            t: t as u32,
                            what: "does not preserve the bracket",
                        });
                    }
                    check.bracket_pairs += 1;
                }
            }
            for (s, y) in mats.iter().enumerate() {
                if y.mul(x)? != mats[f.add(s as u32, t as u32) as usize] {
                    return Err(Error::AutomorphismFailure {
                        root,
                        t: t as u32,
                        what: "breaks the one-parameter law",
                    });
                }
                check.products += 1;
            }
        }
    }
    Ok(check)
}
