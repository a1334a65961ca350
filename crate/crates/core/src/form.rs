//! Invariant symmetric bilinear forms.
//!
//! The general solver uses the root grading: a form is determined by the
//! Gram block on the Cartan elements and one scalar `c_α = ⟨e_α, e_-α⟩` per
//! positive root, every other pairing of basis vectors being zero. The
//! associativity constraints on basis triples of total weight zero then form
//! a small linear system. [`dense_solution_space`] solves the unrestricted
//! system for cross-checking on small algebras.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::LieAlgebraFp;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{MatrixFp, SpanBuilder, Subspace};
use crate::roots::{Family, RootSystem, RootSystemSpec};
use crate::structure::{ChevalleyStructure, Flavor};

/// Exhaustive search over the solution space below this many candidates.
pub const EXHAUSTIVE_LIMIT: u64 = 100_000;
/// Random candidates drawn when the space is too large to enumerate.
pub const SAMPLED_CANDIDATES: usize = 100;
const SELECTION_SEED: u64 = 0x5eed_f0e1;

#[derive(Clone, Debug)]
pub struct InvariantForm {
    matrix: MatrixFp,
    kernel: Subspace,
    solution_dim: usize,
    exhaustive: bool,
}

impl InvariantForm {
    fn from_matrix(matrix: MatrixFp, solution_dim: usize, exhaustive: bool) -> Self {
        let kernel = matrix.kernel();
        Self {
            matrix,
            kernel,
            solution_dim,
            exhaustive,
        }
    }

    pub fn matrix(&self) -> &MatrixFp {
        &self.matrix
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn nullity(&self) -> usize {
        self.kernel.dim()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows() - self.kernel.dim()
    }

    /// Dimension of the space of invariant symmetric forms this one was
    /// selected from.
    pub fn solution_dim(&self) -> usize {
        self.solution_dim
    }

    /// Whether maximal rank was established by enumerating the whole
    /// solution space.
    pub fn exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    /// Checks `η([x,y],z) = η(x,[y,z])` on all basis triples.
    pub fn check_associativity(&self, l: &LieAlgebraFp) -> Result<()> {
        let m = l.dim();
        if self.matrix.rows() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: self.matrix.rows(),
            });
        }
        let f = l.field();
        let eta = &self.matrix;
        for x in 0..m {
            for y in 0..m {
                let xy = l.basis_bracket(x, y);
                for z in 0..m {
                    let mut lhs = 0u32;
                    for &(c, v) in xy {
                        lhs = f.add(lhs, f.mul(v, eta.get(c as usize, z)));
                    }
                    let mut rhs = 0u32;
                    for &(c, v) in l.basis_bracket(y, z) {
                        rhs = f.add(rhs, f.mul(v, eta.get(x, c as usize)));
                    }
                    if lhs != rhs {
                        return Err(Error::InvariantMismatch(alloc::format!(
                            "form is not associative on basis triple ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Unknowns of the graded ansatz: Cartan Gram entries `(i <= j)`, then one
/// scalar per positive root.
struct Ansatz {
    l: usize,
    n_pos: usize,
}

impl Ansatz {
    fn count(&self) -> usize {
        self.l * (self.l + 1) / 2 + self.n_pos
    }

    fn cartan(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * self.l - i * (i + 1) / 2 + j
    }

    fn root(&self, k: usize) -> usize {
        self.l * (self.l + 1) / 2 + k
    }

    /// Unknown index of `⟨b_a, b_b⟩`, if not forced to vanish.
    fn pairing(&self, rs: &RootSystem, a: usize, b: usize) -> Option<usize> {
        let l = self.l;
        match (a < l, b < l) {
            (true, true) => Some(self.cartan(a, b)),
            (false, false) if rs.negative(a - l) == b - l => {
                let k = a - l;
                Some(self.root(if rs.is_positive(k) { k } else { rs.negative(k) }))
            }
            _ => None,
        }
    }
}

fn accumulate(row: &mut Vec<(usize, i64)>, idx: usize, v: i64) {
    if let Some(e) = row.iter_mut().find(|e| e.0 == idx) {
        e.1 += v;
    } else {
        row.push((idx, v));
    }
}

/// Kernel of a stream of sparse integer equations reduced mod `p`.
fn solve(field: PrimeField, n: usize, equations: impl IntoIterator<Item = Vec<(usize, i64)>>) -> Subspace {
    let mut span = SpanBuilder::new(field, n);
    let mut dense = vec![0u32; n];
    for eq in equations {
        if span.is_full() {
            break;
        }
        let mut any = false;
        for &(i, v) in &eq {
            let r = field.reduce_i64(v);
            dense[i] = r;
            any |= r != 0;
        }
        if any {
            span.insert(&dense);
        }
        for &(i, _) in &eq {
            dense[i] = 0;
        }
    }
    span.into_subspace().orthogonal_complement()
}

/// Picks the element of maximal `rank` from the span of `basis`.
fn select_max<F: FnMut(&[u32]) -> usize>(field: PrimeField, basis: &Subspace, mut rank: F) -> (Vec<u32>, bool) {
    let d = basis.dim();
    let p = field.p() as u64;
    let exhaustive = p.checked_pow(d as u32).is_some_and(|n| n <= EXHAUSTIVE_LIMIT);
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut consider = |coeffs: &[u32], best: &mut Option<(usize, Vec<u32>)>| {
        let v = basis.combination(coeffs);
        let r = rank(&v);
        if best.as_ref().is_none_or(|(b, _)| r > *b) {
            *best = Some((r, v));
        }
    };
    if exhaustive {
        let mut coeffs = vec![0u32; d];
        loop {
            consider(&coeffs, &mut best);
            let mut i = 0;
            while i < d {
                coeffs[i] += 1;
                if (coeffs[i] as u64) < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SELECTION_SEED);
        for _ in 0..SAMPLED_CANDIDATES {
            let coeffs: Vec<u32> = (0..d).map(|_| rng.random_range(0..field.p())).collect();
            consider(&coeffs, &mut best);
        }
    }
    (best.map(|b| b.1).unwrap_or_else(|| vec![0; basis.ambient()]), exhaustive)
}

/// Space of graded invariant symmetric forms, as vectors of ansatz unknowns.
pub fn graded_solution_space(l: &LieAlgebraFp) -> Subspace {
    let rs = l.root_system();
    let rank = l.rank();
    let m = l.dim();
    let ans = Ansatz {
        l: rank,
        n_pos: rs.num_positive(),
    };
    let table = l.structure().table(l.flavor());
    let zero = vec![0i64; rank];
    let weight = |a: usize| -> &[i64] {
        if a < rank {
            &zero
        } else {
            rs.root(a - rank)
        }
    };
    let mut equations = Vec::new();
    let mut target = vec![0i64; rank];
    for x in 0..m {
        for y in 0..m {
            for (t, (a, b)) in target.iter_mut().zip(weight(x).iter().zip(weight(y))) {
                *t = -(a + b);
            }
            let zs: Vec<usize> = if target.iter().all(|&t| t == 0) {
                (0..rank).collect()
            } else {
                match rs.index_of(&target) {
                    Some(k) => vec![rank + k],
                    None => continue,
                }
            };
            for z in zs {
                let mut row: Vec<(usize, i64)> = Vec::new();
                for &(c, v) in table.get(x, y) {
                    if let Some(u) = ans.pairing(rs, c as usize, z) {
                        accumulate(&mut row, u, v);
                    }
                }
                for &(c, v) in table.get(y, z) {
                    if let Some(u) = ans.pairing(rs, x, c as usize) {
                        accumulate(&mut row, u, -v);
                    }
                }
                if row.iter().any(|e| e.1 != 0) {
                    equations.push(row);
                }
            }
        }
    }
    solve(l.field(), ans.count(), equations)
}

fn graded_matrix(l: &LieAlgebraFp, ans: &Ansatz, v: &[u32]) -> MatrixFp {
    let rs = l.root_system();
    let m = l.dim();
    MatrixFp::from_fn(l.field(), m, m, |a, b| ans.pairing(rs, a, b).map_or(0, |u| v[u]))
}

/// An invariant symmetric form of maximal rank, found with the graded ansatz.
pub fn invariant_form(l: &LieAlgebraFp) -> Result<InvariantForm> {
    let rs = l.root_system();
    let rank = l.rank();
    let ans = Ansatz {
        l: rank,
        n_pos: rs.num_positive(),
    };
    let space = graded_solution_space(l);
    if space.is_zero() {
        return Err(Error::NoInvariantForm);
    }
    let f = l.field();
    let (best, exhaustive) = select_max(f, &space, |v| {
        let h = MatrixFp::from_fn(f, rank, rank, |i, j| v[ans.cartan(i, j)]);
        h.rank() + 2 * (0..ans.n_pos).filter(|&k| v[ans.root(k)] != 0).count()
    });
    Ok(InvariantForm::from_matrix(graded_matrix(l, &ans, &best), space.dim(), exhaustive))
}

/// Dimension of the full space of invariant symmetric forms and the maximal
/// rank found in it, without any grading assumption. Cost grows like `m^4`,
/// so this is meant for small algebras.
pub fn dense_solution_space(l: &LieAlgebraFp) -> (usize, usize) {
    let m = l.dim();
    let n = m * (m + 1) / 2;
    let sym = |a: usize, b: usize| {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        a * m - a * (a + 1) / 2 + b
    };
    let table = l.structure().table(l.flavor());
    let equations = (0..m).flat_map(move |x| {
        (0..m).flat_map(move |y| {
            (0..m).map(move |z| {
                let mut row = Vec::new();
                for &(c, v) in table.get(x, y) {
                    accumulate(&mut row, sym(c as usize, z), v);
                }
                for &(c, v) in table.get(y, z) {
                    accumulate(&mut row, sym(x, c as usize), -v);
                }
                row
            })
        })
    });
    let space = solve(l.field(), n, equations);
    let f = l.field();
    let (best, _) = select_max(f, &space, |v| MatrixFp::from_fn(f, m, m, |a, b| v[sym(a, b)]).rank());
    let rank = MatrixFp::from_fn(f, m, m, |a, b| best[sym(a, b)]).rank();
    (space.dim(), if space.is_zero() { 0 } else { rank })
}

type IntMatrix = Vec<Vec<i64>>;

fn commutator(x: &IntMatrix, y: &IntMatrix) -> IntMatrix {
    let n = x.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let (a, b) = (x[i][k], y[i][k]);
            if a == 0 && b == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a * y[k][j] - b * x[k][j];
            }
        }
    }
    out
}

fn transpose(x: &IntMatrix) -> IntMatrix {
    let n = x.len();
    (0..n).map(|i| (0..n).map(|j| x[j][i]).collect()).collect()
}

/// The standard `2l`-dimensional representation of the simply connected
/// algebra of type `D_l`, over the integers, one matrix per basis element.
pub fn so2l_representation(cs: &ChevalleyStructure) -> Result<Vec<IntMatrix>> {
    let rs = cs.root_system();
    if rs.family() != Family::D {
        return Err(Error::Precondition {
            check: "so2l_representation",
            requirement: "a root system of type D".into(),
        });
    }
    let l = rs.rank();
    let n = 2 * l;
    let unit = |i: usize, j: usize| {
        let mut e = vec![vec![0i64; n]; n];
        e[i][j] = 1;
        e
    };
    let sub = |a: IntMatrix, b: IntMatrix| -> IntMatrix {
        a.iter().zip(&b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
    };
    let mut rho: Vec<Option<IntMatrix>> = vec![None; cs.dim()];
    let np = rs.num_positive();
    for k in 0..l {
        let e = if k + 1 < l {
            sub(unit(k, k + 1), unit(l + k + 1, l + k))
        } else {
            sub(unit(l - 2, 2 * l - 1), unit(l - 1, 2 * l - 2))
        };
        rho[cs.root_basis(rs.simple(k))] = Some(e.clone());
        rho[cs.root_basis(rs.negative(rs.simple(k)))] = Some(transpose(&e));
    }
    for xi in l..np {
        let (i, beta) = (0..l)
            .find_map(|i| {
                let mut v = rs.root(xi).to_vec();
                v[i] -= 1;
                rs.index_of(&v).map(|b| (i, b))
            })
            .expect("non-simple positive roots decompose");
        let a = rs.simple(i);
        let nab = cs.n(a, beta);
        let c = commutator(rho[cs.root_basis(a)].as_ref().unwrap(), rho[cs.root_basis(beta)].as_ref().unwrap());
        if c.iter().flatten().any(|x| x % nab != 0) {
            return Err(Error::RepresentationFailure(cs.root_basis(a), cs.root_basis(beta)));
        }
        let e: IntMatrix = c.iter().map(|r| r.iter().map(|x| x / nab).collect()).collect();
        rho[cs.root_basis(rs.negative(xi))] = Some(transpose(&e));
        rho[cs.root_basis(xi)] = Some(e);
    }
    for i in 0..l {
        let k = rs.simple(i);
        let h = commutator(
            rho[cs.root_basis(k)].as_ref().unwrap(),
            rho[cs.root_basis(rs.negative(k))].as_ref().unwrap(),
        );
        rho[i] = Some(h);
    }
    let rho: Vec<IntMatrix> = rho.into_iter().map(|r| r.expect("every basis element assigned")).collect();
    let table = cs.table(Flavor::SimplyConnected);
    for a in 0..cs.dim() {
        for b in 0..cs.dim() {
            let mut expected = vec![vec![0i64; n]; n];
            for &(c, v) in table.get(a, b) {
                for (er, rr) in expected.iter_mut().zip(&rho[c as usize]) {
                    for (x, y) in er.iter_mut().zip(rr) {
                        *x += v * y;
                    }
                }
            }
            if commutator(&rho[a], &rho[b]) != expected {
                return Err(Error::RepresentationFailure(a, b));
            }
        }
    }
    Ok(rho)
}

/// `Tr(A_x A_y + B_x^L C_y^U + C_x^L B_y^U)` for `ρ = [[A, B], [C, -Aᵗ]]`.
fn so_pairing(l: usize, x: &IntMatrix, y: &IntMatrix) -> i64 {
    let mut t = 0;
    for i in 0..l {
        for j in 0..l {
            t += x[i][j] * y[j][i];
        }
    }
    // B^L C^U: B entries (i, j) with i > j against C entries (j, i).
    for i in 0..l {
        for j in 0..i {
            t += x[i][l + j] * y[l + j][i];
            t += x[l + i][j] * y[j][l + i];
        }
    }
    t
}

/// The explicit characteristic-2 form on `D_l` pulled back through the
/// standard representation, on an algebra instantiated at `p = 2`.
pub fn dl_char2_form_on(g: &LieAlgebraFp) -> Result<InvariantForm> {
    let rs = g.root_system();
    if rs.family() != Family::D || g.p() != 2 || g.flavor() != Flavor::SimplyConnected {
        return Err(Error::Precondition {
            check: "dl_char2_form",
            requirement: "the simply connected algebra of type D_l over F_2".into(),
        });
    }
    let l = rs.rank();
    let rho = so2l_representation(g.structure())?;
    let m = g.dim();
    let f = g.field();
    let matrix = MatrixFp::from_fn(f, m, m, |a, b| f.reduce_i64(so_pairing(l, &rho[a], &rho[b])));
    Ok(InvariantForm::from_matrix(matrix, 1, true))
}

/// The explicit characteristic-2 form on `D_l`.
pub fn dl_char2_form(l: usize) -> Result<InvariantForm> {
    let spec = RootSystemSpec::new(Family::D, l)?;
    let cs = Arc::new(ChevalleyStructure::new(RootSystem::new(spec))?);
    let g = LieAlgebraFp::instantiate(cs, 2, Flavor::SimplyConnected)?;
    dl_char2_form_on(&g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(f: Family, l: usize, p: u32) -> LieAlgebraFp {
        let cs = Arc::new(ChevalleyStructure::new(RootSystem::new(RootSystemSpec::new(f, l).unwrap())).unwrap());
        LieAlgebraFp::instantiate(cs, p, Flavor::SimplyConnected).unwrap()
    }

    #[test]
    fn nullities_of_small_types() {
        for (f, l, p, r) in [(Family::A, 2, 5, 0), (Family::A, 2, 3, 1), (Family::A, 4, 5, 1), (Family::G, 2, 2, 0), (Family::D, 4, 2, 2)] {
            let g = alg(f, l, p);
            let form = invariant_form(&g).unwrap();
            assert_eq!(form.nullity(), r, "{f}{l} p={p}");
            assert!(form.is_symmetric());
            form.check_associativity(&g).unwrap();
        }
    }

    #[test]
    fn kernel_is_center_for_tolerable_primes() {
        for (f, l, p) in [(Family::A, 3, 2), (Family::C, 3, 3), (Family::D, 5, 2), (Family::B, 3, 3)] {
            let g = alg(f, l, p);
            assert_eq!(invariant_form(&g).unwrap().kernel(), &g.center(), "{f}{l} p={p}");
        }
    }

    #[test]
    fn dense_solver_agrees_on_a2() {
        for p in [2, 3, 5] {
            let g = alg(Family::A, 2, p);
            let graded = invariant_form(&g).unwrap();
            let (dim, rank) = dense_solution_space(&g);
            assert_eq!(dim, graded.solution_dim(), "p={p}");
            assert_eq!(rank, graded.rank(), "p={p}");
        }
    }

    #[test]
    fn explicit_d4_form() {
        let form = dl_char2_form(4).unwrap();
        assert_eq!(form.nullity(), 2);
        let g = alg(Family::D, 4, 2);
        form.check_associativity(&g).unwrap();
        assert!(dl_char2_form_on(&alg(Family::D, 4, 3)).is_err());
    }
}
