//! Integral Chevalley bases.
//!
//! Basis order: the `l` Cartan elements first, then `e_α` for the roots in
//! the root system's fixed order (positives, then negatives). Structure
//! constants `N_{α,β}` are fixed by declaring `N = +(p+1)` on every
//! extraspecial pair and propagating through the standard quadratic
//! relations between the constants; the result is checked against the Jacobi
//! identity rather than trusted.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::roots::RootSystem;

/// Which lattice spans the Cartan part of the basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Simple coroots `h_i`: the simply connected algebra `g`.
    SimplyConnected,
    /// Fundamental coweights `y_i`: the adjoint algebra `g♭`.
    Adjoint,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::SimplyConnected => "simply_connected",
            Flavor::Adjoint => "adjoint",
        }
    }
}

/// A sparse bracket table over the integers: `[b_a, b_b] = Σ coef · b_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntTable {
    m: usize,
    offsets: Vec<u32>,
    entries: Vec<(u32, i64)>,
}

impl IntTable {
    fn from_fn(m: usize, mut f: impl FnMut(usize, usize, &mut Vec<(u32, i64)>)) -> Self {
        let mut offsets = Vec::with_capacity(m * m + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        for a in 0..m {
            for b in 0..m {
                f(a, b, &mut entries);
                offsets.push(entries.len() as u32);
            }
        }
        Self { m, offsets, entries }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> &[(u32, i64)] {
        let k = a * self.m + b;
        &self.entries[self.offsets[k] as usize..self.offsets[k + 1] as usize]
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// `[x, b_c]` for a sparse integer vector `x`, accumulated into `out`
    /// (dense, length m). Touched indices are appended to `touched`.
    fn bracket_sparse_basis(&self, x: &[(u32, i64)], c: usize, out: &mut [i64], touched: &mut Vec<u32>) {
        for &(t, coef) in x {
            for &(u, d) in self.get(t as usize, c) {
                if out[u as usize] == 0 {
                    touched.push(u);
                }
                out[u as usize] += coef * d;
            }
        }
    }

    /// Checks `[b_a, b_b] = -[b_b, b_a]` for all pairs.
    pub fn check_antisymmetry(&self) -> Result<()> {
        for a in 0..self.m {
            if !self.get(a, a).is_empty() {
                return Err(Error::AntisymmetryViolation(a, a));
            }
            for b in a + 1..self.m {
                let x = self.get(a, b);
                let y = self.get(b, a);
                let ok = x.len() == y.len() && x.iter().all(|&(c, v)| y.iter().any(|&(d, w)| d == c && w == -v));
                if !ok {
                    return Err(Error::AntisymmetryViolation(a, b));
                }
            }
        }
        Ok(())
    }

    /// Checks the Jacobi identity on every ordered basis triple, over the
    /// integers. Returns the number of triples checked.
    pub fn check_jacobi(&self) -> Result<u64> {
        let m = self.m;
        let mut acc = vec![0i64; m];
        let mut touched: Vec<u32> = Vec::new();
        let mut count = 0u64;
        for x in 0..m {
            for y in 0..m {
                let xy = self.get(x, y);
                for z in 0..m {
                    count += 1;
                    // [[x,y],z] + [[y,z],x] + [[z,x],y]
                    self.bracket_sparse_basis(xy, z, &mut acc, &mut touched);
                    self.bracket_sparse_basis(self.get(y, z), x, &mut acc, &mut touched);
                    self.bracket_sparse_basis(self.get(z, x), y, &mut acc, &mut touched);
                    let mut bad = false;
                    for &u in &touched {
                        if acc[u as usize] != 0 {
                            bad = true;
                        }
                        acc[u as usize] = 0;
                    }
                    touched.clear();
                    if bad {
                        return Err(Error::JacobiViolation(x, y, z));
                    }
                }
            }
        }
        Ok(count)
    }

    /// FNV-1a digest of the table, used to validate cached copies.
    pub fn checksum(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |v: u64| {
            for byte in v.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        eat(self.m as u64);
        for &o in &self.offsets {
            eat(o as u64);
        }
        for &(c, v) in &self.entries {
            eat(c as u64);
            eat(v as u64);
        }
        h
    }
}

/// The integral Chevalley basis of a root system.
#[derive(Clone, Debug)]
pub struct ChevalleyStructure {
    rs: RootSystem,
    /// `N_{α,β}` for root indices `α, β` (all roots), zero when `α+β ∉ Φ`.
    n: Vec<i64>,
    simply_connected: IntTable,
    adjoint: IntTable,
}

impl ChevalleyStructure {
    /// Builds and validates the structure constants (antisymmetry and the
    /// Jacobi identity on all basis triples).
    pub fn new(rs: RootSystem) -> Result<Self> {
        let positive = positive_constants(&rs)?;
        let s = Self::assemble(rs, &positive)?;
        s.simply_connected.check_antisymmetry()?;
        s.simply_connected.check_jacobi()?;
        Ok(s)
    }

    /// Builds without running the Jacobi check; antisymmetry is still
    /// checked. Used when the constants come from a validated cache.
    pub fn from_positive_constants(rs: RootSystem, constants: &[(usize, usize, i64)]) -> Result<Self> {
        let n = rs.num_positive();
        let mut positive = vec![0i64; n * n];
        for &(a, b, v) in constants {
            if a >= n || b >= n {
                return Err(Error::Invalid(alloc::format!("root pair ({a}, {b}) out of range")));
            }
            positive[a * n + b] = v;
        }
        let s = Self::assemble(rs, &positive)?;
        s.simply_connected.check_antisymmetry()?;
        Ok(s)
    }

    fn assemble(rs: RootSystem, positive: &[i64]) -> Result<Self> {
        let total = rs.num_roots();
        let mut n = vec![0i64; total * total];
        for a in 0..total {
            for b in 0..total {
                if rs.sum(a, b).is_some() {
                    n[a * total + b] = n_any(&rs, positive, a, b)?;
                }
            }
        }
        let simply_connected = build_table(&rs, &n, Flavor::SimplyConnected);
        let adjoint = build_table(&rs, &n, Flavor::Adjoint);
        Ok(Self {
            rs,
            n,
            simply_connected,
            adjoint,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.dim()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn table(&self, flavor: Flavor) -> &IntTable {
        match flavor {
            Flavor::SimplyConnected => &self.simply_connected,
            Flavor::Adjoint => &self.adjoint,
        }
    }

    /// `N_{α,β}` (zero when `α + β` is not a root).
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.n[a * self.rs.num_roots() + b]
    }

    /// Basis index of `e_α`.
    #[inline]
    pub fn root_basis(&self, k: usize) -> usize {
        self.rs.rank() + k
    }

    /// Root index of a basis element, `None` for Cartan elements.
    #[inline]
    pub fn basis_root(&self, b: usize) -> Option<usize> {
        b.checked_sub(self.rs.rank())
    }

    /// Constants on pairs of positive roots, the data a cache must store.
    pub fn positive_constants(&self) -> Vec<(usize, usize, i64)> {
        let n = self.rs.num_positive();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let v = self.n(a, b);
                if v != 0 {
                    out.push((a, b, v));
                }
            }
        }
        out
    }

    pub fn checksum(&self) -> u64 {
        self.simply_connected.checksum()
    }
}

/// Looks up `N_{a,b}` for arbitrary roots from the constants on positive
/// pairs, using `N_{-a,-b} = -N_{a,b}` and, for `a + b + c = 0`,
/// `N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)`.
fn n_any(rs: &RootSystem, positive: &[i64], a: usize, b: usize) -> Result<i64> {
    let np = rs.num_positive();
    let pos = |x: usize, y: usize| positive[x * np + y];
    let (pa, pb) = (rs.is_positive(a), rs.is_positive(b));
    if pa && pb {
        return Ok(pos(a, b));
    }
    if !pa && !pb {
        return Ok(-pos(rs.negative(a), rs.negative(b)));
    }
    let s = rs.sum(a, b).ok_or(Error::NonIntegralStructureConstant(a, b))?;
    let c = rs.negative(s);
    let d = |k: usize| rs.norm(k);
    let (num, den) = match (pa, rs.is_positive(c)) {
        // N_{a,b} = d(c) N_{c,a} / d(b) with c, a positive.
        (true, true) => (d(c) * pos(c, a), d(b)),
        // N_{a,b} = d(c) N_{b,c} / d(a) with b, c negative.
        (true, false) => (-d(c) * pos(rs.negative(b), rs.negative(c)), d(a)),
        // N_{a,b} = d(c) N_{b,c} / d(a) with b, c positive.
        (false, true) => (d(c) * pos(b, c), d(a)),
        // N_{a,b} = d(c) N_{c,a} / d(b) with c, a negative.
        (false, false) => (-d(c) * pos(rs.negative(c), rs.negative(a)), d(b)),
    };
    if num % den != 0 {
        return Err(Error::NonIntegralStructureConstant(a, b));
    }
    Ok(num / den)
}

/// Constants `N_{γ,δ}` on positive pairs, indexed `γ * n + δ`.
fn positive_constants(rs: &RootSystem) -> Result<Vec<i64>> {
    let n = rs.num_positive();
    let l = rs.rank();
    let mut table = vec![0i64; n * n];
    for xi in l..n {
        let alpha = (0..l)
            .find(|&i| {
                let mut v = rs.root(xi).to_vec();
                v[i] -= 1;
                rs.index_of(&v).is_some()
            })
            .expect("every non-simple positive root is a simple root plus a positive root");
        let mut v = rs.root(xi).to_vec();
        v[alpha] -= 1;
        let beta = rs.index_of(&v).expect("checked above");
        let n0 = rs.string_down(alpha, beta) as i64 + 1;
        table[alpha * n + beta] = n0;
        table[beta * n + alpha] = -n0;

        let d_xi = rs.norm(xi);
        for gamma in 0..n {
            let Some(delta) = (0..n).find(|&k| rs.sum(gamma, k) == Some(xi)) else {
                continue;
            };
            if gamma >= delta || gamma == alpha {
                continue;
            }
            // Four-root relation on α + β - γ - δ = 0 solved for N_{-γ,-δ}.
            let (ng, nd) = (rs.negative(gamma), rs.negative(delta));
            let mut num = 0i64;
            let mut den = 1i64;
            if let Some(bg) = rs.sum(beta, ng) {
                let t = n_any(rs, &table, beta, ng)? * n_any(rs, &table, alpha, nd)?;
                let dd = rs.norm(bg);
                num = num * dd + t * den;
                den *= dd;
            }
            if let Some(ag) = rs.sum(alpha, ng) {
                let t = n_any(rs, &table, ng, alpha)? * n_any(rs, &table, beta, nd)?;
                let dd = rs.norm(ag);
                num = num * dd + t * den;
                den *= dd;
            }
            // N_{γ,δ} = -N_{-γ,-δ} = d(ξ) (t1 + t2) / N_{α,β}
            let total_num = d_xi * num;
            let total_den = den * n0;
            if total_num % total_den != 0 {
                return Err(Error::NonIntegralStructureConstant(gamma, delta));
            }
            let v = total_num / total_den;
            table[gamma * n + delta] = v;
            table[delta * n + gamma] = -v;
        }
    }
    Ok(table)
}

fn build_table(rs: &RootSystem, n: &[i64], flavor: Flavor) -> IntTable {
    let l = rs.rank();
    let total = rs.num_roots();
    let m = l + total;
    // Cartan image of [e_α, e_-α] in the chosen Cartan basis.
    let cartan_image = |k: usize| -> Vec<i64> {
        let coroot = rs.coroot(k);
        match flavor {
            Flavor::SimplyConnected => coroot,
            Flavor::Adjoint => (0..l)
                .map(|j| (0..l).map(|i| coroot[i] * rs.cartan()[i][j]).sum())
                .collect(),
        }
    };
    // Eigenvalue of root k under the i-th Cartan basis element.
    let weight = |k: usize, i: usize| -> i64 {
        match flavor {
            Flavor::SimplyConnected => rs.pairing(k, i),
            Flavor::Adjoint => rs.root(k)[i],
        }
    };
    IntTable::from_fn(m, |a, b, out| {
        match (a < l, b < l) {
            (true, true) => {}
            (true, false) => {
                let w = weight(b - l, a);
                if w != 0 {
                    out.push((b as u32, w));
                }
            }
            (false, true) => {
                let w = weight(a - l, b);
                if w != 0 {
                    out.push((a as u32, -w));
                }
            }
            (false, false) => {
                let (ra, rb) = (a - l, b - l);
                if rs.negative(ra) == rb {
                    for (i, c) in cartan_image(ra).into_iter().enumerate() {
                        if c != 0 {
                            out.push((i as u32, c));
                        }
                    }
                } else if let Some(s) = rs.sum(ra, rb) {
                    let v = n[ra * total + rb];
                    if v != 0 {
                        out.push(((l + s) as u32, v));
                    }
                }
            }
        }
    })
}

/// Builds and validates the Chevalley structure of a root system.
pub fn build_structure_constants(rs: RootSystem) -> Result<ChevalleyStructure> {
    ChevalleyStructure::new(rs)
}
