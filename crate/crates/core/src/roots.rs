//! Root systems of the simple types in Bourbaki numbering.
//!
//! Roots are integer coordinate vectors in the basis of simple roots. The
//! Cartan matrix is stored with `cartan[i][j] = α_j(h_i) = <α_j, α_i^∨>`, so
//! row `i` lists how the simple coroot `h_i` acts on the simple roots.
//! Squared lengths are scaled so that short roots have `(α, α) = 2`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 3,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::Invalid(alloc::format!("unknown family {other:?}"))),
        }
    }
}

/// A family letter together with an admissible rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::InadmissibleType { family, rank });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Closed-form dual Coxeter number.
    pub fn expected_dual_coxeter(&self) -> i64 {
        let l = self.rank as i64;
        match (self.family, self.rank) {
            (Family::A, _) => l + 1,
            (Family::B, _) => 2 * l - 1,
            (Family::C, _) => l + 1,
            (Family::D, _) => 2 * l - 2,
            (Family::E, 6) => 12,
            (Family::E, 7) => 18,
            (Family::E, _) => 30,
            (Family::F, _) => 9,
            (Family::G, _) => 4,
        }
    }

    /// Dimension of the Lie algebra.
    pub fn expected_dimension(&self) -> usize {
        let l = self.rank;
        match (self.family, self.rank) {
            (Family::A, _) => l * (l + 2),
            (Family::B, _) | (Family::C, _) => l * (2 * l + 1),
            (Family::D, _) => l * (2 * l - 1),
            (Family::E, 6) => 78,
            (Family::E, 7) => 133,
            (Family::E, _) => 248,
            (Family::F, _) => 52,
            (Family::G, _) => 14,
        }
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots, short roots of norm 2.
    fn gram(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut g = vec![vec![0i64; l]; l];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                for i in 0..l.saturating_sub(1) {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..l - 1 {
                    g[i][i] = 4;
                    link(&mut g, i, i + 1, -2);
                }
                g[l - 1][l - 1] = 2;
            }
            Family::C => {
                for i in 0..l - 1 {
                    g[i][i] = 2;
                }
                for i in 0..l - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                g[l - 1][l - 1] = 4;
                link(&mut g, l - 2, l - 1, -2);
            }
            Family::D => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                for i in 0..l - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, l - 3, l - 1, -1);
            }
            Family::E => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..l - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LengthClass {
    Long,
    Short,
}

/// Characteristic classes of a prime relative to a root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimeClass {
    VeryGood,
    GoodNotVeryGood,
    TolerableNotGood,
    Intolerable,
}

impl PrimeClass {
    pub fn is_tolerable(self) -> bool {
        self != PrimeClass::Intolerable
    }

    pub fn is_good(self) -> bool {
        matches!(self, PrimeClass::VeryGood | PrimeClass::GoodNotVeryGood)
    }

    pub fn is_very_good(self) -> bool {
        self == PrimeClass::VeryGood
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PrimeClass::VeryGood => "very_good",
            PrimeClass::GoodNotVeryGood => "good_not_very_good",
            PrimeClass::TolerableNotGood => "tolerable_not_good",
            PrimeClass::Intolerable => "intolerable",
        }
    }
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PrimeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "very_good" => Ok(PrimeClass::VeryGood),
            "good_not_very_good" => Ok(PrimeClass::GoodNotVeryGood),
            "tolerable_not_good" => Ok(PrimeClass::TolerableNotGood),
            "intolerable" => Ok(PrimeClass::Intolerable),
            other => Err(Error::Invalid(alloc::format!("unknown prime class {other:?}"))),
        }
    }
}

/// A root system with a fixed total order on its roots.
///
/// Root indices `0..n` are the positive roots sorted by height and then by
/// descending coefficient vector (so `0..l` are the simple roots in Bourbaki
/// order); index `n + k` is the negative of root `k`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    norms: Vec<i64>,
    lookup: BTreeMap<Vec<i64>, usize>,
    n_pos: usize,
    highest: usize,
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Self {
        let l = spec.rank();
        let gram = spec.gram();
        let cartan: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        // Grow positive roots height by height through simple root strings.
        let mut positive: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                let mut v = vec![0; l];
                v[i] = 1;
                v
            })
            .collect();
        let mut known: BTreeMap<Vec<i64>, ()> = positive.iter().map(|r| (r.clone(), ())).collect();
        let mut layer = positive.clone();
        while !layer.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                for i in 0..l {
                    let mut down = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if known.contains_key(&probe) {
                            down += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..l).map(|j| beta[j] * cartan[i][j]).sum();
                    if down - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains_key(&up) {
                            known.insert(up.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            positive.extend(next.iter().cloned());
            layer = next;
        }
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let lookup = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let norms = roots
            .iter()
            .map(|r| {
                let mut s = 0;
                for i in 0..l {
                    for j in 0..l {
                        s += r[i] * gram[i][j] * r[j];
                    }
                }
                s
            })
            .collect();
        Self {
            spec,
            gram,
            cartan,
            roots,
            norms,
            lookup,
            n_pos,
            highest: n_pos - 1,
        }
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }
    pub fn family(&self) -> Family {
        self.spec.family()
    }
    pub fn rank(&self) -> usize {
        self.spec.rank()
    }
    pub fn num_positive(&self) -> usize {
        self.n_pos
    }
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }
    /// Dimension `m = l + |Φ|` of the corresponding Lie algebra.
    pub fn dim(&self) -> usize {
        self.rank() + self.roots.len()
    }
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }
    pub fn root(&self, k: usize) -> &[i64] {
        &self.roots[k]
    }
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }
    pub fn is_positive(&self, k: usize) -> bool {
        k < self.n_pos
    }
    pub fn negative(&self, k: usize) -> usize {
        if k < self.n_pos {
            k + self.n_pos
        } else {
            k - self.n_pos
        }
    }
    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }
    pub fn simple(&self, i: usize) -> usize {
        i
    }

    /// Index of `root(a) + root(b)` if that is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&s)
    }

    pub fn height(&self, k: usize) -> i64 {
        self.roots[k].iter().sum()
    }

    /// `(α, α)` with short roots normalised to 2.
    pub fn norm(&self, k: usize) -> i64 {
        self.norms[k]
    }

    /// `(α_a, α_b)`.
    pub fn inner(&self, a: usize, b: usize) -> i64 {
        let l = self.rank();
        let (ra, rb) = (&self.roots[a], &self.roots[b]);
        let mut s = 0;
        for i in 0..l {
            for j in 0..l {
                s += ra[i] * self.gram[i][j] * rb[j];
            }
        }
        s
    }

    pub fn length_class(&self, k: usize) -> LengthClass {
        let long = self.norms.iter().copied().max().unwrap_or(2);
        if self.norms[k] == long {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    /// `α_k(h_i)`, the value of root `k` on the simple coroot `h_i`.
    pub fn pairing(&self, k: usize, i: usize) -> i64 {
        self.roots[k].iter().zip(&self.cartan[i]).map(|(c, a)| c * a).sum()
    }

    /// Coefficients of the coroot `h_α` in the simple coroots `h_i`.
    pub fn coroot(&self, k: usize) -> Vec<i64> {
        let nk = self.norms[k];
        self.roots[k]
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let num = c * self.gram[i][i];
                debug_assert_eq!(num % nk, 0);
                num / nk
            })
            .collect()
    }

    /// Largest `t >= 0` with `root(b) - t root(a)` a root.
    pub fn string_down(&self, a: usize, b: usize) -> usize {
        let mut t = 0;
        let mut v: Vec<i64> = self.roots[b].clone();
        loop {
            for (x, y) in v.iter_mut().zip(&self.roots[a]) {
                *x -= y;
            }
            if self.lookup.contains_key(&v) {
                t += 1;
            } else {
                return t;
            }
        }
    }

    pub fn highest_root(&self) -> usize {
        self.highest
    }

    /// Coefficients (marks) of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.roots[self.highest]
    }

    /// Coefficients of the highest root's coroot in the simple coroots.
    pub fn dual_marks(&self) -> Vec<i64> {
        self.coroot(self.highest)
    }

    /// `1 + Σ` dual marks of the highest root.
    pub fn dual_coxeter(&self) -> i64 {
        1 + self.dual_marks().iter().sum::<i64>()
    }

    /// Determinant of the Cartan matrix (fraction-free elimination).
    pub fn cartan_determinant(&self) -> i64 {
        let n = self.rank();
        let mut a: Vec<Vec<i128>> = self.cartan.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                    return 0;
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]) as i64
    }

    /// Classifies the characteristic `p`.
    ///
    /// `p` is intolerable when the root system has two root lengths whose
    /// squared ratio is `p`; good when `p` divides no mark of the highest
    /// root; very good when moreover `p` does not divide the Cartan
    /// determinant (the algebra is then simple).
    pub fn classify_prime(&self, p: u32) -> PrimeClass {
        let p = p as i64;
        let long = self.norms.iter().copied().max().unwrap_or(2);
        let short = self.norms.iter().copied().min().unwrap_or(2);
        if long != short && long / short == p {
            return PrimeClass::Intolerable;
        }
        if self.marks().iter().any(|&c| c % p == 0) {
            return PrimeClass::TolerableNotGood;
        }
        if self.cartan_determinant() % p == 0 {
            PrimeClass::GoodNotVeryGood
        } else {
            PrimeClass::VeryGood
        }
    }
}

/// Builds the root system of an admissible type.
pub fn build_root_system(spec: RootSystemSpec) -> RootSystem {
    RootSystem::new(spec)
}
