//! Reference values of the headline invariants, one row per type and
//! characteristic condition, with entries given as functions of the rank.

use alloc::vec::Vec;

use crate::roots::{Family, RootSystemSpec};
use crate::Rational;

/// Condition on the characteristic under which a row applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeCondition {
    /// `gcd(p, l + 1) = 1`.
    CoprimeToRankPlusOne,
    /// `p | l + 1`.
    DividesRankPlusOne,
    Not(u32),
    Is(u32),
    Above(u32),
}

impl PrimeCondition {
    pub fn holds(self, l: usize, p: u32) -> bool {
        match self {
            PrimeCondition::CoprimeToRankPlusOne => (l as u32 + 1) % p != 0,
            PrimeCondition::DividesRankPlusOne => (l as u32 + 1) % p == 0,
            PrimeCondition::Not(q) => p != q,
            PrimeCondition::Is(q) => p == q,
            PrimeCondition::Above(q) => p > q,
        }
    }

    pub fn describe(self) -> alloc::string::String {
        match self {
            PrimeCondition::CoprimeToRankPlusOne => "(p,l+1)=1".into(),
            PrimeCondition::DividesRankPlusOne => "p|(l+1)".into(),
            PrimeCondition::Not(q) => alloc::format!("p!={q}"),
            PrimeCondition::Is(q) => alloc::format!("p={q}"),
            PrimeCondition::Above(q) => alloc::format!("p>{q}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// One line of the reference table.
#[derive(Clone, Copy, Debug)]
pub struct GoldenTemplate {
    pub family: Family,
    pub parity: Option<Parity>,
    pub prime: PrimeCondition,
    pub r: fn(i64) -> i64,
    pub h_dual: fn(i64) -> i64,
    pub v: fn(i64) -> Rational,
    pub column6: fn(i64) -> i64,
    /// 1-based index of the witness coweight `y_j`.
    pub witness: usize,
    pub witness_dim: fn(i64) -> i64,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `(1/4)(1 + a/b)`.
fn quarter(a: i64, b: i64) -> Rational {
    q(1, 4) * (q(1, 1) + q(a, b))
}

pub static GOLDEN_TABLE: &[GoldenTemplate] = &[
    GoldenTemplate {
        family: Family::A,
        parity: None,
        prime: PrimeCondition::CoprimeToRankPlusOne,
        r: |_| 0,
        h_dual: |l| l + 1,
        v: |_| q(1, 2),
        column6: |l| l * l,
        witness: 1,
        witness_dim: |l| l * l,
    },
    GoldenTemplate {
        family: Family::A,
        parity: None,
        prime: PrimeCondition::DividesRankPlusOne,
        r: |_| 1,
        h_dual: |l| l + 1,
        v: |l| q(l, 2 * l - 1),
        column6: |l| l * l,
        witness: 1,
        witness_dim: |l| l * l,
    },
    GoldenTemplate {
        family: Family::B,
        parity: None,
        prime: PrimeCondition::Not(2),
        r: |_| 0,
        h_dual: |l| 2 * l - 1,
        v: |l| quarter(1, l - 1),
        column6: |l| 2 * l * l - 3 * l + 4,
        witness: 1,
        witness_dim: |l| 2 * l * l - 3 * l + 2,
    },
    GoldenTemplate {
        family: Family::C,
        parity: None,
        prime: PrimeCondition::Not(2),
        r: |_| 0,
        h_dual: |l| l + 1,
        v: |_| q(1, 2),
        column6: |l| 2 * l * l - l,
        witness: 1,
        witness_dim: |l| 2 * l * l - 3 * l + 2,
    },
    GoldenTemplate {
        family: Family::D,
        parity: None,
        prime: PrimeCondition::Not(2),
        r: |_| 0,
        h_dual: |l| 2 * l - 2,
        v: |l| quarter(3, 2 * l - 3),
        column6: |l| 2 * l * l - 5 * l + 6,
        witness: 1,
        witness_dim: |l| 2 * l * l - 5 * l + 4,
    },
    GoldenTemplate {
        family: Family::D,
        parity: Some(Parity::Even),
        prime: PrimeCondition::Is(2),
        r: |_| 2,
        h_dual: |l| 2 * l - 2,
        v: |l| quarter(2, l - 2),
        column6: |l| 2 * l * l - 5 * l + 6,
        witness: 1,
        witness_dim: |l| 2 * l * l - 5 * l + 4,
    },
    GoldenTemplate {
        family: Family::D,
        parity: Some(Parity::Odd),
        prime: PrimeCondition::Is(2),
        r: |_| 1,
        h_dual: |l| 2 * l - 2,
        v: |l| quarter(7, 4 * l - 7),
        column6: |l| 2 * l * l - 5 * l + 6,
        witness: 1,
        witness_dim: |l| 2 * l * l - 5 * l + 4,
    },
    GoldenTemplate {
        family: Family::G,
        parity: None,
        prime: PrimeCondition::Above(3),
        r: |_| 0,
        h_dual: |_| 4,
        v: |_| q(1, 3),
        column6: |_| 8,
        witness: 1,
        witness_dim: |_| 4,
    },
    GoldenTemplate {
        family: Family::G,
        parity: None,
        prime: PrimeCondition::Is(2),
        r: |_| 0,
        h_dual: |_| 4,
        v: |_| q(1, 3),
        column6: |_| 8,
        witness: 1,
        witness_dim: |_| 6,
    },
    GoldenTemplate {
        family: Family::F,
        parity: None,
        prime: PrimeCondition::Not(2),
        r: |_| 0,
        h_dual: |_| 9,
        v: |_| q(1, 4),
        column6: |_| 36,
        witness: 1,
        witness_dim: |_| 22,
    },
    GoldenTemplate {
        family: Family::E,
        parity: None,
        prime: PrimeCondition::Not(3),
        r: |_| 0,
        h_dual: |_| 12,
        v: |_| q(3, 11),
        column6: |_| 56,
        witness: 1,
        witness_dim: |_| 46,
    },
    GoldenTemplate {
        family: Family::E,
        parity: None,
        prime: PrimeCondition::Is(3),
        r: |_| 1,
        h_dual: |_| 12,
        v: |_| q(2, 7),
        column6: |_| 56,
        witness: 1,
        witness_dim: |_| 46,
    },
    GoldenTemplate {
        family: Family::E,
        parity: None,
        prime: PrimeCondition::Not(2),
        r: |_| 0,
        h_dual: |_| 18,
        v: |_| q(7, 34),
        column6: |_| 99,
        witness: 7,
        witness_dim: |_| 79,
    },
    GoldenTemplate {
        family: Family::E,
        parity: None,
        prime: PrimeCondition::Is(2),
        r: |_| 1,
        h_dual: |_| 18,
        v: |_| q(7, 33),
        column6: |_| 99,
        witness: 7,
        witness_dim: |_| 79,
    },
    GoldenTemplate {
        family: Family::E,
        parity: None,
        prime: PrimeCondition::Not(2),
        r: |_| 0,
        h_dual: |_| 30,
        v: |_| q(4, 29),
        column6: |_| 190,
        witness: 8,
        witness_dim: |_| 134,
    },
    GoldenTemplate {
        family: Family::E,
        parity: None,
        prime: PrimeCondition::Is(2),
        r: |_| 0,
        h_dual: |_| 30,
        v: |_| q(4, 29),
        column6: |_| 190,
        witness: 3,
        witness_dim: |_| 136,
    },
];

/// Which exceptional rank a template of family E describes, by its
/// dual Coxeter number.
fn e_rank(h_dual: i64) -> usize {
    match h_dual {
        12 => 6,
        18 => 7,
        _ => 8,
    }
}

/// A reference row instantiated at a rank and prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub family: Family,
    pub rank: usize,
    pub p: u32,
    pub condition: alloc::string::String,
    pub r: i64,
    pub h_dual: i64,
    pub v: Rational,
    pub column6: i64,
    pub witness: usize,
    pub witness_dim: i64,
}

impl GoldenTemplate {
    pub fn applies(&self, family: Family, l: usize, p: u32) -> bool {
        if family != self.family || !family.admits_rank(l) {
            return false;
        }
        if family == Family::E && e_rank((self.h_dual)(l as i64)) != l {
            return false;
        }
        let parity_ok = match self.parity {
            None => true,
            Some(Parity::Even) => l % 2 == 0,
            Some(Parity::Odd) => l % 2 == 1,
        };
        parity_ok && self.prime.holds(l, p)
    }

    pub fn instantiate(&self, l: usize, p: u32) -> GoldenRow {
        let li = l as i64;
        GoldenRow {
            family: self.family,
            rank: l,
            p,
            condition: self.prime.describe(),
            r: (self.r)(li),
            h_dual: (self.h_dual)(li),
            v: (self.v)(li),
            column6: (self.column6)(li),
            witness: self.witness,
            witness_dim: (self.witness_dim)(li),
        }
    }
}

/// The applicable reference row, if any (none for intolerable primes and
/// rank one).
pub fn golden_row(family: Family, l: usize, p: u32) -> Option<GoldenRow> {
    if family == Family::A && l < 2 {
        return None;
    }
    GOLDEN_TABLE.iter().find(|t| t.applies(family, l, p)).map(|t| t.instantiate(l, p))
}

/// The primes the table is reproduced at.
pub const TABLE_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// Every type of rank `2..=max_rank` the table covers, in table order:
/// `A_l (l >= 2)`, `B_l (l >= 3)`, `C_l (l >= 2)`, `D_l (l >= 4)`, then the
/// exceptional types.
pub fn table_types(max_rank: usize) -> Vec<RootSystemSpec> {
    let mut out = Vec::new();
    for (family, lo) in [(Family::A, 2), (Family::B, 3), (Family::C, 2), (Family::D, 4)] {
        for l in lo..=max_rank {
            out.extend(RootSystemSpec::new(family, l));
        }
    }
    for (family, l) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        if l <= max_rank {
            out.extend(RootSystemSpec::new(family, l));
        }
    }
    out
}
