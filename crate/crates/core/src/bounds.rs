//! Subgroup-growth exponents as exact rationals.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::invariants::InvariantsReport;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    General,
    /// Rank two with a very good prime.
    Rank2Strong,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::General => "general",
            Regime::Rank2Strong => "rank2_strong",
        }
    }

    pub fn of(rep: &InvariantsReport) -> Self {
        if rep.rank == 2 && rep.prime_class.is_very_good() {
            Regime::Rank2Strong
        } else {
            Regime::General
        }
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Slope `c` in the generator bound `d(H) <= m + c·j`: `3 + 4v`, or `3` in
/// the strong regime.
pub fn generator_slope(rep: &InvariantsReport) -> Rational {
    match Regime::of(rep) {
        Regime::General => int(3) + int(4) * rep.v,
        Regime::Rank2Strong => int(3),
    }
}

/// `d(H) <= m + c·j` where `j = log_p |G(1) : H|`.
pub fn dh_bound(rep: &InvariantsReport, j: i64) -> Result<Rational> {
    if j < 0 {
        return Err(Error::Invalid(alloc::format!("index exponent must be non-negative, got {j}")));
    }
    Ok(int(rep.m as i64) + generator_slope(rep) * int(j))
}

/// Exponent of the prior bound `(7/2)k² + mk`.
pub fn ans_exponent(m: usize, k: i64) -> Rational {
    Rational::new(7, 2) * int(k * k) + int(m as i64 * k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub report: InvariantsReport,
    pub k: i64,
    pub regime: Regime,
    pub exponent: Rational,
    pub quad_coeff: Rational,
    pub lin_coeff: Rational,
    pub ans_exponent: Rational,
    /// `(m, c)` in `d(H) <= m + c·j`.
    pub dh_coefficients: (i64, Rational),
}

/// Quadratic and linear coefficients of the exponent in `k`.
pub fn coefficients(rep: &InvariantsReport) -> (Rational, Rational) {
    let m = int(rep.m as i64);
    let c = generator_slope(rep);
    (c / int(2), m - c / int(2))
}

/// The exponent at a rational `k`.
pub fn exponent_at(rep: &InvariantsReport, k: Rational) -> Rational {
    let (a, b) = coefficients(rep);
    a * k * k + b * k
}

/// `Σ_{i<k} (m + c·i)`, the sum the exponent evaluates.
pub fn exponent_by_summation(rep: &InvariantsReport, k: i64) -> Rational {
    let c = generator_slope(rep);
    (0..k).map(|i| int(rep.m as i64) + c * int(i)).fold(int(0), |a, b| a + b)
}

pub fn theorem1_exponent(rep: &InvariantsReport, k: i64) -> Result<BoundReport> {
    if k <= 0 {
        return Err(Error::NonPositiveK(k));
    }
    let (quad_coeff, lin_coeff) = coefficients(rep);
    let exponent = exponent_at(rep, int(k));
    debug_assert_eq!(exponent, exponent_by_summation(rep, k));
    Ok(BoundReport {
        report: rep.clone(),
        k,
        regime: Regime::of(rep),
        exponent,
        quad_coeff,
        lin_coeff,
        ans_exponent: ans_exponent(rep.m, k),
        dh_coefficients: (rep.m as i64, generator_slope(rep)),
    })
}

/// Exponents of the bound on `a_{p^k}` next to the prior exponent for
/// `s_{p^k}`; the two count different things and only their shapes compare.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImprovementRow {
    pub k: i64,
    pub a_exponent: Rational,
    pub s_exponent_prior: Rational,
    /// `s_exponent_prior - a_exponent`.
    pub difference: Rational,
}

pub fn improvement_table(rep: &InvariantsReport, ks: core::ops::RangeInclusive<i64>) -> Result<Vec<ImprovementRow>> {
    ks.map(|k| {
        let b = theorem1_exponent(rep, k)?;
        Ok(ImprovementRow {
            k,
            a_exponent: b.exponent,
            s_exponent_prior: b.ans_exponent,
            difference: b.ans_exponent - b.exponent,
        })
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::compute_report;
    use crate::roots::Family;

    #[test]
    fn worked_values() {
        let a2 = compute_report(Family::A, 2, 5).unwrap();
        let b = theorem1_exponent(&a2, 3).unwrap();
        assert_eq!(b.regime, Regime::Rank2Strong);
        assert_eq!(b.exponent, int(33));

        let g2 = compute_report(Family::G, 2, 2).unwrap();
        let b = theorem1_exponent(&g2, 2).unwrap();
        assert_eq!(b.regime, Regime::General);
        assert_eq!(b.exponent, Rational::new(97, 3));

        let c2 = compute_report(Family::C, 2, 3).unwrap();
        assert_eq!(dh_bound(&c2, 2).unwrap(), int(16));
        assert_eq!(dh_bound(&c2, 0).unwrap(), int(10));

        assert_eq!(ans_exponent(8, 2), int(30));
        assert!(theorem1_exponent(&a2, 0).is_err());
    }

    #[test]
    fn k_one_collapses_to_m() {
        for (f, l, p) in [(Family::A, 2, 3), (Family::A, 2, 5), (Family::G, 2, 2), (Family::D, 4, 2)] {
            let rep = compute_report(f, l, p).unwrap();
            let b = theorem1_exponent(&rep, 1).unwrap();
            assert_eq!(b.exponent, int(rep.m as i64));
            assert_eq!(b.ans_exponent - b.exponent, Rational::new(7, 2));
        }
    }
}
