mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use chevalley_core::bounds::{exponent_at, exponent_by_summation, theorem1_exponent, Regime};
use chevalley_core::field::PrimeField;
use chevalley_core::invariants::{AlgebraPair, InvariantsReport};
use chevalley_core::linalg::{random_subspace, MatrixFp, Subspace};
use chevalley_core::roots::Family;
use chevalley_core::verify::{commutator_span, decode_rows, encode_rows, subspace_trial, SubspaceCheck, SubspaceContext, TrialConfig};
use chevalley_core::{parse_rational, render_rational, Rational};

const PRIMES: [u32; 5] = [2, 3, 5, 7, 13];

fn matrix() -> impl Strategy<Value = MatrixFp> {
    (prop::sample::select(&PRIMES[..]), 1usize..9, 1usize..9).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c).prop_map(move |xs| {
            let f = PrimeField::new(p).unwrap();
            MatrixFp::from_fn(f, r, c, |i, j| xs[i * c + j])
        })
    })
}

fn c2_over_f3() -> &'static (AlgebraPair, InvariantsReport) {
    static CELL: OnceLock<(AlgebraPair, InvariantsReport)> = OnceLock::new();
    CELL.get_or_init(|| common::pair(Family::C, 2, 3))
}

fn reports() -> &'static Vec<InvariantsReport> {
    static CELL: OnceLock<Vec<InvariantsReport>> = OnceLock::new();
    CELL.get_or_init(|| {
        [(Family::A, 2, 5), (Family::A, 2, 3), (Family::G, 2, 2), (Family::C, 3, 3), (Family::D, 4, 2), (Family::B, 3, 5)]
            .into_iter()
            .map(|(f, l, p)| common::pair(f, l, p).1)
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn row_rank_equals_column_rank(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_plus_nullity_is_the_column_count(m in matrix()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn subspace_dimension_formula(seed in any::<u64>(), p in prop::sample::select(&PRIMES[..]), m in 1usize..10, a in 0usize..10, b in 0usize..10) {
        let f = PrimeField::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_subspace(f, m, a.min(m), &mut rng).unwrap();
        let v = random_subspace(f, m, b.min(m), &mut rng).unwrap();
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&v).unwrap());
        prop_assert!(u.is_subspace_of(&s).unwrap() && v.is_subspace_of(&s).unwrap());
    }

    #[test]
    fn field_inverses(p in prop::sample::select(&PRIMES[..]), a in 1u32..1000) {
        let f = PrimeField::new(p).unwrap();
        let a = f.reduce(a);
        prop_assume!(a != 0);
        prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
    }

    #[test]
    fn commutator_span_is_symmetric_and_monotone(seed in any::<u64>(), a in 0usize..=10, b in 0usize..=10, extra in 0usize..=10) {
        let g = &c2_over_f3().0.g;
        let f = g.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_subspace(f, 10, a, &mut rng).unwrap();
        let v = random_subspace(f, 10, b, &mut rng).unwrap();
        let bigger = u.sum(&random_subspace(f, 10, extra, &mut rng).unwrap()).unwrap();
        let uv = commutator_span(g, &u, &v).unwrap();
        prop_assert_eq!(&uv, &commutator_span(g, &v, &u).unwrap());
        prop_assert!(uv.is_subspace_of(&commutator_span(g, &bigger, &v).unwrap()).unwrap());
    }

    #[test]
    fn witness_rows_round_trip(p in prop::sample::select(&PRIMES[..]), rows in prop::collection::vec(prop::collection::vec(0u32..13, 6), 0..5)) {
        let f = PrimeField::new(p).unwrap();
        let rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        prop_assert_eq!(decode_rows(f, &encode_rows(f, &rows)).unwrap(), rows);
    }

    #[test]
    fn rationals_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let q = Rational::new(n, d);
        prop_assert_eq!(parse_rational(&render_rational(&q)), Some(q));
    }

    #[test]
    fn trials_depend_only_on_seed_and_index(seed in any::<u64>(), index in 0u64..1_000_000) {
        let (pair, rep) = c2_over_f3();
        let ctx = SubspaceContext::new(&pair.g, rep, SubspaceCheck::Theorem2).unwrap();
        let cfg = TrialConfig::new(seed, 1);
        prop_assert_eq!(subspace_trial(&ctx, &cfg, index), subspace_trial(&ctx, &cfg, index));
    }

    #[test]
    fn exponent_properties(which in 0usize..6, k in 1i64..40) {
        let rep = &reports()[which];
        let b = theorem1_exponent(rep, k).unwrap();
        let next = theorem1_exponent(rep, k + 1).unwrap();
        prop_assert!(next.exponent > b.exponent);
        prop_assert_eq!(b.exponent, exponent_by_summation(rep, k));
        prop_assert_eq!(b.exponent, exponent_at(rep, Rational::from_integer(k)));
        let three_halves = Rational::new(3, 2);
        match b.regime {
            Regime::Rank2Strong => prop_assert_eq!(b.quad_coeff, three_halves),
            Regime::General => prop_assert!(b.quad_coeff > three_halves && b.quad_coeff <= Rational::new(17, 6)),
        }
        prop_assert_eq!(theorem1_exponent(rep, 1).unwrap().exponent, Rational::from_integer(rep.m as i64));
    }
}

#[test]
fn nonpositive_k_is_rejected() {
    let rep = &reports()[0];
    assert!(theorem1_exponent(rep, 0).is_err());
    assert!(theorem1_exponent(rep, -3).is_err());
}

#[test]
fn coordinate_subspaces_are_canonical() {
    let f = PrimeField::new(5).unwrap();
    assert_eq!(Subspace::coordinate(f, 6, &[4, 1]), Subspace::coordinate(f, 6, &[1, 4, 1]));
}
