mod common;

use chevalley_core::invariants::compute_report;
use chevalley_core::linalg::{random_subspace, Subspace};
use chevalley_core::roots::Family;
use chevalley_core::verify::{
    check_dual_cox, check_graded_chain, check_lemx, check_my_estimate, check_rank2_strong, check_theorem2,
    commutator_span, rank2_orbit_catalogue, recheck_witness, search_conjecture, trial_rng, DimensionPolicy,
    TrialConfig, Witness, DEFAULT_SEED,
};
use chevalley_core::{Error, Rational};

use common::pair;

#[test]
fn theorem2_holds_on_small_algebras() {
    for (f, l, p) in [(Family::A, 2, 3), (Family::B, 3, 3), (Family::G, 2, 2), (Family::A, 3, 2)] {
        let (pr, rep) = pair(f, l, p);
        for policy in [DimensionPolicy::Boundary, DimensionPolicy::Uniform] {
            let r = check_theorem2(&pr.g, &rep, &TrialConfig::new(DEFAULT_SEED, 2000).with_policy(policy)).unwrap();
            assert!(r.passed(), "{f}{l} p={p}: {:?}", r.violations.first());
            assert_eq!(r.trials_run, 2000);
            assert!(r.min_slack.unwrap() >= Rational::from_integer(0));
        }
    }
}

#[test]
fn strong_bound_in_rank_two() {
    for (f, p) in [(Family::A, 5), (Family::C, 3), (Family::G, 5)] {
        let (pr, rep) = pair(f, 2, p);
        let r = check_rank2_strong(&pr.g, &rep, &TrialConfig::new(1, 2000)).unwrap();
        assert!(r.passed(), "{f}2 p={p}");
    }
}

#[test]
fn strong_bound_and_search_refuse_outside_their_range() {
    for (f, l, p) in [(Family::G, 2, 2), (Family::A, 2, 3), (Family::A, 3, 5)] {
        let (pr, rep) = pair(f, l, p);
        let e = check_rank2_strong(&pr.g, &rep, &TrialConfig::new(1, 10)).unwrap_err();
        assert!(matches!(e, Error::Precondition { check: "rank2_strong", .. }), "{e}");
    }
    for (f, l, p) in [(Family::A, 2, 5), (Family::A, 3, 2), (Family::D, 4, 2)] {
        let (pr, rep) = pair(f, l, p);
        let e = search_conjecture(&pr.g, &rep, &TrialConfig::new(1, 10)).unwrap_err();
        assert!(matches!(e, Error::Precondition { check: "conjecture", .. }), "{e}");
    }
    for (f, l) in [(Family::C, 2), (Family::B, 3)] {
        assert!(matches!(compute_report(f, l, 2), Err(Error::IntolerablePrime { .. })));
    }
}

#[test]
fn estimate_threshold_examples() {
    let (pr, rep) = pair(Family::A, 2, 5);
    assert_eq!(rep.estimate_threshold(), 12);
    for (du, dv) in [(7, 6), (8, 8), (5, 8)] {
        let r = check_my_estimate(&pr.g, &rep, &TrialConfig::new(3, 300).with_dims(du, dv)).unwrap();
        assert!(r.passed());
        assert_eq!(r.min_slack, Some(Rational::from_integer(0)));
    }
    let (pr, rep) = pair(Family::G, 2, 2);
    assert_eq!(rep.estimate_threshold(), 22);
    let r = check_my_estimate(&pr.g, &rep, &TrialConfig::new(3, 300).with_dims(12, 11)).unwrap();
    assert!(r.passed());
    let r = check_my_estimate(&pr.g, &rep, &TrialConfig::new(3, 1000)).unwrap();
    assert!(r.passed());
}

#[test]
fn maximal_centralizers() {
    let (pr, rep) = pair(Family::C, 2, 3);
    let r = check_dual_cox(&pr.g, &rep, 9, 5000).unwrap();
    assert!(r.passed());
    assert_eq!((r.max_observed, r.theta_dim, r.s), (6, 6, 6));
    assert!(r.parity_checked);
    let e6 = compute_report(Family::E, 6, 3).unwrap();
    assert_eq!(e6.s, 56);
    let (pr, _) = pair(Family::A, 2, 7);
    let mut rng = trial_rng(4, 0);
    let mut regular = 0;
    for _ in 0..200 {
        let x = random_subspace(pr.g.field(), 8, 1, &mut rng).unwrap().basis()[0].clone();
        let d = pr.g.centralizer_dim(&x);
        assert!((2..=4).contains(&d));
        regular += (d == 2) as usize;
    }
    assert!(regular > 150);
}

#[test]
fn lemx_examples() {
    let (pr, _) = pair(Family::C, 2, 3);
    let r = check_lemx(&pr.g, &TrialConfig::new(DEFAULT_SEED, 1000)).unwrap();
    assert!(r.passed());
    let g = &pr.g;
    let f = g.field();
    let mut rng = trial_rng(11, 0);
    for _ in 0..50 {
        let u = random_subspace(f, 10, 4, &mut rng).unwrap();
        let v = random_subspace(f, 10, 5, &mut rng).unwrap();
        let x = u.random_element(&mut rng);
        let c = g.centralizer(&x);
        let uv = commutator_span(g, &u, &v).unwrap();
        assert!(uv.dim() + v.intersect(&c).unwrap().dim() >= v.dim());
    }
}

#[test]
fn orbit_catalogue() {
    for (f, primes) in [(Family::A, &[2u32, 5, 7][..]), (Family::C, &[3, 5, 7]), (Family::G, &[5, 7])] {
        for &p in primes {
            let (pr, _) = pair(f, 2, p);
            for e in rank2_orbit_catalogue(&pr.g).unwrap() {
                assert!(e.matches(), "{f}2 p={p} {}: {} vs {}", e.name, e.observed, e.expected);
            }
        }
    }
    let (pr, _) = pair(Family::G, 2, 5);
    let esr = rank2_orbit_catalogue(&pr.g).unwrap().into_iter().find(|e| e.name == "e_sr").unwrap();
    assert_eq!(esr.observed, 4);
    let (pr, _) = pair(Family::G, 2, 2);
    assert!(rank2_orbit_catalogue(&pr.g).is_err());
}

#[test]
fn conjecture_search_and_witness_round_trip() {
    let (pr, rep) = pair(Family::A, 3, 5);
    let r = search_conjecture(&pr.g, &rep, &TrialConfig::new(DEFAULT_SEED, 2000)).unwrap();
    for v in &r.violations {
        let (cu, cv, cuv) = recheck_witness(&pr.g, &v.witness).unwrap();
        assert_eq!((15 - cu, 15 - cv, cuv), (v.dim_u, v.dim_v, v.lhs));
    }
    let full = search_conjecture(&pr.g, &rep, &TrialConfig::new(1, 20).with_dims(15, 15)).unwrap();
    assert!(full.passed());
    assert_eq!(full.min_slack, Some(Rational::from_integer(0)));

    let f = pr.g.field();
    let mut rng = trial_rng(8, 8);
    for _ in 0..20 {
        let u = random_subspace(f, 15, 9, &mut rng).unwrap();
        let v = random_subspace(f, 15, 7, &mut rng).unwrap();
        let w = Witness::new(&u, &v);
        let uv = commutator_span(&pr.g, &u, &v).unwrap();
        assert_eq!(recheck_witness(&pr.g, &w).unwrap(), (6, 8, uv.codim()));
    }
}

#[test]
fn graded_chain_examples() {
    let (pr, rep) = pair(Family::C, 2, 3);
    let m = pr.g.dim();
    let whole = check_graded_chain(&pr.g, &rep, 4, &TrialConfig::new(2, 10).with_dims(m, 0)).unwrap();
    assert!(whole.passed());
    assert_eq!(whole.min_slack, Some(Rational::from_integer(m as i64)));
    let r = check_graded_chain(&pr.g, &rep, 4, &TrialConfig::new(DEFAULT_SEED, 100)).unwrap();
    assert!(r.passed());
    assert_eq!(r.families, 100);

    let (pr, rep) = pair(Family::A, 2, 3);
    let r = check_graded_chain(&pr.g, &rep, 4, &TrialConfig::new(5, 50).with_dims(7, 0)).unwrap();
    assert!(r.passed());
    assert!(check_graded_chain(&pr.g, &rep, 1, &TrialConfig::new(5, 5)).is_err());
}

#[test]
fn reports_are_deterministic() {
    let (pr, rep) = pair(Family::B, 3, 5);
    let cfg = TrialConfig::new(42, 500);
    assert_eq!(check_theorem2(&pr.g, &rep, &cfg).unwrap(), check_theorem2(&pr.g, &rep, &cfg).unwrap());
    assert_eq!(check_dual_cox(&pr.g, &rep, 42, 500).unwrap(), check_dual_cox(&pr.g, &rep, 42, 500).unwrap());
    assert_eq!(
        check_graded_chain(&pr.g, &rep, 3, &cfg).unwrap(),
        check_graded_chain(&pr.g, &rep, 3, &cfg).unwrap()
    );
}

#[test]
fn commutator_span_of_coordinate_spaces() {
    let (pr, _) = pair(Family::A, 2, 5);
    let f = pr.g.field();
    let cartan = Subspace::coordinate(f, 8, &[0, 1]);
    let roots = Subspace::coordinate(f, 8, &[2, 3, 4, 5, 6, 7]);
    assert!(commutator_span(&pr.g, &cartan, &cartan).unwrap().is_zero());
    assert_eq!(commutator_span(&pr.g, &cartan, &roots).unwrap(), roots);
    assert!(commutator_span(&pr.g, &Subspace::full(f, 8), &Subspace::full(f, 8)).unwrap().is_full());
}
