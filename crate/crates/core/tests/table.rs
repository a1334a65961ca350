use std::sync::Arc;

use chevalley_core::golden::{golden_row, table_types, TABLE_PRIMES};
use chevalley_core::invariants::{compute_report, compute_report_for, verify_table_row, AlgebraPair};
use chevalley_core::roots::{Family, RootSystem};
use chevalley_core::structure::ChevalleyStructure;
use chevalley_core::Error;

#[test]
fn reference_table_is_reproduced() {
    let mut rows = 0;
    for spec in table_types(8) {
        let rs = RootSystem::new(spec);
        let cs = Arc::new(ChevalleyStructure::new(rs.clone()).unwrap());
        for p in TABLE_PRIMES {
            if !rs.classify_prime(p).is_tolerable() {
                assert!(golden_row(spec.family(), spec.rank(), p).is_none());
                continue;
            }
            let rep = compute_report_for(&AlgebraPair::new(cs.clone(), p).unwrap()).unwrap();
            let check = verify_table_row(&rep);
            let name = format!("{}{} p={p}", spec.family(), spec.rank());
            assert!(check.is_match(), "{name}: {:?}", check.status);
            assert!(rep.kernel_equals_center, "{name}");
            assert!(rep.column6 >= rep.witness_dim as i64, "{name}");
            let golden = check.golden.unwrap();
            assert_eq!(
                rep.coweight_centralizers[golden.witness - 1],
                rep.witness_dim,
                "{name}: the reference coweight attains the maximum"
            );
            rows += 1;
        }
    }
    assert_eq!(rows, 105);
}

#[test]
fn table_types_cover_the_expected_ranges() {
    let names: Vec<String> = table_types(8).iter().map(|s| format!("{}{}", s.family(), s.rank())).collect();
    assert_eq!(names.len(), 7 + 6 + 7 + 5 + 5);
    assert_eq!(names.first().unwrap(), "A2");
    assert!(names.contains(&"D8".to_string()));
    assert_eq!(table_types(2).len(), 3);
}

#[test]
fn intolerable_configurations_are_refused() {
    for (f, l, p) in [(Family::B, 3, 2), (Family::C, 4, 2), (Family::F, 4, 2), (Family::G, 2, 3)] {
        assert!(matches!(compute_report(f, l, p), Err(Error::IntolerablePrime { .. })), "{f}{l} p={p}");
        assert!(golden_row(f, l, p).is_none());
    }
    assert!(matches!(compute_report(Family::A, 1, 3), Err(Error::RankTooSmall(1)) | Err(Error::InadmissibleType { .. })));
}
