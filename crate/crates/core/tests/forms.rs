mod common;

use std::sync::Arc;

use chevalley_core::algebra::LieAlgebraFp;
use chevalley_core::form::{dense_solution_space, dl_char2_form, dl_char2_form_on, graded_solution_space, invariant_form};
use chevalley_core::golden::{golden_row, table_types, TABLE_PRIMES};
use chevalley_core::roots::{Family, RootSystem};
use chevalley_core::structure::{ChevalleyStructure, Flavor};

use common::algebra;

#[test]
fn forms_are_associative_with_the_reference_nullity() {
    for spec in table_types(8) {
        let rs = RootSystem::new(spec);
        let cs = Arc::new(ChevalleyStructure::new(rs.clone()).unwrap());
        for p in TABLE_PRIMES {
            let Some(row) = golden_row(spec.family(), spec.rank(), p) else {
                continue;
            };
            let g = LieAlgebraFp::instantiate(cs.clone(), p, Flavor::SimplyConnected).unwrap();
            let form = invariant_form(&g).unwrap();
            assert!(form.is_symmetric());
            form.check_associativity(&g).unwrap();
            assert_eq!(form.nullity() as i64, row.r, "{}{} p={p}", spec.family(), spec.rank());
            assert_eq!(form.kernel(), &g.center());
        }
    }
}

#[test]
fn explicit_orthogonal_form_matches_the_generic_solver() {
    for l in 4..=7 {
        let g = algebra(Family::D, l, 2);
        let explicit = dl_char2_form_on(&g).unwrap();
        explicit.check_associativity(&g).unwrap();
        let generic = invariant_form(&g).unwrap();
        assert_eq!(explicit.nullity(), generic.nullity(), "D{l}");
        assert_eq!(explicit.kernel(), generic.kernel(), "D{l}");
        assert_eq!(dl_char2_form(l).unwrap().nullity(), generic.nullity());
    }
}

#[test]
fn graded_ansatz_captures_every_invariant_form() {
    use Family::*;
    for (f, l) in [(A, 2), (A, 3), (A, 4), (C, 2), (C, 3), (G, 2), (B, 3), (D, 4)] {
        for p in [2, 3, 5, 7] {
            let rs = RootSystem::new(chevalley_core::roots::RootSystemSpec::new(f, l).unwrap());
            if !rs.classify_prime(p).is_tolerable() {
                continue;
            }
            let g = algebra(f, l, p);
            let form = invariant_form(&g).unwrap();
            let (dim, max_rank) = dense_solution_space(&g);
            assert_eq!(dim, graded_solution_space(&g).dim(), "{f}{l} p={p}");
            assert_eq!(max_rank, form.rank(), "{f}{l} p={p}");
        }
    }
}
