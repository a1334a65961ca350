mod common;

use chevalley_core::group::{check_automorphisms, divided_powers, AdjointGroup};
use chevalley_core::roots::Family;
use chevalley_core::structure::Flavor;

use common::{algebra, small_types, structure};

#[test]
fn root_automorphisms_are_exhaustively_automorphisms() {
    for (f, l) in small_types() {
        for p in [2, 3, 5] {
            let g = algebra(f, l, p);
            let c = check_automorphisms(&g).unwrap_or_else(|e| panic!("{f}{l} p={p}: {e}"));
            let m = g.dim() as u64;
            assert_eq!(c.roots, g.root_system().num_roots());
            assert_eq!(c.bracket_pairs, c.roots as u64 * p as u64 * m * m);
            assert_eq!(c.products, c.roots as u64 * (p * p) as u64);
        }
    }
}

#[test]
fn divided_powers_stop_by_the_fourth() {
    for (f, l) in small_types() {
        let cs = structure(f, l);
        for flavor in [Flavor::SimplyConnected, Flavor::Adjoint] {
            for root in 0..cs.root_system().num_roots() {
                let fam = divided_powers(&cs, flavor, root).unwrap();
                assert!(fam.k_max() <= 3, "{f}{l}");
                if f != Family::G {
                    assert!(fam.k_max() <= 2, "{f}{l}");
                }
            }
        }
    }
}

#[test]
fn parameter_zero_is_the_identity() {
    let g = algebra(Family::B, 3, 5);
    let grp = AdjointGroup::new(&g).unwrap();
    let id = chevalley_core::linalg::MatrixFp::identity(g.field(), g.dim());
    for root in 0..g.root_system().num_roots() {
        assert_eq!(grp.root_automorphism(root, 0).matrix, id);
    }
}
