#![allow(dead_code)]

use std::sync::Arc;

use chevalley_core::algebra::LieAlgebraFp;
use chevalley_core::invariants::{compute_report_for, AlgebraPair, InvariantsReport};
use chevalley_core::roots::{Family, RootSystem, RootSystemSpec};
use chevalley_core::structure::{ChevalleyStructure, Flavor};

pub fn structure(f: Family, l: usize) -> Arc<ChevalleyStructure> {
    Arc::new(ChevalleyStructure::new(RootSystem::new(RootSystemSpec::new(f, l).unwrap())).unwrap())
}

pub fn algebra(f: Family, l: usize, p: u32) -> LieAlgebraFp {
    LieAlgebraFp::instantiate(structure(f, l), p, Flavor::SimplyConnected).unwrap()
}

pub fn pair(f: Family, l: usize, p: u32) -> (AlgebraPair, InvariantsReport) {
    let pair = AlgebraPair::new(structure(f, l), p).unwrap();
    let rep = compute_report_for(&pair).unwrap();
    (pair, rep)
}

/// Types of rank at most four.
pub fn small_types() -> Vec<(Family, usize)> {
    use Family::*;
    vec![(A, 2), (A, 3), (A, 4), (B, 3), (B, 4), (C, 2), (C, 3), (C, 4), (D, 4), (F, 4), (G, 2)]
}
