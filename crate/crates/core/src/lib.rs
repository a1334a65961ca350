#![cfg_attr(not(feature = "std"), no_std)]

//! Chevalley Lie algebras over prime fields.
//!
//! Root systems and integral Chevalley bases ([`roots`], [`structure`]),
//! exact linear algebra over `F_p` ([`linalg`]), the algebras themselves and
//! their invariant forms ([`algebra`], [`form`], [`canonical`]), root-subgroup
//! automorphisms ([`group`]), the invariants `(r, h^∨, s, v)`
//! ([`invariants`], [`golden`]), subgroup-growth exponents ([`bounds`]) and
//! randomized verification of commutator-codimension estimates ([`verify`]).

extern crate alloc;

pub mod algebra;
pub mod bounds;
pub mod canonical;
pub mod error;
pub mod field;
pub mod form;
pub mod golden;
pub mod group;
pub mod invariants;
pub mod linalg;
pub mod roots;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational numbers used in every report.
pub type Rational = num_rational::Ratio<i64>;

/// Renders a rational as `num/den`, always with an explicit denominator.
pub fn render_rational(q: &Rational) -> alloc::string::String {
    alloc::format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` (or a bare integer).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse().ok()?, d.trim().parse().ok()?),
        None => (s.trim().parse().ok()?, 1),
    };
    if d == 0 {
        return None;
    }
    Some(Rational::new(n, d))
}
