//! Exact symbolic invariants and semi-invariants of parabolic contractions
//! of `gl_n`, `sl_n` and `sp_n`.
//!
//! A parabolic contraction `q = p ⋉ n⁻` abelianizes the opposite nilradical
//! of a parabolic subalgebra. This crate constructs the sums of principal
//! minors `F_m`, their top components `F_m^•` in the `n⁻`-grading, the exact
//! factorization into semi-invariants with weights and independence
//! certificates, the weighted-digraph machinery behind the
//! Kostant–Weierstrass sections, and the classical-type projections,
//! including the `sp_8` presentation relation and the `so_12` probe.
//!
//! Everything is computed over exact rationals; every certificate is a
//! strict polynomial identity. See the `examples/` directory for one
//! runnable walkthrough per capability, and the `parabolica` binary for the
//! certificate-emitting command line.

pub mod budget;
pub mod classical;
pub mod cli;
pub mod contraction;
pub mod invariants;
pub mod pathways;
pub mod poly;

pub use budget::{Budget, BudgetExceeded, DEFAULT_BUDGET};
pub use contraction::{
    compositions, is_symmetric_cpss, parse_descriptor, Flavor, ParabolicContraction, Region,
    WeightVector,
};
pub use poly::{Generator, LinearForm, Monomial, Poly, Rational};
