//! Reconstruct a triangle from the lengths of its three internal angle
//! bisectors, compute every classical metric, and certify with independent
//! exact arithmetic why the map from bisectors to area resists ruler-and-
//! compass construction and radical formulas.
//!
//! The crate is organized around six pieces:
//!
//! - [`exact`] — arbitrary-precision rationals, polynomials over Q, and
//!   polynomials over prime fields. Every algebraic claim bottoms out here.
//! - [`triangle`] — forward geometry: Heron/median/altitude area formulas,
//!   angles, bisectors (two independent routes), the symmetric invariants of
//!   the reciprocal bisectors, and the 1843 von Renthe-Fink identities.
//! - [`solver`] — the inverse problem: damped Newton on angle ratios
//!   recovers the unique triangle with three prescribed bisector lengths,
//!   plus the classical isosceles specialization and its cubic.
//! - [`wolff`] — the degree-10 Wolff polynomial satisfied by 1/(2r), the
//!   auxiliary cubics U and V, Cardano's formula, and exact recovery of the
//!   bisectors from their symmetric invariants.
//! - [`galois`] — the certification engine: Eisenstein witnesses, Dedekind
//!   cycle types from factorization degrees mod p, an S_n certificate, the
//!   power-of-two constructibility obstruction, and the radical-solvability
//!   report.
//! - [`report`] — the reproducible verification suite behind the
//!   `reproduce-paper` CLI command.
//!
//! Start with the runnable examples (`cargo run --example forward_metrics`,
//! `--example galois_certificate`, ...) — there is one per capability.

pub mod exact;
pub mod galois;
pub mod report;
pub mod solver;
pub mod triangle;
pub mod wolff;

pub use exact::{PolyModP, PolyQ, Rational};
pub use galois::{
    constructibility_verdict, eisenstein_check, irreducible_over_q, radical_solvability_report,
    symmetric_group_certificate, ConstructibilityVerdict, CycleType, GaloisCertificate,
};
pub use solver::{solve_from_bisectors, SolveResult, SolverConfig};
pub use triangle::{Metrics, SymmetricInvariants, Triangle};
pub use wolff::{cardano_roots, recover_bisectors, wolff_polynomial, WolffData};
