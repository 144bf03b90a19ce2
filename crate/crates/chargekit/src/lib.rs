//! chargekit: exact finitely additive measure theory on the unit interval.
//!
//! The carrier is the interval algebra on Ω = [0, 1) — finite unions of
//! half-open rational intervals — and the charges are finite rational
//! combinations of point masses, interval densities and purely finitely
//! additive left-limit masses. On this class everything the library offers
//! is decidable and exact:
//!
//! * [`algebras`] — canonical sets and Boolean operations;
//! * [`charges`] — evaluation, total variation, lattice meet, simple-function
//!   integration, and decision procedures for absolute continuity and
//!   singularity, each with constructive witnesses;
//! * [`decomposition`] — aggregates of charge families and the generalized
//!   Lebesgue decomposition;
//! * [`domination`] — domination reports with equivalent subfamilies, greedy
//!   exhaustion traces and atom enumeration;
//! * [`completion`] — inner/outer measure of sets outside the algebra, the
//!   unique extension, and a σ-additivity verifier with exact defects;
//! * [`ratlp`] — a dense exact rational simplex with self-verifying
//!   certificates;
//! * [`yan`] — separation certificates on finite sample spaces built on top
//!   of the LP engine.
//!
//! No floating point is used anywhere; all equalities in the test suites are
//! exact rational identities.

pub mod algebras;
pub mod charges;
pub mod completion;
pub mod decomposition;
pub mod domination;
pub mod ratlp;
pub mod rational;
pub mod yan;

pub use algebras::{AlgebraError, BooleanOp, CanonicalSet, Interval};
pub use charges::{
    abs_continuity_witness, abs_continuous, density_transform, integrate_simple, linear_combine,
    meet, singular, split_witness, AcWitness, Charge, ChargeError, Primitive, SimpleFunction,
    Support,
};
pub use completion::{
    completion_sequence, completion_status, member_probe_sets, verify_sigma_additivity,
    CompletionError, CompletionParams, CompletionStatus, DisjointSequence, ExtendedSet, Part,
    SequenceDefect, ShrinkingTail,
};
pub use decomposition::{aggregate, in_l, lebesgue_decompose, ChargeFamily, Decomposition, FamilyError};
pub use domination::{
    dominate, enumerate_atoms, exhaust, in_ah, Atom, AtomKind, DominationError, DominationReport,
    ExhaustionTrace, PivotReport,
};
pub use ratlp::{
    check_certificate, solve_lp, Constraint, LinearProgram, LpError, LpOutcome, Relation, VarBound,
};
pub use rational::{rat, rat_int, rat_pow2_inv, Rational};
pub use yan::{
    check_condition_ii, check_equivalence, find_certificate, sup_scale, verify_certificate,
    Certificate, CertificateOutcome, ConditionII, EquivalenceReport, Mode, SupScale, YanError,
    YanModel,
};
