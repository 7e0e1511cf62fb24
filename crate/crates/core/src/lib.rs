//! Degree- and connection-number-based topological indices of simple graphs,
//! exhaustive enumeration of chemical trees, and machine checks of the known
//! identities, bounds and extremal characterizations for the modified first
//! Zagreb connection index `ZC1* = Σ d(v)·τ(v)`.
//!
//! Here `τ(v)` is the connection number of `v`: the number of vertices at
//! distance exactly two from it.
//!
//! Index values are exact integers. Only the generic bond-incident
//! connection-number index ([`indices::bic`]) and the bound formulas are
//! generic over a [`Scalar`], so they can be evaluated either in floating
//! point ([`Real`]) or exactly ([`Exact`]).

pub mod code;
pub mod enumerate;
mod error;
pub mod extremal;
pub mod graph;
pub mod indices;
pub mod verify;

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};

pub use code::{canonical_tree_code, TreeCode};
pub use enumerate::{enumerate_trees, prufer_oracle, EnumSpec};
pub use error::{Error, Result};
pub use extremal::{
    brute_force_extremal, classify_max_family, closed_form, construct_family, ClosedForm,
    Direction, ExtremalResult, FamilyKind, MaxClass, Objective, ScaleGuard,
};
pub use graph::{build_graph, ConnectionVector, DegreeVector, Graph};
pub use indices::{index_report, IndexReport, PhiFunction};
pub use verify::{
    run_suite, BoundCheck, CheckFamily, CheckRecord, SuiteConfig, VerificationReport,
};

/// Number type used by the scalar-generic formulas.
///
/// Division must be exact for the bound formulas (they contain a `½`), so
/// use a field such as [`Real`] or [`Exact`], not a machine integer.
pub trait Scalar: Num + Copy + PartialOrd + FromPrimitive + Debug {}

impl<T> Scalar for T where T: Num + Copy + PartialOrd + FromPrimitive + Debug {}

/// Exact rational scalar; used for every bound check.
pub type Exact = num_rational::Rational64;

/// Floating-point scalar.
pub type Real = f64;

/// Converts an integer into any scalar.
pub(crate) fn scalar<S: Scalar>(x: u64) -> S {
    S::from_u64(x).expect("integer not representable in scalar type")
}
