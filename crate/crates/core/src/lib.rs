//! Exact computations for locally conformally Kähler (l.c.K.) structures on
//! finite-dimensional real Lie algebras.
//!
//! A Lie algebra is given by rational structure constants. On top of that the
//! crate provides
//!
//! * the Chevalley-Eilenberg complex and its twisted differential
//!   `d_θ ω = dω - θ∧ω`, with exact twisted cohomology ([`cochain`]);
//! * complex structures, the Hermitian metric of an l.c.K. pair, Lee and Reeb
//!   fields, the Levi-Civita connection and the Vaisman test ([`hermitian`]);
//! * the named algebras and structures of the four-dimensional theory
//!   ([`catalog`]);
//! * classification of four-dimensional unimodular algebras, the double-root
//!   lattice obstruction and a grid search for l.c.K. witnesses ([`classify`]);
//! * a text file format and report documents used by the `lck-lab` binary
//!   ([`io`]).
//!
//! All arithmetic is over `Q` with arbitrary precision; there is no floating
//! point anywhere in the library.
//!
//! Sign conventions, fixed crate-wide:
//!
//! * forms evaluate with the determinant convention,
//!   `(e¹∧e²)(e₁, e₂) = 1`, and the wedge product has no factorial factor;
//! * on 1-forms `dσ(u, v) = -σ([u, v])`;
//! * the metric of an l.c.K. pair is `h(u, v) = Ω(u, Jv)`.

pub mod catalog;
pub mod classify;
pub mod cochain;
pub mod hermitian;
pub mod io;
pub mod lie;
pub mod linalg;

pub use catalog::{CatalogEntry, CatalogKey};
pub use classify::{ClassLabel, ClassTag};
pub use cochain::Cochain;
pub use hermitian::{ComplexStructure, LckReport, LckStructure};
pub use lie::{LieAlgebra, StructureConstants};
pub use linalg::{Matrix, Rational, Subspace, Vector};

use lie::JacobiViolation;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("Jacobi identity fails on {} basis triple(s)", .0.len())]
    Jacobi(Vec<JacobiViolation>),
    #[error("duplicate or invalid basis labels: {0}")]
    BadLabels(String),
    #[error("cochain of degree {degree} evaluated on {given} vector(s)")]
    ArityMismatch { degree: usize, given: usize },
    #[error("degree {degree} exceeds the algebra dimension {dim}")]
    DegreeOverflow { degree: usize, dim: usize },
    #[error("expected a cochain of degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("the Lee form is not closed")]
    LeeFormNotClosed,
    #[error("the form is not closed for the twisted differential")]
    NotTwistedClosed,
    #[error("the Lee form is zero")]
    ZeroLeeForm,
    #[error("J squared is not minus the identity")]
    NotComplexStructure,
    #[error("the complex structure is not integrable")]
    NotIntegrable,
    #[error("the 2-form is not J-invariant")]
    NotJInvariant,
    #[error("the 2-form is degenerate")]
    DegenerateOmega,
    #[error("the metric is not positive definite")]
    MetricNotPD,
    #[error("neither Reeb sign gives |θ|²Ω = -θ∧φ + dφ")]
    DecompositionFails,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("expected a {expected}-dimensional algebra, found dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("the algebra has odd dimension {0}")]
    OddDimension(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
