//! Exact-arithmetic toolkit for Chevalley Lie algebras over the integers.
//!
//! The crate constructs the split simple Lie algebras in their Chevalley
//! bases, reduces them modulo primes, and classifies properties of nilpotent
//! orbit representatives: centralizer and derived-subalgebra dimensions,
//! reachability, the codimension `c(g_e)`, the Panyushev generation property,
//! Jordan block structure of the adjoint action, and bounds on the primes at
//! which any of these can differ from characteristic zero. A companion layer
//! handles sheet and induction arithmetic for the curated catalogs shipped
//! under `data/`.
//!
//! Entry points:
//! - [`rootsys::build_root_system`] / [`chevalley::build_algebra`] for the algebras,
//! - [`catalog::load_catalog`] for orbit catalogs,
//! - [`classify`] for per-orbit, per-prime reports,
//! - [`sheets`] for induction and sheet-census arithmetic,
//! - `examples/` for one runnable example per capability.

pub mod catalog;
pub mod chevalley;
pub mod classify;
pub mod construct;
pub mod exactla;
pub mod report;
pub mod rootsys;
pub mod sheets;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("unknown or unsupported type label: {0}")]
    UnknownType(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix is not nilpotent within the stated bound")]
    NotNilpotent,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("catalog record {label:?}: {msg}")]
    Record { label: String, msg: String },
    #[error("unknown orbit label: {0}")]
    UnknownOrbit(String),
    #[error("orbit {label:?} is not defined in characteristic {p}")]
    OrbitUndefined { label: String, p: u64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
