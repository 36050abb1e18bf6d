//! Exact-arithmetic toolkit for the topology of real conic bundles.
//!
//! The crate computes, over the integers and rationals with no floating
//! point on any load-bearing path:
//!
//! * the solid-torus/Klein-bottle surgery calculus on circle bundles and
//!   the resulting 3-manifold types ([`surgery`]),
//! * lens-space arithmetic ([`lens`]),
//! * real representation theory of cyclic groups and the equivariant
//!   conic normal forms ([`reps`]),
//! * rotation-invariant polynomial rings and circle-cover towers
//!   ([`invariant_rings`]),
//! * rank/signature classification of real conics, conic families and
//!   Du Val singularities ([`conics`]),
//! * assembly of fibration descriptors into per-component manifold types
//!   with validity diagnostics ([`assembler`]),
//! * finite torus quotients and their Seifert multiplicities ([`catalog`]).
//!
//! The [`cli`] module is the only I/O-performing component; everything else
//! is pure functions over immutable values and is safe to use concurrently.

pub mod assembler;
pub mod catalog;
pub mod cli;
pub mod conics;
pub mod invariant_rings;
pub mod lens;
pub mod poly;
pub mod reps;
pub mod surgery;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("pair ({0}, {1}) is not coprime")]
    NotCoprime(i64, i64),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("boundary mismatch: surface has {expected} boundary circles, gluings cover {actual}")]
    BoundaryMismatch { expected: u32, actual: u32 },
    #[error("insufficient sampling density: need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: u64, got: u64 },
    #[error("matrix has no finite order up to {0}")]
    NoFiniteOrder(u32),
    #[error("pattern matches no normal form: {0}")]
    UnrecognizedNormalForm(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
