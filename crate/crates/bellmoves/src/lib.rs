//! Exact enumeration of generalized Bell numbers, shuffle sequences and
//! Young-diagram box moves in Coxeter types A, B and D.
//!
//! The crate computes the same families of integers by several independent
//! algorithms — direct enumeration of (marked) set partitions, dynamic
//! programming over shuffle generators in the groups `Sym_n`, `B_n`, `D_n`,
//! and transfer-matrix powers on move graphs of (double) partitions — and
//! checks the identities, eigenvalue theorems and generating functions that
//! tie them together. All arithmetic is exact: big integers, big rationals,
//! and rational power series at a fixed truncation order.
//!
//! Entry points by topic:
//!
//! * [`structures`] — partitions, set partitions, signed permutations and
//!   exhaustive enumerators for the groups of types A, B and D.
//! * [`shuffles`] — shuffle generator sets, exact sequence counting, and the
//!   explicit bijection between set partitions and shuffle sequences.
//! * [`moves`] — box-move graphs on (double) partitions and path counting.
//! * [`spectra`] — shuffle Markov chains, permutation characters and exact
//!   eigenvalue-multiset verification by power sums.
//! * [`rsk`] — row insertion, shape trajectories and the exhaustive search
//!   showing shapes alone do not biject shuffle sequences with move paths.
//! * [`series`] — count tables, closed forms, generating functions,
//!   Dobinski-type sums, asymptotic trends and OEIS prefix checks.
//! * [`suite`] — the acceptance checks run by `bellmoves suite --all` and by
//!   the `acceptance` integration test.
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `cargo run --release --example three_way_equalities`.

pub mod algebra;
pub mod cli;
pub mod moves;
pub mod rsk;
pub mod series;
pub mod shuffles;
pub mod spectra;
pub mod structures;
pub mod suite;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix dimensions {0}x{1} and {2}x{3} cannot be multiplied")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("{0} entries do not fill a {1}x{2} matrix")]
    BadEntryCount(usize, usize, usize),
    #[error("series truncation orders differ ({0} vs {1})")]
    SeriesOrderMismatch(usize, usize),
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series has constant term zero and cannot be inverted")]
    NotInvertible,
    #[error("{got} moments supplied for a multiset of size {need}")]
    TooFewMoments { got: usize, need: usize },
    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },
    #[error("group order {order} exceeds the configured cap of {cap} elements")]
    GroupTooLarge { order: u64, cap: u64 },
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("permutation lies outside the requested group: {0}")]
    OutsideGroup(String),
    #[error("sizes {0} and {1} differ")]
    SizeMismatch(u64, u64),
    #[error("shuffle-sequence product is not the identity")]
    NotIdentityProduct,
    #[error("set partition has {blocks} blocks but the deck has {n} cards")]
    TooManyBlocks { blocks: usize, n: usize },
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid { kind, reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
