//! Coxeter–Catalan combinatorics with exact integer arithmetic.
//!
//! The crate is organized in layers:
//!
//! * [`qpoly`] — dense polynomials in one variable `q` over `i64`;
//! * [`poset`] — finite posets, antichain generating functions, lattice and
//!   distributivity tests;
//! * [`roots`] — finite root systems (crystallographic and golden-integer),
//!   root posets, and doubled root posets;
//! * [`coxeter`] — the weak order on a finite Coxeter group, encoded by
//!   inversion bitmasks, with joins, meets, and canonical join representations;
//! * [`cambrian`] — sorting words, sortable and bisortable elements, and
//!   lattice-quotient structure for a choice of Coxeter word;
//! * [`arcs`] — arc diagrams of permutations, the alternating-diagram
//!   bijections, and bivincular pattern checks;
//! * [`catalan`] — Catalan, positive-Catalan, and biCatalan counting for all
//!   finite types, with independently computed cross-checks;
//! * [`verify`] — a registry of named identities relating the counts;
//! * [`tables`] — assembly and rendering of the main count tables.

pub mod arcs;
pub mod cambrian;
pub mod catalan;
pub mod coxeter;
pub mod poset;
pub mod qpoly;
pub mod roots;
pub mod suite;
pub mod tables;
pub mod verify;

/// Largest poset the poset engine will materialize.
pub const POSET_CAP: usize = 250;

/// Largest Coxeter group whose weak order will be materialized.
pub const WEAK_ORDER_CAP: usize = 60_000;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The supplied relation generators contain a directed cycle.
    #[error("relation contains a cycle through element {0}")]
    CycleDetected(usize),
    /// A poset exceeded [`POSET_CAP`].
    #[error("poset on {0} elements exceeds the supported maximum {POSET_CAP}")]
    PosetTooLarge(usize),
    /// A Coxeter group exceeded [`WEAK_ORDER_CAP`].
    #[error("weak order on {0} elements exceeds the supported maximum {WEAK_ORDER_CAP}")]
    WeakOrderTooLarge(usize),
    /// The rotation-based compatibility test failed to resolve.
    #[error("compatibility test did not terminate within {0} rotations")]
    NonTermination(usize),
    /// No permutation realizes the requested arc diagram.
    #[error("no permutation realizes the given diagram")]
    NoPreimage,
    /// An arc passes on the same side of two consecutive points.
    #[error("diagram contains a non-alternating arc")]
    NotAlternating,
    /// Endpoint sets that must be equinumerous are not.
    #[error("endpoint sets have sizes {0} and {1}, expected equal")]
    SizeMismatch(usize, usize),
    /// An enumeration request exceeded the configured cap.
    #[error("enumeration over {0} points exceeds the supported maximum {1}")]
    CapExceeded(usize, usize),
    /// A diagram operation requires central symmetry.
    #[error("diagram is not centrally symmetric")]
    NotCentrallySymmetric,
    /// A full one-line notation violates the signed symmetry x_i = -x_{-i}.
    #[error("permutation is not centrally symmetric (signed)")]
    NotSigned,
    /// A computation expected a unique minimal element.
    #[error("expected a unique minimal element, found {0} candidates")]
    NonUniqueMinimum(usize),
    /// A computation expected a unique maximal element.
    #[error("expected a unique maximal element, found {0} candidates")]
    NonUniqueMaximum(usize),
    /// A polynomial table is not available for the requested type.
    #[error("no stored table covers {0}")]
    MissingTable(String),
    /// The operation is only defined for bipartite Coxeter words.
    #[error("operation requires a bipartite Coxeter word")]
    NotBipartite,
    /// An identity name was not found in the registry.
    #[error("unknown identity `{0}`; available: {1}")]
    UnknownIdentity(String, String),
    /// A diagram component is not of finite type.
    #[error("diagram component is not of finite type")]
    UnrecognizedDiagram,
    /// Two independent computations of the same quantity disagree.
    #[error("independent computations disagree: {0}")]
    ConsistencyError(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
