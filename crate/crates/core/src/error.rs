use thiserror::Error;

/// Errors shared across the crate.
///
/// Axiom *violations* are never errors: the checkers report them as data.
/// Errors signal malformed inputs or operations applied outside their
/// domain of definition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set has {0} elements, at most 16 are supported")]
    UniverseTooLarge(u8),
    #[error("element carries bits outside the ground set")]
    NotInUniverse,
    #[error("positive and negative parts are not disjoint")]
    NotDisjoint,
    #[error("interval endpoints are out of order (lo must be contained in hi)")]
    EndpointsOutOfOrder,
    #[error("operands live in different universes")]
    UniverseMismatch,
    #[error("delta is undefined: right operand is not below the left")]
    DeltaUndefined,
    #[error("bad element name {0} for a ground set of {1} elements")]
    BadElementName(u32, u8),
    #[error("table has wrong shape: expected {expected} entries, got {got}")]
    TableShape { expected: usize, got: usize },
    #[error("table entry out of range at ({row},{col})")]
    EntryOutOfRange { row: usize, col: usize },
    #[error("designated one {0} out of range for size {1}")]
    OneOutOfRange(usize, usize),
    #[error("join table violates {law} at {witness:?}")]
    NotASemilattice {
        law: &'static str,
        witness: (usize, usize, usize),
    },
    #[error("structure has no {0} table")]
    MissingTable(&'static str),
    #[error("delta entry missing for the comparable pair ({0},{1})")]
    DeltaGap(usize, usize),
    #[error("structure is not an MR-algebra: {0}")]
    NotMr(String),
    #[error("quotient congruence fails: {0}")]
    Congruence(String),
    #[error("up-set of {base} is not a Boolean lattice: {reason}")]
    NotBoolean { base: usize, reason: String },
    #[error("isomorphism verification failed: {0}")]
    IsoCheck(String),
    #[error("size {got} outside the supported range 1..={max}")]
    SizeOutOfRange { got: usize, max: usize },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
