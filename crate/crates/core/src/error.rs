//! Crate-wide error type.

use thiserror::Error;

/// A single violated scenario invariant, with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Which invariant failed, e.g. `action-not-faithful`.
    pub kind: String,
    /// Human-readable witness: the element, root, or value that breaks it.
    pub witness: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind, self.witness)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root-system family or rank: {0}")]
    UnsupportedFamily(String),

    #[error("invalid root-system data: {0}")]
    InvalidRootSystem(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("group table is not a group: {0}")]
    GroupLaw(String),

    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("class functions live on different groups")]
    GroupMismatch,

    #[error("invalid central-extension data: {0}")]
    InvalidExtension(String),

    #[error("scenario rejected: {} violation(s); first: {}", .0.len(), .0[0])]
    ScenarioInvalid(Vec<Violation>),

    #[error("scenario data is inconsistent: {0}")]
    Inconsistent(String),

    #[error("covector is not a restricted root: {0}")]
    NotRestrictedRoot(String),

    #[error("Levi is not in the active family: {0}")]
    NotInFamily(String),

    #[error("Levi subgroup is not subset-standard; double cosets need standard Levis")]
    NotStandardLevi,

    #[error("no base character configured for a nontrivial central character")]
    MissingBaseCharacter,

    #[error("empty isotypic family: no irreducible has the requested central character")]
    EmptyIsotypic,

    #[error("unknown builtin scenario `{0}`")]
    UnknownBuiltin(String),

    #[error("scenario document error: {0}")]
    Document(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
