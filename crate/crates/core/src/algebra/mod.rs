//! Finite Γ-semigroups as operation tables, homomorphisms between them, and
//! α-regularity classification.

pub mod families;
mod hom;
mod regularity;
mod table;


use thiserror::Error;

pub use hom::{GammaHomomorphism, HomViolation};
pub use regularity::{ElementRegularity, RegularityReport};
pub use table::{AssociativityViolation, Elem, Gam, GammaSemigroup, RawEntry, RawTable};

pub(crate) use table::is_valid_token;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("missing table entry {a} {gamma} {b}")]
    MissingEntry { a: String, gamma: String, b: String },
    #[error("table entry {a} {gamma} {b} defined twice with different results")]
    DuplicateEntry { a: String, gamma: String, b: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("duplicate {kind} identifier `{name}`")]
    DuplicateIdentifier { kind: &'static str, name: String },
    #[error("invalid identifier `{0}`")]
    InvalidIdentifier(String),
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("gamma set must be nonempty")]
    EmptyGammaSet,
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("relabelling must keep the carrier and gamma sizes")]
    RelabelSize,
    #[error("{what} map of `{map}` is not total")]
    MapNotTotal { map: String, what: &'static str },
    #[error("cannot compose `{first}` with `{second}`: target and source differ")]
    NotComposable { first: String, second: String },
    #[error("not associative at {0}")]
    NotAssociative(AssociativityViolation),
    #[error("not a homomorphism at {0}")]
    NotAHomomorphism(HomViolation),
}
